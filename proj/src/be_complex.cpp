#include "confobs/be_complex.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace confobs {

Simplex Simplex::parse(std::string_view text) {
    std::vector<Perm> levels;
    std::size_t start = 0;
    while (true) {
        const auto bar = text.find('|', start);
        levels.push_back(Perm::parse(text.substr(start, bar == std::string_view::npos ? bar : bar - start)));
        if (bar == std::string_view::npos) break;
        start = bar + 1;
    }
    for (const auto& p : levels)
        if (p.arity() != levels.front().arity()) throw std::invalid_argument("simplex levels differ in arity");
    return Simplex(std::move(levels));
}

bool Simplex::is_degenerate() const {
    for (std::size_t m = 0; m + 1 < levels.size(); ++m)
        if (levels[m] == levels[m + 1]) return true;
    return false;
}

std::string Simplex::to_string() const {
    std::string s;
    for (std::size_t m = 0; m < levels.size(); ++m) {
        if (m) s.push_back('|');
        s += levels[m].to_string();
    }
    return s;
}

int swap_count(const Simplex& s, int i, int j) {
    if (i == j) throw std::invalid_argument("swap_count: labels must differ");
    int n = 0;
    for (std::size_t m = 0; m + 1 < s.levels.size(); ++m)
        if (project_pair(s.levels[m], i, j) != project_pair(s.levels[m + 1], i, j)) ++n;
    return n;
}

bool in_filtration(const Simplex& s, int complexity) {
    const int k = s.arity();
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            if (swap_count(s, i, j) > complexity - 1) return false;
    return true;
}

std::vector<Face> faces(const Simplex& s) {
    if (s.degree() < 1) throw std::invalid_argument("faces: degree must be at least 1");
    std::vector<Face> out;
    for (int m = 0; m <= s.degree(); ++m) {
        std::vector<Perm> lv = s.levels;
        lv.erase(lv.begin() + m);
        Simplex f(std::move(lv));
        if (f.is_degenerate())
            out.push_back({m, std::nullopt});
        else
            out.push_back({m, std::move(f)});
    }
    return out;
}

LevelMap pair_projection(int i, int j) {
    return [i, j](const Perm& p) {
        return project_pair(p, i, j) == PairOrder::Forward ? Perm{1, 2} : Perm{2, 1};
    };
}

LevelMap triple_projection(int a, int b, int c) {
    return [a, b, c](const Perm& p) { return project_triple(p, a, b, c); };
}

std::optional<Simplex> apply_map(const Simplex& s, const LevelMap& f) {
    std::vector<Perm> lv;
    lv.reserve(s.levels.size());
    for (const auto& p : s.levels) lv.push_back(f(p));
    Simplex image(std::move(lv));
    if (image.is_degenerate()) return std::nullopt;
    return image;
}

const ArityTables& ArityTables::get(int k) {
    if (k < 1 || k > kMaxArity) throw std::invalid_argument("arity out of range");
    static std::array<ArityTables, kMaxArity + 1> cache;
    static std::once_flag flags[kMaxArity + 1];
    std::call_once(flags[k], [k] {
        auto& at = cache[static_cast<std::size_t>(k)];
        at.arity = k;
        for (int i = 1; i <= k; ++i)
            for (int j = i + 1; j <= k; ++j) at.pair_labels.emplace_back(i, j);
        at.pairs = static_cast<int>(at.pair_labels.size());
        for (const auto& p : all_perms(k)) {
            std::uint32_t mask = 0;
            for (int q = 0; q < at.pairs; ++q) {
                const auto [i, j] = at.pair_labels[static_cast<std::size_t>(q)];
                if (p.position(i) > p.position(j)) mask |= 1u << q;
            }
            at.order_mask.push_back(mask);
        }
    });
    return cache[static_cast<std::size_t>(k)];
}

int ArityTables::pair_index(int i, int j) const {
    for (int q = 0; q < pairs; ++q)
        if (pair_labels[static_cast<std::size_t>(q)] == std::pair{i, j}) return q;
    throw std::invalid_argument("pair_index: no such pair");
}

bool ranks_in_filtration(const ArityTables& at, int complexity, std::span<const PermRank> ranks) {
    std::array<std::uint8_t, 32> swaps{};
    for (std::size_t m = 0; m + 1 < ranks.size(); ++m) {
        std::uint32_t diff = at.order_mask[ranks[m]] ^ at.order_mask[ranks[m + 1]];
        while (diff) {
            const int q = std::countr_zero(diff);
            if (++swaps[static_cast<std::size_t>(q)] > complexity - 1) return false;
            diff &= diff - 1;
        }
    }
    return true;
}

ComplexIndex::ComplexIndex(int arity, int complexity, int degree, std::vector<PermRank> flat)
    : arity_(arity), complexity_(complexity), degree_(degree), flat_(std::move(flat)) {
    if (flat_.size() % width() != 0) throw std::invalid_argument("ComplexIndex: ragged table");
}

Simplex ComplexIndex::simplex(SimplexId id) const {
    std::vector<Perm> lv;
    for (PermRank r : ranks(id)) lv.push_back(all_perms(arity_)[r]);
    return Simplex(std::move(lv));
}

std::optional<SimplexId> ComplexIndex::find(std::span<const PermRank> key) const {
    if (key.size() != width()) return std::nullopt;
    std::size_t lo = 0, hi = size();
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        const auto row = ranks(static_cast<SimplexId>(mid));
        if (std::lexicographical_compare(row.begin(), row.end(), key.begin(), key.end()))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < size()) {
        const auto row = ranks(static_cast<SimplexId>(lo));
        if (std::equal(row.begin(), row.end(), key.begin())) return static_cast<SimplexId>(lo);
    }
    return std::nullopt;
}

std::optional<SimplexId> ComplexIndex::find(const Simplex& s) const {
    if (s.arity() != arity_) return std::nullopt;
    std::vector<PermRank> key;
    for (const auto& p : s.levels) key.push_back(static_cast<PermRank>(p.rank()));
    return find(key);
}

int top_degree(int arity, int complexity) { return (complexity - 1) * arity * (arity - 1) / 2; }

namespace {

void check_enumeration_args(int arity, int complexity, int degree) {
    if (arity < 1 || arity > 6) throw std::invalid_argument("enumerate: arity must be in 1..6");
    if (complexity < 2 || complexity > 3) throw std::invalid_argument("enumerate: complexity must be 2 or 3");
    if (degree < 0 || degree > top_degree(arity, complexity))
        throw std::invalid_argument("enumerate: degree above the top degree of the complex");
}

// Extends `prefix` level by level in lexicographic order, pruning on the
// per-pair swap budget. Appends complete strings to `out`.
struct Dfs {
    const ArityTables& at;
    int budget;
    int levels;
    int nperms;
    std::vector<PermRank> prefix;
    std::array<std::uint8_t, 32> swaps{};
    std::vector<PermRank>& out;

    void run(int depth) {
        if (depth == levels) {
            out.insert(out.end(), prefix.begin(), prefix.end());
            return;
        }
        const PermRank last = prefix[static_cast<std::size_t>(depth - 1)];
        for (int r = 0; r < nperms; ++r) {
            if (r == last) continue;
            std::uint32_t diff = at.order_mask[last] ^ at.order_mask[static_cast<std::size_t>(r)];
            bool ok = true;
            for (std::uint32_t d = diff; d; d &= d - 1)
                if (swaps[static_cast<std::size_t>(std::countr_zero(d))] >= budget) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            for (std::uint32_t d = diff; d; d &= d - 1) ++swaps[static_cast<std::size_t>(std::countr_zero(d))];
            prefix[static_cast<std::size_t>(depth)] = static_cast<PermRank>(r);
            run(depth + 1);
            for (std::uint32_t d = diff; d; d &= d - 1) --swaps[static_cast<std::size_t>(std::countr_zero(d))];
        }
    }
};

void enumerate_from(const ArityTables& at, int complexity, int degree, PermRank first, std::vector<PermRank>& out) {
    Dfs dfs{at, complexity - 1, degree + 1, factorial(at.arity),
            std::vector<PermRank>(static_cast<std::size_t>(degree) + 1), {}, out};
    dfs.prefix[0] = first;
    dfs.run(1);
}

}  // namespace

ComplexIndex enumerate_serial(int arity, int complexity, int degree) {
    check_enumeration_args(arity, complexity, degree);
    const auto& at = ArityTables::get(arity);
    std::vector<PermRank> flat;
    for (int r = 0; r < factorial(arity); ++r) enumerate_from(at, complexity, degree, static_cast<PermRank>(r), flat);
    return ComplexIndex(arity, complexity, degree, std::move(flat));
}

ComplexIndex enumerate(int arity, int complexity, int degree) {
    check_enumeration_args(arity, complexity, degree);
    const auto& at = ArityTables::get(arity);
    const int n = factorial(arity);
    std::vector<std::vector<PermRank>> parts(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 1)
    for (int r = 0; r < n; ++r)
        enumerate_from(at, complexity, degree, static_cast<PermRank>(r), parts[static_cast<std::size_t>(r)]);

    std::size_t total = 0;
    for (const auto& p : parts) total += p.size();
    std::vector<PermRank> flat;
    flat.reserve(total);
    for (auto& p : parts) {
        flat.insert(flat.end(), p.begin(), p.end());
        std::vector<PermRank>().swap(p);
    }
    return ComplexIndex(arity, complexity, degree, std::move(flat));
}

const ComplexIndex& complex_table(int arity, int complexity, int degree) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, std::unique_ptr<ComplexIndex>> cache;
    {
        std::lock_guard lock(mu);
        auto it = cache.find({arity, complexity, degree});
        if (it != cache.end()) return *it->second;
    }
    auto built = std::make_unique<ComplexIndex>(enumerate(arity, complexity, degree));
    std::lock_guard lock(mu);
    auto [it, inserted] = cache.emplace(std::tuple{arity, complexity, degree}, std::move(built));
    return *it->second;
}

}  // namespace confobs
