#include "confobs/cochain.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace confobs {

namespace {

void require_same_ambient(const Cochain& a, const Cochain& b, const char* what) {
    if (a.arity != b.arity || a.complexity != b.complexity)
        throw std::invalid_argument(std::string(what) + ": ambient complex mismatch");
}

bool contains(const std::vector<SimplexId>& sorted, SimplexId id) {
    return std::binary_search(sorted.begin(), sorted.end(), id);
}

// Scans the target table and keeps the simplices whose levelwise image is a
// non-degenerate member of `src`.
Cochain pullback_scan(int target_arity, const Cochain& src, const std::vector<PermRank>& level_image) {
    Cochain out = zero_cochain(target_arity, src.complexity, src.degree);
    if (src.is_zero()) return out;
    const auto& target = out.table();
    const auto& source = src.table();
    const auto n = static_cast<std::ptrdiff_t>(target.size());
    std::vector<std::vector<SimplexId>> hits(1);
#pragma omp parallel
    {
        std::vector<SimplexId> local;
        std::vector<PermRank> img(target.width());
#pragma omp for schedule(static) nowait
        for (std::ptrdiff_t id = 0; id < n; ++id) {
            const auto row = target.ranks(static_cast<SimplexId>(id));
            bool degenerate = false;
            for (std::size_t m = 0; m < row.size(); ++m) {
                img[m] = level_image[row[m]];
                if (m && img[m] == img[m - 1]) {
                    degenerate = true;
                    break;
                }
            }
            if (degenerate) continue;
            const auto sid = source.find(img);
            if (sid && contains(src.support, *sid)) local.push_back(static_cast<SimplexId>(id));
        }
#pragma omp critical
        hits.push_back(std::move(local));
    }
    for (auto& h : hits) out.support.insert(out.support.end(), h.begin(), h.end());
    std::sort(out.support.begin(), out.support.end());
    return out;
}

}  // namespace

void normalize_support(std::vector<SimplexId>& ids) {
    std::sort(ids.begin(), ids.end());
    std::vector<SimplexId> out;
    out.reserve(ids.size());
    for (std::size_t i = 0; i < ids.size();) {
        std::size_t j = i;
        while (j < ids.size() && ids[j] == ids[i]) ++j;
        if ((j - i) % 2 == 1) out.push_back(ids[i]);
        i = j;
    }
    ids = std::move(out);
}

std::vector<Simplex> Cochain::simplices() const {
    std::vector<Simplex> out;
    const auto& t = table();
    for (auto id : support) out.push_back(t.simplex(id));
    return out;
}

Cochain& Cochain::operator+=(const Cochain& other) {
    require_same_ambient(*this, other, "cochain sum");
    if (degree != other.degree) throw std::invalid_argument("cochain sum: degree mismatch");
    std::vector<SimplexId> out;
    std::set_symmetric_difference(support.begin(), support.end(), other.support.begin(), other.support.end(),
                                  std::back_inserter(out));
    support = std::move(out);
    return *this;
}

Cochain zero_cochain(int arity, int complexity, int degree) {
    Cochain c;
    c.arity = arity;
    c.complexity = complexity;
    c.degree = degree;
    return c;
}

Cochain make_cochain(int arity, int complexity, int degree, const std::vector<Simplex>& simplices) {
    Cochain c = zero_cochain(arity, complexity, degree);
    const auto& t = c.table();
    for (const auto& s : simplices) {
        if (s.arity() != arity || s.degree() != degree)
            throw std::invalid_argument("make_cochain: simplex " + s.to_string() + " has the wrong shape");
        const auto id = t.find(s);
        if (!id) throw std::invalid_argument("make_cochain: " + s.to_string() + " is not a filtered simplex");
        c.support.push_back(*id);
    }
    normalize_support(c.support);
    return c;
}

std::string format(const Cochain& c) {
    if (c.is_zero()) return "0";
    std::string s;
    const auto& t = c.table();
    for (std::size_t n = 0; n < c.support.size(); ++n) {
        if (n) s += " + ";
        s += t.simplex(c.support[n]).to_string();
    }
    return s;
}

Cochain parse_cochain(std::string_view text, int arity, int complexity, int degree) {
    std::vector<Simplex> simplices;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto plus = text.find('+', start);
        auto term = text.substr(start, plus == std::string_view::npos ? std::string_view::npos : plus - start);
        while (!term.empty() && term.front() == ' ') term.remove_prefix(1);
        while (!term.empty() && term.back() == ' ') term.remove_suffix(1);
        if (term.empty()) throw std::invalid_argument("empty term in cochain text");
        if (term != "0") simplices.push_back(Simplex::parse(term));
        if (plus == std::string_view::npos) break;
        start = plus + 1;
    }
    return make_cochain(arity, complexity, degree, simplices);
}

Cochain coboundary(const Cochain& c) {
    if (c.degree >= top_degree(c.arity, c.complexity))
        throw std::invalid_argument("coboundary: degree is already the top degree");
    Cochain out = zero_cochain(c.arity, c.complexity, c.degree + 1);
    const auto& src = c.table();
    const auto& dst = out.table();
    const auto& at = ArityTables::get(c.arity);
    const int nperms = factorial(c.arity);
    std::vector<PermRank> sigma(dst.width());
    // Every (σ, m) with d_m σ = τ arises from inserting one new level into τ.
    for (auto tid : c.support) {
        const auto tau = src.ranks(tid);
        for (std::size_t m = 0; m <= tau.size(); ++m) {
            for (int x = 0; x < nperms; ++x) {
                if (m > 0 && tau[m - 1] == x) continue;
                if (m < tau.size() && tau[m] == x) continue;
                std::copy(tau.begin(), tau.begin() + static_cast<std::ptrdiff_t>(m), sigma.begin());
                sigma[m] = static_cast<PermRank>(x);
                std::copy(tau.begin() + static_cast<std::ptrdiff_t>(m), tau.end(),
                          sigma.begin() + static_cast<std::ptrdiff_t>(m) + 1);
                if (!ranks_in_filtration(at, c.complexity, sigma)) continue;
                out.support.push_back(*dst.find(sigma));
            }
        }
    }
    normalize_support(out.support);
    return out;
}

Chain boundary(const Chain& z) {
    if (z.degree < 1) throw std::invalid_argument("boundary: degree must be at least 1");
    Chain out = zero_cochain(z.arity, z.complexity, z.degree - 1);
    const auto& src = z.table();
    const auto& dst = out.table();
    std::vector<PermRank> face(dst.width());
    for (auto id : z.support) {
        const auto s = src.ranks(id);
        for (std::size_t m = 0; m < s.size(); ++m) {
            if (m > 0 && m + 1 < s.size() && s[m - 1] == s[m + 1]) continue;
            std::size_t w = 0;
            for (std::size_t n = 0; n < s.size(); ++n)
                if (n != m) face[w++] = s[n];
            out.support.push_back(*dst.find(face));
        }
    }
    normalize_support(out.support);
    return out;
}

Cochain cup(const Cochain& a, const Cochain& b) {
    require_same_ambient(a, b, "cup");
    const int deg = a.degree + b.degree;
    if (deg > top_degree(a.arity, a.complexity)) return zero_cochain(a.arity, a.complexity, deg);
    Cochain out = zero_cochain(a.arity, a.complexity, deg);
    if (a.is_zero() || b.is_zero()) return out;
    const auto& ta = a.table();
    const auto& tb = b.table();
    const auto& dst = out.table();
    const auto& at = ArityTables::get(a.arity);

    std::multimap<PermRank, SimplexId> by_first;
    for (auto id : b.support) by_first.emplace(tb.ranks(id).front(), id);

    std::vector<PermRank> sigma(dst.width());
    for (auto ida : a.support) {
        const auto front = ta.ranks(ida);
        auto [lo, hi] = by_first.equal_range(front.back());
        for (auto it = lo; it != hi; ++it) {
            const auto back = tb.ranks(it->second);
            std::copy(front.begin(), front.end(), sigma.begin());
            std::copy(back.begin() + 1, back.end(), sigma.begin() + static_cast<std::ptrdiff_t>(front.size()));
            if (!ranks_in_filtration(at, a.complexity, sigma)) continue;
            out.support.push_back(*dst.find(sigma));
        }
    }
    normalize_support(out.support);
    return out;
}

Cochain cup1(const Cochain& a, const Cochain& b) {
    require_same_ambient(a, b, "cup1");
    if (a.degree != 1 || b.degree != 1) throw std::invalid_argument("cup1: only defined here for 1-cochains");
    Cochain out = zero_cochain(a.arity, a.complexity, 1);
    std::set_intersection(a.support.begin(), a.support.end(), b.support.begin(), b.support.end(),
                          std::back_inserter(out.support));
    return out;
}

Cochain pullback_pair(int target_arity, int i, int j, const Cochain& c) {
    if (c.arity != 2) throw std::invalid_argument("pullback_pair: source must have arity 2");
    std::vector<PermRank> image;
    for (const auto& p : all_perms(target_arity))
        image.push_back(project_pair(p, i, j) == PairOrder::Forward ? 0 : 1);
    return pullback_scan(target_arity, c, image);
}

Cochain pullback_triple(int target_arity, int a, int b, int c, const Cochain& x) {
    if (x.arity != 3) throw std::invalid_argument("pullback_triple: source must have arity 3");
    std::vector<PermRank> image;
    for (const auto& p : all_perms(target_arity))
        image.push_back(static_cast<PermRank>(project_triple(p, a, b, c).rank()));
    return pullback_scan(target_arity, x, image);
}

Cochain omega(int arity, int i, int j) {
    if (i == j || i < 1 || j < 1 || i > arity || j > arity) throw std::invalid_argument("omega: bad labels");
    const Cochain generator = make_cochain(2, 2, 1, {Simplex::parse("12|21")});
    return pullback_pair(arity, i, j, generator);
}

Cochain ar() { return make_cochain(3, 2, 1, {Simplex::parse("132|312")}); }

bool pair(const Cochain& c, const Chain& z) {
    require_same_ambient(c, z, "pair");
    if (c.degree != z.degree) throw std::invalid_argument("pair: degree mismatch");
    std::size_t n = 0;
    auto i = c.support.begin();
    auto j = z.support.begin();
    while (i != c.support.end() && j != z.support.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else {
            ++n;
            ++i;
            ++j;
        }
    }
    return n % 2 == 1;
}

namespace {

// Row σ of the coboundary matrix has a one in each column d_m σ.
void fill_coboundary_row(const ComplexIndex& src, const ComplexIndex& dst, SimplexId row, gf2::BitMatrix& m,
                         std::vector<PermRank>& face) {
    const auto s = dst.ranks(row);
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (k > 0 && k + 1 < s.size() && s[k - 1] == s[k + 1]) continue;
        std::size_t w = 0;
        for (std::size_t n = 0; n < s.size(); ++n)
            if (n != k) face[w++] = s[n];
        m.flip(row, *src.find(face));
    }
}

}  // namespace

gf2::BitMatrix coboundary_matrix_serial(int arity, int complexity, int degree) {
    const auto& src = complex_table(arity, complexity, degree);
    const auto& dst = complex_table(arity, complexity, degree + 1);
    gf2::BitMatrix m(dst.size(), src.size());
    std::vector<PermRank> face(src.width());
    for (std::size_t r = 0; r < dst.size(); ++r) fill_coboundary_row(src, dst, static_cast<SimplexId>(r), m, face);
    return m;
}

gf2::BitMatrix coboundary_matrix(int arity, int complexity, int degree) {
    const auto& src = complex_table(arity, complexity, degree);
    const auto& dst = complex_table(arity, complexity, degree + 1);
    gf2::BitMatrix m(dst.size(), src.size());
    const auto n = static_cast<std::ptrdiff_t>(dst.size());
#pragma omp parallel
    {
        std::vector<PermRank> face(src.width());
#pragma omp for schedule(static)
        for (std::ptrdiff_t r = 0; r < n; ++r) fill_coboundary_row(src, dst, static_cast<SimplexId>(r), m, face);
    }
    return m;
}

gf2::BitVector to_bits(const Cochain& c) {
    gf2::BitVector v(c.table().size());
    for (auto id : c.support) v.set(id);
    return v;
}

Cochain from_bits(int arity, int complexity, int degree, const gf2::BitVector& bits) {
    Cochain c = zero_cochain(arity, complexity, degree);
    if (bits.size() != c.table().size()) throw std::invalid_argument("from_bits: length mismatch");
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits.get(i)) c.support.push_back(static_cast<SimplexId>(i));
    return c;
}

}  // namespace confobs
