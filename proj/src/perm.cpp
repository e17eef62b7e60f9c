#include "confobs/perm.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace confobs {

namespace {

void check_bijection(const std::array<std::int8_t, kMaxArity>& w, int k) {
    if (k < 1 || k > kMaxArity) throw std::invalid_argument("permutation arity out of range");
    std::array<bool, kMaxArity + 1> seen{};
    for (int i = 0; i < k; ++i) {
        const int v = w[static_cast<std::size_t>(i)];
        if (v < 1 || v > k || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("word is not a permutation");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

void check_label(const Perm& p, int x) {
    if (x < 1 || x > p.arity()) throw std::invalid_argument("label out of range");
}

}  // namespace

Perm::Perm(std::initializer_list<int> word) : Perm(std::vector<int>(word)) {}

Perm::Perm(const std::vector<int>& word) {
    if (word.empty() || word.size() > kMaxArity) throw std::invalid_argument("permutation arity out of range");
    arity_ = static_cast<std::int8_t>(word.size());
    for (std::size_t i = 0; i < word.size(); ++i) word_[i] = static_cast<std::int8_t>(word[i]);
    check_bijection(word_, arity_);
}

Perm Perm::identity(int k) {
    std::vector<int> w(static_cast<std::size_t>(k));
    std::iota(w.begin(), w.end(), 1);
    return Perm(w);
}

Perm Perm::parse(std::string_view text) {
    std::vector<int> w;
    for (char ch : text) {
        if (ch == ' ') continue;
        if (ch < '1' || ch > '9') throw std::invalid_argument("bad permutation text: " + std::string(text));
        w.push_back(ch - '0');
    }
    return Perm(w);
}

int Perm::position(int v) const {
    for (int i = 0; i < arity_; ++i)
        if (word_[static_cast<std::size_t>(i)] == v) return i + 1;
    throw std::invalid_argument("letter not in permutation");
}

int Perm::rank() const {
    int r = 0;
    for (int i = 0; i < arity_; ++i) {
        int smaller_after = 0;
        for (int j = i + 1; j < arity_; ++j)
            if (word_[static_cast<std::size_t>(j)] < word_[static_cast<std::size_t>(i)]) ++smaller_after;
        r += smaller_after * factorial(arity_ - 1 - i);
    }
    return r;
}

Perm Perm::unrank(int k, int rank) {
    if (rank < 0 || rank >= factorial(k)) throw std::invalid_argument("rank out of range");
    std::vector<int> pool(static_cast<std::size_t>(k));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> w;
    for (int i = k - 1; i >= 0; --i) {
        const int f = factorial(i);
        const auto idx = static_cast<std::size_t>(rank / f);
        rank %= f;
        w.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return Perm(w);
}

std::string Perm::to_string() const {
    std::string s;
    for (int i = 0; i < arity_; ++i) s.push_back(static_cast<char>('0' + word_[static_cast<std::size_t>(i)]));
    return s;
}

Perm compose(const Perm& p, const Perm& q) {
    if (p.arity() != q.arity()) throw std::invalid_argument("compose: arity mismatch");
    std::vector<int> w(static_cast<std::size_t>(p.arity()));
    for (int x = 1; x <= p.arity(); ++x) w[static_cast<std::size_t>(x - 1)] = p(q(x));
    return Perm(w);
}

Perm inverse(const Perm& p) {
    std::vector<int> w(static_cast<std::size_t>(p.arity()));
    for (int x = 1; x <= p.arity(); ++x) w[static_cast<std::size_t>(p(x) - 1)] = x;
    return Perm(w);
}

PairOrder project_pair(const Perm& p, int i, int j) {
    check_label(p, i);
    check_label(p, j);
    if (i == j) throw std::invalid_argument("project_pair: labels must differ");
    return p.position(i) < p.position(j) ? PairOrder::Forward : PairOrder::Reversed;
}

Perm project_triple(const Perm& p, int a, int b, int c) {
    for (int x : {a, b, c}) check_label(p, x);
    if (a == b || b == c || a == c) throw std::invalid_argument("project_triple: labels must be distinct");
    const std::array<int, 3> labels{a, b, c};
    std::vector<int> tau;
    for (int pos = 1; pos <= p.arity(); ++pos) {
        const int letter = p(pos);
        for (int m = 0; m < 3; ++m)
            if (labels[static_cast<std::size_t>(m)] == letter) tau.push_back(m + 1);
    }
    return Perm(tau);
}

Perm block_substitute(const Perm& p, int slot, const Perm& q) {
    if (slot < 1 || slot > p.arity()) throw std::invalid_argument("block_substitute: slot out of range");
    const int m = q.arity();
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(p.arity() + m - 1));
    for (int pos = 1; pos <= p.arity(); ++pos) {
        const int x = p(pos);
        if (x < slot)
            w.push_back(x);
        else if (x > slot)
            w.push_back(x + m - 1);
        else
            for (int t = 1; t <= m; ++t) w.push_back(slot + q(t) - 1);
    }
    return Perm(w);
}

Perm act(const Perm& g, const Perm& p) {
    if (g.arity() != p.arity()) throw std::invalid_argument("act: arity mismatch");
    if constexpr (kActionConvention == ActionConvention::Relabel)
        return compose(g, p);
    else
        return compose(inverse(g), p);
}

const std::vector<Perm>& all_perms(int k) {
    if (k < 1 || k > kMaxArity) throw std::invalid_argument("arity out of range");
    static std::array<std::vector<Perm>, kMaxArity + 1> cache;
    static std::once_flag flags[kMaxArity + 1];
    std::call_once(flags[k], [k] {
        std::vector<int> w(static_cast<std::size_t>(k));
        std::iota(w.begin(), w.end(), 1);
        auto& out = cache[static_cast<std::size_t>(k)];
        do {
            out.emplace_back(w);
        } while (std::next_permutation(w.begin(), w.end()));
    });
    return cache[static_cast<std::size_t>(k)];
}

int factorial(int n) {
    int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace confobs
