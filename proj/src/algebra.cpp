#include "confobs/algebra.hpp"

#include <functional>
#include <stdexcept>

namespace confobs {

Gen Gen::of(int a, int b) {
    if (a == b || a < 1 || b < 1) throw std::invalid_argument("generator labels must be distinct positive integers");
    return a < b ? Gen{a, b} : Gen{b, a};
}

namespace {

std::string format_word(char letter, const GenWord& w) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t t = 0; t < w.size(); ++t) {
        if (t) s.push_back('.');
        s.push_back(letter);
        s += std::to_string(w[t].i);
        s += std::to_string(w[t].j);
    }
    return s;
}

GenWord parse_word(char letter, std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '*')) text.remove_suffix(1);
    GenWord w;
    if (text == "1") return w;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto dot = text.find('.', start);
        auto tok = text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
        if (tok.size() != 3 || tok[0] != letter || tok[1] < '1' || tok[1] > '9' || tok[2] < '1' || tok[2] > '9')
            throw std::invalid_argument("bad generator token: " + std::string(tok));
        w.push_back(Gen::of(tok[1] - '0', tok[2] - '0'));
        if (dot == std::string_view::npos) break;
        start = dot + 1;
    }
    return w;
}

template <class T>
std::string format_sum(const F2Sum<T>& e) {
    if (e.is_zero()) return "0";
    std::string s;
    for (const auto& t : e) {
        if (!s.empty()) s += " + ";
        s += t.to_string();
    }
    return s;
}

}  // namespace

bool ArnoldMonomial::admissible() const {
    for (std::size_t t = 0; t < factors.size(); ++t) {
        if (factors[t].i >= factors[t].j) return false;
        if (t && factors[t - 1].j >= factors[t].j) return false;
    }
    return true;
}

std::string ArnoldMonomial::to_string() const { return format_word('A', factors); }

ArnoldMonomial ArnoldMonomial::parse(std::string_view text) {
    ArnoldMonomial m{parse_word('A', text)};
    if (!m.admissible()) throw std::invalid_argument("not an admissible Arnold monomial: " + std::string(text));
    return m;
}

bool YBWord::admissible() const {
    for (std::size_t t = 0; t < factors.size(); ++t) {
        if (factors[t].i >= factors[t].j) return false;
        if (t && factors[t - 1].j > factors[t].j) return false;
    }
    return true;
}

std::string YBWord::to_string() const { return format_word('B', factors); }

YBWord YBWord::parse(std::string_view text) {
    YBWord w{parse_word('B', text)};
    if (!w.admissible()) throw std::invalid_argument("not an admissible Yang-Baxter word: " + std::string(text));
    return w;
}

std::string to_string(const ArnoldElement& e) { return format_sum(e); }
std::string to_string(const YBElement& e) { return format_sum(e); }

ArnoldElement arnold_normalize(const GenWord& raw) {
    ArnoldElement out;
    // A_aj A_bj = A_ab A_aj + A_ab A_bj (a < b < j); each step lowers the sum of second indices.
    std::function<void(GenWord)> expand = [&](GenWord w) {
        std::sort(w.begin(), w.end(), [](const Gen& x, const Gen& y) { return std::pair{x.j, x.i} < std::pair{y.j, y.i}; });
        for (std::size_t t = 0; t + 1 < w.size(); ++t)
            if (w[t] == w[t + 1]) return;
        for (std::size_t t = 0; t + 1 < w.size(); ++t) {
            if (w[t].j != w[t + 1].j) continue;
            const int a = w[t].i, b = w[t + 1].i, j = w[t].j;
            GenWord w1 = w, w2 = w;
            w1[t] = Gen::of(a, b);
            w1[t + 1] = Gen::of(a, j);
            w2[t] = Gen::of(a, b);
            w2[t + 1] = Gen::of(b, j);
            expand(std::move(w1));
            expand(std::move(w2));
            return;
        }
        out.toggle(ArnoldMonomial{std::move(w)});
    };
    expand(raw);
    return out;
}

YBElement yb_normalize(const GenWord& raw) {
    thread_local std::map<GenWord, YBElement> memo;
    long steps = 0;
    std::function<const YBElement&(const GenWord&)> nf = [&](const GenWord& w) -> const YBElement& {
        if (auto it = memo.find(w); it != memo.end()) return it->second;
        YBElement result;
        std::size_t t = 0;
        while (t + 1 < w.size() && w[t].j <= w[t + 1].j) ++t;
        if (t + 1 >= w.size()) {
            result.toggle(YBWord{w});
        } else {
            if (++steps > kMaxRewriteSteps) throw std::runtime_error("Yang-Baxter rewriting did not terminate");
            const Gen x = w[t], y = w[t + 1];  // x.j > y.j
            auto with = [&](Gen a, Gen b) {
                GenWord v = w;
                v[t] = a;
                v[t + 1] = b;
                return v;
            };
            result += nf(with(y, x));
            const bool disjoint = x.i != y.i && x.i != y.j && x.j != y.i && x.j != y.j;
            if (!disjoint) {
                const int j = x.j, u = y.i, v = y.j;
                result += nf(with(Gen::of(u, j), Gen::of(v, j)));
                result += nf(with(Gen::of(v, j), Gen::of(u, j)));
            }
        }
        return memo.emplace(w, std::move(result)).first->second;
    };
    return nf(raw);
}

std::vector<GenWord> admissible_words(AlgebraKind kind, int arity, int length) {
    std::vector<Gen> gens;
    for (int i = 1; i <= arity; ++i)
        for (int j = i + 1; j <= arity; ++j) gens.push_back({i, j});
    std::sort(gens.begin(), gens.end());

    std::vector<GenWord> out;
    GenWord cur;
    std::function<void()> grow = [&] {
        if (static_cast<int>(cur.size()) == length) {
            out.push_back(cur);
            return;
        }
        for (const auto& g : gens) {
            if (!cur.empty()) {
                const int prev = cur.back().j;
                if (kind == AlgebraKind::Arnold ? g.j <= prev : g.j < prev) continue;
            }
            cur.push_back(g);
            grow();
            cur.pop_back();
        }
    };
    grow();
    return out;
}

std::size_t dims(AlgebraKind kind, int arity, int length) { return admissible_words(kind, arity, length).size(); }

ArnoldAlgebra::ArnoldAlgebra(int arity) : arity_(arity) {
    for (int q = 0; q <= top_degree(); ++q) {
        std::vector<ArnoldMonomial> b;
        for (auto& w : admissible_words(AlgebraKind::Arnold, arity, q)) b.push_back(ArnoldMonomial{std::move(w)});
        for (std::size_t n = 0; n < b.size(); ++n) index_.emplace(b[n], static_cast<int>(n));
        basis_.push_back(std::move(b));
    }
    for (int q1 = 0; q1 <= top_degree(); ++q1)
        for (int q2 = 0; q1 + q2 <= top_degree(); ++q2)
            for (std::size_t a = 0; a < dim(q1); ++a)
                for (std::size_t b = 0; b < dim(q2); ++b) {
                    GenWord w = basis_[static_cast<std::size_t>(q1)][a].factors;
                    const auto& rhs = basis_[static_cast<std::size_t>(q2)][b].factors;
                    w.insert(w.end(), rhs.begin(), rhs.end());
                    products_.emplace(std::tuple{q1, static_cast<int>(a), q2, static_cast<int>(b)}, arnold_normalize(w));
                }
}

const std::vector<ArnoldMonomial>& ArnoldAlgebra::basis(int degree) const {
    static const std::vector<ArnoldMonomial> empty;
    if (degree < 0 || degree > top_degree()) return empty;
    return basis_[static_cast<std::size_t>(degree)];
}

int ArnoldAlgebra::index_of(const ArnoldMonomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw std::invalid_argument("not a basis monomial: " + m.to_string());
    return it->second;
}

gf2::BitVector ArnoldAlgebra::to_bits(const ArnoldElement& e, int degree) const {
    gf2::BitVector v(dim(degree));
    for (const auto& m : e) {
        if (m.degree() != degree) throw std::invalid_argument("to_bits: degree mismatch");
        v.flip(static_cast<std::size_t>(index_of(m)));
    }
    return v;
}

ArnoldElement ArnoldAlgebra::from_bits(const gf2::BitVector& v, int degree) const {
    ArnoldElement e;
    for (std::size_t n = 0; n < v.size(); ++n)
        if (v.get(n)) e.toggle(basis(degree)[n]);
    return e;
}

const ArnoldElement& ArnoldAlgebra::product(int q1, int a, int q2, int b) const {
    static const ArnoldElement zero;
    auto it = products_.find({q1, a, q2, b});
    return it == products_.end() ? zero : it->second;
}

ArnoldElement ArnoldAlgebra::multiply(const ArnoldElement& x, const ArnoldElement& y) const {
    ArnoldElement out;
    for (const auto& m : x)
        for (const auto& n : y) out += product(m.degree(), index_of(m), n.degree(), index_of(n));
    return out;
}

BarModel::BarModel(int arity, int max_level) : arity_(arity), max_level_(max_level) {
    for (int p = 0; p <= max_level; ++p) {
        std::vector<YBWord> b;
        for (auto& w : admissible_words(AlgebraKind::YangBaxter, arity, p + 1)) b.push_back(YBWord{std::move(w)});
        for (std::size_t n = 0; n < b.size(); ++n) index_.emplace(b[n], static_cast<int>(n));
        basis_.push_back(std::move(b));
    }
    for (int n = 1; n <= max_level; ++n)
        for (int a = 0; a < n; ++a) {
            const int b = n - 1 - a;
            std::vector<std::vector<std::pair<int, int>>> comp(dim(n));
            for (std::size_t u = 0; u < dim(a); ++u)
                for (std::size_t v = 0; v < dim(b); ++v) {
                    GenWord w = basis(a)[u].factors;
                    const auto& rhs = basis(b)[v].factors;
                    w.insert(w.end(), rhs.begin(), rhs.end());
                    for (const auto& t : yb_normalize(w))
                        comp[static_cast<std::size_t>(index_of(t))].emplace_back(static_cast<int>(u), static_cast<int>(v));
                }
            components_.emplace(std::pair{a, b}, std::move(comp));
        }
}

const std::vector<YBWord>& BarModel::basis(int level) const {
    if (level < 0 || level > max_level_) throw std::invalid_argument("bar model level out of range");
    return basis_[static_cast<std::size_t>(level)];
}

int BarModel::index_of(const YBWord& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) throw std::invalid_argument("not a basis word: " + w.to_string());
    return it->second;
}

const std::vector<std::vector<std::pair<int, int>>>& BarModel::coproduct_component(int a, int b) const {
    auto it = components_.find({a, b});
    if (it == components_.end()) throw std::invalid_argument("coproduct component out of range");
    return it->second;
}

F2Sum<WTensor> BarModel::coproduct(const WGen& w) const {
    const int level = w.level();
    if (level < 1) throw std::invalid_argument("coproduct: level must be at least 1");
    F2Sum<WTensor> out;
    const auto idx = static_cast<std::size_t>(index_of(w.word));
    auto add = [&](int a, int b) {
        for (auto [u, v] : coproduct_component(a, b)[idx])
            out.toggle({WGen{basis(a)[static_cast<std::size_t>(u)]}, WGen{basis(b)[static_cast<std::size_t>(v)]}});
    };
    add(level - 1, 0);
    // At level 1 both bidegrees are the single component W_0 ⊗ W_0.
    if (level > 1) add(0, level - 1);
    return out;
}

F2Sum<QuadraticWord> d_w1(const WGen& w) {
    if (w.level() != 1 || !w.word.admissible()) throw std::invalid_argument("d_w1: needs an admissible level-1 generator");
    const auto [i, j] = w.word.factors[0];
    const auto [k, l] = w.word.factors[1];
    const Gen ij = Gen::of(i, j), kl = Gen::of(k, l);
    if (i == k && j == l) return {QuadraticWord{ij, ij}};
    if (j < l) return {QuadraticWord{ij, kl}, QuadraticWord{kl, ij}};
    // j == l: the k < i and k > i cases differ only in how B_ki is written.
    const Gen il = Gen::of(i, l), ki = Gen::of(k, i);
    return {QuadraticWord{ij, kl}, QuadraticWord{il, ki}, QuadraticWord{kl, ki}};
}

F2Sum<QuadraticWord> d_w1_from_coproduct(const BarModel& model, const WGen& w) {
    if (w.level() != 1) throw std::invalid_argument("d_w1_from_coproduct: level must be 1");
    F2Sum<QuadraticWord> out;
    for (const auto& [u, v] : model.coproduct(w)) out.toggle({u.word.factors[0], v.word.factors[0]});
    return out;
}

HomWH zero_hom(const BarModel& model, const ArnoldAlgebra& h, int level, int degree) {
    return HomWH{level, degree, gf2::BitMatrix(model.dim(level), h.dim(degree))};
}

HomWH tau(const BarModel& model, const ArnoldAlgebra& h) {
    HomWH t = zero_hom(model, h, 0, 1);
    for (std::size_t n = 0; n < model.dim(0); ++n) {
        const ArnoldMonomial a{model.basis(0)[n].factors};
        t.images.set(n, static_cast<std::size_t>(h.index_of(a)));
    }
    return t;
}

const ArnoldAlgebra& arnold4() {
    static const ArnoldAlgebra h(4);
    return h;
}

const BarModel& bar4() {
    static const BarModel w(4, 3);
    return w;
}

}  // namespace confobs
