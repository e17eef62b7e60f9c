#include "confobs/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace confobs::gf2 {

BitVector BitVector::from_string(const std::string& bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            v.set(i);
        else if (bits[i] != '0')
            throw std::invalid_argument("bit string may only contain 0 and 1");
    }
    return v;
}

void BitVector::set(std::size_t i, bool v) {
    const Word mask = Word(1) << (i % kWordBits);
    if (v)
        words_[i / kWordBits] |= mask;
    else
        words_[i / kWordBits] &= ~mask;
}

bool BitVector::any() const {
    return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
}

std::size_t BitVector::popcount() const {
    std::size_t n = 0;
    for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (other.size_ != size_) throw std::invalid_argument("BitVector size mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

std::string BitVector::to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::string>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
        m.set_row(r, BitVector::from_string(rows[r]));
    }
    return m;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool v) {
    Word& w = data_[r * stride_ + c / kWordBits];
    const Word mask = Word(1) << (c % kWordBits);
    if (v)
        w |= mask;
    else
        w &= ~mask;
}

BitVector BitMatrix::row_vector(std::size_t r) const {
    BitVector v(cols_);
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(r * stride_), stride_, v.words().begin());
    return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector& v) {
    if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
    std::copy(v.words().begin(), v.words().end(), data_.begin() + static_cast<std::ptrdiff_t>(r * stride_));
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        auto rw = row(r);
        for (std::size_t wi = 0; wi < stride_; ++wi) {
            Word w = rw[wi];
            while (w) {
                const auto b = static_cast<std::size_t>(std::countr_zero(w));
                t.set(wi * kWordBits + b, r);
                w &= w - 1;
            }
        }
    }
    return t;
}

BitVector BitMatrix::multiply(const BitVector& x) const {
    if (x.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
    BitVector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        auto rw = row(r);
        Word acc = 0;
        for (std::size_t wi = 0; wi < stride_; ++wi) acc ^= rw[wi] & x.words()[wi];
        if (std::popcount(acc) & 1) y.set(r);
    }
    return y;
}

BitMatrix BitMatrix::multiply(const BitMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix-matrix dimension mismatch");
    BitMatrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        auto dst = out.row(r);
        for (std::size_t k = 0; k < cols_; ++k) {
            if (!get(r, k)) continue;
            auto src = rhs.row(k);
            for (std::size_t wi = 0; wi < dst.size(); ++wi) dst[wi] ^= src[wi];
        }
    }
    return out;
}

bool BitMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Word w) { return w == 0; });
}

namespace {

// Gauss-Jordan on the first `pivot_limit` columns. With `full` unset only rows
// below the pivot are cleared, which is enough for rank.
std::vector<std::size_t> eliminate(BitMatrix& m, std::size_t pivot_limit, bool full) {
    std::vector<std::size_t> pivots;
    const std::size_t rows = m.rows();
    const std::size_t stride = m.row_words();
    std::size_t r = 0;
    for (std::size_t c = 0; c < pivot_limit && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && !m.get(p, c)) ++p;
        if (p == rows) continue;
        if (p != r) std::swap_ranges(m.row(p).begin(), m.row(p).end(), m.row(r).begin());

        const std::size_t w0 = c / kWordBits;
        const Word mask = Word(1) << (c % kWordBits);
        const Word* prow = m.row(r).data();
        Word* base = m.row(0).data();
        const auto lo = static_cast<std::ptrdiff_t>(full ? 0 : r + 1);
        const auto n = static_cast<std::ptrdiff_t>(rows);
        const auto pr = static_cast<std::ptrdiff_t>(r);
#pragma omp parallel for schedule(static) if (rows * (stride - w0) > (1u << 16))
        for (std::ptrdiff_t i = lo; i < n; ++i) {
            if (i == pr) continue;
            Word* row = base + static_cast<std::size_t>(i) * stride;
            if (!(row[w0] & mask)) continue;
            for (std::size_t wi = w0; wi < stride; ++wi) row[wi] ^= prow[wi];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

Echelon row_reduce(BitMatrix m) {
    auto pivots = eliminate(m, m.cols(), true);
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const BitMatrix& m) {
    BitMatrix copy = m;
    return eliminate(copy, copy.cols(), false).size();
}

std::vector<std::optional<BitVector>> solve_many(const BitMatrix& m, std::span<const BitVector> bs) {
    const std::size_t n = m.cols();
    BitMatrix aug(m.rows(), n + bs.size());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (m.get(r, c)) aug.set(r, c);
    for (std::size_t j = 0; j < bs.size(); ++j) {
        if (bs[j].size() != m.rows()) throw std::invalid_argument("solve: right-hand side length != rows");
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (bs[j].get(r)) aug.set(r, n + j);
    }
    const auto pivots = eliminate(aug, n, true);

    std::vector<std::optional<BitVector>> out;
    out.reserve(bs.size());
    for (std::size_t j = 0; j < bs.size(); ++j) {
        bool consistent = true;
        for (std::size_t r = pivots.size(); r < aug.rows() && consistent; ++r)
            if (aug.get(r, n + j)) consistent = false;
        if (!consistent) {
            out.emplace_back(std::nullopt);
            continue;
        }
        BitVector x(n);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (aug.get(i, n + j)) x.set(pivots[i]);
        out.emplace_back(std::move(x));
    }
    return out;
}

std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b) {
    return std::move(solve_many(m, std::span<const BitVector>(&b, 1)).front());
}

std::vector<BitVector> kernel_basis(const BitMatrix& m) {
    const auto ech = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : ech.pivot_cols) is_pivot[c] = true;

    std::vector<BitVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        BitVector x(m.cols());
        x.set(f);
        for (std::size_t i = 0; i < ech.pivot_cols.size(); ++i)
            if (ech.reduced.get(i, f)) x.set(ech.pivot_cols[i]);
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace confobs::gf2
