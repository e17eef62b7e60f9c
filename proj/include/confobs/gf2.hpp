#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace confobs::gf2 {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

/// Packed vector over the two-element field.
class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_(words_for(size), 0) {}

    static BitVector from_string(const std::string& bits);

    std::size_t size() const { return size_; }
    bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
    void set(std::size_t i, bool v = true);
    void flip(std::size_t i) { words_[i / kWordBits] ^= Word(1) << (i % kWordBits); }

    bool any() const;
    std::size_t popcount() const;
    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend bool operator==(const BitVector&, const BitVector&) = default;

    std::span<const Word> words() const { return words_; }
    std::span<Word> words() { return words_; }
    std::string to_string() const;

  private:
    std::size_t size_ = 0;
    std::vector<Word> words_;
};

/// Dense row-major GF(2) matrix. Bits past `cols` in each row are kept zero.
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);
    /// Rows given as strings of '0'/'1', all of equal length.
    static BitMatrix from_rows(const std::vector<std::string>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t row_words() const { return stride_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1U;
    }
    void set(std::size_t r, std::size_t c, bool v = true);
    void flip(std::size_t r, std::size_t c) {
        data_[r * stride_ + c / kWordBits] ^= Word(1) << (c % kWordBits);
    }

    std::span<const Word> row(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }
    std::span<Word> row(std::size_t r) { return {data_.data() + r * stride_, stride_}; }
    BitVector row_vector(std::size_t r) const;
    void set_row(std::size_t r, const BitVector& v);

    BitMatrix transpose() const;
    BitVector multiply(const BitVector& x) const;
    BitMatrix multiply(const BitMatrix& rhs) const;
    bool is_zero() const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<Word> data_;
};

std::size_t rank(const BitMatrix& m);

/// Some x with m·x = b, or nullopt when b is outside the column span.
std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b);

/// Batched form of solve: one elimination shared by all right-hand sides.
std::vector<std::optional<BitVector>> solve_many(const BitMatrix& m, std::span<const BitVector> bs);

/// Basis of {x : m·x = 0}, one vector per free column of the reduced form.
std::vector<BitVector> kernel_basis(const BitMatrix& m);

/// Reduced row echelon form with pivots chosen lowest column first.
struct Echelon {
    BitMatrix reduced;
    std::vector<std::size_t> pivot_cols;  // pivot column of reduced row i
};
Echelon row_reduce(BitMatrix m);

}  // namespace confobs::gf2
