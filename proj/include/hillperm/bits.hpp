#pragma once

// Text <-> character-code block <-> bit matrix conversions.
//
// A block holds 2n seven-bit codes in an n x 2 matrix, filled column-major:
// characters 1..n go down column 1, characters n+1..2n down column 2. Its
// bit view is n x 14, row j being the 7 bits of (j,1) followed by the 7 bits
// of (j,2), most significant bit first.

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hillperm/error.hpp"
#include "hillperm/modular.hpp"

namespace hillperm {

inline constexpr int kCharBits = 7;
inline constexpr int kRowBits = 2 * kCharBits;
inline constexpr std::int64_t kCharLimit = 1 << kCharBits;

class PlainBlock {
 public:
  PlainBlock() = default;
  explicit PlainBlock(Matrix codes) : codes_(std::move(codes)) {
    if (codes_.cols() != 2 || codes_.rows() == 0)
      throw DimensionMismatch("block must be n x 2 with n >= 1");
    for (auto v : codes_.data())
      if (v < 0 || v >= kCharLimit)
        throw ConfigError("block entry " + std::to_string(v) + " is not a 7-bit code");
  }
  PlainBlock(std::initializer_list<std::initializer_list<std::int64_t>> rows)
      : PlainBlock(Matrix(rows)) {}

  static PlainBlock zeros(std::size_t n) { return PlainBlock(Matrix(n, 2)); }

  std::size_t order() const noexcept { return codes_.rows(); }
  const Matrix& matrix() const noexcept { return codes_; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return codes_(r, c); }

  // Replaces one entry, keeping the 7-bit invariant.
  PlainBlock with(std::size_t r, std::size_t c, std::int64_t value) const {
    Matrix m = codes_;
    m(r, c) = value;
    return PlainBlock(std::move(m));
  }

  friend bool operator==(const PlainBlock&, const PlainBlock&) = default;

 private:
  Matrix codes_;
};

inline std::ostream& operator<<(std::ostream& os, const PlainBlock& b) { return os << b.matrix(); }

class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t rows) : rows_(rows), bits_(rows * kRowBits, 0) {}
  BitMatrix(std::size_t rows, std::vector<std::uint8_t> bits) : rows_(rows), bits_(std::move(bits)) {
    if (bits_.size() != rows_ * kRowBits) throw LengthMismatch("bit matrix must hold 14 bits per row");
    for (auto b : bits_)
      if (b > 1) throw ConfigError("bit matrix entries must be 0 or 1");
  }

  std::size_t rows() const noexcept { return rows_; }
  static constexpr std::size_t cols() noexcept { return kRowBits; }
  std::size_t size() const noexcept { return bits_.size(); }

  std::uint8_t& operator()(std::size_t r, std::size_t c) { return bits_[r * kRowBits + c]; }
  std::uint8_t operator()(std::size_t r, std::size_t c) const { return bits_[r * kRowBits + c]; }

  // Row-major flattening, position r*14 + c.
  const std::vector<std::uint8_t>& flat() const noexcept { return bits_; }

  std::size_t popcount() const {
    std::size_t n = 0;
    for (auto b : bits_) n += b;
    return n;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::vector<std::uint8_t> bits_;
};

inline PlainBlock encode_block(std::string_view text, std::size_t n) {
  if (n == 0 || text.size() != 2 * n)
    throw BadLength("block of order " + std::to_string(n) + " needs " + std::to_string(2 * n) +
                    " characters, got " + std::to_string(text.size()));
  Matrix m(n, 2);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto code = static_cast<unsigned char>(text[i]);
    if (code >= kCharLimit) throw NonAsciiCharacter(i);
    m(i % n, i / n) = code;
  }
  return PlainBlock(std::move(m));
}

inline std::string decode_block(const PlainBlock& block) {
  const std::size_t n = block.order();
  std::string out(2 * n, '\0');
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<char>(block(i % n, i / n));
  return out;
}

inline BitMatrix to_bits(const PlainBlock& block) {
  BitMatrix bits(block.order());
  for (std::size_t r = 0; r < block.order(); ++r)
    for (std::size_t half = 0; half < 2; ++half) {
      const auto v = block(r, half);
      for (int b = 0; b < kCharBits; ++b)
        bits(r, half * kCharBits + b) = static_cast<std::uint8_t>((v >> (kCharBits - 1 - b)) & 1);
    }
  return bits;
}

inline PlainBlock from_bits(const BitMatrix& bits) {
  Matrix m(bits.rows(), 2);
  for (std::size_t r = 0; r < bits.rows(); ++r)
    for (std::size_t half = 0; half < 2; ++half) {
      std::int64_t v = 0;
      for (int b = 0; b < kCharBits; ++b) v = (v << 1) | bits(r, half * kCharBits + b);
      m(r, half) = v;
    }
  return PlainBlock(std::move(m));
}

inline std::size_t hamming(const PlainBlock& a, const PlainBlock& b) {
  if (a.order() != b.order())
    throw DimensionMismatch("hamming distance needs blocks of equal order");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.matrix().data().size(); ++i)
    d += static_cast<std::size_t>(
        std::popcount(static_cast<std::uint64_t>(a.matrix().data()[i] ^ b.matrix().data()[i])));
  return d;
}

}  // namespace hillperm
