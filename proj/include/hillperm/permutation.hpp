#pragma once

// Bit-level permutations: arbitrary gather vectors, the bit-label notation
// used for per-character shuffles, and the three fixed block shuffles
// (interlace, interweave, column swap) with their inverses.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hillperm/bits.hpp"
#include "hillperm/error.hpp"

namespace hillperm {

// Gather permutation, 1-based: out[i] = in[gather[i]].
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> gather) : gather_(std::move(gather)) {
    std::vector<bool> seen(gather_.size() + 1, false);
    for (auto g : gather_) {
      if (g < 1 || g > gather_.size())
        throw InvalidPermutation("gather index " + std::to_string(g) + " outside [1, " +
                                 std::to_string(gather_.size()) + "]");
      if (seen[g]) throw InvalidPermutation("gather index " + std::to_string(g) + " repeated");
      seen[g] = true;
    }
  }

  static Permutation identity(std::size_t length) {
    std::vector<std::size_t> g(length);
    for (std::size_t i = 0; i < length; ++i) g[i] = i + 1;
    return Permutation(std::move(g));
  }

  std::size_t length() const noexcept { return gather_.size(); }
  const std::vector<std::size_t>& gather() const noexcept { return gather_; }
  std::size_t operator[](std::size_t i) const { return gather_[i]; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> gather_;
};

template <typename T>
std::vector<T> apply_permutation(std::span<const T> v, const Permutation& p) {
  if (v.size() != p.length())
    throw LengthMismatch("vector of length " + std::to_string(v.size()) +
                         " cannot take a permutation of length " + std::to_string(p.length()));
  std::vector<T> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[p[i] - 1];
  return out;
}

template <typename T>
std::vector<T> apply_permutation(const std::vector<T>& v, const Permutation& p) {
  return apply_permutation(std::span<const T>(v), p);
}

// Permutes the row-major flattening of a bit matrix.
inline BitMatrix apply_permutation(const BitMatrix& bits, const Permutation& p) {
  return BitMatrix(bits.rows(), apply_permutation(std::span<const std::uint8_t>(bits.flat()), p));
}

inline Permutation invert_permutation(const Permutation& p) {
  std::vector<std::size_t> q(p.length());
  for (std::size_t i = 0; i < p.length(); ++i) q[p[i] - 1] = i + 1;
  return Permutation(std::move(q));
}

// Bit-label notation: labels[k] names which bit b_{w-1}..b_0 lands in the
// k-th position (MSB first). (6,5,4,3,2,1,0) is the identity on 7 bits;
// (6,4,5,3,2,1,0) swaps b5 and b4.
class BitLabelSpec {
 public:
  BitLabelSpec(int width, std::vector<int> labels) : width_(width), labels_(std::move(labels)) {
    if (width_ < 1 || width_ > 62) throw InvalidPermutation("bit label width must be in [1, 62]");
    if (labels_.size() != static_cast<std::size_t>(width_))
      throw InvalidPermutation("expected " + std::to_string(width_) + " bit labels, got " +
                               std::to_string(labels_.size()));
    std::vector<bool> seen(static_cast<std::size_t>(width_), false);
    for (int l : labels_) {
      if (l < 0 || l >= width_) throw InvalidPermutation("bit label " + std::to_string(l) + " out of range");
      if (seen[static_cast<std::size_t>(l)]) throw InvalidPermutation("bit label " + std::to_string(l) + " repeated");
      seen[static_cast<std::size_t>(l)] = true;
    }
  }

  int width() const noexcept { return width_; }
  const std::vector<int>& labels() const noexcept { return labels_; }

  friend bool operator==(const BitLabelSpec&, const BitLabelSpec&) = default;

 private:
  int width_;
  std::vector<int> labels_;
};

inline Permutation bitlabels_to_permutation(const BitLabelSpec& spec) {
  std::vector<std::size_t> g;
  g.reserve(spec.labels().size());
  for (int l : spec.labels()) g.push_back(static_cast<std::size_t>(spec.width() - l));
  return Permutation(std::move(g));
}

inline BitLabelSpec invert_bitlabels(const BitLabelSpec& spec) {
  const auto inv = invert_permutation(bitlabels_to_permutation(spec));
  std::vector<int> labels;
  labels.reserve(inv.length());
  for (auto g : inv.gather()) labels.push_back(spec.width() - static_cast<int>(g));
  return BitLabelSpec(spec.width(), std::move(labels));
}

// MSB-first bit vector of the low `width` bits of x.
inline std::vector<std::uint8_t> value_bits(std::int64_t x, int width) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(width));
  for (int k = 0; k < width; ++k) bits[static_cast<std::size_t>(k)] = (x >> (width - 1 - k)) & 1;
  return bits;
}

inline std::int64_t bits_value(std::span<const std::uint8_t> bits) {
  std::int64_t v = 0;
  for (auto b : bits) v = (v << 1) | b;
  return v;
}

// Applies a bit-label permutation to the low `width` bits of x; higher bits
// pass through.
inline std::int64_t permute_value(std::int64_t x, const BitLabelSpec& spec) {
  const int w = spec.width();
  const std::int64_t mask = (std::int64_t{1} << w) - 1;
  const auto moved = apply_permutation(value_bits(x, w), bitlabels_to_permutation(spec));
  return (x & ~mask) | bits_value(moved);
}

// ---------------------------------------------------------------------
// Interlace: row k splits into B_k (bits 1-7) and D_k (bits 8-14). The
// stream B_k1 D_k1 B_k2 D_k2 ... B_k7 D_k7 fills two consecutive 7-bit rows
// of B' (first half of the rows) or D' (second half). Output row j is
// B'_j followed by D'_j.

inline void require_even(std::size_t n) {
  if (n % 2 != 0) throw OddOrder("interlace needs an even block order, got " + std::to_string(n));
}

inline BitMatrix interlace(const BitMatrix& bits) {
  const std::size_t n = bits.rows();
  require_even(n);
  BitMatrix out(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::uint8_t stream[kRowBits];
    for (int t = 0; t < kCharBits; ++t) {
      stream[2 * t] = bits(k, static_cast<std::size_t>(t));
      stream[2 * t + 1] = bits(k, static_cast<std::size_t>(kCharBits + t));
    }
    const bool second_half = k >= n / 2;
    const std::size_t base_row = 2 * (second_half ? k - n / 2 : k);
    const std::size_t col_offset = second_half ? kCharBits : 0;
    for (int s = 0; s < kRowBits; ++s)
      out(base_row + static_cast<std::size_t>(s / kCharBits), col_offset + static_cast<std::size_t>(s % kCharBits)) =
          stream[s];
  }
  return out;
}

inline BitMatrix interlace_inverse(const BitMatrix& bits) {
  const std::size_t n = bits.rows();
  require_even(n);
  BitMatrix out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const bool second_half = k >= n / 2;
    const std::size_t base_row = 2 * (second_half ? k - n / 2 : k);
    const std::size_t col_offset = second_half ? kCharBits : 0;
    for (int s = 0; s < kRowBits; ++s) {
      const auto b = bits(base_row + static_cast<std::size_t>(s / kCharBits),
                          col_offset + static_cast<std::size_t>(s % kCharBits));
      const auto t = static_cast<std::size_t>(s / 2);
      out(k, (s % 2 == 0) ? t : kCharBits + t) = b;
    }
  }
  return out;
}

// ---------------------------------------------------------------------
// Interweave: odd columns (1-based 1,3,...,13) rotate up by one, then even
// rows (1-based 2,4,...) of that result rotate left by one.

inline BitMatrix interweave(const BitMatrix& bits) {
  const std::size_t n = bits.rows();
  BitMatrix cols_done = bits;
  for (std::size_t c = 0; c < kRowBits; c += 2)
    for (std::size_t r = 0; r < n; ++r) cols_done(r, c) = bits((r + 1) % n, c);
  BitMatrix out = cols_done;
  for (std::size_t r = 1; r < n; r += 2)
    for (std::size_t c = 0; c < kRowBits; ++c) out(r, c) = cols_done(r, (c + 1) % kRowBits);
  return out;
}

inline BitMatrix interweave_inverse(const BitMatrix& bits) {
  const std::size_t n = bits.rows();
  BitMatrix rows_undone = bits;
  for (std::size_t r = 1; r < n; r += 2)
    for (std::size_t c = 0; c < kRowBits; ++c) rows_undone(r, (c + 1) % kRowBits) = bits(r, c);
  BitMatrix out = rows_undone;
  for (std::size_t c = 0; c < kRowBits; c += 2)
    for (std::size_t r = 0; r < n; ++r) out((r + 1) % n, c) = rows_undone(r, c);
  return out;
}

// ---------------------------------------------------------------------
// Column swap: exchange columns 2, 4, 6 of the left 7-bit half with the same
// columns of the right half. An involution.

inline BitMatrix column_swap(const BitMatrix& bits) {
  BitMatrix out = bits;
  for (std::size_t r = 0; r < bits.rows(); ++r)
    for (std::size_t c = 1; c < kCharBits; c += 2) std::swap(out(r, c), out(r, kCharBits + c));
  return out;
}

// ---------------------------------------------------------------------
// The same three shuffles as gather vectors over the row-major flattening.

inline Permutation interlace_permutation(std::size_t n) {
  require_even(n);
  std::vector<std::size_t> g(n * kRowBits);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < kRowBits; ++c) {
      const bool right = c >= kCharBits;
      const std::size_t src_row = (right ? n / 2 : 0) + r / 2;
      const std::size_t s = (r % 2) * kCharBits + (c % kCharBits);
      const std::size_t src_col = (s % 2 == 0) ? s / 2 : kCharBits + s / 2;
      g[r * kRowBits + c] = src_row * kRowBits + src_col + 1;
    }
  return Permutation(std::move(g));
}

inline Permutation interweave_permutation(std::size_t n) {
  std::vector<std::size_t> g(n * kRowBits);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < kRowBits; ++c) {
      const std::size_t mid_col = (r % 2 == 1) ? (c + 1) % kRowBits : c;
      const std::size_t src_row = (mid_col % 2 == 0) ? (r + 1) % n : r;
      g[r * kRowBits + c] = src_row * kRowBits + mid_col + 1;
    }
  return Permutation(std::move(g));
}

inline Permutation column_swap_permutation(std::size_t n) {
  std::vector<std::size_t> g(n * kRowBits);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < kRowBits; ++c) {
      std::size_t src = c;
      if (c % kCharBits % 2 == 1) src = c < kCharBits ? c + kCharBits : c - kCharBits;
      g[r * kRowBits + c] = r * kRowBits + src + 1;
    }
  return Permutation(std::move(g));
}

// ---------------------------------------------------------------------
// Counterexample to additivity of a single bit transposition mod 2^width.

struct NonlinearityWitness {
  std::int64_t b1 = 0;
  std::int64_t b2 = 0;
  std::int64_t lhs = 0;  // P((b1 + b2) mod 2^w)
  std::int64_t rhs = 0;  // (P(b1) + P(b2)) mod 2^w
};

inline std::int64_t swap_bits(std::int64_t x, int i, int j) {
  const std::int64_t bi = (x >> i) & 1, bj = (x >> j) & 1;
  if (bi == bj) return x;
  return x ^ ((std::int64_t{1} << i) | (std::int64_t{1} << j));
}

// Both numbers have bit i = 0, bit j = 1 and bit j-1 = 0. Between j and i,
// b1 holds zeros and b2 ones, so b1 + b2 carries exactly into bit i. Bits
// below j-1 are 1 in both (they sum below bit j); bits above i are 1 in b1
// and 0 in b2. For width 5, i = 3, j = 2 this gives 21 and 5.
inline NonlinearityWitness nonlinearity_witness(int width, int i, int j) {
  if (width < 2 || width > 62 || j < 0 || j >= i || i >= width)
    throw InvalidIndices("need 0 <= j < i < width <= 62, got width=" + std::to_string(width) +
                         " i=" + std::to_string(i) + " j=" + std::to_string(j));
  std::int64_t b1 = 0, b2 = 0;
  for (int l = 0; l < width; ++l) {
    const std::int64_t bit = std::int64_t{1} << l;
    if (l == j) {
      b1 |= bit;
      b2 |= bit;
    } else if (l > j && l < i) {
      b2 |= bit;
    } else if (l > i) {
      b1 |= bit;
    } else if (l < j - 1) {
      b1 |= bit;
      b2 |= bit;
    }
  }
  const std::int64_t mask = (std::int64_t{1} << width) - 1;
  NonlinearityWitness w{b1, b2, 0, 0};
  w.lhs = swap_bits((b1 + b2) & mask, i, j);
  w.rhs = (swap_bits(b1, i, j) + swap_bits(b2, i, j)) & mask;
  return w;
}

}  // namespace hillperm
