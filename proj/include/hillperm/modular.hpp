#pragma once

// Exact matrix arithmetic over Z_N for small (n <= 8) matrices. The modulus
// is a runtime value; composite moduli such as 26 and 128 are the norm, so
// inversion goes through the exact integer adjugate instead of elimination
// over the ring.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <utility>
#include <vector>

#include "hillperm/error.hpp"

namespace hillperm {

using BigInt = boost::multiprecision::cpp_int;

// Largest modulus accepted; keeps every a*b product of residues inside int64.
inline constexpr std::int64_t kMaxModulus = std::int64_t{1} << 31;

// Reduce v into [0, N).
inline std::int64_t normalize(std::int64_t v, std::int64_t modulus) {
  const std::int64_t r = v % modulus;
  return r < 0 ? r + modulus : r;
}

inline std::int64_t normalize(const BigInt& v, std::int64_t modulus) {
  BigInt r = v % modulus;
  if (r < 0) r += modulus;
  return r.convert_to<std::int64_t>();
}

inline void check_modulus(std::int64_t modulus) {
  if (modulus < 2 || modulus > kMaxModulus)
    throw ConfigError("modulus must lie in [2, 2^31], got " + std::to_string(modulus));
}

// Dense row-major integer matrix. Entries are plain int64; callers decide
// whether they are residues.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, std::int64_t fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<std::int64_t>& data() const noexcept { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

inline std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c);
    os << ']';
  }
  return os << ']';
}

// Square matrix of residues mod N.
class KeyMatrix {
 public:
  KeyMatrix(Matrix entries, std::int64_t modulus) : entries_(std::move(entries)), modulus_(modulus) {
    check_modulus(modulus_);
    if (!entries_.square()) throw DimensionMismatch("key matrix must be square");
    if (entries_.rows() == 0) throw DimensionMismatch("key matrix must have order >= 1");
    for (auto v : entries_.data())
      if (v < 0 || v >= modulus_)
        throw ConfigError("key entry " + std::to_string(v) + " outside [0, " +
                          std::to_string(modulus_) + ")");
  }

  std::size_t order() const noexcept { return entries_.rows(); }
  std::int64_t modulus() const noexcept { return modulus_; }
  const Matrix& matrix() const noexcept { return entries_; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return entries_(r, c); }

  friend bool operator==(const KeyMatrix&, const KeyMatrix&) = default;

 private:
  Matrix entries_;
  std::int64_t modulus_;
};

// Extended Euclid. Throws NotInvertible carrying gcd(a, N).
inline std::int64_t mod_inverse(std::int64_t a, std::int64_t modulus) {
  check_modulus(modulus);
  a = normalize(a, modulus);
  std::int64_t old_r = a, r = modulus;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  if (old_r != 1) throw NotInvertible(old_r);
  return normalize(old_s, modulus);
}

inline Matrix reduce(Matrix m, std::int64_t modulus) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = normalize(m(r, c), modulus);
  return m;
}

inline Matrix mat_mul_mod(const Matrix& a, const Matrix& b, std::int64_t modulus) {
  check_modulus(modulus);
  if (a.cols() != b.rows())
    throw DimensionMismatch("cannot multiply " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " by " + std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      std::int64_t acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k)
        acc = (acc + normalize(a(i, k), modulus) * normalize(b(k, j), modulus)) % modulus;
      out(i, j) = acc;
    }
  return out;
}

namespace detail {

using BigMatrix = std::vector<std::vector<BigInt>>;

// Bareiss fraction-free elimination; every division is exact.
inline BigInt bareiss_det(BigMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

inline BigMatrix to_big(const Matrix& a) {
  BigMatrix m(a.rows(), std::vector<BigInt>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m[r][c] = a(r, c);
  return m;
}

inline BigMatrix minor_of(const Matrix& a, std::size_t skip_row, std::size_t skip_col) {
  const std::size_t n = a.rows();
  BigMatrix m;
  m.reserve(n - 1);
  for (std::size_t r = 0; r < n; ++r) {
    if (r == skip_row) continue;
    std::vector<BigInt> row;
    row.reserve(n - 1);
    for (std::size_t c = 0; c < n; ++c)
      if (c != skip_col) row.emplace_back(a(r, c));
    m.push_back(std::move(row));
  }
  return m;
}

}  // namespace detail

inline BigInt det_exact(const Matrix& a) {
  if (!a.square()) throw DimensionMismatch("determinant needs a square matrix");
  return detail::bareiss_det(detail::to_big(a));
}

// adj(A)[i][j] = (-1)^(i+j) * det(A with row j and column i removed), exact.
inline std::vector<std::vector<BigInt>> adjugate_exact(const Matrix& a) {
  if (!a.square()) throw DimensionMismatch("adjugate needs a square matrix");
  const std::size_t n = a.rows();
  std::vector<std::vector<BigInt>> adj(n, std::vector<BigInt>(n));
  if (n == 1) {
    adj[0][0] = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      BigInt cof = detail::bareiss_det(detail::minor_of(a, j, i));
      adj[i][j] = ((i + j) % 2 == 0) ? cof : BigInt(-cof);
    }
  return adj;
}

inline std::int64_t det_gcd(const Matrix& a, std::int64_t modulus) {
  return std::gcd(normalize(det_exact(a), modulus), modulus);
}

inline bool is_invertible_mod(const Matrix& a, std::int64_t modulus) {
  check_modulus(modulus);
  if (!a.square()) throw DimensionMismatch("invertibility needs a square matrix");
  return det_gcd(a, modulus) == 1;
}

inline bool is_invertible_mod(const KeyMatrix& k) { return is_invertible_mod(k.matrix(), k.modulus()); }

inline Matrix mat_inv_mod(const Matrix& a, std::int64_t modulus) {
  check_modulus(modulus);
  if (!a.square()) throw DimensionMismatch("inverse needs a square matrix");
  const std::int64_t det = normalize(det_exact(a), modulus);
  const std::int64_t g = std::gcd(det, modulus);
  if (g != 1) throw NotInvertible(g);
  const std::int64_t det_inv = mod_inverse(det, modulus);
  const auto adj = adjugate_exact(a);
  Matrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      out(r, c) = normalize(normalize(adj[r][c], modulus) * det_inv, modulus);
  return out;
}

inline KeyMatrix mat_inv_mod(const KeyMatrix& k) {
  return KeyMatrix(mat_inv_mod(k.matrix(), k.modulus()), k.modulus());
}

}  // namespace hillperm
