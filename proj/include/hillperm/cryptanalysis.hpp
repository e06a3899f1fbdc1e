#pragma once

// Known-plaintext key recovery for the plain Hill cipher, and a demo showing
// that one bit swap on the ciphertext defeats it.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hillperm/cipher.hpp"
#include "hillperm/modular.hpp"
#include "hillperm/permutation.hpp"

namespace hillperm {

// K' = Y * X^-1 mod N, so that K' * X == Y. Columns of X and Y are blocks.
inline KeyMatrix solve_key(const Matrix& x, const Matrix& y, std::int64_t modulus) {
  if (!x.square() || y.rows() != x.rows() || y.cols() != x.cols())
    throw DimensionMismatch("known-plaintext attack needs square X and Y of the same order");
  return KeyMatrix(mat_mul_mod(reduce(y, modulus), mat_inv_mod(x, modulus), modulus), modulus);
}

// Applies per-entry bit-label shuffles to a ciphertext matrix.
inline Matrix permute_entries(const Matrix& y, const std::vector<ElementPermutation>& perms) {
  Matrix out = y;
  for (const auto& e : perms) {
    if (e.row < 1 || e.row > y.rows() || e.col < 1 || e.col > y.cols())
      throw ConfigError("permuted element outside the matrix");
    out(e.row - 1, e.col - 1) = permute_value(out(e.row - 1, e.col - 1), e.spec);
  }
  return out;
}

struct AttackReport {
  std::int64_t modulus = 0;
  Matrix key;
  Matrix x_train, x_test;
  Matrix y_train, y_test;              // K * X mod N
  Matrix y_train_perm, y_test_perm;    // after the bit shuffle
  std::optional<KeyMatrix> recovered;  // empty when Y'_train X_train^-1 does not exist
  std::optional<Matrix> prediction;    // K'^-1 * Y'_test, empty if K' is singular
  std::string failure;                 // why recovery or prediction was impossible
  bool match = false;

  // Extra comparison against an externally supplied candidate inverse key.
  std::optional<Matrix> reference_key;
  std::optional<Matrix> reference_inverse;
  std::optional<Matrix> reference_prediction;
};

inline AttackReport attack_demo(const KeyMatrix& key, const std::vector<ElementPermutation>& perm, const Matrix& x_train,
                                const Matrix& x_test) {
  const std::int64_t n_mod = key.modulus();
  AttackReport rep;
  rep.modulus = n_mod;
  rep.key = key.matrix();
  rep.x_train = x_train;
  rep.x_test = x_test;
  rep.y_train = mat_mul_mod(key.matrix(), x_train, n_mod);
  rep.y_test = mat_mul_mod(key.matrix(), x_test, n_mod);
  rep.y_train_perm = permute_entries(rep.y_train, perm);
  rep.y_test_perm = permute_entries(rep.y_test, perm);
  try {
    rep.recovered = solve_key(x_train, rep.y_train_perm, n_mod);
  } catch (const NotInvertible& e) {
    rep.failure = std::string("training plaintext not invertible: ") + e.what();
    return rep;
  }
  try {
    const Matrix inv = mat_inv_mod(rep.recovered->matrix(), n_mod);
    rep.prediction = mat_mul_mod(inv, reduce(rep.y_test_perm, n_mod), n_mod);
    rep.match = *rep.prediction == x_test;
  } catch (const NotInvertible& e) {
    rep.failure = std::string("recovered key not invertible: ") + e.what();
  }
  return rep;
}

// Adds a prediction from a candidate key and its inverse (for instance a
// key quoted alongside published example data) next to the solver's.
inline void compare_reference(AttackReport& rep, const Matrix& reference_key, const Matrix& reference_inverse) {
  rep.reference_key = reference_key;
  rep.reference_inverse = reference_inverse;
  rep.reference_prediction = mat_mul_mod(reference_inverse, reduce(rep.y_test_perm, rep.modulus), rep.modulus);
}

inline void print_report(std::ostream& os, const AttackReport& rep) {
  os << "modulus: " << rep.modulus << '\n';
  os << "key K: " << rep.key << '\n';
  os << "X_train: " << rep.x_train << '\n';
  os << "Y_train = K X_train: " << rep.y_train << '\n';
  os << "Y'_train (bit-permuted): " << rep.y_train_perm << '\n';
  os << "X_test: " << rep.x_test << '\n';
  os << "Y_test = K X_test: " << rep.y_test << '\n';
  os << "Y'_test (bit-permuted): " << rep.y_test_perm << '\n';
  if (rep.recovered) {
    os << "recovered K' = Y'_train X_train^-1: " << rep.recovered->matrix() << '\n';
    const bool consistent =
        mat_mul_mod(rep.recovered->matrix(), rep.x_train, rep.modulus) == reduce(rep.y_train_perm, rep.modulus);
    os << "K' X_train == Y'_train: " << (consistent ? "yes" : "no") << '\n';
  }
  if (rep.prediction) os << "prediction K'^-1 Y'_test: " << *rep.prediction << '\n';
  if (!rep.failure.empty()) os << "attack failed: " << rep.failure << '\n';
  if (rep.reference_key) {
    os << "reference key K1: " << *rep.reference_key << '\n';
    os << "reference K1^-1: " << *rep.reference_inverse << '\n';
    os << "reference prediction K1^-1 Y'_test: " << *rep.reference_prediction << '\n';
    const Matrix ref_train = mat_mul_mod(*rep.reference_key, rep.x_train, rep.modulus);
    if (ref_train != reduce(rep.y_train_perm, rep.modulus))
      os << "note: reference K1 X_train = " << ref_train
         << " does not reproduce Y'_train; the solver's K' is the consistent key\n";
  }
  os << "verdict: " << (rep.match ? "match" : "mismatch") << '\n';
}

// L! exactly.
inline BigInt keyspace_factor(unsigned length) {
  BigInt f = 1;
  for (unsigned k = 2; k <= length; ++k) f *= k;
  return f;
}

}  // namespace hillperm
