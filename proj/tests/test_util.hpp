#pragma once

#include <cstdint>
#include <random>

#include "hillperm/hillperm.hpp"

namespace hillperm::testing {

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> d(0, bound - 1);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = d(rng);
  return m;
}

inline Matrix random_invertible(std::mt19937_64& rng, std::size_t n, std::int64_t modulus) {
  for (;;) {
    Matrix m = random_matrix(rng, n, n, modulus);
    if (is_invertible_mod(m, modulus)) return m;
  }
}

inline PlainBlock random_block(std::mt19937_64& rng, std::size_t n, std::int64_t bound = 128) {
  return PlainBlock(random_matrix(rng, n, 2, bound));
}

inline BitMatrix random_bits(std::mt19937_64& rng, std::size_t n) {
  std::bernoulli_distribution coin(0.5);
  BitMatrix b(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < kRowBits; ++c) b(r, c) = coin(rng);
  return b;
}

inline Permutation random_permutation(std::mt19937_64& rng, std::size_t length) {
  auto g = Permutation::identity(length).gather();
  std::shuffle(g.begin(), g.end(), rng);
  return Permutation(std::move(g));
}

}  // namespace hillperm::testing
