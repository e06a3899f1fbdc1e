#pragma once

// Reference keys, plaintexts and published measurements used by the CLI
// presets, the golden tests and the acceptance harness.

#include <array>
#include <string_view>
#include <vector>

#include "hillperm/cipher.hpp"
#include "hillperm/modular.hpp"
#include "hillperm/permutation.hpp"

namespace hillperm::presets {

// Interlace reference key (entries < 64).
inline KeyMatrix k1() {
  return KeyMatrix(Matrix{{53, 62, 24, 33, 49, 18, 17, 43},
                          {45, 12, 63, 29, 60, 35, 58, 11},
                          {8, 41, 46, 30, 48, 32, 5, 51},
                          {47, 9, 38, 42, 2, 59, 27, 61},
                          {57, 20, 6, 31, 16, 26, 22, 25},
                          {56, 37, 13, 52, 3, 54, 15, 21},
                          {36, 40, 44, 10, 19, 39, 55, 4},
                          {14, 1, 23, 50, 34, 0, 7, 28}},
                   128);
}

// Interweave reference key (entries < 128).
inline KeyMatrix k2() {
  return KeyMatrix(Matrix{{53, 62, 124, 33, 49, 118, 107, 43},
                          {45, 112, 63, 29, 60, 35, 58, 11},
                          {88, 41, 46, 30, 48, 32, 105, 51},
                          {47, 99, 38, 42, 112, 59, 27, 61},
                          {57, 20, 6, 31, 106, 126, 22, 125},
                          {56, 37, 113, 52, 3, 54, 105, 21},
                          {36, 40, 43, 100, 119, 39, 55, 94},
                          {14, 81, 23, 50, 34, 70, 7, 28}},
                   128);
}

// K2 with entry (4,3) = 36 instead of 38. This is the key that actually
// produces development_product() and the published column-swap sweep; the
// printed (4,3) = 38 gives row 4 = (108, 41). Both forms have an even
// determinant, so neither decrypts mod 128.
inline KeyMatrix k2_product_consistent() {
  Matrix m = k2().matrix();
  m(3, 2) = 36;
  return KeyMatrix(std::move(m), 128);
}

inline constexpr std::string_view kWorldBank = "The World Bank h";
// 15 visible characters plus the trailing space that completes the block.
inline constexpr std::string_view kDevelopment = "The development ";

// K2 * encode("The development ") mod 128.
inline PlainBlock development_product() {
  return PlainBlock{{27, 112}, {17, 83}, {83, 113}, {34, 73}, {37, 25}, {38, 86}, {86, 77}, {127, 11}};
}

// Column swap applied once to development_product().
inline PlainBlock development_column_swapped() {
  return PlainBlock{{49, 90}, {19, 81}, {113, 83}, {8, 99}, {13, 49}, {6, 118}, {92, 71}, {95, 43}};
}

// Known-plaintext example mod 26.
struct AttackExample {
  std::int64_t modulus = 26;
  Matrix key{{19, 12}, {21, 13}};
  Matrix x_train{{12, 3}, {5, 4}};
  Matrix x_test{{4, 2}, {12, 3}};
  // Swap b2 and b1 of the 5-bit entry (2,1).
  ElementPermutation perm{2, 1, BitLabelSpec(5, {4, 3, 1, 2, 0})};
  // Key as printed alongside the example, and its inverse. It does not
  // reproduce the permuted training ciphertext; see attack_demo.
  Matrix printed_key{{19, 12}, {10, 13}};
  Matrix printed_key_inverse{{13, 4}, {12, 11}};
};

// Published avalanche counts for m = 1..20, 50, 100.
struct IterationRow {
  int m;
  int hcml_plain;
  int hcmw_plain;
  int hcml_key;
  int hcmw_key;
};

inline const std::vector<IterationRow>& published_iteration_table() {
  static const std::vector<IterationRow> rows = {
      {1, 56, 64, 30, 51},   {2, 52, 59, 55, 61},   {3, 53, 54, 57, 59},   {4, 56, 53, 58, 55},
      {5, 53, 40, 56, 56},   {6, 62, 61, 58, 56},   {7, 57, 59, 59, 48},   {8, 61, 54, 62, 61},
      {9, 44, 63, 61, 62},   {10, 62, 62, 47, 60},  {11, 53, 64, 51, 54},  {12, 56, 60, 60, 56},
      {13, 57, 50, 49, 66},  {14, 52, 54, 57, 64},  {15, 60, 62, 61, 57},  {16, 65, 43, 55, 57},
      {17, 51, 60, 66, 56},  {18, 51, 60, 53, 62},  {19, 68, 53, 62, 50},  {20, 59, 59, 57, 53},
      {50, 58, 63, 56, 49},  {100, 59, 53, 58, 61},
  };
  return rows;
}

inline std::vector<int> iteration_sweep_list() {
  std::vector<int> ms;
  for (int m = 1; m <= 20; ++m) ms.push_back(m);
  ms.push_back(50);
  ms.push_back(100);
  return ms;
}

// Published column-swap sweep (AD on, original key), one value per
// character index; the two space characters (indices 4 and 16) are not
// listed and are stored as -1.
inline const std::array<std::array<int, 16>, 2>& published_column_swap_sweep() {
  static const std::array<std::array<int, 16>, 2> rows = {{
      {44, 42, 40, -1, 60, 56, 55, 56, 51, 48, 49, 51, 47, 53, 45, -1},  // m = 1
      {44, 55, 55, -1, 60, 45, 50, 45, 51, 51, 47, 58, 54, 44, 42, -1},  // m = 2
  }};
  return rows;
}

// Per-element bit shuffles averaged over in the APHC study: z swapped bits,
// labels MSB first, and the two (row, col) elements they act on.
struct ElementShufflePreset {
  int swapped_bits;
  std::array<int, 7> labels;
  std::array<std::pair<std::size_t, std::size_t>, 2> elements;

  std::vector<ElementPermutation> selection() const {
    std::vector<ElementPermutation> out;
    for (auto [r, c] : elements)
      out.push_back({r, c, BitLabelSpec(7, std::vector<int>(labels.begin(), labels.end()))});
    return out;
  }
};

inline const std::vector<ElementShufflePreset>& element_shuffle_presets() {
  static const std::vector<ElementShufflePreset> rows = {
      {2, {6, 4, 5, 3, 2, 1, 0}, {{{1, 1}, {3, 1}}}},
      {3, {6, 5, 4, 3, 0, 2, 1}, {{{3, 2}, {7, 1}}}},
      {4, {6, 2, 3, 4, 5, 1, 0}, {{{7, 2}, {1, 2}}}},
      {5, {2, 3, 4, 5, 1, 6, 0}, {{{7, 2}, {5, 2}}}},
      {6, {1, 2, 3, 4, 5, 6, 0}, {{{6, 2}, {4, 1}}}},
      {7, {0, 1, 2, 3, 4, 5, 6}, {{{3, 2}, {1, 2}}}},
  };
  return rows;
}

}  // namespace hillperm::presets
