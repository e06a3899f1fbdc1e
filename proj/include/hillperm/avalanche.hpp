#pragma once

// Avalanche measurements: flip one plaintext character or one key entry by
// a small delta, encrypt both versions and count differing ciphertext bits.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hillperm/bits.hpp"
#include "hillperm/cipher.hpp"
#include "hillperm/error.hpp"

namespace hillperm {

struct Perturbation {
  enum class Target { Plaintext, Key };

  Target target = Target::Plaintext;
  // Plaintext: 1-based character index in `index`. Key: 1-based (row, col).
  std::size_t index = 1;
  std::size_t row = 1;
  std::size_t col = 1;
  std::int64_t delta = 1;

  static Perturbation plaintext_char(std::size_t index, std::int64_t delta = 1) {
    return {Target::Plaintext, index, 0, 0, delta};
  }
  static Perturbation key_entry(std::size_t row, std::size_t col, std::int64_t delta = 1) {
    return {Target::Key, 0, row, col, delta};
  }
};

// Applies the perturbation; the changed value wraps mod N.
inline PlainBlock perturb_block(const PlainBlock& plain, const Perturbation& p, std::int64_t modulus) {
  const std::size_t n = plain.order();
  if (p.index < 1 || p.index > 2 * n)
    throw ConfigError("character index " + std::to_string(p.index) + " outside [1, " + std::to_string(2 * n) + "]");
  const std::size_t r = (p.index - 1) % n, c = (p.index - 1) / n;
  return plain.with(r, c, normalize(plain(r, c) + p.delta, modulus));
}

inline KeyMatrix perturb_key(const KeyMatrix& key, const Perturbation& p) {
  if (p.row < 1 || p.row > key.order() || p.col < 1 || p.col > key.order())
    throw ConfigError("key position (" + std::to_string(p.row) + "," + std::to_string(p.col) + ") outside the key");
  Matrix m = key.matrix();
  m(p.row - 1, p.col - 1) = normalize(m(p.row - 1, p.col - 1) + p.delta, key.modulus());
  return KeyMatrix(std::move(m), key.modulus());
}

inline std::size_t measure_avalanche(const CipherConfig& cfg, const KeyMatrix& key, const PlainBlock& plain,
                                     const Perturbation& pert) {
  const PlainBlock base = encrypt(cfg, key, plain);
  if (pert.target == Perturbation::Target::Plaintext)
    return hamming(base, encrypt(cfg, key, perturb_block(plain, pert, cfg.modulus)));
  return hamming(base, encrypt(cfg, perturb_key(key, pert), plain));
}

struct AvalancheRow {
  int m = 0;
  std::optional<std::size_t> plaintext_bits;
  std::optional<std::size_t> key_bits;
};

struct AvalancheReport {
  CipherConfig config;
  std::vector<AvalancheRow> rows;
  std::size_t total_bits = 0;
};

// One row per entry of m_list, in list order. Either perturbation may be
// absent; its column is then left empty.
inline AvalancheReport sweep_m(const CipherConfig& base, const KeyMatrix& key, const PlainBlock& plain,
                               const std::optional<Perturbation>& plain_pert,
                               const std::optional<Perturbation>& key_pert, const std::vector<int>& m_list) {
  if (m_list.empty()) throw ConfigError("iteration list is empty");
  AvalancheReport report{base, {}, kRowBits * plain.order()};
  for (int m : m_list) {
    CipherConfig cfg = base;
    cfg.iterations = m;
    AvalancheRow row{m, std::nullopt, std::nullopt};
    if (plain_pert) row.plaintext_bits = measure_avalanche(cfg, key, plain, *plain_pert);
    if (key_pert) row.key_bits = measure_avalanche(cfg, key, plain, *key_pert);
    report.rows.push_back(row);
  }
  return report;
}

inline void write_csv(std::ostream& os, const AvalancheReport& report) {
  os << "m,plaintext_bits,key_bits,total_bits\n";
  for (const auto& row : report.rows) {
    os << row.m << ',';
    if (row.plaintext_bits) os << *row.plaintext_bits;
    os << ',';
    if (row.key_bits) os << *row.key_bits;
    os << ',' << report.total_bits << '\n';
  }
}

struct CharacterRow {
  std::size_t index = 0;  // 1-based
  std::int64_t from = 0;
  std::int64_t to = 0;
  std::size_t bits = 0;
};

// Bits changed when each plaintext character in turn is moved by delta.
inline std::vector<CharacterRow> character_sweep(const CipherConfig& cfg, const KeyMatrix& key, const PlainBlock& plain,
                                                 std::int64_t delta = 1) {
  const std::size_t n = plain.order();
  std::vector<CharacterRow> rows;
  rows.reserve(2 * n);
  for (std::size_t i = 1; i <= 2 * n; ++i) {
    const auto pert = Perturbation::plaintext_char(i, delta);
    const auto from = plain((i - 1) % n, (i - 1) / n);
    rows.push_back({i, from, normalize(from + delta, cfg.modulus), measure_avalanche(cfg, key, plain, pert)});
  }
  return rows;
}

inline void write_character_csv(std::ostream& os, const std::vector<CharacterRow>& rows) {
  os << "index,from,to,bits\n";
  for (const auto& r : rows) os << r.index << ',' << r.from << ',' << r.to << ',' << r.bits << '\n';
}

// Mean avalanche of an APHC configuration over several element selections.
inline double average_over_selections(const CipherConfig& base, const KeyMatrix& key, const PlainBlock& plain,
                                      const Perturbation& pert,
                                      const std::vector<std::vector<ElementPermutation>>& selections) {
  if (selections.empty()) throw ConfigError("no element selections to average over");
  double sum = 0;
  for (const auto& sel : selections) {
    CipherConfig cfg = base;
    cfg.variant = Variant::APHC;
    cfg.permutation.reset();
    cfg.element_selection = sel;
    sum += static_cast<double>(measure_avalanche(cfg, key, plain, pert));
  }
  return sum / static_cast<double>(selections.size());
}

}  // namespace hillperm
