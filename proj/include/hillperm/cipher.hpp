#pragma once

// Hill cipher and its permutation-strengthened variants.
//
//   P^0 = P
//   for i = 1..m:  P^i = permute(K * P^(i-1) mod N)
//   C = K * P^m mod N   (only when the additional multiplication is on)
//
// HC is the bare C = K * P. Decryption runs the chain backwards with K^-1.

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hillperm/bits.hpp"
#include "hillperm/error.hpp"
#include "hillperm/modular.hpp"
#include "hillperm/permutation.hpp"

namespace hillperm {

enum class Variant { HC, HCML, HCMW, CSHC, APHC };

inline std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::HC: return "hc";
    case Variant::HCML: return "hcml";
    case Variant::HCMW: return "hcmw";
    case Variant::CSHC: return "cshc";
    case Variant::APHC: return "aphc";
  }
  return "?";
}

inline Variant parse_variant(std::string_view s) {
  for (auto v : {Variant::HC, Variant::HCML, Variant::HCMW, Variant::CSHC, Variant::APHC})
    if (variant_name(v) == s) return v;
  throw ConfigError("unknown variant '" + std::string(s) + "'");
}

// Bit-label shuffle of a single block entry, (row, col) 1-based.
struct ElementPermutation {
  std::size_t row = 1;
  std::size_t col = 1;
  BitLabelSpec spec;

  friend bool operator==(const ElementPermutation&, const ElementPermutation&) = default;
};

struct CipherConfig {
  Variant variant = Variant::HC;
  std::size_t order = 8;
  std::int64_t modulus = 128;
  int iterations = 0;
  bool additional_multiplication = true;
  // APHC only: exactly one of these.
  std::optional<Permutation> permutation;
  std::vector<ElementPermutation> element_selection;

  // HCML/HCMW: m = 16 with the final multiplication. CSHC/APHC: m = 1 with
  // the final multiplication.
  static CipherConfig defaults(Variant v, std::size_t n = 8, std::int64_t modulus = 128) {
    CipherConfig cfg;
    cfg.variant = v;
    cfg.order = n;
    cfg.modulus = modulus;
    cfg.iterations = (v == Variant::HCML || v == Variant::HCMW) ? 16 : (v == Variant::HC ? 0 : 1);
    cfg.additional_multiplication = true;
    return cfg;
  }
};

inline void validate(const CipherConfig& cfg) {
  check_modulus(cfg.modulus);
  if (cfg.order == 0) throw ConfigError("block order must be >= 1");
  if (cfg.iterations < 0) throw ConfigError("iteration count must be >= 0");
  if (cfg.variant == Variant::HC) {
    if (cfg.modulus > kCharLimit) throw ConfigError("HC block codes need modulus <= 128");
    return;
  }
  if (cfg.modulus != kCharLimit)
    throw ConfigError("bit-permuted variants act on 7-bit codes and need modulus 128");
  if (cfg.variant == Variant::HCML) require_even(cfg.order);
  if (cfg.variant == Variant::APHC) {
    const bool has_full = cfg.permutation.has_value();
    const bool has_elements = !cfg.element_selection.empty();
    if (has_full == has_elements)
      throw MissingPermutation("APHC needs exactly one of a full permutation or an element selection");
    if (has_full && cfg.permutation->length() != cfg.order * kRowBits)
      throw LengthMismatch("APHC permutation must have length 14n = " + std::to_string(cfg.order * kRowBits));
    for (const auto& e : cfg.element_selection) {
      if (e.row < 1 || e.row > cfg.order || e.col < 1 || e.col > 2)
        throw ConfigError("element (" + std::to_string(e.row) + "," + std::to_string(e.col) +
                          ") outside the block");
      if (e.spec.width() > kCharBits) throw ConfigError("element bit permutation wider than 7 bits");
    }
  }
}

inline void validate(const CipherConfig& cfg, const KeyMatrix& key) {
  validate(cfg);
  if (key.order() != cfg.order)
    throw DimensionMismatch("key order " + std::to_string(key.order()) + " does not match block order " +
                            std::to_string(cfg.order));
  if (key.modulus() != cfg.modulus) throw ConfigError("key modulus does not match cipher modulus");
}

// The interlace key schedule keeps entries below 64. Arithmetic is mod 128
// regardless, so this is reported, not enforced.
inline std::optional<std::string> key_bound_warning(const CipherConfig& cfg, const KeyMatrix& key) {
  if (cfg.variant != Variant::HCML) return std::nullopt;
  for (auto v : key.matrix().data())
    if (v >= 64) return "HCML key entry " + std::to_string(v) + " is not below 64";
  return std::nullopt;
}

inline PlainBlock permute_block(const CipherConfig& cfg, const PlainBlock& block) {
  switch (cfg.variant) {
    case Variant::HC: return block;
    case Variant::HCML: return from_bits(interlace(to_bits(block)));
    case Variant::HCMW: return from_bits(interweave(to_bits(block)));
    case Variant::CSHC: return from_bits(column_swap(to_bits(block)));
    case Variant::APHC: {
      if (cfg.permutation) return from_bits(apply_permutation(to_bits(block), *cfg.permutation));
      PlainBlock out = block;
      for (const auto& e : cfg.element_selection)
        out = out.with(e.row - 1, e.col - 1, permute_value(out(e.row - 1, e.col - 1), e.spec));
      return out;
    }
  }
  return block;
}

inline PlainBlock unpermute_block(const CipherConfig& cfg, const PlainBlock& block) {
  switch (cfg.variant) {
    case Variant::HC: return block;
    case Variant::HCML: return from_bits(interlace_inverse(to_bits(block)));
    case Variant::HCMW: return from_bits(interweave_inverse(to_bits(block)));
    case Variant::CSHC: return from_bits(column_swap(to_bits(block)));
    case Variant::APHC: {
      if (cfg.permutation)
        return from_bits(apply_permutation(to_bits(block), invert_permutation(*cfg.permutation)));
      PlainBlock out = block;
      for (auto it = cfg.element_selection.rbegin(); it != cfg.element_selection.rend(); ++it)
        out = out.with(it->row - 1, it->col - 1,
                       permute_value(out(it->row - 1, it->col - 1), invert_bitlabels(it->spec)));
      return out;
    }
  }
  return block;
}

inline PlainBlock multiply(const Matrix& key, const PlainBlock& block, std::int64_t modulus) {
  return PlainBlock(mat_mul_mod(key, block.matrix(), modulus));
}

// Intermediate values of one encryption: products[i] = K * P^i and
// rounds[i] = P^(i+1).
struct EncryptTrace {
  std::vector<PlainBlock> products;
  std::vector<PlainBlock> rounds;
  PlainBlock output;
};

inline void check_block(const CipherConfig& cfg, const PlainBlock& block) {
  if (block.order() != cfg.order)
    throw DimensionMismatch("block order " + std::to_string(block.order()) + " does not match " +
                            std::to_string(cfg.order));
  for (auto v : block.matrix().data())
    if (v >= cfg.modulus)
      throw ConfigError("block entry " + std::to_string(v) + " is not a residue mod " + std::to_string(cfg.modulus));
}

inline EncryptTrace encrypt_trace(const CipherConfig& cfg, const KeyMatrix& key, const PlainBlock& plain) {
  validate(cfg, key);
  check_block(cfg, plain);
  EncryptTrace trace;
  if (cfg.variant == Variant::HC) {
    trace.output = multiply(key.matrix(), plain, cfg.modulus);
    trace.products.push_back(trace.output);
    return trace;
  }
  PlainBlock p = plain;
  for (int i = 0; i < cfg.iterations; ++i) {
    trace.products.push_back(multiply(key.matrix(), p, cfg.modulus));
    p = permute_block(cfg, trace.products.back());
    trace.rounds.push_back(p);
  }
  if (cfg.additional_multiplication) {
    p = multiply(key.matrix(), p, cfg.modulus);
    trace.products.push_back(p);
  }
  trace.output = std::move(p);
  return trace;
}

inline PlainBlock encrypt(const CipherConfig& cfg, const KeyMatrix& key, const PlainBlock& plain) {
  return encrypt_trace(cfg, key, plain).output;
}

// Decryption with a precomputed inverse key.
inline PlainBlock decrypt_with_inverse(const CipherConfig& cfg, const KeyMatrix& inverse, const PlainBlock& cipher) {
  validate(cfg, inverse);
  check_block(cfg, cipher);
  if (cfg.variant == Variant::HC) return multiply(inverse.matrix(), cipher, cfg.modulus);
  PlainBlock p = cipher;
  if (cfg.additional_multiplication) p = multiply(inverse.matrix(), p, cfg.modulus);
  for (int i = 0; i < cfg.iterations; ++i) p = multiply(inverse.matrix(), unpermute_block(cfg, p), cfg.modulus);
  return p;
}

inline PlainBlock decrypt(const CipherConfig& cfg, const KeyMatrix& key, const PlainBlock& cipher) {
  validate(cfg, key);
  return decrypt_with_inverse(cfg, mat_inv_mod(key), cipher);
}

// Holds a configuration, its key and the inverse key for repeated use.
class BlockCipher {
 public:
  BlockCipher(CipherConfig cfg, KeyMatrix key)
      : cfg_(std::move(cfg)), key_(std::move(key)), inverse_(mat_inv_mod(key_)) {
    validate(cfg_, key_);
  }

  const CipherConfig& config() const noexcept { return cfg_; }
  const KeyMatrix& key() const noexcept { return key_; }

  PlainBlock encrypt(const PlainBlock& p) const { return hillperm::encrypt(cfg_, key_, p); }
  PlainBlock decrypt(const PlainBlock& c) const { return decrypt_with_inverse(cfg_, inverse_, c); }

 private:
  CipherConfig cfg_;
  KeyMatrix key_;
  KeyMatrix inverse_;
};

// ---------------------------------------------------------------------

namespace detail {

// Unbiased draw from [0, bound) using only the raw 64-bit engine output, so
// a seed gives the same key on every standard library.
inline std::int64_t draw_below(std::mt19937_64& rng, std::int64_t bound) {
  const auto b = static_cast<std::uint64_t>(bound);
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % b;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<std::int64_t>(x % b);
}

}  // namespace detail

// Uniform matrix with entries below max_entry, resampled until invertible.
inline KeyMatrix keygen(std::size_t n, std::int64_t modulus, std::int64_t max_entry, std::uint64_t seed) {
  check_modulus(modulus);
  if (n == 0) throw ConfigError("key order must be >= 1");
  if (max_entry > modulus) throw ConfigError("entry bound exceeds modulus");
  // With entries in {0, 1} available, the identity is invertible.
  if (max_entry < 2) throw BoundTooSmall("no invertible matrix has all entries below " + std::to_string(max_entry));
  std::mt19937_64 rng(seed);
  for (;;) {
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = detail::draw_below(rng, max_entry);
    if (is_invertible_mod(m, modulus)) return KeyMatrix(std::move(m), modulus);
  }
}

}  // namespace hillperm
