#pragma once

// Text formats shared by the CLI and tests.
//
//   key file          first line "n N", then n lines of n integers in [0, N)
//   permutation file  one line of comma-separated 1-based gather indices, or
//                     "bits:<w>:<labels>" optionally followed by a line
//                     "elements:<r>,<c>;<r>,<c>..." (default: every entry)
//   ciphertext file   "bytes <L>" then one "c1 c2" line per block row
//   m list            "1..20,50,100"
//   perturbation      "plaintext:<i>:<+d>" or "key:<r>,<c>:<+d>"

#include <charconv>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hillperm/avalanche.hpp"
#include "hillperm/bits.hpp"
#include "hillperm/cipher.hpp"
#include "hillperm/error.hpp"
#include "hillperm/modular.hpp"
#include "hillperm/permutation.hpp"

namespace hillperm::io {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

inline std::int64_t parse_int(std::string_view s, std::string_view what) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ParseError("invalid " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

// ---------------------------------------------------------------------

inline KeyMatrix read_key(std::istream& in) {
  std::int64_t n = 0, modulus = 0;
  if (!(in >> n >> modulus)) throw ParseError("key file: expected header 'n N'");
  if (n < 1 || n > 64) throw ParseError("key file: order must be in [1, 64]");
  Matrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!(in >> m(r, c))) throw ParseError("key file: expected " + std::to_string(n * n) + " entries");
  std::string rest;
  if (in >> rest) throw ParseError("key file: trailing data '" + rest + "'");
  try {
    return KeyMatrix(std::move(m), modulus);
  } catch (const Error& e) {
    throw ParseError(std::string("key file: ") + e.what());
  }
}

inline void write_key(std::ostream& out, const KeyMatrix& key) {
  out << key.order() << ' ' << key.modulus() << '\n';
  for (std::size_t r = 0; r < key.order(); ++r) {
    for (std::size_t c = 0; c < key.order(); ++c) out << (c ? " " : "") << key(r, c);
    out << '\n';
  }
}

// ---------------------------------------------------------------------

struct PermutationFile {
  std::optional<Permutation> gather;
  std::optional<BitLabelSpec> labels;
  std::vector<std::pair<std::size_t, std::size_t>> elements;  // 1-based; empty = all

  // Installs the permutation into an APHC configuration of order cfg.order.
  void apply_to(CipherConfig& cfg) const {
    cfg.permutation.reset();
    cfg.element_selection.clear();
    if (gather) {
      cfg.permutation = *gather;
      return;
    }
    if (elements.empty()) {
      for (std::size_t c = 1; c <= 2; ++c)
        for (std::size_t r = 1; r <= cfg.order; ++r) cfg.element_selection.push_back({r, c, *labels});
    } else {
      for (auto [r, c] : elements) cfg.element_selection.push_back({r, c, *labels});
    }
  }
};

inline BitLabelSpec parse_bitlabels(std::string_view body) {
  // body is "<w>:<l1>,<l2>,..."
  const auto colon = body.find(':');
  if (colon == std::string_view::npos) throw ParseError("bit labels: expected '<width>:<labels>'");
  const int width = static_cast<int>(parse_int(body.substr(0, colon), "bit label width"));
  std::vector<int> labels;
  for (auto part : split(body.substr(colon + 1), ','))
    labels.push_back(static_cast<int>(parse_int(part, "bit label")));
  try {
    return BitLabelSpec(width, std::move(labels));
  } catch (const Error& e) {
    throw ParseError(std::string("bit labels: ") + e.what());
  }
}

inline PermutationFile read_permutation(std::istream& in) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);)
    if (!trim(line).empty()) lines.emplace_back(trim(line));
  if (lines.empty()) throw ParseError("permutation file is empty");
  PermutationFile pf;
  std::string_view first = lines[0];
  if (first.starts_with("bits:")) {
    pf.labels = parse_bitlabels(first.substr(5));
    if (lines.size() > 2) throw ParseError("permutation file: unexpected extra lines");
    if (lines.size() == 2) {
      std::string_view el = lines[1];
      if (!el.starts_with("elements:")) throw ParseError("permutation file: expected 'elements:' line");
      for (auto pair : split(el.substr(9), ';')) {
        const auto rc = split(pair, ',');
        if (rc.size() != 2) throw ParseError("permutation file: element must be '<row>,<col>'");
        const auto r = parse_int(rc[0], "element row"), c = parse_int(rc[1], "element column");
        if (r < 1 || c < 1) throw ParseError("permutation file: element indices are 1-based");
        pf.elements.emplace_back(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
      }
    }
    return pf;
  }
  if (lines.size() != 1) throw ParseError("permutation file: gather form is a single line");
  std::vector<std::size_t> g;
  for (auto part : split(first, ',')) {
    const auto v = parse_int(part, "gather index");
    if (v < 1) throw ParseError("permutation file: gather indices are 1-based");
    g.push_back(static_cast<std::size_t>(v));
  }
  try {
    pf.gather = Permutation(std::move(g));
  } catch (const Error& e) {
    throw ParseError(std::string("permutation file: ") + e.what());
  }
  return pf;
}

inline void write_permutation(std::ostream& out, const Permutation& p) {
  for (std::size_t i = 0; i < p.length(); ++i) out << (i ? "," : "") << p[i];
  out << '\n';
}

// ---------------------------------------------------------------------
// Messages are split into blocks of 2n characters, the tail padded with
// spaces. The ciphertext records the unpadded length.

inline std::vector<PlainBlock> split_message(std::string_view text, std::size_t n) {
  const std::size_t width = 2 * n;
  std::string padded(text);
  if (padded.empty() || padded.size() % width != 0) padded.append(width - padded.size() % width, ' ');
  std::vector<PlainBlock> blocks;
  for (std::size_t off = 0; off < padded.size(); off += width) {
    try {
      blocks.push_back(encode_block(std::string_view(padded).substr(off, width), n));
    } catch (const NonAsciiCharacter& e) {
      throw NonAsciiCharacter(off + e.position());
    }
  }
  return blocks;
}

struct Ciphertext {
  std::size_t length = 0;
  std::vector<PlainBlock> blocks;
};

inline void write_ciphertext(std::ostream& out, const Ciphertext& ct) {
  out << "bytes " << ct.length << '\n';
  for (const auto& b : ct.blocks)
    for (std::size_t r = 0; r < b.order(); ++r) out << b(r, 0) << ' ' << b(r, 1) << '\n';
}

inline Ciphertext read_ciphertext(std::istream& in, std::size_t n) {
  std::string tag;
  Ciphertext ct;
  if (!(in >> tag >> ct.length) || tag != "bytes") throw ParseError("ciphertext: expected header 'bytes <L>'");
  std::vector<std::int64_t> codes;
  for (std::string tok; in >> tok;) codes.push_back(parse_int(tok, "ciphertext code"));
  if (codes.size() % (2 * n) != 0)
    throw ParseError("ciphertext: " + std::to_string(codes.size()) + " codes is not a whole number of blocks");
  const std::size_t expected = ct.length == 0 ? 2 * n : (ct.length + 2 * n - 1) / (2 * n) * (2 * n);
  if (codes.size() != expected) throw ParseError("ciphertext: recorded length does not fit the block count");
  for (std::size_t off = 0; off < codes.size(); off += 2 * n) {
    Matrix m(n, 2);
    for (std::size_t r = 0; r < n; ++r) {
      m(r, 0) = codes[off + 2 * r];
      m(r, 1) = codes[off + 2 * r + 1];
    }
    try {
      ct.blocks.emplace_back(std::move(m));
    } catch (const Error& e) {
      throw ParseError(std::string("ciphertext: ") + e.what());
    }
  }
  return ct;
}

// ---------------------------------------------------------------------

inline std::vector<int> parse_m_list(std::string_view s) {
  std::vector<int> out;
  for (auto part : split(s, ',')) {
    if (part.empty()) throw ParseError("m list: empty entry");
    const auto dots = part.find("..");
    if (dots == std::string_view::npos) {
      const auto v = parse_int(part, "iteration count");
      if (v < 0) throw ParseError("m list: iteration counts are >= 0");
      out.push_back(static_cast<int>(v));
      continue;
    }
    const auto lo = parse_int(part.substr(0, dots), "range start");
    const auto hi = parse_int(part.substr(dots + 2), "range end");
    if (lo < 0 || hi < lo || hi - lo > 100000) throw ParseError("m list: bad range '" + std::string(part) + "'");
    for (auto v = lo; v <= hi; ++v) out.push_back(static_cast<int>(v));
  }
  return out;
}

inline Perturbation parse_perturbation(std::string_view s) {
  const auto parts = split(s, ':');
  if (parts.size() != 3) throw ParseError("perturbation: expected '<target>:<position>:<delta>'");
  const auto delta = parse_int(parts[2], "perturbation delta");
  if (parts[0] == "plaintext") {
    const auto idx = parse_int(parts[1], "character index");
    if (idx < 1) throw ParseError("perturbation: character index is 1-based");
    return Perturbation::plaintext_char(static_cast<std::size_t>(idx), delta);
  }
  if (parts[0] == "key") {
    const auto rc = split(parts[1], ',');
    if (rc.size() != 2) throw ParseError("perturbation: key position must be '<row>,<col>'");
    const auto r = parse_int(rc[0], "key row"), c = parse_int(rc[1], "key column");
    if (r < 1 || c < 1) throw ParseError("perturbation: key position is 1-based");
    return Perturbation::key_entry(static_cast<std::size_t>(r), static_cast<std::size_t>(c), delta);
  }
  throw ParseError("perturbation: target must be 'plaintext' or 'key'");
}

}  // namespace hillperm::io
