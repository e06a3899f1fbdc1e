// hillperm: command-line front end for the Hill cipher variants, avalanche
// measurements, the known-plaintext attack demo and the non-linearity
// witness.
//
// Exit codes: 0 success, 1 domain or input-file error, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hillperm/hillperm.hpp"

namespace {

using namespace hillperm;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

// Writes to stdout for "-" or an empty path.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw Error("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

KeyMatrix preset_key(const std::string& name) {
  if (name == "k1") return presets::k1();
  if (name == "k2") return presets::k2();
  if (name == "k2-consistent") return presets::k2_product_consistent();
  throw UsageError("unknown key preset '" + name + "'");
}

struct KeyOptions {
  std::string file;
  std::string preset;

  void add(CLI::App* cmd) {
    auto* f = cmd->add_option("--key", file, "key matrix file");
    auto* p = cmd->add_option("--key-preset", preset, "built-in key: k1, k2, k2-consistent");
    f->excludes(p);
  }
  KeyMatrix load() const {
    if (!preset.empty()) return preset_key(preset);
    if (file.empty()) throw UsageError("one of --key or --key-preset is required");
    std::istringstream in(read_file(file));
    return io::read_key(in);
  }
};

struct CipherOptions {
  std::string variant;
  std::optional<int> iterations;
  std::optional<bool> ad;
  std::string perm_file;
  std::optional<int> perm_preset;

  void add(CLI::App* cmd) {
    cmd->add_option("--variant", variant, "hc, hcml, hcmw, cshc or aphc")
        ->required()
        ->check(CLI::IsMember({"hc", "hcml", "hcmw", "cshc", "aphc"}));
    cmd->add_option("--m", iterations, "iteration count (default: 16 for hcml/hcmw, 1 for cshc/aphc)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_flag("--ad,!--no-ad", ad, "apply the final key multiplication (default on)");
    auto* pf = cmd->add_option("--perm", perm_file, "APHC permutation file");
    auto* pp = cmd->add_option("--perm-preset", perm_preset, "APHC element shuffle preset, swapped bits z in 2..7")
                   ->check(CLI::Range(2, 7));
    pf->excludes(pp);
  }

  CipherConfig build(const KeyMatrix& key) const {
    CipherConfig cfg = CipherConfig::defaults(parse_variant(variant), key.order(), key.modulus());
    if (iterations) cfg.iterations = *iterations;
    if (ad) cfg.additional_multiplication = *ad;
    if (!perm_file.empty()) {
      if (cfg.variant != Variant::APHC) throw UsageError("--perm only applies to aphc");
      std::istringstream in(read_file(perm_file));
      io::read_permutation(in).apply_to(cfg);
    } else if (perm_preset) {
      if (cfg.variant != Variant::APHC) throw UsageError("--perm-preset only applies to aphc");
      cfg.element_selection = presets::element_shuffle_presets()[static_cast<std::size_t>(*perm_preset - 2)].selection();
    }
    validate(cfg, key);
    return cfg;
  }
};

void warn_key(const CipherConfig& cfg, const KeyMatrix& key) {
  if (auto w = key_bound_warning(cfg, key)) std::cerr << "warning: " << *w << '\n';
}

// ---------------------------------------------------------------------

void add_keygen(CLI::App& app) {
  struct Opts {
    std::size_t n = 8;
    std::int64_t modulus = 128;
    std::optional<std::int64_t> max_entry;
    std::uint64_t seed = 0;
    std::string out;
  };
  auto opts = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("keygen", "generate a random invertible key matrix");
  cmd->add_option("--n", opts->n, "matrix order")->required()->check(CLI::Range(1, 64));
  cmd->add_option("--modulus", opts->modulus, "modulus N")->check(CLI::Range(std::int64_t{2}, kMaxModulus));
  cmd->add_option("--max-entry", opts->max_entry, "entries are drawn below this bound (default N)");
  cmd->add_option("--seed", opts->seed, "random seed");
  cmd->add_option("--out", opts->out, "output file (default stdout)");
  cmd->callback([opts] {
    const auto key = keygen(opts->n, opts->modulus, opts->max_entry.value_or(opts->modulus), opts->seed);
    Output out(opts->out);
    io::write_key(out.stream(), key);
  });
}

void add_encrypt(CLI::App& app) {
  struct Opts {
    KeyOptions key;
    CipherOptions cipher;
    std::string in = "-";
    std::string out;
  };
  auto opts = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("encrypt", "encrypt a text message block by block");
  opts->key.add(cmd);
  opts->cipher.add(cmd);
  cmd->add_option("--in", opts->in, "plaintext file (default stdin)");
  cmd->add_option("--out", opts->out, "ciphertext file (default stdout)");
  cmd->callback([opts] {
    const auto key = opts->key.load();
    const auto cfg = opts->cipher.build(key);
    warn_key(cfg, key);
    const std::string text = read_file(opts->in);
    io::Ciphertext ct{text.size(), {}};
    for (const auto& block : io::split_message(text, cfg.order)) ct.blocks.push_back(encrypt(cfg, key, block));
    Output out(opts->out);
    io::write_ciphertext(out.stream(), ct);
  });
}

void add_decrypt(CLI::App& app) {
  struct Opts {
    KeyOptions key;
    CipherOptions cipher;
    std::string in = "-";
    std::string out;
  };
  auto opts = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("decrypt", "decrypt a ciphertext file");
  opts->key.add(cmd);
  opts->cipher.add(cmd);
  cmd->add_option("--in", opts->in, "ciphertext file (default stdin)");
  cmd->add_option("--out", opts->out, "plaintext file (default stdout)");
  cmd->callback([opts] {
    const auto key = opts->key.load();
    const BlockCipher cipher(opts->cipher.build(key), key);
    std::istringstream in(read_file(opts->in));
    const auto ct = io::read_ciphertext(in, key.order());
    std::string text;
    for (const auto& block : ct.blocks) text += decode_block(cipher.decrypt(block));
    text.resize(ct.length);
    Output out(opts->out);
    out.stream() << text;
  });
}

void add_avalanche(CLI::App& app) {
  struct Opts {
    KeyOptions key;
    CipherOptions cipher;
    std::string plaintext;
    std::string plaintext_preset;
    std::string m_list = "1";
    std::vector<std::string> perturb;
    bool characters = false;
    std::string out;
  };
  auto opts = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("avalanche", "count ciphertext bits changed by a one-step perturbation");
  opts->key.add(cmd);
  opts->cipher.add(cmd);
  auto* pt = cmd->add_option("--plaintext", opts->plaintext, "plaintext block, exactly 2n characters");
  auto* pp = cmd->add_option("--plaintext-preset", opts->plaintext_preset, "world-bank or development")
                 ->check(CLI::IsMember({"world-bank", "development"}));
  pt->excludes(pp);
  cmd->add_option("--m-list", opts->m_list, "iteration counts, e.g. 1..20,50,100");
  cmd->add_option("--perturb", opts->perturb, "plaintext:<i>:<+d> or key:<r>,<c>:<+d> (at most one of each)");
  cmd->add_flag("--characters", opts->characters, "sweep every plaintext character instead of iteration counts");
  cmd->add_option("--out", opts->out, "CSV output file (default stdout)");
  cmd->callback([opts] {
    const auto key = opts->key.load();
    const auto cfg = opts->cipher.build(key);
    warn_key(cfg, key);
    std::string text = opts->plaintext;
    if (opts->plaintext_preset == "world-bank") text = presets::kWorldBank;
    if (opts->plaintext_preset == "development") text = presets::kDevelopment;
    if (text.empty()) throw UsageError("one of --plaintext or --plaintext-preset is required");
    const auto plain = encode_block(text, cfg.order);

    std::cerr << "# variant=" << variant_name(cfg.variant) << " n=" << cfg.order << " N=" << cfg.modulus
              << " ad=" << (cfg.additional_multiplication ? "true" : "false") << '\n';
    Output out(opts->out);
    if (opts->characters) {
      if (!opts->perturb.empty()) throw UsageError("--characters does not take --perturb");
      write_character_csv(out.stream(), character_sweep(cfg, key, plain));
      return;
    }
    std::optional<Perturbation> plain_pert, key_pert;
    for (const auto& spec : opts->perturb) {
      Perturbation p;
      try {
        p = io::parse_perturbation(spec);
      } catch (const ParseError& e) {
        throw UsageError(e.what());
      }
      auto& slot = p.target == Perturbation::Target::Plaintext ? plain_pert : key_pert;
      if (slot) throw UsageError("at most one plaintext and one key perturbation");
      slot = p;
    }
    if (!plain_pert && !key_pert) plain_pert = Perturbation::plaintext_char(1);
    std::vector<int> ms;
    try {
      ms = io::parse_m_list(opts->m_list);
    } catch (const ParseError& e) {
      throw UsageError(e.what());
    }
    write_csv(out.stream(), sweep_m(cfg, key, plain, plain_pert, key_pert, ms));
  });
}

void add_attack_demo(CLI::App& app) {
  struct Opts {
    std::int64_t modulus = 26;
    bool builtin = false;
    std::uint64_t seed = 0;
  };
  auto opts = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("attack-demo", "known-plaintext attack against Hill with a bit swap on the ciphertext");
  cmd->add_option("--modulus", opts->modulus, "modulus N (random mode)")->check(CLI::Range(std::int64_t{2}, std::int64_t{128}));
  cmd->add_flag("--builtin-paper-example", opts->builtin, "run the built-in 2x2 mod 26 example");
  cmd->add_option("--seed", opts->seed, "seed for a random 2x2 instance");
  cmd->callback([opts] {
    if (opts->builtin) {
      const presets::AttackExample ex;
      auto rep = attack_demo(KeyMatrix(ex.key, ex.modulus), {ex.perm}, ex.x_train, ex.x_test);
      compare_reference(rep, ex.printed_key, ex.printed_key_inverse);
      std::cout << "permutation: swap b2 and b1 of entry (2,1), labels (4,3,1,2,0)\n";
      print_report(std::cout, rep);
      return;
    }
    std::mt19937_64 rng(opts->seed);
    const std::int64_t modulus = opts->modulus;
    const KeyMatrix key = keygen(2, modulus, modulus, rng());
    const Matrix x_train = keygen(2, modulus, modulus, rng()).matrix();
    Matrix x_test(2, 2);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) x_test(r, c) = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(modulus));
    int width = 1;
    while ((std::int64_t{1} << width) < modulus) ++width;
    if (width < 2) throw Error("modulus too small for a bit swap");
    std::vector<int> labels;
    for (int l = width - 1; l >= 0; --l) labels.push_back(l);
    const auto a = static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(width));
    auto b = static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(width - 1));
    if (b >= a) ++b;
    std::swap(labels[a], labels[b]);
    const ElementPermutation perm{1 + rng() % 2, 1 + rng() % 2, BitLabelSpec(width, labels)};
    std::cout << "permutation: entry (" << perm.row << "," << perm.col << "), swap b" << labels[b] << " and b"
              << labels[a] << '\n';
    print_report(std::cout, attack_demo(key, {perm}, x_train, x_test));
  });
}

void add_witness(CLI::App& app) {
  struct Opts {
    int width = 5;
    int i = 3;
    int j = 2;
  };
  auto opts = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("witness", "counterexample showing a bit transposition is not additive");
  cmd->add_option("--width", opts->width, "bit width w")->required();
  cmd->add_option("--i", opts->i, "higher swapped bit")->required();
  cmd->add_option("--j", opts->j, "lower swapped bit")->required();
  cmd->callback([opts] {
    const auto w = nonlinearity_witness(opts->width, opts->i, opts->j);
    const std::int64_t size = std::int64_t{1} << opts->width;
    std::cout << "b1=" << w.b1 << '\n'
              << "b2=" << w.b2 << '\n'
              << "P(b1+b2)=" << w.lhs << '\n'
              << "P(b1)+P(b2) mod " << size << '=' << w.rhs << '\n'
              << "additive: " << (w.lhs == w.rhs ? "yes" : "no") << '\n';
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hill cipher variants with bit-level permutations"};
  app.require_subcommand(1);
  add_keygen(app);
  add_encrypt(app);
  add_decrypt(app);
  add_avalanche(app);
  add_attack_demo(app);
  add_witness(app);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
