// Command-line driver: bigraded length tables, coefficient reports, the H2
// classification and full verification reports, plus bundled presets that
// are diffed against golden files.

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "bhat/errors.hpp"
#include "bhat/verifier.hpp"
#include "json.hpp"

#ifndef BHAT_GOLDEN_DIR
#define BHAT_GOLDEN_DIR "data/golden"
#endif

namespace {

using namespace bhat;

enum Exit { kOk = 0, kConfig = 2, kCompute = 3, kFit = 4, kGolden = 5 };

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SessionConfig {
  std::uint32_t prime = PrimeField::kDefaultPrime;
  std::optional<int> truncation;
  std::string I, J;
  int r_max = 8, s_max = 8;
  int k_lo = 4, k_fit = 8, k_hi = 10;
  std::optional<std::uint64_t> seed;
  std::string format;
  std::string output;
  unsigned threads = 0;
};

// Values from --config replace flags given on the command line.
void apply_config_file(SessionConfig& cfg, const std::string& path, const CLI::App& app) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config file " + path + ": " + e.what());
  }
  if (!j.is_object()) throw ConfigError("config file " + path + " must hold a JSON object");
  auto take = [&](const char* key, const char* flag, auto& field) {
    if (!j.contains(key)) return;
    using T = std::decay_t<decltype(field)>;
    T value;
    try {
      value = j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
      throw ConfigError("config key '" + std::string(key) + "' has the wrong type");
    }
    if (app.count(flag) > 0 && !(value == field)) {
      std::cerr << "warning: config value for '" << key << "' overrides " << flag << "\n";
    }
    field = value;
  };
  static const std::set<std::string> known = {"prime", "truncation_order", "I", "J", "r_max",
                                              "s_max", "k_band", "seed", "format", "output",
                                              "threads"};
  for (const auto& [key, _] : j.items()) {
    if (!known.count(key)) throw ConfigError("unknown config key '" + key + "'");
  }
  take("prime", "--prime", cfg.prime);
  if (j.contains("truncation_order")) {
    int n = 0;
    take("truncation_order", "--N", n);
    cfg.truncation = n;
  }
  take("I", "--I", cfg.I);
  take("J", "--J", cfg.J);
  take("r_max", "--rmax", cfg.r_max);
  take("s_max", "--smax", cfg.s_max);
  if (j.contains("k_band")) {
    std::vector<int> band;
    take("k_band", "--kband", band);
    if (band.size() != 3) throw ConfigError("k_band must be [fit_lo, fit_hi, verify_hi]");
    cfg.k_lo = band[0];
    cfg.k_fit = band[1];
    cfg.k_hi = band[2];
  }
  if (j.contains("seed")) {
    std::uint64_t s = 0;
    take("seed", "--seed", s);
    cfg.seed = s;
  }
  take("format", "--format", cfg.format);
  take("output", "--output", cfg.output);
  take("threads", "--threads", cfg.threads);
}

void validate(const SessionConfig& cfg) {
  if (cfg.I.empty() || cfg.J.empty()) throw ConfigError("both --I and --J are required");
  if (cfg.r_max < 6 || cfg.s_max < 6) throw ConfigError("windows must be at least 6x6");
  if (cfg.k_lo < 1 || cfg.k_fit < cfg.k_lo + 1 || cfg.k_hi < cfg.k_fit) {
    throw ConfigError("k band must satisfy 1 <= lo < fit <= hi");
  }
  if (cfg.truncation && *cfg.truncation < 2) throw ConfigError("truncation order must be >= 2");
  static const std::set<std::string> formats = {"", "json", "csv", "text"};
  if (!formats.count(cfg.format)) throw ConfigError("format must be json, csv or text");
}

constexpr int kProbeOrder = 256;
constexpr int kMargin = 8;

int default_truncation(const SessionConfig& cfg) {
  auto probe = std::make_shared<const TruncatedAlgebra>(PrimeField(cfg.prime), kProbeOrder);
  const int ti = *ideal_from_text(probe, cfg.I).adequacy();
  const int tj = *ideal_from_text(probe, cfg.J).adequacy();
  return kMargin + (cfg.r_max + cfg.k_hi + 1) * ti + (cfg.s_max + cfg.k_hi + 1) * tj;
}

std::uint64_t session_seed(SessionConfig& cfg) {
  if (!cfg.seed) {
    cfg.seed = std::random_device{}();
    std::cerr << "seed = " << *cfg.seed << "\n";
  }
  return *cfg.seed;
}

VerifierOptions verifier_options(const SessionConfig& cfg) {
  VerifierOptions o;
  o.r_max = cfg.r_max;
  o.s_max = cfg.s_max;
  o.band = {cfg.k_lo, cfg.k_fit, cfg.k_hi};
  o.seed = *cfg.seed;
  o.threads = cfg.threads;
  return o;
}

void emit(const SessionConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + cfg.output);
  out << text;
}

std::string table_text(const BigradedLengthTable& t) {
  std::ostringstream os;
  os << "r\\s";
  for (int s = 0; s <= t.s_max(); ++s) os << '\t' << s;
  os << '\n';
  for (int r = 0; r <= t.r_max(); ++r) {
    os << r;
    for (int s = 0; s <= t.s_max(); ++s) os << '\t' << t.at(r, s);
    os << '\n';
  }
  return os.str();
}

std::string coeffs_text(const CoefficientReport& rep) {
  const auto& b = rep.bhattacharya;
  std::ostringstream os;
  os << "e20 = " << to_string(b.e20) << "\ne11 = " << to_string(b.e11) << "\ne02 = " << to_string(b.e02)
     << "\ne10 = " << to_string(b.e10) << "\ne01 = " << to_string(b.e01) << "\ne00 = " << to_string(b.e00)
     << "\nonset = (" << b.r0 << ", " << b.s0 << ")\n";
  auto h = [&](const char* n, const HilbertCoeffs& c) {
    os << n << ": e0 = " << to_string(c.e0) << ", e1 = " << to_string(c.e1) << ", e2 = " << to_string(c.e2)
       << "\n";
  };
  h("I", rep.I);
  h("J", rep.J);
  h("IJ", rep.IJ);
  for (const auto& c : rep.checks) os << (c.holds ? "ok   " : "FAIL ") << c.name << "\n";
  return os.str();
}

// Runs `body` on a filtration over k[x,y]/m^N, enlarging N by half on
// TruncationInsufficient.
template <class Body>
int with_filtration(SessionConfig& cfg, Body body) {
  int n = cfg.truncation ? *cfg.truncation : default_truncation(cfg);
  for (int attempt = 0;; ++attempt) {
    try {
      auto alg = std::make_shared<const TruncatedAlgebra>(PrimeField(cfg.prime), n);
      BiFiltration f(ideal_from_text(alg, cfg.I), ideal_from_text(alg, cfg.J));
      return body(f);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::TruncationInsufficient || attempt == 3) throw;
      const int next = static_cast<int>(std::ceil(1.5 * n));
      std::cerr << "truncation order " << n << " insufficient, retrying with " << next << "\n";
      n = next;
    }
  }
}

// Widens the windows once on FitUnstable.
template <class Body>
int with_fit_escalation(SessionConfig& cfg, Body body) {
  try {
    return body();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::FitUnstable) throw;
    std::cerr << "fit unstable (" << e.what() << "), widening windows by 4\n";
    cfg.r_max += 4;
    cfg.s_max += 4;
    return body();
  }
}

int cmd_table(SessionConfig& cfg) {
  return with_filtration(cfg, [&](const BiFiltration& f) {
    const auto t = length_table(f, cfg.r_max, cfg.s_max, cfg.threads);
    const std::string fmt = cfg.format.empty() ? "csv" : cfg.format;
    emit(cfg, fmt == "csv" ? t.to_csv() : fmt == "json" ? t.to_json() : table_text(t));
    return kOk;
  });
}

int cmd_coeffs(SessionConfig& cfg) {
  return with_fit_escalation(cfg, [&] {
    return with_filtration(cfg, [&](const BiFiltration& f) {
      const auto rep = coefficient_report(f, cfg.r_max, cfg.s_max);
      emit(cfg, cfg.format == "text" ? coeffs_text(rep) : rep.to_json());
      return kOk;
    });
  });
}

int report_status(const VerificationReport& rep) {
  const auto bad = rep.failures();
  for (const auto* b : bad) {
    std::cerr << "DISAGREEMENT in " << b->name << " at (" << b->r << "," << b->s << ")\n";
  }
  return bad.empty() ? kOk : kCompute;
}

int cmd_h2(SessionConfig& cfg, int r, int s) {
  session_seed(cfg);
  return with_fit_escalation(cfg, [&] {
    return with_filtration(cfg, [&](const BiFiltration& f) {
      VerifierOptions o = verifier_options(cfg);
      o.grid = std::max(o.grid, std::max(r, s));
      if (o.grid + 1 > cfg.r_max || o.grid + 1 > cfg.s_max) {
        throw ConfigError("(r, s) must lie inside the window");
      }
      const Verifier v(f, o);
      const auto rep = v.report({v.finite_length_criterion(r, s)});
      emit(cfg, cfg.format == "text" ? rep.to_text() : rep.to_json());
      return report_status(rep);
    });
  });
}

int cmd_verify(SessionConfig& cfg) {
  session_seed(cfg);
  return with_fit_escalation(cfg, [&] {
    return with_filtration(cfg, [&](const BiFiltration& f) {
      const auto rep = Verifier(f, verifier_options(cfg)).run();
      emit(cfg, cfg.format == "text" ? rep.to_text() : rep.to_json());
      return report_status(rep);
    });
  });
}

const std::map<std::string, std::pair<std::string, std::string>>& presets() {
  static const std::map<std::string, std::pair<std::string, std::string>> p = {
      {"maximal", {"x, y", "x, y"}},
      {"bhatt_l2", {"x^2, x*y, y^2", "x^2, y^2"}},
      {"bhatt_l3", {"x^3, x^2*y, x*y^2, y^3", "x^3, y^3"}},
      {"depth_zero", {"x^4, x^3*y, x*y^3, y^4", "x, y"}},
  };
  return p;
}

int cmd_example(SessionConfig& cfg, const std::string& name, const std::string& golden_dir,
                bool update) {
  const auto& [i, j] = presets().at(name);
  cfg.I = i;
  cfg.J = j;
  if (!cfg.seed) cfg.seed = 1;
  std::string text;
  int status = with_filtration(cfg, [&](const BiFiltration& f) {
    const auto rep = Verifier(f, verifier_options(cfg)).run();
    text = rep.to_json();
    return report_status(rep);
  });
  emit(cfg, text);
  const std::string path = golden_dir + "/" + name + ".json";
  if (update) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + path);
    out << text;
    std::cerr << "wrote " << path << "\n";
    return status;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "golden file " << path << " missing\n";
    return kGolden;
  }
  const std::string golden((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (golden != text) {
    std::cerr << "output differs from " << path << "\n";
    return kGolden;
  }
  std::cerr << "matches " << path << "\n";
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bigraded Hilbert and Koszul invariants of ideal pairs in k[[x,y]]"};
  app.require_subcommand(1);
  SessionConfig cfg;
  std::string config_path;

  auto common = [&](CLI::App* sub, bool needs_ideals) {
    sub->add_option("--config", config_path, "JSON config file; its values win over flags");
    if (needs_ideals) {
      sub->add_option("--I", cfg.I, "generators of I, comma separated");
      sub->add_option("--J", cfg.J, "generators of J, comma separated");
    }
    sub->add_option("--prime", cfg.prime, "field characteristic")->capture_default_str();
    sub->add_option("--N", cfg.truncation, "truncation order (default from the windows)");
    sub->add_option("--rmax", cfg.r_max, "largest r")->capture_default_str();
    sub->add_option("--smax", cfg.s_max, "largest s")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "seed for joint reduction sampling");
    sub->add_option("--format", cfg.format, "json, csv or text");
    sub->add_option("--output,-o", cfg.output, "output file (default stdout)");
    sub->add_option("--threads", cfg.threads, "worker threads (0: all cores)");
  };

  auto* table = app.add_subcommand("table", "bigraded length table lambda(R/I^rJ^s)");
  common(table, true);
  auto* coeffs = app.add_subcommand("coeffs", "Bhattacharya, Hilbert and row coefficients");
  common(coeffs, true);
  auto* h2 = app.add_subcommand("h2", "classify the (r,s) piece of the second local cohomology");
  common(h2, true);
  int r = 0, s = 0;
  h2->add_option("--r", r, "r index")->capture_default_str();
  h2->add_option("--s", s, "s index")->capture_default_str();
  auto* verify = app.add_subcommand("verify", "full verification report");
  common(verify, true);
  auto* example = app.add_subcommand("example", "run a bundled preset and diff against golden output");
  common(example, false);
  std::string preset;
  example->add_option("name", preset, "maximal, bhatt_l2, bhatt_l3 or depth_zero")
      ->required()
      ->check(CLI::IsMember({"maximal", "bhatt_l2", "bhatt_l3", "depth_zero"}));
  std::string golden_dir = BHAT_GOLDEN_DIR;
  bool update_golden = false;
  example->add_option("--golden-dir", golden_dir, "directory of golden reports")->capture_default_str();
  example->add_flag("--update-golden", update_golden, "rewrite the golden file");
  std::vector<int> kband;
  for (auto* sub : {table, coeffs, h2, verify}) {
    sub->add_option("--kband", kband, "k band: fit_lo fit_hi verify_hi")->expected(3);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }

  CLI::App* sub = app.get_subcommands().front();
  try {
    if (kband.size() == 3) {
      cfg.k_lo = kband[0];
      cfg.k_fit = kband[1];
      cfg.k_hi = kband[2];
    }
    if (!config_path.empty()) apply_config_file(cfg, config_path, *sub);
    if (sub != example) validate(cfg);

    if (sub == table) return cmd_table(cfg);
    if (sub == coeffs) return cmd_coeffs(cfg);
    if (sub == h2) return cmd_h2(cfg, r, s);
    if (sub == verify) return cmd_verify(cfg);
    return cmd_example(cfg, preset, golden_dir, update_golden);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kConfig;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::ParseError:
      case ErrorKind::NotMPrimary:
      case ErrorKind::InvalidArgument:
        return kConfig;
      case ErrorKind::FitUnstable:
        return kFit;
      default:
        return kCompute;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCompute;
  }
}
