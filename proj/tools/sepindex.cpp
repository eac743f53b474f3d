#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>

#include "sepindex/complex.hpp"
#include "sepindex/enumeration.hpp"
#include "sepindex/error.hpp"
#include "sepindex/facets_io.hpp"
#include "sepindex/homology.hpp"
#include "sepindex/moves.hpp"
#include "sepindex/separation.hpp"

using namespace sepindex;

namespace {

enum Exit { kOk = 0, kViolation = 1, kInput = 2, kCap = 3 };

// Brute-force default for CLI runs; the library itself allows up to 28.
constexpr int kCliSeparationCap = 20;

struct RunConfig {
  int separation_cap = 0;  // 0 selects the per-engine default
  int sigma_cap = kDefaultTightCap;
  int census_cap = kDefaultCensusCap;
  int threads = 0;
  std::uint64_t seed = 1;
  std::string format = "csv";
  std::string input_format = "auto";
  bool strict = false;
};

std::string fraction(const Rational& r) { return to_string(r) + " (" + to_decimal(r) + ")"; }

// JSON number when it fits in 64 bits, decimal string otherwise.
nlohmann::ordered_json integer_json(const BigInt& v) {
  if (boost::multiprecision::abs(v) <= BigInt(std::numeric_limits<long long>::max())) return v.convert_to<long long>();
  return v.str();
}

nlohmann::ordered_json rational_json(const Rational& r) {
  return {{"num", integer_json(numerator_of(r))}, {"den", integer_json(denominator_of(r))}};
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_file(path, text);
  }
}

Complex load_complex(const std::string& path, const RunConfig& cfg) {
  return read_facets(read_file(path), cfg.strict);
}

Complex load_sphere(const std::string& path, const RunConfig& cfg) {
  Complex x = load_complex(path, cfg);
  const Diagnostic d = check_2sphere(x);
  if (!d) throw InputError(path + ": not a triangulated 2-sphere: " + d.reason);
  return x;
}

SeparationOptions separation_options(const RunConfig& cfg, int fallback) {
  return {cfg.separation_cap > 0 ? cfg.separation_cap : fallback, cfg.threads};
}

// ---------------------------------------------------------------- sep-index

int cmd_sep_index(const RunConfig& cfg, const std::string& path, const std::string& out, bool fast) {
  InputFormat format = InputFormat::Auto;
  if (cfg.input_format == "facets") format = InputFormat::Facets;
  if (cfg.input_format == "edges") format = InputFormat::Edges;
  const Graph g = read_graph(read_file(path), format, cfg.strict);
  const SeparationProfile p = fast ? separation_index_fast(g, separation_options(cfg, kDefaultFastSeparationCap))
                                   : separation_index(g, separation_options(cfg, kCliSeparationCap));
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["n"] = p.n;
    j["s"] = rational_json(p.s);
    j["decimal"] = to_decimal(p.s);
    auto& rows = j["profile"] = nlohmann::ordered_json::array();
    for (int i = 0; i <= p.n; ++i) {
      rows.push_back({{"i", i},
                      {"sum_q_minus_1", integer_json(p.sum_q_minus_1[i])},
                      {"binom", integer_json(binomial(p.n, i))},
                      {"s_i", rational_json(p.s_i[i])}});
    }
    emit(out, j.dump(2) + "\n");
  } else {
    emit(out, profile_csv(p));
  }
  std::cout << "s = " << fraction(p.s) << '\n';
  return kOk;
}

// ---------------------------------------------------------------- verify

// Follows the separating-triangle flips down to a flag sphere, checking that
// every step lowers s.
bool descend_to_flag(const Complex& start, const SeparationOptions& opt, std::ostream& log) {
  Complex x = start;
  Rational s = separation_of(x, opt);
  int steps = 0;
  while (!is_flag(x)) {
    const MoveResult step = theorem2_flip(x);
    const Rational next = separation_of(step.complex, opt);
    if (next >= s) {
      log << "VIOLATION: flip " << format_move(step.record) << " does not lower s (" << to_string(s) << " -> "
          << to_string(next) << ")\n";
      return false;
    }
    x = step.complex;
    s = next;
    ++steps;
  }
  log << "flip descent: " << steps << " step(s) to a flag sphere, s = " << to_string(s) << '\n';
  return true;
}

bool recurrence_spot_checks(const Complex& y, int samples, std::mt19937_64& rng, const SeparationOptions& opt,
                            std::ostream& log) {
  bool ok = true;
  for (int k = 0; k < samples; ++k) {
    const auto& f = y.facets()[rng() % y.facets().size()];
    const RecurrenceCheck r = check_zero_move_recurrence(y, {f[0], f[1], f[2]}, opt);
    log << "0-move recurrence at " << f[0] << ' ' << f[1] << ' ' << f[2] << ": " << (r.equal ? "ok" : "VIOLATION")
        << '\n';
    ok = ok && r.equal;
  }
  return ok;
}

int verify_file(const RunConfig& cfg, const std::string& path) {
  const Complex x = load_sphere(path, cfg);
  const SeparationOptions opt = separation_options(cfg, kCliSeparationCap);
  const Theorem1Check t = verify_theorem1(x, opt);
  std::cout << "n = " << x.num_vertices() << "\ns = " << fraction(t.s) << "\nbound = " << fraction(t.bound) << '\n'
            << to_string(t.outcome) << '\n';
  bool ok = t.outcome != Theorem1Outcome::Violation;
  std::mt19937_64 rng(cfg.seed);
  if (x.num_vertices() + 1 <= opt.cap) ok = recurrence_spot_checks(x, 3, rng, opt, std::cout) && ok;
  std::cout << (is_flag(x) ? "flag" : "not flag") << '\n';
  if (!is_flag(x) && x.num_vertices() >= 6) ok = descend_to_flag(x, opt, std::cout) && ok;
  return ok ? kOk : kViolation;
}

int verify_census(const RunConfig& cfg, int n, bool flag_only) {
  const SeparationOptions opt = separation_options(cfg, kCliSeparationCap);
  Census census = enumerate_spheres(n, {cfg.census_cap, cfg.threads, Generation::Lemma});
  annotate(census, cfg.threads);
  if (flag_only) {
    const Census flag = filter_flag(census);
    if (flag.size() == 0) {
      std::cout << "0 flag spheres, 0 distinct indices\n";
      return kOk;
    }
    const ExtremalReport r = classify_census(flag);
    std::cout << r.count << " flag spheres, " << r.distinct_s << " distinct indices\n";
    return kOk;
  }

  bool ok = true;
  const Rational bound = stacked_value(n);
  for (std::size_t i = 0; i < census.size(); ++i) {
    const auto& a = census.annotations[i];
    const bool good = a.stacked ? a.s == bound : a.s < bound;
    if (!good) {
      std::cout << "VIOLATION: sphere " << census.codes[i].hex() << " has s = " << to_string(a.s)
                << (a.stacked ? " but is stacked\n" : " but is not stacked\n");
      ok = false;
    }
  }
  const ExtremalReport r = classify_census(census);
  bool max_stacked = true;
  for (auto i : r.argmax) max_stacked = max_stacked && census.annotations[i].stacked;
  bool min_flag = false;
  for (auto i : r.argmin) min_flag = min_flag || census.annotations[i].flag;
  if (n >= 6 && !min_flag) {
    std::cout << "VIOLATION: no flag sphere attains the minimum\n";
    ok = false;
  }

  std::mt19937_64 rng(cfg.seed);
  if (n + 1 <= opt.cap) {
    std::ostringstream quiet;
    for (int k = 0; k < 3; ++k) {
      ok = recurrence_spot_checks(census.representatives[rng() % census.size()], 1, rng, opt, quiet) && ok;
    }
    if (quiet.str().find("VIOLATION") != std::string::npos) std::cout << quiet.str();
  }

  std::cout << r.count << (r.count == 1 ? " sphere" : " spheres") << "; max " << to_string(r.max_s)
            << (max_stacked ? " (stacked)" : "") << "; min " << to_string(r.min_s) << (min_flag ? " (flag)" : "")
            << '\n';
  std::cout << r.stacked << " stacked, " << r.flag << " flag, " << r.distinct_s << " distinct indices, "
            << r.argmin.size() << " minimiser(s)\n";
  return ok ? kOk : kViolation;
}

// ---------------------------------------------------------------- manifold3

int cmd_manifold3(const RunConfig& cfg, const std::string& path, bool brute) {
  const Complex x = load_complex(path, cfg);
  const ManifoldReport r = verify_theorem3(x, brute, {cfg.sigma_cap, cfg.threads});
  std::cout << report_json(r);
  return r.violations.empty() ? kOk : kViolation;
}

// ---------------------------------------------------------------- gen / replay / reduce

int cmd_gen(const RunConfig& cfg, const std::vector<std::string>& args, const std::string& out,
            const std::string& log_path) {
  if (args.empty()) throw InputError("gen: expected 'stacked N [SEED]', 'cyclic N', 's24' or 'octahedron'");
  const std::string& kind = args[0];
  auto count = [&](std::size_t i) {
    if (args.size() <= i) throw InputError("gen " + kind + ": missing vertex count");
    try {
      return std::stoi(args[i]);
    } catch (const std::exception&) {
      throw InputError("gen " + kind + ": '" + args[i] + "' is not an integer");
    }
  };
  if (kind == "stacked") {
    std::uint64_t seed = cfg.seed;
    if (args.size() > 2) {
      try {
        seed = std::stoull(args[2]);
      } catch (const std::exception&) {
        throw InputError("gen stacked: '" + args[2] + "' is not a seed");
      }
    }
    const auto [x, moves] = build_stacked(count(1), seed);
    emit(out, write_facets(x));
    if (!log_path.empty()) write_file(log_path, to_log(moves.records));
  } else if (kind == "cyclic") {
    emit(out, write_facets(cyclic_polytope_boundary(count(1))));
  } else if (kind == "s24") {
    emit(out, write_facets(standard_sphere(2)));
  } else if (kind == "s35") {
    emit(out, write_facets(standard_sphere(3)));
  } else if (kind == "octahedron") {
    emit(out, write_facets(octahedron()));
  } else {
    throw InputError("gen: unknown kind '" + kind + "'");
  }
  return kOk;
}

int cmd_replay(const RunConfig& cfg, const std::string& log_path, const std::string& start, const std::string& out) {
  MoveSequence seq{start.empty() ? standard_sphere(2) : load_complex(start, cfg), parse_log(read_file(log_path))};
  emit(out, write_facets(replay(seq)));
  return kOk;
}

int cmd_reduce(const RunConfig& cfg, const std::string& path, const std::string& out) {
  emit(out, to_log(reduce_to_s24(load_sphere(path, cfg)).records));
  return kOk;
}

// ---------------------------------------------------------------- census

int cmd_census(const RunConfig& cfg, int n, const std::string& dir, bool permissive) {
  Census census = enumerate_spheres(
      n, {cfg.census_cap, cfg.threads, permissive ? Generation::Permissive : Generation::Lemma});
  annotate(census, cfg.threads);
  const std::filesystem::path base = dir.empty() ? "." : dir;
  std::filesystem::create_directories(base);
  const std::string stem = "census-" + std::to_string(n);
  write_file((base / (stem + ".codes")).string(), census_codes(census));
  write_file((base / (stem + ".csv")).string(), census_csv(census));
  const ExtremalReport r = classify_census(census);
  std::cout << r.count << " spheres, " << r.stacked << " stacked, " << r.flag << " flag, " << r.distinct_s
            << " distinct indices\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Separation index of triangulated spheres and tightness of 3-manifolds"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  RunConfig cfg;
  app.add_option("--cap", cfg.separation_cap, "Vertex cap for separation-index evaluation (default 20, 40 with --fast)")
      ->check(CLI::PositiveNumber);
  app.add_option("--sigma-cap", cfg.sigma_cap, "Vertex cap for subset homology sweeps")->check(CLI::PositiveNumber);
  app.add_option("--census-cap", cfg.census_cap, "Vertex cap for sphere enumeration")->check(CLI::PositiveNumber);
  app.add_option("--threads", cfg.threads, "Worker threads (default: SEPINDEX_THREADS or 1)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", cfg.seed, "Random seed");
  app.add_option("--format", cfg.format, "Profile output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--input", cfg.input_format, "Graph input format")->check(CLI::IsMember({"auto", "facets", "edges"}));
  app.add_flag("--strict", cfg.strict, "Reject facet lists with redundant (non-maximal) faces");

  std::string path, out, log_path, start, dir;
  bool fast = false, flag_only = false, brute = false, permissive = false;
  int census_n = 0;
  std::vector<std::string> gen_args;

  auto* sep = app.add_subcommand("sep-index", "Separation profile of a complex's 1-skeleton or an edge list");
  sep->add_option("file", path, "Facets file or edge list")->required();
  sep->add_option("-o,--output", out, "Profile destination (default stdout)");
  sep->add_flag("--fast", fast, "Connected-set enumeration instead of all subsets");

  auto* verify = app.add_subcommand("verify", "Check the upper bound and flag-minimum statements");
  verify->add_option("file", path, "Sphere in facets format");
  verify->add_option("--census", census_n, "Sweep the full n-vertex census instead")->check(CLI::Range(4, 14));
  verify->add_flag("--flag-only", flag_only, "Census mode: report the flag spheres only");

  auto* manifold = app.add_subcommand("manifold3", "Homology, mu_1 and tight-neighbourliness of a 3-manifold");
  manifold->add_option("file", path, "3-manifold in facets format")->required();
  manifold->add_flag("--tight-bruteforce", brute, "Also test tightness over all induced subcomplexes");

  auto* gen = app.add_subcommand("gen", "Generate stacked N [SEED] | cyclic N | s24 | s35 | octahedron");
  gen->add_option("kind", gen_args, "Kind and parameters")->required();
  gen->add_option("-o,--output", out, "Destination (default stdout)");
  gen->add_option("--log", log_path, "Stacked only: write the 0-move log here");

  auto* rep = app.add_subcommand("replay", "Replay a move log");
  rep->add_option("log", log_path, "Move log")->required();
  rep->add_option("--start", start, "Starting complex (default S^2_4)");
  rep->add_option("-o,--output", out, "Destination (default stdout)");

  auto* reduce = app.add_subcommand("reduce", "Move log rebuilding a sphere from S^2_4 with 0-, 1A- and 1B-moves");
  reduce->add_option("file", path, "Sphere in facets format")->required();
  reduce->add_option("-o,--output", out, "Destination (default stdout)");

  auto* census = app.add_subcommand("census", "Enumerate all n-vertex 2-spheres and write codes and CSV");
  census->add_option("n", census_n, "Vertex count")->required()->check(CLI::Range(4, 14));
  census->add_option("-o,--output-dir", dir, "Output directory (default .)");
  census->add_flag("--permissive", permissive, "Use unrestricted 1-move pairs after each 0-move");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*sep) return cmd_sep_index(cfg, path, out, fast);
    if (*verify) {
      if (census_n > 0) return verify_census(cfg, census_n, flag_only);
      if (path.empty()) throw InputError("verify: give a file or --census N");
      return verify_file(cfg, path);
    }
    if (*manifold) return cmd_manifold3(cfg, path, brute);
    if (*gen) return cmd_gen(cfg, gen_args, out, log_path);
    if (*rep) return cmd_replay(cfg, log_path, start, out);
    if (*reduce) return cmd_reduce(cfg, path, out);
    if (*census) return cmd_census(cfg, census_n, dir, permissive);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::Input: return kInput;
      case ErrorKind::CapExceeded: return kCap;
      case ErrorKind::Violation:
      case ErrorKind::Internal: return kViolation;
    }
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return kOk;
}
