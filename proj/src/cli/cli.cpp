#include "swing/cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

#include "swing/error.hpp"

namespace swing {

namespace {

struct Flags {
  std::optional<std::string> k, a, energy, seeds, out, format, ode, exponents;
  std::optional<int> max_order, terms, crossings;
  std::optional<double> tol;
  bool both_directions = false;
};

// Resolved configuration; every report embeds it.
class Config {
 public:
  explicit Config(std::string subcommand) { json_["subcommand"] = std::move(subcommand); }

  template <class T>
  T resolve(const char* key, const std::optional<T>& given, const T& fallback) {
    const T value = given ? *given : fallback;
    json_[key] = value;
    if (!given) defaults_.push_back(key);
    return value;
  }
  template <class T>
  T require(const char* key, const std::optional<T>& given) {
    if (!given) throw CLI::RequiredError(std::string("--") + key);
    json_[key] = *given;
    return *given;
  }
  void set(const char* key, Json value, bool defaulted = false) {
    json_[key] = std::move(value);
    if (defaulted) defaults_.push_back(key);
  }
  Json json() const {
    Json out = json_;
    out["defaults_applied"] = defaults_;
    return out;
  }

 private:
  Json json_;
  std::vector<std::string> defaults_;
};

std::string shortest(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, result.ptr);
}

std::string fixed17(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

// Decimal or p/q.
double parse_real(const std::string& text) {
  if (text.find('/') != std::string::npos) return parse_rational(text).get_d();
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ParseError("malformed number '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(value)) throw ParseError("malformed number '" + text + "'");
  return value;
}

void write_atomically(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open " + tmp);
    file << content;
    if (!file) throw std::runtime_error("cannot write " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

void emit(const Json& report, const std::optional<std::string>& path, std::ostream& out) {
  const std::string text = report.dump(2) + "\n";
  if (path) {
    write_atomically(*path, text);
  } else {
    out << text;
  }
}

Json with_config(Json report, const Config& config) {
  Json out{{"config", config.json()}};
  for (auto& [key, value] : report.items()) out[key] = value;
  return out;
}

// ---- subcommands ----

Json run_invariants(const Flags& f, Config& config) {
  const Rational k = parse_rational(config.require("k", f.k));
  const Rational a = parse_rational(config.require("a", f.a));
  const Rational e = parse_rational(config.resolve("E", f.energy, std::string("-4/5")));
  const int terms = config.resolve("terms", f.terms, 6);
  const PendulumParams params{k, a, e};
  const EllipticData inv = invariants_from_params(params);
  Json report{{"regime", to_string(params.regime())}, {"invariants", to_json(inv)}};
  const auto critical = critical_energies(k, a);
  report["critical_energies"] =
      critical ? Json{{"stable", to_json(critical->stable)}, {"unstable", to_json(critical->unstable)}} : Json(nullptr);
  if (!inv.degenerate()) {
    const auto orbit = particular_orbit_series(params, terms);
    report["orbit_series"] = {{"r", to_json(orbit.r)}};
  }
  return report;
}

Json confluence_report(const Rational& k, NveVariant variant) {
  const auto nve = build_nve({k, Rational(0), Rational(0)}, variant);
  const auto points = singular_exponents(*nve.fuchsian);
  Json pts = Json::array();
  for (const auto& p : points) pts.push_back(to_json(p));
  if (points.size() != 3) throw std::logic_error("confluent equation is not a Riemann P equation");
  const auto d0 = points[0].difference(), d1 = points[1].difference(), d2 = points[2].difference();
  return {{"nve", to_json(nve)},
          {"singular_points", pts},
          {"exponent_differences", {to_json(d0), to_json(d1), to_json(d2)}},
          {"kimura", to_json(kimura_solvable(d0, d1, d2))}};
}

Json run_kimura(const Flags& f, Config& config) {
  if (f.exponents && f.k) throw CLI::ValidationError("kimura takes either --k or --exponents");
  if (f.exponents) {
    const std::string text = config.require("exponents", f.exponents);
    std::vector<ExactScalar> values;
    std::size_t start = 0;
    while (start <= text.size()) {
      const auto comma = text.find(',', start);
      values.push_back(parse_exact_scalar(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (values.size() != 3) throw ParseError("--exponents needs three comma-separated values");
    return {{"exponent_differences", {to_json(values[0]), to_json(values[1]), to_json(values[2])}},
            {"kimura", to_json(kimura_solvable(values[0], values[1], values[2]))}};
  }
  const Rational k = parse_rational(config.require("k", f.k));
  return {{"confluences",
           {confluence_report(k, NveVariant::kRiemannConfluence1), confluence_report(k, NveVariant::kRiemannConfluence2)}}};
}

NveVariant default_variant(const PendulumParams& params) {
  switch (params.regime()) {
    case PendulumParams::Regime::kClassical:
      return NveVariant::kRiemannConfluence1;
    case PendulumParams::Regime::kLame:
      return NveVariant::kLame;
    case PendulumParams::Regime::kGeneric:
      return NveVariant::kAlgebraicE0;
  }
  return NveVariant::kAlgebraicE0;
}

Json run_expsol(const Flags& f, Config& config) {
  const Rational k = parse_rational(config.require("k", f.k));
  const Rational a = parse_rational(config.require("a", f.a));
  const Rational e = parse_rational(config.resolve("E", f.energy, std::string("-4/5")));
  PendulumParams params{k, a, e};
  const NveVariant variant = parse_nve_variant(config.resolve("ode", f.ode, to_string(default_variant(params))));
  const auto nve = build_nve(params, variant);
  if (!nve.fuchsian) throw DomainError("the " + to_string(variant) + " form has no rational-coefficient equation");
  const auto points = singular_exponents(*nve.fuchsian);
  Json pts = Json::array();
  for (const auto& p : points) pts.push_back(to_json(p));
  Json report{{"nve", to_json(nve)}, {"singular_points", pts}, {"exponential_search", to_json(find_exponential_solutions(*nve.fuchsian))}};
  if (nve.lame) {
    const auto c = classify_lame(nve.lame->n, nve.lame->B, nve.lame->invariants.g2, nve.lame->invariants.g3);
    report["lame_classification"] = {{"kind", to_string(c.kind)}, {"canonical_n", to_json(c.canonical_n)}, {"necessary_only", c.necessary_only},
                                     {"note", c.note}};
  }
  return report;
}

Json run_verdict(const Flags& f, Config& config) {
  const Rational k = parse_rational(config.require("k", f.k));
  const Rational a = parse_rational(config.require("a", f.a));
  if (a == 0) return {{"verdict", to_json(classical_verdict(k))}};
  if (a == -k) throw DomainError("a = -k: no Galois obstruction at first order; use the hove pipeline");
  return {{"verdict", to_json(generic_verdict(k, a))}};
}

Json run_hove(const Flags& f, Config& config) {
  const Rational k = parse_rational(config.require("k", f.k));
  if (f.a) {
    const Rational a = parse_rational(*f.a);
    if (a != -k) throw DomainError("the higher-order pipeline needs a = -k");
    config.set("a", *f.a);
  }
  const Rational e = parse_rational(config.resolve("E", f.energy, std::string("-4/5")));
  const int max_order = config.resolve("max-order", f.max_order, 7);
  if (max_order < 2) throw CLI::ValidationError("--max-order must be at least 2");
  const int budget = config.resolve("terms", f.terms, default_hove_budget(max_order));
  if (budget < 8) throw CLI::ValidationError("--terms must be at least 8");
  return {{"hove", to_json(hove_obstruction(k, e, max_order, budget))}};
}

std::vector<SectionSeed> parse_seeds(const std::string& text, double energy) {
  const auto x = text.find('x');
  if (x != std::string::npos && text.find(',') == std::string::npos) {
    int n = 0, m = 0;
    try {
      std::size_t used_n = 0, used_m = 0;
      n = std::stoi(text.substr(0, x), &used_n);
      m = std::stoi(text.substr(x + 1), &used_m);
      if (used_n != x || used_m != text.size() - x - 1) throw std::invalid_argument("grid");
    } catch (const std::exception&) {
      throw ParseError("malformed seed grid '" + text + "'");
    }
    if (n < 1 || m < 1) throw ParseError("seed grid dimensions must be positive");
    return default_seed_grid(energy, n, m);
  }
  // theta,p_theta[,sign];...
  std::vector<SectionSeed> seeds;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find(';', start);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(start, end - start);
    std::vector<std::string> parts;
    std::size_t p = 0;
    while (true) {
      const auto comma = item.find(',', p);
      parts.push_back(item.substr(p, comma == std::string::npos ? std::string::npos : comma - p));
      if (comma == std::string::npos) break;
      p = comma + 1;
    }
    if (parts.size() < 2 || parts.size() > 3) throw ParseError("malformed seed '" + item + "'");
    SectionSeed seed{parse_real(parts[0]), parse_real(parts[1]), 1};
    if (parts.size() == 3) {
      if (parts[2] == "+" || parts[2] == "1" || parts[2] == "+1") seed.p_r_sign = 1;
      else if (parts[2] == "-" || parts[2] == "-1") seed.p_r_sign = -1;
      else throw ParseError("malformed p_r sign '" + parts[2] + "'");
    }
    seeds.push_back(seed);
    start = end + 1;
  }
  if (seeds.empty()) throw ParseError("no seeds given");
  return seeds;
}

struct SectionRun {
  Json report;
  std::string csv;
};

SectionRun run_poincare(const Flags& f, Config& config) {
  const double k = parse_real(config.resolve("k", f.k, std::string("4/3")));
  const double a = parse_real(config.resolve("a", f.a, std::string("-4/3")));
  const double e = parse_real(config.resolve("E", f.energy, std::string("-0.8")));
  SectionOptions options;
  options.tol = f.tol ? *f.tol : 1e-12;
  config.set("tol", shortest(options.tol), !f.tol);
  const int crossings = config.resolve("crossings", f.crossings, 500);
  if (crossings < 1) throw CLI::ValidationError("--crossings must be positive");
  options.max_crossings = static_cast<std::size_t>(crossings);
  options.both_directions = f.both_directions;
  config.set("both-directions", f.both_directions);
  const auto seeds = parse_seeds(config.resolve("seeds", f.seeds, std::string("17x17")), e);
  const auto sections = poincare_section({k, a}, e, seeds, options);

  std::string csv = "seed_index,crossing_index,theta,p_theta,t,energy_residual\n";
  Json per_seed = Json::array();
  std::size_t total = 0;
  double worst_energy = 0, worst_offset = 0;
  for (std::size_t i = 0; i < sections.size(); ++i) {
    const auto& s = sections[i];
    for (std::size_t j = 0; j < s.points.size(); ++j) {
      const auto& p = s.points[j];
      csv += std::to_string(i) + "," + std::to_string(j) + "," + fixed17(p.theta) + "," + fixed17(p.p_theta) + "," + fixed17(p.t) + "," +
             fixed17(p.energy_residual) + "\n";
      worst_energy = std::max(worst_energy, std::abs(p.energy_residual));
      worst_offset = std::max(worst_offset, std::abs(p.r_offset));
    }
    total += s.points.size();
    per_seed.push_back(to_json(s));
  }
  Json report{{"metadata",
               {{"crossing_convention", f.both_directions ? "r = 1, both directions" : "r = 1 with p_r > 0"},
                {"seed_grid_note", "default seed grid and crossing count are artifact choices"},
                {"integrator", "Runge-Kutta-Fehlberg 7(8), absolute and relative tolerance = tol"},
                {"crossing_tolerance", options.crossing_tol}}},
              {"summary",
               {{"seeds", sections.size()},
                {"points", total},
                {"max_abs_energy_residual", worst_energy},
                {"max_abs_r_offset", worst_offset}}}};
  if (f.format && *f.format == "json") {
    report["sections"] = per_seed;
  } else {
    Json brief = Json::array();
    for (const auto& s : per_seed) brief.push_back({{"seed", s["seed"]}, {"points", s["points"].size()}, {"stats", s["stats"]}, {"error", s["error"]}});
    report["sections"] = brief;
  }
  return {report, csv};
}

Json error_report(const std::string& kind, const std::string& message, const std::optional<Config>& config) {
  Json out{{"error", {{"kind", kind}, {"message", message}}}};
  if (config) out["config"] = config->json();
  return out;
}

}  // namespace

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integrability analysis of the generalized spring-pendulum"};
  app.require_subcommand(1);
  Flags f;
  const auto exact = [&](CLI::App* sub, bool energy) {
    sub->add_option("--k", f.k, "k as p/q");
    sub->add_option("--a", f.a, "a as p/q");
    if (energy) sub->add_option("--E", f.energy, "energy as p/q");
  };
  auto* invariants = app.add_subcommand("invariants", "Weierstrass invariants and critical energies");
  exact(invariants, true);
  invariants->add_option("--terms", f.terms, "wp terms of the orbit series");
  auto* kimura = app.add_subcommand("kimura", "Kimura test on the confluent equations or given exponent differences");
  kimura->add_option("--k", f.k, "k as p/q");
  kimura->add_option("--exponents", f.exponents, "three exponent differences, comma separated");
  auto* expsol = app.add_subcommand("expsol", "Exponential solutions of a normal variational equation");
  exact(expsol, true);
  expsol->add_option("--ode", f.ode, "algebraic-E0 | riemann-confluence-1 | riemann-confluence-2 | lame");
  auto* verdict = app.add_subcommand("verdict", "First-order Galois verdict");
  exact(verdict, false);
  auto* hove = app.add_subcommand("hove", "Higher-order variational residues at a = -k");
  exact(hove, true);
  hove->add_option("--max-order", f.max_order, "highest variational order");
  hove->add_option("--terms", f.terms, "Frobenius terms of the first-order solutions");
  auto* poincare = app.add_subcommand("poincare", "Poincare section at r = 1");
  exact(poincare, true);
  poincare->add_option("--tol", f.tol, "integrator tolerance");
  poincare->add_option("--seeds", f.seeds, "NxM grid or theta,p_theta[,sign];...");
  poincare->add_option("--crossings", f.crossings, "crossings per seed");
  poincare->add_flag("--both-directions", f.both_directions, "also record crossings with p_r < 0");
  for (auto* sub : {invariants, kimura, expsol, verdict, hove, poincare}) {
    sub->add_option("--out", f.out, "output path (stdout if omitted)");
    sub->add_option("--format", f.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  }

  std::vector<std::string> argv_storage{"swing"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  CLI::App* chosen = app.get_subcommands().front();
  std::optional<Config> config;
  try {
    config.emplace(chosen->get_name());
    if (chosen == poincare) {
      const std::string format = config->resolve("format", f.format, std::string("csv"));
      if (f.out) config->set("out", *f.out);
      const SectionRun run = run_poincare(f, *config);
      const Json report = with_config(run.report, *config);
      if (format == "csv") {
        if (f.out) {
          write_atomically(*f.out, run.csv);
          write_atomically(*f.out + ".json", report.dump(2) + "\n");
        } else {
          out << run.csv;
          err << report.dump(2) << "\n";
        }
      } else {
        emit(report, f.out, out);
      }
      return 0;
    }
    const std::string format = config->resolve("format", f.format, std::string("json"));
    if (format != "json") throw CLI::ValidationError("--format csv is only available for poincare");
    if (f.out) config->set("out", *f.out);
    Json report;
    if (chosen == invariants) report = run_invariants(f, *config);
    else if (chosen == kimura) report = run_kimura(f, *config);
    else if (chosen == expsol) report = run_expsol(f, *config);
    else if (chosen == verdict) report = run_verdict(f, *config);
    else report = run_hove(f, *config);
    emit(with_config(report, *config), f.out, out);
    return 0;
  } catch (const DomainError& e) {
    out << error_report("domain", e.what(), config).dump(2) << "\n";
    return 2;
  } catch (const TruncationError& e) {
    out << error_report("truncation", e.what(), config).dump(2) << "\n";
    return 2;
  } catch (const NotRepresentable& e) {
    out << error_report("not-representable", e.what(), config).dump(2) << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

std::vector<std::string> arguments_from_config(const Json& config) {
  std::vector<std::string> args{config.at("subcommand").get<std::string>()};
  std::vector<std::string> defaulted;
  if (config.contains("defaults_applied")) defaulted = config.at("defaults_applied").get<std::vector<std::string>>();
  for (const auto& [key, value] : config.items()) {
    if (key == "subcommand" || key == "defaults_applied" || key == "out") continue;
    if (std::find(defaulted.begin(), defaulted.end(), key) != defaulted.end()) continue;
    if (value.is_boolean()) {
      if (value.get<bool>()) args.push_back("--" + key);
      continue;
    }
    args.push_back("--" + key);
    args.push_back(value.is_string() ? value.get<std::string>() : value.dump());
  }
  return args;
}

}  // namespace swing
