#include "swing/cli/report.hpp"

namespace swing {

Json to_json(const Rational& value) { return to_string(value); }

Json to_json(const ExactScalar& value) { return to_string(value); }

Json to_json(const Poly& poly) {
  Json terms = Json::array();
  for (const auto& t : poly.terms()) {
    const auto e = Poly::unpack(t.monomial);
    terms.push_back({{"exponents", {e[0], e[1], e[2], e[3]}}, {"coefficient", to_string(t.coefficient)}});
  }
  return {{"text", to_string(poly)}, {"terms", terms}};
}

Json to_json(const LaurentSeries<Rational>& series) {
  Json coefficients = Json::array();
  for (int n = series.lowest_exponent(); n < series.order() && n <= (series.is_zero() ? n - 1 : series.last_exponent()); ++n)
    coefficients.push_back({{"exponent", n}, {"coefficient", to_string(series.coefficient(n))}});
  Json out{{"coefficients", coefficients}};
  out["certified_below"] = series.is_exact() ? Json(nullptr) : Json(series.order());
  return out;
}

Json to_json(const EllipticData& data) {
  return {{"g2", to_json(data.g2)}, {"g3", to_json(data.g3)}, {"discriminant", to_json(data.discriminant)}, {"degenerate", data.degenerate()}};
}

Json to_json(const SingularPointData& point) {
  return {{"location", to_string(point.location)},
          {"weight", point.location.weight()},
          {"exponents", {to_json(point.exponents[0]), to_json(point.exponents[1])}},
          {"difference", to_json(point.difference())},
          {"log", to_string(point.log_flag)}};
}

Json to_json(const KimuraVerdict& verdict) {
  Json out{{"outcome", to_string(verdict.outcome)}, {"solvable", verdict.solvable()}};
  if (verdict.outcome == KimuraVerdict::Outcome::kCaseA) {
    out["sum_index"] = verdict.sum_index;
    out["odd_sum"] = to_json(verdict.witness_sum);
  } else if (verdict.outcome == KimuraVerdict::Outcome::kCaseB) {
    out["family"] = verdict.family;
    out["signs"] = verdict.signs;
    out["permutation"] = verdict.permutation;
    Json integers = Json::array();
    for (const auto& n : verdict.integers) integers.push_back(n.get_str());
    out["integers"] = integers;
  }
  return out;
}

namespace {

Json assignments(const std::vector<ExponentAssignment>& exponents) {
  Json out = Json::array();
  for (const auto& e : exponents) {
    Json item{{"location", to_string(e.location)}, {"exponent", to_json(e.exponent)}};
    if (e.location.kind == SingularLocation::Kind::kFactor && e.multiplicity != e.location.weight()) {
      item["multiplicity"] = e.multiplicity;
      item["other"] = to_json(e.other);
    }
    out.push_back(item);
  }
  return out;
}

Json candidates(const std::vector<ExponentialCandidate>& list) {
  Json out = Json::array();
  for (const auto& c : list) out.push_back({{"exponents", assignments(c.exponents)}, {"degree", c.degree}, {"reason", c.reason}});
  return out;
}

}  // namespace

Json to_json(const ExponentialSearch& search) {
  Json solutions = Json::array();
  for (const auto& s : search.solutions)
    solutions.push_back({{"exponents", assignments(s.exponents)},
                         {"degree", s.degree},
                         {"polynomial", to_string(s.polynomial, "z")},
                         {"log_derivative", to_string(s.log_derivative)}});
  return {{"solutions", solutions},
          {"rejected", candidates(search.rejected)},
          {"requires_extension", candidates(search.requires_extension)},
          {"conclusive", search.conclusive()}};
}

Json to_json(const FuchsianODE& ode, const std::string& variable) {
  return {{"variable", variable}, {"p", to_string(ode.p(), variable)}, {"q", to_string(ode.q(), variable)}};
}

Json to_json(const NormalVariationalEquation& nve) {
  Json out{{"variant", to_string(nve.variant)}, {"energy", to_json(nve.params.energy)}};
  if (nve.fuchsian) out["equation"] = to_json(*nve.fuchsian, nve.variable);
  if (nve.lame)
    out["lame"] = {{"n", to_json(nve.lame->n)}, {"B", to_json(nve.lame->B)}, {"invariants", to_json(nve.lame->invariants)}};
  return out;
}

Json to_json(const Verdict& verdict) {
  Json out{{"outcome", to_string(verdict.outcome)}, {"summary", verdict.summary}};
  out["obstruction"] = verdict.obstruction == Verdict::Obstruction::kNone ? Json(nullptr) : Json(to_string(verdict.obstruction));
  if (verdict.classical) {
    const auto& c = *verdict.classical;
    Json confluences = Json::array();
    for (const auto& r : c.confluences) {
      Json points = Json::array();
      for (const auto& p : r.singular_points) points.push_back(to_json(p));
      confluences.push_back({{"index", r.index},
                             {"energy", to_json(r.energy)},
                             {"singular_points", points},
                             {"exponent_differences", {to_json(r.exponent_differences[0]), to_json(r.exponent_differences[1]),
                                                       to_json(r.exponent_differences[2])}},
                             {"kimura", to_json(r.kimura)},
                             {"family_witness", r.family_witness ? Json(r.family_witness->get_str()) : Json(nullptr)}});
    }
    out["branch"] = "classical";
    out["confluences"] = confluences;
    out["churchill"] = {{"q_squared", c.churchill_q_squared ? to_json(*c.churchill_q_squared) : Json(nullptr)},
                        {"q_rational", c.churchill_q_rational}};
  }
  if (verdict.generic) {
    const auto& g = *verdict.generic;
    Json points = Json::array();
    for (const auto& p : g.singular_points) points.push_back(to_json(p));
    out["branch"] = "generic";
    out["energy"] = to_json(g.energy);
    out["x0"] = to_json(g.x0);
    out["invariants"] = to_json(g.invariants);
    out["singular_points"] = points;
    out["log_at_x0"] = to_string(g.log_at_x0);
    out["log_obstruction"] = to_json(g.log_obstruction);
    out["exponential_search"] = to_json(g.search);
  }
  return out;
}

Json to_json(const HoveReport& report) {
  Json orders = Json::array();
  for (const auto& o : report.orders) {
    Json residues = Json::array();
    for (const auto& r : o.residues) residues.push_back(to_json(r));
    orders.push_back({{"order", o.order},
                      {"valuation_r", o.valuation_r},
                      {"valuation_theta", o.valuation_theta},
                      {"residues", residues},
                      {"obstruction", o.obstruction}});
  }
  return {{"k", to_json(report.k)},
          {"a", to_json(Rational(-report.k))},
          {"energy", to_json(report.energy)},
          {"max_order", report.max_order},
          {"budget", report.budget},
          {"invariants", to_json(report.invariants)},
          {"wronskians", {{"tangential", to_json(report.tangential_wronskian)}, {"normal", to_json(report.normal_wronskian)}}},
          {"orders", orders},
          {"obstruction", report.obstruction},
          {"first_obstruction_order", report.first_obstruction_order ? Json(*report.first_obstruction_order) : Json(nullptr)}};
}

Json to_json(const IntegrationStats& stats) {
  return {{"accepted_steps", stats.accepted}, {"rejected_steps", stats.rejected}, {"max_relative_energy_drift", stats.max_relative_drift}};
}

Json to_json(const SeedSection& section) {
  Json points = Json::array();
  for (const auto& p : section.points)
    points.push_back({{"theta", p.theta},
                      {"p_theta", p.p_theta},
                      {"t", p.t},
                      {"direction", p.direction},
                      {"r_offset", p.r_offset},
                      {"energy_residual", p.energy_residual}});
  return {{"seed", {{"theta", section.seed.theta}, {"p_theta", section.seed.p_theta}, {"p_r_sign", section.seed.p_r_sign}}},
          {"points", points},
          {"stats", to_json(section.stats)},
          {"error", section.error ? Json(*section.error) : Json(nullptr)}};
}

}  // namespace swing
