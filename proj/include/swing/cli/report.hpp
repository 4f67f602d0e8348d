#pragma once

#include <json.hpp>

#include "swing/elliptic.hpp"
#include "swing/fuchsian.hpp"
#include "swing/galois/hove.hpp"
#include "swing/galois/nve.hpp"
#include "swing/galois/verdict.hpp"
#include "swing/orbits.hpp"

namespace swing {

using Json = nlohmann::ordered_json;

// Exact values serialize as strings ("p/q", surds as in to_string).
Json to_json(const Rational& value);
Json to_json(const ExactScalar& value);
Json to_json(const Poly& poly);
Json to_json(const LaurentSeries<Rational>& series);
Json to_json(const EllipticData& data);
Json to_json(const SingularPointData& point);
Json to_json(const KimuraVerdict& verdict);
Json to_json(const ExponentialSearch& search);
Json to_json(const FuchsianODE& ode, const std::string& variable);
Json to_json(const NormalVariationalEquation& nve);
Json to_json(const Verdict& verdict);
Json to_json(const HoveReport& report);
Json to_json(const IntegrationStats& stats);
Json to_json(const SeedSection& section);

}  // namespace swing
