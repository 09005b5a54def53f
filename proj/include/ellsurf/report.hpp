#pragma once

// JSON rendering of analyses. Rationals are "p/q" strings, polynomials are
// coefficient lists low to high, valuations are integers or "inf".

#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "ellsurf/family.hpp"
#include "ellsurf/kodaira.hpp"
#include "ellsurf/mahler.hpp"
#include "ellsurf/mwlattice.hpp"
#include "ellsurf/twist.hpp"
#include "ellsurf/weierstrass.hpp"

namespace ellsurf {

using json = nlohmann::json;

json coefficients_json(const Poly& p);
/// Inverse of coefficients_json; throws ParseError on malformed entries.
Poly poly_from_json(const json& j);

json valuation_json(const Valuation& v);
json place_json(const Place& p);
json configuration_json(const Configuration& c);
json trivial_lattice_json(const TrivialLattice& t);

/// Keys: input, frame, membership, invariants, places, configuration,
/// trivial_lattice, rank_bound. Throws DomainError("not_in_S") when D = 0.
json surface_report(const WeierstrassPair& p);

json height_json(const HeightResult& h);
json torsion_json(const TorsionBound& t, const Rational& t0);
json twist_probe_json(std::span<const TwistProbe> probes);
json mahler_json(const MahlerResult& r, double tol);
json box_spec_json(const BoxSpec& spec);
json density_json(const DensityReport& r);

/// Multi-line text rendering of a surface report for terminals.
std::string human_readable(const json& report);

}  // namespace ellsurf
