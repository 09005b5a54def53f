#pragma once

// Quadratic twists (A, B) -> (d^2 A, d^3 B) and their detection.

#include <optional>
#include <span>
#include <vector>

#include "ellsurf/poly.hpp"
#include "ellsurf/weierstrass.hpp"

namespace ellsurf {

/// Squarefree integer representative of a class in Q* / (Q*)^2.
struct TwistClass {
    Integer d;
    friend bool operator==(const TwistClass&, const TwistClass&) = default;
};

inline constexpr unsigned long kTrialDivisionLimit = 1'000'000;

/// Class of d = p/q, via the squarefree part of p*q. Trial division up to
/// kTrialDivisionLimit; a larger unfactored part throws DomainError("unfactored").
TwistClass twist_class(const Rational& d);

/// (d^2 A, d^3 B) in the same frame. Throws DomainError("zero_twist") for d = 0.
WeierstrassPair twist(const WeierstrassPair& p, const Rational& d);

struct DetectedTwist {
    TwistClass cls;
    Rational d;  // a witness with A2 = d^2 A1, B2 = d^3 B1
    /// B vanishes, so d is only determined up to sign; cls is the class of |d|.
    bool sign_ambiguous = false;
};

std::optional<DetectedTwist> detect_twist(const WeierstrassPair& p1, const WeierstrassPair& p2);

/// Rational u with A2 = u^4 A1 and B2 = u^6 B1, if any.
std::optional<Rational> constant_isomorphism(const WeierstrassPair& p1, const WeierstrassPair& p2);

struct TwistProbe {
    long d;
    bool in_U;
    bool isomorphic;
};

/// Twists p by each d and reports U-membership and Q-isomorphism to p.
std::vector<TwistProbe> tw_probe(const WeierstrassPair& p, std::span<const long> ds);

}  // namespace ellsurf
