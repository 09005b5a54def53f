#pragma once

// Trivial lattice, Shioda-Tate rank bounds, height pairing of explicit
// sections and torsion bounds by reduction.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ellsurf/kodaira.hpp"
#include "ellsurf/poly.hpp"
#include "ellsurf/weierstrass.hpp"

namespace ellsurf {

struct TrivialLattice {
    unsigned rank = 2;
    Integer det_abs = 1;
    std::map<std::string, unsigned> summands;  // root lattice label -> multiplicity
    unsigned chi = 0;                          // F^2 = 0, Z^2 = -chi, F.Z = 1
};

/// Requires euler_number(c) == 12 k; throws DomainError("euler_mismatch").
TrivialLattice trivial_lattice(const Configuration& c, unsigned k);

/// Arithmetic genus of the minimal model: euler_number / 12. For U-members it
/// must equal the frame's k. Throws DomainError on either inconsistency.
unsigned chi_of(const WeierstrassPair& p, const Configuration& c);

/// 10 chi - 2 - sum of root lattice ranks. Throws DomainError("trivial_surface")
/// when the surface is constant (Shioda-Tate does not apply).
unsigned rank_bound(const WeierstrassPair& p);
/// Same, reusing an already computed configuration of p.
unsigned rank_bound(const WeierstrassPair& p, const Configuration& c);

struct Section {
    RatFunc x;
    RatFunc y;

    Section negated() const { return {x, RatFunc{-y.num, y.den}}; }
};

bool on_curve(const WeierstrassPair& p, const Section& P);

struct HeightContribution {
    bool at_infinity = false;
    Poly cluster;        // points sharing this contribution
    unsigned degree = 1;  // geometric multiplicity of the cluster
    KodairaFiber fiber = KodairaFiber::I(0);
    bool identity_component = true;
    Rational lower;  // per point
    Rational upper;
};

struct HeightResult {
    Rational lower;
    Rational upper;
    bool exact = false;
    unsigned chi = 0;
    unsigned po_intersection = 0;  // (P . O)
    std::vector<HeightContribution> contributions;  // non-identity meetings only
};

/// h(P) = 2 chi + 2 (P.O) - sum contr_v(P). Contributions of I_n (n >= 2) and
/// I_n^* (n >= 1) fibers are returned as intervals over their candidate sets.
/// Throws DomainError("not_on_curve"), ("trivial_surface"), ("inconsistent_section").
HeightResult height(const WeierstrassPair& p, const Section& P);

struct SpecializedCurve {
    Rational a;
    Rational b;
};

/// (A(t0), B(t0)); throws DomainError("bad_specialization") when D(t0) = 0.
SpecializedCurve specialize(const WeierstrassPair& p, const Rational& t0);

inline constexpr std::uint32_t kMaxCountingPrime = 10'000;

/// #E(F_q) for y^2 = x^3 + a x + b, including the point at infinity.
/// q must be an odd prime at most kMaxCountingPrime.
std::uint64_t count_points(std::int64_t a, std::int64_t b, std::uint32_t q);

struct PrimeCount {
    std::uint32_t prime;
    bool usable;
    std::uint64_t count;  // 0 when not usable
};

struct TorsionBound {
    std::uint64_t bound;
    std::vector<PrimeCount> per_prime;
};

/// gcd of #E_{t0}(F_q) over primes of good reduction; the torsion order of
/// E(Q(t)) divides it. Throws DomainError("prime_too_large"), ("not_an_odd_prime"),
/// ("no_usable_prime"), ("bad_specialization").
TorsionBound torsion_bound(const WeierstrassPair& p, const Rational& t0, std::span<const std::uint32_t> primes);

}  // namespace ellsurf
