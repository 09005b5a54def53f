#pragma once

// Short Weierstrass pairs y^2 = x^3 + A(t) x + B(t) framed in a degree box (m, n).

#include <optional>
#include <string>

#include "ellsurf/poly.hpp"

namespace ellsurf {

struct WeierstrassPair {
    Poly A;
    Poly B;
    unsigned m = 1;  // declared bound for deg A
    unsigned n = 1;  // declared bound for deg B

    /// Throws DomainError if m or n is zero or a degree exceeds its bound.
    static WeierstrassPair make(Poly A, Poly B, unsigned m, unsigned n);

    /// 4A^3 + 27B^2.
    Poly D() const;

    friend bool operator==(const WeierstrassPair&, const WeierstrassPair&) = default;
};

struct Frame {
    unsigned k;
    unsigned alpha;
    unsigned beta;
    unsigned s_tr;  // degree bound for u in the trivial locus

    friend bool operator==(const Frame&, const Frame&) = default;
};

/// k = ceil(max(m/4, n/6)), alpha = 4k - m, beta = 6k - n, s_tr = floor(min(m/4, n/6)).
Frame frame(unsigned m, unsigned n);
inline Frame frame(const WeierstrassPair& p) { return frame(p.m, p.n); }

struct Invariants {
    Poly c4;    // -48 A
    Poly c6;    // -864 B
    Poly disc;  // -16 D
    Poly D;     // 4A^3 + 27B^2
    Poly j_num;
    Poly j_den;  // monic; j = j_num / j_den = 6912 A^3 / D
};

/// Throws DomainError("not_in_S") when D = 0.
Invariants invariants(const WeierstrassPair& p);

enum class Membership { NotInS, SOnly, U };
std::string to_string(Membership m);

struct MembershipResult {
    Membership membership;
    /// For SOnly: which U condition failed ("not_squarefree", "degree_drop" or both joined by ',').
    std::string failed;
    std::optional<std::size_t> deg_D;
    std::size_t expected_deg_D = 0;  // max(3m, 2n)
};

MembershipResult classify_membership(const WeierstrassPair& p);

/// (A, B) = (lambda u^4, mu u^6) with u monic.
struct TrivialWitness {
    Rational lambda;
    Rational mu;
    Poly u;
};

/// Witness for membership in the trivial locus Z^tr (deg u <= s_tr,
/// 4 lambda^3 + 27 mu^2 != 0), or nullopt.
std::optional<TrivialWitness> detect_trivial(const WeierstrassPair& p);

/// Like detect_trivial but without the degree bound on u; such pairs define
/// constant surfaces even when they fall outside Z^tr of the frame.
std::optional<TrivialWitness> detect_constant_scaling(const Poly& A, const Poly& B);

struct InfinityModel {
    Poly A_inf;  // s^{4k} A(1/s)
    Poly B_inf;  // s^{6k} B(1/s)
};

InfinityModel infinity_model(const WeierstrassPair& p);

}  // namespace ellsurf
