#include "ellsurf/weierstrass.hpp"

#include <algorithm>

#include "ellsurf/error.hpp"

namespace ellsurf {

WeierstrassPair WeierstrassPair::make(Poly A, Poly B, unsigned m, unsigned n) {
    if (m == 0 || n == 0) throw DomainError("bad_frame", "frame degrees m, n must be positive");
    if (A.size() > m + 1) throw DomainError("degree_exceeds_frame", "deg A exceeds m");
    if (B.size() > n + 1) throw DomainError("degree_exceeds_frame", "deg B exceeds n");
    return WeierstrassPair{std::move(A), std::move(B), m, n};
}

Poly WeierstrassPair::D() const {
    Poly a3 = A * A * A;
    Poly b2 = B * B;
    return a3 * Rational(4) + b2 * Rational(27);
}

Frame frame(unsigned m, unsigned n) {
    if (m == 0 || n == 0) throw DomainError("bad_frame", "frame degrees m, n must be positive");
    // ceil(max(m/4, n/6)) and floor(min(m/4, n/6)) in integer arithmetic.
    unsigned k = std::max((m + 3) / 4, (n + 5) / 6);
    unsigned s = std::min(m / 4, n / 6);
    return Frame{k, 4 * k - m, 6 * k - n, s};
}

Invariants invariants(const WeierstrassPair& p) {
    Invariants inv;
    inv.D = p.D();
    if (inv.D.is_zero()) throw DomainError("not_in_S", "4A^3 + 27B^2 = 0: not an elliptic surface");
    inv.c4 = p.A * Rational(-48);
    inv.c6 = p.B * Rational(-864);
    inv.disc = inv.D * Rational(-16);
    RatFunc j = RatFunc::make(p.A * p.A * p.A * Rational(6912), inv.D);
    inv.j_num = std::move(j.num);
    inv.j_den = std::move(j.den);
    return inv;
}

std::string to_string(Membership m) {
    switch (m) {
        case Membership::NotInS: return "not_in_S";
        case Membership::SOnly: return "S_only";
        case Membership::U: return "U";
    }
    return "?";
}

MembershipResult classify_membership(const WeierstrassPair& p) {
    MembershipResult r;
    r.expected_deg_D = std::max<std::size_t>(3 * p.m, 2 * p.n);
    Poly D = p.D();
    r.deg_D = D.degree();
    if (D.is_zero()) {
        r.membership = Membership::NotInS;
        return r;
    }
    const bool degree_ok = *r.deg_D == r.expected_deg_D;
    const bool squarefree = is_squarefree(D);
    if (degree_ok && squarefree) {
        r.membership = Membership::U;
        return r;
    }
    r.membership = Membership::SOnly;
    if (!squarefree) r.failed = "not_squarefree";
    if (!degree_ok) r.failed += r.failed.empty() ? "degree_drop" : ",degree_drop";
    return r;
}

namespace {

// Monic u with f = lc(f) * u^e, if one exists.
std::optional<Poly> monic_root(const Poly& f, unsigned e) {
    Poly u = Poly::constant(Rational(1));
    for (const auto& [g, mult] : squarefree_decompose(f)) {
        if (mult % e != 0) return std::nullopt;
        u = u * pow(g, mult / e);
    }
    return u;
}

}  // namespace

std::optional<TrivialWitness> detect_constant_scaling(const Poly& A, const Poly& B) {
    if (A.is_zero() && B.is_zero()) return std::nullopt;
    std::optional<Poly> uA, uB;
    if (!A.is_zero()) {
        uA = monic_root(A, 4);
        if (!uA) return std::nullopt;
    }
    if (!B.is_zero()) {
        uB = monic_root(B, 6);
        if (!uB) return std::nullopt;
    }
    if (uA && uB && *uA != *uB) return std::nullopt;

    TrivialWitness w;
    w.lambda = A.is_zero() ? Rational(0) : A.leading();
    w.mu = B.is_zero() ? Rational(0) : B.leading();
    w.u = uA ? *uA : *uB;
    if (4 * w.lambda * w.lambda * w.lambda + 27 * w.mu * w.mu == 0) return std::nullopt;
    return w;
}

std::optional<TrivialWitness> detect_trivial(const WeierstrassPair& p) {
    auto w = detect_constant_scaling(p.A, p.B);
    if (!w) return std::nullopt;
    if (w->u.size() - 1 > frame(p).s_tr) return std::nullopt;
    return w;
}

InfinityModel infinity_model(const WeierstrassPair& p) {
    const unsigned k = frame(p).k;
    return {reverse_pad(p.A, 4 * k), reverse_pad(p.B, 6 * k)};
}

}  // namespace ellsurf
