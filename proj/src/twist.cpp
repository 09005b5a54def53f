#include "ellsurf/twist.hpp"

#include "ellsurf/error.hpp"

namespace ellsurf {

TwistClass twist_class(const Rational& d) {
    if (sgn(d) == 0) throw DomainError("zero_twist", "twist parameter must be nonzero");
    Integer n = abs(d.get_num()) * d.get_den();
    Integer out = sgn(d) < 0 ? -1 : 1;
    for (unsigned long f = 2; f <= kTrialDivisionLimit && Integer(f) * f <= n; f += (f == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), f)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), f);
            ++e;
        }
        if (e % 2) out *= f;
    }
    if (n > 1) {
        // With no factor up to the limit, a cofactor below limit^2 is prime.
        if (n >= Integer(kTrialDivisionLimit) * kTrialDivisionLimit)
            throw DomainError("unfactored", "cofactor " + n.get_str() + " exceeds trial division range");
        out *= n;
    }
    return {out};
}

WeierstrassPair twist(const WeierstrassPair& p, const Rational& d) {
    if (sgn(d) == 0) throw DomainError("zero_twist", "twist parameter must be nonzero");
    Rational d2 = d * d;
    return WeierstrassPair{p.A * d2, p.B * (d2 * d), p.m, p.n};
}

namespace {

struct Ratio {
    enum class Kind { BothZero, Value, None } kind;
    Rational r;
};

// r with b = r * a.
Ratio ratio(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) return {Ratio::Kind::BothZero, 0};
    if (a.is_zero() || b.is_zero() || a.size() != b.size()) return {Ratio::Kind::None, 0};
    Rational r = b.leading() / a.leading();
    if (a * r != b) return {Ratio::Kind::None, 0};
    return {Ratio::Kind::Value, r};
}

std::optional<Integer> integer_root(const Integer& x, unsigned e) {
    Integer r;
    if (mpz_root(r.get_mpz_t(), x.get_mpz_t(), e) == 0) return std::nullopt;
    return r;
}

// Real e-th root of r when it is rational (the positive one for even e).
std::optional<Rational> rational_root(const Rational& r, unsigned e) {
    if (sgn(r) < 0 && e % 2 == 0) return std::nullopt;
    auto num = integer_root(r.get_num(), e);
    auto den = integer_root(r.get_den(), e);
    if (!num || !den) return std::nullopt;
    Rational out(*num, *den);
    out.canonicalize();
    return out;
}

}  // namespace

std::optional<DetectedTwist> detect_twist(const WeierstrassPair& p1, const WeierstrassPair& p2) {
    Ratio ra = ratio(p1.A, p2.A);
    Ratio rb = ratio(p1.B, p2.B);
    using K = Ratio::Kind;
    if (ra.kind == K::None || rb.kind == K::None) return std::nullopt;
    if (ra.kind == K::BothZero && rb.kind == K::BothZero) return std::nullopt;

    DetectedTwist out;
    if (ra.kind == K::Value && rb.kind == K::Value) {
        out.d = rb.r / ra.r;
        if (out.d * out.d != ra.r) return std::nullopt;
    } else if (ra.kind == K::Value) {
        auto d = rational_root(ra.r, 2);
        if (!d) return std::nullopt;
        out.d = *d;
        out.sign_ambiguous = true;
    } else {
        auto d = rational_root(rb.r, 3);
        if (!d) return std::nullopt;
        out.d = *d;
    }
    out.cls = twist_class(out.d);
    return out;
}

std::optional<Rational> constant_isomorphism(const WeierstrassPair& p1, const WeierstrassPair& p2) {
    Ratio ra = ratio(p1.A, p2.A);
    Ratio rb = ratio(p1.B, p2.B);
    using K = Ratio::Kind;
    if (ra.kind == K::None || rb.kind == K::None) return std::nullopt;
    if (ra.kind == K::BothZero && rb.kind == K::BothZero) return std::nullopt;
    if (ra.kind == K::Value && rb.kind == K::Value) {
        auto u = rational_root(rb.r / ra.r, 2);
        if (!u) return std::nullopt;
        Rational u2 = *u * *u;
        if (u2 * u2 != ra.r) return std::nullopt;
        return u;
    }
    if (ra.kind == K::Value) return rational_root(ra.r, 4);
    return rational_root(rb.r, 6);
}

std::vector<TwistProbe> tw_probe(const WeierstrassPair& p, std::span<const long> ds) {
    std::vector<TwistProbe> out;
    out.reserve(ds.size());
    for (long d : ds) {
        WeierstrassPair q = twist(p, Rational(d));
        out.push_back({d, classify_membership(q).membership == Membership::U, constant_isomorphism(p, q).has_value()});
    }
    return out;
}

}  // namespace ellsurf
