#include "ellsurf/mwlattice.hpp"

#include <algorithm>
#include <numeric>

#include "ellsurf/error.hpp"

namespace ellsurf {

TrivialLattice trivial_lattice(const Configuration& c, unsigned k) {
    const unsigned e = euler_number(c);
    if (e != 12 * k)
        throw DomainError("euler_mismatch", "Euler number " + std::to_string(e) + " != 12k = " + std::to_string(12 * k));
    TrivialLattice t;
    t.chi = k;
    for (const auto& entry : c.entries) {
        RootLattice L = entry.fiber.root_lattice();
        if (L.family == RootLattice::Family::None) continue;
        t.rank += L.rank * entry.multiplicity;
        for (unsigned i = 0; i < entry.multiplicity; ++i) t.det_abs *= L.det();
        t.summands[L.label()] += entry.multiplicity;
    }
    return t;
}

unsigned chi_of(const WeierstrassPair& p, const Configuration& c) {
    const unsigned e = euler_number(c);
    if (e % 12 != 0)
        throw DomainError("inconsistent_local_data", "Euler number " + std::to_string(e) + " is not divisible by 12");
    const unsigned chi = e / 12;
    if (classify_membership(p).membership == Membership::U && chi != frame(p).k)
        throw DomainError("euler_mismatch", "U-member with chi != k");
    return chi;
}

namespace {

unsigned root_rank_sum(const Configuration& c) {
    unsigned r = 0;
    for (const auto& e : c.entries) r += e.fiber.lattice_rank() * e.multiplicity;
    return r;
}

[[noreturn]] void throw_trivial() {
    throw DomainError("trivial_surface", "trivial elliptic surface: Shioda-Tate bound inapplicable");
}

}  // namespace

unsigned rank_bound(const WeierstrassPair& p) {
    if (p.D().is_zero()) throw DomainError("not_in_S", "4A^3 + 27B^2 = 0: not an elliptic surface");
    if (detect_trivial(p)) throw_trivial();
    return rank_bound(p, configuration(p));
}

unsigned rank_bound(const WeierstrassPair& p, const Configuration& c) {
    if (detect_trivial(p)) throw_trivial();
    const unsigned chi = chi_of(p, c);
    // Constant surfaces outside Z^tr of the frame have no singular fibers at all.
    if (chi == 0) throw_trivial();
    const unsigned roots = root_rank_sum(c);
    if (roots + 2 > 10 * chi)
        throw DomainError("inconsistent_local_data", "root lattice rank exceeds 10 chi - 2");
    return 10 * chi - 2 - roots;
}

bool on_curve(const WeierstrassPair& p, const Section& P) {
    const Poly& xn = P.x.num;
    const Poly& xd = P.x.den;
    Poly xd2 = xd * xd;
    Poly rhs = (xn * xn * xn + p.A * xn * xd2 + p.B * xd2 * xd) * (P.y.den * P.y.den);
    Poly lhs = P.y.num * P.y.num * xd2 * xd;
    return lhs == rhs;
}

namespace {

struct RatLayer {
    Poly piece;
    bool infinite;  // function vanishes identically
    long v;
};

std::vector<RatLayer> rat_layers(const Poly& pi, const RatFunc& f) {
    std::vector<RatLayer> out;
    for (auto& ln : valuation_layers(pi, f.num)) {
        if (ln.v.is_infinite()) {
            out.push_back({std::move(ln.factor), true, 0});
            continue;
        }
        for (auto& ld : valuation_layers(ln.factor, f.den))
            out.push_back({std::move(ld.factor), false, long(ln.v.value()) - long(ld.v.value())});
    }
    return out;
}

unsigned degree_of(const Poly& f) { return static_cast<unsigned>(f.size() - 1); }

struct LocalPiece {
    Poly piece;
    long x_shift;   // valuation of x on the minimal model; meaningful when pole
    bool pole;      // section meets the zero section here
    bool singular;  // reduced point is the node/cusp of the Weierstrass cubic
};

// Local behaviour of P on the cluster pi of a chart with coefficients (A, B),
// after r minimality steps (x -> x / pi^2r, y -> y / pi^3r, A -> A / pi^4r).
std::vector<LocalPiece> analyse_cluster(const Poly& pi, unsigned r, const Poly& A, const Section& P) {
    const long r2 = 2 * long(r), r3 = 3 * long(r), r4 = 4 * long(r);
    const Poly xd2 = P.x.den * P.x.den;
    RatFunc slope = RatFunc::make(P.x.num * P.x.num * Rational(3) + A * xd2, xd2);  // 3x^2 + A

    std::vector<LocalPiece> out;
    for (auto& lx : rat_layers(pi, P.x)) {
        if (!lx.infinite && lx.v - r2 < 0) {
            out.push_back({std::move(lx.piece), lx.v - r2, true, false});
            continue;
        }
        for (auto& ly : rat_layers(lx.piece, P.y)) {
            const bool y_vanishes = ly.infinite || ly.v - r3 >= 1;
            for (auto& ls : rat_layers(ly.piece, slope)) {
                const bool slope_vanishes = ls.infinite || ls.v - r4 >= 1;
                out.push_back({std::move(ls.piece), 0, false, y_vanishes && slope_vanishes});
            }
        }
    }
    return out;
}

unsigned pole_contribution(long v, unsigned degree) {
    if (v % 2 != 0) throw DomainError("inconsistent_section", "odd pole order of x on the minimal model");
    return static_cast<unsigned>(-v / 2) * degree;
}

Rational frac(unsigned a, unsigned b) {
    Rational q(a, b);
    q.canonicalize();
    return q;
}

// Candidate range of contr_v(P) for a section meeting a non-identity component.
std::pair<Rational, Rational> contribution_range(const KodairaFiber& f) {
    switch (f.kind()) {
        case FiberKind::III: return {Rational(1, 2), Rational(1, 2)};
        case FiberKind::IV: return {Rational(2, 3), Rational(2, 3)};
        case FiberKind::IVStar: return {Rational(4, 3), Rational(4, 3)};
        case FiberKind::IIIStar: return {Rational(3, 2), Rational(3, 2)};
        case FiberKind::IStar:
            if (f.index() == 0) return {Rational(1), Rational(1)};
            return {Rational(1), 1 + frac(f.index(), 4)};
        case FiberKind::I: {
            const unsigned n = f.index();
            if (n < 2) return {Rational(0), Rational(0)};
            // i (n - i) / n over 1 <= i <= n - 1: least at i = 1, largest at i = n / 2.
            return {frac(n - 1, n), frac((n / 2) * (n - n / 2), n)};
        }
        case FiberKind::II:
        case FiberKind::IIStar: return {Rational(0), Rational(0)};
    }
    return {Rational(0), Rational(0)};
}

// s^shift * num / den with a possibly negative shift.
RatFunc shifted(const Poly& num, const Poly& den, long shift) {
    Poly s_pow = Poly::monomial(Rational(1), static_cast<std::size_t>(shift < 0 ? -shift : shift));
    return shift >= 0 ? RatFunc::make(num * s_pow, den) : RatFunc::make(num, den * s_pow);
}

// s^{weight k} f(1/s) for a rational function f.
RatFunc to_infinity_chart(const RatFunc& f, unsigned weight) {
    if (f.is_zero()) return {};
    const long dn = long(degree_of(f.num)), dd = long(degree_of(f.den));
    return shifted(reverse_pad(f.num, dn), reverse_pad(f.den, dd), long(weight) + dd - dn);
}

}  // namespace

HeightResult height(const WeierstrassPair& p, const Section& P) {
    if (p.D().is_zero()) throw DomainError("not_in_S", "4A^3 + 27B^2 = 0: not an elliptic surface");
    if (!on_curve(p, P)) throw DomainError("not_on_curve", "section does not satisfy the Weierstrass equation");
    if (detect_trivial(p)) throw_trivial();

    auto places = classify_places(p);
    Configuration config = configuration_of(places);
    HeightResult res;
    res.chi = chi_of(p, config);
    if (res.chi == 0) throw_trivial();

    unsigned po = 0;
    Rational contr_lo = 0, contr_hi = 0;
    auto record = [&](const ClassifiedPlace& cp, const std::vector<LocalPiece>& pieces) {
        for (const auto& lp : pieces) {
            const unsigned deg = degree_of(lp.piece);
            if (lp.pole) {
                po += pole_contribution(lp.x_shift, deg);
                continue;
            }
            if (!lp.singular) continue;
            auto [lo, hi] = contribution_range(cp.local.fiber);
            if (hi == 0) continue;
            contr_lo += lo * deg;
            contr_hi += hi * deg;
            res.contributions.push_back(
                {cp.place.at_infinity, lp.piece, deg, cp.local.fiber, false, lo, hi});
        }
    };

    const unsigned k = frame(p).k;
    Poly bad_support = Poly::constant(Rational(1));
    for (const auto& cp : places) {
        if (cp.place.at_infinity) {
            auto [A_inf, B_inf] = infinity_model(p);
            Section P_inf{to_infinity_chart(P.x, 2 * k), to_infinity_chart(P.y, 3 * k)};
            record(cp, analyse_cluster(cp.place.pi, cp.local.reductions, A_inf, P_inf));
        } else {
            bad_support = bad_support * cp.place.pi;
            record(cp, analyse_cluster(cp.place.pi, cp.local.reductions, p.A, P));
        }
    }

    // Poles of x at places of good reduction.
    if (!P.x.den.is_constant()) {
        for (const auto& [f, mult] : squarefree_decompose(P.x.den)) {
            Poly outside = div_exact(f, gcd(f, bad_support));
            if (!outside.is_constant()) po += pole_contribution(-long(mult), degree_of(outside));
        }
    }

    res.po_intersection = po;
    const Rational base = Rational(2 * res.chi) + Rational(2 * po);
    res.upper = base - contr_lo;
    res.lower = base - contr_hi;
    if (res.upper < 0) throw DomainError("inconsistent_section", "negative height");
    if (res.lower < 0) res.lower = 0;
    res.exact = res.lower == res.upper;
    return res;
}

SpecializedCurve specialize(const WeierstrassPair& p, const Rational& t0) {
    if (p.D().eval(t0) == 0)
        throw DomainError("bad_specialization", "discriminant vanishes at t0 = " + to_string(t0));
    return {p.A.eval(t0), p.B.eval(t0)};
}

std::uint64_t count_points(std::int64_t a, std::int64_t b, std::uint32_t q) {
    const std::int64_t Q = q;
    a = ((a % Q) + Q) % Q;
    b = ((b % Q) + Q) % Q;
    std::vector<std::uint8_t> roots(q, 0);  // number of square roots of each residue
    for (std::int64_t y = 0; y < Q; ++y) ++roots[static_cast<std::size_t>(y * y % Q)];
    std::uint64_t count = 1;
    for (std::int64_t x = 0; x < Q; ++x) {
        std::int64_t rhs = ((x * x % Q) * x + a * x + b) % Q;
        count += roots[static_cast<std::size_t>(rhs)];
    }
    return count;
}

namespace {

bool is_odd_prime(std::uint32_t q) {
    if (q < 3 || q % 2 == 0) return false;
    for (std::uint32_t d = 3; d * d <= q; d += 2)
        if (q % d == 0) return false;
    return true;
}

// r mod q, or nullopt when q divides the denominator.
std::optional<std::int64_t> reduce_mod(const Rational& r, std::uint32_t q) {
    Integer qq = q;
    Integer den = r.get_den() % qq;
    if (den == 0) return std::nullopt;
    Integer inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), qq.get_mpz_t());
    Integer num = r.get_num() % qq;
    Integer v = (num * inv) % qq;
    if (v < 0) v += qq;
    return v.get_si();
}

}  // namespace

TorsionBound torsion_bound(const WeierstrassPair& p, const Rational& t0, std::span<const std::uint32_t> primes) {
    auto [a, b] = specialize(p, t0);
    TorsionBound out{0, {}};
    for (std::uint32_t q : primes) {
        if (q > kMaxCountingPrime)
            throw DomainError("prime_too_large", std::to_string(q) + " exceeds " + std::to_string(kMaxCountingPrime));
        if (!is_odd_prime(q)) throw DomainError("not_an_odd_prime", std::to_string(q) + " is not an odd prime");
        auto am = reduce_mod(a, q);
        auto bm = reduce_mod(b, q);
        bool usable = am && bm;
        if (usable) {
            const std::int64_t Q = q;
            std::int64_t disc = (4 * (*am * *am % Q) % Q * *am + 27 * (*bm * *bm % Q)) % Q;
            usable = disc != 0;
        }
        if (!usable) {
            out.per_prime.push_back({q, false, 0});
            continue;
        }
        std::uint64_t n = count_points(*am, *bm, q);
        out.per_prime.push_back({q, true, n});
        out.bound = std::gcd(out.bound, n);
    }
    if (out.bound == 0) throw DomainError("no_usable_prime", "no prime of good reduction in the list");
    return out;
}

}  // namespace ellsurf
