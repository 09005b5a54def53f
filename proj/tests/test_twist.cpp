#include <doctest.h>

#include <random>

#include "ellsurf/error.hpp"
#include "ellsurf/kodaira.hpp"
#include "ellsurf/twist.hpp"
#include "test_support.hpp"

using namespace ellsurf;

namespace {

WeierstrassPair pair(const char* A, const char* B, unsigned m, unsigned n) {
    return WeierstrassPair::make(parse_poly(A), parse_poly(B), m, n);
}

// Squarefree part of an integer by brute-force trial division.
long squarefree_part(long d) {
    long s = d < 0 ? -1 : 1, n = d < 0 ? -d : d;
    for (long p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) n /= p, ++e;
        if (e % 2) s *= p;
    }
    return s * n;
}

}  // namespace

TEST_CASE("twist examples") {
    auto p = pair("t", "1", 1, 1);
    auto q = twist(p, 2);
    CHECK(q.A == parse_poly("4*t"));
    CHECK(q.B == parse_poly("8"));
    CHECK(twist(p, 1) == p);
    CHECK_THROWS_AS(twist(p, 0), DomainError);
}

TEST_CASE("twist_class representatives") {
    CHECK(twist_class(2).d == 2);
    CHECK(twist_class(4).d == 1);
    CHECK(twist_class(-12).d == -3);
    CHECK(twist_class(Rational(1, 2)).d == 2);
    CHECK(twist_class(Rational(9, 8)).d == 2);
    CHECK(twist_class(Rational(-50, 3)).d == -6);
    for (long d = -300; d <= 300; ++d)
        if (d != 0) CHECK(twist_class(d).d == squarefree_part(d));
    // Large prime cofactor below the trial-division square.
    CHECK(twist_class(Rational(Integer("1000003"))).d == 1000003);
}

TEST_CASE("detect_twist examples") {
    auto p = pair("t", "1", 1, 1);
    auto r = detect_twist(p, pair("4*t", "8", 1, 1));
    REQUIRE(r.has_value());
    CHECK(r->cls.d == 2);
    CHECK(r->d == 2);
    CHECK_FALSE(r->sign_ambiguous);
    r = detect_twist(p, pair("9*t", "27", 1, 1));
    REQUIRE(r.has_value());
    CHECK(r->cls.d == 3);
    CHECK_FALSE(detect_twist(p, pair("4*t", "27", 1, 1)).has_value());
    CHECK_FALSE(detect_twist(p, pair("4*t + 1", "8", 1, 1)).has_value());

    // B = 0: only d^2 is determined.
    r = detect_twist(pair("t", "0", 1, 1), pair("4*t", "0", 1, 1));
    REQUIRE(r.has_value());
    CHECK(r->sign_ambiguous);
    CHECK(r->cls.d == 2);
    // A = 0: d^3 determines d.
    r = detect_twist(pair("0", "t", 1, 1), pair("0", "-8*t", 1, 1));
    REQUIRE(r.has_value());
    CHECK(r->cls.d == -2);
}

TEST_CASE("tw_probe examples") {
    auto p = pair("t", "1", 1, 1);
    std::vector<long> ds{2, 3, 5};
    for (const auto& pr : tw_probe(p, ds)) CHECK(pr.in_U);
    ds = {4};
    auto pr = tw_probe(p, ds);
    CHECK(pr[0].isomorphic);
    ds = {-1};
    pr = tw_probe(p, ds);
    CHECK(pr[0].in_U);
    CHECK_FALSE(pr[0].isomorphic);
}

TEST_CASE("property: twists preserve j, configuration and U-membership and are detected") {
    std::mt19937_64 rng(59);
    const long ds[] = {-10, -7, -6, -5, -3, -2, -1, 1, 2, 3, 5, 6, 7, 10};
    int checked = 0;
    for (int trial = 0; trial < 400 && checked < 60; ++trial) {
        unsigned m = 1 + rng() % 4, n = 1 + rng() % 6;
        auto p = testing::random_full_pair(rng, m, n, 5);
        if (classify_membership(p).membership != Membership::U) continue;
        ++checked;
        long d = ds[rng() % std::size(ds)];
        auto q = twist(p, d);
        auto i1 = invariants(p), i2 = invariants(q);
        CHECK(i1.j_num == i2.j_num);
        CHECK(i1.j_den == i2.j_den);
        CHECK(configuration(p).signature() == configuration(q).signature());
        CHECK(classify_membership(q).membership == Membership::U);
        auto det = detect_twist(p, q);
        REQUIRE(det.has_value());
        CHECK(det->cls == twist_class(d));
    }
    CHECK(checked >= 50);
}
