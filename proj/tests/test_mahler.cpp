#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "ellsurf/error.hpp"
#include "ellsurf/mahler.hpp"
#include "test_support.hpp"

using namespace ellsurf;

namespace {

// Closed form for a t^2 + b t + c.
double quadratic_mahler(double a, double b, double c) {
    std::complex<double> disc = std::sqrt(std::complex<double>(b * b - 4 * a * c));
    std::complex<double> r1 = (-b + disc) / (2 * a), r2 = (-b - disc) / (2 * a);
    return std::fabs(a) * std::max(1.0, std::abs(r1)) * std::max(1.0, std::abs(r2));
}

}  // namespace

TEST_CASE("mahler examples") {
    CHECK(mahler_measure(parse_poly("t")).value == doctest::Approx(1).epsilon(1e-12));
    CHECK(std::fabs(mahler_measure(parse_poly("t^2 - 2")).value - 2) < 1e-10);
    CHECK(std::fabs(mahler_measure(parse_poly("2*t + 4")).value - 4) < 1e-10);
    CHECK(mahler_measure(parse_poly("-5")).value == doctest::Approx(5));
    CHECK_THROWS_AS(mahler_measure(Poly()), DomainError);
    CHECK_THROWS_AS(mahler_measure(parse_poly("t"), 0), DomainError);
}

TEST_CASE("mahler agrees with the quadratic formula") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> c(-20, 20);
    for (int trial = 0; trial < 300; ++trial) {
        long a = c(rng), b = c(rng), d = c(rng);
        if (a == 0) continue;
        Poly f = Poly::from_ints({d, b, a});
        double expect = quadratic_mahler(a, b, d);
        auto r = mahler_measure(f);
        CHECK(std::fabs(r.value - expect) <= 1e-8 * expect);
    }
}

TEST_CASE("cyclotomic and Lehmer values") {
    CHECK(mahler_measure(parse_poly("t^6 + t^5 + t^4 + t^3 + t^2 + t + 1")).value == doctest::Approx(1).epsilon(1e-9));
    CHECK(mahler_measure(pow(parse_poly("t^2 + 1"), 3)).value == doctest::Approx(1).epsilon(1e-9));
    // Lehmer's polynomial; measure is its largest real root.
    Poly lehmer = parse_poly("t^10 + t^9 - t^7 - t^6 - t^5 - t^4 - t^3 + t + 1");
    CHECK(mahler_measure(lehmer).value == doctest::Approx(1.17628081825991750654).epsilon(1e-9));
}

TEST_CASE("property: multiplicativity and scaling") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        Poly f = testing::random_poly(rng, 1 + rng() % 4, 9, false);
        Poly g = testing::random_poly(rng, 1 + rng() % 4, 9, false);
        if (f.is_zero() || g.is_zero()) continue;
        double mf = mahler_measure(f).value, mg = mahler_measure(g).value;
        double mfg = mahler_measure(f * g).value;
        CHECK(std::fabs(mfg - mf * mg) <= 1e-8 * mf * mg);
        CHECK(mahler_measure(f * Rational(3)).value == doctest::Approx(3 * mf).epsilon(1e-10));
        CHECK(mf >= std::fabs(f.leading().get_d()) * (1 - 1e-12));
    }
}

TEST_CASE("reported error bound covers the deviation from the closed form") {
    Poly f = parse_poly("t^2 - 2");
    auto r = mahler_measure(f, 1e-6);
    CHECK(r.error >= 0);
    CHECK(std::fabs(r.value - 2) <= r.error + 1e-12);
    CHECK(r.iterations >= 1);
}

TEST_CASE("aberth roots satisfy the polynomial") {
    Poly f = parse_poly("t^5 - 3*t^3 + t - 7");
    auto roots = aberth_roots(f, 1e-12);
    REQUIRE(roots.size() == 5);
    for (auto z : roots) {
        std::complex<long double> v = 0;
        for (std::size_t k = f.size(); k-- > 0;) v = v * z + static_cast<long double>(f.coefficient(k).get_d());
        CHECK(std::abs(v) < 1e-9L);
    }
}
