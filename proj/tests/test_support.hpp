#pragma once

#include <random>

#include "ellsurf/poly.hpp"
#include "ellsurf/weierstrass.hpp"

namespace ellsurf::testing {

// Random polynomial of degree <= max_deg with coefficients in [-bound, bound],
// optionally with denominators up to 4.
inline Poly random_poly(std::mt19937_64& rng, std::size_t max_deg, long bound, bool rational) {
    std::uniform_int_distribution<long> c(-bound, bound);
    std::uniform_int_distribution<long> d(1, 4);
    std::vector<Rational> coeffs(max_deg + 1);
    for (auto& x : coeffs) {
        x = Rational(c(rng), rational ? d(rng) : 1);
        x.canonicalize();
    }
    return Poly(std::move(coeffs));
}

// Integer pair with full degrees (m, n); membership in U is checked by the caller.
inline WeierstrassPair random_full_pair(std::mt19937_64& rng, unsigned m, unsigned n, long bound) {
    std::uniform_int_distribution<long> c(-bound, bound);
    std::uniform_int_distribution<long> nz(1, bound);
    auto make = [&](unsigned d) {
        std::vector<Rational> v(d + 1);
        for (auto& x : v) x = c(rng);
        v[d] = nz(rng) * (rng() % 2 ? 1 : -1);
        return Poly(std::move(v));
    };
    Poly A = make(m);
    Poly B = make(n);
    return WeierstrassPair::make(A, B, m, n);
}

}  // namespace ellsurf::testing
