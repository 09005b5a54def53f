#include "ellsurf/mahler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ellsurf/error.hpp"

namespace ellsurf {

namespace {

using cld = std::complex<long double>;

struct Eval {
    cld value;
    cld deriv;
    long double scale;  // sum |a_i| |z|^i, for the relative residual
};

Eval horner(const std::vector<long double>& a, cld z) {
    cld p = 0, dp = 0;
    long double s = 0, az = std::abs(z);
    for (std::size_t k = a.size(); k-- > 0;) {
        dp = dp * z + p;
        p = p * z + a[k];
        s = s * az + std::fabs(a[k]);
    }
    return {p, dp, s};
}

}  // namespace

std::vector<cld> aberth_roots(const Poly& f, double tol, unsigned* iterations) {
    if (f.is_zero()) throw DomainError("zero_polynomial", "roots of the zero polynomial");
    const std::size_t n = f.size() - 1;
    if (iterations) *iterations = 0;
    if (n == 0) return {};

    std::vector<long double> a(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) a[i] = static_cast<long double>(f.coefficients()[i].get_d());
    if (n == 1) return {cld(-a[0] / a[1], 0)};

    const long double radius =
        1 + static_cast<long double>(Rational(naive_height(f) / abs(f.leading())).get_d());
    std::vector<cld> z(n);
    for (std::size_t k = 0; k < n; ++k) {
        long double theta = 2 * std::numbers::pi_v<long double> * k / n + 0.4L;
        z[k] = std::polar(radius, theta);
    }

    auto converged = [&] {
        for (const auto& zk : z) {
            Eval e = horner(a, zk);
            if (e.scale > 0 && std::abs(e.value) > tol * e.scale) return false;
        }
        return true;
    };

    unsigned it = 0;
    for (; it < kMahlerIterationCap; ++it) {
        if (converged()) break;
        for (std::size_t k = 0; k < n; ++k) {
            Eval e = horner(a, z[k]);
            if (e.value == cld(0)) continue;
            cld ratio = e.value / e.deriv;
            cld sum = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != k) sum += cld(1) / (z[k] - z[j]);
            cld step = ratio / (cld(1) - ratio * sum);
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) step = ratio;
            z[k] -= step;
        }
    }
    if (it == kMahlerIterationCap && !converged())
        throw DomainError("no_convergence", "root iteration did not converge within the iteration cap");

    // One polishing sweep once the residual criterion holds.
    for (std::size_t k = 0; k < n; ++k) {
        Eval e = horner(a, z[k]);
        if (e.deriv != cld(0)) {
            cld ratio = e.value / e.deriv;
            if (std::isfinite(ratio.real()) && std::isfinite(ratio.imag())) z[k] -= ratio;
        }
    }
    if (iterations) *iterations = it + 1;
    return z;
}

MahlerResult mahler_measure(const Poly& f, double tol) {
    if (f.is_zero()) throw DomainError("zero_polynomial", "Mahler measure of the zero polynomial");
    if (!(tol > 0)) throw DomainError("bad_tolerance", "tolerance must be positive");

    long double log_value = std::log(std::fabs(static_cast<long double>(f.leading().get_d())));
    long double rel_err = 0;
    unsigned total_iterations = 0;

    for (const auto& [g, mult] : squarefree_decompose(f)) {
        std::vector<long double> a(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) a[i] = static_cast<long double>(g.coefficients()[i].get_d());
        unsigned its = 0;
        auto roots = aberth_roots(g, tol, &its);
        total_iterations += its;
        const long double deg = static_cast<long double>(roots.size());
        for (const auto& z : roots) {
            long double mag = std::abs(z);
            if (mag > 1) log_value += mult * std::log(mag);
            Eval e = horner(a, z);
            long double r = e.deriv == cld(0) ? 0 : deg * std::abs(e.value / e.deriv);
            // max(1, |z|) moves by at most r.
            rel_err += mult * r / std::max<long double>(1, mag);
        }
        rel_err += mult * deg * 1e-18L;
    }
    double value = static_cast<double>(std::exp(log_value));
    return {value, static_cast<double>(value * rel_err) + value * 1e-15, total_iterations};
}

}  // namespace ellsurf
