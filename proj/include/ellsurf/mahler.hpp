#pragma once

#include <complex>
#include <vector>

#include "ellsurf/poly.hpp"

namespace ellsurf {

inline constexpr double kDefaultMahlerTol = 1e-10;
inline constexpr unsigned kMahlerIterationCap = 10'000;

struct MahlerResult {
    double value;
    /// A posteriori absolute error bound from Newton inclusion radii.
    double error;
    unsigned iterations;
};

/// Complex roots of a squarefree polynomial by Aberth iteration, each with
/// relative residual below `tol`. Initial points lie on a circle of radius
/// 1 + H(f)/|lc(f)|. Throws DomainError("no_convergence") after the cap.
std::vector<std::complex<long double>> aberth_roots(const Poly& f, double tol, unsigned* iterations = nullptr);

/// |lc| * prod max(1, |root|). Roots are found on the squarefree parts of f so
/// repeated roots never reach the iteration. Throws DomainError for f == 0.
MahlerResult mahler_measure(const Poly& f, double tol = kDefaultMahlerTol);

}  // namespace ellsurf
