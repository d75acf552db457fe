// quadrature.hpp — adaptive Simpson integration for complex-valued
// integrands with a fixed, deterministic subdivision strategy.

#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace magnon {

struct QuadratureOptions {
    double abs_tol = 1e-12;      ///< absolute tolerance on the integral
    int max_subdivisions = 10000;
};

/// Integrates f over [a, b]. Interior breakpoints (profile kinks) may be
/// supplied; each sub-interval is refined independently.
/// Throws QuadratureFailure if the tolerance is unreachable within the
/// subdivision budget.
std::complex<double> integrate(const std::function<std::complex<double>(double)>& f, double a,
                               double b, const std::vector<double>& breakpoints,
                               const QuadratureOptions& opt);

std::complex<double> integrate(const std::function<std::complex<double>(double)>& f, double a,
                               double b, const QuadratureOptions& opt);

}  // namespace magnon
