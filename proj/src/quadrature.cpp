#include "magnon/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "magnon/errors.hpp"

namespace magnon {
namespace {

using Cd = std::complex<double>;
using Fn = std::function<Cd(double)>;

Cd simpson(const Fn& f, double a, double fa_w, const Cd& fa, const Cd& fm, const Cd& fb) {
    (void)a;
    return fa_w / 6.0 * (fa + 4.0 * fm + fb);
}

// Recursive adaptive Simpson with the classic 1/15 error estimate.
Cd adapt(const Fn& f, double a, double b, const Cd& fa, const Cd& fm, const Cd& fb, const Cd& whole,
         double tol, int depth, int& budget) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const Cd flm = f(lm);
    const Cd frm = f(rm);
    const Cd left = simpson(f, a, m - a, fa, flm, fm);
    const Cd right = simpson(f, m, b - m, fm, frm, fb);
    const Cd delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol || depth >= 48) {
        return left + right + delta / 15.0;
    }
    budget -= 2;
    if (budget <= 0) throw QuadratureFailure("adaptive quadrature exceeded subdivision budget");
    return adapt(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1, budget) +
           adapt(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1, budget);
}

}  // namespace

Cd integrate(const Fn& f, double a, double b, const std::vector<double>& breakpoints,
             const QuadratureOptions& opt) {
    if (!(b > a)) return {0.0, 0.0};
    std::vector<double> nodes;
    nodes.push_back(a);
    for (double x : breakpoints) {
        if (x > a && x < b) nodes.push_back(x);
    }
    nodes.push_back(b);
    std::sort(nodes.begin(), nodes.end());

    int budget = opt.max_subdivisions;
    const double tol_per = opt.abs_tol / static_cast<double>(nodes.size() - 1);
    Cd total{0.0, 0.0};
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        const double lo = nodes[i];
        const double hi = nodes[i + 1];
        if (!(hi > lo)) continue;
        const Cd fa = f(lo);
        const Cd fm = f(0.5 * (lo + hi));
        const Cd fb = f(hi);
        const Cd whole = simpson(f, lo, hi - lo, fa, fm, fb);
        total += adapt(f, lo, hi, fa, fm, fb, whole, tol_per, 0, budget);
    }
    return total;
}

Cd integrate(const Fn& f, double a, double b, const QuadratureOptions& opt) {
    return integrate(f, a, b, {}, opt);
}

}  // namespace magnon
