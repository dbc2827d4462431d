#pragma once

// Bracketing root finder: coarse sign-change scan followed by bisection.
// Residuals here are smooth but only observed (not proven) monotone, so
// nothing fancier than bisection is warranted.

#include <cmath>
#include <functional>
#include <optional>
#include <vector>

#include "helastica/errors.hpp"

namespace helastica {

struct Bracket {
    double lo, hi;
    double flo, fhi;
};

// Scan [lo, hi] at n+1 equispaced points; return every sign-change cell.
// Non-finite samples are skipped (the scan may cross excluded loci).
template <class F>
std::vector<Bracket> scan_sign_changes(F&& f, double lo, double hi, int n = 512) {
    std::vector<Bracket> out;
    double xprev = lo, fprev = f(lo);
    for (int i = 1; i <= n; ++i) {
        const double x = lo + (hi - lo) * i / n;
        const double fx = f(x);
        if (std::isfinite(fprev) && std::isfinite(fx) && fprev * fx <= 0.0 && fprev != fx)
            out.push_back({xprev, x, fprev, fx});
        xprev = x;
        fprev = fx;
    }
    return out;
}

template <class F>
double bisect(F&& f, Bracket b, double xtol = 1e-12) {
    double lo = b.lo, hi = b.hi, flo = b.flo;
    if (flo == 0.0) return lo;
    while (hi - lo > xtol) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if (flo * fm < 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

// Convenience: scan then bisect the first bracket.
template <class F>
double find_root(F&& f, double lo, double hi, int scan_points = 512, double xtol = 1e-12) {
    auto brs = scan_sign_changes(f, lo, hi, scan_points);
    if (brs.empty()) throw NoRootError("no sign change in [" + std::to_string(lo) + ", " +
                                       std::to_string(hi) + "]");
    return bisect(f, brs.front(), xtol);
}

}  // namespace helastica
