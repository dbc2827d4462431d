#pragma once

// Jacobi elliptic functions and complete/incomplete elliptic integrals.
//
// K and E are computed with the arithmetic-geometric mean, am(x,p) with a
// descending Landen transformation after reduction to the fundamental
// interval [0, K], and the incomplete integral of the first kind with
// Carlson's R_F duplication algorithm.  The modulus convention is p
// (not the parameter m = p^2).

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace helastica {

inline constexpr double kModulusCap = 1.0 - 1e-12;

// Modulus p in [0, 1 - 1e-12].  Solvers that push p toward 1 must clamp
// before constructing; K(p) diverges at p = 1.
class EllipticModulus {
  public:
    explicit EllipticModulus(double p) : p_(p) {
        if (!(p >= 0.0) || p > kModulusCap)
            throw std::domain_error("elliptic modulus must lie in [0, 1 - 1e-12], got " +
                                    std::to_string(p));
    }
    double value() const { return p_; }
    double sq() const { return p_ * p_; }

  private:
    double p_;
};

struct JacobiTriple {
    double sn;
    double cn;
    double dn;
    double am;  // amplitude, radians
};

// Complete elliptic integral of the first kind, K(p).
inline double complete_K(EllipticModulus p) {
    const double k = p.value();
    double a = 1.0;
    double b = std::sqrt((1.0 - k) * (1.0 + k));
    for (int i = 0; i < 40 && a - b > 1e-15 * a; ++i) {
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return std::numbers::pi / (a + b);
}

// Complete elliptic integral of the second kind, E(p), from the AGM
// c-sequence: E = K * (1 - sum 2^{n-1} c_n^2).
inline double complete_E(EllipticModulus p) {
    const double k = p.value();
    double a = 1.0;
    double b = std::sqrt((1.0 - k) * (1.0 + k));
    double c = k;
    double sum = 0.5 * c * c;
    double pow2 = 0.5;
    for (int i = 0; i < 40 && std::fabs(c) > 1e-16 * a; ++i) {
        c = 0.5 * (a - b);
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
        pow2 *= 2.0;
        sum += pow2 * c * c;
    }
    const double K = std::numbers::pi / (a + b);
    return K * (1.0 - sum);
}

namespace detail {

// Landen descent for the amplitude on x in [0, K(p)].
inline double am_fundamental(double x, double k) {
    constexpr int kMaxLevels = 32;
    double a[kMaxLevels], c[kMaxLevels];
    a[0] = 1.0;
    double b = std::sqrt((1.0 - k) * (1.0 + k));
    c[0] = k;
    int n = 0;
    while (std::fabs(c[n]) > 1e-16 * a[n] && n + 1 < kMaxLevels) {
        ++n;
        a[n] = 0.5 * (a[n - 1] + b);
        c[n] = 0.5 * (a[n - 1] - b);
        b = std::sqrt(a[n - 1] * b);
    }
    double phi = std::ldexp(a[n] * x, n);
    for (int i = n; i > 0; --i) {
        double s = c[i] * std::sin(phi) / a[i];
        s = std::fmin(1.0, std::fmax(-1.0, s));
        phi = 0.5 * (phi + std::asin(s));
    }
    return phi;
}

// Carlson symmetric integral R_F(x, y, z) by duplication.
inline double carlson_rf(double x, double y, double z) {
    constexpr double tol = 1e-10;
    double dx, dy, dz;
    double mu;
    do {
        const double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
        const double lam = sx * (sy + sz) + sy * sz;
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        z = 0.25 * (z + lam);
        mu = (x + y + z) / 3.0;
        dx = (mu - x) / mu;
        dy = (mu - y) / mu;
        dz = (mu - z) / mu;
    } while (std::fabs(dx) > tol || std::fabs(dy) > tol || std::fabs(dz) > tol);
    const double e2 = dx * dy - dz * dz;
    const double e3 = dx * dy * dz;
    return (1.0 + (e2 / 24.0 - 0.1 - 3.0 * e3 / 44.0) * e2 + e3 / 14.0) / std::sqrt(mu);
}

}  // namespace detail

// Jacobi amplitude and sn/cn/dn at real x.  Argument is first reduced to
// the fundamental interval via am(x + 2lK) = l*pi + am(x) and oddness.
inline JacobiTriple jacobi(double x, EllipticModulus p) {
    const double k = p.value();
    if (k == 0.0) return {std::sin(x), std::cos(x), 1.0, x};

    const double K = complete_K(p);
    // shift to [-K, K)
    const double l = std::floor((x + K) / (2.0 * K));
    double xr = x - 2.0 * K * l;
    double am;
    if (xr >= 0.0)
        am = detail::am_fundamental(xr, k);
    else
        am = -detail::am_fundamental(-xr, k);
    am += l * std::numbers::pi;

    const double sn = std::sin(am);
    const double cn = std::cos(am);
    const double dn = std::sqrt(1.0 - k * k * sn * sn);
    return {sn, cn, dn, am};
}

// Incomplete elliptic integral of the first kind,
// F(phi, p) = int_0^phi (1 - p^2 sin^2 b)^{-1/2} db.
inline double incomplete_F(double phi, EllipticModulus p) {
    const double k = p.value();
    if (k == 0.0) return phi;
    const double n = std::round(phi / std::numbers::pi);
    const double phir = phi - n * std::numbers::pi;  // in [-pi/2, pi/2]
    double val = 0.0;
    if (phir != 0.0) {
        const double s = std::sin(phir), c = std::cos(phir);
        val = s * detail::carlson_rf(c * c, 1.0 - k * k * s * s, 1.0);
    }
    if (n != 0.0) val += 2.0 * n * complete_K(p);
    return val;
}

}  // namespace helastica
