#pragma once

// Upper-half-plane primitives on discrete closed curves: signed hyperbolic
// curvature, length and bending energy, Moebius isometries with the
// initial-data normalization, Euclidean turning number, and a simplicity
// test.  The normal convention is N = iT throughout; every signed quantity
// downstream inherits it.

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "helastica/errors.hpp"

namespace helastica {

struct HPoint {
    double x = 0.0;
    double y = 1.0;  // must stay > 0
};

inline std::complex<double> to_complex(const HPoint& p) { return {p.x, p.y}; }
inline HPoint to_hpoint(std::complex<double> z) { return {z.real(), z.imag()}; }

enum class Parametrization { UniformParameter, HyperbolicArclength };

// Closed curve as a periodic sample sequence; index arithmetic is mod N.
struct SampledCurve {
    std::vector<HPoint> pts;
    Parametrization param = Parametrization::UniformParameter;
    double period_hint = 0.0;  // hyperbolic length when arclength-parametrized

    std::size_t size() const { return pts.size(); }
    const HPoint& at(std::ptrdiff_t i) const {
        const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(pts.size());
        return pts[static_cast<std::size_t>(((i % n) + n) % n)];
    }
    std::complex<double> z(std::ptrdiff_t i) const { return to_complex(at(i)); }

    void validate() const {
        if (pts.size() < 8) throw std::invalid_argument("SampledCurve needs N >= 8 samples");
        for (const auto& p : pts)
            if (!(p.y > 0.0)) throw std::invalid_argument("SampledCurve sample left the half-plane");
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const auto d = z(static_cast<std::ptrdiff_t>(i) + 1) - z(static_cast<std::ptrdiff_t>(i));
            if (std::abs(d) == 0.0)
                throw std::invalid_argument("SampledCurve has coincident consecutive samples");
        }
    }
};

// ---------------------------------------------------------------------------
// curvature

namespace detail {

// Derivatives with respect to the grid parameter, centered and periodic.
inline std::vector<std::complex<double>> d_param(const std::vector<std::complex<double>>& v) {
    const std::size_t n = v.size();
    std::vector<std::complex<double>> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = 0.5 * (v[(i + 1) % n] - v[(i + n - 1) % n]);  // grid spacing 1
    return out;
}

}  // namespace detail

// Per-sample signed curvature: the curvature vector of the upper-half-plane
// connection projected on N = iT.  Second order in the grid spacing.
inline std::vector<double> hyperbolic_curvature(const SampledCurve& curve) {
    curve.validate();
    const std::size_t n = curve.size();
    std::vector<std::complex<double>> z(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = curve.z(static_cast<std::ptrdiff_t>(i));

    const auto zt = detail::d_param(z);
    std::vector<std::complex<double>> ds1(n);  // d/ds gamma, |.|_euc = y
    for (std::size_t i = 0; i < n; ++i) {
        const double speed = std::abs(zt[i]);
        if (speed == 0.0) throw UnderResolvedError("degenerate segment in curvature stencil");
        ds1[i] = zt[i] * (z[i].imag() / speed);
    }
    const auto ds1t = detail::d_param(ds1);
    std::vector<double> kappa(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double y = z[i].imag();
        const std::complex<double> ds2 = ds1t[i] * (y / std::abs(zt[i]));
        const double u1 = ds1[i].real(), u2 = ds1[i].imag();
        const double k1 = ds2.real() - (2.0 / y) * u1 * u2;
        const double k2 = ds2.imag() + (1.0 / y) * (u1 * u1 - u2 * u2);
        // N = i T with T = ds1 / y; metric inner product carries 1/y^2
        const std::complex<double> N{-u2, u1};
        kappa[i] = (k1 * N.real() + k2 * N.imag()) / (y * y);
    }
    return kappa;
}

// Hyperbolic arclength element per sample (trapezoidal weight on the
// periodic grid equals the plain sample value).
inline std::vector<double> arclength_weights(const SampledCurve& curve) {
    const std::size_t n = curve.size();
    std::vector<double> ds(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto zt = 0.5 * (curve.z(static_cast<std::ptrdiff_t>(i) + 1) -
                               curve.z(static_cast<std::ptrdiff_t>(i) - 1));
        ds[i] = std::abs(zt) / curve.at(static_cast<std::ptrdiff_t>(i)).y;
    }
    return ds;
}

inline double length(const SampledCurve& curve) {
    double L = 0.0;
    for (double d : arclength_weights(curve)) L += d;
    return L;
}

inline double energy(const SampledCurve& curve, double lambda) {
    const auto kappa = hyperbolic_curvature(curve);
    const auto ds = arclength_weights(curve);
    double E = 0.0;
    for (std::size_t i = 0; i < kappa.size(); ++i) E += (kappa[i] * kappa[i] + lambda) * ds[i];
    return E;
}

// ---------------------------------------------------------------------------
// Moebius maps

// Real coefficients with ad - bc = 1: an orientation-preserving isometry of
// the upper half-plane.
struct MobiusMap {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    std::complex<double> operator()(std::complex<double> z) const {
        return (a * z + b) / (c * z + d);
    }
    HPoint operator()(const HPoint& p) const { return to_hpoint((*this)(to_complex(p))); }

    // derivative as complex multiplication: 1/(cz+d)^2
    std::complex<double> deriv(std::complex<double> z) const {
        const auto q = c * z + d;
        return 1.0 / (q * q);
    }

    MobiusMap compose(const MobiusMap& inner) const {
        MobiusMap m{a * inner.a + b * inner.c, a * inner.b + b * inner.d,
                    c * inner.a + d * inner.c, c * inner.b + d * inner.d};
        return m.normalized();
    }

    MobiusMap normalized() const {
        double det = a * d - b * c;
        if (det <= 0.0) throw std::invalid_argument("MobiusMap must have positive determinant");
        const double s = 1.0 / std::sqrt(det);
        return {a * s, b * s, c * s, d * s};
    }

    void validate() const {
        if (std::fabs(a * d - b * c - 1.0) > 1e-12)
            throw std::invalid_argument("MobiusMap determinant must be 1");
    }
};

inline SampledCurve apply_mobius(const MobiusMap& map, const SampledCurve& curve) {
    map.validate();
    SampledCurve out = curve;
    for (auto& p : out.pts) {
        p = map(p);
        if (!(p.y > 0.0)) throw std::runtime_error("Moebius image left the upper half-plane");
    }
    // hyperbolic arclength is preserved; the parametrization tag carries over
    return out;
}

// Isometry taking (z, v) with g_z(v, v) = 1 to ((0, y_target), (y_target, 0)).
// Built as in the half-plane reduction: pre-translate z to the imaginary
// axis, pick c, d from a square root of y_target / v, then solve the 2x2
// system for a, b.
inline MobiusMap normalize_initial(const HPoint& z, std::complex<double> v, double y_target) {
    if (!(y_target > 0.0)) throw std::invalid_argument("y_target must be positive");
    if (std::fabs(std::abs(v) - z.y) > 1e-8 * z.y)
        throw std::invalid_argument("tangent is not unit in the hyperbolic metric");

    const MobiusMap translate{1.0, -z.x, 0.0, 1.0};
    const double r = z.y;  // translated point is i r, v unchanged

    const std::complex<double> w = std::sqrt(std::complex<double>(y_target, 0.0) / v);
    const double c = w.imag() / r;
    const double d = w.real();
    const double det = d * d + r * r * c * c;
    const double a = d / det;
    const double b = -r * r * c / det;
    const MobiusMap rotate{a, b, c, d};
    return rotate.compose(translate);
}

// ---------------------------------------------------------------------------
// turning number and simplicity

// Euclidean total curvature / 2pi as the rounded sum of exterior angles.
// The pre-rounding residual is the under-resolution alarm.
inline int turning_number(const SampledCurve& curve, double residual_tol = 0.05) {
    curve.validate();
    const std::size_t n = curve.size();
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto e0 = curve.z(static_cast<std::ptrdiff_t>(i)) - curve.z(static_cast<std::ptrdiff_t>(i) - 1);
        const auto e1 = curve.z(static_cast<std::ptrdiff_t>(i) + 1) - curve.z(static_cast<std::ptrdiff_t>(i));
        const double cross = e0.real() * e1.imag() - e0.imag() * e1.real();
        const double dot = e0.real() * e1.real() + e0.imag() * e1.imag();
        total += std::atan2(cross, dot);
    }
    const double t = total / (2.0 * std::numbers::pi);
    const double rounded = std::round(t);
    if (std::fabs(t - rounded) >= residual_tol)
        throw UnderResolvedError("ambiguous turning number, residual " +
                                 std::to_string(std::fabs(t - rounded)));
    return static_cast<int>(rounded);
}

namespace detail {

inline int orient(std::complex<double> a, std::complex<double> b, std::complex<double> c) {
    const double v = (b.real() - a.real()) * (c.imag() - a.imag()) -
                     (b.imag() - a.imag()) * (c.real() - a.real());
    return (v > 0.0) - (v < 0.0);
}

inline bool on_segment(std::complex<double> a, std::complex<double> b, std::complex<double> p) {
    return std::min(a.real(), b.real()) <= p.real() && p.real() <= std::max(a.real(), b.real()) &&
           std::min(a.imag(), b.imag()) <= p.imag() && p.imag() <= std::max(a.imag(), b.imag());
}

inline bool segments_intersect(std::complex<double> p1, std::complex<double> p2,
                               std::complex<double> q1, std::complex<double> q2) {
    const int o1 = orient(p1, p2, q1), o2 = orient(p1, p2, q2);
    const int o3 = orient(q1, q2, p1), o4 = orient(q1, q2, p2);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(p1, p2, q1)) return true;
    if (o2 == 0 && on_segment(p1, p2, q2)) return true;
    if (o3 == 0 && on_segment(q1, q2, p1)) return true;
    if (o4 == 0 && on_segment(q1, q2, p2)) return true;
    return false;
}

}  // namespace detail

// True iff no two non-adjacent polygon segments intersect.  O(N^2).
inline bool is_simple(const SampledCurve& curve) {
    curve.validate();
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(curve.size());
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        for (std::ptrdiff_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;  // wrap-adjacent
            if (detail::segments_intersect(curve.z(i), curve.z(i + 1), curve.z(j), curve.z(j + 1)))
                return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// curve CSV, shared repo-wide: header "t,x,y", one row per sample

inline void write_curve_csv(const SampledCurve& curve, std::ostream& os) {
    os << "t,x,y\n";
    const std::size_t n = curve.size();
    char buf[96];
    for (std::size_t i = 0; i < n; ++i) {
        double t;
        if (curve.param == Parametrization::HyperbolicArclength && curve.period_hint > 0.0)
            t = curve.period_hint * static_cast<double>(i) / static_cast<double>(n);
        else
            t = static_cast<double>(i) / static_cast<double>(n);
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", t, curve.pts[i].x, curve.pts[i].y);
        os << buf;
    }
}

inline void write_curve_csv(const SampledCurve& curve, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    write_curve_csv(curve, os);
}

inline SampledCurve read_curve_csv(std::istream& is,
                                   Parametrization param = Parametrization::UniformParameter) {
    std::string line;
    if (!std::getline(is, line) || line.rfind("t,x,y", 0) != 0)
        throw std::runtime_error("curve CSV must start with header t,x,y");
    SampledCurve curve;
    curve.param = param;
    double last_t = 0.0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        double t, x, y;
        char comma;
        if (!(ss >> t >> comma >> x >> comma >> y))
            throw std::runtime_error("malformed curve CSV row: " + line);
        if (!(y > 0.0)) throw std::runtime_error("curve CSV sample has y <= 0");
        curve.pts.push_back({x, y});
        last_t = t;
    }
    (void)last_t;
    curve.validate();
    return curve;
}

inline SampledCurve read_curve_csv(const std::string& path,
                                   Parametrization param = Parametrization::UniformParameter) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    return read_curve_csv(is, param);
}

}  // namespace helastica
