#pragma once

// Gauss-Legendre panels for smooth periodic integrands and an adaptive
// Gauss-Kronrod 15(7) rule for integrands with localized structure.

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace helastica {

namespace detail {

// Nodes/weights of the N-point Gauss-Legendre rule on [-1, 1], found by
// Newton iteration on the Legendre polynomial.
template <int N>
struct GaussLegendre {
    std::array<double, N> x{};
    std::array<double, N> w{};
    GaussLegendre() {
        for (int i = 0; i < (N + 1) / 2; ++i) {
            double z = std::cos(std::numbers::pi * (i + 0.75) / (N + 0.5));
            double pp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = 0.0;
                for (int j = 0; j < N; ++j) {
                    const double p2 = p1;
                    p1 = p0;
                    p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
                }
                pp = N * (z * p0 - p1) / (z * z - 1.0);
                const double dz = p0 / pp;
                z -= dz;
                if (std::fabs(dz) < 1e-15) break;
            }
            x[i] = -z;
            x[N - 1 - i] = z;
            w[i] = w[N - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
        }
    }
};

inline const GaussLegendre<16>& gl16() {
    static const GaussLegendre<16> rule;
    return rule;
}

}  // namespace detail

// 16-point Gauss-Legendre on [a, b].
template <class F>
auto gauss16(F&& f, double a, double b) -> decltype(f(a)) {
    const auto& r = detail::gl16();
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    decltype(f(a)) acc = f(mid + half * r.x[0]) * r.w[0];
    for (int i = 1; i < 16; ++i) acc += f(mid + half * r.x[i]) * r.w[i];
    return acc * half;
}

// Composite GL16 with panel doubling until two successive refinements agree.
template <class F>
auto integrate_periodic(F&& f, double a, double b, double tol = 1e-12,
                        int initial_panels = 8) -> decltype(f(a)) {
    int n = initial_panels;
    auto run = [&](int panels) {
        const double h = (b - a) / panels;
        decltype(f(a)) acc = gauss16(f, a, a + h);
        for (int i = 1; i < panels; ++i) acc += gauss16(f, a + i * h, a + (i + 1) * h);
        return acc;
    };
    auto prev = run(n);
    for (int iter = 0; iter < 12; ++iter) {
        n *= 2;
        auto cur = run(n);
        if (std::abs(cur - prev) <= tol * (1.0 + std::abs(cur))) return cur;
        prev = cur;
    }
    return prev;
}

namespace detail {

// Kronrod 15 / Gauss 7 pair on [-1, 1].
inline constexpr std::array<double, 8> kGK15Nodes = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
inline constexpr std::array<double, 8> kGK15WeightsK = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr std::array<double, 4> kGK15WeightsG = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

// Gauss-7 nodes are the odd-index Kronrod nodes plus the center.
template <class F>
void gk15(F& f, double a, double b, double& valk, double& err) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double resk = 0.0, resg = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double dx = half * kGK15Nodes[i];
        const double fv = (i == 7) ? f(mid) : f(mid - dx) + f(mid + dx);
        resk += kGK15WeightsK[i] * fv;
        if (i % 2 == 1) resg += kGK15WeightsG[i / 2] * fv;
    }
    valk = resk * half;
    err = std::fabs(valk - resg * half);
}

}  // namespace detail

// Adaptive bisection on the GK15 error estimate.
template <class F>
double integrate_adaptive(F&& f, double a, double b, double tol = 1e-11, int max_depth = 48) {
    struct Seg {
        double a, b, val, err;
        int depth;
    };
    auto eval = [&](double lo, double hi) {
        double v, e;
        detail::gk15(f, lo, hi, v, e);
        return Seg{lo, hi, v, e, 0};
    };
    std::vector<Seg> stack{eval(a, b)};
    double total = 0.0, errtot = 0.0;
    const double scale = std::fabs(stack.front().val) + 1.0;
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.err <= tol * scale * (s.b - s.a) / (b - a) || s.depth >= max_depth) {
            total += s.val;
            errtot += s.err;
            continue;
        }
        const double mid = 0.5 * (s.a + s.b);
        auto l = eval(s.a, mid);
        auto r2 = eval(mid, s.b);
        l.depth = r2.depth = s.depth + 1;
        stack.push_back(l);
        stack.push_back(r2);
    }
    (void)errtot;
    return total;
}

}  // namespace helastica
