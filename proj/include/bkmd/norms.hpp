// Grid norms. Sup norms optionally evaluate on a spectrally zero-padded 2n
// grid (grid maxima underestimate the true supremum); L^2-type norms use the
// convention ||v||^2 = integral of |v|^2 over the box and are evaluated by
// Parseval sums in the reduced layout.
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "bkmd/spectral_ops.hpp"

namespace bkmd {
namespace detail {

// Multiplicity of a stored mode in the reduced layout (interior x planes
// stand for a conjugate pair).
inline double hermitian_weight(const Grid& g, int jx) {
    return (jx == 0 || jx == g.n() / 2) ? 1.0 : 2.0;
}

template <class PerMode>
inline double parseval_sum(const Grid& g, PerMode&& per_mode) {
    double sum = 0.0;
    for (int iz = 0; iz < g.n(); ++iz)
        for (int iy = 0; iy < g.n(); ++iy)
            for (int jx = 0; jx < g.nx_spec(); ++jx)
                sum += hermitian_weight(g, jx) * per_mode(jx, iy, iz);
    return sum;
}

inline double box_volume(const Grid& g) {
    return g.length() * g.length() * g.length();
}

}  // namespace detail

inline double sup_norm(const ScalarField& f, bool oversample = false) {
    const ScalarField p = oversample ? oversample2(f) : to_physical(f);
    double m = 0.0;
    for (double x : p.phys()) m = std::max(m, std::abs(x));
    return m;
}

// Pointwise Euclidean magnitude maximum.
inline double sup_norm(const VectorField3& v, bool oversample = false) {
    const VectorField3 p = oversample ? oversample2(v) : to_physical(v);
    const auto x = p[0].phys(), y = p[1].phys(), z = p[2].phys();
    double m2 = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        m2 = std::max(m2, x[i] * x[i] + y[i] * y[i] + z[i] * z[i]);
    return std::sqrt(m2);
}

// max over grid points and all nine entries |d_i v_j| (component-max
// convention).
inline double grad_sup_norm(const VectorField3& v, bool oversample = false) {
    const VectorField3 vs = to_spectral(v);
    double m = 0.0;
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i)
            m = std::max(m, sup_norm(partial_derivative(vs[j], i), oversample));
    return m;
}

// max over grid points and all entries |d_i d_j v_k|.
inline double hess_sup_norm(const VectorField3& v, bool oversample = false) {
    const VectorField3 vs = to_spectral(v);
    double m = 0.0;
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i) {
            const ScalarField di = partial_derivative(vs[k], i);
            for (int j = i; j < 3; ++j)
                m = std::max(m, sup_norm(partial_derivative(di, j), oversample));
        }
    return m;
}

inline double sobolev_seminorm(const ScalarField& f, int m) {
    if (m < 0 || m > 5) throw UsageError("sobolev_seminorm: order must be in {0,...,5}");
    const ScalarField fs = to_spectral(f);
    const Grid& g = fs.grid();
    const auto spec = fs.spec();
    const double ks2 = g.k_scale() * g.k_scale();
    const double sum = detail::parseval_sum(g, [&](int jx, int iy, int iz) {
        const double fy = g.freq(iy), fz = g.freq(iz);
        const double k2 = ks2 * (jx * jx + fy * fy + fz * fz);
        const double a = std::norm(spec[g.spec_index(jx, iy, iz)]);
        return std::pow(k2, m) * a;
    });
    return std::sqrt(detail::box_volume(g) * sum);
}

inline double sobolev_seminorm(const VectorField3& v, int m) {
    const double x = sobolev_seminorm(v[0], m);
    const double y = sobolev_seminorm(v[1], m);
    const double z = sobolev_seminorm(v[2], m);
    return std::sqrt(x * x + y * y + z * z);
}

inline double l2_norm(const ScalarField& f) { return sobolev_seminorm(f, 0); }
inline double l2_norm(const VectorField3& v) { return sobolev_seminorm(v, 0); }

// L^2 pairing integral of a . b over the box, evaluated spectrally.
inline double inner_product(const VectorField3& a, const VectorField3& b) {
    const VectorField3 as = to_spectral(a);
    const VectorField3 bs = to_spectral(b);
    const Grid& g = as.grid();
    if (g != bs.grid()) throw UsageError("inner_product: grids must match");
    double sum = 0.0;
    for (int c = 0; c < 3; ++c) {
        const auto sa = as[c].spec();
        const auto sb = bs[c].spec();
        sum += detail::parseval_sum(g, [&](int jx, int iy, int iz) {
            const std::size_t idx = g.spec_index(jx, iy, iz);
            return (sa[idx] * std::conj(sb[idx])).real();
        });
    }
    return detail::box_volume(g) * sum;
}

// L^p norm of the pointwise Euclidean magnitude by grid quadrature;
// p = infinity falls back to the sup norm.
inline double lp_norm(const VectorField3& v, double p, bool oversample = false) {
    if (!(p > 0.0)) throw UsageError("lp_norm: p must be positive");
    if (std::isinf(p)) return sup_norm(v, oversample);
    const VectorField3 ph = oversample ? oversample2(v) : to_physical(v);
    const Grid& g = ph.grid();
    const auto x = ph[0].phys(), y = ph[1].phys(), z = ph[2].phys();
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double mag = std::sqrt(x[i] * x[i] + y[i] * y[i] + z[i] * z[i]);
        sum += std::pow(mag, p);
    }
    const double cell = detail::box_volume(g) / static_cast<double>(g.physical_size());
    return std::pow(sum * cell, 1.0 / p);
}

inline double divergence_sup(const VectorField3& v, bool oversample = false) {
    return sup_norm(divergence(to_spectral(v)), oversample);
}

}  // namespace bkmd
