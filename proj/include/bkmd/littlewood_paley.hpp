// Littlewood-Paley projections and the inhomogeneous Besov norm with
// regularity/integrability/summability exponents (0, inf, inf).
//
// The low-pass multiplier is the concrete smooth bump
//     m(r) = s(2-r) / (s(2-r) + s(r-1)),   s(x) = exp(-1/x) for x > 0 else 0,
// which is 1 for r <= 1, 0 for r >= 2, radial and non-increasing. Projections
// act on the physical wavenumber magnitude |xi| (includes the 2*pi/L factor).
#pragma once

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "bkmd/norms.hpp"

namespace bkmd {

inline constexpr const char* kMultiplierProfileId = "smooth-bump-exp-v1";

inline double lowpass_multiplier(double r) {
    const auto s = [](double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; };
    if (r <= 1.0) return 1.0;
    if (r >= 2.0) return 0.0;
    const double a = s(2.0 - r);
    const double b = s(r - 1.0);
    return a / (a + b);
}

// Bands k = 0 .. band_count-1 together with the low pass reproduce every
// resolved mode: band_count = ceil(log2(max |xi|)) + 2 makes the final
// low-pass multiplier identically 1 on the grid.
inline int band_count(const Grid& g) {
    return static_cast<int>(std::ceil(std::log2(g.max_wavenumber()))) + 2;
}

namespace detail {

// Cached per-mode values of m(2^{-k} |xi|).
inline const std::vector<double>& lowpass_weights(const Grid& g, int k) {
    using Key = std::tuple<int, double, int>;
    static std::mutex mutex;
    static std::map<Key, std::vector<double>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto [it, inserted] = cache.try_emplace(Key{g.n(), g.length(), k});
    if (inserted) {
        std::vector<double>& w = it->second;
        w.resize(g.spectral_size());
        const double scale = std::ldexp(g.k_scale(), -k);  // 2^-k * 2*pi/L
        for (int iz = 0; iz < g.n(); ++iz) {
            const double fz = g.freq(iz);
            for (int iy = 0; iy < g.n(); ++iy) {
                const double fy = g.freq(iy);
                for (int jx = 0; jx < g.nx_spec(); ++jx) {
                    const double r = scale * std::sqrt(jx * jx + fy * fy + fz * fz);
                    w[g.spec_index(jx, iy, iz)] = lowpass_multiplier(r);
                }
            }
        }
    }
    return it->second;
}

// Multiply coefficients by per-mode weights; reports whether anything
// survived so callers can skip inverse transforms of empty bands.
inline ScalarField apply_weights(const ScalarField& f, const std::vector<double>& w,
                                 bool* nonzero = nullptr) {
    ScalarField out = f;
    bool any = false;
    auto spec = out.spec();
    for (std::size_t i = 0; i < spec.size(); ++i) {
        spec[i] *= w[i];
        any = any || spec[i] != std::complex<double>(0.0, 0.0);
    }
    if (nonzero) *nonzero = any;
    return out;
}

inline std::vector<double> band_weights(const Grid& g, int k) {
    const std::vector<double>& lo = lowpass_weights(g, k);
    const std::vector<double>& hi = lowpass_weights(g, k + 1);
    std::vector<double> w(lo.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = hi[i] - lo[i];
    return w;
}

}  // namespace detail

inline ScalarField project_below(const ScalarField& f, int k) {
    if (k < 0) throw UsageError("project_below: k must be non-negative");
    return detail::apply_weights(to_spectral(f), detail::lowpass_weights(f.grid(), k));
}
inline VectorField3 project_below(const VectorField3& v, int k) {
    return {project_below(v[0], k), project_below(v[1], k), project_below(v[2], k)};
}

inline ScalarField project_band(const ScalarField& f, int k) {
    if (k < 0) throw UsageError("project_band: k must be non-negative");
    return detail::apply_weights(to_spectral(f), detail::band_weights(f.grid(), k));
}
inline VectorField3 project_band(const VectorField3& v, int k) {
    return {project_band(v[0], k), project_band(v[1], k), project_band(v[2], k)};
}

struct BandDecomposition {
    ScalarField base;                 // P_{<0} f
    std::vector<ScalarField> bands;   // P_k f, k = 0 .. band_count-1
};

inline BandDecomposition decompose(const ScalarField& f) {
    const ScalarField fs = to_spectral(f);
    BandDecomposition d{project_below(fs, 0), {}};
    const int kmax = band_count(f.grid());
    d.bands.reserve(static_cast<std::size_t>(kmax));
    for (int k = 0; k < kmax; ++k) d.bands.push_back(project_band(fs, k));
    return d;
}

// sup_k ||P_k f||_inf and ||P_<0 f||_inf; the Besov norm is their sum.
struct BesovParts {
    double band_sup = 0.0;
    double lowpass_sup = 0.0;
    double total() const { return band_sup + lowpass_sup; }
};

namespace detail {

// Shared band sweep over a set of spectral components. reduce_euclidean
// combines the components pointwise (vector magnitude); otherwise each
// component is measured separately and the maximum taken (the component-max
// convention used for gradients).
inline BesovParts besov_sweep(const Grid& g, const std::vector<const ScalarField*>& comps,
                              bool reduce_euclidean, bool oversample) {
    const auto measure = [&](const std::vector<double>& w) {
        bool any = false;
        if (reduce_euclidean && comps.size() == 3) {
            std::array<ScalarField, 3> band = {apply_weights(*comps[0], w, &any),
                                               apply_weights(*comps[1], w),
                                               apply_weights(*comps[2], w)};
            bool b1 = false, b2 = false;
            auto s1 = band[1].spec();
            for (auto c : s1) b1 = b1 || c != std::complex<double>(0.0, 0.0);
            auto s2 = band[2].spec();
            for (auto c : s2) b2 = b2 || c != std::complex<double>(0.0, 0.0);
            if (!any && !b1 && !b2) return 0.0;
            return sup_norm(VectorField3(std::move(band[0]), std::move(band[1]),
                                         std::move(band[2])),
                            oversample);
        }
        double m = 0.0;
        for (const ScalarField* c : comps) {
            ScalarField band = apply_weights(*c, w, &any);
            if (any) m = std::max(m, sup_norm(band, oversample));
        }
        return m;
    };

    BesovParts parts;
    parts.lowpass_sup = measure(lowpass_weights(g, 0));
    const int kmax = band_count(g);
    for (int k = 0; k < kmax; ++k)
        parts.band_sup = std::max(parts.band_sup, measure(band_weights(g, k)));
    return parts;
}

}  // namespace detail

inline BesovParts besov_parts(const ScalarField& f, bool oversample = false) {
    const ScalarField fs = to_spectral(f);
    return detail::besov_sweep(fs.grid(), {&fs}, false, oversample);
}

inline BesovParts besov_parts(const VectorField3& v, bool oversample = false) {
    const VectorField3 vs = to_spectral(v);
    return detail::besov_sweep(vs.grid(), {&vs[0], &vs[1], &vs[2]}, true, oversample);
}

// Besov norm of the gradient of v: all nine entries d_i v_j, reduced per
// band by the component-max convention.
inline BesovParts besov_parts_gradient(const VectorField3& v, bool oversample = false) {
    const VectorField3 vs = to_spectral(v);
    std::vector<ScalarField> entries;
    entries.reserve(9);
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i) entries.push_back(partial_derivative(vs[j], i));
    std::vector<const ScalarField*> ptrs;
    for (const ScalarField& e : entries) ptrs.push_back(&e);
    return detail::besov_sweep(vs.grid(), ptrs, false, oversample);
}

inline double besov_norm(const ScalarField& f, bool oversample = false) {
    return besov_parts(f, oversample).total();
}
inline double besov_norm(const VectorField3& v, bool oversample = false) {
    return besov_parts(v, oversample).total();
}
inline double besov_norm_gradient(const VectorField3& v, bool oversample = false) {
    return besov_parts_gradient(v, oversample).total();
}
inline double besov_band_sup(const VectorField3& v, bool oversample = false) {
    return besov_parts(v, oversample).band_sup;
}

}  // namespace bkmd
