// Spectral calculus on the periodic cube: derivatives, curl, Laplacian,
// Leray projection, dealiasing, zero-pad oversampling and pointwise products.
//
// Odd-order derivative multipliers zero the Nyquist planes (the +-n/2
// frequency is sign-ambiguous there); |xi|-based multipliers treat the
// Nyquist index as +n/2.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

#include "bkmd/fft.hpp"

namespace bkmd {
namespace detail {

// Signed frequency used by first-derivative multipliers (Nyquist -> 0).
inline int deriv_freq_full(const Grid& g, int i) {
    return i == g.n() / 2 ? 0 : g.freq(i);
}
inline int deriv_freq_x(const Grid& g, int jx) { return jx == g.n() / 2 ? 0 : jx; }

}  // namespace detail

inline VectorField3 gradient(const ScalarField& f) {
    if (f.rep() != Rep::spectral) throw UsageError("gradient: spectral input required");
    const Grid& g = f.grid();
    VectorField3 out = VectorField3::zeros(g, Rep::spectral);
    const auto in = f.spec();
    const double ks = g.k_scale();
    const std::complex<double> iu(0.0, 1.0);
    for (int iz = 0; iz < g.n(); ++iz) {
        const double kz = ks * detail::deriv_freq_full(g, iz);
        for (int iy = 0; iy < g.n(); ++iy) {
            const double ky = ks * detail::deriv_freq_full(g, iy);
            for (int jx = 0; jx < g.nx_spec(); ++jx) {
                const double kx = ks * detail::deriv_freq_x(g, jx);
                const std::size_t idx = g.spec_index(jx, iy, iz);
                const std::complex<double> c = iu * in[idx];
                out[0].spec()[idx] = kx * c;
                out[1].spec()[idx] = ky * c;
                out[2].spec()[idx] = kz * c;
            }
        }
    }
    return out;
}

inline ScalarField partial_derivative(const ScalarField& f, int axis) {
    if (f.rep() != Rep::spectral) throw UsageError("partial_derivative: spectral input required");
    if (axis < 0 || axis > 2) throw UsageError("partial_derivative: axis must be 0, 1 or 2");
    const Grid& g = f.grid();
    ScalarField out = ScalarField::zeros(g, Rep::spectral);
    const auto in = f.spec();
    const double ks = g.k_scale();
    for (int iz = 0; iz < g.n(); ++iz) {
        for (int iy = 0; iy < g.n(); ++iy) {
            for (int jx = 0; jx < g.nx_spec(); ++jx) {
                const int fr = axis == 0   ? detail::deriv_freq_x(g, jx)
                               : axis == 1 ? detail::deriv_freq_full(g, iy)
                                           : detail::deriv_freq_full(g, iz);
                const std::size_t idx = g.spec_index(jx, iy, iz);
                out.spec()[idx] = std::complex<double>(0.0, ks * fr) * in[idx];
            }
        }
    }
    return out;
}

inline ScalarField divergence(const VectorField3& v) {
    if (v.rep() != Rep::spectral) throw UsageError("divergence: spectral input required");
    const Grid& g = v.grid();
    ScalarField out = ScalarField::zeros(g, Rep::spectral);
    const double ks = g.k_scale();
    const std::complex<double> iu(0.0, 1.0);
    for (int iz = 0; iz < g.n(); ++iz) {
        const double kz = ks * detail::deriv_freq_full(g, iz);
        for (int iy = 0; iy < g.n(); ++iy) {
            const double ky = ks * detail::deriv_freq_full(g, iy);
            for (int jx = 0; jx < g.nx_spec(); ++jx) {
                const double kx = ks * detail::deriv_freq_x(g, jx);
                const std::size_t idx = g.spec_index(jx, iy, iz);
                out.spec()[idx] = iu * (kx * v[0].spec()[idx] + ky * v[1].spec()[idx] +
                                        kz * v[2].spec()[idx]);
            }
        }
    }
    return out;
}

inline VectorField3 curl(const VectorField3& v) {
    if (v.rep() != Rep::spectral) throw UsageError("curl: spectral input required");
    const Grid& g = v.grid();
    VectorField3 out = VectorField3::zeros(g, Rep::spectral);
    const double ks = g.k_scale();
    const std::complex<double> iu(0.0, 1.0);
    for (int iz = 0; iz < g.n(); ++iz) {
        const double kz = ks * detail::deriv_freq_full(g, iz);
        for (int iy = 0; iy < g.n(); ++iy) {
            const double ky = ks * detail::deriv_freq_full(g, iy);
            for (int jx = 0; jx < g.nx_spec(); ++jx) {
                const double kx = ks * detail::deriv_freq_x(g, jx);
                const std::size_t idx = g.spec_index(jx, iy, iz);
                const std::complex<double> vx = v[0].spec()[idx];
                const std::complex<double> vy = v[1].spec()[idx];
                const std::complex<double> vz = v[2].spec()[idx];
                out[0].spec()[idx] = iu * (ky * vz - kz * vy);
                out[1].spec()[idx] = iu * (kz * vx - kx * vz);
                out[2].spec()[idx] = iu * (kx * vy - ky * vx);
            }
        }
    }
    return out;
}

inline ScalarField laplacian(const ScalarField& f) {
    if (f.rep() != Rep::spectral) throw UsageError("laplacian: spectral input required");
    const Grid& g = f.grid();
    ScalarField out = ScalarField::zeros(g, Rep::spectral);
    const auto in = f.spec();
    const double ks2 = g.k_scale() * g.k_scale();
    for (int iz = 0; iz < g.n(); ++iz) {
        const double fz = g.freq(iz);
        for (int iy = 0; iy < g.n(); ++iy) {
            const double fy = g.freq(iy);
            for (int jx = 0; jx < g.nx_spec(); ++jx) {
                const double k2 = ks2 * (jx * jx + fy * fy + fz * fz);
                const std::size_t idx = g.spec_index(jx, iy, iz);
                out.spec()[idx] = -k2 * in[idx];
            }
        }
    }
    return out;
}
inline VectorField3 laplacian(const VectorField3& v) {
    return {laplacian(v[0]), laplacian(v[1]), laplacian(v[2])};
}

// v - xi (xi . v)/|xi|^2 modewise; the zero mode is left unchanged.
inline VectorField3 leray_project(const VectorField3& v) {
    if (v.rep() != Rep::spectral) throw UsageError("leray_project: spectral input required");
    const Grid& g = v.grid();
    VectorField3 out = v;
    for (int iz = 0; iz < g.n(); ++iz) {
        const double fz = g.freq(iz);
        for (int iy = 0; iy < g.n(); ++iy) {
            const double fy = g.freq(iy);
            for (int jx = 0; jx < g.nx_spec(); ++jx) {
                const double fx = jx;
                const double k2 = fx * fx + fy * fy + fz * fz;
                if (k2 == 0.0) continue;
                const std::size_t idx = g.spec_index(jx, iy, iz);
                const std::complex<double> kdotv =
                    (fx * out[0].spec()[idx] + fy * out[1].spec()[idx] + fz * out[2].spec()[idx]) / k2;
                out[0].spec()[idx] -= fx * kdotv;
                out[1].spec()[idx] -= fy * kdotv;
                out[2].spec()[idx] -= fz * kdotv;
            }
        }
    }
    return out;
}

// 2/3-rule mask: zero every mode whose integer frequency exceeds n/3 in
// magnitude on any axis (exact integer test 3|f| > n).
inline ScalarField dealias(const ScalarField& f) {
    if (f.rep() != Rep::spectral) throw UsageError("dealias: spectral input required");
    const Grid& g = f.grid();
    ScalarField out = f;
    const int n = g.n();
    for (int iz = 0; iz < n; ++iz) {
        const int fz = std::abs(g.freq(iz));
        for (int iy = 0; iy < n; ++iy) {
            const int fy = std::abs(g.freq(iy));
            for (int jx = 0; jx < g.nx_spec(); ++jx) {
                if (3 * jx > n || 3 * fy > n || 3 * fz > n)
                    out.spec()[g.spec_index(jx, iy, iz)] = 0.0;
            }
        }
    }
    return out;
}
inline VectorField3 dealias(const VectorField3& v) {
    return {dealias(v[0]), dealias(v[1]), dealias(v[2])};
}

// Spectral zero-padding to a 2n grid, returned in physical representation.
// Exact trigonometric interpolation: Nyquist coefficients are split between
// the +-n/2 images on the fine grid (the -n/2 x-image lands on the stored
// half via Hermitian symmetry).
inline ScalarField oversample2(const ScalarField& f) {
    const ScalarField fs = to_spectral(f);
    const Grid& g = fs.grid();
    const int n = g.n();
    const Grid fine(2 * n, g.length());
    ScalarField out = ScalarField::zeros(fine, Rep::spectral);
    const auto in = fs.spec();
    auto dst = out.spec();

    const auto fine_index = [&](int fx, int fy, int fz) {
        const int iy = fy >= 0 ? fy : fy + fine.n();
        const int iz = fz >= 0 ? fz : fz + fine.n();
        return fine.spec_index(fx, iy, iz);
    };

    struct AxisImage {
        int freq;
        double weight;
    };
    const auto images = [n](int f) {
        if (std::abs(f) == n / 2)
            return std::array<AxisImage, 2>{{{n / 2, 0.5}, {-n / 2, 0.5}}};
        return std::array<AxisImage, 2>{{{f, 1.0}, {0, 0.0}}};
    };

    for (int iz = 0; iz < n; ++iz) {
        const int fz = g.freq(iz);
        for (int iy = 0; iy < n; ++iy) {
            const int fy = g.freq(iy);
            for (int jx = 0; jx < g.nx_spec(); ++jx) {
                const std::complex<double> c = in[g.spec_index(jx, iy, iz)];
                if (c == std::complex<double>(0.0, 0.0)) continue;
                for (const AxisImage& ix : images(jx)) {
                    if (ix.weight == 0.0) continue;
                    for (const AxisImage& iyi : images(fy)) {
                        if (iyi.weight == 0.0) continue;
                        for (const AxisImage& izi : images(fz)) {
                            if (izi.weight == 0.0) continue;
                            const double w = ix.weight * iyi.weight * izi.weight;
                            if (ix.freq >= 0)
                                dst[fine_index(ix.freq, iyi.freq, izi.freq)] += w * c;
                            else
                                // Negative x frequency: deposit the Hermitian
                                // image instead.
                                dst[fine_index(-ix.freq, -iyi.freq, -izi.freq)] +=
                                    w * std::conj(c);
                        }
                    }
                }
            }
        }
    }
    return inverse_transform(out);
}

inline VectorField3 oversample2(const VectorField3& v) {
    return {oversample2(v[0]), oversample2(v[1]), oversample2(v[2])};
}

// Pointwise cross product of physical fields.
inline VectorField3 cross(const VectorField3& a, const VectorField3& b) {
    if (a.rep() != Rep::physical || b.rep() != Rep::physical)
        throw UsageError("cross: physical inputs required");
    if (a.grid() != b.grid()) throw UsageError("cross: grids must match");
    VectorField3 out = VectorField3::zeros(a.grid(), Rep::physical);
    const auto ax = a[0].phys(), ay = a[1].phys(), az = a[2].phys();
    const auto bx = b[0].phys(), by = b[1].phys(), bz = b[2].phys();
    for (std::size_t i = 0; i < ax.size(); ++i) {
        out[0].phys()[i] = ay[i] * bz[i] - az[i] * by[i];
        out[1].phys()[i] = az[i] * bx[i] - ax[i] * bz[i];
        out[2].phys()[i] = ax[i] * by[i] - ay[i] * bx[i];
    }
    return out;
}

// (a . grad) b formed pseudo-spectrally: a in physical space, the nine
// derivatives of b spectrally, combined pointwise. Returns a physical field.
inline VectorField3 advect(const VectorField3& a_phys, const VectorField3& b_spec) {
    if (a_phys.rep() != Rep::physical) throw UsageError("advect: first argument must be physical");
    if (b_spec.rep() != Rep::spectral) throw UsageError("advect: second argument must be spectral");
    const Grid& g = a_phys.grid();
    if (g != b_spec.grid()) throw UsageError("advect: grids must match");
    VectorField3 out = VectorField3::zeros(g, Rep::physical);
    for (int j = 0; j < 3; ++j) {
        for (int i = 0; i < 3; ++i) {
            const ScalarField dbj = inverse_transform(partial_derivative(b_spec[j], i));
            const auto ai = a_phys[i].phys();
            const auto d = dbj.phys();
            auto o = out[j].phys();
            for (std::size_t p = 0; p < o.size(); ++p) o[p] += ai[p] * d[p];
        }
    }
    return out;
}

}  // namespace bkmd
