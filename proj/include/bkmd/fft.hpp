// Discrete Fourier transforms on the periodic cube (FFTW r2c/c2r backend).
//
// Normalization: forward divides by n^3, so the zero mode equals the field
// mean and inverse_transform(forward_transform(f)) == f to roundoff.
// Plans are cached per grid size and executed through the new-array
// interface; all field storage is fftw_malloc-aligned (see FftwAllocator).
#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <mutex>

#include <fftw3.h>

#include "bkmd/field.hpp"

namespace bkmd {
namespace detail {

struct PlanSet {
    fftw_plan r2c = nullptr;
    fftw_plan c2r = nullptr;
};

// Plan creation is not thread-safe in FFTW; executing a cached plan on
// distinct arrays is.
inline const PlanSet& plans_for(int n) {
    static std::mutex mutex;
    static std::map<int, PlanSet> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    const std::size_t nn = static_cast<std::size_t>(n);
    RealVec real_scratch(nn * nn * nn);
    CplxVec cplx_scratch(nn * nn * (nn / 2 + 1));
    PlanSet plans;
    plans.r2c = fftw_plan_dft_r2c_3d(n, n, n, real_scratch.data(),
                                     reinterpret_cast<fftw_complex*>(cplx_scratch.data()),
                                     FFTW_ESTIMATE);
    plans.c2r = fftw_plan_dft_c2r_3d(n, n, n,
                                     reinterpret_cast<fftw_complex*>(cplx_scratch.data()),
                                     real_scratch.data(), FFTW_ESTIMATE);
    return cache.emplace(n, plans).first->second;
}

// Per-thread spectral scratch; c2r destroys its input, so transforms copy
// coefficients here first.
inline CplxVec& cplx_scratch_for(const Grid& grid) {
    thread_local std::map<std::size_t, CplxVec> cache;
    CplxVec& buf = cache[grid.spectral_size()];
    if (buf.size() != grid.spectral_size()) buf.resize(grid.spectral_size());
    return buf;
}

}  // namespace detail

// True when the stored planes jx = 0 and jx = n/2 are consistent with a
// real-valued physical field: F(jx, -iy, -iz) == conj(F(jx, iy, iz)).
// The interior planes carry no redundancy in the reduced layout.
inline bool hermitian_symmetric(const ScalarField& f, double rel_tol = 1e-10) {
    const Grid& g = f.grid();
    const auto spec = f.spec();
    const int n = g.n();
    double scale = 0.0;
    for (const auto& c : spec) scale = std::max(scale, std::abs(c));
    const double tol = rel_tol * (1.0 + scale);
    for (int jx : {0, n / 2}) {
        for (int iz = 0; iz < n; ++iz) {
            const int mz = (n - iz) % n;
            for (int iy = 0; iy < n; ++iy) {
                const int my = (n - iy) % n;
                const std::complex<double> a = spec[g.spec_index(jx, iy, iz)];
                const std::complex<double> b = spec[g.spec_index(jx, my, mz)];
                if (std::abs(a - std::conj(b)) > tol) return false;
            }
        }
    }
    return true;
}

inline ScalarField forward_transform(const ScalarField& f) {
    if (f.rep() != Rep::physical)
        throw UsageError("forward_transform: input must be physical");
    const Grid& g = f.grid();
    ScalarField out = ScalarField::zeros(g, Rep::spectral);
    const detail::PlanSet& plans = detail::plans_for(g.n());
    // Out-of-place r2c preserves its input; the const_cast only satisfies
    // FFTW's C signature.
    fftw_execute_dft_r2c(plans.r2c, const_cast<double*>(f.phys().data()),
                         reinterpret_cast<fftw_complex*>(out.spec().data()));
    const double inv_n3 = 1.0 / static_cast<double>(g.physical_size());
    for (auto& c : out.spec()) c *= inv_n3;
    return out;
}

inline ScalarField inverse_transform(const ScalarField& f) {
    if (f.rep() != Rep::spectral)
        throw UsageError("inverse_transform: input must be spectral");
    if (!hermitian_symmetric(f))
        throw ValidationError("inverse_transform: coefficients are not Hermitian-symmetric");
    const Grid& g = f.grid();
    ScalarField out = ScalarField::zeros(g, Rep::physical);
    CplxVec& scratch = detail::cplx_scratch_for(g);
    std::copy(f.spec().begin(), f.spec().end(), scratch.begin());
    const detail::PlanSet& plans = detail::plans_for(g.n());
    fftw_execute_dft_c2r(plans.c2r, reinterpret_cast<fftw_complex*>(scratch.data()),
                         out.phys().data());
    return out;
}

inline VectorField3 forward_transform(const VectorField3& v) {
    return {forward_transform(v[0]), forward_transform(v[1]), forward_transform(v[2])};
}
inline VectorField3 inverse_transform(const VectorField3& v) {
    return {inverse_transform(v[0]), inverse_transform(v[1]), inverse_transform(v[2])};
}

inline ScalarField to_spectral(const ScalarField& f) {
    return f.rep() == Rep::spectral ? f : forward_transform(f);
}
inline ScalarField to_physical(const ScalarField& f) {
    return f.rep() == Rep::physical ? f : inverse_transform(f);
}
inline VectorField3 to_spectral(const VectorField3& v) {
    return v.rep() == Rep::spectral ? v : forward_transform(v);
}
inline VectorField3 to_physical(const VectorField3& v) {
    return v.rep() == Rep::physical ? v : inverse_transform(v);
}

}  // namespace bkmd
