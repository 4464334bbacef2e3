// Scalar and three-component fields with a dual physical/spectral
// representation. Storage is FFTW-aligned so transform plans can be reused
// across fields of the same size.
#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <fftw3.h>

#include "bkmd/errors.hpp"
#include "bkmd/grid.hpp"

namespace bkmd {

template <class T>
struct FftwAllocator {
    using value_type = T;
    FftwAllocator() = default;
    template <class U>
    FftwAllocator(const FftwAllocator<U>&) {}
    T* allocate(std::size_t count) {
        void* p = fftw_malloc(count * sizeof(T));
        if (!p) throw std::bad_alloc();
        return static_cast<T*>(p);
    }
    void deallocate(T* p, std::size_t) { fftw_free(p); }
    template <class U>
    bool operator==(const FftwAllocator<U>&) const { return true; }
};

using RealVec = std::vector<double, FftwAllocator<double>>;
using CplxVec = std::vector<std::complex<double>, FftwAllocator<std::complex<double>>>;

enum class Rep { physical, spectral };

class ScalarField {
  public:
    static ScalarField zeros(const Grid& grid, Rep rep) { return ScalarField(grid, rep); }

    const Grid& grid() const { return grid_; }
    Rep rep() const { return rep_; }

    std::span<double> phys() {
        require(Rep::physical);
        return {phys_.data(), phys_.size()};
    }
    std::span<const double> phys() const {
        require(Rep::physical);
        return {phys_.data(), phys_.size()};
    }
    std::span<std::complex<double>> spec() {
        require(Rep::spectral);
        return {spec_.data(), spec_.size()};
    }
    std::span<const std::complex<double>> spec() const {
        require(Rep::spectral);
        return {spec_.data(), spec_.size()};
    }

  private:
    ScalarField(const Grid& grid, Rep rep) : grid_(grid), rep_(rep) {
        if (rep == Rep::physical)
            phys_.assign(grid.physical_size(), 0.0);
        else
            spec_.assign(grid.spectral_size(), std::complex<double>(0.0, 0.0));
    }
    void require(Rep rep) const {
        if (rep_ != rep)
            throw UsageError(rep == Rep::physical
                                 ? "ScalarField: physical representation required"
                                 : "ScalarField: spectral representation required");
    }

    Grid grid_;
    Rep rep_;
    RealVec phys_;
    CplxVec spec_;
};

class VectorField3 {
  public:
    static VectorField3 zeros(const Grid& grid, Rep rep) {
        return VectorField3(ScalarField::zeros(grid, rep), ScalarField::zeros(grid, rep),
                            ScalarField::zeros(grid, rep));
    }
    VectorField3(ScalarField x, ScalarField y, ScalarField z)
        : comp_{std::move(x), std::move(y), std::move(z)} {
        if (comp_[0].grid() != comp_[1].grid() || comp_[0].grid() != comp_[2].grid())
            throw UsageError("VectorField3: components must share one grid");
        if (comp_[0].rep() != comp_[1].rep() || comp_[0].rep() != comp_[2].rep())
            throw UsageError("VectorField3: components must share one representation");
    }

    const Grid& grid() const { return comp_[0].grid(); }
    Rep rep() const { return comp_[0].rep(); }

    ScalarField& operator[](int i) { return comp_[static_cast<std::size_t>(i)]; }
    const ScalarField& operator[](int i) const { return comp_[static_cast<std::size_t>(i)]; }

  private:
    std::array<ScalarField, 3> comp_;
};

}  // namespace bkmd
