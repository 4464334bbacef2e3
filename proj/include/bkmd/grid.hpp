// Periodic cube discretization and wavenumber bookkeeping.
//
// Physical data is x-fastest row-major on an n^3 grid over [0, L)^3.
// Spectral data is kept in the Hermitian-reduced (r2c) layout: the x
// frequency index runs 0..n/2, y and z run over the full signed range.
#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>

#include "bkmd/errors.hpp"

namespace bkmd {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

class Grid {
  public:
    explicit Grid(int n, double length = kTwoPi) : n_(n), length_(length) {
        if (n < 8 || n % 2 != 0)
            throw UsageError("Grid: n must be an even integer >= 8, got " + std::to_string(n));
        if (!(length > 0.0))
            throw UsageError("Grid: box length must be positive");
    }

    int n() const { return n_; }
    double length() const { return length_; }

    std::size_t physical_size() const {
        const std::size_t n = static_cast<std::size_t>(n_);
        return n * n * n;
    }
    // Number of stored complex modes in the reduced layout.
    std::size_t spectral_size() const {
        const std::size_t n = static_cast<std::size_t>(n_);
        return (n / 2 + 1) * n * n;
    }
    int nx_spec() const { return n_ / 2 + 1; }

    // Signed integer frequency of a full-axis index; the Nyquist index n/2
    // maps to +n/2.
    int freq(int i) const { return i <= n_ / 2 ? i : i - n_; }

    // 2*pi/L: converts integer frequencies to physical wavenumbers.
    double k_scale() const { return kTwoPi / length_; }

    // Largest integer frequency kept by the 2/3-rule dealias mask.
    int dealias_cutoff() const { return n_ / 3; }

    // Largest physical |xi| over all resolved modes (corner of the cube).
    double max_wavenumber() const {
        const double m = static_cast<double>(n_ / 2);
        return k_scale() * m * std::sqrt(3.0);
    }

    std::size_t phys_index(int ix, int iy, int iz) const {
        const std::size_t n = static_cast<std::size_t>(n_);
        return static_cast<std::size_t>(ix) + n * (static_cast<std::size_t>(iy) + n * static_cast<std::size_t>(iz));
    }
    std::size_t spec_index(int jx, int iy, int iz) const {
        const std::size_t nx = static_cast<std::size_t>(nx_spec());
        const std::size_t n = static_cast<std::size_t>(n_);
        return static_cast<std::size_t>(jx) + nx * (static_cast<std::size_t>(iy) + n * static_cast<std::size_t>(iz));
    }

    // Grid coordinate of physical index along one axis.
    double coord(int i) const { return length_ * static_cast<double>(i) / static_cast<double>(n_); }

    friend bool operator==(const Grid& a, const Grid& b) {
        return a.n_ == b.n_ && a.length_ == b.length_;
    }
    friend bool operator!=(const Grid& a, const Grid& b) { return !(a == b); }

  private:
    int n_;
    double length_;
};

}  // namespace bkmd
