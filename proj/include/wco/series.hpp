#pragma once

#include <cstddef>
#include <vector>

#include "wco/core.hpp"
#include "wco/mobius.hpp"
#include "wco/rational.hpp"

namespace wco {

inline constexpr std::size_t kMaxOrder = 1024;

/// Taylor coefficients c[0..N) of a function on the disk.
class PowerSeries {
public:
    PowerSeries() = default;
    explicit PowerSeries(std::size_t order);
    explicit PowerSeries(std::vector<Complex> coeffs);

    std::size_t order() const { return c_.size(); }
    Complex operator[](std::size_t n) const { return c_[n]; }
    Complex& operator[](std::size_t n) { return c_[n]; }
    const std::vector<Complex>& coeffs() const { return c_; }

    /// Horner evaluation of the truncated polynomial.
    Complex operator()(Complex z) const;

    /// Copy truncated (or zero-padded) to `order`.
    PowerSeries resized(std::size_t order) const;

private:
    std::vector<Complex> c_;
};

PowerSeries expand_rational(const RationalSymbol& r, std::size_t order);
PowerSeries series_mul(const PowerSeries& f, const PowerSeries& g);

/// 1 / f, requires f[0] != 0.
PowerSeries series_reciprocal(const PowerSeries& f);

/// Coefficients [0, order) of f o m. Every coefficient of f is used, so f may be
/// supplied at a higher order than the result.
PowerSeries compose_mobius(const PowerSeries& f, const MobiusMap& m, std::size_t order);

/// Coefficients of K_w(z) = 1 / (1 - conj(w) z).
PowerSeries kernel_series(Complex w, std::size_t order);

/// Series of the map itself: (b + a z) / (d + c z).
PowerSeries mobius_series(const MobiusMap& m, std::size_t order);

/// Largest |x_n - y_n| over the common prefix.
double max_coeff_gap(const PowerSeries& x, const PowerSeries& y, std::size_t count);

/// All coefficients satisfy |x - y| <= atol + rtol |y|.
bool coeffs_close(const PowerSeries& x, const PowerSeries& y, double atol = tol::coeff_atol,
                  double rtol = tol::coeff_rtol);

}  // namespace wco
