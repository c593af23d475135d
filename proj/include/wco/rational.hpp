#pragma once

#include "wco/core.hpp"

namespace wco {

/// (n0 + n1 z) / (d0 + d1 z), analytic at the origin.
struct RationalSymbol {
    Complex n0{1.0}, n1{0.0}, d0{1.0}, d1{0.0};

    static RationalSymbol constant(Complex value) { return {value, 0.0, 1.0, 0.0}; }
    static RationalSymbol linear(Complex c0, Complex c1) { return {c0, c1, 1.0, 0.0}; }

    Complex operator()(Complex z) const;

    /// Modulus of the denominator root, +inf when d1 == 0.
    double pole_modulus() const;

    /// Pole strictly outside the closed disk with margin `tol::pole_guard`.
    bool bounded_on_disk() const { return pole_modulus() > 1.0 + tol::pole_guard; }
};

}  // namespace wco
