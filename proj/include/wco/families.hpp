#pragma once

#include <optional>
#include <variant>

#include "wco/mobius.hpp"
#include "wco/rational.hpp"
#include "wco/series.hpp"

namespace wco {

/// psi = b / (1 - a0 z), phi = ((a1 - a0^2) z + a0) / (1 - a0 z).
struct JParams {
    Complex a0, a1, b{1.0};
};

/// psi = d / (1 - alpha c0 z), phi = ((c1 - alpha c0^2) z + c0) / (1 - alpha c0 z), |alpha| = 1.
struct C1Params {
    Complex alpha, c0, c1, d{1.0};
};

/// Kernel-weighted family, 0 < |alpha| < 1. Only c0^2 enters the symbols, so it
/// is stored directly.
struct C2Params {
    Complex alpha, c0sq, c1, c2, d{1.0};

    static C2Params from_c0(Complex alpha, Complex c0, Complex c1, Complex c2, Complex d = 1.0) {
        return {alpha, c0 * c0, c1, c2, d};
    }
    Complex c0() const { return std::sqrt(c0sq); }
};

/// Normal family with interior fixed point p: phi = phi_p o (delta phi_p), gamma = psi(p).
struct InteriorParams {
    Complex p, delta, gamma{1.0};
};

/// Hyperbolic maps with Denjoy-Wolff point 1 and phi'(1) = 1/r.
struct HyperbolicParams {
    double r;
    Complex t;
};

struct SymbolPair {
    RationalSymbol psi;
    Symbol phi = ConstantMap{0.0};

    bool constant() const { return std::holds_alternative<ConstantMap>(phi); }
    /// Throws DegenerateResult when phi is constant.
    const MobiusMap& map() const;
};

struct C2NormalityTerms {
    Complex A, B, C, D, E, At, Ct;
};

struct C2InteriorTerms {
    Complex I1, I2, I3;
};

enum class C2Case { CaseI, CaseII, NotNormal };
std::string_view to_string(C2Case c);

struct NotAutomorphism {};
struct RotationForm {
    Complex beta;
    bool on_boundary;  // |beta| = 1; false for the interior rotation allowed by the family domain
};
struct DiskForm {
    Complex beta, gamma;  // phi = beta (gamma - z) / (1 - conj(gamma) z)
};
struct IdentityForm {};
using AutForm = std::variant<NotAutomorphism, RotationForm, DiskForm, IdentityForm>;

SymbolPair j_symbols(const JParams& p);
SymbolPair c1_symbols(const C1Params& p);
SymbolPair c2_symbols(const C2Params& p);

/// phi of the C2 family without the self-map check; nullopt when phi is constant.
std::optional<MobiusMap> c2_map(const C2Params& p);

SymbolPair normal_interior_symbols(const InteriorParams& p);

/// gamma K_p / (K_p o phi) through series arithmetic.
PowerSeries interior_weight_series(const InteriorParams& p, std::size_t order);

double j_normal_expression(Complex a0, Complex a1);
bool j_normal_predicate(Complex a0, Complex a1, double eps = tol::predicate);
Complex c1_normal_expression(Complex alpha, Complex c0, Complex c1);
bool c1_normal_predicate(Complex alpha, Complex c0, Complex c1, double eps = tol::predicate);

C2NormalityTerms c2_normality_terms(const C2Params& p);
C2Case c2_normal_predicate(const C2Params& p, double eps = tol::predicate);

/// |A - C - (At + Ct)|, the commutation requirement implied when D != B.
double c2_case1_gap(const C2NormalityTerms& t);

AutForm j_aut_form(Complex a0, Complex a1);
/// The printed gamma = (a1 + 1) / a0; agrees with j_aut_form only for real gamma.
Complex j_lemma_gamma(Complex a0, Complex a1);
AutForm c1_aut_form(Complex alpha, Complex c0, Complex c1);
AutForm c2_aut_form(const C2Params& p);

/// branch = +1: phi = ((1 - 2 a0) z + a0) / (1 - a0 z), needs Im a0 = |a0|^2.
/// branch = -1: phi = ((1 + 2 a0) z + a0) / (1 - a0 z), needs Im a0 = -|a0|^2.
SymbolPair parabolic_j_symbols(Complex a0, int branch, Complex d = 1.0);
SymbolPair c1_parabolic_symbols(Complex zeta, Complex c0, Complex c1, Complex d = 1.0);

MobiusMap hyperbolic_aut_map(const HyperbolicParams& p);

/// Denjoy-Wolff point implied by the parabolic discriminant of the C2 family.
Complex c2_parabolic_point(const C2Params& p);
bool c2_parabolic_predicate(const C2Params& p, double eps = tol::predicate);

/// Points that can be a parabolic Denjoy-Wolff point of the C2 family for this
/// alpha: the roots of conj(alpha) z^2 - 2|alpha|^2 z + alpha = 0 (sign picks one).
Complex c2_parabolic_admissible_point(Complex alpha, int sign);

/// Completes (alpha, c0^2, c1) with the c2 that puts a parabolic point at zeta.
C2Params c2_parabolic_params(Complex alpha, Complex zeta, Complex c0sq, Complex c1, Complex d = 1.0);

C2InteriorTerms c2_interior_terms(Complex alpha, double p, Complex delta);

struct C2InteriorReconstruction {
    C2Params params;     // gauge c1 - c2 = 1
    double consistency;  // residual of the third linear relation
};

C2InteriorReconstruction c2_from_interior(Complex alpha, double p, Complex delta);

}  // namespace wco
