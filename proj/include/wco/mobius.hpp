#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "wco/core.hpp"
#include "wco/rational.hpp"

namespace wco {

/// z -> (az + b) / (cz + d) with ad - bc != 0, stored with the coefficient of
/// largest modulus scaled to one.
class MobiusMap {
public:
    MobiusMap(Complex a, Complex b, Complex c, Complex d);

    static MobiusMap identity() { return {1.0, 0.0, 0.0, 1.0}; }

    Complex a() const { return coef_[0]; }
    Complex b() const { return coef_[1]; }
    Complex c() const { return coef_[2]; }
    Complex d() const { return coef_[3]; }
    const std::array<Complex, 4>& coefficients() const { return coef_; }

    Complex determinant() const { return coef_[0] * coef_[3] - coef_[1] * coef_[2]; }
    Complex derivative(Complex z) const;
    bool is_identity(double tol = tol::map_equal) const;

    /// Projective equality: coefficients agree after scaling both by this map's pivot.
    bool approx_equal(const MobiusMap& other, double tol = tol::map_equal) const;

private:
    std::array<Complex, 4> coef_;
};

struct ConstantMap {
    Complex value;
};

/// Composition symbol accepted by the operator builder.
using Symbol = std::variant<MobiusMap, ConstantMap>;

struct FixedPoint {
    Complex value;  // meaningless when at_infinity
    bool at_infinity = false;
    int multiplicity = 1;
};

enum class MapClass {
    Identity,
    Constant,
    InteriorFixedPoint,
    EllipticAutomorphism,
    HyperbolicAutomorphism,
    HyperbolicNonAutomorphism,
    ParabolicAutomorphism,
    ParabolicNonAutomorphism,
};

std::string_view to_string(MapClass cls);

struct MapClassification {
    MapClass cls;
    Complex dw_point;
    Complex dw_derivative;
    bool is_automorphism;
};

/// phi = beta (gamma - z) / (1 - conj(gamma) z).
struct AutNormalForm {
    Complex beta;
    Complex gamma;
};

/// Sign of the c-coefficient in sigma; `Minus` is the one that satisfies the
/// adjoint factorization, `Plus` exists only to demonstrate that it does not.
enum class SigmaSign { Minus, Plus };

/// C_phi^* = M_g C_sigma M_h^*.
struct CowenTriple {
    RationalSymbol g;
    MobiusMap sigma;
    RationalSymbol h;
};

Complex evaluate(const MobiusMap& m, Complex z);
Complex evaluate(const Symbol& s, Complex z);

/// (outer o inner)(z) = outer(inner(z)).
MobiusMap compose(const MobiusMap& outer, const MobiusMap& inner);
Symbol compose(const Symbol& outer, const Symbol& inner);

/// z -> s * m(z); s = 0 gives the constant map 0.
Symbol scale(Complex s, const MobiusMap& m);

std::vector<FixedPoint> fixed_points(const MobiusMap& m);
bool is_self_map(const MobiusMap& m, double eps = tol::self_map);
bool is_automorphism(const MobiusMap& m, double eps = tol::self_map);
MapClassification classify(const MobiusMap& m);
MapClassification classify(const ConstantMap& m);
std::optional<AutNormalForm> aut_normal_form(const MobiusMap& m);
MobiusMap from_aut_normal_form(const AutNormalForm& f);
CowenTriple cowen_adjoint(const MobiusMap& m, SigmaSign sign = SigmaSign::Minus);

struct LftNormalityDefect {
    double modulus;  // | |phi(0)| - |sigma(0)| |
    double commute;  // max coefficient gap between phi o sigma and sigma o phi
    double value() const { return modulus > commute ? modulus : commute; }
};

LftNormalityDefect lft_normality_defect(const MobiusMap& m);
bool normality_lft_check(const MobiusMap& m, double eps = tol::predicate);

/// Largest coefficient gap after a shared projective scaling.
double map_distance(const MobiusMap& x, const MobiusMap& y);

}  // namespace wco
