#include "wco/mobius.hpp"

#include <algorithm>
#include <limits>

namespace wco {

namespace {

std::size_t pivot_index(const std::array<Complex, 4>& v) {
    double top = 0.0;
    for (const auto& x : v) top = std::max(top, std::abs(x));
    for (std::size_t i = 0; i < 4; ++i)
        if (std::abs(v[i]) >= top * (1.0 - 1e-12)) return i;
    return 0;
}

double distance_with_pivot(const std::array<Complex, 4>& x, const std::array<Complex, 4>& y,
                           std::size_t p) {
    if (std::abs(y[p]) < 1e-300) return std::numeric_limits<double>::infinity();
    const Complex sx = x[p], sy = y[p];
    double worst = 0.0;
    for (std::size_t i = 0; i < 4; ++i) worst = std::max(worst, std::abs(x[i] / sx - y[i] / sy));
    return worst;
}

}  // namespace

MobiusMap::MobiusMap(Complex a, Complex b, Complex c, Complex d) : coef_{a, b, c, d} {
    for (const auto& x : coef_)
        if (!is_finite(x)) raise(ErrorKind::NonFinite, "non-finite Mobius coefficient");
    const Complex s = coef_[pivot_index(coef_)];
    if (s == Complex{}) raise(ErrorKind::DegenerateResult, "all coefficients vanish");
    for (auto& x : coef_) x /= s;
    if (std::abs(determinant()) <= tol::denominator)
        raise(ErrorKind::DegenerateResult, "ad - bc vanishes; the map is constant");
}

Complex MobiusMap::derivative(Complex z) const {
    const Complex den = c() * z + d();
    if (std::abs(den) < tol::denominator) raise(ErrorKind::PoleAtInput, "derivative at pole");
    return determinant() / (den * den);
}

bool MobiusMap::is_identity(double eps) const {
    return std::abs(b()) <= eps && std::abs(c()) <= eps && std::abs(a() - d()) <= eps;
}

bool MobiusMap::approx_equal(const MobiusMap& other, double eps) const {
    return map_distance(*this, other) <= eps;
}

double map_distance(const MobiusMap& x, const MobiusMap& y) {
    const auto& u = x.coefficients();
    const auto& v = y.coefficients();
    return std::min(distance_with_pivot(u, v, pivot_index(u)),
                    distance_with_pivot(u, v, pivot_index(v)));
}

std::string_view to_string(MapClass cls) {
    switch (cls) {
        case MapClass::Identity: return "Identity";
        case MapClass::Constant: return "Constant";
        case MapClass::InteriorFixedPoint: return "InteriorFixedPoint";
        case MapClass::EllipticAutomorphism: return "EllipticAutomorphism";
        case MapClass::HyperbolicAutomorphism: return "HyperbolicAutomorphism";
        case MapClass::HyperbolicNonAutomorphism: return "HyperbolicNonAutomorphism";
        case MapClass::ParabolicAutomorphism: return "ParabolicAutomorphism";
        case MapClass::ParabolicNonAutomorphism: return "ParabolicNonAutomorphism";
    }
    return "Unknown";
}

Complex evaluate(const MobiusMap& m, Complex z) {
    const Complex den = m.c() * z + m.d();
    if (std::abs(den) < tol::denominator) raise(ErrorKind::PoleAtInput, "evaluation at the pole");
    return (m.a() * z + m.b()) / den;
}

Complex evaluate(const Symbol& s, Complex z) {
    if (const auto* k = std::get_if<ConstantMap>(&s)) return k->value;
    return evaluate(std::get<MobiusMap>(s), z);
}

MobiusMap compose(const MobiusMap& f, const MobiusMap& g) {
    return MobiusMap(f.a() * g.a() + f.b() * g.c(), f.a() * g.b() + f.b() * g.d(),
                     f.c() * g.a() + f.d() * g.c(), f.c() * g.b() + f.d() * g.d());
}

Symbol compose(const Symbol& outer, const Symbol& inner) {
    if (std::holds_alternative<ConstantMap>(outer)) return outer;
    const auto& f = std::get<MobiusMap>(outer);
    if (const auto* k = std::get_if<ConstantMap>(&inner)) return ConstantMap{evaluate(f, k->value)};
    return compose(f, std::get<MobiusMap>(inner));
}

Symbol scale(Complex s, const MobiusMap& m) {
    if (s == Complex{}) return ConstantMap{0.0};
    return MobiusMap(s * m.a(), s * m.b(), m.c(), m.d());
}

std::vector<FixedPoint> fixed_points(const MobiusMap& m) {
    if (m.is_identity()) raise(ErrorKind::IdentityMap, "every point is fixed");
    const Complex a = m.a(), b = m.b(), c = m.c(), d = m.d();
    const Complex lin = d - a;
    if (std::abs(c) <= tol::denominator) {
        if (std::abs(lin) <= tol::denominator) return {{0.0, true, 2}};
        return {{b / lin, false, 1}, {0.0, true, 1}};
    }
    // c z^2 + (d - a) z - b = 0
    const Complex disc = lin * lin + 4.0 * b * c;
    if (std::abs(disc) <= tol::parabolic) return {{-lin / (2.0 * c), false, 2}};
    Complex root = std::sqrt(disc);
    if ((std::conj(lin) * root).real() < 0.0) root = -root;
    const Complex q = -0.5 * (lin + root);
    return {{q / c, false, 1}, {-b / q, false, 1}};
}

bool is_self_map(const MobiusMap& m, double eps) {
    const Complex a = m.a(), b = m.b(), c = m.c(), d = m.d();
    const double lhs = std::abs(b * std::conj(d) - a * std::conj(c)) + std::abs(a * d - b * c);
    return lhs <= std::norm(d) - std::norm(c) + eps;
}

bool is_automorphism(const MobiusMap& m, double eps) {
    const Complex a = m.a(), b = m.b(), c = m.c(), d = m.d();
    const bool circle = std::abs(std::norm(a) + std::norm(b) - std::norm(c) - std::norm(d)) <= eps &&
                        std::abs(a * std::conj(b) - c * std::conj(d)) <= eps;
    return circle && is_self_map(m, eps);
}

MapClassification classify(const ConstantMap& m) {
    return {MapClass::Constant, m.value, 0.0, false};
}

MapClassification classify(const MobiusMap& m) {
    if (!is_self_map(m)) raise(ErrorKind::NotSelfMap, "map does not send the disk into itself");
    if (m.is_identity()) return {MapClass::Identity, 0.0, 1.0, true};
    const bool aut = is_automorphism(m);
    const auto fps = fixed_points(m);

    for (const auto& fp : fps) {
        if (fp.at_infinity || std::abs(fp.value) >= 1.0 - tol::boundary) continue;
        return {aut ? MapClass::EllipticAutomorphism : MapClass::InteriorFixedPoint, fp.value,
                m.derivative(fp.value), aut};
    }

    const FixedPoint* best = nullptr;
    double best_slope = std::numeric_limits<double>::infinity();
    for (const auto& fp : fps) {
        if (fp.at_infinity || std::abs(std::abs(fp.value) - 1.0) > tol::boundary) continue;
        const double slope = std::abs(m.derivative(fp.value));
        if (slope < best_slope) {
            best_slope = slope;
            best = &fp;
        }
    }
    if (best == nullptr || best_slope > 1.0 + tol::boundary)
        raise(ErrorKind::DegenerateResult, "no Denjoy-Wolff point located in the closed disk");

    const Complex zeta = best->value / std::abs(best->value);
    const Complex slope = m.derivative(zeta);
    MapClass cls;
    if (best->multiplicity == 2)
        cls = aut ? MapClass::ParabolicAutomorphism : MapClass::ParabolicNonAutomorphism;
    else
        cls = aut ? MapClass::HyperbolicAutomorphism : MapClass::HyperbolicNonAutomorphism;
    return {cls, zeta, slope, aut};
}

std::optional<AutNormalForm> aut_normal_form(const MobiusMap& m) {
    if (!is_automorphism(m)) return std::nullopt;
    const Complex d = m.d();
    Complex beta = -m.a() / d;
    beta /= std::abs(beta);
    const Complex gamma = -std::conj(m.c() / d);
    return AutNormalForm{beta, gamma};
}

MobiusMap from_aut_normal_form(const AutNormalForm& f) {
    return MobiusMap(-f.beta, f.beta * f.gamma, -std::conj(f.gamma), 1.0);
}

CowenTriple cowen_adjoint(const MobiusMap& m, SigmaSign sign) {
    const Complex a = m.a(), b = m.b(), c = m.c(), d = m.d();
    if (std::abs(d) <= tol::denominator)
        raise(ErrorKind::DegenerateResult, "d = 0: g has a pole at the origin");
    const Complex cc = sign == SigmaSign::Minus ? -std::conj(c) : std::conj(c);
    return {RationalSymbol{1.0, 0.0, std::conj(d), -std::conj(b)},
            MobiusMap(std::conj(a), cc, -std::conj(b), std::conj(d)), RationalSymbol::linear(d, c)};
}

LftNormalityDefect lft_normality_defect(const MobiusMap& m) {
    const MobiusMap sigma = cowen_adjoint(m).sigma;
    const double phi0 = std::abs(evaluate(m, 0.0));
    const double sigma0 = std::abs(evaluate(sigma, 0.0));
    return {std::abs(phi0 - sigma0), map_distance(compose(m, sigma), compose(sigma, m))};
}

bool normality_lft_check(const MobiusMap& m, double eps) {
    return lft_normality_defect(m).value() <= eps;
}

}  // namespace wco
