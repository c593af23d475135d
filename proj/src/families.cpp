#include "wco/families.hpp"

#include <algorithm>
#include <cmath>

namespace wco {

namespace {

void require(bool ok, ErrorKind kind, const char* what) {
    if (!ok) raise(kind, what);
}

void require_disk(Complex z, const char* what) {
    require(std::abs(z) < 1.0, ErrorKind::DomainViolation, what);
}

void require_circle(Complex z, const char* what) {
    require(std::abs(std::abs(z) - 1.0) <= tol::boundary, ErrorKind::DomainViolation, what);
}

// (az + b) / (cz + d), falling back to a constant when ad - bc vanishes.
Symbol mobius_or_constant(Complex a, Complex b, Complex c, Complex d) {
    const double s = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
    if (std::abs(a * d - b * c) <= tol::denominator * s * s) {
        const Complex value = std::abs(d) >= std::abs(c) ? b / d : a / c;
        return ConstantMap{value};
    }
    return MobiusMap(a, b, c, d);
}

void require_self_map(const Symbol& phi) {
    if (const auto* k = std::get_if<ConstantMap>(&phi)) {
        require(std::abs(k->value) < 1.0, ErrorKind::NotSelfMap, "constant symbol outside the disk");
        return;
    }
    require(is_self_map(std::get<MobiusMap>(phi)), ErrorKind::NotSelfMap,
            "composition symbol is not a self-map of the disk");
}

std::optional<MobiusMap> as_map(const Symbol& s) {
    if (const auto* m = std::get_if<MobiusMap>(&s)) return *m;
    return std::nullopt;
}

constexpr double kAutMatch = 1e-9;

}  // namespace

const MobiusMap& SymbolPair::map() const {
    if (const auto* m = std::get_if<MobiusMap>(&phi)) return *m;
    raise(ErrorKind::DegenerateResult, "composition symbol is constant");
}

std::string_view to_string(C2Case c) {
    switch (c) {
        case C2Case::CaseI: return "CaseI";
        case C2Case::CaseII: return "CaseII";
        case C2Case::NotNormal: return "NotNormal";
    }
    return "Unknown";
}

SymbolPair j_symbols(const JParams& p) {
    require_disk(p.a0, "|a0| < 1 required");
    require_disk(p.a1, "|a1| < 1 required");
    return {RationalSymbol{p.b, 0.0, 1.0, -p.a0}, mobius_or_constant(p.a1 - p.a0 * p.a0, p.a0, -p.a0, 1.0)};
}

SymbolPair c1_symbols(const C1Params& p) {
    require_circle(p.alpha, "|alpha| = 1 required");
    require_disk(p.c0, "|c0| < 1 required");
    require_disk(p.c1, "|c1| < 1 required");
    const Complex ac0 = p.alpha * p.c0;
    return {RationalSymbol{p.d, 0.0, 1.0, -ac0}, mobius_or_constant(p.c1 - ac0 * p.c0, p.c0, -ac0, 1.0)};
}

namespace {

Symbol c2_symbol(const C2Params& p) {
    const double r = std::abs(p.alpha);
    require(r > 0.0 && r < 1.0, ErrorKind::DomainViolation, "0 < |alpha| < 1 required");
    const Complex ab = std::conj(p.alpha);
    const Complex base = p.c0sq - p.alpha * p.c1;
    require(std::abs(base) > tol::denominator, ErrorKind::DegenerateSymbol, "c0^2 - alpha c1 vanishes");
    return mobius_or_constant(-(r * r * p.c1 - p.c2), p.alpha * (ab * p.c0sq - p.c1), -ab * (p.c1 - p.c2),
                              ab * base);
}

}  // namespace

std::optional<MobiusMap> c2_map(const C2Params& p) { return as_map(c2_symbol(p)); }

SymbolPair c2_symbols(const C2Params& p) {
    Symbol phi = c2_symbol(p);
    require_self_map(phi);
    const Complex base = p.c0sq - p.alpha * p.c1;
    return {RationalSymbol{p.d * base, 0.0, base, -(p.c1 - p.c2)}, std::move(phi)};
}

SymbolPair normal_interior_symbols(const InteriorParams& p) {
    require_disk(p.p, "|p| < 1 required");
    require(std::abs(p.delta) <= 1.0 + 1e-12, ErrorKind::DomainViolation, "|delta| <= 1 required");
    const MobiusMap phi_p(-1.0, p.p, -std::conj(p.p), 1.0);
    const Symbol phi = compose(Symbol{phi_p}, scale(p.delta, phi_p));
    const double pp = std::norm(p.p);
    return {RationalSymbol{p.gamma * (1.0 - pp), 0.0, 1.0 - pp * p.delta, std::conj(p.p) * (p.delta - 1.0)},
            phi};
}

PowerSeries interior_weight_series(const InteriorParams& p, std::size_t order) {
    const auto pair = normal_interior_symbols(p);
    // 1 / (K_p o phi) = 1 - conj(p) phi, so no kernel tail is dropped.
    PowerSeries inner(order);
    if (const auto* k = std::get_if<ConstantMap>(&pair.phi)) {
        inner[0] = k->value;
    } else {
        inner = mobius_series(pair.map(), order);
    }
    std::vector<Complex> c(inner.coeffs());
    for (auto& x : c) x *= -std::conj(p.p);
    c[0] += 1.0;
    PowerSeries out = series_mul(kernel_series(p.p, order), PowerSeries(std::move(c)));
    std::vector<Complex> scaled(out.coeffs());
    for (auto& x : scaled) x *= p.gamma;
    return PowerSeries(std::move(scaled));
}

double j_normal_expression(Complex a0, Complex a1) {
    require_disk(a0, "|a0| < 1 required");
    require_disk(a1, "|a1| < 1 required");
    return a0.imag() * (1.0 - std::norm(a0)) + (std::conj(a0) * a1).imag();
}

bool j_normal_predicate(Complex a0, Complex a1, double eps) {
    return std::abs(j_normal_expression(a0, a1)) <= eps;
}

Complex c1_normal_expression(Complex alpha, Complex c0, Complex c1) {
    require_circle(alpha, "|alpha| = 1 required");
    require_disk(c0, "|c0| < 1 required");
    require_disk(c1, "|c1| < 1 required");
    const Complex cb0 = std::conj(c0);
    return (cb0 - alpha * c0) * (1.0 - std::norm(c0)) + alpha * c0 * std::conj(c1) - cb0 * c1;
}

bool c1_normal_predicate(Complex alpha, Complex c0, Complex c1, double eps) {
    return std::abs(c1_normal_expression(alpha, c0, c1)) <= eps;
}

C2NormalityTerms c2_normality_terms(const C2Params& p) {
    const Complex a = p.alpha, ab = std::conj(a);
    const double r2 = std::norm(a);
    const Complex x = p.c0sq, xb = std::conj(x);
    const Complex c1 = p.c1, c2 = p.c2, cb1 = std::conj(c1), cb2 = std::conj(c2);
    C2NormalityTerms t;
    t.A = (r2 * x - a * c1) * (a * xb - r2 * cb1);
    t.B = r2 * std::norm(ab * x - c1);
    t.C = a * (cb1 - cb2) * (r2 * c1 - c2);
    t.D = std::norm(r2 * c1 - c2);
    t.E = r2 * std::norm(x - a * c1);
    t.At = -a * (r2 * cb1 - cb2) * (ab * x - c1);
    t.Ct = r2 * (x - a * c1) * (cb1 - cb2);
    return t;
}

C2Case c2_normal_predicate(const C2Params& p, double eps) {
    const double r = std::abs(p.alpha);
    require(r > 0.0 && r < 1.0, ErrorKind::DomainViolation, "0 < |alpha| < 1 required");
    const double m1 = std::abs(p.c1 - p.c2);
    const double m2 = std::abs(std::conj(p.alpha) * p.c0sq - p.c1);
    const double m3 = std::abs(p.c0sq - p.alpha * p.c1);
    const double m4 = std::abs(r * r * p.c1 - p.c2) / r;
    if (std::abs(m1 - m2) > eps || std::abs(m1 - m3) > eps || std::abs(m2 - m3) > eps) return C2Case::NotNormal;
    if (std::abs(m4 - m1) > eps) return C2Case::CaseI;
    const auto t = c2_normality_terms(p);
    const double im = (std::conj(t.A - t.C) * (t.At + t.Ct)).imag();
    return std::abs(im) <= eps ? C2Case::CaseII : C2Case::NotNormal;
}

double c2_case1_gap(const C2NormalityTerms& t) { return std::abs(t.A - t.C - (t.At + t.Ct)); }

namespace {

AutForm disk_form_if_match(Complex beta, Complex gamma, const std::optional<MobiusMap>& phi) {
    if (!phi || !(std::abs(gamma) < 1.0)) return NotAutomorphism{};
    if (std::abs(std::abs(beta) - 1.0) > tol::boundary) return NotAutomorphism{};
    const DiskForm form{beta, gamma};
    if (map_distance(from_aut_normal_form({beta, gamma}), *phi) > kAutMatch) return NotAutomorphism{};
    return form;
}

}  // namespace

AutForm j_aut_form(Complex a0, Complex a1) {
    require_disk(a0, "|a0| < 1 required");
    require(std::abs(a1) <= 1.0 + tol::boundary, ErrorKind::DomainViolation, "|a1| <= 1 required");
    if (std::abs(a0) <= tol::denominator) {
        if (std::abs(a1) <= tol::denominator) return NotAutomorphism{};
        return RotationForm{a1, std::abs(std::abs(a1) - 1.0) <= tol::boundary};
    }
    const Complex den = a0 * a0 - a1;
    if (std::abs(den) <= tol::denominator) return NotAutomorphism{};
    const Complex gamma = a0 / den;
    const auto phi = as_map(mobius_or_constant(a1 - a0 * a0, a0, -a0, 1.0));
    return disk_form_if_match(std::conj(gamma) / gamma, gamma, phi);
}

Complex j_lemma_gamma(Complex a0, Complex a1) {
    require(std::abs(a0) > tol::denominator, ErrorKind::DomainViolation, "a0 must be nonzero");
    return (a1 + 1.0) / a0;
}

AutForm c1_aut_form(Complex alpha, Complex c0, Complex c1) {
    require_circle(alpha, "|alpha| = 1 required");
    require_disk(c0, "|c0| < 1 required");
    require(std::abs(c1) <= 1.0 + tol::boundary, ErrorKind::DomainViolation, "|c1| <= 1 required");
    if (std::abs(c0) <= tol::denominator) {
        if (std::abs(c1) <= tol::denominator) return NotAutomorphism{};
        return RotationForm{c1, std::abs(std::abs(c1) - 1.0) <= tol::boundary};
    }
    const Complex den = alpha * c0 * c0 - c1;
    if (std::abs(den) <= tol::denominator) return NotAutomorphism{};
    const Complex gamma = c0 / den;
    const auto phi = as_map(mobius_or_constant(c1 - alpha * c0 * c0, c0, -alpha * c0, 1.0));
    return disk_form_if_match(std::conj(gamma) / (gamma * alpha), gamma, phi);
}

AutForm c2_aut_form(const C2Params& p) {
    const double r = std::abs(p.alpha);
    require(r > 0.0 && r < 1.0, ErrorKind::DomainViolation, "0 < |alpha| < 1 required");
    const Complex ab = std::conj(p.alpha);
    const double scale = std::max(1.0, std::abs(p.c1));
    if (std::abs(p.c1 - p.c2) <= tol::map_equal * scale && std::abs(p.c0sq - p.c1 / ab) <= tol::map_equal * scale)
        return IdentityForm{};
    const Complex den = r * r * p.c1 - p.c2;
    if (std::abs(den) <= tol::denominator) return NotAutomorphism{};
    const Complex gamma = p.alpha * (ab * p.c0sq - p.c1) / den;
    const Complex bden = ab * gamma - r * r;
    if (std::abs(bden) <= tol::denominator) return NotAutomorphism{};
    const Complex beta = (r * r - p.alpha * std::conj(gamma)) / bden;
    if (std::abs(p.c0sq - p.alpha * p.c1) <= tol::denominator) return NotAutomorphism{};
    return disk_form_if_match(beta, gamma, c2_map(p));
}

SymbolPair parabolic_j_symbols(Complex a0, int branch, Complex d) {
    require(branch == 1 || branch == -1, ErrorKind::BranchConditionViolated, "branch must be +1 or -1");
    require(std::abs(a0) > tol::denominator, ErrorKind::BranchConditionViolated, "a0 must be nonzero");
    require(std::abs(a0.imag() - branch * std::norm(a0)) <= tol::predicate, ErrorKind::BranchConditionViolated,
            branch == 1 ? "Im a0 = |a0|^2 required" : "Im a0 = -|a0|^2 required");
    const Complex a1 = (1.0 - double(branch) * a0) * (1.0 - double(branch) * a0);
    require_disk(a0, "|a0| < 1 required");
    require_disk(a1, "the implied a1 = (1 -/+ a0)^2 must lie in the disk");
    return {RationalSymbol{d, 0.0, 1.0, -a0}, MobiusMap(1.0 - 2.0 * branch * a0, a0, -a0, 1.0)};
}

SymbolPair c1_parabolic_symbols(Complex zeta, Complex c0, Complex c1, Complex d) {
    require_circle(zeta, "|zeta| = 1 required");
    require_disk(c0, "|c0| < 1 required");
    require_disk(c1, "|c1| < 1 required");
    require(std::abs(c0) > tol::denominator, ErrorKind::DiscriminantViolated, "c0 must be nonzero");
    const Complex z2 = zeta * zeta;
    const Complex alpha = 1.0 / z2;
    const Complex lhs = (c1 - alpha * c0 * c0 - 1.0) * (c1 - alpha * c0 * c0 - 1.0);
    require(std::abs(lhs - 4.0 * alpha * c0 * c0) <= tol::predicate, ErrorKind::DiscriminantViolated,
            "(c1 - alpha c0^2 - 1)^2 = 4 alpha c0^2 fails");
    const Complex induced = (1.0 + alpha * c0 * c0 - c1) / (2.0 * alpha * c0);
    require(std::abs(induced - zeta) <= tol::boundary, ErrorKind::DiscriminantViolated,
            "the double fixed point sits at -zeta");
    return {RationalSymbol{z2 * d, 0.0, z2, -c0}, MobiusMap(z2 * c1 - c0 * c0, z2 * c0, -c0, z2)};
}

MobiusMap hyperbolic_aut_map(const HyperbolicParams& p) {
    require(p.r > 1.0, ErrorKind::DomainViolation, "r > 1 required");
    const Complex t = p.t;
    const MobiusMap m(p.r + 1.0 - t, p.r + t - 1.0, p.r - t - 1.0, p.r + t + 1.0);
    require(is_self_map(m), ErrorKind::NotSelfMap, "hyperbolic map is not a self-map for this t");
    return m;
}

Complex c2_parabolic_point(const C2Params& p) {
    const Complex w = p.c1 - p.c2;
    require(std::abs(w) > tol::denominator, ErrorKind::DegenerateSymbol, "c1 = c2");
    const Complex ab = std::conj(p.alpha);
    return (std::norm(p.alpha) * p.c1 - p.c2 + ab * (p.c0sq - p.alpha * p.c1)) / (2.0 * ab * w);
}

bool c2_parabolic_predicate(const C2Params& p, double eps) {
    const Complex zeta = c2_parabolic_point(p);
    const Complex ab = std::conj(p.alpha);
    const double r2 = std::norm(p.alpha);
    const Complex s = r2 * p.c1 - p.c2 + ab * (p.c0sq - p.alpha * p.c1);
    const Complex rhs = 4.0 * r2 * (p.c1 - p.c2) * (ab * p.c0sq - p.c1);
    return std::abs(s * s - rhs) <= eps && std::abs(std::abs(zeta) - 1.0) <= tol::boundary;
}

Complex c2_parabolic_admissible_point(Complex alpha, int sign) {
    const double r = std::abs(alpha);
    require(r > 0.0 && r < 1.0, ErrorKind::DomainViolation, "0 < |alpha| < 1 required");
    require(sign == 1 || sign == -1, ErrorKind::DomainViolation, "sign must be +1 or -1");
    return alpha / r * Complex(r, sign * std::sqrt(1.0 - r * r));
}

C2Params c2_parabolic_params(Complex alpha, Complex zeta, Complex c0sq, Complex c1, Complex d) {
    const double r = std::abs(alpha);
    require(r > 0.0 && r < 1.0, ErrorKind::DomainViolation, "0 < |alpha| < 1 required");
    const Complex ab = std::conj(alpha);
    require(std::abs(ab * zeta * zeta - 2.0 * r * r * zeta + alpha) <= tol::boundary,
            ErrorKind::DiscriminantViolated, "zeta cannot be a parabolic point for this alpha");
    const Complex u = ab * c0sq - c1;
    const Complex w = u / (2.0 * zeta * ab - 1.0);
    require(std::abs(w) > tol::denominator, ErrorKind::DegenerateSymbol, "the completion forces c1 = c2");
    return {alpha, c0sq, c1, c1 - w, d};
}

C2InteriorTerms c2_interior_terms(Complex alpha, double p, Complex delta) {
    require(p != 0.0 && std::abs(p) < 1.0, ErrorKind::DomainViolation, "0 < |p| < 1 required");
    require(std::abs(1.0 - delta) > tol::denominator, ErrorKind::DomainViolation, "delta = 1 excluded");
    require(std::abs(alpha) > 0.0, ErrorKind::DomainViolation, "alpha must be nonzero");
    const Complex ab = std::conj(alpha);
    const double p2 = p * p;
    return {ab * (p2 - delta) / (p * (1.0 - delta)), ab * p * (1.0 - delta) / (alpha * (1.0 - p2 * delta)),
            (1.0 - p2 * delta) / (p * (1.0 - delta))};
}

C2InteriorReconstruction c2_from_interior(Complex alpha, double p, Complex delta) {
    const auto t = c2_interior_terms(alpha, p, delta);
    const double r2 = std::norm(alpha);
    require(r2 < 1.0, ErrorKind::DomainViolation, "|alpha| < 1 required");
    const Complex c1 = (t.I2 * t.I3 - std::conj(alpha) * t.I3) / (r2 - 1.0);
    const Complex c0sq = t.I3 + alpha * c1;
    const Complex c2 = c1 - 1.0;
    return {{alpha, c0sq, c1, c2, 1.0}, std::abs(r2 * c1 - c2 - t.I1)};
}

}  // namespace wco
