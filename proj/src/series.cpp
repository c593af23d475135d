#include "wco/series.hpp"

#include <algorithm>
#include <string>

namespace wco {

namespace {

void check_order(std::size_t order) {
    if (order == 0 || order > kMaxOrder)
        raise(ErrorKind::BadParameterDomain, "series order must lie in [1, 1024]");
}

}  // namespace

PowerSeries::PowerSeries(std::size_t order) : c_(order) { check_order(order); }

PowerSeries::PowerSeries(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {
    check_order(c_.size());
    for (const auto& x : c_)
        if (!is_finite(x)) raise(ErrorKind::NonFinite, "non-finite series coefficient");
}

Complex PowerSeries::operator()(Complex z) const {
    Complex acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

PowerSeries PowerSeries::resized(std::size_t order) const {
    std::vector<Complex> out(order);
    std::copy_n(c_.begin(), std::min(order, c_.size()), out.begin());
    return PowerSeries(std::move(out));
}

PowerSeries expand_rational(const RationalSymbol& r, std::size_t order) {
    if (std::abs(r.d0) < tol::denominator) raise(ErrorKind::PoleAtOrigin, "d0 vanishes");
    PowerSeries out(order);
    const Complex ratio = -r.d1 / r.d0;
    Complex g = 1.0 / r.d0;  // coefficient of z^k in 1 / (d0 + d1 z)
    Complex prev{};
    for (std::size_t k = 0; k < order; ++k) {
        out[k] = r.n0 * g + r.n1 * prev;
        prev = g;
        g *= ratio;
    }
    return out;
}

PowerSeries series_mul(const PowerSeries& f, const PowerSeries& g) {
    if (f.order() != g.order()) raise(ErrorKind::OrderMismatch, "series orders differ");
    const std::size_t n = f.order();
    std::vector<Complex> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (f[i] == Complex{}) continue;
        for (std::size_t j = 0; i + j < n; ++j) out[i + j] += f[i] * g[j];
    }
    return PowerSeries(std::move(out));
}

PowerSeries series_reciprocal(const PowerSeries& f) {
    if (std::abs(f[0]) < tol::denominator) raise(ErrorKind::PoleAtOrigin, "constant term vanishes");
    const std::size_t n = f.order();
    std::vector<Complex> out(n);
    out[0] = 1.0 / f[0];
    for (std::size_t k = 1; k < n; ++k) {
        Complex acc{};
        for (std::size_t j = 1; j <= k; ++j) acc += f[j] * out[k - j];
        out[k] = -acc * out[0];
    }
    return PowerSeries(std::move(out));
}

PowerSeries mobius_series(const MobiusMap& m, std::size_t order) {
    return expand_rational(RationalSymbol{m.b(), m.a(), m.d(), m.c()}, order);
}

PowerSeries compose_mobius(const PowerSeries& f, const MobiusMap& m, std::size_t order) {
    if (std::abs(m.d()) < tol::denominator || std::abs(evaluate(m, 0.0)) >= 1.0 - tol::boundary)
        raise(ErrorKind::NotContractive, "|m(0)| must be below one");
    const PowerSeries phi = mobius_series(m, order);
    PowerSeries acc(order);
    for (std::size_t k = f.order(); k-- > 0;) {
        acc = series_mul(acc, phi);
        acc[0] += f[k];
    }
    return acc;
}

PowerSeries kernel_series(Complex w, std::size_t order) {
    if (std::abs(w) >= 1.0) raise(ErrorKind::OutsideDisk, "kernel point must lie in the disk");
    PowerSeries out(order);
    const Complex wc = std::conj(w);
    Complex p = 1.0;
    for (std::size_t n = 0; n < order; ++n) {
        out[n] = p;
        p *= wc;
    }
    return out;
}

double max_coeff_gap(const PowerSeries& x, const PowerSeries& y, std::size_t count) {
    double worst = 0.0;
    for (std::size_t n = 0; n < count && n < x.order() && n < y.order(); ++n)
        worst = std::max(worst, std::abs(x[n] - y[n]));
    return worst;
}

bool coeffs_close(const PowerSeries& x, const PowerSeries& y, double atol, double rtol) {
    if (x.order() != y.order()) return false;
    for (std::size_t n = 0; n < x.order(); ++n)
        if (!close(x[n], y[n], atol, rtol)) return false;
    return true;
}

}  // namespace wco
