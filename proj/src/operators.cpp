#include "wco/operators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wco/series.hpp"

namespace wco {

namespace {

void check_dim(std::size_t n) {
    if (n == 0 || n > kMaxOrder) raise(ErrorKind::BadParameterDomain, "dimension must lie in [1, 1024]");
}

void check_block(std::size_t n, std::size_t k) {
    if (k == 0 || k + kBlockPad > n)
        raise(ErrorKind::BlockTooLarge, "block " + std::to_string(k) + " needs dimension >= " +
                                            std::to_string(k + kBlockPad));
}

void check_finite(const Matrix& m) {
    if (!m.allFinite()) raise(ErrorKind::NonFinite, "matrix has non-finite entries");
}

// Columns psi * phi^j, each obtained from the previous one by the recurrence
// d y_n + c y_{n-1} = b x_n + a x_{n-1}.
Matrix wco_columns(const RationalSymbol& psi, const MobiusMap& m, std::size_t n) {
    const auto first = expand_rational(psi, n);
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, 0) = first[i];
    const Complex a = m.a() / m.d(), b = m.b() / m.d(), c = m.c() / m.d();
    for (std::size_t j = 1; j < n; ++j) {
        Complex prev_x{}, prev_y{};
        for (std::size_t i = 0; i < n; ++i) {
            const Complex x = out(i, j - 1);
            const Complex y = b * x + a * prev_x - c * prev_y;
            out(i, j) = y;
            prev_x = x;
            prev_y = y;
        }
    }
    return out;
}

Matrix build_unchecked(const RationalSymbol& psi, const Symbol& phi, std::size_t n) {
    check_dim(n);
    if (const auto* k = std::get_if<ConstantMap>(&phi)) {
        const auto first = expand_rational(psi, n);
        Matrix out(n, n);
        Complex p = 1.0;
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t i = 0; i < n; ++i) out(i, j) = first[i] * p;
            p *= k->value;
        }
        return out;
    }
    const auto& m = std::get<MobiusMap>(phi);
    if (std::abs(m.d()) < tol::denominator) raise(ErrorKind::SymbolPole, "phi has a pole at the origin");
    return wco_columns(psi, m, n);
}

}  // namespace

TruncatedOperator::TruncatedOperator(Matrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) raise(ErrorKind::DimensionMismatch, "operator matrix must be square");
    check_finite(m_);
}

AntiLinearMatrix::AntiLinearMatrix(Matrix u) : u_(std::move(u)) {
    if (u_.rows() != u_.cols()) raise(ErrorKind::DimensionMismatch, "conjugation matrix must be square");
    check_finite(u_);
}

std::string_view to_string(ConjugationKind kind) {
    switch (kind) {
        case ConjugationKind::J: return "J";
        case ConjugationKind::C1: return "C1";
        case ConjugationKind::C2: return "C2";
    }
    return "Unknown";
}

RationalSymbol c2_weight(Complex lambda, Complex alpha) {
    return {lambda * std::sqrt(1.0 - std::norm(alpha)), 0.0, 1.0, -std::conj(alpha)};
}

MobiusMap c2_involution(Complex alpha) {
    const Complex rot = std::conj(alpha) / alpha;
    return MobiusMap(-rot, rot * alpha, -std::conj(alpha), 1.0);
}

TruncatedOperator build_wco(const RationalSymbol& psi, const Symbol& phi, std::size_t n) {
    if (!psi.bounded_on_disk())
        raise(ErrorKind::SymbolPole, "weight pole within 1 + 1e-9 of the origin");
    if (const auto* k = std::get_if<ConstantMap>(&phi)) {
        if (std::abs(k->value) >= 1.0) raise(ErrorKind::NotSelfMap, "constant outside the disk");
    } else if (!is_self_map(std::get<MobiusMap>(phi))) {
        raise(ErrorKind::NotSelfMap, "composition symbol is not a self-map of the disk");
    }
    return TruncatedOperator(build_unchecked(psi, phi, n));
}

TruncatedOperator adjoint(const TruncatedOperator& t) { return TruncatedOperator(t.matrix().adjoint()); }

AntiLinearMatrix conjugation_matrix(const Conjugation& c, std::size_t n) {
    check_dim(n);
    if (std::abs(std::abs(c.lambda) - 1.0) > tol::boundary)
        raise(ErrorKind::BadParameterDomain, "|lambda| must be 1");
    switch (c.kind) {
        case ConjugationKind::J:
            return AntiLinearMatrix(Matrix::Identity(n, n));
        case ConjugationKind::C1: {
            if (std::abs(std::abs(c.alpha) - 1.0) > tol::boundary)
                raise(ErrorKind::BadParameterDomain, "C1 needs |alpha| = 1");
            Matrix u = Matrix::Zero(n, n);
            Complex p = c.lambda;
            for (std::size_t i = 0; i < n; ++i) {
                u(i, i) = p;
                p *= c.alpha;
            }
            return AntiLinearMatrix(std::move(u));
        }
        case ConjugationKind::C2: {
            const double r = std::abs(c.alpha);
            if (!(r > 0.0 && r < 1.0)) raise(ErrorKind::BadParameterDomain, "C2 needs 0 < |alpha| < 1");
            return AntiLinearMatrix(
                build_wco(c2_weight(c.lambda, c.alpha), c2_involution(c.alpha), n).matrix());
        }
    }
    raise(ErrorKind::BadParameterDomain, "unknown conjugation kind");
}

InvolutionResidual involution_residual(const AntiLinearMatrix& a, std::size_t k) {
    check_block(a.dim(), k);
    const Matrix& u = a.matrix();
    const auto kk = static_cast<Eigen::Index>(k);
    const Matrix eye = Matrix::Identity(kk, kk);
    const Matrix square = u.topRows(kk) * u.leftCols(kk).conjugate();
    const Matrix gram = u.leftCols(kk).adjoint() * u.leftCols(kk);
    return {(square - eye).norm(), (gram - eye).norm()};
}

double symmetry_residual(const TruncatedOperator& t, const AntiLinearMatrix& a, std::size_t k) {
    if (t.dim() != a.dim()) raise(ErrorKind::DimensionMismatch, "operator and conjugation dimensions differ");
    check_block(t.dim(), k);
    const auto kk = static_cast<Eigen::Index>(k);
    const Matrix& m = t.matrix();
    const Matrix& u = a.matrix();
    const Matrix reflected = (u.topRows(kk) * m.transpose()) * u.leftCols(kk).conjugate();
    return (m.topLeftCorner(kk, kk) - reflected).norm();
}

double normality_residual(const TruncatedOperator& t, std::size_t k) {
    check_block(t.dim(), k);
    const auto kk = static_cast<Eigen::Index>(k);
    const Matrix& m = t.matrix();
    const Matrix left = m.leftCols(kk).adjoint() * m.leftCols(kk);
    const Matrix right = m.topRows(kk) * m.topRows(kk).adjoint();
    return (left - right).norm();
}

double adjoint_factorization_residual(const MobiusMap& m, std::size_t n, std::size_t k, SigmaSign sign) {
    check_block(n, k);
    const auto triple = cowen_adjoint(m, sign);
    const auto one = RationalSymbol::constant(1.0);
    const Matrix c_phi = build_wco(one, m, n).matrix();
    const Matrix m_g = build_wco(triple.g, MobiusMap::identity(), n).matrix();
    const Matrix m_h = build_wco(triple.h, MobiusMap::identity(), n).matrix();
    // The rejected sign need not give a self-map, so its block is built unchecked.
    const Matrix c_sigma = sign == SigmaSign::Minus ? build_wco(one, triple.sigma, n).matrix()
                                                    : build_unchecked(one, triple.sigma, n);
    const auto kk = static_cast<Eigen::Index>(k);
    const Matrix rhs = m_g.topRows(kk) * c_sigma * m_h.topRows(kk).adjoint();
    return (c_phi.topLeftCorner(kk, kk).adjoint() - rhs).norm();
}

double truncation_edge(const Matrix& m, std::size_t k, std::size_t width) {
    const auto n = m.rows();
    const auto kk = std::min<Eigen::Index>(static_cast<Eigen::Index>(k), n);
    const auto w = std::min<Eigen::Index>(static_cast<Eigen::Index>(width), n);
    const double rows = m.block(n - w, 0, w, kk).norm();
    const double cols = m.block(0, n - w, kk, w).norm();
    return std::max(rows, cols);
}

}  // namespace wco
