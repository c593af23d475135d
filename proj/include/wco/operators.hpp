#pragma once

#include <cstddef>

#include <Eigen/Dense>

#include "wco/mobius.hpp"
#include "wco/rational.hpp"

namespace wco {

using Matrix = Eigen::MatrixXcd;

/// Residual blocks must leave this many trailing rows/columns untouched.
inline constexpr std::size_t kBlockPad = 32;

/// Matrix of an operator on span{1, z, ..., z^{N-1}}; column j is the image of z^j.
class TruncatedOperator {
public:
    explicit TruncatedOperator(Matrix m);
    std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
    const Matrix& matrix() const { return m_; }

private:
    Matrix m_;
};

/// Anti-linear map x -> U conj(x).
class AntiLinearMatrix {
public:
    explicit AntiLinearMatrix(Matrix u);
    std::size_t dim() const { return static_cast<std::size_t>(u_.rows()); }
    const Matrix& matrix() const { return u_; }
    Eigen::VectorXcd apply(const Eigen::VectorXcd& x) const { return u_ * x.conjugate(); }

private:
    Matrix u_;
};

enum class ConjugationKind { J, C1, C2 };

std::string_view to_string(ConjugationKind kind);

/// J: coefficient conjugation. C1: u = lambda, v = alpha z with |alpha| = 1.
/// C2: u = lambda k_alpha, v = (conj(alpha)/alpha)(alpha - z)/(1 - conj(alpha) z), 0 < |alpha| < 1.
struct Conjugation {
    ConjugationKind kind = ConjugationKind::J;
    Complex lambda{1.0};
    Complex alpha{1.0};

    static Conjugation j() { return {}; }
    static Conjugation c1(Complex lambda, Complex alpha) { return {ConjugationKind::C1, lambda, alpha}; }
    static Conjugation c2(Complex lambda, Complex alpha) { return {ConjugationKind::C2, lambda, alpha}; }
};

/// Weight u and composition v of the C2 conjugation.
RationalSymbol c2_weight(Complex lambda, Complex alpha);
MobiusMap c2_involution(Complex alpha);

TruncatedOperator build_wco(const RationalSymbol& psi, const Symbol& phi, std::size_t n);
TruncatedOperator adjoint(const TruncatedOperator& t);
AntiLinearMatrix conjugation_matrix(const Conjugation& c, std::size_t n);

struct InvolutionResidual {
    double involution;  // || U conj(U) - I ||
    double isometry;    // || U^H U - I ||
};

InvolutionResidual involution_residual(const AntiLinearMatrix& a, std::size_t k);
double symmetry_residual(const TruncatedOperator& t, const AntiLinearMatrix& a, std::size_t k);
double normality_residual(const TruncatedOperator& t, std::size_t k);
double adjoint_factorization_residual(const MobiusMap& m, std::size_t n, std::size_t k,
                                      SigmaSign sign = SigmaSign::Minus);

/// Frobenius mass of the last `width` rows of the leading k columns and of the
/// last `width` columns of the leading k rows. Block residuals built from
/// products are trustworthy only when this is small.
double truncation_edge(const Matrix& m, std::size_t k, std::size_t width = 8);

}  // namespace wco
