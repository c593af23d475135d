#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wco {

using Complex = std::complex<double>;

enum class ErrorKind {
    PoleAtInput,
    DegenerateResult,
    IdentityMap,
    NotSelfMap,
    ConstantMap,
    PoleAtOrigin,
    OrderMismatch,
    NotContractive,
    OutsideDisk,
    SymbolPole,
    BadParameterDomain,
    BlockTooLarge,
    DimensionMismatch,
    DomainViolation,
    DegenerateSymbol,
    BranchConditionViolated,
    DiscriminantViolated,
    NonFinite,
    UnknownSuite,
    ParseError,
    IoError,
};

std::string_view to_string(ErrorKind kind);

/// Every library failure is reported through this type; `kind()` is stable.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& what);

namespace tol {
inline constexpr double denominator = 1e-14;
inline constexpr double self_map = 1e-10;
inline constexpr double boundary = 1e-9;
inline constexpr double parabolic = 1e-9;
inline constexpr double predicate = 1e-10;
inline constexpr double map_equal = 1e-12;
inline constexpr double coeff_atol = 1e-12;
inline constexpr double coeff_rtol = 1e-9;
inline constexpr double pole_guard = 1e-9;
}  // namespace tol

/// Mixed absolute/relative comparison |x - y| <= atol + rtol |y|.
inline bool close(Complex x, Complex y, double atol = tol::coeff_atol,
                  double rtol = tol::coeff_rtol) {
    return std::abs(x - y) <= atol + rtol * std::abs(y);
}

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace wco
