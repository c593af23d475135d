#include "wco/rational.hpp"

#include <limits>

namespace wco {

Complex RationalSymbol::operator()(Complex z) const {
    const Complex den = d0 + d1 * z;
    if (std::abs(den) < tol::denominator) raise(ErrorKind::PoleAtInput, "rational symbol pole");
    return (n0 + n1 * z) / den;
}

double RationalSymbol::pole_modulus() const {
    if (d1 == Complex{}) return std::numeric_limits<double>::infinity();
    return std::abs(d0 / d1);
}

}  // namespace wco
