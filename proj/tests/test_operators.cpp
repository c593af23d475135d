#include "doctest.h"
#include "test_support.hpp"
#include "wco/families.hpp"
#include "wco/operators.hpp"
#include "wco/series.hpp"

using namespace wco;
using wco::testing::Rng;

namespace {

const Complex I(0.0, 1.0);

}  // namespace

TEST_CASE("build_wco basic shapes") {
    const auto one = RationalSymbol::constant(1.0);
    CHECK(build_wco(one, MobiusMap::identity(), 8).matrix().isApprox(Matrix::Identity(8, 8), 0.0));

    const Complex gamma(0.3, -0.7), delta(0.4, 0.5);
    const auto diag = build_wco(RationalSymbol::constant(gamma), MobiusMap(delta, 0, 0, 1), 10).matrix();
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j)
            CHECK(std::abs(diag(i, j) - (i == j ? gamma * std::pow(delta, j) : 0.0)) <= 1e-15);

    const auto toeplitz = build_wco({1, 0, 1, -0.5}, MobiusMap::identity(), 8).matrix();
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            CHECK(std::abs(toeplitz(i, j) - (i >= j ? std::pow(0.5, i - j) : 0.0)) <= 1e-15);
}

TEST_CASE("build_wco columns match the Cauchy-product construction and pointwise values") {
    Rng rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        const auto phi = wco::testing::random_self_map(rng);
        const RationalSymbol psi{rng.disk(1), rng.disk(1), 1.0, rng.disk(0.6)};
        const std::size_t n = 48;
        const auto m = build_wco(psi, phi, n).matrix();
        PowerSeries col = expand_rational(psi, n);
        const PowerSeries phis = mobius_series(phi, n);
        const Complex z = 0.2;
        for (std::size_t j = 0; j < 12; ++j) {
            Complex at_z{};
            for (std::size_t i = n; i-- > 0;) {
                CHECK(std::abs(m(i, j) - col[i]) <= 1e-12 * (1.0 + std::abs(col[i])));
                at_z = at_z * z + m(i, j);
            }
            CHECK(std::abs(at_z - psi(z) * std::pow(evaluate(phi, z), double(j))) <= 1e-10);
            col = series_mul(col, phis);
        }
    }
}

TEST_CASE("build_wco with a constant symbol") {
    const auto m = build_wco({0.75, 0, 1, -0.5}, ConstantMap{0.5}, 6).matrix();
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) CHECK(std::abs(m(i, j) - 0.75 * std::pow(0.5, i) * std::pow(0.5, j)) <= 1e-15);
    CHECK(m.fullPivLu().rank() == 1);
}

TEST_CASE("build_wco guards") {
    CHECK_THROWS_AS(build_wco({1, 0, 1, -1}, MobiusMap::identity(), 8), Error);
    CHECK_THROWS_AS(build_wco({1, 0, 1, -(1.0 - 1e-10)}, MobiusMap::identity(), 8), Error);
    CHECK_THROWS_AS(build_wco(RationalSymbol::constant(1), MobiusMap(2, 0, 0, 1), 8), Error);
    CHECK_THROWS_AS(build_wco(RationalSymbol::constant(1), ConstantMap{1.5}, 8), Error);
}

TEST_CASE("adjoint") {
    const auto id = build_wco(RationalSymbol::constant(1), MobiusMap::identity(), 5);
    CHECK(adjoint(id).matrix() == id.matrix());
    const auto t = build_wco({Complex(0.2, 1), 0.3, 1, 0.4}, MobiusMap(Complex(0.3, 0.2), 0.1, 0.2, 1), 12);
    CHECK(adjoint(adjoint(t)).matrix() == t.matrix());
    CHECK(adjoint(t).matrix() == t.matrix().adjoint());
}

TEST_CASE("conjugation matrices") {
    CHECK(conjugation_matrix(Conjugation::j(), 6).matrix() == Matrix::Identity(6, 6));
    const auto c1 = conjugation_matrix(Conjugation::c1(1.0, I), 4).matrix();
    const Complex expected[4] = {1.0, I, -1.0, -I};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(std::abs(c1(i, j) - (i == j ? expected[i] : 0.0)) <= 1e-15);
    CHECK_THROWS_AS(conjugation_matrix(Conjugation::c1(1.0, 0.5), 4), Error);
    CHECK_THROWS_AS(conjugation_matrix(Conjugation::c2(1.0, 1.0), 4), Error);
    CHECK_THROWS_AS(conjugation_matrix(Conjugation::c2(2.0, 0.5), 4), Error);
}

TEST_CASE("involution residuals") {
    const auto j = involution_residual(conjugation_matrix(Conjugation::j(), 48), 16);
    CHECK(j.involution == 0.0);
    CHECK(j.isometry == 0.0);

    const auto c1 = involution_residual(conjugation_matrix(Conjugation::c1(1.0, I), 48), 16);
    CHECK(c1.involution <= 1e-14);
    CHECK(c1.isometry <= 1e-14);

    SUBCASE("C2 needs a dimension that resolves the kernel columns") {
        const auto coarse = conjugation_matrix(Conjugation::c2(1.0, 0.5), 48);
        const auto r48 = involution_residual(coarse, 16);
        CHECK(r48.involution > 1e-8);
        CHECK(truncation_edge(coarse.matrix(), 16) > 1e-8);

        const auto fine = conjugation_matrix(Conjugation::c2(1.0, 0.5), 128);
        const auto r128 = involution_residual(fine, 16);
        CHECK(r128.involution <= 1e-12);
        CHECK(r128.isometry <= 1e-12);
        CHECK(truncation_edge(fine.matrix(), 16) <= 1e-8);

        const auto small = involution_residual(conjugation_matrix(Conjugation::c2(1.0, 0.3), 48), 16);
        CHECK(small.involution <= 1e-8);
        CHECK(small.isometry <= 1e-8);
    }
    CHECK_THROWS_AS(involution_residual(conjugation_matrix(Conjugation::j(), 40), 16), Error);
}

TEST_CASE("anti-linear isometry on basis vectors") {
    const std::size_t n = 160, k = 12;
    Rng rng(43);
    for (int trial = 0; trial < 10; ++trial) {
        const Conjugation cs[3] = {Conjugation::j(), Conjugation::c1(rng.circle(), rng.circle()),
                                   Conjugation::c2(rng.circle(), rng.disk(0.6))};
        for (const auto& c : cs) {
            const auto a = conjugation_matrix(c, n);
            const double eps = c.kind == ConjugationKind::C2 ? 1e-8 : 1e-14;
            for (std::size_t x = 0; x < k; ++x)
                for (std::size_t y = 0; y < k; ++y) {
                    const Eigen::VectorXcd ex = Eigen::VectorXcd::Unit(n, x);
                    const Eigen::VectorXcd ey = Eigen::VectorXcd::Unit(n, y);
                    const Complex lhs = a.apply(ey).dot(a.apply(ex));  // <Ax, Ay>
                    CHECK(std::abs(lhs - (x == y ? 1.0 : 0.0)) <= eps);
                }
        }
    }
}

TEST_CASE("symmetry residual") {
    const auto jc = conjugation_matrix(Conjugation::j(), 64);
    const auto diag = build_wco(RationalSymbol::constant(1), MobiusMap(0.2, 0, 0, 1), 64);
    CHECK(symmetry_residual(diag, jc, 16) == 0.0);

    const auto fam = j_symbols({0.3, 0.2, 1.0});
    CHECK(symmetry_residual(build_wco(fam.psi, fam.phi, 64), jc, 16) <= 1e-9);

    const auto off = build_wco(RationalSymbol::linear(1.0, 0.3), MobiusMap(0.2, 0, 0, 1), 64);
    CHECK(symmetry_residual(off, jc, 16) >= 1e-2);

    CHECK_THROWS_AS(symmetry_residual(diag, conjugation_matrix(Conjugation::j(), 48), 12), Error);
}

TEST_CASE("reflecting twice restores the block") {
    Rng rng(47);
    const std::size_t n = 192, k = 12;
    const auto kk = static_cast<Eigen::Index>(k);
    Matrix m = Matrix::Zero(n, n);
    for (int i = 0; i < 24; ++i)
        for (int j = 0; j < 24; ++j) m(i, j) = rng.disk(1.0);
    const Conjugation cs[3] = {Conjugation::j(), Conjugation::c1(rng.circle(), rng.circle()),
                               Conjugation::c2(rng.circle(), rng.disk(0.5))};
    for (const auto& c : cs) {
        const Matrix u = conjugation_matrix(c, n).matrix();
        const Matrix once = u * m.transpose() * u.conjugate();
        const Matrix twice = u * once.transpose() * u.conjugate();
        const double eps = c.kind == ConjugationKind::C2 ? 1e-10 : 1e-12;
        CHECK((twice - m).topLeftCorner(kk, kk).norm() <= eps);
    }
}

TEST_CASE("normality residual") {
    const auto diag = build_wco(RationalSymbol::constant(2.0), MobiusMap(Complex(0.3, 0.4), 0, 0, 1), 48);
    CHECK(normality_residual(diag, 16) == 0.0);

    const auto fam = normal_interior_symbols({0.3, 0.5 * I, 1.0});
    CHECK(normality_residual(build_wco(fam.psi, fam.phi, 64), 12) <= 1e-7);

    SUBCASE("hyperbolic non-automorphisms with psi = K_sigma(0)") {
        for (const auto& phi : {MobiusMap(1, 1, 0, 2), hyperbolic_aut_map({2.0, 0.5})}) {
            const Complex s0 = evaluate(cowen_adjoint(phi).sigma, 0.0);
            const RationalSymbol psi{1.0, 0.0, 1.0, -std::conj(s0)};
            CHECK(normality_residual(build_wco(psi, phi, 128), 12) >= 1e-3);
        }
    }
    SUBCASE("damped map") {
        const MobiusMap base(2, 1, 1, 2);
        const MobiusMap damped(0.9 * base.a() + 0.1 * base.c(), 0.9 * base.b() + 0.1 * base.d(), base.c(),
                               base.d());
        REQUIRE(classify(damped).cls == MapClass::HyperbolicNonAutomorphism);
        const Complex s0 = evaluate(cowen_adjoint(damped).sigma, 0.0);
        const RationalSymbol psi{1.0, 0.0, 1.0, -std::conj(s0)};
        CHECK(normality_residual(build_wco(psi, damped, 128), 12) >= 1e-3);
    }
}

TEST_CASE("residuals do not grow with the dimension for in-family operators") {
    const auto jc = [](std::size_t n) { return conjugation_matrix(Conjugation::j(), n); };
    const auto fam = j_symbols({Complex(0.3, 0.1), Complex(-0.2, 0.25), 1.0});
    const auto interior = normal_interior_symbols({0.4, Complex(0.3, -0.6), 1.0});
    double prev_sym = 1e300, prev_norm = 1e300;
    for (std::size_t n : {64u, 128u, 256u}) {
        const double sym = symmetry_residual(build_wco(fam.psi, fam.phi, n), jc(n), 12);
        const double nrm = normality_residual(build_wco(interior.psi, interior.phi, n), 12);
        CHECK(sym <= prev_sym + 1e-14);
        CHECK(nrm <= prev_norm + 1e-14);
        if (n >= 128) {
            CHECK(sym <= 1e-8);
            CHECK(nrm <= 1e-8);
        }
        prev_sym = sym;
        prev_norm = nrm;
    }
}

TEST_CASE("adjoint factorization") {
    CHECK(adjoint_factorization_residual(MobiusMap::identity(), 48, 16) == 0.0);
    CHECK(adjoint_factorization_residual(MobiusMap(0.5, 0, 0, 1), 48, 16) <= 1e-12);
    CHECK(adjoint_factorization_residual(MobiusMap(0.5, 0.25, 0, 1), 64, 16) <= 1e-8);

    Rng rng(53);
    int plus_failures = 0;
    for (int i = 0; i < 50; ++i) {
        const auto m = wco::testing::random_self_map(rng);
        CHECK(adjoint_factorization_residual(m, 64, 16) <= 1e-8);
        if (adjoint_factorization_residual(m, 64, 16, SigmaSign::Plus) > 1e-3) ++plus_failures;
    }
    CHECK(plus_failures > 0);
}

TEST_CASE("truncation edge") {
    const auto fast = build_wco(RationalSymbol::constant(1), MobiusMap(0.3, 0.1, 0, 1), 64);
    CHECK(truncation_edge(fast.matrix(), 12) <= 1e-12);
    const auto slow = build_wco({1, 0, 1, -0.97}, MobiusMap::identity(), 64);
    CHECK(truncation_edge(slow.matrix(), 12) > 1e-3);
}
