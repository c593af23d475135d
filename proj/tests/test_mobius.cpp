#include "doctest.h"
#include "test_support.hpp"
#include "wco/mobius.hpp"

using namespace wco;
using wco::testing::Rng;

namespace {

const Complex I(0.0, 1.0);

bool same(Complex x, Complex y, double eps = 1e-12) { return std::abs(x - y) <= eps; }

}  // namespace

TEST_CASE("evaluate") {
    CHECK(same(evaluate(MobiusMap::identity(), {0.3, 0.1}), {0.3, 0.1}));
    CHECK(same(evaluate(MobiusMap(0.5, 0, 0, 1), 1.0), 0.5));
    CHECK(same(evaluate(MobiusMap(3, 1, 1, 3), 1.0), 1.0));
    CHECK_THROWS_AS(evaluate(MobiusMap(3, 1, 1, 3), -3.0), Error);
}

TEST_CASE("construction rejects constant maps and normalizes") {
    CHECK_THROWS_AS(MobiusMap(1, 2, 2, 4), Error);
    const MobiusMap m(2, 4, 6, 8);
    CHECK(same(m.d(), 1.0));
    CHECK(same(m.a(), 0.25));
    // ties go to the earliest coefficient
    const MobiusMap t(-2, 2, 0, 1);
    CHECK(same(t.a(), 1.0));
}

TEST_CASE("compose") {
    const MobiusMap minus_z(-1, 0, 0, 1);
    const auto half = std::get<MobiusMap>(scale(0.5, minus_z));
    CHECK(compose(minus_z, half).approx_equal(MobiusMap(0.5, 0, 0, 1)));

    const double p = 0.5;
    const MobiusMap phi_p(-1, p, -p, 1);
    const auto inner = std::get<MobiusMap>(scale(-1.0, phi_p));
    CHECK(compose(phi_p, inner).approx_equal(MobiusMap(-1, 0.8, -0.8, 1)));

    const MobiusMap m(Complex(0.2, 0.1), 0.3, Complex(0, -0.4), 1.5);
    CHECK(compose(MobiusMap::identity(), m).approx_equal(m));
    CHECK(compose(m, MobiusMap::identity()).approx_equal(m));

    SUBCASE("constant operands") {
        const Symbol k = ConstantMap{0.25};
        CHECK(std::holds_alternative<ConstantMap>(compose(Symbol{m}, k)));
        CHECK(same(std::get<ConstantMap>(compose(Symbol{m}, k)).value, evaluate(m, 0.25)));
        CHECK(std::holds_alternative<ConstantMap>(scale(0.0, m)));
    }
}

TEST_CASE("compose agrees with pointwise composition and is associative") {
    Rng rng(101);
    for (int i = 0; i < 200; ++i) {
        const auto f = wco::testing::random_self_map(rng);
        const auto g = wco::testing::random_self_map(rng);
        const auto h = wco::testing::random_self_map(rng);
        const Complex z = rng.disk(0.9);
        CHECK(same(evaluate(compose(f, g), z), evaluate(f, evaluate(g, z)), 1e-11));
        CHECK(map_distance(compose(compose(f, g), h), compose(f, compose(g, h))) <= 1e-12);
    }
}

TEST_CASE("fixed points") {
    SUBCASE("linear") {
        const auto fps = fixed_points(MobiusMap(0.5, 0, 0, 1));
        REQUIRE(fps.size() == 2);
        CHECK(same(fps[0].value, 0.0));
        CHECK(fps[1].at_infinity);
    }
    SUBCASE("double root") {
        const Complex a0(0.5, 0.5);
        const auto fps = fixed_points(MobiusMap(1.0 - 2.0 * a0, a0, -a0, 1));
        REQUIRE(fps.size() == 1);
        CHECK(fps[0].multiplicity == 2);
        CHECK(same(fps[0].value, 1.0, 1e-9));
    }
    SUBCASE("two boundary points") {
        const auto fps = fixed_points(MobiusMap(3, 1, 1, 3));
        REQUIRE(fps.size() == 2);
        CHECK(same(fps[0].value * fps[1].value, -1.0));
        CHECK(same(std::abs(fps[0].value), 1.0));
    }
    SUBCASE("identity") { CHECK_THROWS_AS(fixed_points(MobiusMap::identity()), Error); }
    SUBCASE("random self-maps") {
        Rng rng(7);
        for (int i = 0; i < 300; ++i) {
            const auto m = wco::testing::random_self_map(rng);
            for (const auto& fp : fixed_points(m))
                if (!fp.at_infinity) CHECK(std::abs(evaluate(m, fp.value) - fp.value) <= 1e-10);
        }
    }
}

TEST_CASE("is_self_map") {
    CHECK(is_self_map(MobiusMap::identity()));
    CHECK_FALSE(is_self_map(MobiusMap(2, 0, 0, 1)));
    CHECK(is_self_map(MobiusMap(3, 1, 1, 3)));

    // Oracle: sup of |phi| over a dense boundary sample, for maps clearly on one side.
    Rng rng(3);
    int checked = 0;
    for (int i = 0; i < 2000 && checked < 200; ++i) {
        const MobiusMap m(rng.disk(1.5), rng.disk(1.5), rng.disk(0.8), 1.0);
        double sup = 0.0;
        for (int k = 0; k < 4096; ++k)
            sup = std::max(sup, std::abs(evaluate(m, std::polar(1.0, 2.0 * wco::testing::kPi * k / 4096))));
        if (std::abs(sup - 1.0) < 1e-2) continue;
        CHECK(is_self_map(m) == (sup < 1.0));
        ++checked;
    }
    CHECK(checked == 200);
}

TEST_CASE("classify") {
    SUBCASE("interior") {
        const auto c = classify(MobiusMap(0.5, 0, 0, 1));
        CHECK(c.cls == MapClass::InteriorFixedPoint);
        CHECK(same(c.dw_point, 0.0));
        CHECK(same(c.dw_derivative, 0.5));
        CHECK_FALSE(c.is_automorphism);
    }
    SUBCASE("hyperbolic automorphism") {
        const auto c = classify(MobiusMap(3, 1, 1, 3));
        CHECK(c.cls == MapClass::HyperbolicAutomorphism);
        CHECK(same(c.dw_point, 1.0));
        CHECK(same(c.dw_derivative, 0.5));
        CHECK(c.is_automorphism);
    }
    SUBCASE("parabolic non-automorphism") {
        const auto c = classify(MobiusMap(0, 0.5, -0.5, 1));
        CHECK(c.cls == MapClass::ParabolicNonAutomorphism);
        CHECK(same(c.dw_point, 1.0, 1e-9));
        CHECK(same(c.dw_derivative, 1.0, 1e-9));
        CHECK_FALSE(c.is_automorphism);
    }
    SUBCASE("identity, elliptic, constant") {
        CHECK(classify(MobiusMap::identity()).cls == MapClass::Identity);
        CHECK(classify(MobiusMap(-1, 0.8, -0.8, 1)).cls == MapClass::EllipticAutomorphism);
        CHECK(classify(ConstantMap{0.3}).cls == MapClass::Constant);
    }
    SUBCASE("not a self-map") { CHECK_THROWS_AS(classify(MobiusMap(2, 0, 0, 1)), Error); }
    SUBCASE("boundary derivative is real and in (0, 1]") {
        Rng rng(19);
        int boundary = 0;
        for (int i = 0; i < 400; ++i) {
            // Maps fixing 1: compose a random hyperbolic or parabolic normal form with a rotation.
            const double r = rng.uniform(1.0, 4.0);
            const Complex t(rng.uniform(0.0, 1.0), rng.uniform(-1.0, 1.0));
            const MobiusMap m(r + 1.0 - t, r + t - 1.0, r - t - 1.0, r + t + 1.0);
            if (!is_self_map(m)) continue;
            const auto c = classify(m);
            if (std::abs(std::abs(c.dw_point) - 1.0) > 1e-9) continue;
            ++boundary;
            CHECK(std::abs(c.dw_derivative.imag()) <= 1e-9);
            CHECK(c.dw_derivative.real() > 0.0);
            CHECK(c.dw_derivative.real() <= 1.0 + 1e-9);
        }
        CHECK(boundary > 50);
    }
}

TEST_CASE("automorphism criterion and normal form") {
    CHECK_FALSE(aut_normal_form(MobiusMap(0, 0.5, -0.5, 1)).has_value());
    CHECK(is_self_map(MobiusMap(0, 0.5, -0.5, 1)));

    const auto rot = aut_normal_form(MobiusMap(I, 0, 0, 1));
    REQUIRE(rot.has_value());
    CHECK(same(rot->gamma, 0.0));
    CHECK(same(rot->beta, -I));

    const auto f = aut_normal_form(MobiusMap(-1, 0.8, -0.8, 1));
    REQUIRE(f.has_value());
    CHECK(same(f->beta, 1.0));
    CHECK(same(f->gamma, 0.8));

    // 1/z satisfies the circle identities but swaps inside and outside.
    CHECK_FALSE(is_automorphism(MobiusMap(0, 1, 1, 0)));

    Rng rng(23);
    for (int i = 0; i < 300; ++i) {
        const auto m = wco::testing::random_automorphism(rng);
        const auto nf = aut_normal_form(m);
        REQUIRE(nf.has_value());
        CHECK(map_distance(from_aut_normal_form(*nf), m) <= 1e-12);
        CHECK_FALSE(aut_normal_form(wco::testing::random_self_map(rng)).has_value());
    }
}

TEST_CASE("cowen adjoint symbols") {
    SUBCASE("identity") {
        const auto t = cowen_adjoint(MobiusMap::identity());
        CHECK(t.sigma.is_identity());
        CHECK(same(t.g(0.3), 1.0));
        CHECK(same(t.h(0.3), 1.0));
    }
    SUBCASE("C1 family form") {
        const Complex alpha = std::polar(1.0, 0.7), c0(0.3, -0.2), c1(-0.1, 0.4);
        const MobiusMap m(c1 - alpha * c0 * c0, c0, -alpha * c0, 1);
        const MobiusMap expected(std::conj(c1 - alpha * c0 * c0), std::conj(alpha * c0), -std::conj(c0), 1);
        CHECK(cowen_adjoint(m).sigma.approx_equal(expected));
    }
    SUBCASE("hyperbolic automorphism") {
        CHECK(cowen_adjoint(MobiusMap(3, 1, 1, 3)).sigma.approx_equal(MobiusMap(3, -1, -1, 3)));
    }
    SUBCASE("the plus sign gives a different map whenever c != 0") {
        const MobiusMap m(0.5, 0.1, 0.2, 1);
        CHECK_FALSE(cowen_adjoint(m, SigmaSign::Plus).sigma.approx_equal(cowen_adjoint(m).sigma));
    }
}

TEST_CASE("linear-fractional normality check") {
    CHECK(normality_lft_check(MobiusMap(0.5, 0, 0, 1)));
    CHECK(normality_lft_check(MobiusMap(3, 1, 1, 3)));
    const Complex a0 = 0.5 * I, a1 = 0.5;
    CHECK_FALSE(normality_lft_check(MobiusMap(a1 - a0 * a0, a0, -a0, 1)));
    const Complex b1 = 0.75;
    CHECK(normality_lft_check(MobiusMap(b1 - a0 * a0, a0, -a0, 1)));

    // Every automorphism commutes with its sigma, which is its inverse.
    Rng rng(29);
    for (int i = 0; i < 100; ++i) {
        const auto m = wco::testing::random_automorphism(rng);
        CHECK(compose(m, cowen_adjoint(m).sigma).approx_equal(MobiusMap::identity(), 1e-11));
        CHECK(normality_lft_check(m, 1e-9));
    }
}
