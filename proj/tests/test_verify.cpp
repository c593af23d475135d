#include <algorithm>
#include <set>

#include "doctest.h"
#include "wco/families.hpp"
#include "wco/operators.hpp"
#include "wco/verify.hpp"

using namespace wco;

namespace {

SuiteConfig small(std::size_t samples = 12) {
    SuiteConfig cfg;
    cfg.samples = samples;
    cfg.seed = 7;
    return cfg;
}

double real_field(const Record& r, std::string_view name) {
    const Value* v = r.find(name);
    REQUIRE(v != nullptr);
    return std::get<double>(*v);
}

bool bool_field(const Record& r, std::string_view name) {
    const Value* v = r.find(name);
    REQUIRE(v != nullptr);
    return std::get<bool>(*v);
}

std::string string_field(const Record& r, std::string_view name) {
    const Value* v = r.find(name);
    REQUIRE(v != nullptr);
    return std::get<std::string>(*v);
}

bool same_records(const VerificationReport& x, const VerificationReport& y) {
    if (x.records.size() != y.records.size()) return false;
    for (std::size_t i = 0; i < x.records.size(); ++i) {
        const Record &a = x.records[i], &b = y.records[i];
        if (a.verdict != b.verdict || a.note != b.note) return false;
        const std::vector<Field>* ga[] = {&a.params, &a.residuals, &a.predicates, &a.oracle};
        const std::vector<Field>* gb[] = {&b.params, &b.residuals, &b.predicates, &b.oracle};
        for (int g = 0; g < 4; ++g) {
            if (ga[g]->size() != gb[g]->size()) return false;
            for (std::size_t k = 0; k < ga[g]->size(); ++k)
                if ((*ga[g])[k].name != (*gb[g])[k].name || (*ga[g])[k].value != (*gb[g])[k].value) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("registry covers every required anchor") {
    CHECK(missing_anchors().empty());
    std::set<std::string> ids;
    for (const auto& s : suite_registry()) {
        CHECK_FALSE(s.anchors.empty());
        CHECK(ids.insert(s.id).second);
        for (const auto& a : s.anchors)
            CHECK(std::find(required_anchors().begin(), required_anchors().end(), a) != required_anchors().end());
    }
}

TEST_CASE("config validation") {
    SuiteConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.block = 40;
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg = {};
    cfg.max_dim = 32;
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg = {};
    cfg.pass_tol = 1e-2;
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg = {};
    cfg.dim = 2048;
    CHECK_THROWS_AS(cfg.validate(), Error);
}

TEST_CASE("unknown suite and sweep names") {
    try {
        run_suite("no-such-suite", small());
        FAIL("expected UnknownSuite");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownSuite);
    }
    CHECK_THROWS_AS(parse_sweep_family("c3-hyperbolic"), Error);
    for (auto f : {SweepFamily::JHyperbolic, SweepFamily::C1Hyperbolic, SweepFamily::C2Hyperbolic,
                   SweepFamily::HyperbolicNonAut})
        CHECK(parse_sweep_family(to_string(f)) == f);
}

TEST_CASE("exit codes") {
    VerificationReport r;
    CHECK(r.exit_code() == 0);
    r.summary.inconclusive = 3;
    CHECK(r.exit_code() == 0);
    r.summary.discrepancy = 1;
    CHECK(r.exit_code() == 1);
    r.known_discrepancies = true;
    CHECK(r.exit_code() == 3);
    r.summary.fail = 1;
    CHECK(r.exit_code() == 1);
}

TEST_CASE("every suite runs without failing records") {
    for (const auto& s : suite_registry()) {
        if (s.id.rfind("sweep-c2", 0) == 0) continue;  // covered below, slower
        CAPTURE(s.id);
        const auto r = run_suite(s.id, small(8));
        CHECK(r.suite_id == s.id);
        CHECK(r.summary.fail == 0);
        CHECK(r.summary.total() == r.records.size());
        for (std::size_t i = 0; i < r.records.size(); ++i) CHECK(r.records[i].index == i);
        if (!s.known_discrepancies) CHECK(r.summary.discrepancy == 0);
        CHECK(r.exit_code() == (r.summary.discrepancy > 0 ? 3 : 0));
    }
}

TEST_CASE("results do not depend on the thread count") {
    auto one = small(10), many = small(10);
    one.threads = 1;
    many.threads = 4;
    for (const char* id : {"lft-normality", "c1-normality", "j-parabolic"}) {
        CAPTURE(id);
        CHECK(same_records(run_suite(id, one), run_suite(id, many)));
    }
}

TEST_CASE("seeds select different draws") {
    auto a = small(5), b = small(5);
    b.seed = 8;
    CHECK(same_records(run_suite("j-symmetric", a), run_suite("j-symmetric", a)));
    CHECK_FALSE(same_records(run_suite("j-symmetric", a), run_suite("j-symmetric", b)));
}

TEST_CASE("identity-case parameters give the documented discrepancy") {
    const auto r = run_suite("c2-normality", small(4));
    const Record& id = r.records[0];
    CHECK(string_field(id, "kind") == "identity-case");
    CHECK(string_field(id, "case") == "NotNormal");
    CHECK(real_field(id, "normality") <= 1e-12);
    CHECK(id.verdict == Verdict::Discrepancy);
    CHECK(r.known_discrepancies);
    CHECK(r.exit_code() == 3);
}

TEST_CASE("worked C2 instances satisfy the criterion but are not self-maps") {
    const auto r = run_suite("c2-normality", small(4));
    for (std::size_t i : {1u, 2u}) {
        const Record& rec = r.records[i];
        CHECK(string_field(rec, "symbol") == "not-self-map");
        CHECK(bool_field(rec, "normal"));
        CHECK(rec.verdict == Verdict::Discrepancy);
    }
    CHECK(string_field(r.records[1], "case") == "CaseI");
    CHECK(string_field(r.records[2], "case") == "CaseII");
    // The second instance collapses to the constant -1.
    CHECK(std::abs(real_field(r.records[2], "phi0_modulus") - 1.0) <= 1e-12);
}

TEST_CASE("equal-moduli C2 parameters are never automorphisms") {
    const auto r = run_suite("c2-aut-exclusion", small(40));
    CHECK(r.summary.pass == 40);
    for (const auto& rec : r.records) {
        CHECK(real_field(rec, "moduli_spread") <= 1e-9);
        CHECK_FALSE(bool_field(rec, "automorphism"));
    }
}

TEST_CASE("cowen factorization: the plus sign fails somewhere") {
    const auto r = run_suite("cowen-factorization", small(20));
    CHECK(r.summary.pass == 20);
    bool any = false;
    for (const auto& rec : r.records) any = any || bool_field(rec, "plus_sign_fails");
    CHECK(any);
}

TEST_CASE("printed J gamma agrees exactly on the real-gamma samples") {
    const auto r = run_suite("j-aut-form", small(16));
    for (const auto& rec : r.records) {
        const bool real = std::get<Complex>(*rec.find("gamma")).imag() == 0.0;
        CHECK((rec.verdict == Verdict::Pass) == real);
    }
}

TEST_CASE("hyperbolic sweeps") {
    SuiteConfig cfg = small();
    const auto j = nonexistence_sweep(SweepFamily::JHyperbolic, cfg);
    CHECK(j.summary.pass == j.records.size());
    const auto n = nonexistence_sweep(SweepFamily::HyperbolicNonAut, cfg);
    CHECK(n.summary.pass == n.records.size());
    for (const auto& rec : n.records) CHECK(string_field(rec, "class") == "HyperbolicNonAutomorphism");

    // (3z + 1)/(z + 3) is C1-symmetric with alpha = -1.
    const auto c1 = nonexistence_sweep(SweepFamily::C1Hyperbolic, cfg);
    bool witnessed = false;
    for (const auto& rec : c1.records) {
        if (real_field(rec, "r") == 2.0 && std::get<Complex>(*rec.find("t")) == Complex(0.0)) {
            CHECK(rec.verdict == Verdict::Discrepancy);
            CHECK(std::abs(std::get<Complex>(*rec.find("best_alpha")) + 1.0) <= 1e-6);
            witnessed = true;
        }
    }
    CHECK(witnessed);
    CHECK(c1.exit_code() == 3);
}

TEST_CASE("C2 sweep finds witnesses only among automorphisms") {
    const auto r = nonexistence_sweep(SweepFamily::C2Hyperbolic, small());
    for (const auto& rec : r.records) {
        CAPTURE(rec.index);
        if (string_field(rec, "origin") == "automorphism") {
            CHECK(rec.verdict == Verdict::Discrepancy);
        } else {
            CHECK(rec.verdict == Verdict::Pass);
        }
    }
}

TEST_CASE("witness from the C2 sweep checks out independently") {
    // t = 0, r = 2: phi = (3z + 1)/(z + 3) with psi = K_sigma(0) is C2-symmetric for real alpha.
    const MobiusMap phi = hyperbolic_aut_map({2.0, 0.0});
    const Complex s0 = evaluate(cowen_adjoint(phi).sigma, 0.0);
    const auto t = build_wco({1.0, 0.0, 1.0, -std::conj(s0)}, phi, 128);
    CHECK(symmetry_residual(t, conjugation_matrix(Conjugation::c2(1.0, 0.375), 128), 12) <= 1e-10);
    CHECK(normality_residual(t, 12) <= 1e-10);
}

TEST_CASE("off-circle parabolic J records are normal and symmetric") {
    const auto r = run_suite("j-parabolic", small(12));
    for (const auto& rec : r.records) {
        if (bool_field(rec, "on_branch_circle")) {
            CHECK(rec.verdict == Verdict::Pass);
        } else {
            CHECK(rec.verdict == Verdict::Discrepancy);
            CHECK_FALSE(bool_field(rec, "branch_condition"));
            CHECK(real_field(rec, "normality") <= 1e-7);
        }
    }
}

TEST_CASE("C2 parabolic round trip") {
    const auto r = run_suite("c2-parabolic", small(20));
    for (const auto& rec : r.records) CHECK(bool_field(rec, "round_trip"));
}
