#include <algorithm>
#include <cmath>
#include <numbers>

#include "verify_internal.hpp"

namespace wco {
namespace detail {

C2Params balanced_c2(Rng& rng);
C2Params aut_c2(Complex alpha, Complex gamma, Complex c1);
MobiusMap parabolic(Complex zeta, Complex tau);

namespace {

constexpr double kPi = std::numbers::pi;

// --- hyperbolic sweeps -------------------------------------------------------

struct Target {
    MobiusMap phi;
    std::string origin;
    double r;
    Complex t;
};

std::vector<Target> sweep_targets(SweepFamily family, const SweepGrid& grid) {
    const bool want_aut = family != SweepFamily::HyperbolicNonAut;
    const bool want_nonaut = family == SweepFamily::HyperbolicNonAut || family == SweepFamily::C2Hyperbolic;
    std::vector<Target> out;
    for (double r : grid.r) {
        std::vector<Target> damped;
        for (Complex t : grid.t) {
            MobiusMap m = MobiusMap::identity();
            try {
                m = hyperbolic_aut_map({r, t});
            } catch (const Error&) {
                continue;
            }
            const MapClass cls = classify(m).cls;
            if (cls == MapClass::HyperbolicAutomorphism) {
                if (want_aut) out.push_back({m, "automorphism", r, t});
                if (want_nonaut && grid.damped) {
                    const MobiusMap d(0.9 * m.a() + 0.1 * m.c(), 0.9 * m.b() + 0.1 * m.d(), m.c(), m.d());
                    if (classify(d).cls == MapClass::HyperbolicNonAutomorphism) damped.push_back({d, "damped", r, t});
                }
            } else if (cls == MapClass::HyperbolicNonAutomorphism && want_nonaut) {
                out.push_back({m, "non-automorphism", r, t});
            }
        }
        out.insert(out.end(), damped.begin(), damped.end());
    }
    return out;
}

/// Minimum of f over the parameter, found on a grid and refined by compass search.
struct Minimum {
    double value;
    Complex alpha;
};

template <class F>
Minimum refine(F f, Minimum best, double step_r, double step_t, bool radial, double r_max) {
    for (int it = 0; it < 200 && step_t > 1e-9 && best.value > 1e-13; ++it) {
        bool moved = false;
        const double r = std::abs(best.alpha), th = std::arg(best.alpha);
        std::vector<Complex> cand = {std::polar(r, th + step_t), std::polar(r, th - step_t)};
        if (radial) {
            if (r + step_r < r_max) cand.push_back(std::polar(r + step_r, th));
            if (r - step_r > 1e-3) cand.push_back(std::polar(r - step_r, th));
        }
        for (Complex a : cand) {
            const double v = f(a);
            if (v < best.value) {
                best = {v, a};
                moved = true;
            }
        }
        if (!moved) {
            step_t /= 2.0;
            step_r /= 2.0;
        }
    }
    return best;
}

Record sweep_record(const Target& target, SweepFamily family, const SuiteConfig& cfg) {
    Record rec;
    add(rec.params, "origin", target.origin);
    add(rec.params, "r", target.r);
    add(rec.params, "t", target.t);
    add(rec.params, "phi_a", target.phi.a());
    add(rec.params, "phi_b", target.phi.b());
    add(rec.params, "phi_c", target.phi.c());
    add(rec.params, "phi_d", target.phi.d());
    add(rec.oracle, "class", std::string(to_string(classify(target.phi).cls)));

    const Complex s0 = evaluate(cowen_adjoint(target.phi).sigma, 0.0);
    const SymbolPair s{RationalSymbol{1.0, 0.0, 1.0, -std::conj(s0)}, target.phi};
    const auto normal = normality_oracle(s, cfg);
    add_resolved(rec, "normality", normal);
    const double lft = lft_normality_defect(target.phi).value();
    add(rec.predicates, "lft_defect", lft);
    double deficiency = std::max(normal.value, lft);
    bool resolved = normal.resolved;

    // Symmetry is measured at a fixed dimension that resolves |alpha| <= 0.6. The
    // minimisation is skipped when normality alone already rules the target out.
    const std::size_t n = std::max<std::size_t>(cfg.dim, 96);
    const std::size_t k = cfg.block;
    const auto t = build_wco(s.psi, s.phi, n);
    auto sym = [&](const Conjugation& c) { return symmetry_residual(t, conjugation_matrix(c, n), k); };
    switch (deficiency < cfg.fail_tol ? family : SweepFamily::HyperbolicNonAut) {
        case SweepFamily::JHyperbolic: {
            const double v = sym(Conjugation::j());
            add(rec.residuals, "symmetry", v);
            deficiency = std::max(deficiency, v);
            break;
        }
        case SweepFamily::C1Hyperbolic: {
            auto f = [&](Complex a) { return sym(Conjugation::c1(1.0, a / std::abs(a))); };
            Minimum best{f(1.0), 1.0};
            for (int j = 1; j < 72; ++j) {
                const Complex a = std::polar(1.0, 2.0 * kPi * j / 72.0);
                if (const double v = f(a); v < best.value) best = {v, a};
            }
            best = refine(f, best, 0.0, 2.0 * kPi / 72.0, false, 1.0);
            add(rec.residuals, "symmetry_min", best.value);
            add(rec.oracle, "best_alpha", best.alpha / std::abs(best.alpha));
            deficiency = std::max(deficiency, best.value);
            break;
        }
        case SweepFamily::C2Hyperbolic: {
            auto f = [&](Complex a) { return sym(Conjugation::c2(1.0, a)); };
            Minimum best{INFINITY, 0.0};
            for (int i = 1; i <= 8; ++i)
                for (int j = 0; j < 24; ++j) {
                    const Complex a = std::polar(0.075 * i, 2.0 * kPi * j / 24.0);
                    if (const double v = f(a); v < best.value) best = {v, a};
                }
            best = refine(f, best, 0.0375, 2.0 * kPi / 48.0, true, 0.6);
            add(rec.residuals, "symmetry_min", best.value);
            add(rec.oracle, "best_alpha", best.alpha);
            deficiency = std::max(deficiency, best.value);
            break;
        }
        case SweepFamily::HyperbolicNonAut: break;
    }
    add(rec.residuals, "deficiency", deficiency);
    add(rec.oracle, "symmetry_dim", static_cast<std::int64_t>(n));
    if (deficiency >= cfg.fail_tol) {
        rec.verdict = Verdict::Pass;
    } else if (deficiency <= cfg.pass_tol && resolved) {
        rec.verdict = Verdict::Discrepancy;
        rec.note = "symmetric normal operator found over a hyperbolic symbol";
    } else {
        rec.verdict = Verdict::Inconclusive;
    }
    return rec;
}

// --- predicate against oracle ------------------------------------------------

template <class Draw>
auto self_map_draw(Rng& rng, Draw draw) {
    for (;;) {
        try {
            auto c = draw(rng);
            if (!c.second.constant() && is_self_map(c.second.map())) return c;
        } catch (const Error&) {
        }
    }
}

void add_iff(Record& r, bool predicate, const Resolved& normal, const SuiteConfig& cfg) {
    add(r.predicates, "normal", predicate);
    add_resolved(r, "normality", normal);
    r.verdict = iff_verdict(predicate, normal, cfg);
}

Record j_consistency(std::size_t i, Rng& rng, const SuiteConfig& cfg) {
    Record r;
    JParams p;
    SymbolPair s;
    if (i < 2) {
        // Fixed instances on both sides of the criterion.
        p = i == 0 ? JParams{Complex(0.0, 0.5), 0.75, 1.0} : JParams{Complex(0.0, 0.5), 0.5, 1.0};
        s = j_symbols(p);
    } else {
        std::tie(p, s) = self_map_draw(rng, [&](Rng& g) {
            JParams q{g.disk(1.0), g.disk(1.0), 1.0};
            if (i % 2 == 0) {
                // Real-p interior members, which are normal.
                const double pr = g.uniform(-0.95, 0.95);
                const Complex d = g.disk(1.0);
                const Complex den = 1.0 - pr * pr * d;
                q = {pr * (1.0 - d) / den, d * std::pow(pr * pr - 1.0, 2) / (den * den), 1.0};
            }
            return std::pair{q, j_symbols(q)};
        });
    }
    add(r.params, "a0", p.a0);
    add(r.params, "a1", p.a1);
    add(r.predicates, "expression", j_normal_expression(p.a0, p.a1));
    add_iff(r, j_normal_predicate(p.a0, p.a1, cfg.pred_tol), normality_oracle(s, cfg), cfg);
    return r;
}

Record c1_consistency(std::size_t i, Rng& rng, const SuiteConfig& cfg) {
    Record r;
    C1Params p;
    SymbolPair s;
    if (i < 2) {
        const C1Params fixed[] = {{1.0, 0.3, 0.3, 1.0}, {Complex(0.0, 1.0), 0.3, 0.3, 1.0}};
        p = fixed[i];
        s = c1_symbols(p);
    } else {
        std::tie(p, s) = self_map_draw(rng, [&](Rng& g) {
            C1Params q{g.circle(), g.disk(1.0), g.disk(1.0), 1.0};
            if (i % 2 == 0) {
                // Normal interior members: alpha = conj(p)/p.
                const Complex pp = g.disk(0.95);
                const Complex d = g.disk(1.0);
                const Complex al = std::conj(pp) / pp;
                const Complex ap2 = al * pp * pp;
                const Complex c0 = pp * (1.0 - d) / (1.0 - ap2 * d);
                q = {al, c0, al * c0 * c0 + c0 * (ap2 - d) / (pp * (d - 1.0)), 1.0};
            }
            return std::pair{q, c1_symbols(q)};
        });
    }
    add(r.params, "alpha", p.alpha);
    add(r.params, "c0", p.c0);
    add(r.params, "c1", p.c1);
    add(r.predicates, "expression", c1_normal_expression(p.alpha, p.c0, p.c1));
    add_iff(r, c1_normal_predicate(p.alpha, p.c0, p.c1, cfg.pred_tol),
            normality_oracle(s, cfg), cfg);
    return r;
}

Record c2_consistency(std::size_t i, Rng& rng, const SuiteConfig& cfg) {
    Record r;
    C2Params p;
    std::string kind;
    if (i == 0) {
        p = C2Params::from_c0(0.5, std::sqrt(0.72), 0.36, 0.36);
        kind = "identity-case";
    } else if (i == 1) {
        p = C2Params::from_c0(0.5, 0.6, 0.36, 0.54);
        kind = "worked-case-i";
    } else if (i == 2) {
        p = C2Params::from_c0(0.5, 0.6, 0.36, 0.18);
        kind = "worked-case-ii";
    } else {
        switch (i % 4) {
            case 0:
                p = balanced_c2(rng);
                kind = "equal-moduli";
                break;
            case 2: {
                // Members known to be normal by construction.
                const Complex alpha = std::polar(rng.uniform(0.1, 0.6), rng.uniform(-kPi, kPi));
                switch ((i / 4) % 3) {
                    case 0:
                        p = aut_c2(alpha, rng.disk(0.9), std::polar(rng.uniform(0.1, 1.0), rng.uniform(-kPi, kPi)));
                        kind = "automorphism";
                        break;
                    case 1: {
                        double pr = 0.0;
                        while (std::abs(pr) < 0.05) pr = rng.uniform(-0.9, 0.9);
                        Complex d = rng.disk(1.0);
                        while (std::abs(1.0 - d) < 0.05) d = rng.disk(1.0);
                        const Complex a = 1.0 / Complex((1.0 + pr * pr) / (2.0 * pr), rng.uniform(-3.0, 3.0));
                        p = c2_from_interior(a, pr, d).params;
                        kind = "interior";
                        break;
                    }
                    default:
                        for (;;) {
                            const Complex z = c2_parabolic_admissible_point(alpha, rng.coin() ? 1 : -1);
                            p = c2_parabolic_params(alpha, z, rng.disk(1.5), rng.disk(1.0));
                            const auto m = c2_map(p);
                            if (m && is_self_map(*m) && !m->is_identity()) break;
                        }
                        kind = "parabolic";
                        break;
                }
                break;
            }
            default:
                for (;;) {
                    p = C2Params::from_c0(std::polar(rng.uniform(0.1, 0.6), rng.uniform(-kPi, kPi)), rng.disk(1.0),
                                          rng.disk(1.0), rng.disk(1.0));
                    const auto m = c2_map(p);
                    if (m && is_self_map(*m)) break;
                }
                kind = "random-member";
                break;
        }
    }
    add(r.params, "kind", kind);
    add(r.params, "alpha", p.alpha);
    add(r.params, "c0sq", p.c0sq);
    add(r.params, "c1", p.c1);
    add(r.params, "c2", p.c2);
    const auto terms = c2_normality_terms(p);
    add(r.predicates, "A", terms.A);
    add(r.predicates, "B", terms.B);
    add(r.predicates, "C", terms.C);
    add(r.predicates, "D", terms.D);
    add(r.predicates, "E", terms.E);
    add(r.predicates, "case1_gap", c2_case1_gap(terms));
    const C2Case predicted = c2_normal_predicate(p, cfg.pred_tol);
    add(r.predicates, "case", std::string(to_string(predicted)));
    const bool predicate = predicted != C2Case::NotNormal;

    const auto m = c2_map(p);
    const Complex ab = std::conj(p.alpha);
    const Complex phi0 = p.alpha * (ab * p.c0sq - p.c1) / (ab * (p.c0sq - p.alpha * p.c1));
    if (m ? !is_self_map(*m) : std::abs(phi0) >= 1.0) {
        add(r.oracle, "symbol", std::string("not-self-map"));
        add(r.predicates, "normal", predicate);
        add(r.oracle, "phi0_modulus", std::abs(phi0));
        r.verdict = predicate ? Verdict::Discrepancy : Verdict::Pass;
        if (predicate) r.note = "criterion holds but phi does not map the disk into itself";
        return r;
    }
    if (!m) {
        add(r.oracle, "symbol", std::string("Constant"));
        add_iff(r, predicate, normality_oracle(c2_symbols(p), cfg), cfg);
        return r;
    }
    add(r.oracle, "symbol", std::string(to_string(classify(*m).cls)));
    add_iff(r, predicate, normality_oracle(c2_symbols(p), cfg), cfg);
    if (r.verdict == Verdict::Discrepancy)
        r.note = predicate ? "criterion holds but W is not normal"
                 : m->is_identity() ? "phi is the identity, so W is a multiple of I, yet the criterion fails"
                                    : "W is normal but the criterion fails";
    return r;
}

}  // namespace

VerificationReport sweep_report(SweepFamily family, const SuiteConfig& cfg, const SweepGrid& grid) {
    const auto targets = sweep_targets(family, grid);
    auto report = run_samples(std::string("sweep-") + std::string(to_string(family)), cfg, targets.size(),
                              [&](std::size_t i, Rng&, const SuiteConfig& c) { return sweep_record(targets[i], family, c); });
    report.notes.push_back("psi = K_sigma(0) for every target");
    if (family == SweepFamily::C1Hyperbolic)
        report.notes.push_back("alpha minimised over 72 angles with compass refinement");
    if (family == SweepFamily::C2Hyperbolic)
        report.notes.push_back("alpha minimised over |alpha| <= 0.6 (8 radii x 24 angles) with compass refinement");
    return report;
}

VerificationReport consistency_report(ConsistencyFamily family, const SuiteConfig& cfg) {
    Record (*fn)(std::size_t, Rng&, const SuiteConfig&) = j_consistency;
    if (family == ConsistencyFamily::C1) fn = c1_consistency;
    if (family == ConsistencyFamily::C2) fn = c2_consistency;
    const std::string id = std::string(to_string(family)) + "-normality";
    auto report = run_samples(id, cfg, cfg.samples, fn);
    report.notes.push_back("self-map draws only; the first indices are fixed instances");
    return report;
}

}  // namespace detail

std::string_view to_string(SweepFamily f) {
    switch (f) {
        case SweepFamily::JHyperbolic: return "j-hyperbolic";
        case SweepFamily::C1Hyperbolic: return "c1-hyperbolic";
        case SweepFamily::C2Hyperbolic: return "c2-hyperbolic";
        case SweepFamily::HyperbolicNonAut: return "hyperbolic-nonaut";
    }
    return "?";
}

SweepFamily parse_sweep_family(std::string_view name) {
    for (auto f : {SweepFamily::JHyperbolic, SweepFamily::C1Hyperbolic, SweepFamily::C2Hyperbolic,
                   SweepFamily::HyperbolicNonAut})
        if (to_string(f) == name) return f;
    raise(ErrorKind::UnknownSuite, "unknown sweep family '" + std::string(name) + "'");
}

std::string_view to_string(ConsistencyFamily f) {
    switch (f) {
        case ConsistencyFamily::J: return "j";
        case ConsistencyFamily::C1: return "c1";
        case ConsistencyFamily::C2: return "c2";
    }
    return "?";
}

SweepGrid SweepGrid::standard() {
    return {{1.2, 1.5, 2.0, 3.0},
            {{0.0, -1.0}, {0.0, -0.5}, {0.0, 0.0}, {0.0, 0.5}, {0.0, 1.0}, {0.25, 0.0}, {0.5, 0.0}, {1.0, 0.0},
             {0.5, 0.5}, {0.5, -0.5}},
            true};
}

VerificationReport nonexistence_sweep(SweepFamily family, const SuiteConfig& cfg, const SweepGrid& grid) {
    cfg.validate();
    const std::string id = "sweep-" + std::string(to_string(family));
    auto report = detail::sweep_report(family, cfg, grid);
    for (const auto& s : suite_registry())
        if (s.id == id) report.known_discrepancies = s.known_discrepancies;
    return report;
}

Record check_symbols(const SymbolPair& s, const Conjugation& c, bool predicate, const SuiteConfig& cfg) {
    cfg.validate();
    Record r;
    const auto sym = detail::symmetry_oracle(s, c, cfg);
    const auto normal = detail::normality_oracle(s, cfg);
    const auto inv = involution_residual(conjugation_matrix(c, sym.dim), cfg.block);
    detail::add_resolved(r, "symmetry", sym);
    detail::add_resolved(r, "normality", normal);
    detail::add(r.residuals, "involution", std::max(inv.involution, inv.isometry));
    detail::add(r.predicates, "normal", predicate);
    r.verdict = detail::worst(detail::residual_verdict(sym, cfg), detail::iff_verdict(predicate, normal, cfg));
    return r;
}

VerificationReport oracle_consistency(ConsistencyFamily family, const SuiteConfig& cfg) {
    return run_suite(std::string(to_string(family)) + "-normality", cfg);
}

}  // namespace wco
