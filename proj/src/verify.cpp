#include <algorithm>
#include <atomic>
#include <numbers>
#include <set>
#include <thread>

#include "verify_internal.hpp"

namespace wco {

void SuiteConfig::validate() const {
    auto require = [](bool ok, const char* msg) {
        if (!ok) raise(ErrorKind::BadParameterDomain, msg);
    };
    require(block > 0 && block + kBlockPad <= dim, "block + 32 must not exceed dim");
    require(dim <= kMaxOrder && max_dim <= kMaxOrder, "dimension above 1024");
    require(max_dim >= dim, "max_dim below dim");
    require(pass_tol > 0.0 && pass_tol < fail_tol, "need 0 < pass_tol < fail_tol");
    require(pred_tol > 0.0 && edge_tol > 0.0, "tolerances must be positive");
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Inconclusive: return "inconclusive";
        case Verdict::Discrepancy: return "discrepancy";
    }
    return "?";
}

const Value* Record::find(std::string_view name) const {
    for (const auto* group : {&params, &residuals, &predicates, &oracle})
        for (const auto& f : *group)
            if (f.name == name) return &f.value;
    return nullptr;
}

int VerificationReport::exit_code() const {
    if (summary.fail > 0) return 1;
    if (summary.discrepancy > 0) return known_discrepancies ? 3 : 1;
    return 0;
}

namespace detail {

Complex Rng::circle() { return std::polar(1.0, uniform(-std::numbers::pi, std::numbers::pi)); }

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) h = (h ^ c) * 0x100000001b3ULL;
    return h;
}

template <class Build>
Resolved escalate(const SuiteConfig& cfg, Build build) {
    std::size_t n = cfg.dim;
    for (;;) {
        const auto [value, edge] = build(n);
        const bool ok = edge <= cfg.edge_tol;
        if (ok || n >= cfg.max_dim) return {value, n, ok};
        n = std::min(2 * n, cfg.max_dim);
    }
}

}  // namespace

std::uint64_t sample_seed(std::uint64_t seed, std::string_view suite, std::size_t index) {
    return splitmix64(splitmix64(seed ^ fnv1a(suite)) + index);
}

MobiusMap random_automorphism(Rng& rng, double radius) {
    return from_aut_normal_form({rng.circle(), rng.disk(radius)});
}

MobiusMap random_self_map(Rng& rng) {
    const MobiusMap aut = random_automorphism(rng);
    const double rho = rng.uniform(0.1, 0.95);
    const Complex kappa = rng.disk(1.0 - rho);
    return MobiusMap(rho * aut.a() + kappa * aut.c(), rho * aut.b() + kappa * aut.d(), aut.c(), aut.d());
}

Resolved normality_oracle(const SymbolPair& s, const SuiteConfig& cfg) {
    return escalate(cfg, [&](std::size_t n) {
        const auto t = build_wco(s.psi, s.phi, n);
        // Both Gram products lose only sums of two tail entries, so the error is quadratic in the edge.
        const double edge = truncation_edge(t.matrix(), cfg.block);
        return std::pair{normality_residual(t, cfg.block), edge * edge};
    });
}

Resolved symmetry_oracle(const SymbolPair& s, const Conjugation& c, const SuiteConfig& cfg) {
    // The product only needs U resolved; M enters through exact entries. The edge
    // depends on U alone, so M is built once the dimension is settled.
    std::size_t n = cfg.dim;
    for (;;) {
        const auto a = conjugation_matrix(c, n);
        const bool ok = truncation_edge(a.matrix(), cfg.block) <= cfg.edge_tol;
        if (ok || n >= cfg.max_dim)
            return {symmetry_residual(build_wco(s.psi, s.phi, n), a, cfg.block), n, ok};
        n = std::min(2 * n, cfg.max_dim);
    }
}

Verdict residual_verdict(const Resolved& r, const SuiteConfig& cfg) {
    if (!r.resolved) return Verdict::Inconclusive;
    if (r.value <= cfg.pass_tol) return Verdict::Pass;
    if (r.value >= cfg.fail_tol) return Verdict::Fail;
    return Verdict::Inconclusive;
}

Verdict iff_verdict(bool predicate, const Resolved& r, const SuiteConfig& cfg) {
    if (!r.resolved || (r.value > cfg.pass_tol && r.value < cfg.fail_tol)) return Verdict::Inconclusive;
    return predicate == (r.value <= cfg.pass_tol) ? Verdict::Pass : Verdict::Discrepancy;
}

Verdict worst(Verdict a, Verdict b) {
    auto rank = [](Verdict v) {
        switch (v) {
            case Verdict::Pass: return 0;
            case Verdict::Inconclusive: return 1;
            case Verdict::Discrepancy: return 2;
            case Verdict::Fail: return 3;
        }
        return 3;
    };
    return rank(a) >= rank(b) ? a : b;
}

void add(std::vector<Field>& fields, std::string name, Value v) { fields.push_back({std::move(name), std::move(v)}); }

void add_resolved(Record& r, const std::string& name, const Resolved& res) {
    add(r.residuals, name, res.value);
    add(r.oracle, name + "_dim", static_cast<std::int64_t>(res.dim));
    add(r.oracle, name + "_resolved", res.resolved);
}

VerificationReport run_samples(std::string id, const SuiteConfig& cfg, std::size_t count, const SampleFn& fn) {
    VerificationReport report;
    report.suite_id = std::move(id);
    report.config = cfg;
    report.records.resize(count);

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            Rng rng(sample_seed(cfg.seed, report.suite_id, i));
            Record rec;
            try {
                rec = fn(i, rng, cfg);
            } catch (const Error& e) {
                rec = Record{};
                rec.verdict = Verdict::Fail;
                rec.note = e.what();
            }
            rec.index = i;
            report.records[i] = std::move(rec);
        }
    };
    unsigned threads = cfg.threads != 0 ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    pool.clear();

    for (const auto& r : report.records) {
        switch (r.verdict) {
            case Verdict::Pass: ++report.summary.pass; break;
            case Verdict::Fail: ++report.summary.fail; break;
            case Verdict::Inconclusive: ++report.summary.inconclusive; break;
            case Verdict::Discrepancy: ++report.summary.discrepancy; break;
        }
    }
    return report;
}

}  // namespace detail

std::vector<std::string> missing_anchors() {
    std::set<std::string> covered;
    for (const auto& s : suite_registry()) covered.insert(s.anchors.begin(), s.anchors.end());
    std::vector<std::string> out;
    for (const auto& a : required_anchors())
        if (!covered.contains(a)) out.push_back(a);
    return out;
}

VerificationReport run_suite(std::string_view id, const SuiteConfig& cfg) {
    cfg.validate();
    const auto& reg = suite_registry();
    const auto it = std::find_if(reg.begin(), reg.end(), [&](const SuiteInfo& s) { return s.id == id; });
    if (it == reg.end()) raise(ErrorKind::UnknownSuite, "unknown suite '" + std::string(id) + "'");
    auto report = detail::run_named_suite(id, cfg);
    report.known_discrepancies = it->known_discrepancies;
    return report;
}

}  // namespace wco
