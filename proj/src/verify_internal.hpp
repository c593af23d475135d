#pragma once

#include <functional>
#include <random>

#include "wco/families.hpp"
#include "wco/operators.hpp"
#include "wco/verify.hpp"

namespace wco::detail {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(g_() >> 11) * 0x1.0p-53);
    }
    /// Uniform on the open disk of the given radius, by rejection from the square.
    Complex disk(double radius = 1.0) {
        for (;;) {
            const Complex z(uniform(-radius, radius), uniform(-radius, radius));
            if (std::abs(z) < radius) return z;
        }
    }
    Complex circle();
    bool coin() { return (g_() >> 63) != 0; }

private:
    std::mt19937_64 g_;
};

std::uint64_t sample_seed(std::uint64_t seed, std::string_view suite, std::size_t index);

MobiusMap random_automorphism(Rng& rng, double radius = 0.95);
/// rho * automorphism + kappa with |kappa| <= 1 - rho.
MobiusMap random_self_map(Rng& rng);

/// A residual together with the dimension it was measured at.
struct Resolved {
    double value;
    std::size_t dim;
    bool resolved;
};

Resolved normality_oracle(const SymbolPair& s, const SuiteConfig& cfg);
Resolved symmetry_oracle(const SymbolPair& s, const Conjugation& c, const SuiteConfig& cfg);

/// For claims that a residual vanishes.
Verdict residual_verdict(const Resolved& r, const SuiteConfig& cfg);
/// For iff claims: the predicate against the decisive side of the oracle.
Verdict iff_verdict(bool predicate, const Resolved& r, const SuiteConfig& cfg);
Verdict worst(Verdict a, Verdict b);

void add(std::vector<Field>& fields, std::string name, Value v);
void add_resolved(Record& r, const std::string& name, const Resolved& res);

using SampleFn = std::function<Record(std::size_t index, Rng& rng, const SuiteConfig& cfg)>;

/// Evaluates `count` samples in parallel and assembles them in index order. A
/// sample that throws becomes a failing record carrying the error text.
VerificationReport run_samples(std::string id, const SuiteConfig& cfg, std::size_t count, const SampleFn& fn);

VerificationReport run_named_suite(std::string_view id, const SuiteConfig& cfg);

}  // namespace wco::detail
