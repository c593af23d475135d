#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wco/families.hpp"
#include "wco/operators.hpp"

namespace wco {

struct SuiteConfig {
    std::size_t dim = 64;
    std::size_t block = 12;
    std::size_t samples = 200;
    std::uint64_t seed = 0;
    double pass_tol = 1e-7;
    double fail_tol = 1e-3;
    double pred_tol = tol::predicate;
    /// Frobenius mass allowed in the trailing rows/columns next to the block. The
    /// normality oracle compares the squared mass, the symmetry oracle the mass itself.
    double edge_tol = 1e-8;
    /// Oracles double the dimension up to this cap while the block is unresolved.
    /// Setting it equal to `dim` pins the dimension.
    std::size_t max_dim = 1024;
    /// Worker threads; 0 uses the hardware concurrency. Never affects results.
    unsigned threads = 0;

    /// Throws BadParameterDomain.
    void validate() const;
};

enum class Verdict { Pass, Fail, Inconclusive, Discrepancy };
std::string_view to_string(Verdict v);

using Value = std::variant<bool, std::int64_t, double, Complex, std::string>;

struct Field {
    std::string name;
    Value value;
};

struct Record {
    std::size_t index = 0;
    std::vector<Field> params;
    std::vector<Field> residuals;
    std::vector<Field> predicates;
    std::vector<Field> oracle;
    Verdict verdict = Verdict::Inconclusive;
    std::string note;

    const Value* find(std::string_view name) const;
};

struct Summary {
    std::size_t pass = 0, fail = 0, inconclusive = 0, discrepancy = 0;
    std::size_t total() const { return pass + fail + inconclusive + discrepancy; }
};

struct VerificationReport {
    std::string suite_id;
    SuiteConfig config;
    std::vector<Record> records;
    Summary summary;
    std::vector<std::string> notes;
    /// Discrepancies in this suite are documented findings rather than bugs.
    bool known_discrepancies = false;

    /// 0 pass, 1 fail or undocumented discrepancy, 3 documented discrepancies only.
    int exit_code() const;
};

struct SuiteInfo {
    std::string id;
    std::string description;
    std::vector<std::string> anchors;
    bool known_discrepancies;
};

const std::vector<SuiteInfo>& suite_registry();
/// Every result that must be covered by at least one registered suite.
const std::vector<std::string>& required_anchors();
/// Anchors with no suite; empty when the registry is complete.
std::vector<std::string> missing_anchors();

/// Throws UnknownSuite.
VerificationReport run_suite(std::string_view id, const SuiteConfig& cfg);

enum class SweepFamily { JHyperbolic, C1Hyperbolic, C2Hyperbolic, HyperbolicNonAut };
std::string_view to_string(SweepFamily f);
/// Throws UnknownSuite.
SweepFamily parse_sweep_family(std::string_view name);

/// Targets are hyperbolic_aut_map(r, t) over the product of the two lists. The
/// automorphism families keep the automorphisms, the non-automorphism family the
/// rest; maps that are not self-maps are dropped. `damped` adds 0.9 phi + 0.1,
/// which keeps the Denjoy-Wolff point 1, for each automorphism to the
/// non-automorphism targets.
struct SweepGrid {
    std::vector<double> r;
    std::vector<Complex> t;
    bool damped = true;

    /// r in {1.2, 1.5, 2, 3}; t in i{-1, -1/2, 0, 1/2, 1} and {1/4, 1/2, 1, 1/2 +- i/2}.
    static SweepGrid standard();
};

/// One record per hyperbolic target; `samples` is ignored.
VerificationReport nonexistence_sweep(SweepFamily family, const SuiteConfig& cfg,
                                      const SweepGrid& grid = SweepGrid::standard());

/// Symmetry against `c` and normality of W for one symbol pair, escalating the
/// dimension as the suites do. `predicate` is the closed-form normality claim;
/// the verdict combines the symmetry check with predicate/oracle agreement.
Record check_symbols(const SymbolPair& s, const Conjugation& c, bool predicate, const SuiteConfig& cfg);

enum class ConsistencyFamily { J, C1, C2 };
std::string_view to_string(ConsistencyFamily f);
VerificationReport oracle_consistency(ConsistencyFamily family, const SuiteConfig& cfg);

}  // namespace wco
