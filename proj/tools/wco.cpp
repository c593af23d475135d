#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "wco/report.hpp"

using namespace wco;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitInternal = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitKnown = 3;

int exit_for(ErrorKind k) {
    switch (k) {
        case ErrorKind::ParseError:
        case ErrorKind::NotSelfMap:
        case ErrorKind::DomainViolation:
        case ErrorKind::BadParameterDomain:
        case ErrorKind::BlockTooLarge:
        case ErrorKind::UnknownSuite:
        case ErrorKind::BranchConditionViolated:
        case ErrorKind::DiscriminantViolated:
        case ErrorKind::DegenerateSymbol:
        case ErrorKind::ConstantMap:
        case ErrorKind::IdentityMap:
        case ErrorKind::IoError:
            return kExitBadInput;
        default:
            return kExitInternal;
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string part; std::getline(ss, part, sep);) out.push_back(part);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

std::size_t default_dim() {
    const char* env = std::getenv("WCO_DEFAULT_DIM");
    if (env == nullptr || *env == '\0') return SuiteConfig{}.dim;
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(env, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != std::strlen(env) || v == 0) raise(ErrorKind::ParseError, std::string("WCO_DEFAULT_DIM='") + env + "'");
    return v;
}

/// Writes to `path`, or stdout for "-".
void emit(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) raise(ErrorKind::IoError, "cannot open '" + path + "' for writing");
    f << text;
    if (!f) raise(ErrorKind::IoError, "write to '" + path + "' failed");
}

struct ConfigFlags {
    std::optional<std::size_t> dim, block, samples, max_dim;
    std::uint64_t seed = 0;
    unsigned threads = 0;
    std::optional<double> tol;

    void add(CLI::App* app, bool sampling) {
        app->add_option("--dim", dim, "Truncation dimension N");
        app->add_option("--block", block, "Leading block size k");
        app->add_option("--max-dim", max_dim, "Escalation cap; equal to --dim pins N");
        app->add_option("--tol", tol, "Pass tolerance");
        if (sampling) {
            app->add_option("--seed", seed, "Master seed");
            app->add_option("--samples", samples, "Draws per suite");
            app->add_option("--threads", threads, "Worker threads, 0 for all cores");
        }
    }

    SuiteConfig config() const {
        SuiteConfig c;
        c.dim = dim.value_or(default_dim());
        if (block) c.block = *block;
        if (samples) c.samples = *samples;
        c.max_dim = max_dim.value_or(std::max(c.max_dim, c.dim));
        if (tol) c.pass_tol = *tol;
        c.seed = seed;
        c.threads = threads;
        c.validate();
        return c;
    }
};

int cmd_classify(const std::string& phi_text, bool json) {
    const auto parts = split(phi_text, ',');
    if (parts.size() != 4) raise(ErrorKind::ParseError, "--phi needs four comma-separated coefficients a,b,c,d");
    std::array<Complex, 4> k;
    for (int i = 0; i < 4; ++i) k[i] = parse_complex(parts[i]);
    const MobiusMap m(k[0], k[1], k[2], k[3]);
    const auto cls = classify(m);
    std::optional<MobiusMap> sigma;
    try {
        sigma = cowen_adjoint(m).sigma;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::DegenerateResult) throw;
    }
    std::string sigma_text = "undefined";
    if (sigma) {
        sigma_text.clear();
        for (int i = 0; i < 4; ++i) sigma_text += (i ? "," : "") + format_complex(sigma->coefficients()[i]);
    }
    if (json) {
        std::cout << "{\n  \"class\": \"" << to_string(cls.cls) << "\",\n  \"dw_point\": \""
                  << format_complex(cls.dw_point) << "\",\n  \"dw_derivative\": \"" << format_complex(cls.dw_derivative)
                  << "\",\n  \"automorphism\": " << (cls.is_automorphism ? "true" : "false") << ",\n  \"sigma\": \""
                  << sigma_text << "\"\n}\n";
    } else {
        std::cout << "class: " << to_string(cls.cls) << "\ndw_point: " << format_complex(cls.dw_point)
                  << "\ndw_derivative: " << format_complex(cls.dw_derivative)
                  << "\nautomorphism: " << (cls.is_automorphism ? "true" : "false") << "\nsigma: " << sigma_text
                  << '\n';
    }
    return kExitPass;
}

struct CheckFlags {
    std::string family, conjugation;
    std::string a0, a1, b = "1", alpha, c0, c1, c2, d = "1", lambda = "1", conj_alpha;
};

Complex required(const std::string& text, const char* flag) {
    if (text.empty()) raise(ErrorKind::ParseError, std::string("missing ") + flag);
    return parse_complex(text);
}

void param(Record& r, const char* name, Complex z) { r.params.push_back({name, z}); }

int cmd_check(const CheckFlags& f, const SuiteConfig& cfg) {
    Record pre;
    SymbolPair s;
    Conjugation c;
    bool predicate = false;
    std::function<SymbolPair()> build;

    if (f.family == "j") {
        const JParams p{required(f.a0, "--a0"), required(f.a1, "--a1"), parse_complex(f.b)};
        param(pre, "a0", p.a0);
        param(pre, "a1", p.a1);
        param(pre, "b", p.b);
        predicate = j_normal_predicate(p.a0, p.a1, cfg.pred_tol);
        pre.predicates.push_back({"j_expression", j_normal_expression(p.a0, p.a1)});
        c = Conjugation::j();
        build = [p] { return j_symbols(p); };
    } else if (f.family == "c1") {
        const C1Params p{required(f.alpha, "--alpha"), required(f.c0, "--c0"), required(f.c1, "--c1"),
                         parse_complex(f.d)};
        param(pre, "alpha", p.alpha);
        param(pre, "c0", p.c0);
        param(pre, "c1", p.c1);
        param(pre, "d", p.d);
        predicate = c1_normal_predicate(p.alpha, p.c0, p.c1, cfg.pred_tol);
        pre.predicates.push_back({"c1_expression", c1_normal_expression(p.alpha, p.c0, p.c1)});
        c = Conjugation::c1(1.0, p.alpha);
        build = [p] { return c1_symbols(p); };
    } else if (f.family == "c2") {
        const auto p = C2Params::from_c0(required(f.alpha, "--alpha"), required(f.c0, "--c0"),
                                         required(f.c1, "--c1"), required(f.c2, "--c2"), parse_complex(f.d));
        param(pre, "alpha", p.alpha);
        param(pre, "c0", required(f.c0, "--c0"));
        param(pre, "c1", p.c1);
        param(pre, "c2", p.c2);
        param(pre, "d", p.d);
        const C2Case cs = c2_normal_predicate(p, cfg.pred_tol);
        predicate = cs != C2Case::NotNormal;
        pre.predicates.push_back({"case", std::string(to_string(cs))});
        pre.predicates.push_back({"parabolic", c2_parabolic_predicate(p, cfg.pred_tol)});
        c = Conjugation::c2(1.0, p.alpha);
        build = [p] { return c2_symbols(p); };
    } else {
        raise(ErrorKind::ParseError, "--family must be j, c1 or c2");
    }

    if (!f.conjugation.empty()) {
        const Complex ca = f.conj_alpha.empty() ? c.alpha : parse_complex(f.conj_alpha);
        if (f.conjugation == "j") c = Conjugation::j();
        else if (f.conjugation == "c1") c = Conjugation::c1(1.0, ca);
        else if (f.conjugation == "c2") c = Conjugation::c2(1.0, ca);
        else raise(ErrorKind::ParseError, "--conjugation must be j, c1 or c2");
    } else if (!f.conj_alpha.empty()) {
        c.alpha = parse_complex(f.conj_alpha);
    }
    c.lambda = parse_complex(f.lambda);

    try {
        s = build();
    } catch (const Error&) {
        std::cerr << "predicates:";
        for (const auto& fld : pre.predicates)
            std::cerr << ' ' << fld.name << '='
                      << std::visit(
                             [](const auto& v) -> std::string {
                                 using T = std::decay_t<decltype(v)>;
                                 if constexpr (std::is_same_v<T, std::string>) return v;
                                 else if constexpr (std::is_same_v<T, Complex>) return format_complex(v);
                                 else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
                                 else return std::to_string(v);
                             },
                             fld.value);
        std::cerr << '\n';
        throw;
    }

    Record r = check_symbols(s, c, predicate, cfg);
    r.params = std::move(pre.params);
    r.params.push_back({"conjugation", std::string(to_string(c.kind))});
    r.params.push_back({"lambda", c.lambda});
    if (c.kind != ConjugationKind::J) r.params.push_back({"conjugation_alpha", c.alpha});
    r.predicates.insert(r.predicates.end(), pre.predicates.begin(), pre.predicates.end());
    std::cout << check_json(f.family, r);
    switch (r.verdict) {
        case Verdict::Pass:
        case Verdict::Inconclusive: return kExitPass;
        case Verdict::Discrepancy: return kExitKnown;
        case Verdict::Fail: return kExitInternal;
    }
    return kExitInternal;
}

void write_report(const VerificationReport& r, const std::string& json, const std::string& csv) {
    if (!json.empty()) emit(json, report_json(r));
    if (!csv.empty()) {
        std::ostringstream out;
        write_sweep_csv(out, r);
        emit(csv, out.str());
    }
    if (json != "-" && csv != "-") write_human(std::cout, r);
}

SweepGrid parse_grid(const std::string& r_text, const std::string& t_text, bool no_damped) {
    SweepGrid g = SweepGrid::standard();
    if (!r_text.empty()) {
        g.r.clear();
        for (const auto& x : split(r_text, ',')) {
            const Complex z = parse_complex(x);
            if (z.imag() != 0.0 || z.real() <= 1.0)
                raise(ErrorKind::BadParameterDomain, "grid r values must be real and greater than 1");
            g.r.push_back(z.real());
        }
    }
    if (!t_text.empty()) {
        g.t.clear();
        for (const auto& x : split(t_text, ',')) g.t.push_back(parse_complex(x));
    }
    if (no_damped) g.damped = false;
    return g;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weighted composition operators on H^2: classification, symmetry and normality checks"};
    app.require_subcommand(0, 1);
    bool print_schema = false;
    app.add_flag("--print-schema", print_schema, "Print the JSON report schema and exit");

    auto* classify_cmd = app.add_subcommand("classify", "Classify a linear-fractional self-map");
    std::string phi_text;
    bool classify_json = false;
    classify_cmd->add_option("--phi", phi_text, "Coefficients a,b,c,d of (az+b)/(cz+d)")->required();
    classify_cmd->add_flag("--json", classify_json, "JSON output");

    auto* check_cmd = app.add_subcommand("check", "Check one family member against the oracles");
    CheckFlags cf;
    ConfigFlags check_cfg;
    check_cmd->add_option("--family", cf.family, "j, c1 or c2")->required();
    check_cmd->add_option("--a0", cf.a0);
    check_cmd->add_option("--a1", cf.a1);
    check_cmd->add_option("--b", cf.b);
    check_cmd->add_option("--alpha", cf.alpha);
    check_cmd->add_option("--c0", cf.c0);
    check_cmd->add_option("--c1", cf.c1);
    check_cmd->add_option("--c2", cf.c2);
    check_cmd->add_option("--d", cf.d);
    check_cmd->add_option("--conjugation", cf.conjugation, "j, c1 or c2; defaults to the family's own");
    check_cmd->add_option("--lambda", cf.lambda, "Unimodular conjugation constant");
    check_cmd->add_option("--conj-alpha", cf.conj_alpha, "Conjugation alpha; defaults to the family alpha");
    check_cfg.add(check_cmd, false);

    auto* suite_cmd = app.add_subcommand("suite", "Run a registered verification suite");
    std::string suite_id, suite_json;
    ConfigFlags suite_cfg;
    suite_cmd->add_option("--id", suite_id, "Suite id (see `list`)")->required();
    suite_cmd->add_option("--json", suite_json, "Report path, '-' for stdout");
    suite_cfg.add(suite_cmd, true);

    auto* sweep_cmd = app.add_subcommand("sweep", "Hyperbolic nonexistence sweep");
    std::string sweep_family, sweep_json, sweep_csv, grid_r, grid_t;
    bool no_damped = false;
    ConfigFlags sweep_cfg;
    sweep_cmd->add_option("--family", sweep_family, "j-hyperbolic, c1-hyperbolic, c2-hyperbolic or hyperbolic-nonaut")
        ->required();
    sweep_cmd->add_option("--r", grid_r, "Comma-separated r values (phi'(1) = 1/r)");
    sweep_cmd->add_option("--t", grid_t, "Comma-separated translation parameters");
    sweep_cmd->add_flag("--no-damped", no_damped, "Omit the damped non-automorphism targets");
    sweep_cmd->add_option("--csv", sweep_csv, "CSV path, '-' for stdout");
    sweep_cmd->add_option("--json", sweep_json, "Report path, '-' for stdout");
    sweep_cfg.add(sweep_cmd, true);

    auto* list_cmd = app.add_subcommand("list", "List registered suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadInput;
    }

    try {
        if (print_schema) {
            std::cout << report_schema();
            return kExitPass;
        }
        if (*classify_cmd) return cmd_classify(phi_text, classify_json);
        if (*check_cmd) return cmd_check(cf, check_cfg.config());
        if (*suite_cmd) {
            const auto r = run_suite(suite_id, suite_cfg.config());
            write_report(r, suite_json, "");
            return r.exit_code();
        }
        if (*sweep_cmd) {
            const auto family = parse_sweep_family(sweep_family);
            const auto cfg = sweep_cfg.config();
            const auto r = nonexistence_sweep(family, cfg, parse_grid(grid_r, grid_t, no_damped));
            write_report(r, sweep_json, sweep_csv);
            return r.exit_code();
        }
        if (*list_cmd) {
            for (const auto& s : suite_registry())
                std::cout << s.id << (s.known_discrepancies ? "  [known discrepancies]" : "") << "\n  "
                          << s.description << '\n';
            return kExitPass;
        }
        std::cout << app.help();
        return kExitBadInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}
