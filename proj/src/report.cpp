#include "wco/report.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

#include <json.hpp>

namespace wco {

namespace {

using Json = nlohmann::ordered_json;

std::string shortest(double x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

struct Term {
    double value;
    bool imaginary;
};

[[noreturn]] void bad(std::string_view text, const char* why) {
    raise(ErrorKind::ParseError, "cannot parse complex '" + std::string(text) + "': " + why);
}

/// sign? digits? 'i'?, with at least one of digits or 'i'.
Term read_term(std::string_view text, std::size_t& pos, bool sign_required) {
    double sign = 1.0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        sign = text[pos] == '-' ? -1.0 : 1.0;
        ++pos;
    } else if (sign_required) {
        bad(text, "expected + or - between the parts");
    }
    double value = 1.0;
    bool digits = false;
    if (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.')) {
        const auto res = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (res.ec != std::errc()) bad(text, "number out of range or malformed");
        pos = static_cast<std::size_t>(res.ptr - text.data());
        digits = true;
    }
    const bool imaginary = pos < text.size() && text[pos] == 'i';
    if (imaginary) ++pos;
    if (!digits && !imaginary) bad(text, "expected a number");
    return {sign * value, imaginary};
}

Json to_json(const Value& v) {
    return std::visit(
        [](const auto& x) -> Json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, double>) {
                if (std::isfinite(x)) return x;
                return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
            } else if constexpr (std::is_same_v<T, Complex>) {
                return is_finite(x) ? format_complex(x) : std::string("nan");
            } else {
                return x;
            }
        },
        v);
}

Json fields(const std::vector<Field>& fs) {
    Json out = Json::object();
    for (const auto& f : fs) out[f.name] = to_json(f.value);
    return out;
}

std::string cell(const Value* v) {
    if (v == nullptr) return "";
    if (const auto* d = std::get_if<double>(v)) return shortest(*d);
    if (const auto* s = std::get_if<std::string>(v)) return *s;
    if (const auto* b = std::get_if<bool>(v)) return *b ? "true" : "false";
    if (const auto* i = std::get_if<std::int64_t>(v)) return std::to_string(*i);
    const Complex z = std::get<Complex>(*v);
    return is_finite(z) ? format_complex(z) : "nan";
}

std::pair<std::string, std::string> complex_cells(const Value* v) {
    if (v == nullptr) return {"", ""};
    const Complex z = std::get<Complex>(*v);
    return {shortest(z.real()), shortest(z.imag())};
}

constexpr std::string_view kSchema = R"({
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "$id": "wco-verification-report-v1",
  "type": "object",
  "required": ["schema_version", "suite_id", "config", "known_discrepancies", "summary", "notes", "records"],
  "additionalProperties": false,
  "properties": {
    "schema_version": {"type": "integer", "enum": [1]},
    "suite_id": {"type": "string"},
    "config": {
      "type": "object",
      "required": ["dim", "block", "samples", "seed", "pass_tol", "fail_tol", "pred_tol", "edge_tol", "max_dim"],
      "additionalProperties": false,
      "properties": {
        "dim": {"type": "integer"},
        "block": {"type": "integer"},
        "samples": {"type": "integer"},
        "seed": {"type": "integer"},
        "pass_tol": {"type": "number"},
        "fail_tol": {"type": "number"},
        "pred_tol": {"type": "number"},
        "edge_tol": {"type": "number"},
        "max_dim": {"type": "integer"}
      }
    },
    "known_discrepancies": {"type": "boolean"},
    "summary": {
      "type": "object",
      "required": ["pass", "fail", "inconclusive", "discrepancy", "total"],
      "additionalProperties": false,
      "properties": {
        "pass": {"type": "integer"},
        "fail": {"type": "integer"},
        "inconclusive": {"type": "integer"},
        "discrepancy": {"type": "integer"},
        "total": {"type": "integer"}
      }
    },
    "notes": {"type": "array", "items": {"type": "string"}},
    "records": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["index", "verdict", "params", "residuals", "predicates", "oracle"],
        "additionalProperties": false,
        "properties": {
          "index": {"type": "integer"},
          "verdict": {"type": "string", "enum": ["pass", "fail", "inconclusive", "discrepancy"]},
          "note": {"type": "string"},
          "params": {"$ref": "#/$defs/fields"},
          "residuals": {"$ref": "#/$defs/fields"},
          "predicates": {"$ref": "#/$defs/fields"},
          "oracle": {"$ref": "#/$defs/fields"}
        }
      }
    }
  },
  "$defs": {
    "fields": {
      "type": "object",
      "additionalProperties": {"type": ["boolean", "integer", "number", "string"]}
    }
  }
}
)";

}  // namespace

std::string format_complex(Complex z) {
    if (!is_finite(z)) raise(ErrorKind::NonFinite, "cannot format a non-finite complex number");
    std::string out = shortest(z.real());
    out += std::signbit(z.imag()) ? '-' : '+';
    out += shortest(std::abs(z.imag()));
    out += 'i';
    return out;
}

Complex parse_complex(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) bad(text, "empty");
    std::size_t pos = 0;
    const Term first = read_term(text, pos, false);
    if (pos == text.size()) return first.imaginary ? Complex(0.0, first.value) : Complex(first.value, 0.0);
    if (first.imaginary) bad(text, "trailing characters after the imaginary part");
    const Term second = read_term(text, pos, true);
    if (!second.imaginary || pos != text.size()) bad(text, "expected the imaginary part to end with i");
    return {first.value, second.value};
}

std::string report_json(const VerificationReport& r) {
    Json j;
    j["schema_version"] = kReportSchemaVersion;
    j["suite_id"] = r.suite_id;
    const auto& c = r.config;
    j["config"] = {{"dim", c.dim},           {"block", c.block},       {"samples", c.samples},
                   {"seed", c.seed},         {"pass_tol", c.pass_tol}, {"fail_tol", c.fail_tol},
                   {"pred_tol", c.pred_tol}, {"edge_tol", c.edge_tol}, {"max_dim", c.max_dim}};
    j["known_discrepancies"] = r.known_discrepancies;
    j["summary"] = {{"pass", r.summary.pass},
                    {"fail", r.summary.fail},
                    {"inconclusive", r.summary.inconclusive},
                    {"discrepancy", r.summary.discrepancy},
                    {"total", r.summary.total()}};
    j["notes"] = r.notes;
    Json records = Json::array();
    for (const auto& rec : r.records) {
        Json o;
        o["index"] = rec.index;
        o["verdict"] = std::string(to_string(rec.verdict));
        if (!rec.note.empty()) o["note"] = rec.note;
        o["params"] = fields(rec.params);
        o["residuals"] = fields(rec.residuals);
        o["predicates"] = fields(rec.predicates);
        o["oracle"] = fields(rec.oracle);
        records.push_back(std::move(o));
    }
    j["records"] = std::move(records);
    return j.dump(2) + "\n";
}

std::string check_json(std::string_view family, const Record& r) {
    Json j;
    j["family"] = std::string(family);
    j["params"] = fields(r.params);
    j["residuals"] = fields(r.residuals);
    j["predicates"] = fields(r.predicates);
    j["oracle"] = fields(r.oracle);
    j["verdict"] = std::string(to_string(r.verdict));
    if (!r.note.empty()) j["note"] = r.note;
    return j.dump(2) + "\n";
}

std::string_view report_schema() { return kSchema; }

void write_sweep_csv(std::ostream& out, const VerificationReport& r) {
    out << "index,origin,r,t_re,t_im,class,normality,lft_defect,symmetry,best_alpha_re,best_alpha_im,deficiency,verdict\n";
    for (const auto& rec : r.records) {
        const auto [t_re, t_im] = complex_cells(rec.find("t"));
        const auto [a_re, a_im] = complex_cells(rec.find("best_alpha"));
        const Value* sym = rec.find("symmetry_min");
        if (sym == nullptr) sym = rec.find("symmetry");
        out << rec.index << ',' << cell(rec.find("origin")) << ',' << cell(rec.find("r")) << ',' << t_re << ','
            << t_im << ',' << cell(rec.find("class")) << ',' << cell(rec.find("normality")) << ','
            << cell(rec.find("lft_defect")) << ',' << cell(sym) << ',' << a_re << ',' << a_im << ','
            << cell(rec.find("deficiency")) << ',' << to_string(rec.verdict) << '\n';
    }
}

void write_human(std::ostream& out, const VerificationReport& r) {
    const auto& s = r.summary;
    out << r.suite_id << ": " << s.total() << " records, pass " << s.pass << ", fail " << s.fail << ", inconclusive "
        << s.inconclusive << ", discrepancy " << s.discrepancy << (r.known_discrepancies ? " (documented)" : "")
        << '\n';
    for (const auto& n : r.notes) out << "  note: " << n << '\n';
    for (const auto& rec : r.records) {
        if (rec.verdict == Verdict::Pass) continue;
        out << "  #" << rec.index << ' ' << to_string(rec.verdict);
        if (!rec.note.empty()) out << ": " << rec.note;
        out << "\n   ";
        for (const auto* group : {&rec.params, &rec.residuals, &rec.predicates})
            for (const auto& f : *group) out << ' ' << f.name << '=' << cell(&f.value);
        out << '\n';
    }
}

}  // namespace wco
