#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "wco/verify.hpp"

namespace wco {

inline constexpr int kReportSchemaVersion = 1;

/// Shortest text that reparses to the identical value: "a+bi", "a-bi".
/// Throws NonFinite.
std::string format_complex(Complex z);

/// Accepts "a+bi", "a-bi", "a", "bi" (and "i", "-i") with decimal components and
/// optional exponents. Throws ParseError, including for nan and inf.
Complex parse_complex(std::string_view text);

/// JSON text of a report. Keys keep insertion order, so equal reports give
/// byte-identical output.
std::string report_json(const VerificationReport& r);

/// One checked symbol pair: {family, params, residuals, predicates, oracle, verdict}.
std::string check_json(std::string_view family, const Record& r);

/// JSON Schema for report_json.
std::string_view report_schema();

/// One row per sweep target. Columns:
/// index,origin,r,t_re,t_im,class,normality,lft_defect,symmetry,best_alpha_re,best_alpha_im,deficiency,verdict
void write_sweep_csv(std::ostream& out, const VerificationReport& r);

/// Summary counts and the non-passing records, for terminals.
void write_human(std::ostream& out, const VerificationReport& r);

}  // namespace wco
