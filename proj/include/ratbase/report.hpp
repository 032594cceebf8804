#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ratbase/patterns.hpp"

namespace ratbase {

/// Pattern-count rows as CSV with header N,S_w,main_term,residual,residual_norm.
void write_report_csv(std::ostream& out, const std::vector<AsymptoticRow>& rows);

/// Same rows as a JSON array of records with the CSV keys.
void write_report_json(std::ostream& out, const std::vector<AsymptoticRow>& rows);

/// Shortest round-trip decimal for a double ("%.17g" trimmed to what is needed).
std::string format_double(double v);

}  // namespace ratbase
