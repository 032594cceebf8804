#include "ratbase/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <ostream>

#include <json.hpp>

namespace ratbase {

std::string format_double(double v) {
  if (v == 0.0) return "0";
  char buf[40];
  for (int prec = 6; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

void write_report_csv(std::ostream& out, const std::vector<AsymptoticRow>& rows) {
  out << "N,S_w,main_term,residual,residual_norm\n";
  for (const auto& r : rows)
    out << r.N << ',' << r.count << ',' << format_double(r.main_term) << ',' << format_double(r.residual) << ','
        << format_double(r.residual_norm) << '\n';
}

void write_report_json(std::ostream& out, const std::vector<AsymptoticRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json rec;
    rec["N"] = r.N;
    rec["S_w"] = r.count;
    rec["main_term"] = r.main_term;
    rec["residual"] = r.residual;
    rec["residual_norm"] = r.residual_norm;
    arr.push_back(std::move(rec));
  }
  out << arr.dump(2) << '\n';
}

}  // namespace ratbase
