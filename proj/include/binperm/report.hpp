#pragma once

#include <json.hpp>

#include <string>

namespace binperm {

struct ReportOptions {
  int n_min = 3;
  int n_max = 8;
  int max_n_closure = 10;  // closure-verified group order up to here
};

/// Sweep record per n: colength, basis size, the four permutation check
/// flags, group order, invariant factors, SNF diagonal, variety count
/// and Aut order (decimal string). Big integers beyond the aut order fit
/// in 64 bits at desk scale and are emitted as numbers.
nlohmann::ordered_json build_report(const ReportOptions& opts);

std::string report_to_csv(const nlohmann::ordered_json& report);

}  // namespace binperm
