#include "binperm/report.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "binperm/abelian_group.hpp"
#include "binperm/automorphisms.hpp"
#include "binperm/checks.hpp"
#include "binperm/cli.hpp"
#include "binperm/lattice.hpp"

namespace binperm {

namespace {

nlohmann::ordered_json int_list(const std::vector<Int>& v) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const auto& x : v) a.push_back(x.get_si());
  return a;
}

}  // namespace

nlohmann::ordered_json build_report(const ReportOptions& opts) {
  if (opts.n_min < 3 || opts.n_max < opts.n_min) throw std::invalid_argument("report: need 3 <= n_min <= n_max");
  if (opts.n_max > 14) throw std::invalid_argument("report: n_max is capped at 14 (desk scale)");

  auto t0 = std::chrono::steady_clock::now();
  nlohmann::ordered_json report;
  report["version"] = cli::kVersion;
  report["n_min"] = opts.n_min;
  report["n_max"] = opts.n_max;
  report["records"] = nlohmann::ordered_json::array();
  bool all_pass = true;

  for (int n = opts.n_min; n <= opts.n_max; ++n) {
    QuotientRing q(n);
    nlohmann::ordered_json rec;
    rec["n"] = n;
    rec["colength"] = colength_of(n).get_si();
    rec["basis_size"] = q.basis().size();

    CheckResult derangement = check_derangement(q);
    CheckResult commute = check_commute(q);
    CheckResult cycles = check_cycles(q);
    bool order_ok = true;
    for (int j = 1; j <= n; ++j) {
      if (reduced_permutation(q, j).order() != 2 * (n - 2)) order_ok = false;
    }
    rec["checks"] = {{"derangement", derangement.pass},
                     {"commute", commute.pass},
                     {"order", order_ok},
                     {"cycle_type", cycles.pass}};
    bool row_pass = derangement.pass && commute.pass && order_ok && cycles.pass;

    long long abstract_order = Int(colength_of(n) - 1).get_si();
    if (n <= opts.max_n_closure) {
      std::vector<Permutation> gens;
      for (int j = 1; j <= n; ++j) gens.push_back(reduced_permutation(q, j));
      ClosureResult c = closure(gens);
      rec["group_order"] = c.order;
      if (static_cast<long long>(c.order) != abstract_order) row_pass = false;
      if (c.invariant_factors != expected_invariant_factors(n)) row_pass = false;
    } else {
      rec["group_order"] = abstract_order;
    }

    CokernelInvariants coker = cokernel_invariants(make_instance(n).lattice_gens, n);
    rec["invariant_factors"] = int_list(coker.factors);
    if (coker.factors != expected_invariant_factors(n) || coker.free_rank != 0) row_pass = false;

    std::vector<Int> diag = snf_diagonal(relation_matrix(n));
    rec["snf"] = int_list(diag);
    if (diag != expected_snf_diagonal(n)) row_pass = false;

    std::size_t vcount = enumerate_variety(n).size();
    rec["variety_count"] = vcount;
    if (static_cast<long long>(vcount) != abstract_order) row_pass = false;

    rec["aut_order"] = aut_report(n).order.get_str();

    all_pass = all_pass && row_pass;
    report["records"].push_back(std::move(rec));
  }

  report["pass"] = all_pass;
  auto t1 = std::chrono::steady_clock::now();
  report["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return report;
}

std::string report_to_csv(const nlohmann::ordered_json& report) {
  std::ostringstream os;
  os << "n,colength,basis_size,derangement,commute,order,cycle_type,group_order,"
        "invariant_factors,snf,variety_count,aut_order\n";
  auto join = [](const nlohmann::ordered_json& arr) {
    std::string s;
    for (const auto& v : arr) {
      if (!s.empty()) s += ';';
      s += std::to_string(v.get<long long>());
    }
    return s;
  };
  for (const auto& rec : report.at("records")) {
    os << rec.at("n").get<long long>() << ',' << rec.at("colength").get<long long>() << ','
       << rec.at("basis_size").get<long long>() << ',' << (rec.at("checks").at("derangement").get<bool>() ? 1 : 0)
       << ',' << (rec.at("checks").at("commute").get<bool>() ? 1 : 0) << ','
       << (rec.at("checks").at("order").get<bool>() ? 1 : 0) << ','
       << (rec.at("checks").at("cycle_type").get<bool>() ? 1 : 0) << ',' << rec.at("group_order").get<long long>()
       << ',' << join(rec.at("invariant_factors")) << ',' << join(rec.at("snf")) << ','
       << rec.at("variety_count").get<long long>() << ',' << rec.at("aut_order").get<std::string>() << '\n';
  }
  return os.str();
}

}  // namespace binperm
