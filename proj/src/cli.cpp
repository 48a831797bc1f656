#include "binperm/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>

#include "binperm/abelian_group.hpp"
#include "binperm/automorphisms.hpp"
#include "binperm/checks.hpp"
#include "binperm/companion.hpp"
#include "binperm/lattice.hpp"
#include "binperm/report.hpp"

namespace binperm::cli {

namespace {

using nlohmann::ordered_json;

std::string group_structure_str(int n) {
  std::string s = "C_2";
  if (n - 2 > 1) s += "^" + std::to_string(n - 2);
  return s + " x C_" + std::to_string(2 * n - 4);
}

ordered_json instance_json(const IdealFamilyInstance& inst) {
  ordered_json j;
  j["n"] = inst.n;
  j["colength"] = inst.colength.get_si();
  j["generators"] = ordered_json::array();
  for (const auto& g : inst.generators) j["generators"].push_back(g.str());
  j["groebner"] = ordered_json::array();
  for (const auto& g : inst.groebner.generators()) j["groebner"].push_back(g.str());
  j["lattice_gens"] = ordered_json::array();
  for (const auto& v : inst.lattice_gens) {
    ordered_json row = ordered_json::array();
    for (const auto& x : v) row.push_back(x.get_si());
    j["lattice_gens"].push_back(std::move(row));
  }
  j["lattice_ideal_gens"] = ordered_json::array();
  for (const auto& g : inst.lattice_ideal_gens) j["lattice_ideal_gens"].push_back(g.str());
  return j;
}

ordered_json matrix_json(const IntMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_si());
    rows.push_back(std::move(row));
  }
  return rows;
}

void print_dense(std::ostream& out, const std::vector<std::vector<int>>& m) {
  for (const auto& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << ' ';
      out << row[j];
    }
    out << '\n';
  }
}

std::vector<BasisMonomial> basis_in_order(const QuotientRing& q, const std::string& order) {
  if (order == "example") return example_basis_order(q.n());
  return q.basis();
}

int run_ideal(int n, const std::string& format, std::ostream& out) {
  IdealFamilyInstance inst = make_instance(n);
  if (format == "json") {
    out << instance_json(inst).dump(2) << '\n';
  } else {
    for (const auto& g : inst.generators) out << g.str() << '\n';
  }
  return 0;
}

int run_groebner(int n, bool from_scratch, const std::string& format, std::ostream& out) {
  std::vector<Polynomial> gens;
  if (from_scratch) {
    gens = reduce_basis(buchberger(family_generators(n))).generators();
  } else {
    gens = groebner_generators(n);
  }
  if (format == "json") {
    ordered_json j;
    j["n"] = n;
    j["from_scratch"] = from_scratch;
    j["generators"] = ordered_json::array();
    for (const auto& g : gens) j["generators"].push_back(g.str());
    out << j.dump(2) << '\n';
  } else {
    for (const auto& g : gens) out << g.str() << '\n';
  }
  return 0;
}

int run_basis(int n, const std::string& order, const std::string& format, std::ostream& out) {
  QuotientRing q(n);
  std::vector<BasisMonomial> basis = basis_in_order(q, order);
  if (format == "json") {
    ordered_json j;
    j["n"] = n;
    j["order"] = order;
    j["monomials"] = ordered_json::array();
    for (const auto& m : basis) j["monomials"].push_back(to_monomial(m, n).str());
    out << j.dump(2) << '\n';
  } else {
    for (const auto& m : basis) out << to_monomial(m, n).str() << '\n';
  }
  return 0;
}

int run_companion(int n, int var, bool reduced, const std::string& format, const std::string& order,
                  std::ostream& out) {
  QuotientRing q(n);
  std::vector<BasisMonomial> basis = basis_in_order(q, order);
  std::vector<int> vars;
  if (var == 0) {
    for (int j = 1; j <= n; ++j) vars.push_back(j);
  } else {
    vars.push_back(var);
  }

  ordered_json jout;
  if (format == "json") {
    jout["n"] = n;
    jout["reduced"] = reduced;
    jout["order"] = order;
    jout["matrices"] = ordered_json::array();
  }
  for (int j : vars) {
    if (format != "json" && vars.size() > 1) out << (reduced ? "P_" : "T_") << j << ":\n";
    if (reduced) {
      Permutation p = reduced_permutation(q, j, basis);
      if (format == "matrix") {
        std::vector<std::vector<int>> dense(p.degree(), std::vector<int>(p.degree(), 0));
        for (int r = 0; r < p.degree(); ++r) dense[r][p(r)] = 1;
        print_dense(out, dense);
      } else if (format == "cycles") {
        out << p.cycle_str() << '\n';
      } else if (format == "oneline") {
        out << p.oneline_str() << '\n';
      } else {
        ordered_json jm;
        jm["var"] = j;
        jm["images"] = ordered_json::array();
        for (int r = 0; r < p.degree(); ++r) jm["images"].push_back(p(r) + 1);
        jm["cycles"] = p.cycle_str();
        jout["matrices"].push_back(std::move(jm));
      }
    } else {
      CompanionMatrix t = full_matrix(q, j, basis);
      if (format == "matrix") {
        print_dense(out, t.dense());
      } else if (format == "oneline") {
        std::string s;
        for (int r = 0; r < t.size(); ++r) {
          if (r) s += ' ';
          s += std::to_string(t.row_image[r] + 1);
        }
        out << s << '\n';
      } else {
        ordered_json jm;
        jm["var"] = j;
        jm["images"] = ordered_json::array();
        for (int r = 0; r < t.size(); ++r) jm["images"].push_back(t.row_image[r] + 1);
        jout["matrices"].push_back(std::move(jm));
      }
    }
  }
  if (format == "json") out << jout.dump(2) << '\n';
  return 0;
}

int run_verify(int n, const std::vector<std::string>& which, std::ostream& out) {
  std::vector<CheckResult> results;
  auto want = [&](const std::string& tag) {
    if (which.empty()) return true;
    for (const auto& w : which)
      if (w == tag || w == "all") return true;
    return false;
  };
  bool need_ring = want("derangement") || want("commute") || want("cycles") || want("intertwine");
  std::unique_ptr<QuotientRing> q;
  if (need_ring) q = std::make_unique<QuotientRing>(n);

  if (want("groebner")) results.push_back(check_groebner(n));
  if (want("derangement")) results.push_back(check_derangement(*q));
  if (want("commute")) results.push_back(check_commute(*q));
  if (want("cycles")) results.push_back(check_cycles(*q));
  if (want("intertwine")) results.push_back(check_intertwine(*q));
  if (want("lattice")) results.push_back(check_lattice(n));

  bool all_pass = true;
  for (const auto& r : results) {
    out << (r.pass ? "ok   " : "FAIL ") << std::left << std::setw(12) << r.tag << ' ' << r.detail << '\n';
    all_pass = all_pass && r.pass;
  }
  out << "verify n=" << n << ": " << (all_pass ? "PASS" : "FAIL") << '\n';
  return all_pass ? 0 : 1;
}

int run_group(int n, bool do_closure, int max_n_closure, std::ostream& out, std::ostream& err) {
  long long order = Int(colength_of(n) - 1).get_si();
  out << "n = " << n << '\n';
  out << "|G_n| = " << order << '\n';
  out << "structure: " << group_structure_str(n) << '\n';
  bool pres = verify_presentation(n);
  out << "presentation: " << (pres ? "ok" : "FAIL") << '\n';
  int rc = pres ? 0 : 1;
  if (do_closure) {
    if (n > max_n_closure) {
      err << "group: closure refused for n > " << max_n_closure << " (raise --max-n-closure to override)\n";
      return 2;
    }
    QuotientRing q(n);
    std::vector<Permutation> gens;
    for (int j = 1; j <= n; ++j) gens.push_back(reduced_permutation(q, j));
    ClosureResult c = closure(gens);
    out << "closure order = " << c.order << '\n';
    out << "element orders:";
    for (auto& [o, cnt] : c.order_histogram) out << ' ' << o << ':' << cnt;
    out << '\n';
    auto print_factors = [&](const char* label, const std::vector<Int>& f) {
      out << label;
      for (const auto& v : f) out << ' ' << v.get_str();
      out << '\n';
    };
    print_factors("invariant factors:", c.invariant_factors);
    print_factors("invariant factors (relation lattice):", c.invariant_factors_relations);
    bool good = static_cast<long long>(c.order) == order && c.invariant_factors == expected_invariant_factors(n) &&
                c.invariant_factors_relations == expected_invariant_factors(n);
    if (!good) {
      out << "closure: MISMATCH with the abstract model\n";
      rc = 1;
    }
  }
  return rc;
}

int run_aut(int n, const std::string& table, const std::string& format, std::ostream& out, std::ostream& err) {
  if (table.empty()) {
    AutReport rep = aut_report(n);
    out << "n = " << rep.n << '\n';
    out << "G_n = " << group_structure_str(n) << '\n';
    out << "r = " << rep.r << ", s = " << rep.s << ", odd part = " << rep.m_odd << '\n';
    out << "Aut structure: " << rep.structure << '\n';
    out << "|Aut(G_n)| = " << rep.order.get_str() << '\n';
    return 0;
  }
  auto dots = table.find("..");
  if (dots == std::string::npos) {
    err << "aut: --table expects a range A..B\n";
    return 2;
  }
  int a = 0, b = 0;
  try {
    a = std::stoi(table.substr(0, dots));
    b = std::stoi(table.substr(dots + 2));
  } catch (const std::exception&) {
    err << "aut: --table expects a range A..B\n";
    return 2;
  }
  if (a < 3 || b < a) {
    err << "aut: need 3 <= A <= B\n";
    return 2;
  }
  if (format == "csv") {
    out << "n,group,aut_structure,aut_order\n";
    for (int k = a; k <= b; ++k) {
      AutReport rep = aut_report(k);
      out << k << ',' << group_structure_str(k) << ',' << rep.structure << ',' << rep.order.get_str() << '\n';
    }
  } else {
    std::size_t wg = 0, ws = 0;
    std::vector<AutReport> reps;
    for (int k = a; k <= b; ++k) {
      reps.push_back(aut_report(k));
      wg = std::max(wg, group_structure_str(k).size());
      ws = std::max(ws, reps.back().structure.size());
    }
    out << std::left << std::setw(4) << "n" << std::setw(static_cast<int>(wg) + 2) << "G_n"
        << std::setw(static_cast<int>(ws) + 2) << "Aut(G_n)" << "|Aut(G_n)|" << '\n';
    for (const auto& rep : reps) {
      out << std::left << std::setw(4) << rep.n << std::setw(static_cast<int>(wg) + 2)
          << group_structure_str(rep.n) << std::setw(static_cast<int>(ws) + 2) << rep.structure
          << rep.order.get_str() << '\n';
    }
  }
  return 0;
}

int run_lattice_snf(int n, bool as_json, bool with_transforms, std::ostream& out) {
  IntMatrix r = relation_matrix(n);
  SnfResult s = snf(r);
  if (as_json) {
    ordered_json j;
    j["n"] = n;
    j["snf"] = ordered_json::array();
    for (const auto& d : s.diagonal()) j["snf"].push_back(d.get_si());
    j["det"] = det_via_snf(r).get_si();
    if (with_transforms) {
      j["u"] = matrix_json(s.U);
      j["v"] = matrix_json(s.V);
    }
    out << j.dump(2) << '\n';
  } else {
    out << "snf diagonal:";
    for (const auto& d : s.diagonal()) out << ' ' << d.get_str();
    out << '\n';
    out << "det = " << det_via_snf(r).get_str() << '\n';
    if (with_transforms) {
      out << "U:\n" << s.U.str();
      out << "V:\n" << s.V.str();
    }
  }
  return 0;
}

int run_lattice_variety(int n, bool list, std::ostream& out) {
  std::vector<VarietyPoint> pts = enumerate_variety(n);
  out << "count = " << pts.size() << '\n';
  if (list) {
    for (const auto& p : pts) {
      for (std::size_t i = 0; i < p.exps.size(); ++i) {
        if (i) out << ' ';
        out << p.exps[i];
      }
      out << '\n';
    }
  }
  return 0;
}

int run_report(const ReportOptions& opts, const std::string& path, const std::string& format, std::ostream& out,
               std::ostream& err) {
  ordered_json rep = build_report(opts);
  std::ofstream file(path);
  if (!file) {
    err << "report: cannot open " << path << " for writing\n";
    return 2;
  }
  if (format == "csv") {
    file << report_to_csv(rep);
  } else {
    file << rep.dump(2) << '\n';
  }
  bool pass = rep.at("pass").get<bool>();
  out << "report " << opts.n_min << ".." << opts.n_max << " -> " << path << " (" << (pass ? "PASS" : "FAIL") << ")\n";
  return pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact companion-matrix laboratory for the symmetric binomial ideal family"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  // ideal gens
  auto* ideal = app.add_subcommand("ideal", "the defining ideal");
  ideal->require_subcommand(1);
  auto* ideal_gens = ideal->add_subcommand("gens", "print the generators f_i");
  int ideal_n = 0;
  std::string ideal_format = "text";
  ideal_gens->add_option("--n", ideal_n, "number of variables")->required()->check(CLI::Range(3, 1 << 20));
  ideal_gens->add_option("--format", ideal_format)->check(CLI::IsMember({"text", "json"}));

  // groebner
  auto* groeb = app.add_subcommand("groebner", "print the lex Groebner basis S_n");
  int groeb_n = 0;
  bool from_scratch = false;
  std::string groeb_format = "text";
  groeb->add_option("--n", groeb_n)->required()->check(CLI::Range(3, 1 << 20));
  groeb->add_flag("--from-scratch", from_scratch, "run Buchberger on the raw generators (n <= 7)");
  groeb->add_option("--format", groeb_format)->check(CLI::IsMember({"text", "json"}));

  // basis
  auto* basis = app.add_subcommand("basis", "print the quotient monomial basis");
  int basis_n = 0;
  std::string basis_format = "text", basis_order = "canonical";
  basis->add_option("--n", basis_n)->required()->check(CLI::Range(3, 1 << 20));
  basis->add_option("--format", basis_format)->check(CLI::IsMember({"text", "json"}));
  basis->add_option("--order", basis_order)->check(CLI::IsMember({"canonical", "example"}));

  // companion
  auto* comp = app.add_subcommand("companion", "companion matrices T_j and reduced permutations P_j");
  int comp_n = 0, comp_var = 0;
  bool comp_reduced = false;
  std::string comp_format = "matrix", comp_order = "canonical";
  comp->add_option("--n", comp_n)->required()->check(CLI::Range(3, 1 << 20));
  comp->add_option("--var", comp_var, "variable index (default: all)")->check(CLI::Range(1, 1 << 20));
  comp->add_flag("--reduced", comp_reduced, "reduced matrix on B' instead of the full matrix");
  comp->add_option("--format", comp_format)->check(CLI::IsMember({"matrix", "cycles", "oneline", "json"}));
  comp->add_option("--order", comp_order)->check(CLI::IsMember({"canonical", "example"}));

  // verify
  auto* verify = app.add_subcommand("verify", "machine-check the structural claims");
  int verify_n = 0;
  bool v_all = false, v_groebner = false, v_commute = false, v_derangement = false, v_cycles = false,
       v_intertwine = false, v_lattice = false;
  verify->add_option("--n", verify_n)->required()->check(CLI::Range(3, 1 << 20));
  verify->add_flag("--all", v_all);
  verify->add_flag("--groebner", v_groebner);
  verify->add_flag("--commute", v_commute);
  verify->add_flag("--derangement", v_derangement);
  verify->add_flag("--cycles", v_cycles);
  verify->add_flag("--intertwine", v_intertwine);
  verify->add_flag("--lattice", v_lattice);

  // group
  auto* group = app.add_subcommand("group", "the abstract group G_n and the closure of the P_j");
  int group_n = 0, group_cap = 10;
  bool group_closure = false;
  group->add_option("--n", group_n)->required()->check(CLI::Range(3, 1 << 20));
  group->add_flag("--closure", group_closure, "BFS closure of <P_1..P_n> with invariant factors");
  group->add_option("--max-n-closure", group_cap, "memory guard for --closure (default 10)");

  // aut
  auto* aut = app.add_subcommand("aut", "automorphism group of G_n");
  int aut_n = 0;
  std::string aut_table, aut_format = "text";
  aut->add_option("--n", aut_n)->check(CLI::Range(3, 1 << 20));
  aut->add_option("--table", aut_table, "range A..B of rows");
  aut->add_option("--format", aut_format)->check(CLI::IsMember({"text", "csv"}));

  // lattice
  auto* lattice = app.add_subcommand("lattice", "lattice-ideal machinery");
  lattice->require_subcommand(1);
  auto* lat_snf = lattice->add_subcommand("snf", "Smith normal form of the relation matrix");
  int snf_n = 0;
  bool snf_json = false, snf_transforms = false;
  lat_snf->add_option("--n", snf_n)->required()->check(CLI::Range(3, 1 << 20));
  lat_snf->add_flag("--json", snf_json);
  lat_snf->add_flag("--with-transforms", snf_transforms, "also emit U and V");
  auto* lat_var = lattice->add_subcommand("variety", "points of V(I_{L_n}) as residue vectors");
  int var_n = 0;
  bool var_list = false;
  lat_var->add_option("--n", var_n)->required()->check(CLI::Range(3, 1 << 20));
  lat_var->add_flag("--list", var_list);
  auto* lat_verify = lattice->add_subcommand("verify", "run the lattice checks");
  int lat_verify_n = 0;
  lat_verify->add_option("--n", lat_verify_n)->required()->check(CLI::Range(3, 1 << 20));

  // report
  auto* report = app.add_subcommand("report", "sweep a range of n and write a report file");
  ReportOptions ropts;
  std::string report_path, report_format = "json";
  report->add_option("--n-min", ropts.n_min)->required()->check(CLI::Range(3, 1 << 20));
  report->add_option("--n-max", ropts.n_max)->required()->check(CLI::Range(3, 1 << 20));
  report->add_option("--out", report_path)->required();
  report->add_option("--format", report_format)->check(CLI::IsMember({"json", "csv"}));
  report->add_option("--max-n-closure", ropts.max_n_closure);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (ideal_gens->parsed()) return run_ideal(ideal_n, ideal_format, out);
    if (groeb->parsed()) {
      if (from_scratch && groeb_n > 7) {
        err << "groebner: --from-scratch is guarded to n <= 7\n";
        return 2;
      }
      return run_groebner(groeb_n, from_scratch, groeb_format, out);
    }
    if (basis->parsed()) {
      if (basis_order == "example" && basis_n != 3 && basis_n != 4) {
        err << "basis: --order example exists only for n = 3 and n = 4\n";
        return 2;
      }
      return run_basis(basis_n, basis_order, basis_format, out);
    }
    if (comp->parsed()) {
      if (comp_order == "example" && comp_n != 3 && comp_n != 4) {
        err << "companion: --order example exists only for n = 3 and n = 4\n";
        return 2;
      }
      if (comp_var > comp_n) {
        err << "companion: --var out of range\n";
        return 2;
      }
      if (comp_format == "cycles" && !comp_reduced) {
        err << "companion: --format cycles requires --reduced\n";
        return 2;
      }
      return run_companion(comp_n, comp_var, comp_reduced, comp_format, comp_order, out);
    }
    if (verify->parsed()) {
      std::vector<std::string> which;
      if (v_all) which.push_back("all");
      if (v_groebner) which.push_back("groebner");
      if (v_commute) which.push_back("commute");
      if (v_derangement) which.push_back("derangement");
      if (v_cycles) which.push_back("cycles");
      if (v_intertwine) which.push_back("intertwine");
      if (v_lattice) which.push_back("lattice");
      return run_verify(verify_n, which, out);
    }
    if (group->parsed()) return run_group(group_n, group_closure, group_cap, out, err);
    if (aut->parsed()) {
      if ((aut_n == 0) == aut_table.empty()) {
        err << "aut: give exactly one of --n or --table\n";
        return 2;
      }
      return run_aut(aut_n, aut_table, aut_format, out, err);
    }
    if (lat_snf->parsed()) return run_lattice_snf(snf_n, snf_json, snf_transforms, out);
    if (lat_var->parsed()) return run_lattice_variety(var_n, var_list, out);
    if (lat_verify->parsed()) {
      CheckResult r = check_lattice(lat_verify_n);
      out << (r.pass ? "ok   " : "FAIL ") << r.tag << ' ' << r.detail << '\n';
      return r.pass ? 0 : 1;
    }
    if (report->parsed()) return run_report(ropts, report_path, report_format, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace binperm::cli
