// skewlab command line: validation, analysis, constructions and sweeps for
// finite skew braces and set-theoretic Yang-Baxter solutions.
//
// Exit codes: 0 success, 1 validation failure, 2 parse failure,
// 3 resource cap exceeded.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "skewlab/enumerate.hpp"
#include "skewlab/families.hpp"
#include "skewlab/io.hpp"
#include "skewlab/solution.hpp"
#include "skewlab/subbrace.hpp"
#include "skewlab/sweeps.hpp"

namespace {

using namespace skewlab;

ElementSet parse_elems(int order, const std::string& csv) {
  ElementSet s(order);
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    int v;
    try {
      v = std::stoi(tok);
    } catch (const std::exception&) {
      throw ParseError("bad element index '" + tok + "'");
    }
    if (v < 0 || v >= order)
      throw ParseError("element index " + tok + " out of range");
    s.set(v);
  }
  return s;
}

int run(int argc, char** argv) {
  CLI::App app{"finite skew braces and Yang-Baxter solutions"};
  app.require_subcommand(1);

  // ---- validate ----
  auto* validate = app.add_subcommand("validate", "validate a JSON file");
  std::string v_kind, v_path;
  validate->add_option("kind", v_kind, "brace|solution")
      ->check(CLI::IsMember({"brace", "solution"}))
      ->required();
  validate->add_option("file", v_path)->required();
  validate->callback([&] {
    if (v_kind == "brace") {
      LoadedBrace lb = load_brace(v_path);
      std::cout << "valid brace of order " << lb.brace.order << "\n";
    } else {
      FiniteSolution s = load_solution(v_path);
      std::cout << "valid solution of size " << s.size
                << (is_involutive(s) ? " (involutive)" : "") << "\n";
    }
  });

  // ---- analyze ----
  auto* an = app.add_subcommand("analyze", "full invariant report");
  std::string an_path;
  bool an_json = false;
  an->add_option("file", an_path)->required();
  an->add_flag("--json", an_json, "emit JSON");
  an->callback([&] {
    AnalysisReport rep = analyze(load_brace(an_path).brace);
    std::cout << (an_json ? report_to_json(rep) : report_to_text(rep));
  });

  // ---- orbits ----
  auto* orb = app.add_subcommand("orbits", "λ- and θ-orbit of an element");
  std::string orb_path;
  int orb_elem = 0;
  orb->add_option("file", orb_path)->required();
  orb->add_option("--element", orb_elem, "element index")->required();
  orb->callback([&] {
    FiniteSkewBrace b = load_brace(orb_path).brace;
    if (orb_elem < 0 || orb_elem >= b.order)
      throw ParseError("element index out of range");
    std::cout << "lambda orbit " << lambda_orbit(b, orb_elem).to_string()
              << "\n"
              << "theta orbit  " << theta_orbit(b, orb_elem).to_string()
              << "\n"
              << "stab_lambda  " << stab_lambda(b, orb_elem).to_string()
              << "\n"
              << "stab_theta size " << stab_theta_size(b, orb_elem) << "\n";
  });

  // ---- subbraces ----
  auto* subs = app.add_subcommand("subbraces", "list all sub skew braces");
  std::string subs_path;
  subs->add_option("file", subs_path)->required();
  subs->callback([&] {
    FiniteSkewBrace b = load_brace(subs_path).brace;
    auto list = enumerate_subbraces(b);
    for (const SubBraceHandle& s : list) {
      std::cout << s.members.to_string() << "  order " << s.members.count();
      if (is_ideal(b, s.members))
        std::cout << "  ideal";
      else if (is_strong_left_ideal(b, s.members))
        std::cout << "  strong left ideal";
      else if (is_left_ideal(b, s.members))
        std::cout << "  left ideal";
      std::cout << "\n";
    }
    std::cout << list.size() << " subbraces\n";
  });

  // ---- index ----
  auto* idx = app.add_subcommand("index", "coset indices of a sub skew brace");
  std::string idx_path, idx_sub;
  idx->add_option("file", idx_path)->required();
  idx->add_option("--sub", idx_sub, "comma-separated generators")->required();
  idx->callback([&] {
    FiniteSkewBrace b = load_brace(idx_path).brace;
    SubBraceHandle a = subbrace_closure(b, parse_elems(b.order, idx_sub));
    std::cout << "subbrace " << a.members.to_string() << "\n"
              << "index_add " << index_add(b, a) << "\n"
              << "index_mul " << index_mul(b, a) << "\n";
  });

  // ---- sli ----
  auto* sli = app.add_subcommand(
      "sli", "strong left ideal of finite index inside a sub skew brace");
  std::string sli_path, sli_sub;
  sli->add_option("file", sli_path)->required();
  sli->add_option("--sub", sli_sub, "comma-separated generators")->required();
  sli->callback([&] {
    FiniteSkewBrace b = load_brace(sli_path).brace;
    SubBraceHandle a = subbrace_closure(b, parse_elems(b.order, sli_sub));
    ElementSet l = sli_in_subbrace(b, a);
    std::cout << "subbrace " << a.members.to_string() << "\n"
              << "sli      " << l.to_string() << "\n"
              << "index    " << coset_count(b.add, l) << "\n";
    if (is_two_sided(b)) {
      ElementSet i = ideal_in_subbrace_two_sided(b, a);
      std::cout << "ideal    " << i.to_string() << "\n";
    }
  });

  // ---- dietzmann ----
  auto* dz = app.add_subcommand("dietzmann",
                                "strong left ideal generated by elements");
  std::string dz_path, dz_elems;
  dz->add_option("file", dz_path)->required();
  dz->add_option("--elements", dz_elems, "comma-separated seeds")->required();
  dz->callback([&] {
    FiniteSkewBrace b = load_brace(dz_path).brace;
    ElementSet seeds = parse_elems(b.order, dz_elems);
    ElementSet d = dietzmann_closure(b, seeds);
    ElementSet s = strong_left_ideal_closure(b, seeds);
    std::cout << "dietzmann closure " << d.to_string() << " (order "
              << d.count() << ")\n"
              << "cross-check "
              << (d == s && is_strong_left_ideal(b, d) ? "ok" : "MISMATCH")
              << "\n";
  });

  // ---- to-solution ----
  auto* tosol = app.add_subcommand("to-solution",
                                   "associated solution r_B of a brace");
  std::string tosol_path, tosol_out;
  tosol->add_option("file", tosol_path)->required();
  tosol->add_option("--out", tosol_out, "output path (default stdout)");
  tosol->callback([&] {
    FiniteSolution s = brace_to_solution(load_brace(tosol_path).brace);
    if (tosol_out.empty())
      std::cout << solution_to_json_text(s);
    else
      save_solution(s, tosol_out);
  });

  // ---- solution ----
  auto* sol = app.add_subcommand("solution", "operations on solutions");
  std::string sol_op, sol_path, sol_out;
  sol->add_option("op", sol_op, "derived|retract|tower|decompose|atoms")
      ->check(CLI::IsMember({"derived", "retract", "tower", "decompose",
                             "atoms"}))
      ->required();
  sol->add_option("file", sol_path)->required();
  sol->add_option("--out", sol_out, "output path (default stdout)");
  sol->callback([&] {
    FiniteSolution s = load_solution(sol_path);
    if (sol_op == "derived" || sol_op == "retract") {
      FiniteSolution t = sol_op == "derived" ? derived_solution(s)
                                             : retract(s).solution;
      if (sol_out.empty())
        std::cout << solution_to_json_text(t);
      else
        save_solution(t, sol_out);
    } else if (sol_op == "tower") {
      for (int v : retract_tower(s)) std::cout << v << " ";
      std::cout << "\n";
    } else if (sol_op == "decompose") {
      std::vector<ElementSet> fs = brute_force_factors(s);
      for (const ElementSet& f : fs) std::cout << f.to_string() << "\n";
      std::cout << fs.size() << " decomposition factors\n";
    } else {
      Partition p = decomposition_atoms(s);
      std::cout << "atoms:";
      for (int blk = 0; blk < p.block_count; ++blk) {
        std::cout << " {";
        bool sep = false;
        for (int i = 0; i < p.size; ++i)
          if (p.block_id[i] == blk) {
            if (sep) std::cout << ",";
            std::cout << i;
            sep = true;
          }
        std::cout << "}";
      }
      std::cout << "\n";
    }
  });

  // ---- enumerate ----
  auto* en = app.add_subcommand("enumerate", "catalog of small braces");
  int en_max = 6;
  std::string en_out;
  en->add_option("--max-order", en_max)->required();
  en->add_option("--out", en_out, "output directory")->required();
  en->callback([&] {
    namespace fs = std::filesystem;
    fs::create_directories(en_out);
    std::vector<BraceCatalogEntry> cat = build_catalog(en_max);
    int i = 0;
    std::ostringstream index;
    for (const BraceCatalogEntry& e : cat) {
      std::ostringstream name;
      name << "brace_o" << e.order << "_" << i << ".json";
      save_brace(e.brace, (fs::path(en_out) / name.str()).string());
      index << name.str() << "\n";
      ++i;
    }
    std::ofstream(fs::path(en_out) / "catalog.txt") << index.str();
    std::cout << cat.size() << " braces written to " << en_out << "\n";
  });

  // ---- family ----
  auto* fm = app.add_subcommand("family", "the four symbolic families");
  std::string fm_name, fm_op, fm_g, fm_x, fm_b, fm_set, fm_claim;
  long long fm_radius = 100;
  std::size_t fm_cap = 10000;
  fm->add_option("name", fm_name, "cdinf|optriv-dinf|rosita|free2")
      ->check(CLI::IsMember({"cdinf", "optriv-dinf", "rosita", "free2"}))
      ->required();
  fm->add_option("op", fm_op, "lambda|theta|orbit|member|check")
      ->check(CLI::IsMember({"lambda", "theta", "orbit", "member", "check"}))
      ->required();
  fm->add_option("--g", fm_g, "acting element");
  fm->add_option("--b", fm_b, "second acting element (theta)");
  fm->add_option("--x", fm_x, "argument element");
  fm->add_option("--set", fm_set,
                 "ker_lambda|fix|soc|ann|lambda_f|theta_f|torsion_mul");
  fm->add_option("--claim", fm_claim, "claim id for 'check'");
  fm->add_option("--radius", fm_radius, "window radius");
  fm->add_option("--cap", fm_cap, "orbit size cap");
  fm->callback([&] {
    Family f = *family_from_name(fm_name);
    if (fm_op == "lambda") {
      if (fm_g.empty() || fm_x.empty())
        throw ParseError("lambda needs --g and --x");
      std::cout << format_element(fam_lambda(parse_element(f, fm_g),
                                             parse_element(f, fm_x)))
                << "\n";
    } else if (fm_op == "theta") {
      if (fm_g.empty() || fm_b.empty() || fm_x.empty())
        throw ParseError("theta needs --g, --b and --x");
      std::cout << format_element(fam_theta(parse_element(f, fm_g),
                                            parse_element(f, fm_b),
                                            parse_element(f, fm_x)))
                << "\n";
    } else if (fm_op == "orbit") {
      if (fm_x.empty()) throw ParseError("orbit needs --x");
      auto lo = fam_lambda_orbit(parse_element(f, fm_x), fm_cap);
      std::cout << "lambda orbit: ";
      if (!lo) {
        std::cout << "overflow (cap " << fm_cap << ")\n";
      } else {
        for (const FamValue& v : *lo) std::cout << format_element(v) << " ";
        std::cout << "(" << lo->size() << " elements)\n";
      }
      auto to = fam_theta_orbit(parse_element(f, fm_x), fm_cap);
      std::cout << "theta orbit:  ";
      if (!to) {
        std::cout << "overflow (cap " << fm_cap << ")\n";
      } else {
        for (const FamValue& v : *to) std::cout << format_element(v) << " ";
        std::cout << "(" << to->size() << " elements)\n";
      }
    } else if (fm_op == "member") {
      if (fm_x.empty() || fm_set.empty())
        throw ParseError("member needs --x and --set");
      auto ns = named_set_from_string(fm_set);
      if (!ns) throw ParseError("unknown set '" + fm_set + "'");
      std::cout << (fam_membership(*ns, parse_element(f, fm_x)) ? "yes"
                                                                : "no")
                << "\n";
    } else {
      if (fm_claim.empty()) throw ParseError("check needs --claim");
      WindowReport rep = fam_window_check(fm_claim, fm_radius, fm_cap);
      std::cout << rep.claim << ": checked " << rep.checked
                << " elements, " << rep.counterexamples
                << " counterexamples";
      if (!rep.ok()) std::cout << " (first: " << rep.first_counterexample
                               << ")";
      std::cout << "\n";
      if (!rep.ok()) throw ValidationError(Violation::IllDefined,
                                           "claim failed");
    }
  });

  // ---- sweep ----
  auto* sw = app.add_subcommand("sweep", "named verification suite");
  std::string sw_name;
  sw->add_option("suite", sw_name, "suite name or 'all'")->required();
  sw->callback([&] {
    std::vector<SweepResult> results;
    if (sw_name == "all")
      results = run_all_sweeps();
    else
      results.push_back(run_sweep(sw_name));
    bool all_pass = true;
    for (const SweepResult& r : results) {
      std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  ("
                << r.detail << ")\n";
      all_pass = all_pass && r.pass;
    }
    if (!all_pass)
      throw ValidationError(Violation::IllDefined, "sweep failed");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // bad usage is a parse failure
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const skewlab::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const skewlab::CapExceeded& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const skewlab::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
