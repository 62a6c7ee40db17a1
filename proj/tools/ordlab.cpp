// ordlab: command-line entry point for the ordinal/combinatorics laboratory.
//
// Verbs (all emit a single JSON document by default; --format text gives a
// short human rendering, --format csv is available for `hardy table`):
//   ordinal cmp|fund|to-int|from-int|add|coeff-bound
//   hardy [table]
//   goodstein [shift|rep]
//   ph-arrow | ph-witness | sigma | ph-indicator | ind-g
//   km-arrow | km-witness
//   worm run
//   trees count|otter|embeds|list
//   fkt check|explore
//   regal | kiralic
//
// Exit codes: 0 for computed verdicts (including false, truncated and
// fuel-exhausted outcomes), 2 when a budget refused the computation, 64 for
// usage errors. Identical argv yields byte-identical output, regardless of
// --jobs.

#include "ordlab/goodstein.hpp"
#include "ordlab/hardy.hpp"
#include "ordlab/nat.hpp"
#include "ordlab/ordinal.hpp"
#include "ordlab/ramsey.hpp"
#include "ordlab/trees.hpp"
#include "ordlab/verdict.hpp"
#include "ordlab/worm.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace ordlab;

namespace {

constexpr uint64_t kDefaultFuel = 1000000;
constexpr uint64_t kDefaultBudget = 10000000;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

nat parse_nat_arg(const std::string& text, const std::string& flag) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw usage_error(flag + ": expected a decimal natural, got '" + text +
                      "'");
  }
  return nat(text);
}

worm_word parse_worm_arg(const std::string& text) {
  worm_word w;
  if (text.empty()) return w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    w.push_back(to_u64(parse_nat_arg(item, "--worm")));
  }
  return w;
}

std::vector<uint64_t> parse_set_arg(const std::string& text,
                                    const std::string& flag) {
  std::vector<uint64_t> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(to_u64(parse_nat_arg(item, flag)));
  }
  return out;
}

std::vector<ordinal> parse_ordinal_list(const std::string& text) {
  std::vector<ordinal> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(ordinal::parse(item));
  }
  return out;
}

json verdict_json(verdict v) {
  switch (v) {
    case verdict::yes:
      return json(true);
    case verdict::no:
      return json(false);
    default:
      return json("budget-exceeded");
  }
}

json coloring_json(const coloring& F) {
  json j;
  j["domain"] = {F.domain.lo, F.domain.hi};
  j["arity"] = F.arity;
  j["colors"] = F.colors;
  j["bySubset"] = F.by_subset;
  return j;
}

json regressive_json(const regressive_fn& f) {
  json j;
  j["domain"] = {f.domain.lo, f.domain.hi};
  j["arity"] = f.arity;
  j["bySubset"] = f.by_subset;
  return j;
}

json set_tree_json(const set_tree& t) {
  json j;
  j["support"] = t.support;
  j["parent"] = t.parent;
  return j;
}

json tree_list_json(const std::vector<finite_tree>& ts) {
  json j = json::array();
  for (const finite_tree& t : ts) j.push_back(t.encoding());
  return j;
}

int exit_for(verdict v) { return v == verdict::budget_exceeded ? 2 : 0; }

// Printed result of one dispatch: a JSON document (always built, even in
// text mode, since text rendering reads from it) plus the exit code.
struct outcome {
  json doc;
  int code = 0;
  std::string text;  // --format text rendering
};

std::string ordering_str(ordering o) {
  return o == ordering::lt ? "LT" : o == ordering::eq ? "EQ" : "GT";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic laboratory for ordinals, Goodstein "
               "sequences, Ramsey-type deciders, worms and tree embeddings"};
  app.fallthrough();  // global flags (--format, --jobs) work after any verb
  app.require_subcommand(1);

  std::string format = "json";
  app.add_option("--format", format, "output format: json|text|csv")
      ->capture_default_str();
  unsigned jobs = 1;
  app.add_option("--jobs", jobs, "worker threads for universal checks")
      ->capture_default_str();

  // --- ordinal
  auto* c_ord = app.add_subcommand("ordinal", "Cantor normal form toolkit");
  c_ord->require_subcommand(1);
  std::string arg_a, arg_b, arg_ord, arg_n = "0";
  uint64_t arg_base = 2;
  auto* c_cmp = c_ord->add_subcommand("cmp", "compare two ordinals");
  c_cmp->add_option("--a", arg_a, "left ordinal")->required();
  c_cmp->add_option("--b", arg_b, "right ordinal")->required();
  auto* c_fund = c_ord->add_subcommand("fund", "fundamental sequence member");
  c_fund->add_option("--ordinal", arg_ord, "the ordinal")->required();
  c_fund->add_option("--n", arg_n, "sequence index")->required();
  auto* c_toint = c_ord->add_subcommand("to-int", "evaluate at w := base");
  c_toint->add_option("--ordinal", arg_ord, "the ordinal")->required();
  c_toint->add_option("--base", arg_base, "base (>= 2, > coefficient bound)")
      ->required();
  auto* c_fromint =
      c_ord->add_subcommand("from-int", "hereditary representation, base -> w");
  c_fromint->add_option("--n", arg_n, "the natural")->required();
  c_fromint->add_option("--base", arg_base, "base (>= 2)")->required();
  auto* c_add = c_ord->add_subcommand("add", "add a finite natural");
  c_add->add_option("--ordinal", arg_ord, "the ordinal")->required();
  c_add->add_option("--n", arg_n, "the natural to add")->required();
  auto* c_coeff =
      c_ord->add_subcommand("coeff-bound", "largest coefficient anywhere");
  c_coeff->add_option("--ordinal", arg_ord, "the ordinal")->required();

  // --- hardy
  auto* c_hardy = app.add_subcommand("hardy", "Hardy hierarchy evaluation");
  c_hardy->require_subcommand(0, 1);
  uint64_t arg_fuel = kDefaultFuel;
  bool arg_trace = false;
  c_hardy->add_option("--ordinal", arg_ord, "the index ordinal");
  c_hardy->add_option("--n", arg_n, "the argument");
  c_hardy->add_option("--fuel", arg_fuel, "rule-application budget")
      ->capture_default_str();
  c_hardy->add_flag("--trace", arg_trace, "emit the visited (ordinal, n) states");
  std::string arg_ordinals;
  uint64_t arg_nmax = 4;
  std::string arg_out;
  auto* c_htable =
      c_hardy->add_subcommand("table", "growth table for a list of ordinals");
  c_htable->add_option("--ordinals", arg_ordinals,
                       "comma-separated ordinal list (may be empty)");
  c_htable->add_option("--n-max", arg_nmax, "largest argument n")
      ->capture_default_str();
  c_htable->add_option("--fuel", arg_fuel, "per-cell fuel")
      ->capture_default_str();
  c_htable->add_option("--out", arg_out, "write output to this file");

  // --- goodstein
  auto* c_good = app.add_subcommand("goodstein", "Goodstein sequences");
  c_good->require_subcommand(0, 1);
  std::string arg_m = "0", arg_f = "classic";
  uint64_t arg_max_steps = 100;
  c_good->add_option("--m", arg_m, "start value");
  c_good->add_option("--f", arg_f,
                     "base schedule: classic|const:B|affine:Q,R|table:V0,V1,...")
      ->capture_default_str();
  c_good->add_option("--max-steps", arg_max_steps, "largest step index kept")
      ->capture_default_str();
  std::string arg_from_str = "2", arg_to_str = "2";
  auto* c_shift = c_good->add_subcommand("shift", "hereditary base shift");
  c_shift->add_option("--n", arg_n, "the natural")->required();
  c_shift->add_option("--from", arg_from_str, "source base (>= 2)")->required();
  c_shift->add_option("--to", arg_to_str, "target base (>= source)")->required();
  auto* c_rep = c_good->add_subcommand("rep", "complete base representation");
  c_rep->add_option("--n", arg_n, "the natural")->required();
  c_rep->add_option("--base", arg_base, "base (>= 2)")->required();

  // --- ramsey family
  uint64_t arg_a1 = 0, arg_a2 = 0, arg_bval = 1, arg_c = 1, arg_d = 1;
  uint64_t arg_budget = kDefaultBudget;
  auto* c_pharrow = app.add_subcommand("ph-arrow", "decide the partition arrow");
  c_pharrow->add_option("--a1", arg_a1, "interval start")->required();
  c_pharrow->add_option("--a2", arg_a2, "interval end (inclusive)")->required();
  c_pharrow->add_option("--b", arg_bval, "least homogeneous size")->required();
  c_pharrow->add_option("--c", arg_c, "subset arity")->required();
  c_pharrow->add_option("--d", arg_d, "number of colors")->required();
  c_pharrow->add_option("--budget", arg_budget, "coloring budget")
      ->capture_default_str();
  auto* c_phwit =
      app.add_subcommand("ph-witness", "least interval end making the arrow true");
  c_phwit->add_option("--a1", arg_a1, "interval start")->required();
  c_phwit->add_option("--b", arg_bval, "least homogeneous size")->required();
  c_phwit->add_option("--c", arg_c, "subset arity")->required();
  c_phwit->add_option("--d", arg_d, "number of colors")->required();
  c_phwit->add_option("--budget", arg_budget, "coloring budget")
      ->capture_default_str();
  uint64_t arg_nsmall = 1;
  auto* c_sigma = app.add_subcommand("sigma", "least m with [0,m] ->* (n+1)^n_n");
  c_sigma->add_option("--n", arg_nsmall, "parameter n (>= 1)")->required();
  c_sigma->add_option("--budget", arg_budget, "coloring budget")
      ->capture_default_str();
  uint64_t arg_x = 0, arg_y = 0;
  auto* c_phind =
      app.add_subcommand("ph-indicator", "largest z with [x,y] ->* (z+1)^z_z");
  c_phind->add_option("--x", arg_x, "interval start")->required();
  c_phind->add_option("--y", arg_y, "interval end (inclusive)")->required();
  c_phind->add_option("--budget", arg_budget, "coloring budget")
      ->capture_default_str();
  auto* c_indg =
      app.add_subcommand("ind-g", "least y with ph-indicator(x, y) > n");
  c_indg->add_option("--x", arg_x, "interval start")->required();
  c_indg->add_option("--n", arg_nsmall, "threshold")->required();
  c_indg->add_option("--budget", arg_budget, "coloring budget")
      ->capture_default_str();
  uint64_t arg_kval = 1;
  auto* c_kmarrow =
      app.add_subcommand("km-arrow", "decide the regressive-function arrow");
  c_kmarrow->add_option("--a", arg_a1, "interval start")->required();
  c_kmarrow->add_option("--b", arg_a2, "interval end (inclusive)")->required();
  c_kmarrow->add_option("--k", arg_kval, "min-homogeneous size")->required();
  c_kmarrow->add_option("--n", arg_nsmall, "subset arity")->required();
  c_kmarrow->add_option("--budget", arg_budget, "function budget")
      ->capture_default_str();
  auto* c_kmwit = app.add_subcommand(
      "km-witness", "least interval end making the regressive arrow true");
  c_kmwit->add_option("--a", arg_a1, "interval start")->required();
  c_kmwit->add_option("--k", arg_kval, "min-homogeneous size")->required();
  c_kmwit->add_option("--n", arg_nsmall, "subset arity")->required();
  c_kmwit->add_option("--budget", arg_budget, "function budget")
      ->capture_default_str();

  // --- worm
  auto* c_worm = app.add_subcommand("worm", "the worm battle");
  c_worm->require_subcommand(1);
  std::string arg_worm;
  uint64_t arg_trace_max_len = 64;
  auto* c_wrun = c_worm->add_subcommand("run", "battle a worm until empty");
  c_wrun->add_option("--worm", arg_worm,
                     "comma-separated entries, e.g. \"1,0,1\" (empty allowed)");
  c_wrun->add_option("--fuel", arg_fuel, "step budget")->capture_default_str();
  c_wrun->add_flag("--trace", arg_trace, "emit the visited worms");
  c_wrun->add_option("--trace-max-len", arg_trace_max_len,
                     "worms longer than this are emitted as a length only")
      ->capture_default_str();

  // --- trees
  auto* c_trees = app.add_subcommand("trees", "finite rooted trees");
  c_trees->require_subcommand(1);
  uint64_t arg_size = 1;
  bool arg_upto = false;
  auto* c_tcount = c_trees->add_subcommand("count", "isomorphism-class count");
  c_tcount->add_option("--n", arg_size, "node count (>= 1)")->required();
  c_tcount->add_flag("--upto", arg_upto, "emit all counts 1..n");
  uint64_t arg_maxi = 60;
  auto* c_otter =
      c_trees->add_subcommand("otter", "growth-constant estimate and threshold");
  c_otter->add_option("--max-i", arg_maxi, "estimator index (>= 10)")
      ->capture_default_str();
  std::string arg_s, arg_t;
  auto* c_embeds =
      c_trees->add_subcommand("embeds", "inf-preserving embeddability");
  c_embeds->add_option("--s", arg_s, "candidate subtree, nested parens")
      ->required();
  c_embeds->add_option("--t", arg_t, "host tree, nested parens")->required();
  auto* c_tlist = c_trees->add_subcommand("list", "enumerate all trees of a size");
  c_tlist->add_option("--n", arg_size, "node count (1..12)")->required();

  // --- fkt
  auto* c_fkt = app.add_subcommand("fkt", "bounded bad-sequence statements");
  c_fkt->require_subcommand(1);
  uint64_t arg_K = 1, arg_M = 1;
  std::string arg_fbound = "0";
  auto* c_fcheck = c_fkt->add_subcommand(
      "check", "is every bad sequence with |T_i| <= K + f(i) of length <= M?");
  c_fcheck->add_option("--K", arg_K, "base size allowance (>= 1)")->required();
  c_fcheck->add_option("--f", arg_fbound, "size bound: 0|log:N/D|log:X.Y|table:V1,...")
      ->capture_default_str();
  c_fcheck->add_option("--M", arg_M, "claimed length bound")->required();
  c_fcheck->add_option("--budget", arg_budget, "DFS state budget")
      ->capture_default_str();
  auto* c_fexplore =
      c_fkt->add_subcommand("explore", "search for the longest bad sequence");
  c_fexplore->add_option("--K", arg_K, "base size allowance (>= 1)")->required();
  c_fexplore->add_option("--f", arg_fbound, "size bound: 0|log:N/D|log:X.Y|table:V1,...")
      ->capture_default_str();
  c_fexplore->add_option("--budget", arg_budget, "DFS state budget")
      ->capture_default_str();

  // --- regal / kiralic
  std::string arg_set;
  int64_t arg_kflag = -1;
  auto* c_regal = app.add_subcommand("regal", "regal indicator / decider");
  c_regal->add_option("--a", arg_a1, "interval start");
  c_regal->add_option("--b", arg_a2, "interval end (inclusive)");
  c_regal->add_option("--set", arg_set, "explicit ascending support, e.g. 0,1,3");
  c_regal->add_option("--k", arg_kflag,
                      "decide k-regality instead of computing the indicator");
  c_regal->add_option("--budget", arg_budget, "tree-enumeration budget")
      ->capture_default_str();
  auto* c_kiralic = app.add_subcommand("kiralic", "kiralic indicator / decider");
  c_kiralic->add_option("--a", arg_a1, "interval start");
  c_kiralic->add_option("--b", arg_a2, "interval end (inclusive)");
  c_kiralic->add_option("--set", arg_set, "explicit ascending support");
  c_kiralic->add_option("--k", arg_kflag,
                        "decide k-kirality instead of computing the indicator");
  c_kiralic->add_option("--budget", arg_budget, "tree-enumeration budget")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 64;
  }

  outcome out;
  try {
    if (format != "json" && format != "text" && format != "csv") {
      throw usage_error("--format: expected json, text or csv");
    }
    bool csv_ok = false;  // only `hardy table` may use --format csv

    if (c_cmp->parsed()) {
      ordinal a = ordinal::parse(arg_a), b = ordinal::parse(arg_b);
      std::string r = ordering_str(compare(a, b));
      out.doc = {{"verb", "ordinal cmp"}, {"paper_def", "§2.2"},
                 {"a", a.str()},          {"b", b.str()},
                 {"result", r}};
      out.text = a.str() + " vs " + b.str() + ": " + r;
    } else if (c_fund->parsed()) {
      ordinal l = ordinal::parse(arg_ord);
      nat n = parse_nat_arg(arg_n, "--n");
      ordinal r = fundamental(l, n);
      out.doc = {{"verb", "ordinal fund"}, {"paper_def", "§2.2"},
                 {"ordinal", l.str()},     {"n", decimal(n)},
                 {"result", r.str()}};
      out.text = l.str() + "[" + decimal(n) + "] = " + r.str();
    } else if (c_toint->parsed()) {
      ordinal a = ordinal::parse(arg_ord);
      nat v = to_integer(a, arg_base);
      out.doc = {{"verb", "ordinal to-int"}, {"paper_def", "Def A.8(2)"},
                 {"ordinal", a.str()},       {"base", arg_base},
                 {"value", decimal(v)}};
      out.text = a.str() + " at w=" + std::to_string(arg_base) + " is " +
                 decimal(v);
    } else if (c_fromint->parsed()) {
      nat n = parse_nat_arg(arg_n, "--n");
      ordinal a = from_integer(n, arg_base);
      out.doc = {{"verb", "ordinal from-int"}, {"paper_def", "Def A.8(3)"},
                 {"n", decimal(n)},            {"base", arg_base},
                 {"ordinal", a.str()}};
      out.text = decimal(n) + " in hereditary base " +
                 std::to_string(arg_base) + " is " + a.str();
    } else if (c_add->parsed()) {
      ordinal a = ordinal::parse(arg_ord);
      nat n = parse_nat_arg(arg_n, "--n");
      ordinal r = add_nat(a, n);
      out.doc = {{"verb", "ordinal add"}, {"paper_def", "§2.2"},
                 {"ordinal", a.str()},    {"n", decimal(n)},
                 {"result", r.str()}};
      out.text = a.str() + " + " + decimal(n) + " = " + r.str();
    } else if (c_coeff->parsed()) {
      ordinal a = ordinal::parse(arg_ord);
      nat v = coefficient_bound(a);
      out.doc = {{"verb", "ordinal coeff-bound"}, {"paper_def", "Def A.7"},
                 {"ordinal", a.str()},            {"value", decimal(v)}};
      out.text = "C(" + a.str() + ") = " + decimal(v);
    } else if (c_htable->parsed()) {
      csv_ok = true;
      if (arg_nmax < 1) throw usage_error("--n-max must be >= 1");
      if (arg_fuel < 1) throw usage_error("--fuel must be >= 1");
      std::vector<ordinal> ords = parse_ordinal_list(arg_ordinals);
      auto rows = growth_table(ords, arg_nmax, arg_fuel);
      std::string payload;
      if (format == "csv" || format == "text") {
        payload = growth_table_csv(rows);
        out.text = payload;
      } else {
        json jrows = json::array();
        for (const auto& r : rows) {
          json c = {{"ordinal", r.alpha.str()},
                    {"n", r.n},
                    {"value", r.result.value ? json(decimal(*r.result.value))
                                             : json(nullptr)},
                    {"steps", r.result.steps},
                    {"status", r.result.value ? "ok" : "fuel-exhausted"}};
          jrows.push_back(std::move(c));
        }
        out.doc = {{"verb", "hardy table"}, {"paper_def", "Thm 2.8"},
                   {"nMax", arg_nmax},      {"fuel", arg_fuel},
                   {"rows", std::move(jrows)}};
        payload = out.doc.dump(2) + "\n";
      }
      if (!arg_out.empty()) {
        std::ofstream f(arg_out, std::ios::binary);
        if (!f || !(f << payload) || !f.flush()) {
          std::cerr << "i/o failure writing " << arg_out << "\n";
          return 1;
        }
        return 0;
      }
      if (format != "json") {
        std::cout << payload;
        return 0;
      }
    } else if (c_hardy->parsed()) {
      if (arg_ord.empty()) throw usage_error("--ordinal is required");
      if (arg_fuel < 1) throw usage_error("--fuel must be >= 1");
      ordinal a = ordinal::parse(arg_ord);
      nat n = parse_nat_arg(arg_n, "--n");
      hardy_result r = hardy_eval(a, n, arg_fuel);
      out.doc = {{"verb", "hardy"},
                 {"paper_def", "Def 2.6"},
                 {"ordinal", a.str()},
                 {"n", decimal(n)},
                 {"fuel", arg_fuel},
                 {"value", r.value ? json(decimal(*r.value)) : json(nullptr)},
                 {"steps", r.steps},
                 {"status", r.value ? "ok" : "fuel-exhausted"}};
      if (arg_trace) {
        json jt = json::array();
        for (const auto& [o, v] : hardy_trace(a, n, arg_fuel)) {
          jt.push_back({{"ordinal", o.str()}, {"n", decimal(v)}});
        }
        out.doc["trace"] = std::move(jt);
      }
      out.text = "H_" + a.str() + "(" + decimal(n) + ") = " +
                 (r.value ? decimal(*r.value) : "fuel-exhausted") + " (" +
                 std::to_string(r.steps) + " steps)";
    } else if (c_shift->parsed()) {
      nat n = parse_nat_arg(arg_n, "--n");
      uint64_t from = to_u64(parse_nat_arg(arg_from_str, "--from"));
      uint64_t to = to_u64(parse_nat_arg(arg_to_str, "--to"));
      nat v = base_shift(n, from, to);
      out.doc = {{"verb", "goodstein shift"}, {"paper_def", "Def A.8(1)"},
                 {"n", decimal(n)},           {"from", from},
                 {"to", to},                  {"value", decimal(v)}};
      out.text = "S(" + decimal(n) + ", " + std::to_string(from) + " -> " +
                 std::to_string(to) + ") = " + decimal(v);
    } else if (c_rep->parsed()) {
      nat n = parse_nat_arg(arg_n, "--n");
      base_rep rep = complete_rep(n, arg_base);
      out.doc = {{"verb", "goodstein rep"},
                 {"paper_def", "App. A (complete b-representation)"},
                 {"n", decimal(n)},
                 {"base", arg_base},
                 {"rep", rep_str(rep)}};
      out.text = decimal(n) + " = " + rep_str(rep);
    } else if (c_good->parsed()) {
      if (arg_max_steps < 1) throw usage_error("--max-steps must be >= 1");
      nat m = parse_nat_arg(arg_m, "--m");
      base_function f = base_function::parse(arg_f);
      auto run = goodstein_run(m, f, arg_max_steps);
      json jrows = json::array();
      for (const auto& r : run.rows) {
        jrows.push_back({{"i", r.index},
                         {"base", r.base},
                         {"value", decimal(r.value)},
                         {"ordinal", r.ord.str()}});
      }
      out.doc = {{"verb", "goodstein"},
                 {"paper_def", "Def A.9"},
                 {"m", decimal(m)},
                 {"f", f.description()},
                 {"maxSteps", arg_max_steps},
                 {"status", run.termination_step ? "terminated" : "truncated"},
                 {"terminationStep", run.termination_step
                                         ? json(*run.termination_step)
                                         : json(nullptr)},
                 {"rows", std::move(jrows)}};
      std::string t = "goodstein m=" + decimal(m) + " f=" + f.description() +
                      ": " +
                      (run.termination_step
                           ? "terminated at step " +
                                 std::to_string(*run.termination_step)
                           : "truncated at step " +
                                 std::to_string(arg_max_steps)) +
                      "\n";
      for (const auto& r : run.rows) {
        t += json({{"i", r.index},
                   {"base", r.base},
                   {"value", decimal(r.value)},
                   {"ordinal", r.ord.str()}})
                 .dump() +
             "\n";
      }
      out.text = std::move(t);
    } else if (c_pharrow->parsed()) {
      if (arg_a1 > arg_a2) throw usage_error("--a1 must be <= --a2");
      if (arg_c < 1 || arg_d < 1) throw usage_error("--c and --d must be >= 1");
      if (arg_budget < 1) throw usage_error("--budget must be >= 1");
      auto r = ph_arrow({arg_a1, arg_a2}, arg_bval, arg_c, arg_d, arg_budget,
                        jobs);
      out.doc = {{"verb", "ph-arrow"},
                 {"paper_def", "Def A.1(1)"},
                 {"a1", arg_a1},
                 {"a2", arg_a2},
                 {"b", arg_bval},
                 {"c", arg_c},
                 {"d", arg_d},
                 {"budget", arg_budget},
                 {"verdict", verdict_json(r.v)},
                 {"explored", r.explored},
                 {"universe", decimal(r.universe)},
                 {"counterexample", r.counterexample
                                        ? coloring_json(*r.counterexample)
                                        : json(nullptr)}};
      out.code = exit_for(r.v);
      out.text = "[" + std::to_string(arg_a1) + "," + std::to_string(arg_a2) +
                 "] ->* (" + std::to_string(arg_bval) + ")^" +
                 std::to_string(arg_c) + "_" + std::to_string(arg_d) + ": " +
                 to_string(r.v);
    } else if (c_phwit->parsed()) {
      if (arg_c < 1 || arg_d < 1) throw usage_error("--c and --d must be >= 1");
      if (arg_budget < 1) throw usage_error("--budget must be >= 1");
      auto r = ph_witness(arg_a1, arg_bval, arg_c, arg_d, arg_budget, jobs);
      out.doc = {{"verb", "ph-witness"},
                 {"paper_def", "Def A.1(2)"},
                 {"a1", arg_a1},
                 {"b", arg_bval},
                 {"c", arg_c},
                 {"d", arg_d},
                 {"budget", arg_budget},
                 {"verdict", verdict_json(r.v)},
                 {"witness", r.v == verdict::yes ? json(r.value) : json(nullptr)},
                 {"explored", r.explored}};
      out.code = exit_for(r.v);
      out.text = "least a2: " + (r.v == verdict::yes ? std::to_string(r.value)
                                                     : to_string(r.v));
    } else if (c_sigma->parsed()) {
      if (arg_nsmall < 1) throw usage_error("--n must be >= 1");
      if (arg_budget < 1) throw usage_error("--budget must be >= 1");
      auto r = sigma(arg_nsmall, arg_budget, jobs);
      out.doc = {{"verb", "sigma"},
                 {"paper_def", "App. A (Ketonen-Solovay)"},
                 {"n", arg_nsmall},
                 {"budget", arg_budget},
                 {"verdict", verdict_json(r.v)},
                 {"witness", r.v == verdict::yes ? json(r.value) : json(nullptr)},
                 {"explored", r.explored}};
      out.code = exit_for(r.v);
      out.text = "sigma(" + std::to_string(arg_nsmall) + ") = " +
                 (r.v == verdict::yes ? std::to_string(r.value)
                                      : to_string(r.v));
    } else if (c_phind->parsed()) {
      if (arg_x > arg_y) throw usage_error("--x must be <= --y");
      if (arg_budget < 1) throw usage_error("--budget must be >= 1");
      auto r = ph_indicator(arg_x, arg_y, arg_budget, jobs);
      out.doc = {{"verb", "ph-indicator"},
                 {"paper_def", "Thm A.4"},
                 {"x", arg_x},
                 {"y", arg_y},
                 {"budget", arg_budget},
                 {"verdict", verdict_json(r.v)},
                 {"value", r.v == verdict::yes ? json(r.value) : json(nullptr)},
                 {"explored", r.explored}};
      out.code = exit_for(r.v);
      out.text = "Y(" + std::to_string(arg_x) + "," + std::to_string(arg_y) +
                 ") = " + (r.v == verdict::yes ? std::to_string(r.value)
                                               : to_string(r.v));
    } else if (c_indg->parsed()) {
      if (arg_budget < 1) throw usage_error("--budget must be >= 1");
      auto r = indicator_g(arg_x, arg_nsmall, arg_budget, jobs);
      out.doc = {{"verb", "ind-g"},
                 {"paper_def", "Thm 2.3(2)"},
                 {"x", arg_x},
                 {"n", arg_nsmall},
                 {"budget", arg_budget},
                 {"verdict", verdict_json(r.v)},
                 {"value", r.v == verdict::yes ? json(r.value) : json(nullptr)},
                 {"explored", r.explored}};
      out.code = exit_for(r.v);
      out.text = "g_" + std::to_string(arg_nsmall) + "(" +
                 std::to_string(arg_x) + ") = " +
                 (r.v == verdict::yes ? std::to_string(r.value)
                                      : to_string(r.v));
    } else if (c_kmarrow->parsed()) {
      if (arg_a1 > arg_a2) throw usage_error("--a must be <= --b");
      if (arg_nsmall < 1) throw usage_error("--n must be >= 1");
      if (arg_kval < arg_nsmall) throw usage_error("--k must be >= --n");
      if (arg_budget < 1) throw usage_error("--budget must be >= 1");
      auto r = km_arrow({arg_a1, arg_a2}, arg_kval, arg_nsmall, arg_budget,
                        jobs);
      out.doc = {{"verb", "km-arrow"},
                 {"paper_def", "Def A.5(2)"},
                 {"a", arg_a1},
                 {"b", arg_a2},
                 {"k", arg_kval},
                 {"n", arg_nsmall},
                 {"budget", arg_budget},
                 {"verdict", verdict_json(r.v)},
                 {"explored", r.explored},
                 {"universe", decimal(r.universe)},
                 {"counterexample", r.counterexample
                                        ? regressive_json(*r.counterexample)
                                        : json(nullptr)}};
      out.code = exit_for(r.v);
      out.text = "[" + std::to_string(arg_a1) + "," + std::to_string(arg_a2) +
                 "] -> (" + std::to_string(arg_kval) + ")^" +
                 std::to_string(arg_nsmall) + "_reg: " + to_string(r.v);
    } else if (c_kmwit->parsed()) {
      if (arg_nsmall < 1) throw usage_error("--n must be >= 1");
      if (arg_kval < arg_nsmall) throw usage_error("--k must be >= --n");
      if (arg_budget < 1) throw usage_error("--budget must be >= 1");
      auto r = km_witness(arg_a1, arg_kval, arg_nsmall, arg_budget, jobs);
      out.doc = {{"verb", "km-witness"},
                 {"paper_def", "Def A.5(3)"},
                 {"a", arg_a1},
                 {"k", arg_kval},
                 {"n", arg_nsmall},
                 {"budget", arg_budget},
                 {"verdict", verdict_json(r.v)},
                 {"witness", r.v == verdict::yes ? json(r.value) : json(nullptr)},
                 {"explored", r.explored}};
      out.code = exit_for(r.v);
      out.text = "least b: " + (r.v == verdict::yes ? std::to_string(r.value)
                                                    : to_string(r.v));
    } else if (c_wrun->parsed()) {
      if (arg_fuel < 1) throw usage_error("--fuel must be >= 1");
      worm_word w = parse_worm_arg(arg_worm);
      auto r = worm_run(w, arg_fuel, arg_trace);
      out.doc = {{"verb", "worm run"},
                 {"paper_def", "Def A.12"},
                 {"worm", w},
                 {"fuel", arg_fuel},
                 {"status", r.termination_step ? "terminated" : "truncated"},
                 {"terminationStep", r.termination_step
                                         ? json(*r.termination_step)
                                         : json(nullptr)},
                 {"steps", r.steps},
                 {"maxLength", r.max_length}};
      if (arg_trace) {
        json jt = json::array();
        for (size_t i = 0; i < r.trace.size(); ++i) {
          json e = {{"n", i}};
          if (r.trace[i].size() <= arg_trace_max_len) {
            e["worm"] = r.trace[i];
          } else {
            e["length"] = r.trace[i].size();
          }
          jt.push_back(std::move(e));
        }
        out.doc["trace"] = std::move(jt);
      }
      out.text = "worm battle: " +
                 (r.termination_step
                      ? "terminated at step " +
                            std::to_string(*r.termination_step)
                      : "truncated after " + std::to_string(r.steps) +
                            " steps") +
                 ", max length " + std::to_string(r.max_length);
    } else if (c_tcount->parsed()) {
      if (arg_size < 1) throw usage_error("--n must be >= 1");
      out.doc = {{"verb", "trees count"}, {"paper_def", "§4.5 fn. 6"},
                 {"n", arg_size}};
      if (arg_upto) {
        json counts = json::array();
        for (const nat& c : count_trees_upto(arg_size))
          counts.push_back(decimal(c));
        out.doc["counts"] = std::move(counts);
        out.text = "counts 1.." + std::to_string(arg_size) + ": " +
                   out.doc["counts"].dump();
      } else {
        nat c = count_trees(arg_size);
        out.doc["count"] = decimal(c);
        out.text = "t_" + std::to_string(arg_size) + " = " + decimal(c);
      }
    } else if (c_otter->parsed()) {
      auto r = estimate_otter(arg_maxi);
      json hist = json::array();
      for (const auto& row : r.history) {
        hist.push_back({{"i", row.i}, {"alphaHat", row.alpha_hat}});
      }
      out.doc = {{"verb", "trees otter"},     {"paper_def", "§4.5 fn. 6"},
                 {"maxI", arg_maxi},          {"alphaHat", r.alpha_hat},
                 {"thresholdC", r.threshold_c}, {"history", std::move(hist)}};
      out.text = "alphaHat_" + std::to_string(arg_maxi) + " = " +
                 std::to_string(r.alpha_hat) +
                 ", c = " + std::to_string(r.threshold_c);
    } else if (c_embeds->parsed()) {
      finite_tree s = finite_tree::parse(arg_s);
      finite_tree t = finite_tree::parse(arg_t);
      bool r = inf_embeds(s, t);
      out.doc = {{"verb", "trees embeds"}, {"paper_def", "§3.2.1"},
                 {"s", s.encoding()},      {"t", t.encoding()},
                 {"result", r}};
      out.text = s.encoding() + (r ? " embeds into " : " does not embed into ") +
                 t.encoding();
    } else if (c_tlist->parsed()) {
      auto ts = enumerate_trees(arg_size);
      out.doc = {{"verb", "trees list"},
                 {"paper_def", "§4.5 fn. 6"},
                 {"n", arg_size},
                 {"count", ts.size()},
                 {"trees", tree_list_json(ts)}};
      std::string t;
      for (const auto& tr : ts) t += tr.encoding() + "\n";
      out.text = std::move(t);
    } else if (c_fcheck->parsed()) {
      if (arg_budget < 1) throw usage_error("--budget must be >= 1");
      size_bound f = size_bound::parse(arg_fbound);
      auto r = fkt_check(arg_K, f, arg_M, arg_budget);
      out.doc = {{"verb", "fkt check"},
                 {"paper_def", "§4.5"},
                 {"K", arg_K},
                 {"f", f.description()},
                 {"M", arg_M},
                 {"budget", arg_budget},
                 {"verdict", verdict_json(r.v)},
                 {"explored", r.explored},
                 {"badSequence", r.v == verdict::no
                                     ? tree_list_json(r.bad_sequence)
                                     : json(nullptr)}};
      out.code = exit_for(r.v);
      out.text = "every bad sequence has length <= " + std::to_string(arg_M) +
                 ": " + to_string(r.v);
    } else if (c_fexplore->parsed()) {
      if (arg_budget < 1) throw usage_error("--budget must be >= 1");
      size_bound f = size_bound::parse(arg_fbound);
      auto r = longest_bad_sequence(arg_K, f, arg_budget);
      // The budget yields a best-found lower bound, a computed value: exit 0.
      out.doc = {{"verb", "fkt explore"},
                 {"paper_def", "§4.5"},
                 {"K", arg_K},
                 {"f", f.description()},
                 {"budget", arg_budget},
                 {"length", r.length},
                 {"sequence", tree_list_json(r.sequence)},
                 {"explored", r.explored},
                 {"complete", r.v == verdict::yes},
                 {"sizeCapped", r.size_capped}};
      out.text = "longest bad sequence found: length " +
                 std::to_string(r.length) +
                 (r.v == verdict::yes ? " (search exhausted)"
                                      : " (budget truncated)");
    } else if (c_regal->parsed() || c_kiralic->parsed()) {
      bool kir = c_kiralic->parsed();
      std::string verb = kir ? "kiralic" : "regal";
      std::string pdef = kir ? "Def A.16 / Thm A.17" : "Def A.14 / Thm A.15";
      if (arg_budget < 1) throw usage_error("--budget must be >= 1");
      CLI::App* cmd = kir ? c_kiralic : c_regal;
      bool have_set = cmd->count("--set") > 0;
      bool have_ab = cmd->count("--a") > 0 && cmd->count("--b") > 0;
      if (have_set == have_ab) {
        throw usage_error("pass either --set or both --a and --b");
      }
      std::vector<uint64_t> X;
      if (have_set) {
        X = parse_set_arg(arg_set, "--set");
      } else {
        if (arg_a1 > arg_a2) throw usage_error("--a must be <= --b");
        for (uint64_t v = arg_a1; v <= arg_a2; ++v) X.push_back(v);
      }
      if (arg_kflag >= 0) {
        uint64_t k = static_cast<uint64_t>(arg_kflag);
        auto r = kir ? is_kiralic(X, k, arg_budget) : is_regal(X, k, arg_budget);
        out.doc = {{"verb", verb},
                   {"paper_def", pdef},
                   {"set", X},
                   {"k", k},
                   {"budget", arg_budget},
                   {"verdict", verdict_json(r.v)},
                   {"explored", r.explored},
                   {"counterexample", r.counterexample
                                          ? set_tree_json(*r.counterexample)
                                          : json(nullptr)}};
        out.code = exit_for(r.v);
        out.text = std::to_string(k) + "-" + verb + ": " + to_string(r.v);
      } else {
        if (have_set) {
          throw usage_error("the indicator needs an interval (--a and --b)");
        }
        auto r = kir ? kiralic_indicator(arg_a1, arg_a2, arg_budget)
                     : regal_indicator(arg_a1, arg_a2, arg_budget);
        json ind;
        if (r.not_even_zero) {
          ind = json(kir ? "not-even-0-kiralic" : "not-even-0-regal");
        } else if (r.v == verdict::yes) {
          ind = json(r.value);
        } else {
          ind = json(nullptr);
        }
        out.doc = {{"verb", verb},
                   {"paper_def", pdef},
                   {"a", arg_a1},
                   {"b", arg_a2},
                   {"budget", arg_budget},
                   {"verdict", verdict_json(r.not_even_zero ? verdict::yes
                                                            : r.v)},
                   {"indicator", std::move(ind)},
                   {"explored", r.explored}};
        out.code = r.not_even_zero ? 0 : exit_for(r.v);
        out.text = verb + " indicator of [" + std::to_string(arg_a1) + "," +
                   std::to_string(arg_a2) + "]: " +
                   out.doc["indicator"].dump();
      }
    } else {
      throw usage_error("no verb selected");
    }

    if (format == "csv" && !csv_ok) {
      throw usage_error("--format csv is only available for `hardy table`");
    }
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 64;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 64;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 64;
  } catch (const std::overflow_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 2;
  }

  if (format == "text") {
    std::cout << out.text;
    if (!out.text.empty() && out.text.back() != '\n') std::cout << "\n";
  } else {
    std::cout << out.doc.dump(2) << "\n";
  }
  return out.code;
}
