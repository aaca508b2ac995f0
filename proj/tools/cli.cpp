#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pratio/bounds.hpp"
#include "pratio/digraph.hpp"
#include "pratio/error.hpp"
#include "pratio/extremal.hpp"
#include "pratio/oracle.hpp"
#include "pratio/perron.hpp"

namespace pratio::cli {

namespace {

using nlohmann::json;

// Exact arithmetic is the default up to this order; larger graphs must pick
// --exact or --float explicitly.
constexpr std::size_t kExactDefaultLimit = 12;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string join(std::span<const Vertex> vs) {
  std::string s;
  for (Vertex v : vs) s += (s.empty() ? "" : ",") + std::to_string(v);
  return s;
}

struct GraphSource {
  std::string path = "-";

  Digraph load(std::istream& in) const {
    std::string text;
    if (path == "-") {
      std::ostringstream buf;
      buf << in.rdbuf();
      text = buf.str();
    } else {
      std::ifstream file(path);
      if (!file) throw Error(Errc::malformed_input, "cannot open " + path);
      std::ostringstream buf;
      buf << file.rdbuf();
      text = buf.str();
    }
    return parse_edge_list(text);
  }
};

struct ModeFlags {
  bool exact = false;
  bool floating = false;

  bool use_exact(std::size_t n) const {
    if (exact) return true;
    if (floating) return false;
    if (n > kExactDefaultLimit) {
      throw UsageError("graph has " + std::to_string(n) + " vertices; pass --exact or --float explicitly above " +
                       std::to_string(kExactDefaultLimit));
    }
    return true;
  }
};

void add_mode_flags(CLI::App* cmd, ModeFlags& mode) {
  auto* e = cmd->add_flag("--exact", mode.exact, "Exact rational arithmetic");
  auto* f = cmd->add_flag("--float", mode.floating, "Floating-point power iteration");
  e->excludes(f);
}

// ---------------------------------------------------------------- solve/ratio

struct SolveOptions {
  GraphSource graph;
  ModeFlags mode;
  double tol = kDefaultPowerTolerance;
  std::size_t max_iter = kDefaultPowerMaxIter;
  bool json = false;
};

int do_solve(const SolveOptions& o, bool ratio_only, std::istream& in, std::ostream& out, std::ostream& err) {
  auto g = o.graph.load(in);
  if (o.mode.use_exact(g.order())) {
    auto phi = solve_exact(g);
    auto ratio = principal_ratio(phi);
    if (o.json) {
      json j;
      if (!ratio_only) {
        std::vector<std::string> entries;
        for (const auto& q : phi.entries()) entries.push_back(format(q));
        j["phi"] = entries;
      }
      j["mode"] = "exact";
      j["ratio"] = format(ratio);
      out << j.dump() << '\n';
    } else {
      if (!ratio_only) {
        for (Vertex v = 0; v < phi.size(); ++v) out << v << ' ' << format(phi[v]) << '\n';
        out << "ratio ";
      }
      out << format(ratio) << '\n';
    }
    return kExitOk;
  }

  auto phi = solve_power(g, o.tol, o.max_iter);
  if (!phi.converged) {
    err << "error: power iteration did not converge in " << phi.iterations << " iterations (residual "
        << format_double(phi.residual) << ")\n";
    return kExitDomainError;
  }
  auto ratio = principal_ratio(phi);
  if (o.json) {
    json j;
    if (!ratio_only) j["phi"] = phi.entries;
    j["mode"] = "float";
    j["ratio"] = ratio;
    j["residual"] = phi.residual;
    j["iterations"] = phi.iterations;
    out << j.dump() << '\n';
  } else {
    if (!ratio_only) {
      for (std::size_t v = 0; v < phi.entries.size(); ++v) out << v << ' ' << format_double(phi.entries[v]) << '\n';
      out << "ratio ";
    }
    out << format_double(ratio) << '\n';
  }
  return kExitOk;
}

// ------------------------------------------------------------------ construct

struct ConstructOptions {
  std::string kind;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  bool dot = false;
};

int do_construct(const ConstructOptions& o, std::ostream& out) {
  auto need = [](std::size_t value, const char* flag) {
    if (value == 0) throw UsageError(std::string("missing ") + flag);
    return value;
  };
  Digraph g = [&]() -> Digraph {
    if (o.kind == "d1") return construct_extremal(need(o.n, "--n"), ExtremalVariant::d1);
    if (o.kind == "d2") return construct_extremal(need(o.n, "--n"), ExtremalVariant::d2);
    if (o.kind == "d3") return construct_extremal(need(o.n, "--n"), ExtremalVariant::d3);
    if (o.kind == "degree-ce") return construct_degree_counterexample(need(o.n, "--n"));
    if (o.kind == "disc-ce") return construct_discrepancy_counterexample(need(o.m, "--m"), need(o.k, "--k"));
    if (o.kind == "h") return construct_h_graph(need(o.m, "--m"));
    if (o.kind == "complete") return complete_digraph(need(o.n, "--n"));
    if (o.kind == "cycle") return directed_cycle(need(o.n, "--n"));
    throw UsageError("unknown construction '" + o.kind + "'");
  }();
  out << (o.dot ? to_dot(g, o.kind == "degree-ce" || o.kind == "disc-ce" ? "G" : o.kind) : serialize_edge_list(g));
  return kExitOk;
}

// ------------------------------------------------------------------ transform

struct TransformOptions {
  std::string direction;
  GraphSource graph;
  bool rule_only = false;
};

LabeledPathGraph labeled(const Digraph& g, std::ostream& err) {
  try {
    return LabeledPathGraph::from_identity(g);
  } catch (const Error&) {
  }
  auto lg = LabeledPathGraph::find(g);
  if (!lg) throw Error(Errc::not_shortest_path, "graph has no shortest path of length n-1");
  err << "note: relabeled along v1..vn = " << join(lg->labeling()) << '\n';
  return *lg;
}

int do_transform(const TransformOptions& o, std::istream& in, std::ostream& out, std::ostream& err) {
  auto lg = labeled(o.graph.load(in), err);
  const bool add = o.direction == "add";
  if (!add && o.direction != "delete") throw UsageError("direction must be 'add' or 'delete'");
  Digraph result = lg.graph();
  if (o.rule_only) {
    auto e = add ? select_added_edge(lg) : select_deleted_edge(lg);
    if (!e) throw Error(Errc::not_in_family, "selection rule found no edge");
    result = add ? lg.graph().with_edge(e->first, e->second) : lg.graph().without_edge(e->first, e->second);
  } else {
    result = add ? add_edge_transform(lg) : delete_edge_transform(lg);
  }
  out << serialize_edge_list(result);
  return kExitOk;
}

// --------------------------------------------------------------------- bound

struct BoundOptions {
  GraphSource graph;
  std::string a, b, c, d, eps;
  std::string mode = "exhaustive";
  std::size_t trials = 100'000;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  bool json = false;
};

int do_bound_check(const BoundOptions& o, std::istream& in, std::ostream& out) {
  Theorem3Params p{parse_rational(o.a), parse_rational(o.b), parse_rational(o.c), parse_rational(o.d),
                   parse_rational(o.eps)};
  DiscrepancyOptions opts;
  if (o.mode == "exhaustive") {
    opts.mode = DiscrepancyMode::exhaustive;
  } else if (o.mode == "sampled") {
    opts.mode = DiscrepancyMode::sampled;
  } else {
    throw UsageError("--mode must be exhaustive or sampled");
  }
  opts.trials = o.trials;
  opts.seed = o.seed;
  opts.jobs = o.jobs;
  auto g = o.graph.load(in);
  auto r = theorem3_check(g, p, opts);

  const std::string disc_mode = r.discrepancy.exhaustive ? "exhaustive" : "sampled";
  if (o.json) {
    json j;
    j["degree_ok"] = r.degree_ok;
    j["discrepancy_ok"] = r.discrepancy_ok;
    j["discrepancy_mode"] = disc_mode;
    j["pairs_checked"] = r.discrepancy.pairs_checked;
    j["C"] = format(r.C);
    j["ratio_bound"] = format(r.ratio_bound);
    if (r.discrepancy.worst_density) j["worst_density"] = format(*r.discrepancy.worst_density);
    if (!r.discrepancy_ok) {
      j["violating_S"] = r.discrepancy.witness_s;
      j["violating_T"] = r.discrepancy.witness_t;
    }
    if (r.ratio) {
      j["ratio"] = format(*r.ratio);
      j["bound_holds"] = *r.bound_holds;
    }
    out << j.dump() << '\n';
  } else {
    out << "degree_condition " << (r.degree_ok ? "ok" : "fail") << '\n';
    out << "discrepancy_condition " << (r.discrepancy_ok ? (r.discrepancy.exhaustive ? "ok" : "not-falsified") : "fail")
        << ' ' << disc_mode << " pairs=" << r.discrepancy.pairs_checked << '\n';
    if (!r.discrepancy_ok) {
      out << "violating_pair S=" << join(r.discrepancy.witness_s) << " T=" << join(r.discrepancy.witness_t) << '\n';
    }
    out << "C " << format(r.C) << '\n';
    out << "ratio_bound " << format(r.ratio_bound) << '\n';
    if (r.ratio) {
      out << "ratio " << format(*r.ratio) << '\n';
      out << "bound_holds " << (*r.bound_holds ? "yes" : "no") << '\n';
    }
  }
  return kExitOk;
}

int do_bound_structure(const GraphSource& src, bool as_json, std::istream& in, std::ostream& out) {
  auto g = src.load(in);
  auto r = extremal_structure_report(g);
  auto chung = chung_bound(g);
  auto lt = lynn_timlake_bound(std::max<std::size_t>(g.order(), 2));
  if (as_json) {
    json j;
    j["n"] = r.n;
    j["ratio"] = format(r.ratio);
    j["vmax"] = r.vmax;
    j["vmin"] = r.vmin;
    j["dist_vmax_vmin"] = r.vmax_vmin_distance;
    j["distance_bound"] = to_string(r.distance_bound);
    j["half_factorial_bound"] = to_string(r.half_factorial_bound);
    j["degree_structure"] = to_string(r.degree_structure);
    j["first_vertex_structure"] = to_string(r.first_vertex_structure);
    j["chung_bound"] = format(chung);
    j["lynn_timlake_bound"] = format(lt);
    out << j.dump() << '\n';
  } else {
    out << "n " << r.n << '\n';
    out << "ratio " << format(r.ratio) << '\n';
    out << "vmax " << join(r.vmax) << '\n';
    out << "vmin " << join(r.vmin) << '\n';
    out << "dist_vmax_vmin " << r.vmax_vmin_distance << '\n';
    out << "distance_bound " << to_string(r.distance_bound) << '\n';
    out << "half_factorial_bound " << to_string(r.half_factorial_bound) << '\n';
    out << "degree_structure " << to_string(r.degree_structure) << '\n';
    out << "first_vertex_structure " << to_string(r.first_vertex_structure) << '\n';
    out << "chung_bound " << format(chung) << '\n';
    out << "lynn_timlake_bound " << format(lt) << '\n';
  }
  return r.all_hold() ? kExitOk : kExitDomainError;
}

// ----------------------------------------------------------------- enumerate

struct EnumerateOptions {
  std::size_t n = 0;
  unsigned jobs = 1;
  std::string emit_dir;
  bool allow_large = false;
  bool json = false;
};

int do_enumerate(const EnumerateOptions& o, std::ostream& out, std::ostream& err) {
  EnumerationLimits limits{o.allow_large, o.jobs};
  if (o.allow_large && o.n > 5) err << "warning: n=" << o.n << " enumerates 2^" << o.n * (o.n - 1) << " digraphs\n";
  auto r = max_principal_ratio_brute(o.n, limits);
  if (!o.emit_dir.empty()) {
    std::filesystem::create_directories(o.emit_dir);
    for (const auto& w : r.witnesses) {
      std::ofstream file(std::filesystem::path(o.emit_dir) / (std::to_string(w.mask) + ".edges"));
      file << serialize_edge_list(w.graph);
    }
  }
  if (o.json) {
    json j;
    j["n"] = r.n;
    j["total_digraphs"] = r.total_digraphs;
    j["strongly_connected"] = r.strongly_connected_count;
    j["max_ratio"] = format(r.max_ratio);
    j["witnesses"] = r.witnesses.size();
    j["iso_classes"] = r.witness_iso_classes();
    std::vector<EdgeMask> reps;
    for (auto i : r.class_representatives) reps.push_back(r.witnesses[i].mask);
    j["class_representatives"] = reps;
    out << j.dump() << '\n';
  } else {
    out << "n " << r.n << '\n';
    out << "total_digraphs " << r.total_digraphs << '\n';
    out << "strongly_connected " << r.strongly_connected_count << '\n';
    out << "max_ratio " << format(r.max_ratio) << '\n';
    out << "witnesses " << r.witnesses.size() << '\n';
    out << "iso_classes " << r.witness_iso_classes() << '\n';
    for (auto i : r.class_representatives) out << "class_representative " << r.witnesses[i].mask << '\n';
  }
  return kExitOk;
}

// -------------------------------------------------------------------- verify

struct VerifyOptions {
  std::size_t n = 0;
  unsigned jobs = 1;
  bool allow_large = false;
  GraphSource graph;
};

int do_verify_theorem2(const VerifyOptions& o, std::ostream& out) {
  auto r = verify_theorem2(o.n, EnumerationLimits{o.allow_large, o.jobs});
  out << "n " << o.n << '\n';
  out << "max_ratio " << format(r.enumeration.max_ratio) << '\n';
  out << "formula " << format(r.formula) << '\n';
  out << "witnesses " << r.enumeration.witnesses.size() << '\n';
  for (std::size_t i = 0; i < r.class_variants.size(); ++i) {
    const auto& w = r.enumeration.witnesses[r.enumeration.class_representatives[i]];
    out << "class " << i + 1 << ' ' << (r.class_variants[i] ? to_string(*r.class_variants[i]) : "unmatched")
        << " mask=" << w.mask << '\n';
  }
  out << (r.ok() ? "OK" : "FAIL") << '\n';
  return r.ok() ? kExitOk : kExitDomainError;
}

int do_verify_d1_closed_form(const VerifyOptions& o, std::ostream& out) {
  auto x = d1_closed_form(o.n);
  auto g = construct_extremal(o.n, ExtremalVariant::d1);
  auto phi = solve_exact(g);
  Rational total;
  for (const auto& q : x) total += q;
  bool agrees = true;
  for (Vertex v = 0; v < x.size(); ++v) agrees = agrees && x[v] / total == phi[v];
  bool ordered = d1_ordering_holds(x);
  bool ratio = principal_ratio(std::span<const Rational>(x)) == gamma_formula(o.n);
  for (std::size_t i = 0; i < x.size(); ++i) out << "x" << i + 1 << ' ' << format(x[i]) << '\n';
  out << "matches_solve_exact " << (agrees ? "yes" : "no") << '\n';
  out << "ordering " << (ordered ? "yes" : "no") << '\n';
  out << "ratio_equals_formula " << (ratio ? "yes" : "no") << '\n';
  bool ok = agrees && ordered && ratio;
  out << (ok ? "OK" : "FAIL") << '\n';
  return ok ? kExitOk : kExitDomainError;
}

int do_verify_family(const VerifyOptions& o, bool prime, std::istream& in, std::ostream& out, std::ostream& err) {
  auto lg = labeled(o.graph.load(in), err);
  auto r = prime ? check_family_DnPrime(lg) : check_family_Dn(lg);
  static constexpr std::array<const char*, 5> names{"i", "ii", "iii", "iv", "v"};
  for (std::size_t i = 0; i < r.properties.size(); ++i) {
    out << "property_" << names[i] << ' ' << (r.properties[i] ? "yes" : "no") << '\n';
  }
  out << (r.member() ? "member" : "not-member") << '\n';
  return kExitOk;
}

// ------------------------------------------------------------------- profile

struct ProfileOptions {
  GraphSource graph;
  Vertex start = 0;
  std::size_t steps = 50;
  bool json = false;
};

int do_profile(const ProfileOptions& o, std::istream& in, std::ostream& out) {
  auto g = o.graph.load(in);
  auto tv = walk_profile(g, o.start, o.steps);
  if (o.json) {
    for (std::size_t k = 0; k < tv.size(); ++k) out << json{{"step", k}, {"tv", tv[k]}}.dump() << '\n';
  } else {
    out << "step tv\n";
    for (std::size_t k = 0; k < tv.size(); ++k) out << k << ' ' << format_double(tv[k]) << '\n';
  }
  return kExitOk;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto bad = [&] { return UsageError("not a rational number: '" + text + "'"); };
  if (text.empty()) throw bad();
  if (auto dot = text.find('.'); dot != std::string::npos) {
    std::string whole = text.substr(0, dot), frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (negative) whole.erase(0, 1);
    auto digits = [](const std::string& s) {
      return std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); });
    };
    if (!digits(whole) || !digits(frac) || (whole.empty() && frac.empty())) throw bad();
    Integer num(whole.empty() ? "0" : whole);
    Integer den = power(Integer(10), frac.size());
    num = num * den + (frac.empty() ? Integer(0) : Integer(frac));
    Rational q(negative ? Integer(-num) : num, den);
    q.canonicalize();
    return q;
  }
  Rational q;
  if (q.set_str(text, 10) != 0 || sgn(q.get_den()) == 0) throw bad();
  q.canonicalize();
  return q;
}

int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stationary distributions and principal ratios of random walks on digraphs", "pratio"};
  app.require_subcommand(1);

  SolveOptions solve_opts;
  auto* solve = app.add_subcommand("solve", "Stationary distribution of an edge-list graph");
  solve->add_option("--graph", solve_opts.graph.path, "Edge-list file, '-' for stdin")->capture_default_str();
  add_mode_flags(solve, solve_opts.mode);
  solve->add_option("--tol", solve_opts.tol, "L1 step tolerance for --float")->check(CLI::PositiveNumber);
  solve->add_option("--max-iter", solve_opts.max_iter, "Iteration cap for --float")->check(CLI::PositiveNumber);
  solve->add_flag("--json", solve_opts.json, "Line-delimited JSON output");

  SolveOptions ratio_opts;
  auto* ratio = app.add_subcommand("ratio", "Principal ratio max(phi)/min(phi)");
  ratio->add_option("--graph", ratio_opts.graph.path, "Edge-list file, '-' for stdin")->capture_default_str();
  add_mode_flags(ratio, ratio_opts.mode);
  ratio->add_option("--tol", ratio_opts.tol, "L1 step tolerance for --float")->check(CLI::PositiveNumber);
  ratio->add_option("--max-iter", ratio_opts.max_iter, "Iteration cap for --float")->check(CLI::PositiveNumber);
  ratio->add_flag("--json", ratio_opts.json, "Line-delimited JSON output");

  ConstructOptions construct_opts;
  auto* construct = app.add_subcommand("construct", "Emit a named construction as an edge list");
  construct->add_option("kind", construct_opts.kind, "d1 | d2 | d3 | degree-ce | disc-ce | h | complete | cycle")
      ->required();
  construct->add_option("--n", construct_opts.n, "Vertex parameter");
  construct->add_option("--m", construct_opts.m, "Cycle length of H_m");
  construct->add_option("--k", construct_opts.k, "Order of the complete part of disc-ce");
  construct->add_flag("--dot", construct_opts.dot, "Emit Graphviz DOT instead");

  TransformOptions transform_opts;
  auto* transform = app.add_subcommand("transform", "Apply the edge-addition or edge-deletion transformation");
  transform->add_option("direction", transform_opts.direction, "add | delete")->required();
  transform->add_option("--graph", transform_opts.graph.path, "Edge-list file, '-' for stdin")->capture_default_str();
  transform->add_flag("--rule-only", transform_opts.rule_only, "Apply the selection rule without a membership check");

  auto* bound = app.add_subcommand("bound", "Evaluate bounds");
  bound->require_subcommand(1);
  BoundOptions bound_opts;
  auto* check = bound->add_subcommand("check", "Degree + discrepancy sufficient condition");
  check->add_option("--graph", bound_opts.graph.path, "Edge-list file, '-' for stdin")->capture_default_str();
  check->add_option("--a", bound_opts.a, "Degree centre a")->required();
  check->add_option("--b", bound_opts.b, "Discrepancy density b")->required();
  check->add_option("--c", bound_opts.c, "Size fraction c for S")->required();
  check->add_option("--d", bound_opts.d, "Size fraction d for T")->required();
  check->add_option("--eps", bound_opts.eps, "Degree half-width eps")->required();
  check->add_option("--mode", bound_opts.mode, "exhaustive | sampled")->capture_default_str();
  check->add_option("--trials", bound_opts.trials, "Sampled pairs")->check(CLI::PositiveNumber);
  check->add_option("--seed", bound_opts.seed, "Sampling seed");
  check->add_option("--jobs", bound_opts.jobs, "Worker threads")->check(CLI::PositiveNumber);
  check->add_flag("--json", bound_opts.json, "Line-delimited JSON output");
  GraphSource structure_src;
  bool structure_json = false;
  auto* structure = bound->add_subcommand("structure", "Distance and degree structure of Vmax/Vmin");
  structure->add_option("--graph", structure_src.path, "Edge-list file, '-' for stdin")->capture_default_str();
  structure->add_flag("--json", structure_json, "Line-delimited JSON output");

  EnumerateOptions enum_opts;
  auto* enumerate = app.add_subcommand("enumerate", "Exhaustive maximum principal ratio");
  enumerate->add_option("--n", enum_opts.n, "Vertex count")->required();
  enumerate->add_option("--jobs", enum_opts.jobs, "Worker threads")->check(CLI::PositiveNumber);
  enumerate->add_option("--emit-witnesses", enum_opts.emit_dir, "Directory for witness edge lists");
  enumerate->add_flag("--allow-large", enum_opts.allow_large, "Lift the n <= 5 guard");
  enumerate->add_flag("--json", enum_opts.json, "Line-delimited JSON output");

  auto* verify = app.add_subcommand("verify", "Checks against closed forms and exhaustive search");
  verify->require_subcommand(1);
  VerifyOptions verify_opts;
  auto* theorem2 = verify->add_subcommand("theorem2", "Brute-force maximum equals the closed form, attained by D1-D3");
  theorem2->add_option("--n", verify_opts.n, "Vertex count")->required();
  theorem2->add_option("--jobs", verify_opts.jobs, "Worker threads")->check(CLI::PositiveNumber);
  theorem2->add_flag("--allow-large", verify_opts.allow_large, "Lift the n <= 5 guard");
  auto* d1_form = verify->add_subcommand("d1-closed-form", "Closed-form stationary vector of D1");
  d1_form->add_option("--n", verify_opts.n, "Vertex count")->required()->check(CLI::Range(3, 200));
  auto* family_dn = verify->add_subcommand("family-dn", "Membership in the edge-addition family");
  family_dn->add_option("--graph", verify_opts.graph.path, "Edge-list file, '-' for stdin")->capture_default_str();
  auto* family_dnp = verify->add_subcommand("family-dnprime", "Membership in the edge-deletion family");
  family_dnp->add_option("--graph", verify_opts.graph.path, "Edge-list file, '-' for stdin")->capture_default_str();

  ProfileOptions profile_opts;
  auto* profile = app.add_subcommand("profile", "Total-variation distance of the walk to stationarity");
  profile->add_option("--graph", profile_opts.graph.path, "Edge-list file, '-' for stdin")->capture_default_str();
  profile->add_option("--start", profile_opts.start, "Start vertex");
  profile->add_option("--steps", profile_opts.steps, "Number of steps")->check(CLI::PositiveNumber);
  profile->add_flag("--json", profile_opts.json, "Line-delimited JSON output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (solve->parsed()) return do_solve(solve_opts, false, in, out, err);
    if (ratio->parsed()) return do_solve(ratio_opts, true, in, out, err);
    if (construct->parsed()) return do_construct(construct_opts, out);
    if (transform->parsed()) return do_transform(transform_opts, in, out, err);
    if (check->parsed()) return do_bound_check(bound_opts, in, out);
    if (structure->parsed()) return do_bound_structure(structure_src, structure_json, in, out);
    if (enumerate->parsed()) return do_enumerate(enum_opts, out, err);
    if (theorem2->parsed()) return do_verify_theorem2(verify_opts, out);
    if (d1_form->parsed()) return do_verify_d1_closed_form(verify_opts, out);
    if (family_dn->parsed()) return do_verify_family(verify_opts, false, in, out, err);
    if (family_dnp->parsed()) return do_verify_family(verify_opts, true, in, out, err);
    if (profile->parsed()) return do_profile(profile_opts, in, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  err << "usage error: no subcommand\n";
  return kExitUsage;
}

}  // namespace pratio::cli
