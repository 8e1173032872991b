#ifndef EQDOM_CLI_HPP
#define EQDOM_CLI_HPP

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "eqdom/decide.hpp"
#include "eqdom/fixtures.hpp"
#include "eqdom/io.hpp"
#include "eqdom/semigroup.hpp"
#include "eqdom/terms.hpp"
#include "eqdom/translations.hpp"
#include "eqdom/witness.hpp"

namespace eqdom {
namespace cli {

using nlohmann::json;

/// Self-contained result of one command: input descriptor (path, hash and
/// element names), payload, timing.
struct Report {
  std::string command;
  std::string input;
  std::uint64_t input_hash = 0;
  int elements = 0;
  std::vector<std::string> element_names;
  json payload;
  std::vector<std::string> notes;
  double ms = 0.0;

  json to_json() const {
    json j;
    j["command"] = command;
    j["input"] = input;
    j["input_hash"] = input_hash;
    j["elements"] = elements;
    j["element_names"] = element_names;
    j["result"] = payload;
    j["notes"] = notes;
    j["timing_ms"] = ms;
    return j;
  }
};

struct Options {
  bool as_json = false;
  int threads = static_cast<int>(std::thread::hardware_concurrency());
  std::uint64_t budget_closure = 50'000;
  std::uint64_t budget_sweep = 10'000'000;
  std::uint64_t size_cap = 4096;
};

namespace detail {

inline std::string verdict_name(Verdict v) { return v == Verdict::ed ? "ED" : "NotED"; }

inline json certificate_json(const FiniteSemigroup& s, const Certificate& cert) {
  json j;
  if (const auto* c = std::get_if<PositiveCert>(&cert)) {
    j["kind"] = "Positive";
    j["lambda"] = c->lambda_size;
    j["i"] = c->i_size;
    j["group_order"] = c->group_order;
  } else if (const auto* c = std::get_if<ZeroDivisorCert>(&cert)) {
    j["kind"] = "ZeroDivisor";
    j["x"] = s.name(c->x);
    j["y"] = s.name(c->y);
  } else if (const auto* c = std::get_if<SingularMatrixCert>(&cert)) {
    j["kind"] = "SingularMatrix";
    j["which"] = c->rows ? "rows" : "columns";
    j["a"] = c->a + 1;
    j["b"] = c->b + 1;
  } else if (const auto* c = std::get_if<NontrivialSimCert>(&cert)) {
    j["kind"] = "NontrivialSim";
    j["alpha"] = s.name(c->alpha);
    j["beta"] = s.name(c->beta);
  } else if (const auto* c = std::get_if<HasZeroCert>(&cert)) {
    j["kind"] = "HasZero";
    j["zero"] = s.name(c->zero);
  } else if (const auto* c = std::get_if<BoundViolationCert>(&cert)) {
    j["kind"] = "BoundViolation";
    j["bound"] = c->refined ? "refined" : "coarse";
    j["value"] = c->bound;
    j["size"] = c->size;
  }
  return j;
}

inline json bound_json(const BoundValue& b) {
  json j;
  if (b.saturated)
    j["value"] = "overflow";
  else
    j["value"] = b.value;
  j["verdict"] = b.violated ? "ViolatesBound" : "WithinBound";
  return j;
}

inline void print_human(const Report& r) {
  std::cout << "== " << r.command << " " << r.input << " ==\n";
  std::cout << r.payload.dump(2) << "\n";
  for (const auto& n : r.notes) std::cout << "note: " << n << "\n";
  std::cout << "time: " << r.ms << " ms\n";
}

inline void emit(const Report& r, const Options& opt) {
  if (opt.as_json)
    std::cout << r.to_json().dump(2) << std::endl;
  else
    print_human(r);
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

inline PointSet builtin_target_set(const FiniteSemigroup& s, const KernelAnalysis& ka,
                                   const std::string& name, int arity,
                                   std::uint64_t sweep_budget) {
  if (name == "msem") {
    if (arity != 4) throw ParseError("the msem set lives in S^4; pass --vars 4");
    return msem(s, sweep_budget);
  }
  if (name == "mgr-like") {
    if (arity < 2) throw ParseError("the mgr-like set needs at least two variables");
    PointSet out = empty_point_set(s, arity, sweep_budget);
    const int id = ka.gamma_identity;
    for (std::uint64_t c = 0; c < out.universe; ++c) {
      std::vector<int> p = decode_point(s, arity, c);
      if (p[0] == id || p[1] == id) out.set(c);
    }
    return out;
  }
  throw ParseError("unknown built-in set '" + name + "' (use msem or mgr-like)");
}

}  // namespace detail

inline Report cmd_validate(const std::string& path, const Options& opt) {
  detail::Timer timer;
  Report r;
  r.command = "validate";
  r.input = path;
  io::LoadedSemigroup in = io::load_semigroup_file(path, opt.size_cap);
  r.input_hash = in.hash;
  r.elements = in.semigroup.n;
  r.element_names = in.semigroup.names;
  r.payload["status"] = "ok";
  r.payload["kind"] = in.kind == io::InputKind::rees ? "rees" : "cayley";
  r.payload["elements"] = in.semigroup.n;
  if (in.kind == io::InputKind::rees)
    r.notes.push_back("Rees spec materialized to " + std::to_string(in.semigroup.n) +
                      " elements");
  r.ms = timer.ms();
  return r;
}

inline Report cmd_analyze(const std::string& path, const Options& opt) {
  detail::Timer timer;
  Report r;
  r.command = "analyze";
  r.input = path;
  io::LoadedSemigroup in = io::load_semigroup_file(path, opt.size_cap);
  r.input_hash = in.hash;
  r.elements = in.semigroup.n;
  r.element_names = in.semigroup.names;
  const FiniteSemigroup& s = in.semigroup;

  KernelAnalysis ka = analyze_kernel(s);
  r.payload["kernel_size"] = ka.kernel.count();
  r.payload["lambda"] = ka.spec.lambda_size;
  r.payload["i"] = ka.spec.i_size;
  r.payload["group_order"] = ka.spec.group.order();
  MatrixVerdict mv = is_matrix_nonsingular(ka.spec);
  r.payload["matrix"] = mv.nonsingular()
                            ? json("Nonsingular")
                            : json{{"kind", mv.kind == MatrixVerdict::Kind::equal_rows
                                                ? "EqualRows"
                                                : "EqualColumns"},
                                   {"a", mv.a + 1},
                                   {"b", mv.b + 1}};
  GroupEdVerdict ged = group_is_ed(ka.spec.group);
  r.payload["group"] =
      ged.is_ed ? json("ED")
                : json{{"verdict", "NotED"},
                       {"zero_divisor_x", ka.spec.group.sg.name(ged.witness->x)},
                       {"zero_divisor_y", ka.spec.group.sg.name(ged.witness->y)}};
  SimPartition part = sim_partition(s, ka.kernel);
  std::size_t largest = 0;
  for (const auto& cls : part.classes) largest = std::max(largest, cls.size());
  r.payload["sim_classes"] = part.classes.size();
  r.payload["sim_trivial"] = largest <= 1;
  if (auto z = has_zero(s)) r.payload["zero"] = s.name(*z);
  BoundReport bounds = bound_checks(s, ka);
  r.payload["bounds"]["coarse_l_2l"] = detail::bound_json(bounds.coarse);
  r.payload["bounds"]["refined"] = detail::bound_json(bounds.refined);
  r.ms = timer.ms();
  return r;
}

inline Report cmd_decide(const std::string& path, bool with_oracle, const Options& opt) {
  detail::Timer timer;
  Report r;
  r.command = "decide";
  r.input = path;
  io::LoadedSemigroup in = io::load_semigroup_file(path, opt.size_cap);
  r.input_hash = in.hash;
  r.elements = in.semigroup.n;
  r.element_names = in.semigroup.names;
  const FiniteSemigroup& s = in.semigroup;
  Decision d = decide_ed(s);
  r.payload["verdict"] = detail::verdict_name(d.verdict);
  r.payload["certificate"] = detail::certificate_json(s, d.certificate);
  r.payload["certificate_verified"] = verify_decision(s, d);
  if (with_oracle) {
    OracleComparison oc = cross_check_with_oracle(s, opt.budget_closure, opt.budget_sweep);
    switch (oc.status) {
      case OracleComparison::Status::agree:
        r.payload["oracle"] = "Agree";
        break;
      case OracleComparison::Status::disagree:
        r.payload["oracle"] = json{{"status", "Disagree"}, {"detail", oc.detail}};
        break;
      case OracleComparison::Status::inconclusive:
        throw SweepBudgetError("oracle inconclusive: " + oc.detail);
    }
  }
  r.ms = timer.ms();
  return r;
}

inline Report cmd_solve(const std::string& sg_path, const std::string& sys_path,
                        const Options& opt) {
  detail::Timer timer;
  Report r;
  r.command = "solve";
  r.input = sg_path;
  io::LoadedSemigroup in = io::load_semigroup_file(sg_path, opt.size_cap);
  r.input_hash = in.hash;
  r.elements = in.semigroup.n;
  r.element_names = in.semigroup.names;
  System sys = io::parse_system_text(io::read_file(sys_path), in.semigroup);
  PointSet sol = solve_system(in.semigroup, sys, opt.budget_sweep, opt.threads);
  r.payload["equations"] = sys.equations.size();
  r.payload["vars"] = sys.arity;
  r.payload["solutions"] = sol.count();
  if (sol.count() <= 100) {
    json pts = json::array();
    sol.bits.for_each([&](std::size_t code) {
      json pt = json::array();
      for (int v : decode_point(in.semigroup, sol.arity, static_cast<std::uint64_t>(code)))
        pt.push_back(in.semigroup.name(v));
      pts.push_back(std::move(pt));
    });
    r.payload["points"] = std::move(pts);
  } else {
    r.notes.push_back("solution listing suppressed (more than 100 points)");
  }
  r.ms = timer.ms();
  return r;
}

inline Report cmd_witness(const std::string& sg_path, const std::string& set_spec, int vars,
                          const std::string& out_path, const Options& opt) {
  detail::Timer timer;
  Report r;
  r.command = "witness";
  r.input = sg_path;
  io::LoadedSemigroup in = io::load_semigroup_file(sg_path, opt.size_cap);
  r.input_hash = in.hash;
  r.elements = in.semigroup.n;
  r.element_names = in.semigroup.names;
  const FiniteSemigroup& s = in.semigroup;
  KernelAnalysis ka = analyze_kernel(s);
  PointSet target;
  if (set_spec == "msem" || set_spec == "mgr-like") {
    target = detail::builtin_target_set(s, ka, set_spec, vars, opt.budget_sweep);
  } else {
    target = io::parse_points_text(io::read_file(set_spec), s, opt.budget_sweep);
    if (vars > 0 && vars != target.arity)
      throw ParseError("points file declares vars " + std::to_string(target.arity) +
                       ", command asked for " + std::to_string(vars));
  }
  System sys = defining_system(s, ka, target, opt.budget_sweep);
  PointSet check = solve_system(s, sys, opt.budget_sweep, opt.threads);
  bool exact = check == target;
  if (!exact) throw FormulaMismatchError("synthesized system does not define the target set");
  r.payload["vars"] = target.arity;
  r.payload["target_points"] = target.count();
  r.payload["equations"] = sys.equations.size();
  r.payload["verified"] = true;
  if (!out_path.empty()) {
    io::write_file(out_path, io::serialize_system(sys, s));
    r.payload["written"] = out_path;
  }
  r.ms = timer.ms();
  return r;
}

inline Report cmd_fixture(const std::string& name, int param, const std::string& out_path,
                          const Options& opt) {
  (void)opt;
  detail::Timer timer;
  Report r;
  r.command = "fixture";
  r.input = name;
  FiniteSemigroup s = fixtures::by_name(name, param);
  std::string text = io::cayley_to_json(s).dump(2) + "\n";
  r.input_hash = fnv1a64(text);
  r.elements = s.n;
  r.element_names = s.names;
  r.payload["elements"] = s.n;
  if (!out_path.empty()) {
    io::write_file(out_path, text);
    r.payload["written"] = out_path;
  } else {
    r.payload["cayley"] = io::cayley_to_json(s);
  }
  r.ms = timer.ms();
  return r;
}

/// Entry point shared by the binary and the tests. Returns the process exit
/// code: 0 ok, 2 validation failure, 3 budget exceeded, 4 construction
/// failure.
inline int run(const std::vector<std::string>& args) {
  CLI::App app{"decision engine and witness synthesizer for equational domains over finite "
               "semigroups"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.as_json, "emit reports as JSON");
  app.add_option("--threads", opt.threads, "worker threads for sweeps");
  app.add_option("--budget-closure", opt.budget_closure, "term-function closure budget");
  app.add_option("--budget-sweep", opt.budget_sweep, "point sweep budget");
  app.add_option("--size-cap", opt.size_cap, "Rees materialization cap");

  std::string path, sys_path, set_spec, out_path, fixture_name;
  int vars = 0, param = 0;
  bool with_oracle = false;

  auto* v = app.add_subcommand("validate", "parse and validate an input file");
  v->add_option("path", path)->required();
  auto* a = app.add_subcommand("analyze", "kernel, Rees coordinates, matrix, group, ~_K, bounds");
  a->add_option("path", path)->required();
  auto* d = app.add_subcommand("decide", "equational-domain verdict with certificate");
  d->add_option("path", path)->required();
  d->add_flag("--oracle", with_oracle, "cross-check against the algebraicity oracle");
  auto* so = app.add_subcommand("solve", "solve a system over a semigroup");
  so->add_option("semigroup", path)->required();
  so->add_option("system", sys_path)->required();
  auto* w = app.add_subcommand("witness", "synthesize a defining system for a target set");
  w->add_option("semigroup", path)->required();
  w->add_option("--set", set_spec, "msem, mgr-like, or a points file")->required();
  w->add_option("--vars", vars, "arity for built-in set names");
  w->add_option("--out", out_path, "write the system to a file");
  auto* f = app.add_subcommand("fixture", "emit a named fixture as a Cayley file");
  f->add_option("name", fixture_name)->required();
  f->add_option("param", param);
  f->add_option("--out", out_path, "write to a file instead of stdout");

  try {
    std::vector<const char*> argv;
    argv.push_back("eqdom");
    for (const auto& s : args) argv.push_back(s.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }

  if (opt.threads < 1) opt.threads = 1;
  try {
    Report r;
    if (v->parsed()) r = cmd_validate(path, opt);
    else if (a->parsed()) r = cmd_analyze(path, opt);
    else if (d->parsed()) r = cmd_decide(path, with_oracle, opt);
    else if (so->parsed()) r = cmd_solve(path, sys_path, opt);
    else if (w->parsed()) r = cmd_witness(path, set_spec, vars, out_path, opt);
    else if (f->parsed()) r = cmd_fixture(fixture_name, param, out_path, opt);
    detail::emit(r, opt);
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << std::endl;
    return 1;
  }
}

}  // namespace cli
}  // namespace eqdom

#endif  // EQDOM_CLI_HPP
