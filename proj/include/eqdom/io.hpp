#ifndef EQDOM_IO_HPP
#define EQDOM_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "eqdom/group.hpp"
#include "eqdom/rees.hpp"
#include "eqdom/semigroup.hpp"
#include "eqdom/terms.hpp"
#include "eqdom/util.hpp"

namespace eqdom {
namespace io {

using nlohmann::json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << content;
}

inline json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw ParseError("invalid JSON");
  return j;
}

// --- Cayley table format: {"elements": [names], "table": [[names]]} --------

inline FiniteSemigroup cayley_from_json(const json& j) {
  if (!j.is_object() || !j.contains("elements") || !j.contains("table"))
    throw ParseError("expected an object with 'elements' and 'table'");
  std::vector<std::string> names;
  for (const auto& e : j.at("elements")) {
    if (!e.is_string()) throw ParseError("element names must be strings");
    names.push_back(e.get<std::string>());
  }
  auto index_of = [&](const std::string& s) -> int {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == s) return static_cast<int>(i);
    throw ParseError("table entry '" + s + "' is not an element");
  };
  std::vector<std::vector<int>> rows;
  for (const auto& row : j.at("table")) {
    rows.emplace_back();
    for (const auto& cell : row) {
      if (!cell.is_string()) throw ParseError("table entries must be element names");
      rows.back().push_back(index_of(cell.get<std::string>()));
    }
  }
  return validate_cayley(std::move(names), rows);
}

inline json cayley_to_json(const FiniteSemigroup& s) {
  json j;
  j["elements"] = s.names;
  json table = json::array();
  for (int a = 0; a < s.n; ++a) {
    json row = json::array();
    for (int b = 0; b < s.n; ++b) row.push_back(s.name(s.mul(a, b)));
    table.push_back(std::move(row));
  }
  j["table"] = std::move(table);
  return j;
}

// --- Rees spec format: {"group": <cayley>, "lambda": m, "i": n, "P": [[names]]}

inline ReesSpec rees_from_json(const json& j) {
  if (!j.is_object() || !j.contains("group") || !j.contains("P"))
    throw ParseError("expected an object with 'group', 'lambda', 'i' and 'P'");
  ReesSpec spec;
  spec.group = group_from_semigroup(cayley_from_json(j.at("group")));
  spec.lambda_size = j.value("lambda", 0);
  spec.i_size = j.value("i", 0);
  if (spec.lambda_size < 1 || spec.i_size < 1)
    throw ParseError("'lambda' and 'i' must be at least 1");
  const auto& p = j.at("P");
  if (static_cast<int>(p.size()) != spec.i_size)
    throw ParseError("'P' must have " + std::to_string(spec.i_size) + " rows");
  for (const auto& row : p) {
    if (static_cast<int>(row.size()) != spec.lambda_size)
      throw ParseError("'P' rows must have " + std::to_string(spec.lambda_size) + " entries");
    for (const auto& cell : row) {
      if (!cell.is_string()) throw ParseError("'P' entries must be group element names");
      auto g = spec.group.sg.find(cell.get<std::string>());
      if (!g) throw ParseError("'P' entry '" + cell.get<std::string>() + "' is not a group element");
      spec.p.push_back(*g);
    }
  }
  spec.normalized = is_normalized(spec);
  return spec;
}

inline json rees_to_json(const ReesSpec& spec) {
  json j;
  j["group"] = cayley_to_json(spec.group.sg);
  j["lambda"] = spec.lambda_size;
  j["i"] = spec.i_size;
  json p = json::array();
  for (int i = 0; i < spec.i_size; ++i) {
    json row = json::array();
    for (int mu = 0; mu < spec.lambda_size; ++mu)
      row.push_back(spec.group.sg.name(spec.p_at(i, mu)));
    p.push_back(std::move(row));
  }
  j["P"] = std::move(p);
  return j;
}

enum class InputKind { cayley, rees };

struct LoadedSemigroup {
  FiniteSemigroup semigroup;
  InputKind kind = InputKind::cayley;
  std::uint64_t hash = 0;  // FNV-1a of the raw file bytes
};

/// Loads either file format, materializing a Rees spec through
/// build_cayley_from_rees (subject to the size cap).
inline LoadedSemigroup load_semigroup_file(const std::string& path,
                                           std::uint64_t size_cap = 4096) {
  std::string text = read_file(path);
  json j = parse_json(text);
  LoadedSemigroup out;
  out.hash = fnv1a64(text);
  if (j.is_object() && j.contains("group")) {
    out.kind = InputKind::rees;
    out.semigroup = build_cayley_from_rees(rees_from_json(j), size_cap);
  } else {
    out.kind = InputKind::cayley;
    out.semigroup = cayley_from_json(j);
  }
  return out;
}

// --- System files: 'vars n' header, one 'lhs = rhs' per line, '#' comments --

inline System parse_system_text(const std::string& text, const FiniteSemigroup& s) {
  std::istringstream in(text);
  std::string line;
  int arity = -1;
  std::vector<Equation> eqs;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    std::size_t e = line.find_last_not_of(" \t\r");
    std::string body = line.substr(b, e - b + 1);
    if (arity < 0) {
      std::istringstream hs(body);
      std::string kw;
      hs >> kw >> arity;
      if (kw != "vars" || hs.fail() || arity < 0)
        throw ParseError("line " + std::to_string(lineno) + ": expected header 'vars n'");
      continue;
    }
    auto eq = body.find('=');
    if (eq == std::string::npos || body.find('=', eq + 1) != std::string::npos)
      throw ParseError("line " + std::to_string(lineno) + ": expected exactly one '='");
    Term lhs = parse_term(std::string_view(body).substr(0, eq), arity, s);
    Term rhs = parse_term(std::string_view(body).substr(eq + 1), arity, s);
    eqs.push_back(Equation{expr_leaf(lhs), expr_leaf(rhs)});
  }
  if (arity < 0) throw ParseError("missing 'vars n' header");
  return make_system(arity, std::move(eqs));
}

inline void render_term(const TermPtr& t, const FiniteSemigroup& s, std::string& out,
                        std::uint64_t limit) {
  if (out.size() > limit) throw SweepBudgetError("rendered system exceeds the output limit");
  switch (t->kind) {
    case TermNode::Kind::leaf: {
      bool first = true;
      for (const Atom& a : t->atoms) {
        if (!first) out += '*';
        first = false;
        out += a.is_var ? "x" + std::to_string(a.idx + 1) : s.name(a.idx);
      }
      break;
    }
    case TermNode::Kind::concat: {
      bool first = true;
      for (const auto& c : t->children) {
        if (!first) out += '*';
        first = false;
        render_term(c, s, out, limit);
      }
      break;
    }
    case TermNode::Kind::power: {
      out += '(';
      render_term(t->base, s, out, limit);
      out += ")^" + std::to_string(t->exponent);
      break;
    }
  }
}

inline std::string render_term(const TermPtr& t, const FiniteSemigroup& s,
                               std::uint64_t limit = 16u << 20) {
  std::string out;
  render_term(t, s, out, limit);
  if (out.size() > limit) throw SweepBudgetError("rendered system exceeds the output limit");
  return out;
}

inline std::string serialize_system(const System& sys, const FiniteSemigroup& s,
                                    std::uint64_t limit = 16u << 20) {
  std::string out = "vars " + std::to_string(sys.arity) + "\n";
  for (const Equation& eq : sys.equations) {
    render_term(eq.lhs, s, out, limit);
    out += " = ";
    render_term(eq.rhs, s, out, limit);
    out += '\n';
  }
  return out;
}

// --- Point list files: 'vars n' header, one point per line ------------------

inline PointSet parse_points_text(const std::string& text, const FiniteSemigroup& s,
                                  std::uint64_t sweep_budget = 10'000'000) {
  std::istringstream in(text);
  std::string line;
  int arity = -1;
  std::vector<std::vector<int>> pts;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string tok;
    while (ls >> tok) toks.push_back(tok);
    if (toks.empty()) continue;
    if (arity < 0) {
      if (toks.size() != 2 || toks[0] != "vars")
        throw ParseError("line " + std::to_string(lineno) + ": expected header 'vars n'");
      arity = std::stoi(toks[1]);
      if (arity < 1) throw ParseError("arity must be positive");
      continue;
    }
    if (static_cast<int>(toks.size()) != arity)
      throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(arity) +
                       " element names");
    std::vector<int> point;
    for (const auto& name : toks) {
      auto e = s.find(name);
      if (!e) throw ParseError("line " + std::to_string(lineno) + ": unknown element '" + name + "'");
      point.push_back(*e);
    }
    pts.push_back(std::move(point));
  }
  if (arity < 0) throw ParseError("missing 'vars n' header");
  PointSet out = empty_point_set(s, arity, sweep_budget);
  for (const auto& p : pts) out.set(encode_point(s, p));
  return out;
}

inline std::string serialize_points(const PointSet& ps, const FiniteSemigroup& s) {
  std::string out = "vars " + std::to_string(ps.arity) + "\n";
  ps.bits.for_each([&](std::size_t code) {
    std::vector<int> p = decode_point(s, ps.arity, static_cast<std::uint64_t>(code));
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) out += ' ';
      out += s.name(p[i]);
    }
    out += '\n';
  });
  return out;
}

}  // namespace io
}  // namespace eqdom

#endif  // EQDOM_IO_HPP
