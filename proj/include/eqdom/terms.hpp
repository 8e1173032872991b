#ifndef EQDOM_TERMS_HPP
#define EQDOM_TERMS_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "eqdom/semigroup.hpp"
#include "eqdom/util.hpp"

namespace eqdom {

/// One term atom: either a variable x_{idx} or a constant element.
struct Atom {
  bool is_var = false;
  int idx = 0;

  static Atom var(int k) { return Atom{true, k}; }
  static Atom constant(int e) { return Atom{false, e}; }
  bool operator==(const Atom& o) const { return is_var == o.is_var && idx == o.idx; }
};

/// A flat term: a nonempty product of variables and constants.
struct Term {
  int arity = 0;
  std::vector<Atom> atoms;
};

inline Term make_term(int arity, std::vector<Atom> atoms) {
  if (atoms.empty()) throw ParseError("term must be a nonempty product");
  for (const Atom& a : atoms)
    if (a.is_var && (a.idx < 0 || a.idx >= arity))
      throw ParseError("variable x" + std::to_string(a.idx + 1) + " outside arity " +
                       std::to_string(arity));
  return Term{arity, std::move(atoms)};
}

// ---------------------------------------------------------------------------
// Lazy term expressions. Synthesized terms repeat subterms |G|-1 times, so
// they are kept as shared DAGs with explicit power nodes and only flattened
// or rendered on demand.

struct TermNode;
using TermPtr = std::shared_ptr<const TermNode>;

struct TermNode {
  enum class Kind { leaf, concat, power };
  Kind kind = Kind::leaf;
  int arity = 0;
  std::vector<Atom> atoms;      // leaf
  std::vector<TermPtr> children;  // concat
  TermPtr base;                 // power
  std::uint64_t exponent = 1;   // power
};

inline TermPtr expr_leaf(const Term& t) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermNode::Kind::leaf;
  n->arity = t.arity;
  n->atoms = t.atoms;
  return n;
}

inline TermPtr expr_atoms(int arity, std::vector<Atom> atoms) {
  return expr_leaf(make_term(arity, std::move(atoms)));
}

inline TermPtr expr_concat(std::vector<TermPtr> children) {
  if (children.empty()) throw ParseError("empty concatenation");
  if (children.size() == 1) return children.front();
  auto n = std::make_shared<TermNode>();
  n->kind = TermNode::Kind::concat;
  n->arity = children.front()->arity;
  for (const auto& c : children)
    if (c->arity != n->arity) throw ParseError("arity mismatch in concatenation");
  n->children = std::move(children);
  return n;
}

inline TermPtr expr_power(TermPtr base, std::uint64_t k) {
  if (k == 0) throw ParseError("zero power");
  if (k == 1) return base;
  auto n = std::make_shared<TermNode>();
  n->kind = TermNode::Kind::power;
  n->arity = base->arity;
  n->base = std::move(base);
  n->exponent = k;
  return n;
}

inline std::uint64_t flat_size(const TermPtr& t) {
  switch (t->kind) {
    case TermNode::Kind::leaf:
      return t->atoms.size();
    case TermNode::Kind::concat: {
      std::uint64_t total = 0;
      for (const auto& c : t->children) {
        std::uint64_t part = flat_size(c);
        total = total > std::numeric_limits<std::uint64_t>::max() - part
                    ? std::numeric_limits<std::uint64_t>::max()
                    : total + part;
      }
      return total;
    }
    case TermNode::Kind::power:
      return sat_mul(flat_size(t->base), t->exponent);
  }
  return 0;
}

inline void flatten_into(const TermPtr& t, std::vector<Atom>& out, std::uint64_t limit) {
  switch (t->kind) {
    case TermNode::Kind::leaf:
      out.insert(out.end(), t->atoms.begin(), t->atoms.end());
      break;
    case TermNode::Kind::concat:
      for (const auto& c : t->children) flatten_into(c, out, limit);
      break;
    case TermNode::Kind::power:
      for (std::uint64_t k = 0; k < t->exponent; ++k) flatten_into(t->base, out, limit);
      break;
  }
  if (out.size() > limit) throw SweepBudgetError("flattened term longer than " + std::to_string(limit));
}

inline Term flatten(const TermPtr& t, std::uint64_t limit = 1u << 20) {
  if (flat_size(t) > limit)
    throw SweepBudgetError("flattened term longer than " + std::to_string(limit));
  std::vector<Atom> atoms;
  flatten_into(t, atoms, limit);
  return make_term(t->arity, std::move(atoms));
}

/// Walks every constant atom in the expression.
template <typename F>
inline void for_each_constant(const TermPtr& t, F&& f) {
  switch (t->kind) {
    case TermNode::Kind::leaf:
      for (const Atom& a : t->atoms)
        if (!a.is_var) f(a.idx);
      break;
    case TermNode::Kind::concat:
      for (const auto& c : t->children) for_each_constant(c, f);
      break;
    case TermNode::Kind::power:
      for_each_constant(t->base, f);
      break;
  }
}

// ---------------------------------------------------------------------------
// Grammar: term := factor ('*' factor)*; factor := primary ('^' INT)?;
// primary := NAME | '(' term ')'. Atoms are x1..xn or element names; no
// implicit juxtaposition. parse_term expands powers into the flat form.

namespace detail {

struct TermParser {
  std::string_view text;
  std::size_t pos = 0;
  int arity;
  const FiniteSemigroup& s;
  std::uint64_t limit;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  static bool name_char(char c) {
    return c != '*' && c != '^' && c != '(' && c != ')' && c != '=' && c != '#' && c != ' ' &&
           c != '\t' && c != '\0';
  }

  std::vector<Atom> parse_term_body() {
    std::vector<Atom> atoms = parse_factor();
    while (peek() == '*') {
      ++pos;
      auto next = parse_factor();
      atoms.insert(atoms.end(), next.begin(), next.end());
      if (atoms.size() > limit) throw ParseError("term expansion exceeds atom limit");
    }
    return atoms;
  }

  std::vector<Atom> parse_factor() {
    std::vector<Atom> atoms = parse_primary();
    if (peek() == '^') {
      ++pos;
      skip_ws();
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) throw ParseError("expected integer exponent after '^'");
      std::uint64_t k = 0;
      for (std::size_t i = start; i < pos; ++i) {
        k = k * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (k > limit) throw ParseError("exponent too large");
      }
      if (k == 0) throw ParseError("zero power is not a term");
      std::vector<Atom> expanded;
      if (atoms.size() * k > limit) throw ParseError("term expansion exceeds atom limit");
      expanded.reserve(atoms.size() * k);
      for (std::uint64_t r = 0; r < k; ++r)
        expanded.insert(expanded.end(), atoms.begin(), atoms.end());
      atoms = std::move(expanded);
    }
    return atoms;
  }

  std::vector<Atom> parse_primary() {
    skip_ws();
    if (pos >= text.size()) throw ParseError("unexpected end of term");
    if (text[pos] == '(') {
      ++pos;
      auto atoms = parse_term_body();
      if (peek() != ')') throw ParseError("missing ')'");
      ++pos;
      return atoms;
    }
    std::size_t start = pos;
    while (pos < text.size() && name_char(text[pos])) ++pos;
    if (start == pos) throw ParseError(std::string("unexpected character '") + text[pos] + "'");
    std::string_view tok = text.substr(start, pos - start);
    // x<digits> is a variable, everything else an element name.
    if (tok.size() >= 2 && tok[0] == 'x') {
      bool digits = true;
      for (std::size_t i = 1; i < tok.size() && digits; ++i)
        digits = std::isdigit(static_cast<unsigned char>(tok[i])) != 0;
      if (digits) {
        if (tok.size() > 7)
          throw ParseError("variable " + std::string(tok) + " outside arity " +
                           std::to_string(arity));
        long v = std::stol(std::string(tok.substr(1)));
        if (v < 1 || v > arity)
          throw ParseError("variable " + std::string(tok) + " outside arity " +
                           std::to_string(arity));
        return {Atom::var(static_cast<int>(v - 1))};
      }
    }
    auto e = s.find(tok);
    if (!e) throw ParseError("unknown element '" + std::string(tok) + "'");
    return {Atom::constant(*e)};
  }
};

}  // namespace detail

inline Term parse_term(std::string_view text, int arity, const FiniteSemigroup& s,
                       std::uint64_t atom_limit = 1u << 20) {
  if (arity < 0) throw ParseError("negative arity");
  detail::TermParser p{text, 0, arity, s, atom_limit};
  std::vector<Atom> atoms = p.parse_term_body();
  if (!p.at_end())
    throw ParseError("trailing characters in term: '" + std::string(text.substr(p.pos)) + "'");
  return make_term(arity, std::move(atoms));
}

// ---------------------------------------------------------------------------
// Evaluation.

inline int eval_term(const FiniteSemigroup& s, const Term& t, const std::vector<int>& point) {
  int acc = -1;
  for (const Atom& a : t.atoms) {
    int v = a.is_var ? point[static_cast<std::size_t>(a.idx)] : a.idx;
    acc = acc < 0 ? v : s.mul(acc, v);
  }
  return acc;
}

inline int eval_expr(const FiniteSemigroup& s, const TermPtr& t, const std::vector<int>& point) {
  switch (t->kind) {
    case TermNode::Kind::leaf: {
      int acc = -1;
      for (const Atom& a : t->atoms) {
        int v = a.is_var ? point[static_cast<std::size_t>(a.idx)] : a.idx;
        acc = acc < 0 ? v : s.mul(acc, v);
      }
      return acc;
    }
    case TermNode::Kind::concat: {
      int acc = -1;
      for (const auto& c : t->children) {
        int v = eval_expr(s, c, point);
        acc = acc < 0 ? v : s.mul(acc, v);
      }
      return acc;
    }
    case TermNode::Kind::power:
      return s.pow(eval_expr(s, t->base, point), t->exponent);
  }
  return -1;
}

// ---------------------------------------------------------------------------
// Point sets over S^n, encoded as mixed-radix codes with the first coordinate
// most significant.

struct PointSet {
  int arity = 0;
  std::uint64_t universe = 0;
  Bitset bits;

  bool test(std::uint64_t code) const { return bits.test(static_cast<std::size_t>(code)); }
  void set(std::uint64_t code) { bits.set(static_cast<std::size_t>(code)); }
  std::size_t count() const { return bits.count(); }
  bool operator==(const PointSet& o) const {
    return arity == o.arity && universe == o.universe && bits == o.bits;
  }
};

inline std::uint64_t space_size(const FiniteSemigroup& s, int arity) {
  std::uint64_t total = 1;
  for (int i = 0; i < arity; ++i) total = sat_mul(total, static_cast<std::uint64_t>(s.n));
  return total;
}

inline PointSet empty_point_set(const FiniteSemigroup& s, int arity, std::uint64_t sweep_budget) {
  std::uint64_t total = space_size(s, arity);
  if (total > sweep_budget)
    throw SweepBudgetError("point space |S|^" + std::to_string(arity) + " = " +
                           std::to_string(total) + " exceeds the sweep budget of " +
                           std::to_string(sweep_budget));
  PointSet ps;
  ps.arity = arity;
  ps.universe = total;
  ps.bits = Bitset(static_cast<std::size_t>(total));
  return ps;
}

inline std::uint64_t encode_point(const FiniteSemigroup& s, const std::vector<int>& point) {
  std::uint64_t code = 0;
  for (int v : point) code = code * static_cast<std::uint64_t>(s.n) + static_cast<std::uint64_t>(v);
  return code;
}

inline std::vector<int> decode_point(const FiniteSemigroup& s, int arity, std::uint64_t code) {
  std::vector<int> point(static_cast<std::size_t>(arity));
  for (int i = arity - 1; i >= 0; --i) {
    point[static_cast<std::size_t>(i)] = static_cast<int>(code % static_cast<std::uint64_t>(s.n));
    code /= static_cast<std::uint64_t>(s.n);
  }
  return point;
}

/// Evaluates shared term DAGs over a fixed list of points, memoizing node
/// value vectors so repeated subterms cost one pass.
class BatchEvaluator {
 public:
  BatchEvaluator(const FiniteSemigroup& s, int arity, std::vector<std::uint64_t> codes)
      : s_(s), arity_(arity), codes_(std::move(codes)) {
    coords_.resize(codes_.size() * static_cast<std::size_t>(arity_ == 0 ? 1 : arity_));
    for (std::size_t p = 0; p < codes_.size(); ++p) {
      std::uint64_t c = codes_[p];
      for (int i = arity_ - 1; i >= 0; --i) {
        coords_[p * static_cast<std::size_t>(arity_) + static_cast<std::size_t>(i)] =
            static_cast<std::uint16_t>(c % static_cast<std::uint64_t>(s_.n));
        c /= static_cast<std::uint64_t>(s_.n);
      }
    }
  }

  std::size_t point_count() const { return codes_.size(); }
  const std::vector<std::uint64_t>& codes() const { return codes_; }

  const std::vector<std::uint16_t>& eval(const TermPtr& t) {
    auto it = memo_.find(t.get());
    if (it != memo_.end()) return it->second;
    std::vector<std::uint16_t> vals(codes_.size());
    switch (t->kind) {
      case TermNode::Kind::leaf: {
        for (std::size_t p = 0; p < codes_.size(); ++p) {
          int acc = -1;
          for (const Atom& a : t->atoms) {
            int v = a.is_var
                        ? coords_[p * static_cast<std::size_t>(arity_) + static_cast<std::size_t>(a.idx)]
                        : a.idx;
            acc = acc < 0 ? v : s_.mul(acc, v);
          }
          vals[p] = static_cast<std::uint16_t>(acc);
        }
        break;
      }
      case TermNode::Kind::concat: {
        bool first = true;
        for (const auto& c : t->children) {
          const auto& cv = eval(c);
          if (first) {
            vals = cv;
            first = false;
          } else {
            for (std::size_t p = 0; p < vals.size(); ++p)
              vals[p] = static_cast<std::uint16_t>(s_.mul(vals[p], cv[p]));
          }
        }
        break;
      }
      case TermNode::Kind::power: {
        const auto& bv = eval(t->base);
        for (std::size_t p = 0; p < vals.size(); ++p)
          vals[p] = static_cast<std::uint16_t>(s_.pow(bv[p], t->exponent));
        break;
      }
    }
    return memo_.emplace(t.get(), std::move(vals)).first->second;
  }

 private:
  const FiniteSemigroup& s_;
  int arity_;
  std::vector<std::uint64_t> codes_;
  std::vector<std::uint16_t> coords_;
  std::unordered_map<const TermNode*, std::vector<std::uint16_t>> memo_;
};

// ---------------------------------------------------------------------------
// Equations and systems.

struct Equation {
  TermPtr lhs;
  TermPtr rhs;
};

struct System {
  int arity = 0;
  std::vector<Equation> equations;
};

inline System make_system(int arity, std::vector<Equation> eqs) {
  for (const auto& e : eqs)
    if (e.lhs->arity != arity || e.rhs->arity != arity)
      throw ParseError("equation arity mismatch");
  return System{arity, std::move(eqs)};
}

namespace detail {

// Survivors of one equation over a point list, preserving order.
inline std::vector<std::uint64_t> filter_equation(const FiniteSemigroup& s, int arity,
                                                  const Equation& eq,
                                                  const std::vector<std::uint64_t>& alive,
                                                  int threads) {
  if (threads > 1 && alive.size() >= 8192) {
    std::size_t nslices = static_cast<std::size_t>(threads);
    std::vector<std::vector<std::uint64_t>> parts(nslices);
    std::size_t chunk = (alive.size() + nslices - 1) / nslices;
    parallel_for(nslices, threads, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t t = lo; t < hi; ++t) {
        std::size_t begin = t * chunk;
        std::size_t end = std::min(alive.size(), begin + chunk);
        if (begin >= end) continue;
        std::vector<std::uint64_t> slice(alive.begin() + static_cast<std::ptrdiff_t>(begin),
                                         alive.begin() + static_cast<std::ptrdiff_t>(end));
        parts[t] = filter_equation(s, arity, eq, slice, 1);
      }
    });
    std::vector<std::uint64_t> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
  }
  BatchEvaluator ev(s, arity, alive);
  const auto& lhs = ev.eval(eq.lhs);
  const auto& rhs = ev.eval(eq.rhs);
  std::vector<std::uint64_t> next;
  next.reserve(alive.size());
  for (std::size_t p = 0; p < alive.size(); ++p)
    if (lhs[p] == rhs[p]) next.push_back(alive[p]);
  return next;
}

}  // namespace detail

/// Exact solution set by exhaustive evaluation. Points are filtered equation
/// by equation, so most off-solution points are discarded after their first
/// failing equation.
inline PointSet solve_system(const FiniteSemigroup& s, const System& sys,
                             std::uint64_t sweep_budget = 10'000'000, int threads = 1) {
  std::uint64_t total = space_size(s, sys.arity);
  if (total > sweep_budget)
    throw SweepBudgetError("solution sweep |S|^" + std::to_string(sys.arity) + " = " +
                           std::to_string(total) + " exceeds the sweep budget of " +
                           std::to_string(sweep_budget));
  std::vector<std::uint64_t> alive(static_cast<std::size_t>(total));
  for (std::uint64_t c = 0; c < total; ++c) alive[static_cast<std::size_t>(c)] = c;
  for (const Equation& eq : sys.equations) {
    if (alive.empty()) break;
    alive = detail::filter_equation(s, sys.arity, eq, alive, threads);
  }
  PointSet out;
  out.arity = sys.arity;
  out.universe = total;
  out.bits = Bitset(static_cast<std::size_t>(total));
  for (std::uint64_t c : alive) out.set(c);
  return out;
}

// ---------------------------------------------------------------------------
// Term-function closure: the finitely many functions S^n -> S induced by
// terms, generated from projections and constants by pointwise products.
// This underlies the exact algebraicity oracle.

struct TermFunction {
  enum class Src { projection, constant, product };
  Src src = Src::projection;
  int a = -1;  // projection/constant payload, or left factor index
  int b = -1;  // right factor index
  std::vector<std::uint16_t> table;  // value at every code of S^n
};

struct ClosureResult {
  bool complete = false;  // false: budget exceeded, result inconclusive
  int arity = 0;
  std::uint64_t universe = 0;
  std::vector<TermFunction> funcs;

  /// Representative term as a shared DAG; distinct calls share subterms.
  TermPtr rep(int k) const {
    std::vector<TermPtr> memo(funcs.size());
    return rep_impl(k, memo);
  }

 private:
  TermPtr rep_impl(int k, std::vector<TermPtr>& memo) const {
    auto& slot = memo[static_cast<std::size_t>(k)];
    if (slot) return slot;
    const TermFunction& f = funcs[static_cast<std::size_t>(k)];
    switch (f.src) {
      case TermFunction::Src::projection:
        slot = expr_atoms(arity, {Atom::var(f.a)});
        break;
      case TermFunction::Src::constant:
        slot = expr_atoms(arity, {Atom::constant(f.a)});
        break;
      case TermFunction::Src::product:
        slot = expr_concat({rep_impl(f.a, memo), rep_impl(f.b, memo)});
        break;
    }
    return slot;
  }
};

inline ClosureResult term_function_closure(const FiniteSemigroup& s, int arity,
                                           std::uint64_t budget = 50'000,
                                           std::uint64_t sweep_budget = 10'000'000) {
  std::uint64_t total = space_size(s, arity);
  if (total > sweep_budget)
    throw SweepBudgetError("closure table space |S|^" + std::to_string(arity) + " = " +
                           std::to_string(total) + " exceeds the sweep budget");
  ClosureResult out;
  out.arity = arity;
  out.universe = total;

  std::unordered_map<std::uint64_t, std::vector<int>> dedup;
  auto add = [&](TermFunction f) -> bool {
    std::uint64_t h = fnv1a64(f.table.data(), f.table.size() * sizeof(std::uint16_t));
    auto& bucket = dedup[h];
    for (int j : bucket)
      if (out.funcs[static_cast<std::size_t>(j)].table == f.table) return false;
    bucket.push_back(static_cast<int>(out.funcs.size()));
    out.funcs.push_back(std::move(f));
    return true;
  };

  for (int v = 0; v < arity; ++v) {
    TermFunction f;
    f.src = TermFunction::Src::projection;
    f.a = v;
    f.table.resize(static_cast<std::size_t>(total));
    std::uint64_t stride = 1;
    for (int i = arity - 1; i > v; --i) stride *= static_cast<std::uint64_t>(s.n);
    for (std::uint64_t c = 0; c < total; ++c)
      f.table[static_cast<std::size_t>(c)] =
          static_cast<std::uint16_t>((c / stride) % static_cast<std::uint64_t>(s.n));
    add(std::move(f));
  }
  for (int e = 0; e < s.n; ++e) {
    TermFunction f;
    f.src = TermFunction::Src::constant;
    f.a = e;
    f.table.assign(static_cast<std::size_t>(total), static_cast<std::uint16_t>(e));
    add(std::move(f));
  }

  for (std::size_t i = 0; i < out.funcs.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (int dir = 0; dir < 2; ++dir) {
        const auto& left = out.funcs[dir == 0 ? i : j].table;
        const auto& right = out.funcs[dir == 0 ? j : i].table;
        TermFunction f;
        f.src = TermFunction::Src::product;
        f.a = static_cast<int>(dir == 0 ? i : j);
        f.b = static_cast<int>(dir == 0 ? j : i);
        f.table.resize(static_cast<std::size_t>(total));
        for (std::size_t c = 0; c < f.table.size(); ++c)
          f.table[c] = static_cast<std::uint16_t>(s.mul(left[c], right[c]));
        add(std::move(f));
        if (out.funcs.size() > budget) return out;  // incomplete
        if (i == j) break;  // f*f is direction independent
      }
    }
  }
  out.complete = true;
  return out;
}

/// acl(Y): the points every pair of term functions that agree on Y also
/// agrees on -- the solution set of the largest system vanishing on Y. Y is
/// algebraic iff acl(Y) = Y. Functions are grouped by their restriction to Y,
/// so only same-group disagreements can cut points.
struct AclResult {
  bool complete = false;
  PointSet closure;
};

inline AclResult algebraic_closure(const FiniteSemigroup& s, const PointSet& y,
                                   std::uint64_t closure_budget = 50'000,
                                   std::uint64_t sweep_budget = 10'000'000) {
  ClosureResult cl = term_function_closure(s, y.arity, closure_budget, sweep_budget);
  AclResult out;
  if (!cl.complete) return out;
  out.complete = true;
  out.closure.arity = y.arity;
  out.closure.universe = y.universe;
  out.closure.bits = Bitset(static_cast<std::size_t>(y.universe), true);

  std::vector<std::size_t> members;
  y.bits.for_each([&](std::size_t c) { members.push_back(c); });

  std::unordered_map<std::uint64_t, std::vector<int>> groups;
  std::vector<std::vector<std::uint16_t>> signatures(cl.funcs.size());
  for (std::size_t f = 0; f < cl.funcs.size(); ++f) {
    auto& sig = signatures[f];
    sig.reserve(members.size());
    for (std::size_t c : members) sig.push_back(cl.funcs[f].table[c]);
    std::uint64_t h = fnv1a64(sig.data(), sig.size() * sizeof(std::uint16_t));
    groups[h].push_back(static_cast<int>(f));
  }
  for (auto& [h, bucket] : groups) {
    if (bucket.size() < 2) continue;
    // Split hash collisions into true signature groups.
    std::vector<std::vector<int>> exact;
    for (int f : bucket) {
      bool placed = false;
      for (auto& grp : exact)
        if (signatures[static_cast<std::size_t>(grp.front())] == signatures[static_cast<std::size_t>(f)]) {
          grp.push_back(f);
          placed = true;
          break;
        }
      if (!placed) exact.push_back({f});
    }
    for (const auto& grp : exact) {
      if (grp.size() < 2) continue;
      const auto& first = cl.funcs[static_cast<std::size_t>(grp.front())].table;
      for (std::size_t gi = 1; gi < grp.size(); ++gi) {
        const auto& other = cl.funcs[static_cast<std::size_t>(grp[gi])].table;
        for (std::uint64_t c = 0; c < out.closure.universe; ++c)
          if (first[static_cast<std::size_t>(c)] != other[static_cast<std::size_t>(c)])
            out.closure.bits.reset(static_cast<std::size_t>(c));
      }
    }
  }
  return out;
}

}  // namespace eqdom

#endif  // EQDOM_TERMS_HPP
