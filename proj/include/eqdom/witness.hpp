#ifndef EQDOM_WITNESS_HPP
#define EQDOM_WITNESS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eqdom/group.hpp"
#include "eqdom/rees.hpp"
#include "eqdom/semigroup.hpp"
#include "eqdom/terms.hpp"
#include "eqdom/translations.hpp"
#include "eqdom/util.hpp"

namespace eqdom {

/// True iff every constant of t lies in the kernel and t evaluates into
/// Gamma at every point of m.
inline bool is_gamma_valued(const FiniteSemigroup& s, const KernelAnalysis& ka, const TermPtr& t,
                            const PointSet& m) {
  bool constants_ok = true;
  for_each_constant(t, [&](int e) {
    if (!ka.in_kernel(e)) constants_ok = false;
  });
  if (!constants_ok) return false;
  std::vector<std::uint64_t> codes;
  m.bits.for_each([&](std::size_t c) { codes.push_back(static_cast<std::uint64_t>(c)); });
  BatchEvaluator ev(s, m.arity, std::move(codes));
  for (std::uint16_t v : ev.eval(t))
    if (!ka.in_gamma(v)) return false;
  return true;
}

namespace detail {

// Sandwich term (1,1,i) x_k (lambda,1,1): Gamma-valued at every point of S,
// since (1,1,i) x lands in the kernel with first index 1 and the trailing
// factor forces second index 1.
struct Sandwich {
  int i = 0;
  int lambda = 0;
  int w_elem = -1;  // parent element (1,1,i)
  int q_elem = -1;  // parent element (lambda,1,1)
};

inline Sandwich make_sandwich(const KernelAnalysis& ka, int i, int lambda) {
  const int id = ka.spec.group.identity;
  return Sandwich{i, lambda, ka.elem(0, id, i), ka.elem(lambda, id, 0)};
}

// Value of the sandwich at parent element x, as a group index.
inline int sandwich_value(const FiniteSemigroup& s, const KernelAnalysis& ka, const Sandwich& sw,
                          int x) {
  int v = s.mul(s.mul(sw.w_elem, x), sw.q_elem);
  int g = ka.gamma_to_group[static_cast<std::size_t>(v)];
  if (g < 0) throw FormulaMismatchError("sandwich term value escaped Gamma");
  return g;
}

// Smallest (i, lambda) in lexicographic order whose sandwich separates a, b.
inline std::optional<Sandwich> find_separating_sandwich(const FiniteSemigroup& s,
                                                        const KernelAnalysis& ka, int a, int b) {
  for (int i = 0; i < ka.spec.i_size; ++i)
    for (int lambda = 0; lambda < ka.spec.lambda_size; ++lambda) {
      Sandwich sw = make_sandwich(ka, i, lambda);
      if (sandwich_value(s, ka, sw, a) != sandwich_value(s, ka, sw, b)) return sw;
    }
  return std::nullopt;
}

inline TermPtr sandwich_expr(int arity, int var, const Sandwich& sw) {
  return expr_atoms(arity, {Atom::constant(sw.w_elem), Atom::var(var), Atom::constant(sw.q_elem)});
}

}  // namespace detail

/// A term t(x) of the sandwich family (1,1,i) x (lambda,1,1) with
/// t(alpha) != t(beta), smallest (i, lambda) first. Throws NotDistinguishable
/// when the search is empty, which is what happens when alpha ~_K beta.
inline Term distinguishing_term(const FiniteSemigroup& s, const KernelAnalysis& ka, int alpha,
                                int beta) {
  if (alpha == beta) throw NotDistinguishableError("alpha and beta are the same element");
  if (!is_matrix_nonsingular(ka.spec).nonsingular())
    throw NotDistinguishableError("sandwich matrix is singular");
  auto sw = detail::find_separating_sandwich(s, ka, alpha, beta);
  if (!sw)
    throw NotDistinguishableError("no sandwich term separates " + s.name(alpha) + " and " +
                                  s.name(beta));
  return make_term(1, {Atom::constant(sw->w_elem), Atom::var(0), Atom::constant(sw->q_elem)});
}

/// t^{-1}(X) = t^{|G|-1}(X): pointwise inverse of a Gamma-valued term.
inline TermPtr invert_term(const TermPtr& t, int group_order) {
  if (group_order <= 1) return t;
  return expr_power(t, static_cast<std::uint64_t>(group_order - 1));
}

/// (1,g,1) t (1,g^{-1},1).
inline TermPtr conjugate_term(const KernelAnalysis& ka, const TermPtr& t, int g) {
  const FiniteGroup& grp = ka.spec.group;
  int c = ka.group_to_parent[static_cast<std::size_t>(g)];
  int cinv = ka.group_to_parent[static_cast<std::size_t>(grp.inv(g))];
  return expr_concat({expr_atoms(t->arity, {Atom::constant(c)}), t,
                      expr_atoms(t->arity, {Atom::constant(cinv)})});
}

namespace detail {

struct SynthChecks {
  MatrixVerdict matrix;
  GroupEdVerdict group_ed;
  SimVerdict sim;
};

// One-time preconditions for T_P synthesis: kernel e.d. and ~_K trivial.
inline SynthChecks check_synthesis_preconditions(const FiniteSemigroup& s,
                                                 const KernelAnalysis& ka) {
  if (s.n == 1)
    throw ConstructionFailedError(
        "the trivial semigroup has no term with a non-identity value");
  SynthChecks c;
  c.matrix = is_matrix_nonsingular(ka.spec);
  if (!c.matrix.nonsingular())
    throw ConstructionFailedError("kernel is not an e.d.: sandwich matrix is singular");
  c.group_ed = group_is_ed(ka.spec.group);
  if (!c.group_ed.is_ed)
    throw ConstructionFailedError(
        "kernel is not an e.d.: structure group has a zero-divisor (" +
        ka.spec.group.sg.name(c.group_ed.witness->x) + ", " +
        ka.spec.group.sg.name(c.group_ed.witness->y) + ")");
  c.sim = is_sim_trivial(s, ka.kernel);
  if (!c.sim.trivial)
    throw ConstructionFailedError("~_K is not trivial: " + s.name(c.sim.alpha) + " ~ " +
                                  s.name(c.sim.beta));
  if (ka.spec.group.order() == 1)
    throw ConstructionFailedError(
        "structure group is trivial: the commutator construction degenerates");
  return c;
}

// Base member of T_P({P, Q}, Gamma): t(x_k) t^{-1}(q_k) with t a separating
// sandwich on the first coordinate k where P and Q differ, and the inverse
// collapsed to a single kernel constant.
struct BaseTerm {
  Sandwich sw;
  int var = 0;
  int inv_const_elem = -1;  // parent element of (t(q_k))^{-1} in Gamma
  int inv_const_group = -1;
  TermPtr expr;
};

inline BaseTerm make_base_term(const FiniteSemigroup& s, const KernelAnalysis& ka,
                               const std::vector<int>& p, const std::vector<int>& q) {
  int k = -1;
  for (std::size_t c = 0; c < p.size(); ++c)
    if (p[c] != q[c]) {
      k = static_cast<int>(c);
      break;
    }
  if (k < 0) throw ConstructionFailedError("points coincide; no separating coordinate");
  auto sw = find_separating_sandwich(s, ka, p[static_cast<std::size_t>(k)],
                                     q[static_cast<std::size_t>(k)]);
  if (!sw)
    throw ConstructionFailedError("no sandwich term separates the points' coordinate " +
                                  std::to_string(k + 1) + " (is ~_K trivial?)");
  BaseTerm b;
  b.sw = *sw;
  b.var = k;
  int tq = sandwich_value(s, ka, *sw, q[static_cast<std::size_t>(k)]);
  b.inv_const_group = ka.spec.group.inv(tq);
  b.inv_const_elem = ka.group_to_parent[static_cast<std::size_t>(b.inv_const_group)];
  int arity = static_cast<int>(p.size());
  b.expr = expr_atoms(arity, {Atom::constant(b.sw.w_elem), Atom::var(b.var),
                              Atom::constant(b.sw.q_elem), Atom::constant(b.inv_const_elem)});
  return b;
}

// Value of a base term at a point (group index).
inline int base_value(const FiniteSemigroup& s, const KernelAnalysis& ka, const BaseTerm& b,
                      const std::vector<int>& point) {
  int tv = sandwich_value(s, ka, b.sw, point[static_cast<std::size_t>(b.var)]);
  return ka.spec.group.mul(tv, b.inv_const_group);
}

// T_P(M, Gamma) synthesis without precondition checks. Points of M \ {P} are
// removed in descending code order; the accumulated term u and the base term
// b for the next point are combined as the commutator u^{-1} b'^{-1} u b'
// after conjugating b so its value at P does not commute with u's. A point
// whose u-value is already the identity stays identity under every later
// commutator and is skipped.
inline TermPtr build_tp_unchecked(const FiniteSemigroup& s, const KernelAnalysis& ka,
                                  std::uint64_t p_code,
                                  const std::vector<std::uint64_t>& m_codes, int arity) {
  const FiniteGroup& g = ka.spec.group;
  const int id = g.identity;
  const std::vector<int> p_point = decode_point(s, arity, p_code);

  std::vector<std::uint64_t> targets;  // M \ {P}, descending
  targets.reserve(m_codes.size());
  for (std::uint64_t c : m_codes)
    if (c != p_code) targets.push_back(c);
  std::sort(targets.begin(), targets.end(), std::greater<std::uint64_t>());

  if (targets.empty()) {
    // Singleton M: any constant (1, gamma, 1) with gamma != 1 works.
    int gamma = id == 0 ? 1 : 0;
    return expr_atoms(arity, {Atom::constant(ka.group_to_parent[static_cast<std::size_t>(gamma)])});
  }

  std::vector<std::vector<int>> target_points;
  target_points.reserve(targets.size());
  for (std::uint64_t c : targets) target_points.push_back(decode_point(s, arity, c));

  TermPtr u;
  int u_at_p = id;
  std::vector<int> u_vals(targets.size(), id);  // u's value at each target

  for (std::size_t next = 0; next < targets.size(); ++next) {
    if (u && u_vals[next] == id) continue;  // already killed
    BaseTerm b = make_base_term(s, ka, p_point, target_points[next]);
    int b_at_p = base_value(s, ka, b, p_point);
    if (!u) {
      u = b.expr;
      u_at_p = b_at_p;
      for (std::size_t t = 0; t < targets.size(); ++t)
        u_vals[t] = base_value(s, ka, b, target_points[t]);
      continue;
    }
    auto conj = find_noncommuting_conjugator(g, u_at_p, b_at_p);
    if (!conj)
      throw ConstructionFailedError("(" + g.sg.name(u_at_p) + ", " + g.sg.name(b_at_p) +
                                    ") is a zero-divisor pair; cannot combine hypotheses");
    TermPtr bc = *conj == id ? b.expr : conjugate_term(ka, b.expr, *conj);
    TermPtr nu = expr_concat({invert_term(u, g.order()), invert_term(bc, g.order()), u, bc});
    for (std::size_t t = 0; t < targets.size(); ++t) {
      if (u_vals[t] == id) continue;
      int bv = g.conj(*conj, base_value(s, ka, b, target_points[t]));
      u_vals[t] = g.comm(u_vals[t], bv);
    }
    u = nu;
    u_at_p = g.comm(u_at_p, g.conj(*conj, b_at_p));
  }
  for (std::size_t t = 0; t < targets.size(); ++t)
    if (u_vals[t] != id) throw FormulaMismatchError("synthesized term failed to vanish on M");
  if (u_at_p == id) throw FormulaMismatchError("synthesized term vanished at P");
  return u;
}

}  // namespace detail

/// A member of T_P(M, Gamma): value (1,1,1) on M \ {P} and a different
/// Gamma value at P. Requires the kernel to be an e.d. and ~_K trivial.
inline TermPtr build_tp_term(const FiniteSemigroup& s, const KernelAnalysis& ka,
                             std::uint64_t p_code, const PointSet& m) {
  if (!m.test(p_code)) throw ConstructionFailedError("P must belong to M");
  detail::check_synthesis_preconditions(s, ka);
  std::vector<std::uint64_t> codes;
  m.bits.for_each([&](std::size_t c) { codes.push_back(static_cast<std::uint64_t>(c)); });
  return detail::build_tp_unchecked(s, ka, p_code, codes, m.arity);
}

/// Member of T_P(M_sem u {P}, Gamma) for P outside M_sem, without sweeping
/// S^4: a diagonal vanisher on (x1, x2) and one on (x3, x4) are combined by
/// the commutator, so the result is the identity wherever either pair is
/// equal and non-identity at P.
inline TermPtr build_tp_term_msem(const FiniteSemigroup& s, const KernelAnalysis& ka,
                                  const std::vector<int>& p) {
  if (p.size() != 4) throw ConstructionFailedError("M_sem lives in S^4");
  detail::check_synthesis_preconditions(s, ka);
  if (p[0] == p[1] || p[2] == p[3])
    throw ConstructionFailedError("the point belongs to M_sem; no T_P member vanishes on it");
  const FiniteGroup& g = ka.spec.group;

  auto sw1 = detail::find_separating_sandwich(s, ka, p[0], p[1]);
  auto sw2 = detail::find_separating_sandwich(s, ka, p[2], p[3]);
  if (!sw1 || !sw2)
    throw ConstructionFailedError("no sandwich term separates the point's coordinates");
  // d(x, y) = t(x) t(y)^{|G|-1} vanishes whenever x = y.
  auto diagonal_vanisher = [&](const detail::Sandwich& sw, int va, int vb) {
    return expr_concat({detail::sandwich_expr(4, va, sw),
                        invert_term(detail::sandwich_expr(4, vb, sw), g.order())});
  };
  TermPtr d1 = diagonal_vanisher(*sw1, 0, 1);
  TermPtr d2 = diagonal_vanisher(*sw2, 2, 3);
  int a = g.mul(detail::sandwich_value(s, ka, *sw1, p[0]),
                g.inv(detail::sandwich_value(s, ka, *sw1, p[1])));
  int b = g.mul(detail::sandwich_value(s, ka, *sw2, p[2]),
                g.inv(detail::sandwich_value(s, ka, *sw2, p[3])));
  auto conj = find_noncommuting_conjugator(g, a, b);
  if (!conj)
    throw ConstructionFailedError("(" + g.sg.name(a) + ", " + g.sg.name(b) +
                                  ") is a zero-divisor pair; cannot combine the vanishers");
  TermPtr d2c = *conj == g.identity ? d2 : conjugate_term(ka, d2, *conj);
  TermPtr t = expr_concat({invert_term(d1, g.order()), invert_term(d2c, g.order()), d1, d2c});
  if (eval_expr(s, t, p) == ka.gamma_identity)
    throw FormulaMismatchError("M_sem witness term vanished at P");
  return t;
}

/// {t_P(X) = (1,1,1) : P in S^n \ M}; each t_P vanishes on M and not at P,
/// so the system's solution set is exactly M.
inline System defining_system(const FiniteSemigroup& s, const KernelAnalysis& ka,
                              const PointSet& m, std::uint64_t sweep_budget = 10'000'000) {
  std::uint64_t total = space_size(s, m.arity);
  if (total > sweep_budget)
    throw SweepBudgetError("complement sweep |S|^" + std::to_string(m.arity) + " = " +
                           std::to_string(total) + " exceeds the sweep budget");
  if (m.count() == 0) throw ConstructionFailedError("cannot define the empty set this way");
  System sys;
  sys.arity = m.arity;
  if (m.count() == static_cast<std::size_t>(total)) return sys;  // full space: empty system
  detail::check_synthesis_preconditions(s, ka);
  std::vector<std::uint64_t> m_codes;
  m.bits.for_each([&](std::size_t c) { m_codes.push_back(static_cast<std::uint64_t>(c)); });
  TermPtr identity_const =
      expr_atoms(m.arity, {Atom::constant(ka.gamma_identity)});
  for (std::uint64_t p = 0; p < total; ++p) {
    if (m.test(p)) continue;
    std::vector<std::uint64_t> domain = m_codes;
    domain.push_back(p);
    sys.equations.push_back(
        Equation{detail::build_tp_unchecked(s, ka, p, domain, m.arity), identity_const});
  }
  return sys;
}

}  // namespace eqdom

#endif  // EQDOM_WITNESS_HPP
