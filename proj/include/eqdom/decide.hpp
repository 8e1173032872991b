#ifndef EQDOM_DECIDE_HPP
#define EQDOM_DECIDE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "eqdom/group.hpp"
#include "eqdom/rees.hpp"
#include "eqdom/semigroup.hpp"
#include "eqdom/terms.hpp"
#include "eqdom/translations.hpp"
#include "eqdom/util.hpp"

namespace eqdom {

enum class Verdict { ed, not_ed };

/// ED certificate: the kernel coordinates plus the three attestations that
/// carried the verdict.
struct PositiveCert {
  int lambda_size = 0;
  int i_size = 0;
  int group_order = 0;
};

struct ZeroDivisorCert {
  int x = -1;  // group elements, as parent semigroup indices
  int y = -1;
};

struct SingularMatrixCert {
  bool rows = false;  // equal rows when true, equal columns otherwise
  int a = -1;
  int b = -1;
};

struct NontrivialSimCert {
  int alpha = -1;
  int beta = -1;
};

struct HasZeroCert {
  int zero = -1;
};

struct BoundViolationCert {
  bool refined = false;  // which bound: coarse l^{2l} or refined
  std::uint64_t bound = 0;
  std::uint64_t size = 0;
};

using Certificate = std::variant<PositiveCert, ZeroDivisorCert, SingularMatrixCert,
                                 NontrivialSimCert, HasZeroCert, BoundViolationCert>;

struct Decision {
  Verdict verdict = Verdict::not_ed;
  Certificate certificate;

  bool is_ed() const { return verdict == Verdict::ed; }
};

/// M_sem = {(x1,x2,x3,x4) : x1 = x2 or x3 = x4}, materialized. Used only by
/// the oracle path; the decision pipeline never builds it.
inline PointSet msem(const FiniteSemigroup& s, std::uint64_t sweep_budget = 10'000'000) {
  PointSet out = empty_point_set(s, 4, sweep_budget);
  const std::uint64_t n = static_cast<std::uint64_t>(s.n);
  for (std::uint64_t c = 0; c < out.universe; ++c) {
    std::uint64_t x4 = c % n;
    std::uint64_t x3 = (c / n) % n;
    std::uint64_t x2 = (c / (n * n)) % n;
    std::uint64_t x1 = c / (n * n * n);
    if (x1 == x2 || x3 == x4) out.set(c);
  }
  return out;
}

/// The criterion pipeline: zero shortcut, then kernel -> Rees decomposition
/// -> matrix nonsingularity -> group zero-divisors -> ~_K triviality. The
/// first failing necessary condition becomes the certificate.
inline Decision decide_ed(const FiniteSemigroup& s) {
  if (s.n > 1) {
    if (auto z = has_zero(s)) return Decision{Verdict::not_ed, HasZeroCert{*z}};
  }
  KernelAnalysis ka = analyze_kernel(s);
  MatrixVerdict mv = is_matrix_nonsingular(ka.spec);
  if (!mv.nonsingular())
    return Decision{Verdict::not_ed,
                    SingularMatrixCert{mv.kind == MatrixVerdict::Kind::equal_rows, mv.a, mv.b}};
  GroupEdVerdict ged = group_is_ed(ka.spec.group);
  if (!ged.is_ed) {
    int x = ka.group_to_parent[static_cast<std::size_t>(ged.witness->x)];
    int y = ka.group_to_parent[static_cast<std::size_t>(ged.witness->y)];
    return Decision{Verdict::not_ed, ZeroDivisorCert{x, y}};
  }
  SimVerdict sim = is_sim_trivial(s, ka.kernel);
  if (!sim.trivial)
    return Decision{Verdict::not_ed, NontrivialSimCert{sim.alpha, sim.beta}};
  return Decision{Verdict::ed,
                  PositiveCert{ka.spec.lambda_size, ka.spec.i_size, ka.spec.group.order()}};
}

/// Re-checks a decision's certificate through the underlying operations,
/// independently of the pipeline that produced it.
inline bool verify_decision(const FiniteSemigroup& s, const Decision& d) {
  if (auto* cert = std::get_if<HasZeroCert>(&d.certificate)) {
    if (s.n <= 1 || d.verdict != Verdict::not_ed) return false;
    for (int x = 0; x < s.n; ++x)
      if (s.mul(cert->zero, x) != cert->zero || s.mul(x, cert->zero) != cert->zero) return false;
    return true;
  }
  if (auto* cert = std::get_if<NontrivialSimCert>(&d.certificate)) {
    if (d.verdict != Verdict::not_ed || cert->alpha == cert->beta) return false;
    ElementSet k = kernel(s);
    bool same = true;
    k.for_each([&](std::size_t x) {
      if (s.mul(cert->alpha, static_cast<int>(x)) != s.mul(cert->beta, static_cast<int>(x)))
        same = false;
      if (s.mul(static_cast<int>(x), cert->alpha) != s.mul(static_cast<int>(x), cert->beta))
        same = false;
    });
    return same;
  }
  KernelAnalysis ka = analyze_kernel(s);
  if (auto* cert = std::get_if<SingularMatrixCert>(&d.certificate)) {
    if (d.verdict != Verdict::not_ed) return false;
    const ReesSpec& spec = ka.spec;
    if (cert->rows) {
      if (cert->a < 0 || cert->b >= spec.i_size || cert->a == cert->b) return false;
      for (int mu = 0; mu < spec.lambda_size; ++mu)
        if (spec.p_at(cert->a, mu) != spec.p_at(cert->b, mu)) return false;
      return true;
    }
    if (cert->a < 0 || cert->b >= spec.lambda_size || cert->a == cert->b) return false;
    for (int i = 0; i < spec.i_size; ++i)
      if (spec.p_at(i, cert->a) != spec.p_at(i, cert->b)) return false;
    return true;
  }
  if (auto* cert = std::get_if<ZeroDivisorCert>(&d.certificate)) {
    if (d.verdict != Verdict::not_ed) return false;
    int gx = ka.gamma_to_group[static_cast<std::size_t>(cert->x)];
    int gy = ka.gamma_to_group[static_cast<std::size_t>(cert->y)];
    if (gx < 0 || gy < 0) return false;
    return verify_zero_divisor(ka.spec.group, ZeroDivisorWitness{gx, gy});
  }
  if (auto* cert = std::get_if<BoundViolationCert>(&d.certificate)) {
    if (d.verdict != Verdict::not_ed) return false;
    BoundReport r = bound_checks(s, ka);
    const BoundValue& b = cert->refined ? r.refined : r.coarse;
    return b.violated && b.value == cert->bound && r.semigroup_size == cert->size;
  }
  const auto& cert = std::get<PositiveCert>(d.certificate);
  if (d.verdict != Verdict::ed) return false;
  if (cert.lambda_size != ka.spec.lambda_size || cert.i_size != ka.spec.i_size ||
      cert.group_order != ka.spec.group.order())
    return false;
  if (!is_matrix_nonsingular(ka.spec).nonsingular()) return false;
  if (find_zero_divisor(ka.spec.group)) return false;
  return is_sim_trivial(s, ka.kernel).trivial;
}

/// Criterion vs. brute-force oracle: decide_ed against "acl(M_sem) = M_sem"
/// computed from the full term-function closure.
struct OracleComparison {
  enum class Status { agree, disagree, inconclusive } status = Status::inconclusive;
  Decision decision;
  bool oracle_ed = false;
  std::string detail;
};

inline OracleComparison cross_check_with_oracle(const FiniteSemigroup& s,
                                                std::uint64_t closure_budget = 50'000,
                                                std::uint64_t sweep_budget = 10'000'000) {
  OracleComparison out;
  out.decision = decide_ed(s);
  PointSet m = msem(s, sweep_budget);
  AclResult acl = algebraic_closure(s, m, closure_budget, sweep_budget);
  if (!acl.complete) {
    out.status = OracleComparison::Status::inconclusive;
    out.detail = "term-function closure exceeded the budget";
    return out;
  }
  out.oracle_ed = acl.closure == m;
  bool criterion_ed = out.decision.is_ed();
  out.status = out.oracle_ed == criterion_ed ? OracleComparison::Status::agree
                                             : OracleComparison::Status::disagree;
  if (out.status == OracleComparison::Status::disagree)
    out.detail = std::string("criterion says ") + (criterion_ed ? "ED" : "NotED") +
                 ", oracle says " + (out.oracle_ed ? "ED" : "NotED");
  return out;
}

}  // namespace eqdom

#endif  // EQDOM_DECIDE_HPP
