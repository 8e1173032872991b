#ifndef EQDOM_TRANSLATIONS_HPP
#define EQDOM_TRANSLATIONS_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "eqdom/rees.hpp"
#include "eqdom/semigroup.hpp"
#include "eqdom/util.hpp"

namespace eqdom {

/// How an element alpha acts on the kernel: a group element g_alpha plus maps
/// Lambda -> Lambda and I -> I, such that for all lambda, g, i
///   alpha (lambda, 1, 1)  = (Lambda_a(lambda), g_a p[I_a(1)][lambda], 1)
///   (1, 1, i) alpha       = (1, p[i][Lambda_a(1)] g_a, I_a(i))
///   alpha (lambda, g, i)  = (Lambda_a(lambda), g_a p[I_a(1)][lambda] g, i)
///   (lambda, g, i) alpha  = (lambda, g p[i][Lambda_a(1)] g_a, I_a(i)).
struct ActionTriple {
  int g_alpha = 0;
  std::vector<int> lambda_map;
  std::vector<int> i_map;
};

/// Extracts the triple for alpha and verifies all four product formulas
/// exhaustively. A mismatch signals a kernel-analysis bug.
inline ActionTriple action_triple(const FiniteSemigroup& s, const KernelAnalysis& ka, int alpha) {
  const ReesSpec& spec = ka.spec;
  const FiniteGroup& g = spec.group;
  const int id = g.identity;
  ActionTriple t;
  t.lambda_map.resize(static_cast<std::size_t>(spec.lambda_size));
  t.i_map.resize(static_cast<std::size_t>(spec.i_size));
  for (int lam = 0; lam < spec.lambda_size; ++lam) {
    int prod = s.mul(alpha, ka.elem(lam, id, 0));
    if (!ka.in_kernel(prod)) throw FormulaMismatchError("alpha (lambda,1,1) left the kernel");
    t.lambda_map[static_cast<std::size_t>(lam)] = ka.coords(prod).lambda;
  }
  for (int i = 0; i < spec.i_size; ++i) {
    int prod = s.mul(ka.elem(0, id, i), alpha);
    if (!ka.in_kernel(prod)) throw FormulaMismatchError("(1,1,i) alpha left the kernel");
    t.i_map[static_cast<std::size_t>(i)] = ka.coords(prod).i;
  }
  // g_alpha from alpha (1,1,1) = (lambda_a, g_a, 1) under a normalized matrix.
  t.g_alpha = ka.coords(s.mul(alpha, ka.elem(0, id, 0))).g;

  const int ia1 = t.i_map[0];
  const int la1 = t.lambda_map[0];
  for (int lam = 0; lam < spec.lambda_size; ++lam) {
    ReesElement got = ka.coords(s.mul(alpha, ka.elem(lam, id, 0)));
    ReesElement want{t.lambda_map[static_cast<std::size_t>(lam)],
                     g.mul(t.g_alpha, spec.p_at(ia1, lam)), 0};
    if (got != want) throw FormulaMismatchError("action formula 1 failed");
  }
  for (int i = 0; i < spec.i_size; ++i) {
    ReesElement got = ka.coords(s.mul(ka.elem(0, id, i), alpha));
    ReesElement want{0, g.mul(spec.p_at(i, la1), t.g_alpha),
                     t.i_map[static_cast<std::size_t>(i)]};
    if (got != want) throw FormulaMismatchError("action formula 2 failed");
  }
  for (int lam = 0; lam < spec.lambda_size; ++lam)
    for (int gg = 0; gg < g.order(); ++gg)
      for (int i = 0; i < spec.i_size; ++i) {
        ReesElement got = ka.coords(s.mul(alpha, ka.elem(lam, gg, i)));
        ReesElement want{t.lambda_map[static_cast<std::size_t>(lam)],
                         g.mul(g.mul(t.g_alpha, spec.p_at(ia1, lam)), gg), i};
        if (got != want) throw FormulaMismatchError("action formula 3 failed");
        got = ka.coords(s.mul(ka.elem(lam, gg, i), alpha));
        want = ReesElement{lam, g.mul(g.mul(gg, spec.p_at(i, la1)), t.g_alpha),
                           t.i_map[static_cast<std::size_t>(i)]};
        if (got != want) throw FormulaMismatchError("action formula 4 failed");
      }
  return t;
}

/// Partition of S by ~_I: alpha ~ beta iff alpha x = beta x and x alpha =
/// x beta for every x in the ideal.
struct SimPartition {
  ElementSet ideal;
  std::vector<int> class_of;             // element -> class id
  std::vector<std::vector<int>> classes; // class id -> members, ascending
};

inline SimPartition sim_partition(const FiniteSemigroup& s, const ElementSet& ideal) {
  if (!is_ideal(s, ideal)) throw NotAnIdealError("the given set is not a two-sided ideal");
  std::vector<int> members = ideal.members();
  SimPartition part;
  part.ideal = ideal;
  part.class_of.assign(static_cast<std::size_t>(s.n), -1);

  std::unordered_map<std::uint64_t, std::vector<int>> buckets;
  std::vector<std::vector<std::uint16_t>> keys(static_cast<std::size_t>(s.n));
  for (int a = 0; a < s.n; ++a) {
    auto& key = keys[static_cast<std::size_t>(a)];
    key.reserve(members.size() * 2);
    for (int x : members) key.push_back(static_cast<std::uint16_t>(s.mul(a, x)));
    for (int x : members) key.push_back(static_cast<std::uint16_t>(s.mul(x, a)));
    std::uint64_t h = fnv1a64(key.data(), key.size() * sizeof(std::uint16_t));
    auto& bucket = buckets[h];
    int cls = -1;
    for (int b : bucket)
      if (keys[static_cast<std::size_t>(b)] == key) {
        cls = part.class_of[static_cast<std::size_t>(b)];
        break;
      }
    if (cls < 0) {
      cls = static_cast<int>(part.classes.size());
      part.classes.emplace_back();
      bucket.push_back(a);
    }
    part.class_of[static_cast<std::size_t>(a)] = cls;
    part.classes[static_cast<std::size_t>(cls)].push_back(a);
  }
  return part;
}

struct SimVerdict {
  bool trivial = true;
  int alpha = -1;  // smallest witnessing pair when nontrivial
  int beta = -1;
};

inline SimVerdict is_sim_trivial(const FiniteSemigroup& s, const ElementSet& ideal) {
  SimPartition part = sim_partition(s, ideal);
  for (const auto& cls : part.classes)
    if (cls.size() >= 2) return SimVerdict{false, cls[0], cls[1]};
  return SimVerdict{};
}

/// Cardinality bounds: a semigroup with an ideal of size l has at most l^{2l}
/// inner translations of it, and with kernel (G, P, Lambda, I) at most
/// |G| |Lambda|^|Lambda| |I|^|I|. Exceeding either rules out being an e.d.;
/// staying within decides nothing.
struct BoundValue {
  std::uint64_t value = 0;
  bool saturated = false;  // true bound exceeds uint64 range
  bool violated = false;   // |S| > bound
};

struct BoundReport {
  std::uint64_t semigroup_size = 0;
  std::uint64_t kernel_size = 0;
  BoundValue coarse;   // l^{2l}
  BoundValue refined;  // |G| |Lambda|^|Lambda| |I|^|I|
};

inline BoundValue make_bound(std::uint64_t value, std::uint64_t size) {
  BoundValue b;
  b.value = value;
  b.saturated = value == std::numeric_limits<std::uint64_t>::max();
  b.violated = !b.saturated && size > value;
  return b;
}

inline BoundReport bound_checks(const FiniteSemigroup& s, const KernelAnalysis& ka) {
  BoundReport r;
  r.semigroup_size = static_cast<std::uint64_t>(s.n);
  r.kernel_size = ka.kernel.count();
  r.coarse = make_bound(sat_pow(r.kernel_size, 2 * r.kernel_size), r.semigroup_size);
  std::uint64_t refined = static_cast<std::uint64_t>(ka.spec.group.order());
  refined = sat_mul(refined, sat_pow(static_cast<std::uint64_t>(ka.spec.lambda_size),
                                     static_cast<std::uint64_t>(ka.spec.lambda_size)));
  refined = sat_mul(refined, sat_pow(static_cast<std::uint64_t>(ka.spec.i_size),
                                     static_cast<std::uint64_t>(ka.spec.i_size)));
  r.refined = make_bound(refined, r.semigroup_size);
  return r;
}

}  // namespace eqdom

#endif  // EQDOM_TRANSLATIONS_HPP
