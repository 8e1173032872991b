#ifndef EQDOM_GROUP_HPP
#define EQDOM_GROUP_HPP

#include <optional>
#include <vector>

#include "eqdom/semigroup.hpp"
#include "eqdom/util.hpp"

namespace eqdom {

/// A finite group: its semigroup table plus identity and inverse map.
struct FiniteGroup {
  FiniteSemigroup sg;
  int identity = 0;
  std::vector<int> inverse;

  int order() const { return sg.n; }
  int mul(int a, int b) const { return sg.mul(a, b); }
  int inv(int a) const { return inverse[static_cast<std::size_t>(a)]; }
  int conj(int g, int y) const { return mul(mul(g, y), inv(g)); }  // y^g = g y g^-1
  int comm(int a, int b) const { return mul(mul(mul(inv(a), inv(b)), a), b); }
  bool commute(int a, int b) const { return mul(a, b) == mul(b, a); }
};

/// Checks that s is a group (unique identity, all elements invertible) and
/// builds the inverse table. Throws NotAGroup otherwise.
inline FiniteGroup group_from_semigroup(const FiniteSemigroup& s) {
  ElementSet idem = idempotents(s);
  if (idem.count() != 1) throw NotAGroupError("expected exactly one idempotent, found " +
                                              std::to_string(idem.count()));
  auto e = find_identity(s);
  if (!e) throw NotAGroupError("the unique idempotent is not a two-sided identity");
  FiniteGroup g;
  g.sg = s;
  g.identity = *e;
  g.inverse.assign(static_cast<std::size_t>(s.n), -1);
  for (int x = 0; x < s.n; ++x) {
    for (int y = 0; y < s.n; ++y)
      if (s.mul(x, y) == *e && s.mul(y, x) == *e) {
        g.inverse[static_cast<std::size_t>(x)] = y;
        break;
      }
    if (g.inverse[static_cast<std::size_t>(x)] < 0)
      throw NotAGroupError("element " + s.name(x) + " has no inverse");
  }
  return g;
}

/// {g y g^-1 : g in G}.
inline ElementSet conjugacy_class(const FiniteGroup& g, int y) {
  ElementSet out(static_cast<std::size_t>(g.order()));
  for (int c = 0; c < g.order(); ++c) out.set(static_cast<std::size_t>(g.conj(c, y)));
  return out;
}

/// x != 1 together with y != 1 whose whole conjugacy class commutes with x.
struct ZeroDivisorWitness {
  int x = -1;
  int y = -1;
};

inline bool verify_zero_divisor(const FiniteGroup& g, const ZeroDivisorWitness& w) {
  if (w.x == g.identity || w.y == g.identity) return false;
  for (int c = 0; c < g.order(); ++c)
    if (!g.commute(w.x, g.conj(c, w.y))) return false;
  return true;
}

/// Plain triple scan, x then y in index order, all conjugators checked.
/// Returns the witness with the smallest (x, y) pair, or nothing.
inline std::optional<ZeroDivisorWitness> find_zero_divisor(const FiniteGroup& g) {
  for (int x = 0; x < g.order(); ++x) {
    if (x == g.identity) continue;
    for (int y = 0; y < g.order(); ++y) {
      if (y == g.identity) continue;
      bool all = true;
      for (int c = 0; c < g.order() && all; ++c) all = g.commute(x, g.conj(c, y));
      if (all) return ZeroDivisorWitness{x, y};
    }
  }
  return std::nullopt;
}

struct GroupEdVerdict {
  bool is_ed = false;
  std::optional<ZeroDivisorWitness> witness;
};

/// A finite group is an equational domain iff it has no zero-divisors.
inline GroupEdVerdict group_is_ed(const FiniteGroup& g) {
  auto w = find_zero_divisor(g);
  return GroupEdVerdict{!w.has_value(), w};
}

/// Smallest c (index order) with [a, c b c^-1] != 1. Empty only when (a, b)
/// is a zero-divisor pair.
inline std::optional<int> find_noncommuting_conjugator(const FiniteGroup& g, int a, int b) {
  for (int c = 0; c < g.order(); ++c)
    if (!g.commute(a, g.conj(c, b))) return c;
  return std::nullopt;
}

}  // namespace eqdom

#endif  // EQDOM_GROUP_HPP
