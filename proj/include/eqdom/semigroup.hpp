#ifndef EQDOM_SEMIGROUP_HPP
#define EQDOM_SEMIGROUP_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eqdom/util.hpp"

namespace eqdom {

/// A finite semigroup given by named elements and a full Cayley table.
/// Elements are canonically indexed 0..n-1 by input order; table[a*n+b] is
/// the index of a*b. Instances are immutable after validation and safe to
/// share across threads.
struct FiniteSemigroup {
  std::vector<std::string> names;
  std::vector<std::uint16_t> table;  // row-major n*n
  int n = 0;

  int mul(int a, int b) const { return table[static_cast<std::size_t>(a) * n + b]; }

  const std::string& name(int i) const { return names[static_cast<std::size_t>(i)]; }

  std::optional<int> find(std::string_view name_) const {
    for (int i = 0; i < n; ++i)
      if (names[static_cast<std::size_t>(i)] == name_) return i;
    return std::nullopt;
  }

  // Left-to-right power, k >= 1.
  int pow(int a, std::uint64_t k) const {
    int acc = a;
    int sq = a;
    k -= 1;
    while (k) {
      if (k & 1) acc = mul(acc, sq);
      sq = mul(sq, sq);
      k >>= 1;
    }
    return acc;
  }
};

namespace detail {

inline void check_names(const std::vector<std::string>& names) {
  if (names.empty()) throw ParseError("semigroup needs at least one element");
  for (const auto& s : names) {
    if (s.empty()) throw ParseError("empty element name");
    for (char c : s)
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
        throw ParseError("element name '" + s + "' contains whitespace");
  }
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j]) throw ParseError("duplicate element name '" + names[i] + "'");
}

}  // namespace detail

/// Validates a raw index table: square, entries in range, associative.
/// Throws the first violating triple in lexicographic (a,b,c) order.
inline FiniteSemigroup validate_cayley(std::vector<std::string> names,
                                       const std::vector<std::vector<int>>& rows) {
  detail::check_names(names);
  const int n = static_cast<int>(names.size());
  if (static_cast<int>(rows.size()) != n) throw ParseError("table is not square");
  FiniteSemigroup s;
  s.n = n;
  s.names = std::move(names);
  s.table.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(rows[static_cast<std::size_t>(a)].size()) != n)
      throw ParseError("table row " + std::to_string(a) + " has wrong length");
    for (int b = 0; b < n; ++b) {
      int v = rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      if (v < 0 || v >= n)
        throw IndexOutOfRangeError("table entry (" + std::to_string(a) + "," + std::to_string(b) +
                                   ") = " + std::to_string(v) + " out of range");
      s.table[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>(v);
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (s.mul(s.mul(a, b), c) != s.mul(a, s.mul(b, c)))
          throw NotAssociativeError(
              a, b, c,
              "not associative at (" + s.name(a) + "," + s.name(b) + "," + s.name(c) + ")");
  return s;
}

inline std::optional<int> find_identity(const FiniteSemigroup& s) {
  for (int e = 0; e < s.n; ++e) {
    bool ok = true;
    for (int x = 0; x < s.n && ok; ++x) ok = s.mul(e, x) == x && s.mul(x, e) == x;
    if (ok) return e;
  }
  return std::nullopt;
}

/// Appends a fresh two-sided identity regardless of whether one exists.
inline FiniteSemigroup always_adjoin_identity(const FiniteSemigroup& s, const std::string& name) {
  if (s.find(name)) throw ParseError("identity name '" + name + "' already taken");
  const int n = s.n;
  FiniteSemigroup r;
  r.n = n + 1;
  r.names = s.names;
  r.names.push_back(name);
  r.table.resize(static_cast<std::size_t>(r.n) * r.n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      r.table[static_cast<std::size_t>(a) * r.n + b] = s.table[static_cast<std::size_t>(a) * n + b];
  for (int a = 0; a <= n; ++a) {
    r.table[static_cast<std::size_t>(a) * r.n + n] = static_cast<std::uint16_t>(a);
    r.table[static_cast<std::size_t>(n) * r.n + a] = static_cast<std::uint16_t>(a);
  }
  return r;
}

/// Returns s unchanged when a two-sided identity exists, otherwise adjoins one.
inline FiniteSemigroup adjoin_identity(const FiniteSemigroup& s) {
  if (find_identity(s)) return s;
  std::string name = "1";
  if (s.find(name)) {
    name = "u";
    for (int k = 0; s.find(name); ++k) name = "u" + std::to_string(k);
  }
  return always_adjoin_identity(s, name);
}

/// The principal two-sided ideal S^1 a S^1.
inline ElementSet principal_ideal(const FiniteSemigroup& s, int a) {
  ElementSet right(static_cast<std::size_t>(s.n));
  right.set(static_cast<std::size_t>(a));
  for (int x = 0; x < s.n; ++x) right.set(static_cast<std::size_t>(s.mul(a, x)));
  ElementSet out = right;
  right.for_each([&](std::size_t b) {
    for (int x = 0; x < s.n; ++x) out.set(static_cast<std::size_t>(s.mul(x, static_cast<int>(b))));
  });
  return out;
}

/// Ker(S): the minimal two-sided ideal, as the intersection of all principal
/// ideals. Nonempty for every finite semigroup.
inline ElementSet kernel(const FiniteSemigroup& s) {
  ElementSet acc = principal_ideal(s, 0);
  for (int a = 1; a < s.n; ++a) acc &= principal_ideal(s, a);
  return acc;
}

inline ElementSet idempotents(const FiniteSemigroup& s) {
  ElementSet out(static_cast<std::size_t>(s.n));
  for (int x = 0; x < s.n; ++x)
    if (s.mul(x, x) == x) out.set(static_cast<std::size_t>(x));
  return out;
}

inline std::optional<int> has_zero(const FiniteSemigroup& s) {
  for (int z = 0; z < s.n; ++z) {
    bool ok = true;
    for (int x = 0; x < s.n && ok; ++x) ok = s.mul(z, x) == z && s.mul(x, z) == z;
    if (ok) return z;
  }
  return std::nullopt;
}

inline bool is_ideal(const FiniteSemigroup& s, const ElementSet& set) {
  if (set.size() != static_cast<std::size_t>(s.n) || !set.any()) return false;
  bool ok = true;
  set.for_each([&](std::size_t x) {
    for (int y = 0; y < s.n; ++y) {
      if (!set.test(static_cast<std::size_t>(s.mul(static_cast<int>(x), y)))) ok = false;
      if (!set.test(static_cast<std::size_t>(s.mul(y, static_cast<int>(x))))) ok = false;
    }
  });
  return ok;
}

/// A multiplicatively closed subset repackaged as a semigroup of its own,
/// with the index map back into the parent.
struct SubSemigroup {
  FiniteSemigroup sg;
  std::vector<int> to_parent;            // sub index -> parent index
  std::vector<int> from_parent;          // parent index -> sub index or -1
};

inline SubSemigroup sub_semigroup(const FiniteSemigroup& s, const ElementSet& set) {
  SubSemigroup sub;
  sub.from_parent.assign(static_cast<std::size_t>(s.n), -1);
  set.for_each([&](std::size_t x) {
    sub.from_parent[x] = static_cast<int>(sub.to_parent.size());
    sub.to_parent.push_back(static_cast<int>(x));
  });
  const int m = static_cast<int>(sub.to_parent.size());
  if (m == 0) throw ParseError("empty subset is not a subsemigroup");
  sub.sg.n = m;
  sub.sg.names.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) sub.sg.names.push_back(s.name(sub.to_parent[static_cast<std::size_t>(i)]));
  sub.sg.table.resize(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int p = s.mul(sub.to_parent[static_cast<std::size_t>(a)], sub.to_parent[static_cast<std::size_t>(b)]);
      int q = sub.from_parent[static_cast<std::size_t>(p)];
      if (q < 0)
        throw ParseError("subset not closed under multiplication at (" + s.name(sub.to_parent[a]) +
                         "," + s.name(sub.to_parent[b]) + ")");
      sub.sg.table[static_cast<std::size_t>(a) * m + b] = static_cast<std::uint16_t>(q);
    }
  return sub;
}

}  // namespace eqdom

#endif  // EQDOM_SEMIGROUP_HPP
