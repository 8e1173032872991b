#ifndef EQDOM_FIXTURES_HPP
#define EQDOM_FIXTURES_HPP

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "eqdom/group.hpp"
#include "eqdom/rees.hpp"
#include "eqdom/semigroup.hpp"
#include "eqdom/util.hpp"

namespace eqdom {
namespace fixtures {

namespace detail {

using Perm = std::vector<int>;

inline std::string perm_name(const Perm& p) {
  std::string s = "p";
  for (int v : p) s += static_cast<char>('0' + v);
  return s;
}

inline Perm compose(const Perm& a, const Perm& b) {  // apply a, then b
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = b[static_cast<std::size_t>(a[i])];
  return r;
}

inline bool is_even(const Perm& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

inline FiniteSemigroup from_perms(std::vector<Perm> perms) {
  std::vector<std::string> names;
  names.reserve(perms.size());
  for (const auto& p : perms) names.push_back(perm_name(p));
  const int n = static_cast<int>(perms.size());
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n),
                                     std::vector<int>(static_cast<std::size_t>(n)));
  auto index_of = [&](const Perm& p) {
    for (int i = 0; i < n; ++i)
      if (perms[static_cast<std::size_t>(i)] == p) return i;
    throw ParseError("permutation set not closed under composition");
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          index_of(compose(perms[static_cast<std::size_t>(a)], perms[static_cast<std::size_t>(b)]));
  return validate_cayley(std::move(names), rows);
}

inline std::vector<Perm> all_perms(int k) {
  Perm p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace detail

/// The one-element semigroup.
inline FiniteSemigroup triv() {
  return validate_cayley({"e"}, {{0}});
}

/// Left-zero: x y = x.
inline FiniteSemigroup left_zero(int k) {
  std::vector<std::string> names;
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < k; ++i) {
    names.push_back(std::string(1, static_cast<char>('a' + i)));
    rows.emplace_back(static_cast<std::size_t>(k), i);
  }
  return validate_cayley(std::move(names), rows);
}

/// Right-zero: x y = y.
inline FiniteSemigroup right_zero(int k) {
  std::vector<std::string> names;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    names.push_back(std::string(1, static_cast<char>('a' + i)));
    rows[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = j;
  }
  return validate_cayley(std::move(names), rows);
}

/// Null semigroup on {0, a, b, ...}: every product is 0.
inline FiniteSemigroup null_semigroup(int k) {
  std::vector<std::string> names{"0"};
  for (int i = 1; i < k; ++i) names.push_back(std::string(1, static_cast<char>('a' + i - 1)));
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(k),
                                     std::vector<int>(static_cast<std::size_t>(k), 0));
  return validate_cayley(std::move(names), rows);
}

/// Cyclic group of order k, elements 1, c, c2, ...
inline FiniteSemigroup cyclic(int k) {
  std::vector<std::string> names{"1"};
  if (k > 1) names.push_back("c");
  for (int i = 2; i < k; ++i) names.push_back("c" + std::to_string(i));
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(k),
                                     std::vector<int>(static_cast<std::size_t>(k)));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % k;
  return validate_cayley(std::move(names), rows);
}

/// Symmetric group on k symbols, elements generated from permutation
/// composition (never hand-entered tables).
inline FiniteSemigroup symmetric(int k) {
  return detail::from_perms(detail::all_perms(k));
}

/// Alternating group on k symbols.
inline FiniteSemigroup alternating(int k) {
  std::vector<detail::Perm> perms;
  for (auto& p : detail::all_perms(k))
    if (detail::is_even(p)) perms.push_back(p);
  return detail::from_perms(std::move(perms));
}

/// Dihedral group of the regular k-gon (order 2k), as vertex permutations.
inline FiniteSemigroup dihedral(int k) {
  std::vector<detail::Perm> perms;
  for (auto& p : detail::all_perms(k)) {
    bool rot = true, refl = true;
    int shift = p[0];
    for (int i = 0; i < k; ++i) {
      if (p[static_cast<std::size_t>(i)] != (shift + i) % k) rot = false;
      if (p[static_cast<std::size_t>(i)] != ((shift - i) % k + k) % k) refl = false;
    }
    if (rot || refl) perms.push_back(p);
  }
  return detail::from_perms(std::move(perms));
}

/// Quaternion group Q8 via signed-unit arithmetic: 1, -1, i, -i, j, -j, k, -k.
inline FiniteSemigroup quaternion8() {
  // axis: 0 = 1, 1 = i, 2 = j, 3 = k
  static const int axis_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_mul[4][4] = {{+1, +1, +1, +1},
                                     {+1, -1, +1, -1},
                                     {+1, -1, -1, +1},
                                     {+1, +1, -1, -1}};
  std::vector<std::string> names{"1", "m1", "i", "mi", "j", "mj", "k", "mk"};
  auto code = [](int axis, int sign) { return axis * 2 + (sign < 0 ? 1 : 0); };
  std::vector<std::vector<int>> rows(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ax_a = a / 2, sg_a = a % 2 ? -1 : +1;
      int ax_b = b / 2, sg_b = b % 2 ? -1 : +1;
      rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          code(axis_mul[ax_a][ax_b], sg_a * sg_b * sign_mul[ax_a][ax_b]);
    }
  return validate_cayley(std::move(names), rows);
}

/// Rees spec of S_240 = (A_5, P, {1,2}, {1,2}), P = [[1,1],[1,g]] with g the
/// 5-cycle sending 0->1->2->3->4->0.
inline ReesSpec rs240_spec() {
  ReesSpec spec;
  spec.group = group_from_semigroup(alternating(5));
  spec.lambda_size = 2;
  spec.i_size = 2;
  auto g = spec.group.sg.find("p12340");
  if (!g) throw ParseError("5-cycle not found in A5 fixture");
  spec.p = {spec.group.identity, spec.group.identity, spec.group.identity, *g};
  spec.normalized = true;
  return spec;
}

/// Rees spec over C2 with the all-identity 2x2 sandwich matrix (singular).
inline ReesSpec rsing_spec() {
  ReesSpec spec;
  spec.group = group_from_semigroup(cyclic(2));
  spec.lambda_size = 2;
  spec.i_size = 2;
  spec.p.assign(4, spec.group.identity);
  spec.normalized = true;
  return spec;
}

inline const FiniteSemigroup& rs240() {
  static const FiniteSemigroup s = build_cayley_from_rees(rs240_spec());
  return s;
}

inline const FiniteSemigroup& rsing() {
  static const FiniteSemigroup s = build_cayley_from_rees(rsing_spec());
  return s;
}

/// A5 with a new identity u adjoined on top (a homogroup that is not a group).
inline const FiniteSemigroup& a5plus() {
  static const FiniteSemigroup s = always_adjoin_identity(alternating(5), "u");
  return s;
}

inline const FiniteSemigroup& a5() {
  static const FiniteSemigroup s = alternating(5);
  return s;
}

/// Named lookup for the CLI and tests. `param` feeds the parametric families
/// (cyclic k, null k, symmetric k, ...).
inline FiniteSemigroup by_name(const std::string& name, int param = 0) {
  if (name == "triv") return triv();
  if (name == "lz2") return left_zero(2);
  if (name == "rz2") return right_zero(2);
  if (name == "n3") return null_semigroup(3);
  if (name == "q8") return quaternion8();
  if (name == "s3") return symmetric(3);
  if (name == "s4") return symmetric(4);
  if (name == "a4") return alternating(4);
  if (name == "a5") return a5();
  if (name == "d4") return dihedral(4);
  if (name == "rs240") return rs240();
  if (name == "rsing") return rsing();
  if (name == "a5plus") return a5plus();
  if (name.size() == 2 && name[0] == 'c' && name[1] >= '2' && name[1] <= '9')
    return cyclic(name[1] - '0');
  if (name == "c10") return cyclic(10);
  if (name == "cyclic") return cyclic(param);
  if (name == "null") return null_semigroup(param);
  if (name == "leftzero") return left_zero(param);
  if (name == "rightzero") return right_zero(param);
  if (name == "symmetric") return symmetric(param);
  if (name == "alternating") return alternating(param);
  if (name == "dihedral") return dihedral(param);
  throw ParseError("unknown fixture '" + name + "'");
}

}  // namespace fixtures
}  // namespace eqdom

#endif  // EQDOM_FIXTURES_HPP
