#ifndef EQDOM_REES_HPP
#define EQDOM_REES_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "eqdom/group.hpp"
#include "eqdom/semigroup.hpp"
#include "eqdom/util.hpp"

namespace eqdom {

/// Rees matrix data (G, P, Lambda, I): structure group, index set sizes and
/// the |I| x |Lambda| sandwich matrix of group elements. Indices are 0-based
/// internally; renderers print them 1-based to match the usual convention.
struct ReesSpec {
  FiniteGroup group;
  int lambda_size = 1;
  int i_size = 1;
  std::vector<int> p;  // row-major: p[i * lambda_size + mu]
  bool normalized = false;

  int p_at(int i, int mu) const { return p[static_cast<std::size_t>(i) * lambda_size + mu]; }
  std::uint64_t element_count() const {
    return sat_mul(sat_mul(static_cast<std::uint64_t>(group.order()),
                           static_cast<std::uint64_t>(lambda_size)),
                   static_cast<std::uint64_t>(i_size));
  }
};

/// One triple (lambda, g, i); lambda is the first index, i the second.
struct ReesElement {
  int lambda = 0;
  int g = 0;
  int i = 0;

  bool operator==(const ReesElement& o) const {
    return lambda == o.lambda && g == o.g && i == o.i;
  }
  bool operator!=(const ReesElement& o) const { return !(*this == o); }
};

/// (lambda, g, i)(mu, h, j) = (lambda, g p[i][mu] h, j).
inline ReesElement rees_multiply(const ReesSpec& spec, const ReesElement& x, const ReesElement& y) {
  return ReesElement{x.lambda, spec.group.mul(spec.group.mul(x.g, spec.p_at(x.i, y.lambda)), y.g),
                     y.i};
}

inline bool is_normalized(const ReesSpec& spec) {
  for (int mu = 0; mu < spec.lambda_size; ++mu)
    if (spec.p_at(0, mu) != spec.group.identity) return false;
  for (int i = 0; i < spec.i_size; ++i)
    if (spec.p_at(i, 0) != spec.group.identity) return false;
  return true;
}

struct MatrixVerdict {
  enum class Kind { nonsingular, equal_rows, equal_columns } kind = Kind::nonsingular;
  int a = -1;
  int b = -1;

  bool nonsingular() const { return kind == Kind::nonsingular; }
};

/// Nonsingular means no two equal rows and no two equal columns; reports the
/// first offending pair otherwise (rows checked before columns).
inline MatrixVerdict is_matrix_nonsingular(const ReesSpec& spec) {
  for (int i = 0; i < spec.i_size; ++i)
    for (int j = i + 1; j < spec.i_size; ++j) {
      bool eq = true;
      for (int mu = 0; mu < spec.lambda_size && eq; ++mu) eq = spec.p_at(i, mu) == spec.p_at(j, mu);
      if (eq) return MatrixVerdict{MatrixVerdict::Kind::equal_rows, i, j};
    }
  for (int mu = 0; mu < spec.lambda_size; ++mu)
    for (int nu = mu + 1; nu < spec.lambda_size; ++nu) {
      bool eq = true;
      for (int i = 0; i < spec.i_size && eq; ++i) eq = spec.p_at(i, mu) == spec.p_at(i, nu);
      if (eq) return MatrixVerdict{MatrixVerdict::Kind::equal_columns, mu, nu};
    }
  return MatrixVerdict{};
}

inline std::uint64_t rees_code(const ReesSpec& spec, const ReesElement& x) {
  return (static_cast<std::uint64_t>(x.lambda) * spec.group.order() + x.g) * spec.i_size + x.i;
}

inline ReesElement rees_decode(const ReesSpec& spec, std::uint64_t code) {
  ReesElement x;
  x.i = static_cast<int>(code % spec.i_size);
  code /= spec.i_size;
  x.g = static_cast<int>(code % spec.group.order());
  x.lambda = static_cast<int>(code / spec.group.order());
  return x;
}

inline std::string rees_element_name(const ReesSpec& spec, const ReesElement& x) {
  return "t" + std::to_string(x.lambda + 1) + "_" + spec.group.sg.name(x.g) + "_" +
         std::to_string(x.i + 1);
}

/// Materializes the triple semigroup. Associative by construction, still
/// revalidated through validate_cayley.
inline FiniteSemigroup build_cayley_from_rees(const ReesSpec& spec, std::uint64_t size_cap = 4096) {
  std::uint64_t total = spec.element_count();
  if (total > size_cap)
    throw SizeCapError("Rees semigroup has " + std::to_string(total) +
                       " elements, above the cap of " + std::to_string(size_cap));
  const int n = static_cast<int>(total);
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c)
    names.push_back(rees_element_name(spec, rees_decode(spec, static_cast<std::uint64_t>(c))));
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n),
                                     std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a) {
    ReesElement x = rees_decode(spec, static_cast<std::uint64_t>(a));
    for (int b = 0; b < n; ++b) {
      ReesElement y = rees_decode(spec, static_cast<std::uint64_t>(b));
      rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          static_cast<int>(rees_code(spec, rees_multiply(spec, x, y)));
    }
  }
  return validate_cayley(std::move(names), rows);
}

/// p'[i][mu] = p[0][0] p[i][0]^-1 p[i][mu] p[0][mu]^-1, which pins the first
/// row and column to the identity. The result is isomorphic to the input via
/// (lambda, g, i) -> (lambda, a_lambda g b_i, i) with a_mu = p[0][mu],
/// b_i = p[i][0] p[0][0]^-1; the transport is checked on every pair.
inline ReesSpec normalize_matrix(const ReesSpec& spec) {
  const FiniteGroup& g = spec.group;
  ReesSpec out = spec;
  const int p00 = spec.p_at(0, 0);
  for (int i = 0; i < spec.i_size; ++i)
    for (int mu = 0; mu < spec.lambda_size; ++mu)
      out.p[static_cast<std::size_t>(i) * spec.lambda_size + mu] =
          g.mul(g.mul(g.mul(p00, g.inv(spec.p_at(i, 0))), spec.p_at(i, mu)),
                g.inv(spec.p_at(0, mu)));
  out.normalized = true;
  if (!is_normalized(out))
    throw FormulaMismatchError("normalization did not produce a normalized matrix");

  auto phi = [&](const ReesElement& x) {
    int a = spec.p_at(0, x.lambda);
    int b = g.mul(spec.p_at(x.i, 0), g.inv(p00));
    return ReesElement{x.lambda, g.mul(g.mul(a, x.g), b), x.i};
  };
  std::uint64_t total = spec.element_count();
  for (std::uint64_t ca = 0; ca < total; ++ca) {
    ReesElement x = rees_decode(spec, ca);
    for (std::uint64_t cb = 0; cb < total; ++cb) {
      ReesElement y = rees_decode(spec, cb);
      if (phi(rees_multiply(spec, x, y)) != rees_multiply(out, phi(x), phi(y)))
        throw FormulaMismatchError("normalization transport check failed");
    }
  }
  return out;
}

/// Coordinatization of a completely simple semigroup living inside a parent
/// semigroup: the normalized ReesSpec plus both coordinate maps, expressed in
/// parent element indices.
struct KernelAnalysis {
  ElementSet kernel;                  // over the parent universe
  ReesSpec spec;                      // normalized
  std::vector<ReesElement> to_coords; // parent index -> coords (kernel members only)
  std::vector<int> from_coords;       // rees code -> parent index
  ElementSet gamma;                   // {(1, g, 1)} as parent indices
  int gamma_identity = -1;            // parent index of (1,1,1)
  std::vector<int> gamma_to_group;    // parent index -> group index or -1
  std::vector<int> group_to_parent;   // group index -> parent index

  int elem(int lambda, int g, int i) const {
    return from_coords[static_cast<std::size_t>(rees_code(spec, ReesElement{lambda, g, i}))];
  }
  int elem(const ReesElement& x) const { return elem(x.lambda, x.g, x.i); }
  const ReesElement& coords(int parent_index) const {
    return to_coords[static_cast<std::size_t>(parent_index)];
  }
  bool in_kernel(int parent_index) const {
    return kernel.test(static_cast<std::size_t>(parent_index));
  }
  bool in_gamma(int parent_index) const {
    return gamma.test(static_cast<std::size_t>(parent_index));
  }

  /// L_i = {(lambda, g, i)}, a left ideal of the parent semigroup.
  ElementSet left_ideal(int i) const {
    ElementSet out(kernel.size());
    for (int lambda = 0; lambda < spec.lambda_size; ++lambda)
      for (int g = 0; g < spec.group.order(); ++g)
        out.set(static_cast<std::size_t>(elem(lambda, g, i)));
    return out;
  }

  /// R_lambda = {(lambda, g, i)}, a right ideal of the parent semigroup.
  ElementSet right_ideal(int lambda) const {
    ElementSet out(kernel.size());
    for (int i = 0; i < spec.i_size; ++i)
      for (int g = 0; g < spec.group.order(); ++g)
        out.set(static_cast<std::size_t>(elem(lambda, g, i)));
    return out;
  }
};

namespace detail {

// Distinct principal right (xK) or left (Kx) ideals of a simple semigroup,
// with the ideal of `first` listed first and the rest ordered by smallest
// member. Returns the ideal index of every element.
inline std::vector<int> ideal_partition(const FiniteSemigroup& k, bool right, int first,
                                        int* count_out) {
  std::vector<ElementSet> ideals;
  std::vector<int> index_of(static_cast<std::size_t>(k.n), -1);
  std::vector<int> smallest;
  for (int x = 0; x < k.n; ++x) {
    ElementSet set(static_cast<std::size_t>(k.n));
    set.set(static_cast<std::size_t>(x));
    for (int y = 0; y < k.n; ++y)
      set.set(static_cast<std::size_t>(right ? k.mul(x, y) : k.mul(y, x)));
    int found = -1;
    for (std::size_t j = 0; j < ideals.size() && found < 0; ++j)
      if (ideals[j] == set) found = static_cast<int>(j);
    if (found < 0) {
      found = static_cast<int>(ideals.size());
      ideals.push_back(set);
      smallest.push_back(x);
    }
    index_of[static_cast<std::size_t>(x)] = found;
  }
  // Reorder: ideal of `first` gets index 0, others by smallest member.
  std::vector<int> order(ideals.size());
  for (std::size_t j = 0; j < order.size(); ++j) order[j] = static_cast<int>(j);
  int pivot = index_of[static_cast<std::size_t>(first)];
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if ((a == pivot) != (b == pivot)) return a == pivot;
    return smallest[static_cast<std::size_t>(a)] < smallest[static_cast<std::size_t>(b)];
  });
  std::vector<int> rank(ideals.size());
  for (std::size_t j = 0; j < order.size(); ++j) rank[static_cast<std::size_t>(order[j])] = static_cast<int>(j);
  for (auto& v : index_of) v = rank[static_cast<std::size_t>(v)];
  *count_out = static_cast<int>(ideals.size());
  return index_of;
}

}  // namespace detail

/// Rees decomposition of the subset K of s, which must be a completely simple
/// subsemigroup (in practice: the kernel). The construction picks the
/// smallest idempotent e, takes Gamma = eKe as the structure group, indexes
/// minimal right/left ideals, and chooses representatives q_lambda, w_i
/// adjusted so the sandwich matrix comes out normalized. Correctness is not
/// argued structurally: the coordinate bijection and the transported
/// multiplication are checked exhaustively, and any failure throws
/// NotCompletelySimple.
inline KernelAnalysis decompose_completely_simple(const FiniteSemigroup& s, const ElementSet& k_set) {
  if (!k_set.any()) throw NotCompletelySimpleError("empty subset");
  SubSemigroup ks = sub_semigroup(s, k_set);
  const FiniteSemigroup& k = ks.sg;

  if (kernel(k).count() != static_cast<std::size_t>(k.n))
    throw NotCompletelySimpleError("subset is not simple (kernel is a proper subset)");

  ElementSet idem = idempotents(k);
  if (!idem.any()) throw NotCompletelySimpleError("no idempotent found");
  int e = idem.members().front();

  int lambda_count = 0;
  int i_count = 0;
  std::vector<int> lambda_of = detail::ideal_partition(k, /*right=*/true, e, &lambda_count);
  std::vector<int> i_of = detail::ideal_partition(k, /*right=*/false, e, &i_count);

  // Gamma = eKe with identity e.
  ElementSet gamma_local(static_cast<std::size_t>(k.n));
  for (int x = 0; x < k.n; ++x)
    gamma_local.set(static_cast<std::size_t>(k.mul(k.mul(e, x), e)));
  FiniteGroup group;
  SubSemigroup gamma_sub = sub_semigroup(k, gamma_local);
  try {
    group = group_from_semigroup(gamma_sub.sg);
  } catch (const NotAGroupError& err) {
    throw NotCompletelySimpleError(std::string("Gamma = eKe is not a group: ") + err.what());
  }
  std::vector<int> group_of(static_cast<std::size_t>(k.n), -1);  // k index -> group index
  for (std::size_t gi = 0; gi < gamma_sub.to_parent.size(); ++gi)
    group_of[static_cast<std::size_t>(gamma_sub.to_parent[gi])] = static_cast<int>(gi);
  auto gamma_inv = [&](int x) {  // inverse inside Gamma, in k indices
    int gi = group_of[static_cast<std::size_t>(x)];
    if (gi < 0) throw NotCompletelySimpleError("element expected in Gamma is outside it");
    return gamma_sub.to_parent[static_cast<std::size_t>(group.inv(gi))];
  };

  // Representatives q_lambda in R_lambda /\ L_1 and w_i in R_1 /\ L_i,
  // smallest index each, then adjusted so that e q_lambda = e and w_i e = e.
  std::vector<int> q(static_cast<std::size_t>(lambda_count), -1);
  std::vector<int> w(static_cast<std::size_t>(i_count), -1);
  for (int x = 0; x < k.n; ++x) {
    int lam = lambda_of[static_cast<std::size_t>(x)];
    int ii = i_of[static_cast<std::size_t>(x)];
    if (ii == 0 && q[static_cast<std::size_t>(lam)] < 0) q[static_cast<std::size_t>(lam)] = x;
    if (lam == 0 && w[static_cast<std::size_t>(ii)] < 0) w[static_cast<std::size_t>(ii)] = x;
  }
  for (int lam = 0; lam < lambda_count; ++lam)
    if (q[static_cast<std::size_t>(lam)] < 0)
      throw NotCompletelySimpleError("R_" + std::to_string(lam + 1) + " /\\ L_1 is empty");
  for (int ii = 0; ii < i_count; ++ii)
    if (w[static_cast<std::size_t>(ii)] < 0)
      throw NotCompletelySimpleError("R_1 /\\ L_" + std::to_string(ii + 1) + " is empty");
  q[0] = e;
  w[0] = e;
  for (int lam = 1; lam < lambda_count; ++lam) {
    int x = q[static_cast<std::size_t>(lam)];
    int eq = k.mul(e, x);
    if (group_of[static_cast<std::size_t>(eq)] < 0)
      throw NotCompletelySimpleError("e q_lambda landed outside Gamma");
    q[static_cast<std::size_t>(lam)] = k.mul(x, gamma_inv(eq));
  }
  for (int ii = 1; ii < i_count; ++ii) {
    int x = w[static_cast<std::size_t>(ii)];
    int we = k.mul(x, e);
    if (group_of[static_cast<std::size_t>(we)] < 0)
      throw NotCompletelySimpleError("w_i e landed outside Gamma");
    w[static_cast<std::size_t>(ii)] = k.mul(gamma_inv(we), x);
  }

  ReesSpec spec;
  spec.group = group;
  spec.lambda_size = lambda_count;
  spec.i_size = i_count;
  spec.p.assign(static_cast<std::size_t>(lambda_count) * i_count, -1);
  for (int ii = 0; ii < i_count; ++ii)
    for (int mu = 0; mu < lambda_count; ++mu) {
      int prod = k.mul(w[static_cast<std::size_t>(ii)], q[static_cast<std::size_t>(mu)]);
      int gi = group_of[static_cast<std::size_t>(prod)];
      if (gi < 0) throw NotCompletelySimpleError("sandwich entry w_i q_mu is outside Gamma");
      spec.p[static_cast<std::size_t>(ii) * lambda_count + mu] = gi;
    }
  spec.normalized = is_normalized(spec);
  if (!spec.normalized)
    throw NotCompletelySimpleError("sandwich matrix failed to normalize");

  // Coordinate maps, in k indices first.
  std::vector<ReesElement> coords_local(static_cast<std::size_t>(k.n));
  std::vector<int> from_local(static_cast<std::size_t>(spec.element_count()), -1);
  for (int x = 0; x < k.n; ++x) {
    int exe = k.mul(k.mul(e, x), e);
    int gi = group_of[static_cast<std::size_t>(exe)];
    if (gi < 0) throw NotCompletelySimpleError("e x e is outside Gamma");
    ReesElement c{lambda_of[static_cast<std::size_t>(x)], gi, i_of[static_cast<std::size_t>(x)]};
    coords_local[static_cast<std::size_t>(x)] = c;
    std::uint64_t code = rees_code(spec, c);
    if (from_local[static_cast<std::size_t>(code)] >= 0)
      throw NotCompletelySimpleError("coordinate map is not injective");
    from_local[static_cast<std::size_t>(code)] = x;
  }
  if (static_cast<std::uint64_t>(k.n) != spec.element_count())
    throw NotCompletelySimpleError("|K| != |G| |Lambda| |I|");
  // fromCoords via representatives must invert toCoords.
  for (std::uint64_t code = 0; code < spec.element_count(); ++code) {
    ReesElement c = rees_decode(spec, code);
    int built = k.mul(k.mul(q[static_cast<std::size_t>(c.lambda)],
                            gamma_sub.to_parent[static_cast<std::size_t>(c.g)]),
                      w[static_cast<std::size_t>(c.i)]);
    if (built != from_local[static_cast<std::size_t>(code)])
      throw NotCompletelySimpleError("q_lambda g w_i does not invert the coordinate map");
  }
  // Transported multiplication must equal rees_multiply everywhere.
  for (int x = 0; x < k.n; ++x)
    for (int y = 0; y < k.n; ++y) {
      ReesElement lhs = coords_local[static_cast<std::size_t>(k.mul(x, y))];
      ReesElement rhs = rees_multiply(spec, coords_local[static_cast<std::size_t>(x)],
                                      coords_local[static_cast<std::size_t>(y)]);
      if (lhs != rhs)
        throw NotCompletelySimpleError("transported multiplication mismatch at (" + k.name(x) +
                                       "," + k.name(y) + ")");
    }

  // Lift to parent indices.
  KernelAnalysis ka;
  ka.kernel = k_set;
  ka.spec = std::move(spec);
  ka.to_coords.assign(static_cast<std::size_t>(s.n), ReesElement{-1, -1, -1});
  ka.from_coords.assign(from_local.size(), -1);
  ka.gamma = ElementSet(static_cast<std::size_t>(s.n));
  ka.gamma_to_group.assign(static_cast<std::size_t>(s.n), -1);
  ka.group_to_parent.assign(static_cast<std::size_t>(group.order()), -1);
  for (int x = 0; x < k.n; ++x)
    ka.to_coords[static_cast<std::size_t>(ks.to_parent[static_cast<std::size_t>(x)])] =
        coords_local[static_cast<std::size_t>(x)];
  for (std::size_t code = 0; code < from_local.size(); ++code)
    ka.from_coords[code] = ks.to_parent[static_cast<std::size_t>(from_local[code])];
  for (std::size_t gi = 0; gi < gamma_sub.to_parent.size(); ++gi) {
    int parent = ks.to_parent[static_cast<std::size_t>(gamma_sub.to_parent[gi])];
    ka.gamma.set(static_cast<std::size_t>(parent));
    ka.gamma_to_group[static_cast<std::size_t>(parent)] = static_cast<int>(gi);
    ka.group_to_parent[gi] = parent;
  }
  ka.gamma_identity = ks.to_parent[static_cast<std::size_t>(e)];
  return ka;
}

/// Standalone form: decomposes a semigroup that is expected to be completely
/// simple as a whole.
inline KernelAnalysis decompose_completely_simple(const FiniteSemigroup& k) {
  return decompose_completely_simple(k, ElementSet(static_cast<std::size_t>(k.n), true));
}

/// Kernel computation followed by decomposition.
inline KernelAnalysis analyze_kernel(const FiniteSemigroup& s) {
  return decompose_completely_simple(s, kernel(s));
}

}  // namespace eqdom

#endif  // EQDOM_REES_HPP
