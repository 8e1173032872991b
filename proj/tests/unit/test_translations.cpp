#include "doctest.h"

#include <set>
#include <vector>

#include "eqdom/fixtures.hpp"
#include "eqdom/terms.hpp"
#include "eqdom/translations.hpp"

#include "test_rng.hpp"

using namespace eqdom;

namespace {

bool same_translations(const FiniteSemigroup& s, const ElementSet& ideal, int a, int b) {
  bool same = true;
  ideal.for_each([&](std::size_t x) {
    if (s.mul(a, static_cast<int>(x)) != s.mul(b, static_cast<int>(x))) same = false;
    if (s.mul(static_cast<int>(x), a) != s.mul(static_cast<int>(x), b)) same = false;
  });
  return same;
}

}  // namespace

TEST_CASE("action_triple on RS240 kernel elements") {
  const FiniteSemigroup& s = fixtures::rs240();
  KernelAnalysis ka = analyze_kernel(s);
  for (int alpha = 0; alpha < s.n; ++alpha) {
    const ReesElement& c = ka.coords(alpha);
    ActionTriple t = action_triple(s, ka, alpha);
    CHECK(t.g_alpha == c.g);
    for (int v : t.lambda_map) CHECK(v == c.lambda);
    for (int v : t.i_map) CHECK(v == c.i);
  }
}

TEST_CASE("action_triple on A5PLUS") {
  const FiniteSemigroup& s = fixtures::a5plus();
  KernelAnalysis ka = analyze_kernel(s);
  int u = *s.find("u");
  ActionTriple tu = action_triple(s, ka, u);
  CHECK(tu.g_alpha == ka.spec.group.identity);
  CHECK(tu.lambda_map == std::vector<int>{0});
  CHECK(tu.i_map == std::vector<int>{0});
  for (int h = 0; h < 60; ++h) {
    ActionTriple th = action_triple(s, ka, h);
    CHECK(th.g_alpha == ka.gamma_to_group[static_cast<std::size_t>(h)]);
  }
}

TEST_CASE("action formulas re-checked against raw products") {
  eqdom_test::Rng rng(0x5eed0020);
  for (const FiniteSemigroup* sp : {&fixtures::rs240(), &fixtures::a5plus()}) {
    const FiniteSemigroup& s = *sp;
    KernelAnalysis ka = analyze_kernel(s);
    const ReesSpec& spec = ka.spec;
    const FiniteGroup& g = spec.group;
    for (int trial = 0; trial < 1200; ++trial) {
      int alpha = rng.below_int(s.n);
      ActionTriple t = action_triple(s, ka, alpha);
      int lam = rng.below_int(spec.lambda_size);
      int gg = rng.below_int(g.order());
      int i = rng.below_int(spec.i_size);
      int ia1 = t.i_map[0];
      int la1 = t.lambda_map[0];
      ReesElement left = ka.coords(s.mul(alpha, ka.elem(lam, gg, i)));
      REQUIRE(left == ReesElement{t.lambda_map[static_cast<std::size_t>(lam)],
                                  g.mul(g.mul(t.g_alpha, spec.p_at(ia1, lam)), gg), i});
      ReesElement right = ka.coords(s.mul(ka.elem(lam, gg, i), alpha));
      REQUIRE(right == ReesElement{lam, g.mul(g.mul(gg, spec.p_at(i, la1)), t.g_alpha),
                                   t.i_map[static_cast<std::size_t>(i)]});
    }
  }
}

TEST_CASE("action_triple rejects a corrupted kernel analysis") {
  const FiniteSemigroup& s = fixtures::rs240();
  KernelAnalysis ka = analyze_kernel(s);
  std::swap(ka.from_coords[0], ka.from_coords[1]);  // break the coordinate map
  bool threw = false;
  try {
    for (int alpha = 0; alpha < s.n && !threw; ++alpha) action_triple(s, ka, alpha);
  } catch (const FormulaMismatchError&) {
    threw = true;
  }
  CHECK(threw);
}

TEST_CASE("sim_partition") {
  FiniteSemigroup n3 = fixtures::null_semigroup(3);
  SimPartition pn3 = sim_partition(n3, kernel(n3));
  CHECK(pn3.classes.size() == 1);
  CHECK(pn3.classes[0].size() == 3);

  const FiniteSemigroup& a5p = fixtures::a5plus();
  SimPartition pa = sim_partition(a5p, kernel(a5p));
  CHECK(pa.classes.size() == 60);  // {u, e} merge, everything else separates
  int u = *a5p.find("u");
  auto e = find_identity(fixtures::a5());
  REQUIRE(e.has_value());
  CHECK(pa.class_of[static_cast<std::size_t>(u)] == pa.class_of[static_cast<std::size_t>(*e)]);

  FiniteSemigroup lz2 = fixtures::left_zero(2);
  SimPartition pl = sim_partition(lz2, kernel(lz2));
  CHECK(pl.classes.size() == 2);

  CHECK_THROWS_AS(sim_partition(fixtures::symmetric(3),
                                idempotents(fixtures::symmetric(3))),
                  NotAnIdealError);
}

TEST_CASE("sim classes really are the translation-equality classes") {
  for (const FiniteSemigroup* sp :
       {&fixtures::a5plus(), &fixtures::rsing()}) {
    const FiniteSemigroup& s = *sp;
    ElementSet k = kernel(s);
    SimPartition part = sim_partition(s, k);
    std::set<int> seen;
    for (const auto& cls : part.classes)
      for (int m : cls) CHECK(seen.insert(m).second);
    CHECK(seen.size() == static_cast<std::size_t>(s.n));
    for (int a = 0; a < s.n; ++a)
      for (int b = a + 1; b < s.n; ++b)
        CHECK((part.class_of[static_cast<std::size_t>(a)] ==
               part.class_of[static_cast<std::size_t>(b)]) == same_translations(s, k, a, b));
  }
}

TEST_CASE("is_sim_trivial") {
  const FiniteSemigroup& rs = fixtures::rs240();
  CHECK(is_sim_trivial(rs, kernel(rs)).trivial);

  const FiniteSemigroup& a5p = fixtures::a5plus();
  SimVerdict v = is_sim_trivial(a5p, kernel(a5p));
  CHECK_FALSE(v.trivial);
  int u = *a5p.find("u");
  auto e = find_identity(fixtures::a5());
  CHECK(((v.alpha == *e && v.beta == u) || (v.alpha == u && v.beta == *e)));

  FiniteSemigroup n3 = fixtures::null_semigroup(3);
  SimVerdict vn = is_sim_trivial(n3, kernel(n3));
  CHECK_FALSE(vn.trivial);
  CHECK(same_translations(n3, kernel(n3), vn.alpha, vn.beta));
}

TEST_CASE("trivial ~_K means distinct elements differ on some kernel product") {
  const FiniteSemigroup& s = fixtures::rs240();
  ElementSet k = kernel(s);
  REQUIRE(is_sim_trivial(s, k).trivial);
  eqdom_test::Rng rng(0x5eed0021);
  for (int trial = 0; trial < 1000; ++trial) {
    int a = rng.below_int(s.n);
    int b = rng.below_int(s.n);
    if (a == b) continue;
    CHECK_FALSE(same_translations(s, k, a, b));
  }
}

TEST_CASE("substitution stability: t(alpha, r) = t(beta, r) for alpha ~_I beta") {
  eqdom_test::Rng rng(0x5eed0022);
  struct Case {
    const FiniteSemigroup* s;
    int alpha, beta;
  };
  FiniteSemigroup n3 = fixtures::null_semigroup(3);
  const FiniteSemigroup& a5p = fixtures::a5plus();
  std::vector<Case> cases{{&n3, *n3.find("a"), *n3.find("b")},
                          {&a5p, *a5p.find("u"), *find_identity(fixtures::a5())}};
  for (const Case& c : cases) {
    const FiniteSemigroup& s = *c.s;
    ElementSet ideal = kernel(s);
    REQUIRE(same_translations(s, ideal, c.alpha, c.beta));
    std::vector<int> ideal_members = ideal.members();
    for (int trial = 0; trial < 1000; ++trial) {
      int len = 1 + rng.below_int(8);
      std::vector<Atom> atoms;
      bool has_y = false;
      for (int p = 0; p < len; ++p) {
        switch (rng.below_int(3)) {
          case 0:
            atoms.push_back(Atom::var(0));  // x
            break;
          case 1:
            atoms.push_back(Atom::var(1));  // y
            has_y = true;
            break;
          default:
            atoms.push_back(Atom::constant(rng.below_int(s.n)));
        }
      }
      if (!has_y) {
        atoms[static_cast<std::size_t>(rng.below_int(len))] = Atom::var(1);
      }
      Term t = make_term(2, atoms);
      for (int r : ideal_members)
        REQUIRE(eval_term(s, t, {c.alpha, r}) == eval_term(s, t, {c.beta, r}));
    }
  }
}

TEST_CASE("class count never exceeds the refined translation bound") {
  for (const FiniteSemigroup* sp :
       {&fixtures::rs240(), &fixtures::a5plus(), &fixtures::rsing()}) {
    const FiniteSemigroup& s = *sp;
    KernelAnalysis ka = analyze_kernel(s);
    SimPartition part = sim_partition(s, ka.kernel);
    std::uint64_t bound = static_cast<std::uint64_t>(ka.spec.group.order());
    bound = sat_mul(bound, sat_pow(static_cast<std::uint64_t>(ka.spec.lambda_size),
                                   static_cast<std::uint64_t>(ka.spec.lambda_size)));
    bound = sat_mul(bound, sat_pow(static_cast<std::uint64_t>(ka.spec.i_size),
                                   static_cast<std::uint64_t>(ka.spec.i_size)));
    CHECK(static_cast<std::uint64_t>(part.classes.size()) <= bound);
  }
}

TEST_CASE("bound_checks") {
  const FiniteSemigroup& rs = fixtures::rs240();
  KernelAnalysis ka = analyze_kernel(rs);
  BoundReport r = bound_checks(rs, ka);
  CHECK(r.refined.value == 960);  // 60 * 2^2 * 2^2
  CHECK_FALSE(r.refined.violated);
  CHECK(r.coarse.saturated);  // 240^480 overflows; certainly not violated
  CHECK_FALSE(r.coarse.violated);

  const FiniteSemigroup& a5p = fixtures::a5plus();
  BoundReport r2 = bound_checks(a5p, analyze_kernel(a5p));
  CHECK(r2.refined.value == 60);
  CHECK(r2.refined.violated);  // 61 > 60

  FiniteSemigroup n3 = fixtures::null_semigroup(3);
  BoundReport r3 = bound_checks(n3, analyze_kernel(n3));
  CHECK(r3.coarse.value == 1);  // l = 1
  CHECK(r3.coarse.violated);
}
