#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "endoforge/constructors.hpp"
#include "endoforge/nearring.hpp"
#include "testkit.hpp"

using namespace endoforge;
using namespace endoforge::testkit;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an endoforge::Error";
  return ErrorCode::kInternal;
}

Map images(const GMap& f) { return Map(f.images().begin(), f.images().end()); }
Map power_map(const FiniteGroup& g, long long k) {
  Map f(g.order());
  for (Elem x = 0; x < g.order(); ++x) f[x] = g.pow(x, k);
  return f;
}
GMap pm(const FiniteGroup& g, long long k) { return GMap(g, power_map(g, k)); }
Endo pe(const FiniteGroup& g, long long k) { return require_endo(pm(g, k)); }

// Groups small enough for exhaustive oracle enumeration.
std::vector<NamedGroup> small_corpus() {
  auto all = theorem_corpus_upto(24);
  std::erase_if(all, [](const NamedGroup& g) { return g.group.order() > 16 && g.group.is_abelian(); });
  return all;
}

}  // namespace

TEST(MapArithmetic, Examples) {
  const FiniteGroup c3 = cyclic(3), c4 = cyclic(4);
  EXPECT_EQ(add(GMap::identity(c3), GMap::identity(c3)), pm(c3, 2));
  EXPECT_EQ(negate(GMap::zero(c4)), GMap::zero(c4));
  const GMap om = one_minus(pm(c4, 3));
  EXPECT_EQ(om, pm(c4, -2));
  EXPECT_EQ(om(0), 0u);
  EXPECT_EQ(om(2), 0u);
  EXPECT_FALSE(is_bijective(om));
  EXPECT_EQ(compose(pm(c4, 3), pm(c4, 3)), GMap::identity(c4));
  EXPECT_EQ(code_of([&] { add(GMap::identity(c3), GMap::identity(c4)); }), ErrorCode::kGroupMismatch);
  EXPECT_EQ(code_of([&] { GMap(c3, {0, 1}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { GMap(c3, {0, 1, 3}); }), ErrorCode::kInvalidArgument);
}

TEST(MapArithmetic, CompositionIsLeftToRight) {
  const FiniteGroup g = symmetric(3);
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const Map a = rng.map(g), b = rng.map(g);
    EXPECT_EQ(images(compose(GMap(g, a), GMap(g, b))), oracle_compose(a, b));
  }
}

TEST(MapArithmetic, CircleExamples) {
  const FiniteGroup g = dihedral(4);
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    Map m = rng.map(g);
    m[0] = 0;
    const GMap psi(g, m);
    EXPECT_EQ(circle(GMap::zero(g), psi), psi);
    EXPECT_EQ(circle(psi, GMap::zero(g)), psi);
  }
  const FiniteGroup c7 = cyclic(7);
  EXPECT_EQ(circle(pm(c7, 3), pm(c7, 5)), GMap::zero(c7));
}

TEST(MapArithmetic, CircleMatchesPointwiseFormula) {
  const FiniteGroup g = symmetric(3);
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const Map a = rng.map(g), b = rng.map(g);
    const Map ab = oracle_compose(a, b);
    const GMap c = circle(GMap(g, a), GMap(g, b));
    for (Elem x = 0; x < g.order(); ++x) EXPECT_EQ(c(x), g.mul(g.mul(b[x], g.inv(ab[x])), a[x]));
  }
}

TEST(NearRingLaws, LeftDistributivityAndNegation) {
  Rng rng(17);
  for (const auto& [name, g, data] : small_corpus()) {
    for (int t = 0; t < 30; ++t) {
      const GMap phi(g, rng.map(g)), psi(g, rng.map(g)), theta(g, rng.map(g));
      EXPECT_EQ(compose(phi, add(psi, theta)), add(compose(phi, psi), compose(phi, theta))) << name;
      EXPECT_EQ(negate(add(phi, psi)), add(negate(psi), negate(phi))) << name;
    }
  }
}

TEST(NearRingLaws, RightDistributivityNeedsAnEndomorphism) {
  Rng rng(19);
  for (const auto& [name, g, data] : small_corpus()) {
    const auto endos = enumerate_endomorphisms(g);
    for (int t = 0; t < 30; ++t) {
      const GMap psi(g, rng.map(g)), theta(g, rng.map(g));
      const Endo& e = rng.pick(endos);
      EXPECT_EQ(add(compose(psi, e), compose(theta, e)), compose(add(psi, theta), e)) << name;
    }
  }
  // Inversion on S3 is not an endomorphism, and the law fails for it.
  const FiniteGroup g = symmetric(3);
  const GMap inv = pm(g, -1), id = GMap::identity(g);
  bool found = false;
  for (const Endo& chi : enumerate_endomorphisms(g))
    found = found || add(compose(id, inv), compose(chi.map(), inv)) != compose(add(id, chi.map()), inv);
  EXPECT_TRUE(found);
}

TEST(AsEndo, Examples) {
  const FiniteGroup s3 = symmetric(3);
  const Endo id = require_endo(GMap::identity(s3));
  EXPECT_TRUE(id.kernel().is_trivial());
  EXPECT_EQ(id.image().order(), 6u);
  const auto r = as_endo(pm(s3, -1));
  ASSERT_FALSE(r.has_value());
  const HomViolation v = r.error();
  EXPECT_NE(s3.inv(s3.mul(v.x, v.y)), s3.mul(s3.inv(v.x), s3.inv(v.y)));
  EXPECT_EQ(code_of([&] { require_endo(pm(s3, -1)); }), ErrorCode::kNotHomomorphism);
  for (const auto& t : {std::vector<long long>{2, 4}, {3, 3}, {8}}) {
    const FiniteGroup g = abelian(t);
    EXPECT_TRUE(as_endo(pm(g, 2)).has_value());
  }
}

TEST(AsEndo, AgreesWithAllPairsOracle) {
  Rng rng(23);
  for (const auto& [name, g, data] : small_corpus()) {
    const auto endos = oracle_endomorphisms(g);
    for (int t = 0; t < 200; ++t) {
      Map f = rng.pick(endos);
      if (t % 2) f[rng.below(g.order())] = static_cast<Elem>(rng.below(g.order()));
      if (t % 5 == 0) f = rng.map(g);
      const bool hom = oracle_is_hom(g, f);
      const auto r = as_endo(GMap(g, f));
      ASSERT_EQ(r.has_value(), hom) << name;
      if (!hom) {
        const auto [x, y] = r.error();
        EXPECT_NE(f[g.mul(x, y)], g.mul(f[x], f[y])) << name;
      }
    }
  }
}

TEST(Endo, CachedDataMatchesRecomputation) {
  for (const auto& [name, g, data] : small_corpus()) {
    for (const Endo& e : enumerate_endomorphisms(g)) {
      const Map f = images(e);
      ASSERT_EQ(Map(e.kernel().elements().begin(), e.kernel().elements().end()), oracle_kernel(g, f)) << name;
      ASSERT_EQ(Map(e.image().elements().begin(), e.image().elements().end()), oracle_image(g, f)) << name;
      ASSERT_EQ(e.is_fpf(), oracle_fpf(f)) << name;
      const Map im = oracle_image(g, f);
      ASSERT_EQ(e.is_abelian(), oracle_commute(g, im, im)) << name;
    }
  }
}

TEST(Enumeration, MatchesOracleEnumeration) {
  auto groups = small_corpus();
  for (auto& ng : theorem_corpus())
    if (ng.name == "S4" || ng.name == "A4" || ng.name == "F(7,3)" || ng.name == "Heis(3)") groups.push_back(ng);
  for (const auto& [name, g, data] : groups) {
    std::vector<Map> lib;
    for (const Endo& e : enumerate_endomorphisms(g)) lib.push_back(images(e));
    EXPECT_TRUE(std::is_sorted(lib.begin(), lib.end())) << name;
    EXPECT_EQ(lib, oracle_endomorphisms(g)) << name;
  }
}

TEST(Enumeration, FilterExamples) {
  const auto c5 = enumerate_endomorphisms(cyclic(5), EndoFilter::parse("fpf"));
  std::vector<Map> expected;
  for (long long s : {0, 2, 3, 4}) expected.push_back(power_map(cyclic(5), s));
  std::vector<Map> got;
  for (const Endo& e : c5) got.push_back(images(e));
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(got, expected);

  EXPECT_TRUE(enumerate_endomorphisms(symmetric(3), EndoFilter::parse("fpf-abelian nontrivial")).empty());

  const FiniteGroup s4 = symmetric(4);
  const auto s4e = enumerate_endomorphisms(s4, EndoFilter::parse("fpf-abelian,nontrivial"));
  ASSERT_EQ(s4e.size(), 3u);
  const Subgroup a4 = derived_subgroup(s4);
  for (const Endo& e : s4e) {
    ASSERT_EQ(e.image().order(), 2u);
    const Elem t = e.image().elements()[1];
    EXPECT_TRUE(a4.contains(t));
    EXPECT_EQ(s4.element_order(t), 2u);
  }
}

TEST(Enumeration, FilterParsingAndCaps) {
  const EndoFilter f = EndoFilter::parse("fpf, abelian  nontrivial");
  EXPECT_TRUE(f.fpf && f.abelian && f.nontrivial && !f.quasi_invertible);
  EXPECT_EQ(EndoFilter::parse(f.to_string()).to_string(), f.to_string());
  const EndoFilter all = EndoFilter::parse("all");
  EXPECT_FALSE(all.fpf || all.abelian || all.nontrivial || all.quasi_invertible);
  EXPECT_TRUE(EndoFilter::parse("quasi-invertible").quasi_invertible);
  EXPECT_EQ(code_of([] { EndoFilter::parse("fpf bogus"); }), ErrorCode::kInvalidArgument);
  Limits tight;
  tight.max_enum_order = 10;
  EXPECT_EQ(code_of([&] { count_endomorphisms(cyclic(11), {}, tight); }), ErrorCode::kCapExceeded);
  EXPECT_EQ(count_endomorphisms(cyclic(10), {}, tight), 10u);
  // Filters agree with post-hoc filtering.
  for (const auto& [name, g, data] : small_corpus()) {
    const auto all_e = enumerate_endomorphisms(g);
    for (const char* spec : {"fpf", "abelian", "nontrivial", "fpf-abelian", "quasi-invertible"}) {
      const EndoFilter flt = EndoFilter::parse(spec);
      const auto expected = std::count_if(all_e.begin(), all_e.end(), [&](const Endo& e) { return flt.accepts(e); });
      EXPECT_EQ(count_endomorphisms(g, flt), static_cast<std::size_t>(expected)) << name << ' ' << spec;
    }
  }
}

TEST(Fpf, Examples) {
  const FiniteGroup c4 = cyclic(4);
  EXPECT_FALSE(identity_endo(c4).is_fpf());
  EXPECT_TRUE(zero_endo(c4).is_fpf());
  EXPECT_FALSE(pe(c4, 3).is_fpf());
  EXPECT_TRUE(zero_endo(cyclic(1)).is_fpf());
}

TEST(Fpf, EquivalentToBijectiveOneMinus) {
  for (const auto& [name, g, data] : small_corpus())
    for (const Endo& e : enumerate_endomorphisms(g))
      ASSERT_EQ(is_fpf(e), is_bijective(one_minus(e))) << name;
}

TEST(SumCriterion, Examples) {
  const FiniteGroup c6 = cyclic(6), s3 = symmetric(3);
  EXPECT_TRUE(sum_endo_criterion(identity_endo(c6), identity_endo(c6)));
  EXPECT_FALSE(sum_endo_criterion(identity_endo(s3), identity_endo(s3)));
  for (const Endo& e : enumerate_endomorphisms(s3)) EXPECT_TRUE(sum_endo_criterion(zero_endo(s3), e));
}

TEST(SumCriterion, EquivalentToSumBeingAnEndomorphism) {
  for (const auto& [name, g, data] : small_corpus()) {
    const auto endos = enumerate_endomorphisms(g);
    Rng rng(g.order());
    const std::size_t pairs = std::min<std::size_t>(endos.size() * endos.size(), 3000);
    for (std::size_t t = 0; t < pairs; ++t) {
      const Endo& a = rng.pick(endos);
      const Endo& b = rng.pick(endos);
      const GMap s = add(a, b);
      const bool criterion = sum_endo_criterion(a, b);
      ASSERT_EQ(criterion, as_endo(s).has_value()) << name;
      ASSERT_EQ(criterion, oracle_commute(g, oracle_image(g, images(a)), oracle_image(g, images(b)))) << name;
      if (criterion) ASSERT_EQ(s, add(b, a)) << name;
    }
  }
}

TEST(QuasiInverse, Examples) {
  const FiniteGroup c7 = cyclic(7), c5 = cyclic(5);
  EXPECT_EQ(quasi_inverse(zero_endo(c7))->map(), GMap::zero(c7));
  EXPECT_EQ(quasi_inverse(pe(c7, 3))->map(), pm(c7, 5));
  EXPECT_EQ(compose(one_minus(pm(c7, 3)), one_minus(pm(c7, 5))), GMap::identity(c7));
  EXPECT_EQ(quasi_inverse(pe(c5, 2))->map(), pm(c5, 2));
  EXPECT_EQ(code_of([&] { quasi_inverse(identity_endo(c7)); }), ErrorCode::kNotFpf);
  EXPECT_EQ(code_of([&] { quasi_inverse_candidate(pm(c7, 1)); }), ErrorCode::kNotFpf);
}

TEST(QuasiInverse, PresentExactlyForAbelianEndomorphisms) {
  for (const auto& [name, g, data] : small_corpus()) {
    const auto gens = oracle_generators(g);
    for (const Endo& e : enumerate_endomorphisms(g, EndoFilter::parse("fpf"))) {
      const auto psi = quasi_inverse(e);
      const Map f = images(e);
      ASSERT_EQ(psi.has_value(), oracle_image_abelian(g, gens, f)) << name;
      const auto cand = oracle_quasi_inverse_map(g, f);
      ASSERT_TRUE(cand.has_value());
      ASSERT_EQ(images(quasi_inverse_candidate(e)), *cand) << name;
      ASSERT_EQ(psi.has_value(), oracle_is_hom(g, *cand)) << name;
      if (psi) {
        ASSERT_EQ(compose(one_minus(e), one_minus(*psi)), GMap::identity(g)) << name;
        ASSERT_EQ(add(e, *psi), compose(e, *psi)) << name;
        ASSERT_EQ(circle(e, *psi), GMap::zero(g)) << name;
      }
    }
  }
}

TEST(QuasiInverse, RecabCheck) {
  for (const FiniteGroup& g : {symmetric(4), dihedral(6), abelian({2, 4}), frobenius(7, 3).group}) {
    const RecabResult r = recab_check(g);
    EXPECT_TRUE(r.holds);
    EXPECT_FALSE(r.counterexample.has_value());
    EXPECT_EQ(r.quasi_invertible, r.abelian_fpf);
    if (g.is_abelian()) EXPECT_EQ(r.quasi_invertible, r.fpf);
  }
}

TEST(QuasiInverse, PropertiesReport) {
  const FiniteGroup c7 = cyclic(7);
  EXPECT_TRUE(quasi_inverse_properties(pe(c7, 3), pe(c7, 5)).all());
  EXPECT_TRUE(quasi_inverse_properties(zero_endo(c7), zero_endo(c7)).all());
  EXPECT_EQ(code_of([&] { quasi_inverse_properties(pe(c7, 3), pe(c7, 3)); }), ErrorCode::kInvalidArgument);

  const auto f = frobenius(7, 3);
  const FiniteGroup& g = f.group;
  // φ kills C7 and sends b to b².
  Map phi(g.order());
  for (Elem x = 0; x < g.order(); ++x) phi[x] = g.pow(7, 2 * (x / 7));
  const Endo e = require_endo(GMap(g, phi));
  ASSERT_TRUE(e.is_fpf());
  const auto psi = quasi_inverse(e);
  ASSERT_TRUE(psi.has_value());
  const QuasiInverseReport r = quasi_inverse_properties(e, *psi);
  EXPECT_TRUE(r.all());
  EXPECT_EQ(e.image(), psi->image());
  EXPECT_EQ(e.image(), f.data.H);
}

TEST(Nilpotent, Examples) {
  const FiniteGroup c5 = cyclic(5);
  EXPECT_EQ(nilpotency_index(zero_endo(c5)), 1u);
  EXPECT_EQ(geometric_quasi_inverse(zero_endo(c5)), zero_endo(c5));
  EXPECT_FALSE(nilpotency_index(identity_endo(c5)).has_value());

  const FiniteGroup v = abelian({2, 2});  // (a, b) has index a + 2b
  const Endo phi = require_endo(GMap(v, {0, 0, 1, 1}));  // (a, b) ↦ (b, 0)
  EXPECT_EQ(nilpotency_index(phi), 2u);
  EXPECT_EQ(geometric_quasi_inverse(phi), phi);

  const FiniteGroup h = heisenberg(3);
  const Elem a = 1, b = 3;
  Map eta(h.order());
  for (Elem x = 0; x < h.order(); ++x) eta[x] = h.pow(b, x % 3);  // a ↦ b, b ↦ 1, z ↦ 1
  const Endo e = require_endo(GMap(h, eta));
  EXPECT_EQ(e(a), b);
  EXPECT_EQ(e(b), 0u);
  EXPECT_EQ(nilpotency_index(e), 2u);
  EXPECT_EQ(geometric_quasi_inverse(e).map(), negate(e));
  EXPECT_EQ(code_of([&] { geometric_quasi_inverse(identity_endo(c5)); }), ErrorCode::kNotNilpotent);
}

TEST(Nilpotent, GeometricSeriesEqualsQuasiInverse) {
  for (const auto& [name, g, data] : small_corpus()) {
    for (const Endo& e : enumerate_endomorphisms(g, EndoFilter::parse("abelian"))) {
      if (!nilpotency_index(e)) continue;
      ASSERT_TRUE(e.is_fpf()) << name;
      ASSERT_EQ(geometric_quasi_inverse(e), quasi_inverse(e).value()) << name;
    }
  }
}
