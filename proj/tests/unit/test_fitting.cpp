#include <gtest/gtest.h>

#include <algorithm>

#include "endoforge/constructors.hpp"
#include "endoforge/fitting.hpp"
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

Map elems(const Subgroup& s) { return Map(s.elements().begin(), s.elements().end()); }
Map images(const Endo& e) { return Map(e.images().begin(), e.images().end()); }

Endo frobenius_b_squared(const SemidirectProduct& f) {
  const FiniteGroup& g = f.group;
  Map phi(g.order());
  for (Elem x = 0; x < g.order(); ++x) phi[x] = g.pow(7, 2 * (x / 7));
  return require_endo(GMap(g, phi));
}

// Independent check of every decomposition invariant.
void check_decomposition(const FiniteGroup& g, const Endo& e, const FittingDecomposition& d,
                         const std::string& name) {
  const Map f = images(e);
  std::vector<Map> powers = {Map(g.order())};
  for (Elem x = 0; x < g.order(); ++x) powers[0][x] = x;
  for (std::size_t k = 1; k <= d.n + 1; ++k) powers.push_back(oracle_compose(powers.back(), f));
  std::size_t oracle_n = 1;
  while (oracle_kernel(g, powers[oracle_n]).size() != oracle_kernel(g, powers[oracle_n + 1]).size() ||
         oracle_image(g, powers[oracle_n]).size() != oracle_image(g, powers[oracle_n + 1]).size()) {
    ++oracle_n;
    if (oracle_n + 1 >= powers.size()) powers.push_back(oracle_compose(powers.back(), f));
  }
  ASSERT_EQ(d.n, oracle_n) << name;
  ASSERT_EQ(elems(d.K), oracle_kernel(g, powers[d.n])) << name;
  ASSERT_EQ(elems(d.H), oracle_image(g, powers[d.n])) << name;
  ASSERT_TRUE(is_normal_set(g, elems(d.K))) << name;
  ASSERT_EQ(d.K.order() * d.H.order(), g.order()) << name;
  for (Elem h : d.H.elements()) ASSERT_TRUE(h == 0 || !d.K.contains(h)) << name;
  for (Elem x = 0; x < g.order(); ++x) {
    ASSERT_EQ(g.mul(d.data.factor[x].h, d.data.factor[x].k), x) << name;
    ASSERT_TRUE(d.H.contains(d.data.factor[x].h) && d.K.contains(d.data.factor[x].k)) << name;
  }
  // φ is nilpotent on K and permutes H.
  for (Elem k : d.K.elements()) ASSERT_EQ(powers[d.n][k], 0u) << name;
  Map hset;
  for (Elem h : d.H.elements()) hset.push_back(f[h]);
  std::sort(hset.begin(), hset.end());
  ASSERT_EQ(hset, elems(d.H)) << name;
}

}  // namespace

TEST(FittingIndex, Examples) {
  const FiniteGroup c7 = cyclic(7);
  EXPECT_EQ(fitting_index(identity_endo(c7)), 1u);
  EXPECT_EQ(fitting_index(zero_endo(c7)), 1u);
  const FiniteGroup v = abelian({2, 2});
  EXPECT_EQ(fitting_index(require_endo(GMap(v, {0, 0, 1, 1}))), 2u);
}

TEST(FittingDecomposition, Examples) {
  const auto f = frobenius(7, 3);
  const FittingDecomposition d = fitting_decomposition(frobenius_b_squared(f));
  EXPECT_EQ(d.K, f.data.K);
  EXPECT_EQ(d.H, f.data.H);

  const FiniteGroup s4 = symmetric(4);
  for (const Endo& e : enumerate_endomorphisms(s4)) {
    const FittingDecomposition dd = fitting_decomposition(e);
    if (nilpotency_index(e)) {
      EXPECT_EQ(dd.K.order(), s4.order());
      EXPECT_TRUE(dd.H.is_trivial());
    }
    if (is_bijective(e)) {
      EXPECT_TRUE(dd.K.is_trivial());
      EXPECT_EQ(dd.H.order(), s4.order());
    }
  }
}

TEST(FittingDecomposition, InvariantsOnEveryEndomorphism) {
  for (const auto& [name, g, data] : theorem_corpus_upto(32)) {
    if (g.order() >= 32 && g.is_abelian()) continue;  // the acceptance suite sweeps these
    for (const Endo& e : enumerate_endomorphisms(g)) {
      check_decomposition(g, e, fitting_decomposition(e), name);
      ASSERT_EQ(fitting_index(e), fitting_decomposition(e).n) << name;
      if (::testing::Test::HasFatalFailure()) return;
    }
  }
}

TEST(FittingDecomposition, AbelianFpfHasAbelianH) {
  for (const auto& [name, g, data] : theorem_corpus_upto(32)) {
    if (g.order() >= 32 && g.is_abelian()) continue;
    for (const Endo& e : enumerate_endomorphisms(g, EndoFilter::parse("fpf-abelian"))) {
      const Map h = elems(fitting_decomposition(e).H);
      ASSERT_TRUE(oracle_commute(g, h, h)) << name;
    }
  }
}

TEST(Restriction, Examples) {
  const auto f = frobenius(7, 3);
  const Endo phi = frobenius_b_squared(f);
  const RestrictedEndo r = restrict_endo(phi, f.data.K);
  EXPECT_EQ(r.endo.group().order(), 7u);
  EXPECT_TRUE(r.endo.is_zero());
  const RestrictedEndo t = restrict_endo(phi, Subgroup::trivial(f.group));
  EXPECT_EQ(t.endo.group().order(), 1u);
  EXPECT_TRUE(t.endo.is_zero());
  // ⟨b⟩ is invariant, its conjugates are not.
  const Subgroup other = generated_subgroup(f.group, std::vector<Elem>{f.group.conj(7, 1)});
  ASSERT_TRUE(invariance_witness(phi, other).has_value());
  const Elem w = *invariance_witness(phi, other);
  EXPECT_TRUE(other.contains(w));
  EXPECT_FALSE(other.contains(phi(w)));
  EXPECT_EQ(code_of([&] { restrict_endo(phi, other); }), ErrorCode::kNotInvariant);
}

TEST(Restriction, QuasiInverseRespectsTheDecomposition) {
  for (const auto& [name, g, data] : theorem_corpus_upto(32)) {
    if (g.order() >= 32 && g.is_abelian()) continue;
    for (const Endo& e : enumerate_endomorphisms(g, EndoFilter::parse("fpf"))) {
      const auto psi = quasi_inverse(e);
      if (!psi) continue;
      const FittingDecomposition d = fitting_decomposition(e);
      for (const Subgroup* s : {&d.K, &d.H}) {
        ASSERT_FALSE(invariance_witness(*psi, *s).has_value()) << name;
        const RestrictedEndo rphi = restrict_endo(e, *s);
        const RestrictedEndo rpsi = restrict_endo(*psi, *s);
        const auto q = quasi_inverse(rphi.endo);
        ASSERT_TRUE(q.has_value()) << name;
        ASSERT_EQ(*q, rpsi.endo) << name;
        for (Elem x = 0; x < rpsi.endo.group().order(); ++x)
          ASSERT_EQ(rpsi.embedding.to_parent[rpsi.endo(x)], (*psi)(rpsi.embedding.to_parent[x])) << name;
      }
    }
  }
}
