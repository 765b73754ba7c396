#include <gtest/gtest.h>

#include <algorithm>

#include "endoforge/constructors.hpp"
#include "endoforge/glue.hpp"
#include "endoforge/hopf_galois.hpp"
#include "endoforge/serialize.hpp"
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

std::vector<Map> perm_set(const RegularSubgroup& n) {
  std::vector<Map> out;
  for (const Perm& p : n.perms()) out.emplace_back(p.images().begin(), p.images().end());
  std::sort(out.begin(), out.end());
  return out;
}

// Regular: every point is reached from every point by exactly one member.
bool oracle_regular(const std::vector<Map>& n) {
  if (n.empty()) return false;
  const std::size_t size = n.front().size();
  if (n.size() != size) return false;
  for (Elem x = 0; x < size; ++x) {
    std::vector<int> hits(size, 0);
    for (const Map& p : n) ++hits[p[x]];
    if (std::any_of(hits.begin(), hits.end(), [](int h) { return h != 1; })) return false;
  }
  return true;
}

bool oracle_normalized(const FiniteGroup& g, const std::vector<Map>& n) {
  for (Elem a = 0; a < g.order(); ++a)
    for (const Map& p : n) {
      // λ⁻¹ p λ with λ: x ↦ a⁻¹x, applied left to right.
      Map c(g.order());
      for (Elem x = 0; x < g.order(); ++x) c[x] = g.mul(g.inv(a), p[g.mul(a, x)]);
      if (!std::binary_search(n.begin(), n.end(), c)) return false;
    }
  return true;
}

// Groups whose fpf endomorphisms are swept in full.
std::vector<NamedGroup> hg_corpus() {
  std::vector<NamedGroup> out;
  for (auto& ng : theorem_corpus_upto(24))
    if (!(ng.group.is_abelian() && ng.group.order() > 16)) out.push_back(std::move(ng));
  return out;
}

}  // namespace

TEST(Perm, Basics) {
  const Perm a({1, 2, 0}), b({1, 0, 2});
  EXPECT_EQ(a * b, Perm({0, 2, 1}));  // b after a
  EXPECT_EQ(a * a.inverse(), Perm::identity(3));
  EXPECT_TRUE(Perm::identity(4).is_identity());
  EXPECT_EQ(code_of([] { Perm({0, 0, 1}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { Perm({0, 3}); }), ErrorCode::kInvalidArgument);
}

TEST(Translations, Examples) {
  const auto [l2, r2] = translation_subgroups(cyclic(2));
  EXPECT_EQ(perm_set(l2), (std::vector<Map>{{0, 1}, {1, 0}}));
  EXPECT_EQ(l2, r2);
  for (const auto& type : {std::vector<long long>{6}, {2, 2}, {3, 3}}) {
    const auto [l, r] = translation_subgroups(abelian(type));
    EXPECT_EQ(l, r);
  }
  const FiniteGroup s3 = symmetric(3);
  const auto [l, r] = translation_subgroups(s3);
  EXPECT_FALSE(l == r);
  std::vector<Map> both;
  const auto ls = perm_set(l), rs = perm_set(r);
  std::set_intersection(ls.begin(), ls.end(), rs.begin(), rs.end(), std::back_inserter(both));
  EXPECT_EQ(both.size(), center_of(s3).order());
  for (const auto& [name, g, data] : hg_corpus()) {
    const auto [lg, rg] = translation_subgroups(g);
    ASSERT_TRUE(lg.regular() && rg.regular() && lg.normalized() && rg.normalized()) << name;
    for (Elem a = 0; a < g.order(); ++a)
      for (Elem x = 0; x < g.order(); ++x) {
        ASSERT_EQ(lg.perms()[g.inv(a)](x), g.mul(g.inv(a), x));
        ASSERT_EQ(rg.perms()[a](x), g.mul(x, a));
      }
  }
}

TEST(RegularSubgroup, Certificates) {
  const FiniteGroup c3 = cyclic(3);
  const auto stab = RegularSubgroup::from_perms(c3, {Perm::identity(3), Perm({0, 2, 1})});
  EXPECT_FALSE(stab.regular());
  EXPECT_FALSE(is_regular(stab));
  EXPECT_EQ(code_of([&] { RegularSubgroup::from_perms(c3, {Perm::identity(3), Perm({1, 2, 0})}); }),
            ErrorCode::kNotASubgroup);
  const auto [l, r] = translation_subgroups(c3);
  EXPECT_TRUE(is_regular(l));
  EXPECT_TRUE(normalized_by_translations(l));
}

TEST(Beta, Examples) {
  for (const auto& [name, g, data] : hg_corpus()) {
    EXPECT_EQ(beta_subgroup(zero_endo(g)), translation_subgroups(g).first) << name;
  }
  const FiniteGroup c3 = cyclic(3);
  const Endo inv = require_endo(GMap(c3, {0, 2, 1}));
  const RegularSubgroup n = beta_subgroup(inv);
  EXPECT_EQ(n.order(), 3u);
  EXPECT_TRUE(n.regular());
  for (Elem a = 0; a < 3; ++a)
    for (Elem x = 0; x < 3; ++x) EXPECT_EQ(beta_perm(inv, a)(x), c3.mul(c3.mul(c3.inv(a), x), c3.inv(a)));

  const FiniteGroup s4 = symmetric(4);
  const Elem dt = 7;  // (0 1)(2 3) in one-line order [1, 0, 3, 2]
  std::size_t found = 0;
  for (const Endo& e : enumerate_endomorphisms(s4, EndoFilter::parse("fpf-abelian"))) {
    if (e.image().order() != 2 || !e.image().contains(dt)) continue;
    const RegularSubgroup ns = beta_subgroup(e);
    EXPECT_TRUE(ns.regular());
    EXPECT_TRUE(oracle_normalized(s4, perm_set(ns)));
    EXPECT_TRUE(ns.normalized());
    ++found;
  }
  EXPECT_EQ(found, 1u);
  EXPECT_EQ(code_of([&] { beta_subgroup(identity_endo(c3)); }), ErrorCode::kNotFpf);
}

TEST(Beta, RegularAndNormalizedExactlyWhenAbelian) {
  for (const auto& [name, g, data] : hg_corpus()) {
    for (const Endo& e : enumerate_endomorphisms(g, EndoFilter::parse("fpf"))) {
      const RegularSubgroup n = beta_subgroup(e);
      const std::vector<Map> ps = perm_set(n);
      ASSERT_EQ(n.order(), g.order()) << name;
      ASSERT_TRUE(oracle_regular(ps)) << name;
      ASSERT_TRUE(n.regular()) << name;
      const bool normal = oracle_normalized(g, ps);
      ASSERT_EQ(normal, n.normalized()) << name;
      ASSERT_EQ(normal, oracle_image_abelian(g, oracle_generators(g), images(e))) << name;
      // β is a homomorphism: β(a)β(b) = β(ab).
      for (Elem a = 0; a < g.order(); a += 2)
        ASSERT_EQ(beta_perm(e, a) * beta_perm(e, 1 % g.order()), beta_perm(e, g.mul(a, 1 % g.order()))) << name;
    }
  }
}

TEST(Childs, Examples) {
  const FiniteGroup c5 = cyclic(5);
  for (const Endo& e : enumerate_endomorphisms(c5, EndoFilter::parse("fpf-abelian"))) {
    const auto z = childs_equivalent(e, e);
    ASSERT_TRUE(z.has_value());
    EXPECT_TRUE(z->is_zero());
  }

  // CExt(D(4)) with η ∈ Hom(K, Z(K)): each glued endomorphism is equivalent
  // to one killing K.
  const auto ext = make_central_aut_extension(dihedral(4));
  const FiniteGroup ek = embed(ext.data.K).group;
  const Subgroup zk = center_of(ek);
  const auto all = enumerate_endomorphisms(ext.group, EndoFilter::parse("fpf-abelian"));
  std::vector<Endo> k_trivial;
  for (const Endo& e : all)
    if (std::all_of(ext.data.K.elements().begin(), ext.data.K.elements().end(), [&](Elem k) { return e(k) == 0; }))
      k_trivial.push_back(e);
  std::size_t nontrivial_k = 0;
  for (const Endo& eta : enumerate_endomorphisms(ek)) {
    if (!std::all_of(eta.images().begin(), eta.images().end(), [&](Elem y) { return zk.contains(y); })) continue;
    for (const Endo& theta : enumerate_endomorphisms(embed(ext.data.H).group, EndoFilter::parse("fpf"))) {
      const Endo phi = require_endo(piece(GlueSpec::make(ext.data, theta, eta)));
      EXPECT_TRUE(std::any_of(k_trivial.begin(), k_trivial.end(),
                              [&](const Endo& psi) { return childs_equivalent(phi, psi).has_value(); }));
      if (!eta.is_zero()) ++nontrivial_k;
    }
  }
  EXPECT_GT(nontrivial_k, 0u);

  // The order-81 example is not equivalent to any endomorphism killing K.
  const auto h81 = heisenberg_extension(3);
  Endo eta = zero_endo(embed(h81.data.K).group);
  for (const Endo& e : enumerate_endomorphisms(embed(h81.data.K).group))
    if (e(1) == 3 && e(3) == 0) eta = e;
  const Endo phi =
      require_endo(piece(GlueSpec::make(h81.data, require_endo(GMap(embed(h81.data.H).group, {0, 2, 1})), eta)));
  std::size_t candidates = 0;
  for (const Endo& psi : enumerate_endomorphisms(h81.group, EndoFilter::parse("fpf-abelian"))) {
    if (!std::all_of(h81.data.K.elements().begin(), h81.data.K.elements().end(), [&](Elem k) { return psi(k) == 0; }))
      continue;
    ++candidates;
    EXPECT_FALSE(childs_equivalent(phi, psi).has_value());
    EXPECT_FALSE(beta_subgroup(phi) == beta_subgroup(psi));
  }
  EXPECT_GT(candidates, 0u);
}

TEST(Childs, EquivalentExactlyWhenTheSubgroupsAgree) {
  for (const auto& [name, g, data] : hg_corpus()) {
    const auto endos = enumerate_endomorphisms(g, EndoFilter::parse("fpf-abelian"));
    if (endos.size() > 150) continue;
    std::vector<std::vector<Map>> ns;
    for (const Endo& e : endos) ns.push_back(perm_set(beta_subgroup(e)));
    const Subgroup z = center_of(g);
    for (std::size_t i = 0; i < endos.size(); ++i)
      for (std::size_t j = 0; j < endos.size(); ++j) {
        const auto w = childs_equivalent(endos[i], endos[j]);
        ASSERT_EQ(w.has_value(), ns[i] == ns[j]) << name;
        ASSERT_EQ(w.has_value(), childs_equivalent_search(endos[i], endos[j]).has_value()) << name;
        if (w) {
          ASSERT_TRUE(w->is_fpf()) << name;
          for (Elem y : w->images()) ASSERT_TRUE(z.contains(y)) << name;
          ASSERT_EQ(images(one_minus(endos[i])),
                    oracle_compose(oracle_one_minus(g, images(*w)), oracle_one_minus(g, images(endos[j]))))
              << name;
        }
      }
  }
}

TEST(Childs, ClassesPartitionByTheSubgroup) {
  EXPECT_EQ(equivalence_classes(symmetric(3)).size(), 1u);
  EXPECT_EQ(equivalence_classes(symmetric(3)).front().size(), 1u);
  for (const auto& [name, g, data] : hg_corpus()) {
    const auto endos = enumerate_endomorphisms(g, EndoFilter::parse("fpf-abelian"));
    if (endos.size() > 400) continue;
    std::map<std::vector<Map>, std::vector<Map>> fibers;
    for (const Endo& e : endos) fibers[perm_set(beta_subgroup(e))].push_back(images(e));
    std::set<std::vector<Map>> expect;
    for (auto& [n, members] : fibers) expect.insert(members);
    std::set<std::vector<Map>> got;
    std::size_t total = 0;
    Map prev_least;
    for (const auto& cls : equivalence_classes(g)) {
      std::vector<Map> members;
      for (const Endo& e : cls) members.push_back(images(e));
      ASSERT_TRUE(std::is_sorted(members.begin(), members.end())) << name;
      ASSERT_TRUE(total == 0 || prev_least < members.front()) << name;
      prev_least = members.front();
      total += members.size();
      got.insert(members);
    }
    ASSERT_EQ(total, endos.size()) << name;
    ASSERT_EQ(got, expect) << name;
  }
}

TEST(Census, Examples) {
  EXPECT_EQ(enumerate_regular_subgroups(cyclic(2), false).size(), 1u);
  EXPECT_EQ(enumerate_regular_subgroups(cyclic(3), false).size(), 1u);
  EXPECT_EQ(enumerate_regular_subgroups(cyclic(4), true).size(), 2u);
  Limits tight;
  tight.max_census_order = 4;
  EXPECT_EQ(code_of([&] { enumerate_regular_subgroups(cyclic(5), false, tight); }), ErrorCode::kCapExceeded);
}

TEST(Census, MatchesTheOracle) {
  for (const auto& [name, g, data] : tiny_groups()) {
    for (bool normalized : {false, true}) {
      const auto census = enumerate_regular_subgroups(g, normalized);
      std::set<std::vector<Map>> got;
      for (const RegularSubgroup& n : census) {
        ASSERT_TRUE(n.regular()) << name;
        ASSERT_TRUE(!normalized || n.normalized()) << name;
        got.insert(perm_set(n));
      }
      ASSERT_EQ(got.size(), census.size()) << name;
      ASSERT_EQ(got, oracle_regular_subgroups(g, normalized)) << name;
      const auto [l, r] = translation_subgroups(g);
      ASSERT_TRUE(got.count(perm_set(l)) && got.count(perm_set(r))) << name;
      for (const Endo& e : enumerate_endomorphisms(g, EndoFilter::parse("fpf-abelian")))
        ASSERT_TRUE(!normalized || got.count(perm_set(beta_subgroup(e)))) << name;
    }
  }
}

TEST(Census, ContainsEveryBetaSubgroupUpToOrder8) {
  for (const auto& [name, g, data] : theorem_corpus_upto(8)) {
    if (g.order() < 7) continue;
    const auto census = enumerate_regular_subgroups(g, true);
    for (const Endo& e : enumerate_endomorphisms(g, EndoFilter::parse("fpf-abelian"))) {
      const RegularSubgroup n = beta_subgroup(e);
      ASSERT_TRUE(std::any_of(census.begin(), census.end(), [&](const RegularSubgroup& c) { return c == n; }))
          << name;
    }
  }
}

TEST(RegularSubgroupJson, Shape) {
  const auto [l, r] = translation_subgroups(cyclic(3));
  EXPECT_EQ(regular_subgroup_to_json(l), R"({"normalized":true,"perms":[[0,1,2],[1,2,0],[2,0,1]],"regular":true})");
}
