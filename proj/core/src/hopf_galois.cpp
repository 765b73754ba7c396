#include "endoforge/hopf_galois.hpp"

#include <algorithm>
#include <numeric>

#include "endoforge/error.hpp"
#include "endoforge/homomorphism.hpp"

namespace endoforge {

Perm::Perm(std::vector<Elem> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (Elem y : images_) {
    ensure(y < images_.size() && !seen[y], ErrorCode::kInvalidArgument,
           "permutation images are not a bijection");
    seen[y] = 1;
  }
}

Perm Perm::identity(std::size_t n) {
  std::vector<Elem> img(n);
  std::iota(img.begin(), img.end(), Elem{0});
  return Perm(std::move(img), Trusted{});
}

Perm Perm::inverse() const {
  std::vector<Elem> inv(images_.size());
  for (Elem x = 0; x < images_.size(); ++x) inv[images_[x]] = x;
  return Perm(std::move(inv), Trusted{});
}

bool Perm::is_identity() const noexcept {
  for (Elem x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

Perm operator*(const Perm& a, const Perm& b) {
  ensure(a.size() == b.size(), ErrorCode::kGroupMismatch, "permutations of different degree");
  std::vector<Elem> img(a.size());
  for (Elem x = 0; x < a.size(); ++x) img[x] = b(a(x));
  return Perm(std::move(img), Perm::Trusted{});
}

RegularSubgroup RegularSubgroup::from_perms(const FiniteGroup& g, std::vector<Perm> perms) {
  const std::size_t n = g.order();
  for (const Perm& p : perms)
    ensure(p.size() == n, ErrorCode::kInvalidArgument, "permutation degree differs from |G|");
  std::sort(perms.begin(), perms.end());
  perms.erase(std::unique(perms.begin(), perms.end()), perms.end());
  ensure(!perms.empty(), ErrorCode::kNotASubgroup, "empty permutation set");
  auto member = [&](const Perm& p) { return std::binary_search(perms.begin(), perms.end(), p); };
  for (std::size_t i = 0; i < perms.size(); ++i)
    for (std::size_t j = 0; j < perms.size(); ++j)
      if (!member(perms[i] * perms[j]))
        fail(ErrorCode::kNotASubgroup,
             "product of members " + std::to_string(i) + " and " + std::to_string(j) + " is not in the set");

  RegularSubgroup s;
  s.group_ = g;
  s.regular_ = perms.size() == n;
  if (s.regular_) {
    std::vector<char> hit(n, 0);
    for (const Perm& p : perms) {
      if (hit[p(0)]) {
        s.regular_ = false;
        break;
      }
      hit[p(0)] = 1;
    }
  }
  if (s.regular_) {
    std::vector<Perm> by_slot(n, Perm::identity(n));
    for (Perm& p : perms) {
      const Elem slot = p(0);
      by_slot[slot] = std::move(p);
    }
    perms = std::move(by_slot);
  }
  s.perms_ = std::move(perms);
  s.normalized_ = normalized_by_translations(s);
  return s;
}

bool RegularSubgroup::contains(const Perm& p) const {
  if (regular_) return p.size() == group_.order() && perms_[p(0)] == p;
  return std::binary_search(perms_.begin(), perms_.end(), p);
}

std::vector<Perm> RegularSubgroup::sorted_perms() const {
  std::vector<Perm> out = perms_;
  std::sort(out.begin(), out.end());
  return out;
}

bool operator==(const RegularSubgroup& a, const RegularSubgroup& b) {
  if (a.order() != b.order()) return false;
  if (a.regular_ && b.regular_) return a.perms_ == b.perms_;
  return a.sorted_perms() == b.sorted_perms();
}

namespace {

Perm left_translation(const FiniteGroup& g, Elem a) {
  std::vector<Elem> img(g.order());
  const Elem ai = g.inv(a);
  for (Elem x = 0; x < g.order(); ++x) img[x] = g.mul(ai, x);
  return Perm(std::move(img));
}

}  // namespace

std::pair<RegularSubgroup, RegularSubgroup> translation_subgroups(const FiniteGroup& g) {
  std::vector<Perm> l, r;
  for (Elem a = 0; a < g.order(); ++a) {
    l.push_back(left_translation(g, a));
    std::vector<Elem> img(g.order());
    for (Elem x = 0; x < g.order(); ++x) img[x] = g.mul(x, a);
    r.emplace_back(std::move(img));
  }
  return {RegularSubgroup::from_perms(g, std::move(l)), RegularSubgroup::from_perms(g, std::move(r))};
}

bool is_regular(const RegularSubgroup& n) { return n.regular(); }

bool normalized_by_translations(const RegularSubgroup& n) {
  const FiniteGroup& g = n.group();
  for (Elem a = 0; a < g.order(); ++a) {
    const Perm lam = left_translation(g, a);
    const Perm lam_inv = lam.inverse();
    for (const Perm& p : n.perms())
      if (!n.contains(lam_inv * p * lam)) return false;
  }
  return true;
}

Perm beta_perm(const Endo& phi, Elem a) {
  ensure(phi.is_fpf(), ErrorCode::kNotFpf, "beta subgroup requires an fpf endomorphism");
  const FiniteGroup& g = phi.group();
  std::vector<Elem> img(g.order());
  const Elem ai = g.inv(a), aphi = phi(a);
  for (Elem x = 0; x < g.order(); ++x) img[x] = g.mul(g.mul(ai, x), aphi);
  return Perm(std::move(img));
}

RegularSubgroup beta_subgroup(const Endo& phi) {
  ensure(phi.is_fpf(), ErrorCode::kNotFpf, "beta subgroup requires an fpf endomorphism");
  std::vector<Perm> perms;
  for (Elem a = 0; a < phi.group().order(); ++a) perms.push_back(beta_perm(phi, a));
  return RegularSubgroup::from_perms(phi.group(), std::move(perms));
}

namespace {

bool childs_identity(const GMap& phi, const GMap& zeta, const GMap& psi) {
  return one_minus(phi) == compose(one_minus(zeta), one_minus(psi));
}

}  // namespace

std::optional<Endo> childs_equivalent(const Endo& phi, const Endo& psi) {
  ensure(phi.group() == psi.group(), ErrorCode::kGroupMismatch, "endomorphisms on different groups");
  const FiniteGroup& g = phi.group();
  const std::size_t n = g.order();
  // back = (1 − ψ)⁻¹
  std::vector<Elem> back(n, kNoElem);
  for (Elem x = 0; x < n; ++x) {
    const Elem y = g.mul(x, g.inv(psi(x)));
    if (back[y] != kNoElem) return std::nullopt;
    back[y] = x;
  }
  const auto gens = g.lex_generators();
  std::vector<Elem> zeta(n);
  for (Elem x = 0; x < n; ++x) {
    const Elem y = back[g.mul(x, g.inv(phi(x)))];  // x^{1−ζ}
    const Elem z = g.mul(g.inv(y), x);
    if (x != 0 && z == x) return std::nullopt;
    for (Elem s : gens)
      if (g.mul(z, s) != g.mul(s, z)) return std::nullopt;
    zeta[x] = z;
  }
  auto z = as_endo(GMap::trusted(g, std::move(zeta)));
  if (!z) return std::nullopt;
  Endo out = std::move(z).value();
  ensure(childs_identity(phi, out, psi), ErrorCode::kInternal, "solved zeta fails the identity");
  return out;
}

std::optional<Endo> childs_equivalent_search(const Endo& phi, const Endo& psi) {
  ensure(phi.group() == psi.group(), ErrorCode::kGroupMismatch, "endomorphisms on different groups");
  const FiniteGroup& g = phi.group();
  const GMap target = one_minus(phi);
  const GMap om_psi = one_minus(psi);
  std::optional<Endo> found;
  const Subgroup centre = center_of(g);
  for_each_homomorphism(g, g, centre.elements(), [&](std::span<const Elem> img) {
    for (Elem x = 1; x < img.size(); ++x)
      if (img[x] == x) return true;
    for (Elem x = 0; x < g.order(); ++x)
      if (om_psi(g.mul(x, g.inv(img[x]))) != target(x)) return true;
    found = certified_endo(GMap::trusted(g, std::vector<Elem>(img.begin(), img.end())));
    return false;
  });
  return found;
}

std::vector<std::vector<Endo>> equivalence_classes(const FiniteGroup& g, const Limits& limits) {
  EndoFilter f;
  f.fpf = f.abelian = true;
  const std::vector<Endo> endos = enumerate_endomorphisms(g, f, limits);
  const std::size_t n = endos.size();
  std::vector<char> rel(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rel[i * n + j] = childs_equivalent(endos[i], endos[j]).has_value();

  std::vector<std::size_t> cls(n, n);
  std::vector<std::vector<Endo>> out;
  for (std::size_t i = 0; i < n; ++i) {
    ensure(rel[i * n + i], ErrorCode::kInternal, "Childs relation is not reflexive");
    if (cls[i] != n) continue;
    cls[i] = out.size();
    out.push_back({endos[i]});
    for (std::size_t j = i + 1; j < n; ++j)
      if (rel[i * n + j]) {
        cls[j] = cls[i];
        out.back().push_back(endos[j]);
      }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ensure(rel[i * n + j] == rel[j * n + i], ErrorCode::kInternal, "Childs relation is not symmetric");
      ensure(static_cast<bool>(rel[i * n + j]) == (cls[i] == cls[j]), ErrorCode::kInternal,
             "Childs relation is not transitive");
    }
  return out;
}

namespace {

using Flat = std::vector<Elem>;

bool semiregular(const Flat& p) {
  const std::size_t n = p.size();
  std::vector<char> seen(n, 0);
  std::size_t len = 0;
  for (Elem s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::size_t l = 0;
    for (Elem x = s; !seen[x]; x = p[x]) {
      seen[x] = 1;
      ++l;
    }
    if (len == 0) len = l;
    if (l != len) return false;
  }
  return true;
}

class Census {
 public:
  Census(const FiniteGroup& g, bool normalized_only) : g_(g), n_(g.order()), normalized_(normalized_only) {
    candidates_.resize(n_);
    Flat p(n_);
    std::iota(p.begin(), p.end(), Elem{0});
    do {
      if (p[0] != 0 && semiregular(p)) candidates_[p[0]].push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    for (Elem a = 0; a < n_; ++a) {
      Flat lam(n_), lam_inv(n_);
      for (Elem x = 0; x < n_; ++x) lam[x] = g.mul(g.inv(a), x);
      for (Elem x = 0; x < n_; ++x) lam_inv[lam[x]] = x;
      lambdas_.emplace_back(std::move(lam), std::move(lam_inv));
    }
  }

  std::vector<std::vector<Flat>> run() {
    std::vector<Flat> slots(n_);
    slots[0].resize(n_);
    std::iota(slots[0].begin(), slots[0].end(), Elem{0});
    search(slots);
    return std::move(found_);
  }

 private:
  static Flat product(const Flat& a, const Flat& b) {
    Flat c(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) c[x] = b[a[x]];
    return c;
  }

  // Adds p and closes under products (and L-conjugation when requested).
  bool add_closed(std::vector<Flat>& slots, const Flat& p) const {
    std::vector<Flat> queue{p};
    auto place = [&](Flat q) {
      Flat& slot = slots[q[0]];
      if (slot.empty()) {
        slot = q;
        queue.push_back(std::move(q));
        return true;
      }
      return slot == q;
    };
    if (!slots[p[0]].empty()) return slots[p[0]] == p;
    slots[p[0]] = p;
    for (std::size_t pos = 0; pos < queue.size(); ++pos) {
      const Flat m = queue[pos];
      if (normalized_)
        for (const auto& [lam, lam_inv] : lambdas_)
          if (!place(product(product(lam_inv, m), lam))) return false;
      for (Elem s = 0; s < n_; ++s) {
        if (slots[s].empty()) continue;
        const Flat a = slots[s];
        if (!place(product(a, m)) || !place(product(m, a))) return false;
      }
    }
    return true;
  }

  void search(const std::vector<Flat>& slots) {
    Elem x = 0;
    while (x < n_ && !slots[x].empty()) ++x;
    if (x == n_) {
      found_.push_back(slots);
      return;
    }
    for (const Flat& c : candidates_[x]) {
      std::vector<Flat> next = slots;
      if (add_closed(next, c)) search(next);
    }
  }

  const FiniteGroup& g_;
  std::size_t n_;
  bool normalized_;
  std::vector<std::vector<Flat>> candidates_;
  std::vector<std::pair<Flat, Flat>> lambdas_;
  std::vector<std::vector<Flat>> found_;
};

}  // namespace

std::vector<RegularSubgroup> enumerate_regular_subgroups(const FiniteGroup& g, bool normalized_only,
                                                         const Limits& limits) {
  if (g.order() > limits.max_census_order)
    fail(ErrorCode::kCapExceeded, "group order " + std::to_string(g.order()) + " exceeds the census cap " +
                                      std::to_string(limits.max_census_order));
  std::vector<RegularSubgroup> out;
  if (g.order() == 1) {
    out.push_back(RegularSubgroup::from_perms(g, {Perm::identity(1)}));
    return out;
  }
  for (auto& slots : Census(g, normalized_only).run()) {
    std::vector<Perm> perms;
    for (auto& s : slots) perms.emplace_back(std::move(s));
    out.push_back(RegularSubgroup::from_perms(g, std::move(perms)));
  }
  std::sort(out.begin(), out.end(), [](const RegularSubgroup& a, const RegularSubgroup& b) {
    return a.sorted_perms() < b.sorted_perms();
  });
  return out;
}

}  // namespace endoforge
