#include "endoforge/fitting.hpp"

#include <vector>

#include "endoforge/error.hpp"

namespace endoforge {

namespace {

std::size_t kernel_size(std::span<const Elem> f) {
  std::size_t n = 0;
  for (Elem y : f) n += (y == 0);
  return n;
}

std::size_t image_size(std::span<const Elem> f) {
  std::vector<char> hit(f.size(), 0);
  std::size_t n = 0;
  for (Elem y : f)
    if (!hit[y]) {
      hit[y] = 1;
      ++n;
    }
  return n;
}

// Kernels grow and images shrink along the chain, so equal sizes mean equal sets.
std::size_t stabilization(const Endo& phi, std::vector<Elem>& power_n) {
  std::vector<Elem> cur(phi.images().begin(), phi.images().end());
  std::size_t ker = kernel_size(cur), im = image_size(cur);
  for (std::size_t n = 1;; ++n) {
    std::vector<Elem> next(cur.size());
    for (std::size_t x = 0; x < cur.size(); ++x) next[x] = phi(cur[x]);
    const std::size_t ker2 = kernel_size(next), im2 = image_size(next);
    if (ker2 == ker && im2 == im) {
      power_n = std::move(cur);
      return n;
    }
    cur = std::move(next);
    ker = ker2;
    im = im2;
  }
}

}  // namespace

std::size_t fitting_index(const Endo& phi) {
  std::vector<Elem> unused;
  return stabilization(phi, unused);
}

FittingDecomposition fitting_decomposition(const Endo& phi) {
  const FiniteGroup& g = phi.group();
  const std::size_t order = g.order();
  std::vector<Elem> pn;
  const std::size_t n = stabilization(phi, pn);

  std::vector<Elem> kel, hel;
  std::vector<char> in_h(order, 0);
  for (Elem x = 0; x < order; ++x) {
    if (pn[x] == 0) kel.push_back(x);
    in_h[pn[x]] = 1;
  }
  for (Elem x = 0; x < order; ++x)
    if (in_h[x]) hel.push_back(x);
  Subgroup k = Subgroup::trusted(g, kel);
  Subgroup h = Subgroup::trusted(g, hel);

  // φⁿ maps H bijectively onto H; record a preimage in H of each element of H.
  std::vector<Elem> pre(order, kNoElem);
  for (Elem y : hel) {
    ensure(pre[pn[y]] == kNoElem, ErrorCode::kInternal, "phi^n is not injective on H");
    pre[pn[y]] = y;
  }
  SemidirectData data{k, h, std::vector<SemidirectData::Factor>(order)};
  for (Elem x = 0; x < order; ++x) {
    const Elem hx = pre[pn[x]];
    ensure(hx != kNoElem, ErrorCode::kInternal, "x^(phi^n) has no preimage in H");
    const Elem kx = g.mul(g.inv(hx), x);
    ensure(pn[kx] == 0, ErrorCode::kInternal, "cofactor is not in ker(phi^n)");
    data.factor[x] = {hx, kx};
  }
  ensure(k.order() * h.order() == order, ErrorCode::kInternal, "|K||H| != |G|");
  ensure(is_normal(g, k), ErrorCode::kInternal, "K is not normal");
  for (Elem y : hel)
    ensure(y == 0 || !k.contains(y), ErrorCode::kInternal, "H and K intersect");
  return {n, std::move(k), std::move(h), std::move(data)};
}

std::optional<Elem> invariance_witness(const Endo& phi, const Subgroup& s) {
  for (Elem x : s.elements())
    if (!s.contains(phi(x))) return x;
  return std::nullopt;
}

RestrictedEndo restrict_endo(const Endo& phi, const Subgroup& s) {
  ensure(phi.group() == s.parent(), ErrorCode::kGroupMismatch,
         "subgroup belongs to a different group");
  if (auto w = invariance_witness(phi, s)) {
    fail(ErrorCode::kNotInvariant,
         "subgroup is not invariant: element " + std::to_string(*w) + " maps to " +
             std::to_string(phi(*w)));
  }
  Embedding e = embed(s);
  std::vector<Elem> img(e.to_parent.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = e.from_parent[phi(e.to_parent[i])];
  Endo r = certified_endo(GMap::trusted(e.group, std::move(img)));
  return {std::move(r), std::move(e)};
}

}  // namespace endoforge
