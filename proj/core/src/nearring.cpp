#include "endoforge/nearring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "endoforge/homomorphism.hpp"

namespace endoforge {

GMap::GMap(FiniteGroup group, std::vector<Elem> images)
    : group_(std::move(group)), images_(std::move(images)) {
  if (images_.size() != group_.order())
    fail(ErrorCode::kInvalidArgument, "map has " + std::to_string(images_.size()) + " images for a group of order " +
                                          std::to_string(group_.order()));
  for (Elem y : images_)
    ensure(y < group_.order(), ErrorCode::kInvalidArgument, "image index out of range");
}

GMap GMap::trusted(FiniteGroup group, std::vector<Elem> images) {
  return GMap(std::move(group), std::move(images), Trusted{});
}

GMap GMap::identity(const FiniteGroup& g) {
  std::vector<Elem> img(g.order());
  std::iota(img.begin(), img.end(), Elem{0});
  return GMap(g, std::move(img));
}

GMap GMap::zero(const FiniteGroup& g) { return GMap(g, std::vector<Elem>(g.order(), 0)); }

namespace {

Subgroup kernel_of(const GMap& f) {
  std::vector<Elem> ker;
  for (Elem x = 0; x < f.size(); ++x)
    if (f(x) == 0) ker.push_back(x);
  return Subgroup::trusted(f.group(), std::move(ker));
}

Subgroup image_of(const GMap& f) {
  std::vector<char> hit(f.size(), 0);
  for (Elem y : f.images()) hit[y] = 1;
  std::vector<Elem> im;
  for (Elem y = 0; y < f.size(); ++y)
    if (hit[y]) im.push_back(y);
  return Subgroup::trusted(f.group(), std::move(im));
}

void same_group(const GMap& a, const GMap& b) {
  ensure(a.group() == b.group(), ErrorCode::kGroupMismatch, "maps live on different groups");
}

}  // namespace

Endo::Endo(GMap map) : map_(std::move(map)), cache_(std::make_shared<Cache>()) {
  fpf_ = endoforge::is_fpf(map_);
  zero_ = std::all_of(map_.images().begin(), map_.images().end(), [](Elem e) { return e == 0; });
  const FiniteGroup& g = map_.group();
  if (g.is_abelian()) {
    abelian_ = true;
  } else {
    // The image is generated by the images of any generating set.
    std::vector<Elem> gen_images;
    for (Elem s : g.lex_generators()) gen_images.push_back(map_(s));
    abelian_ = commute_elementwise(g, gen_images, gen_images);
  }
}

void Endo::fill_cache() const {
  std::call_once(cache_->once, [this] {
    cache_->kernel.emplace(kernel_of(map_));
    cache_->image.emplace(image_of(map_));
  });
}

const Subgroup& Endo::kernel() const {
  fill_cache();
  return *cache_->kernel;
}

const Subgroup& Endo::image() const {
  fill_cache();
  return *cache_->image;
}

Expected<Endo, HomViolation> as_endo(GMap f) {
  const FiniteGroup& g = f.group();
  const auto gens = g.lex_generators();
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem s : gens)
      if (f(g.mul(x, s)) != g.mul(f(x), f(s))) return HomViolation{x, s};
  return Endo(std::move(f));
}

Endo require_endo(const GMap& f) {
  auto r = as_endo(f);
  if (!r) {
    fail(ErrorCode::kNotHomomorphism,
         "map is not a homomorphism at (" + std::to_string(r.error().x) + ", " +
             std::to_string(r.error().y) + ")");
  }
  return std::move(r).value();
}

Endo certified_endo(GMap f) { return Endo(std::move(f)); }

Endo identity_endo(const FiniteGroup& g) { return certified_endo(GMap::identity(g)); }
Endo zero_endo(const FiniteGroup& g) { return certified_endo(GMap::zero(g)); }

GMap add(const GMap& phi, const GMap& psi) {
  same_group(phi, psi);
  const FiniteGroup& g = phi.group();
  std::vector<Elem> out(g.order());
  for (Elem x = 0; x < g.order(); ++x) out[x] = g.mul(phi(x), psi(x));
  return GMap::trusted(g, std::move(out));
}

GMap negate(const GMap& phi) {
  const FiniteGroup& g = phi.group();
  std::vector<Elem> out(g.order());
  for (Elem x = 0; x < g.order(); ++x) out[x] = g.inv(phi(x));
  return GMap::trusted(g, std::move(out));
}

GMap compose(const GMap& phi, const GMap& psi) {
  same_group(phi, psi);
  std::vector<Elem> out(phi.size());
  for (Elem x = 0; x < phi.size(); ++x) out[x] = psi(phi(x));
  return GMap::trusted(phi.group(), std::move(out));
}

GMap one_minus(const GMap& phi) {
  const FiniteGroup& g = phi.group();
  std::vector<Elem> out(g.order());
  for (Elem x = 0; x < g.order(); ++x) out[x] = g.mul(x, g.inv(phi(x)));
  return GMap::trusted(g, std::move(out));
}

GMap circle(const GMap& phi, const GMap& psi) {
  same_group(phi, psi);
  const FiniteGroup& g = phi.group();
  std::vector<Elem> out(g.order());
  for (Elem x = 0; x < g.order(); ++x)
    out[x] = g.mul(g.mul(psi(x), g.inv(psi(phi(x)))), phi(x));
  return GMap::trusted(g, std::move(out));
}

GMap power(const GMap& phi, std::size_t k) {
  GMap out = GMap::identity(phi.group());
  for (std::size_t i = 0; i < k; ++i) out = compose(out, phi);
  return out;
}

bool is_bijective(const GMap& f) {
  std::vector<char> hit(f.size(), 0);
  for (Elem y : f.images()) {
    if (hit[y]) return false;
    hit[y] = 1;
  }
  return true;
}

GMap inverse_map(const GMap& f) {
  std::vector<Elem> inv(f.size(), kNoElem);
  for (Elem x = 0; x < f.size(); ++x) {
    ensure(inv[f(x)] == kNoElem, ErrorCode::kInvalidArgument, "map is not a bijection");
    inv[f(x)] = x;
  }
  return GMap::trusted(f.group(), std::move(inv));
}

bool is_fpf(const GMap& f) {
  for (Elem x = 1; x < f.size(); ++x)
    if (f(x) == x) return false;
  return true;
}

bool sum_endo_criterion(const Endo& phi, const Endo& psi) {
  same_group(phi, psi);
  return commute_elementwise(phi.group(), phi.image().elements(), psi.image().elements());
}

GMap quasi_inverse_candidate(const GMap& phi) {
  const FiniteGroup& g = phi.group();
  const std::size_t n = g.order();
  // beta = (1 − φ)⁻¹, filled by inverting x ↦ x·(x^φ)⁻¹.
  std::vector<Elem> beta(n, kNoElem);
  for (Elem x = 0; x < n; ++x) {
    const Elem y = g.mul(x, g.inv(phi(x)));
    ensure(beta[y] == kNoElem, ErrorCode::kNotFpf, "1 - phi is not a bijection");
    beta[y] = x;
  }
  for (Elem x = 0; x < n; ++x) beta[x] = g.mul(g.inv(beta[x]), x);
  return GMap::trusted(g, std::move(beta));
}

std::optional<Endo> quasi_inverse(const Endo& phi) {
  ensure(phi.is_fpf(), ErrorCode::kNotFpf, "quasi-inverse requires an fpf endomorphism");
  auto r = as_endo(quasi_inverse_candidate(phi));
  if (!r) return std::nullopt;
  return std::move(r).value();
}

bool is_quasi_invertible(const Endo& phi) { return quasi_inverse(phi).has_value(); }

RecabResult recab_check(const FiniteGroup& g, const Limits& limits) {
  RecabResult out;
  EndoFilter all;
  for_each_endomorphism(
      g, all,
      [&](const Endo& phi) {
        ++out.endomorphisms;
        if (!phi.is_fpf()) return true;
        ++out.fpf;
        const bool qi = is_quasi_invertible(phi);
        out.quasi_invertible += qi;
        out.abelian_fpf += phi.is_abelian();
        if (qi != phi.is_abelian() && !out.counterexample) {
          out.holds = false;
          out.counterexample = std::vector<Elem>(phi.images().begin(), phi.images().end());
        }
        return true;
      },
      limits);
  return out;
}

QuasiInverseReport quasi_inverse_properties(const Endo& phi, const Endo& psi) {
  same_group(phi, psi);
  const FiniteGroup& g = phi.group();
  ensure(compose(one_minus(phi), one_minus(psi)) == GMap::identity(g),
         ErrorCode::kInvalidArgument, "psi is not the quasi-inverse of phi");
  QuasiInverseReport r;
  auto first_difference = [&](const GMap& a, const GMap& b) -> std::optional<Elem> {
    for (Elem x = 0; x < g.order(); ++x)
      if (a(x) != b(x)) return x;
    return std::nullopt;
  };
  auto set_clause = [](QuasiInverseReport::Clause& c, std::optional<Elem> w) {
    c.holds = !w.has_value();
    c.witness = w;
  };
  set_clause(r.sums_commute, first_difference(add(phi, psi), add(psi, phi)));
  set_clause(r.compositions_commute, first_difference(compose(phi, psi), compose(psi, phi)));

  std::optional<Elem> w;
  const auto im_phi = phi.image().elements(), im_psi = psi.image().elements();
  for (Elem y : im_phi)
    if (!psi.image().contains(y)) {
      w = y;
      break;
    }
  if (!w)
    for (Elem y : im_psi)
      if (!phi.image().contains(y)) {
        w = y;
        break;
      }
  if (!w)
    for (Elem a : im_phi) {
      for (Elem b : im_phi)
        if (g.mul(a, b) != g.mul(b, a)) {
          w = a;
          break;
        }
      if (w) break;
    }
  set_clause(r.images_equal_abelian, w);

  w.reset();
  for (Elem x = 0; x < g.order() && !w; ++x)
    if ((phi(x) == 0) != (psi(x) == 0)) w = x;
  set_clause(r.kernels_equal, w);
  return r;
}

std::optional<std::size_t> nilpotency_index(const Endo& phi) {
  const std::size_t n = phi.group().order();
  std::vector<Elem> cur(phi.images().begin(), phi.images().end());
  auto is_zero = [](const std::vector<Elem>& v) {
    return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
  };
  for (std::size_t k = 1; k <= n; ++k) {
    if (is_zero(cur)) return k;
    for (Elem& y : cur) y = phi(y);
  }
  return std::nullopt;
}

Endo geometric_quasi_inverse(const Endo& phi) {
  const auto n = nilpotency_index(phi);
  ensure(n.has_value(), ErrorCode::kNotNilpotent, "endomorphism is not nilpotent");
  ensure(phi.is_abelian(), ErrorCode::kNotAbelian, "endomorphism is not abelian");
  const FiniteGroup& g = phi.group();
  GMap sum = GMap::zero(g);
  GMap term = phi.map();
  for (std::size_t k = 1; k < *n; ++k) {
    sum = add(sum, term);
    term = compose(term, phi);
  }
  return require_endo(negate(sum));
}

EndoFilter EndoFilter::parse(const std::string& text) {
  EndoFilter f;
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), ',', ' ');
  std::istringstream in(normalized);
  std::string tok;
  while (in >> tok) {
    if (tok == "all") {
    } else if (tok == "fpf") {
      f.fpf = true;
    } else if (tok == "abelian") {
      f.abelian = true;
    } else if (tok == "fpf-abelian") {
      f.fpf = f.abelian = true;
    } else if (tok == "nontrivial") {
      f.nontrivial = true;
    } else if (tok == "quasi-invertible") {
      f.quasi_invertible = true;
    } else {
      fail(ErrorCode::kInvalidArgument, "unknown filter token '" + tok + "'");
    }
  }
  return f;
}

std::string EndoFilter::to_string() const {
  std::string out;
  auto put = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += ' ';
    out += name;
  };
  put(fpf, "fpf");
  put(abelian, "abelian");
  put(nontrivial, "nontrivial");
  put(quasi_invertible, "quasi-invertible");
  return out.empty() ? "all" : out;
}

bool EndoFilter::accepts(const Endo& phi) const {
  if (fpf && !phi.is_fpf()) return false;
  if (abelian && !phi.is_abelian()) return false;
  if (nontrivial && phi.is_zero()) return false;
  if (quasi_invertible && !(phi.is_fpf() && is_quasi_invertible(phi))) return false;
  return true;
}

bool for_each_endomorphism(const FiniteGroup& g, const EndoFilter& filter,
                           const EndoVisitor& visit, const Limits& limits) {
  if (g.order() > limits.max_enum_order)
    fail(ErrorCode::kCapExceeded, "group order " + std::to_string(g.order()) + " exceeds the enumeration cap " +
                                      std::to_string(limits.max_enum_order));
  return for_each_homomorphism(g, g, {}, [&](std::span<const Elem> images) {
    if (filter.fpf) {
      for (Elem x = 1; x < images.size(); ++x)
        if (images[x] == x) return true;
    }
    if (filter.nontrivial &&
        std::all_of(images.begin(), images.end(), [](Elem e) { return e == 0; }))
      return true;
    const Endo phi =
        certified_endo(GMap::trusted(g, std::vector<Elem>(images.begin(), images.end())));
    if (!filter.accepts(phi)) return true;
    return visit(phi);
  });
}

std::vector<Endo> enumerate_endomorphisms(const FiniteGroup& g, const EndoFilter& filter,
                                          const Limits& limits) {
  std::vector<Endo> out;
  for_each_endomorphism(
      g, filter,
      [&](const Endo& phi) {
        out.push_back(phi);
        return true;
      },
      limits);
  return out;
}

std::size_t count_endomorphisms(const FiniteGroup& g, const EndoFilter& filter,
                                const Limits& limits) {
  std::size_t n = 0;
  for_each_endomorphism(
      g, filter,
      [&](const Endo&) {
        ++n;
        return true;
      },
      limits);
  return n;
}

}  // namespace endoforge
