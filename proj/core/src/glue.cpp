#include "endoforge/glue.hpp"

#include "endoforge/error.hpp"

namespace endoforge {

GlueSpec::GlueSpec(SemidirectData data, Endo theta, Endo eta)
    : data_(std::move(data)),
      k_(embed(data_.K)),
      h_(embed(data_.H)),
      theta_(std::move(theta)),
      eta_(std::move(eta)) {
  ensure(theta_.group() == h_.group, ErrorCode::kGroupMismatch, "theta must act on H");
  ensure(eta_.group() == k_.group, ErrorCode::kGroupMismatch, "eta must act on K");
}

GlueSpec GlueSpec::unchecked(SemidirectData data, Endo theta, Endo eta) {
  return GlueSpec(std::move(data), std::move(theta), std::move(eta));
}

GlueSpec GlueSpec::make(SemidirectData data, Endo theta, Endo eta) {
  GlueSpec s(std::move(data), std::move(theta), std::move(eta));
  ensure(s.h_.group.is_abelian(), ErrorCode::kNotAbelian, "the recipe requires H abelian");
  ensure(s.theta_.is_fpf(), ErrorCode::kNotFpf, "theta must be fpf");
  ensure(nilpotency_index(s.eta_).has_value(), ErrorCode::kNotNilpotent,
         "eta must be nilpotent");
  return s;
}

TwistedResult twisted_condition(const GlueSpec& spec) {
  const FiniteGroup& g = spec.group();
  for (Elem k : spec.data().K.elements())
    for (Elem h : spec.data().H.elements()) {
      const Elem lhs = spec.eta_at(g.commutator(k, h));
      const Elem rhs = g.commutator(spec.eta_at(k), spec.theta_at(h));
      if (lhs != rhs) return {false, std::make_pair(k, h)};
    }
  return {};
}

GMap piece(const GlueSpec& spec) {
  const FiniteGroup& g = spec.group();
  std::vector<Elem> img(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    const auto& f = spec.data().factor[x];
    img[x] = g.mul(spec.theta_at(f.h), spec.eta_at(f.k));
  }
  return GMap::trusted(g, std::move(img));
}

GlueDiagnostics glue_conditions(const GlueSpec& spec) {
  const FiniteGroup& g = spec.group();
  GlueDiagnostics d;
  const Subgroup derived = derived_subgroup(g);
  for (Elem x : derived.elements()) {
    if (!spec.data().K.contains(x) || spec.eta_at(x) != 0) {
      d.derived_in_kernel = false;
      d.derived_witness = x;
      break;
    }
  }
  for (Elem k : spec.k_embedding().to_parent) {
    const Elem ke = spec.eta_at(k);
    for (Elem h : spec.h_embedding().to_parent) {
      const Elem ht = spec.theta_at(h);
      if (g.mul(ke, ht) != g.mul(ht, ke)) {
        d.images_commute = false;
        d.commute_witness = std::make_pair(ke, ht);
        return d;
      }
    }
  }
  return d;
}

Endo quasi_inverse_glued(const GlueSpec& spec) {
  const GlueDiagnostics d = glue_conditions(spec);
  ensure(d.holds(), ErrorCode::kGlueConditions, "glue conditions fail");
  auto theta_q = quasi_inverse(spec.theta());
  ensure(theta_q.has_value(), ErrorCode::kInternal, "theta has no quasi-inverse");
  Endo eta_q = geometric_quasi_inverse(spec.eta());
  const GlueSpec inv = GlueSpec::unchecked(spec.data(), std::move(*theta_q), std::move(eta_q));
  return require_endo(piece(inv));
}

bool recipe_for_each(const SemidirectData& data, const GlueVisitor& visit, const Limits& limits) {
  const Embedding h = embed(data.H), k = embed(data.K);
  ensure(h.group.is_abelian(), ErrorCode::kNotAbelian, "the recipe requires H abelian");
  EndoFilter fpf;
  fpf.fpf = true;
  const auto thetas = enumerate_endomorphisms(h.group, fpf, limits);
  std::vector<Endo> etas;
  for_each_endomorphism(
      k.group, {},
      [&](const Endo& e) {
        if (nilpotency_index(e)) etas.push_back(e);
        return true;
      },
      limits);
  for (const Endo& theta : thetas)
    for (const Endo& eta : etas) {
      GlueSpec spec = GlueSpec::unchecked(data, theta, eta);
      if (!glue_conditions(spec).holds()) continue;
      if (!visit(spec, require_endo(piece(spec)))) return false;
    }
  return true;
}

std::vector<Endo> recipe_enumerate(const SemidirectData& data, const Limits& limits) {
  std::vector<Endo> out;
  recipe_for_each(
      data,
      [&](const GlueSpec&, const Endo& phi) {
        out.push_back(phi);
        return true;
      },
      limits);
  return out;
}

}  // namespace endoforge
