#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "endoforge/group.hpp"
#include "endoforge/limits.hpp"
#include "endoforge/nearring.hpp"

namespace endoforge {

/// θ ∈ End(H) and η ∈ End(K) on the factors of G = K ⋊ H, each acting on
/// the factor re-indexed as a standalone group (see embed()).
class GlueSpec {
 public:
  /// Recipe inputs: H abelian, θ fpf, η nilpotent. Throws kNotAbelian,
  /// kNotFpf or kNotNilpotent.
  static GlueSpec make(SemidirectData data, Endo theta, Endo eta);
  /// Only checks that θ and η act on the right groups.
  static GlueSpec unchecked(SemidirectData data, Endo theta, Endo eta);

  const FiniteGroup& group() const noexcept { return data_.K.parent(); }
  const SemidirectData& data() const noexcept { return data_; }
  const Embedding& k_embedding() const noexcept { return k_; }
  const Embedding& h_embedding() const noexcept { return h_; }
  const Endo& theta() const noexcept { return theta_; }
  const Endo& eta() const noexcept { return eta_; }

  /// θ and η evaluated on parent elements of H and K.
  Elem theta_at(Elem h) const { return h_.to_parent[theta_(h_.from_parent[h])]; }
  Elem eta_at(Elem k) const { return k_.to_parent[eta_(k_.from_parent[k])]; }

 private:
  GlueSpec(SemidirectData data, Endo theta, Endo eta);

  SemidirectData data_;
  Embedding k_;
  Embedding h_;
  Endo theta_;
  Endo eta_;
};

struct TwistedResult {
  bool holds = true;
  std::optional<std::pair<Elem, Elem>> witness;  // (k, h) in G
};

/// [k, h]^η = [k^η, h^θ] for all h ∈ H, k ∈ K.
TwistedResult twisted_condition(const GlueSpec& spec);

/// g = h·k ↦ h^θ·k^η, not certified.
GMap piece(const GlueSpec& spec);

struct GlueDiagnostics {
  bool derived_in_kernel = true;          // G′ ≤ ker η
  std::optional<Elem> derived_witness;    // element of G′ not killed by η
  bool images_commute = true;             // [K^η, H^θ] = 1
  std::optional<std::pair<Elem, Elem>> commute_witness;
  bool holds() const noexcept { return derived_in_kernel && images_commute; }
};

GlueDiagnostics glue_conditions(const GlueSpec& spec);

/// Glues the quasi-inverse of θ with the geometric quasi-inverse of η.
/// Throws kGlueConditions when glue_conditions fails.
Endo quasi_inverse_glued(const GlueSpec& spec);

using GlueVisitor = std::function<bool(const GlueSpec&, const Endo&)>;

/// For every fpf θ of H and nilpotent η of K (each in lexicographic order)
/// that pass glue_conditions, visits the spec and the certified piece.
/// Throws kNotAbelian if H is not abelian, kCapExceeded above the
/// enumeration cap for either factor.
bool recipe_for_each(const SemidirectData& data, const GlueVisitor& visit,
                     const Limits& limits = default_limits());

std::vector<Endo> recipe_enumerate(const SemidirectData& data,
                                   const Limits& limits = default_limits());

}  // namespace endoforge
