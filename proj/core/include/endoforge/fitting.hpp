#pragma once

#include <cstddef>
#include <optional>

#include "endoforge/group.hpp"
#include "endoforge/nearring.hpp"

namespace endoforge {

/// G = K ⋊ H with K = ker(φⁿ), H = im(φⁿ) at the stabilization index n.
struct FittingDecomposition {
  std::size_t n = 1;
  Subgroup K;
  Subgroup H;
  SemidirectData data;
};

/// Least n ≥ 1 with ker(φⁿ) = ker(φⁿ⁺¹) and im(φⁿ) = im(φⁿ⁺¹).
std::size_t fitting_index(const Endo& phi);

/// Builds the decomposition, factoring each x as h·k with h = y^{φⁿ} for
/// the y satisfying y^{φ²ⁿ} = x^{φⁿ}, and k = h⁻¹x ∈ ker(φⁿ).
/// Throws kInternal if any invariant fails.
FittingDecomposition fitting_decomposition(const Endo& phi);

/// φ restricted to a φ-invariant subgroup, re-indexed as a standalone group.
struct RestrictedEndo {
  Endo endo;
  Embedding embedding;
};

/// First element s ∈ S with s^φ ∉ S, if any.
std::optional<Elem> invariance_witness(const Endo& phi, const Subgroup& s);

/// Throws kNotInvariant naming the witness when S^φ ⊄ S.
RestrictedEndo restrict_endo(const Endo& phi, const Subgroup& s);

}  // namespace endoforge
