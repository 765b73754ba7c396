#pragma once

#include <optional>
#include <string>

#include "endoforge/nearring.hpp"

namespace endoforge {

/// Case label of a nontrivial abelian fpf endomorphism of a dihedral group
/// of order 4m, with x of order 2m and y an involution outside ⟨x⟩.
struct DihedralCase {
  /// "complement-Klein", "case1".."case7", or "unclassified".
  std::string label;
  std::string kernel;  // generator description, e.g. "<x^2, y>"
  std::string image;   // e.g. "<x^m>" written with m substituted
  /// i of the Klein four-group ⟨x^m, x^i y⟩ (least such i) when one occurs.
  std::optional<long long> i;
};

/// Follows the decision tree on the Fitting kernel K, ker φ and G^φ:
///   K = G′                → complement-Klein (H = ⟨x^m, x^i y⟩, m odd)
///   ker = G′              → image ⟨x^m, x^i y⟩: case5 (i even) / case7 (i odd)
///   ker = ⟨x⟩             → case1
///   ker = ⟨x², y⟩         → case3 (image ⟨x^m⟩) / case4 (image ⟨x^{2a} y⟩)
///   ker = ⟨x², xy⟩        → case2 (image ⟨x^m⟩) / case6 (image ⟨x^{2a+1} y⟩)
/// Anything else is labelled "unclassified".
/// `half` is the parameter M of dihedral(M) (the order of x); it must be
/// even. Throws kInvalidArgument if φ is not a nontrivial abelian fpf
/// endomorphism of dihedral(M).
DihedralCase classify_dihedral(const Endo& phi, long long half);

}  // namespace endoforge
