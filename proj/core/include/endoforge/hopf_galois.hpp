#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "endoforge/group.hpp"
#include "endoforge/limits.hpp"
#include "endoforge/nearring.hpp"

namespace endoforge {

/// Bijection on element indices. Products compose left to right:
/// (a·b)(x) = b(a(x)).
class Perm {
 public:
  /// Throws kInvalidArgument when `images` is not a bijection.
  explicit Perm(std::vector<Elem> images);
  static Perm identity(std::size_t n);

  std::size_t size() const noexcept { return images_.size(); }
  Elem operator()(Elem x) const noexcept { return images_[x]; }
  std::span<const Elem> images() const noexcept { return images_; }
  Perm inverse() const;
  bool is_identity() const noexcept;

  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  struct Trusted {};
  Perm(std::vector<Elem> images, Trusted) : images_(std::move(images)) {}
  std::vector<Elem> images_;
};

/// Subgroup of Sym(G) with regularity and normalization certificates.
/// When regular, perms()[x] is the member sending the identity to x;
/// otherwise perms() is sorted.
class RegularSubgroup {
 public:
  /// Validates closure under products and inverses (kNotASubgroup) and
  /// computes both certificates against the translations of `g`.
  static RegularSubgroup from_perms(const FiniteGroup& g, std::vector<Perm> perms);

  const FiniteGroup& group() const noexcept { return group_; }
  std::span<const Perm> perms() const noexcept { return perms_; }
  std::size_t order() const noexcept { return perms_.size(); }
  bool regular() const noexcept { return regular_; }
  bool normalized() const noexcept { return normalized_; }
  bool contains(const Perm& p) const;

  /// Members sorted by image arrays, for set comparison.
  std::vector<Perm> sorted_perms() const;

  /// Equality as permutation sets.
  friend bool operator==(const RegularSubgroup& a, const RegularSubgroup& b);

 private:
  RegularSubgroup() = default;
  FiniteGroup group_;
  std::vector<Perm> perms_;
  bool regular_ = false;
  bool normalized_ = false;
};

/// L = {x ↦ g⁻¹x}, R = {x ↦ xg}. Members are indexed by the image of the
/// identity, so R's member at g is x ↦ xg and L's is x ↦ gx.
std::pair<RegularSubgroup, RegularSubgroup> translation_subgroups(const FiniteGroup& g);

/// Sharply transitive on the elements of the group.
bool is_regular(const RegularSubgroup& n);
/// Every conjugate λ⁻¹nλ (λ ∈ L) lies in N.
bool normalized_by_translations(const RegularSubgroup& n);

/// β(g): x ↦ g⁻¹·x·g^φ. Throws kNotFpf.
Perm beta_perm(const Endo& phi, Elem g);
/// N_φ = {β(g) : g ∈ G}. Throws kNotFpf.
RegularSubgroup beta_subgroup(const Endo& phi);

/// ζ with G^ζ ≤ Z(G), ζ fpf and 1 − φ = (1 − ζ)(1 − ψ), if one exists.
/// The identity determines 1 − ζ = (1 − φ)(1 − ψ)⁻¹, so ζ is solved for
/// directly and then certified.
std::optional<Endo> childs_equivalent(const Endo& phi, const Endo& psi);

/// Same relation, found by scanning Hom(G, Z(G)) in lexicographic order.
std::optional<Endo> childs_equivalent_search(const Endo& phi, const Endo& psi);

/// Abelian fpf endomorphisms of g partitioned by Childs equivalence.
/// Each class is sorted by image array and classes are ordered by their
/// least member. Throws kInternal if the relation fails reflexivity,
/// symmetry or transitivity.
std::vector<std::vector<Endo>> equivalence_classes(const FiniteGroup& g,
                                                   const Limits& limits = default_limits());

/// All regular subgroups of Sym(G) (normalized by L when requested), found
/// by assigning, for the least uncovered x, a semiregular n_x with
/// n_x(1) = x and closing. Sorted by member sets.
/// Throws kCapExceeded above limits.max_census_order.
std::vector<RegularSubgroup> enumerate_regular_subgroups(const FiniteGroup& g, bool normalized_only,
                                                         const Limits& limits = default_limits());

}  // namespace endoforge
