#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "endoforge/error.hpp"
#include "endoforge/group.hpp"
#include "endoforge/limits.hpp"

namespace endoforge {

/// Arbitrary self-map of a group, x ↦ images[x] = x^φ.
class GMap {
 public:
  /// Validates length and index range.
  GMap(FiniteGroup group, std::vector<Elem> images);

  /// No range check; caller guarantees images.size() == order and valid indices.
  static GMap trusted(FiniteGroup group, std::vector<Elem> images);

  static GMap identity(const FiniteGroup& g);
  static GMap zero(const FiniteGroup& g);

  const FiniteGroup& group() const noexcept { return group_; }
  std::span<const Elem> images() const noexcept { return images_; }
  Elem operator()(Elem x) const noexcept { return images_[x]; }
  std::size_t size() const noexcept { return images_.size(); }

  friend bool operator==(const GMap& a, const GMap& b) noexcept {
    return a.images_ == b.images_ && a.group_ == b.group_;
  }

 private:
  friend class Endo;
  struct Trusted {};
  GMap() = default;
  GMap(FiniteGroup group, std::vector<Elem> images, Trusted) noexcept
      : group_(std::move(group)), images_(std::move(images)) {}
  FiniteGroup group_;
  std::vector<Elem> images_;
};

/// Pair witnessing f(xy) ≠ f(x)·f(y).
struct HomViolation {
  Elem x;
  Elem y;
};

/// A GMap certified to be a homomorphism. The fpf and abelian flags are
/// computed at construction; kernel and image are computed on first use and
/// shared between copies.
class Endo {
 public:
  const GMap& map() const noexcept { return map_; }
  operator const GMap&() const noexcept { return map_; }
  const FiniteGroup& group() const noexcept { return map_.group(); }
  std::span<const Elem> images() const noexcept { return map_.images(); }
  Elem operator()(Elem x) const noexcept { return map_(x); }

  const Subgroup& kernel() const;
  const Subgroup& image() const;
  /// Only fixed point is the identity.
  bool is_fpf() const noexcept { return fpf_; }
  /// Image is abelian, equivalently G′ ≤ ker.
  bool is_abelian() const noexcept { return abelian_; }
  bool is_zero() const noexcept { return zero_; }

  friend bool operator==(const Endo& a, const Endo& b) noexcept { return a.map_ == b.map_; }

 private:
  explicit Endo(GMap map);
  friend Expected<Endo, HomViolation> as_endo(GMap f);
  friend Endo certified_endo(GMap f);

  struct Cache {
    std::once_flag once;
    std::optional<Subgroup> kernel;
    std::optional<Subgroup> image;
  };
  void fill_cache() const;

  GMap map_;
  std::shared_ptr<Cache> cache_;
  bool fpf_ = false;
  bool abelian_ = false;
  bool zero_ = false;
};

/// Certifies `f` as an endomorphism. The homomorphism law is checked on
/// every Cayley-graph edge (x, s) over a generating set, which is
/// equivalent to the law on all pairs; a failure carries one violating pair.
Expected<Endo, HomViolation> as_endo(GMap f);

/// as_endo that throws kNotHomomorphism instead of returning the witness.
Endo require_endo(const GMap& f);

/// Wraps images already known to be a homomorphism (skips certification).
/// Used by the exhaustive enumerators, whose search proves the law.
Endo certified_endo(GMap f);

Endo identity_endo(const FiniteGroup& g);
Endo zero_endo(const FiniteGroup& g);

// Near-ring operations; all throw kGroupMismatch on different groups.

/// x^{φ+ψ} = x^φ·x^ψ.
GMap add(const GMap& phi, const GMap& psi);
/// x^{−φ} = (x^φ)⁻¹.
GMap negate(const GMap& phi);
/// x^{φψ} = (x^φ)^ψ (left to right).
GMap compose(const GMap& phi, const GMap& psi);
/// x^{1−φ} = x·(x^φ)⁻¹.
GMap one_minus(const GMap& phi);
/// φ ∘ ψ = ψ − φψ + φ, i.e. x ↦ x^ψ·(x^{φψ})⁻¹·x^φ.
GMap circle(const GMap& phi, const GMap& psi);
/// φ^k under composition; φ⁰ is the identity map.
GMap power(const GMap& phi, std::size_t k);

bool is_bijective(const GMap& f);
/// Inverse of a bijective map; throws kInvalidArgument otherwise.
GMap inverse_map(const GMap& f);
/// Scan for fixed points other than the identity.
bool is_fpf(const GMap& f);
inline bool is_fpf(const Endo& phi) { return phi.is_fpf(); }

/// [G^φ, G^ψ] = 1, which holds iff φ + ψ is an endomorphism.
bool sum_endo_criterion(const Endo& phi, const Endo& psi);

/// The unique map ψ with (1 − φ)(1 − ψ) = 1, namely x ↦ (x^β)⁻¹·x for
/// β = (1 − φ)⁻¹. Throws kNotFpf when 1 − φ is not a bijection.
GMap quasi_inverse_candidate(const GMap& phi);

/// Quasi-inverse of an fpf endomorphism, absent when the candidate is not
/// an endomorphism. Throws kNotFpf if φ is not fpf.
std::optional<Endo> quasi_inverse(const Endo& phi);
bool is_quasi_invertible(const Endo& phi);

struct RecabResult {
  bool holds = true;
  std::size_t endomorphisms = 0;
  std::size_t fpf = 0;
  std::size_t quasi_invertible = 0;
  std::size_t abelian_fpf = 0;
  std::optional<std::vector<Elem>> counterexample;
};

/// For every fpf endomorphism of g: quasi-invertible ⟺ abelian.
RecabResult recab_check(const FiniteGroup& g, const Limits& limits = default_limits());

struct QuasiInverseReport {
  struct Clause {
    bool holds = true;
    std::optional<Elem> witness;
  };
  Clause sums_commute;          // φ + ψ = ψ + φ
  Clause compositions_commute;  // φψ = ψφ
  Clause images_equal_abelian;  // G^φ = G^ψ, abelian
  Clause kernels_equal;         // ker φ = ker ψ
  bool all() const noexcept {
    return sums_commute.holds && compositions_commute.holds && images_equal_abelian.holds &&
           kernels_equal.holds;
  }
};

/// Checks the four structural clauses for a quasi-inverse pair.
/// Throws kInvalidArgument when ψ is not the quasi-inverse of φ.
QuasiInverseReport quasi_inverse_properties(const Endo& phi, const Endo& psi);

/// Least n ≥ 1 with φⁿ = 0, absent if no such n ≤ |G|.
std::optional<std::size_t> nilpotency_index(const Endo& phi);

/// ψ = −(φ + φ² + ⋯ + φ^{n−1}) for nilpotent abelian φ.
/// Throws kNotNilpotent / kNotAbelian.
Endo geometric_quasi_inverse(const Endo& phi);

/// Conjunction of filter flags; the empty filter accepts everything.
struct EndoFilter {
  bool fpf = false;
  bool abelian = false;
  bool nontrivial = false;
  bool quasi_invertible = false;

  /// Space- or comma-separated tokens from {all, fpf, abelian, fpf-abelian,
  /// nontrivial, quasi-invertible}; throws kInvalidArgument on unknown tokens.
  static EndoFilter parse(const std::string& text);
  std::string to_string() const;

  bool accepts(const Endo& phi) const;
};

using EndoVisitor = std::function<bool(const Endo&)>;

/// Visits every endomorphism accepted by `filter` in lexicographic order of
/// image arrays. Throws kCapExceeded above limits.max_enum_order.
/// Returns false if the visitor stopped early.
bool for_each_endomorphism(const FiniteGroup& g, const EndoFilter& filter,
                           const EndoVisitor& visit, const Limits& limits = default_limits());

std::vector<Endo> enumerate_endomorphisms(const FiniteGroup& g, const EndoFilter& filter = {},
                                          const Limits& limits = default_limits());

std::size_t count_endomorphisms(const FiniteGroup& g, const EndoFilter& filter = {},
                                const Limits& limits = default_limits());

}  // namespace endoforge
