#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "endoforge/group.hpp"
#include "endoforge/nearring.hpp"

namespace endoforge {

/// G = H₁ × ⋯ × H_n with H_i homocyclic of rank r_i and exponent p^{e_i},
/// e₁ < ⋯ < e_n.
struct AbelianPGroupShape {
  std::uint32_t p = 2;
  std::vector<std::uint32_t> exps;
  std::vector<std::uint32_t> ranks;

  std::size_t components() const noexcept { return exps.size(); }
  /// Σ r_i, the number of basis vectors.
  std::size_t dimension() const noexcept;
  std::uint64_t order() const noexcept;
  /// Exponent of the basis vector with flat index t.
  std::uint32_t exponent_at(std::size_t t) const;
  /// Flat index of the first basis vector of component i.
  std::size_t offset(std::size_t i) const;

  friend bool operator==(const AbelianPGroupShape&, const AbelianPGroupShape&) = default;
};

using Coords = std::vector<std::uint64_t>;

/// Explicit isomorphism between a p-group and its coordinate space:
/// x = Σ_t coords(x)[t]·basis[t], coordinate t taken mod p^{exponent_at(t)}.
class AbelianIso {
 public:
  AbelianIso(FiniteGroup group, AbelianPGroupShape shape, std::vector<Elem> basis);

  const FiniteGroup& group() const noexcept { return group_; }
  const AbelianPGroupShape& shape() const noexcept { return shape_; }
  std::span<const Elem> basis() const noexcept { return basis_; }
  std::span<const std::uint64_t> moduli() const noexcept { return moduli_; }

  const Coords& coords(Elem x) const { return coords_[x]; }
  /// Element with the given coordinates (reduced modulo each p^{e}).
  Elem element(std::span<const std::uint64_t> c) const;

 private:
  FiniteGroup group_;
  AbelianPGroupShape shape_;
  std::vector<Elem> basis_;
  std::vector<std::uint64_t> moduli_;
  std::vector<Coords> coords_;
  std::vector<Elem> by_index_;  // mixed-radix coordinate index -> element
};

/// Sylow subgroups of an abelian group, by increasing prime.
/// Throws kNotAbelian.
std::vector<std::pair<std::uint32_t, Subgroup>> primary_decomposition(const FiniteGroup& g);

/// Greedy homocyclic basis: repeatedly adds the least-index element of
/// largest order whose cyclic group is a pure direct factor alongside the
/// elements already chosen. Throws kNotAbelian / kNotPGroup.
AbelianIso homocyclic_shape(const FiniteGroup& g);

/// Row-vector matrix of an endomorphism: row t holds the coordinates of
/// the image of basis vector t, so x^α has coordinates coords(x)·M with
/// column u reduced mod p^{e(u)}.
class EndoMatrix {
 public:
  EndoMatrix(AbelianPGroupShape shape, std::vector<std::uint64_t> entries);

  static EndoMatrix zero(const AbelianPGroupShape& shape);
  static EndoMatrix identity(const AbelianPGroupShape& shape);
  /// Builds from blocks[i][j][s][t]; entries are reduced mod p^{e_j}.
  static EndoMatrix from_blocks(const AbelianPGroupShape& shape,
                                const std::vector<std::vector<std::vector<std::vector<std::int64_t>>>>& blocks);

  const AbelianPGroupShape& shape() const noexcept { return shape_; }
  std::size_t dimension() const noexcept { return dim_; }
  std::uint64_t at(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
  std::span<const std::uint64_t> entries() const noexcept { return entries_; }

  /// Block (i, j) as an r_i × r_j array.
  std::vector<std::vector<std::uint64_t>> block(std::size_t i, std::size_t j) const;

  /// Entry (t, u) violating divisibility by p^{e(u) − e(t)} when e(t) < e(u).
  std::optional<std::pair<std::size_t, std::size_t>> divisibility_violation() const;
  bool satisfies_divisibility() const { return !divisibility_violation().has_value(); }

  friend bool operator==(const EndoMatrix&, const EndoMatrix&) = default;

 private:
  AbelianPGroupShape shape_;
  std::size_t dim_ = 0;
  std::vector<std::uint64_t> entries_;
};

/// Product of maps applied left to right (row-vector convention): (A·B).
EndoMatrix multiply(const EndoMatrix& a, const EndoMatrix& b);
EndoMatrix add(const EndoMatrix& a, const EndoMatrix& b);
EndoMatrix subtract(const EndoMatrix& a, const EndoMatrix& b);

EndoMatrix to_matrix(const Endo& alpha, const AbelianIso& iso);
/// Throws kInvalidArgument if M violates divisibility.
Endo from_matrix(const EndoMatrix& m, const AbelianIso& iso);
/// Evaluates x ↦ coords(x)·M on canonical residues without checking
/// divisibility; the result need not be a homomorphism.
GMap assemble_unchecked(const EndoMatrix& m, const AbelianIso& iso);

/// Diagonal block (i, i) reduced mod p: the action of α_{ii} on H_i/H_i^p.
struct BetaComponent {
  std::size_t index;
  std::vector<std::vector<std::uint64_t>> matrix;
};

std::vector<BetaComponent> beta_components(const EndoMatrix& m);

/// Every β_i − I invertible over F_p.
bool is_fpf_abelian(const EndoMatrix& m);

/// A nonzero u of order p with u·M = u, or absent when M is fpf.
/// Takes the last component k whose β_k fixes a nonzero vector v, sets
/// u_k = p^{e_k−1}v and solves the higher components one by one.
std::optional<Coords> fixed_point_witness(const EndoMatrix& m);

/// (I − M)⁻¹, lifted from the block-diagonal F_p inverse by Newton
/// iteration X ← X(2I − (I − M)X). Throws kNotFpf if I − M is singular.
EndoMatrix inverse_one_minus(const EndoMatrix& m);

/// ψ = I − (I − M)⁻¹, the quasi-inverse in matrix form.
EndoMatrix matrix_quasi_inverse(const EndoMatrix& m);

}  // namespace endoforge
