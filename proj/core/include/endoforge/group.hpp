#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "endoforge/limits.hpp"

namespace endoforge {

/// Dense element index; 0 is always the identity.
using Elem = std::uint32_t;

inline constexpr Elem kNoElem = static_cast<Elem>(-1);

/// Immutable finite group given by its Cayley table.
///
/// Copies are cheap and share the table. Products follow the convention
/// row·column, so `mul(g, h)` is g·h. Conjugation is right conjugation
/// a^b = b⁻¹ab and the commutator is [a, b] = a⁻¹b⁻¹ab.
class FiniteGroup {
 public:
  /// The trivial group.
  FiniteGroup();

  /// Builds a group from a flat row-major table, validating the group
  /// axioms (associativity is checked exhaustively up to 512 elements).
  static FiniteGroup from_table(std::vector<Elem> table,
                                std::vector<std::string> labels = {},
                                std::vector<Elem> generators = {},
                                const Limits& limits = default_limits());

  std::size_t order() const noexcept { return order_; }

  Elem mul(Elem a, Elem b) const noexcept { return table_[a * order_ + b]; }
  Elem inv(Elem a) const noexcept { return inv_[a]; }
  Elem conj(Elem a, Elem b) const noexcept { return mul(mul(inv(b), a), b); }
  Elem commutator(Elem a, Elem b) const noexcept {
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }
  Elem pow(Elem a, long long k) const noexcept;
  std::size_t element_order(Elem a) const noexcept;

  bool is_abelian() const noexcept;

  /// Generators recorded by the constructor (may be empty).
  std::span<const Elem> generators() const noexcept;

  /// Greedy lexicographic generating set: g₁ is the least non-identity
  /// element, each next generator is the least element outside the span of
  /// the previous ones. Every index below g_{j+1} lies in ⟨g₁..g_j⟩.
  std::span<const Elem> lex_generators() const noexcept;

  /// Spanning tree of the Cayley graph over lex_generators(), listed so that
  /// the elements of ⟨g₁..g_j⟩ form a prefix for every j.
  struct TreeNode {
    Elem elem;
    Elem parent;      // elem = parent · gen
    std::uint32_t gen;  // index into lex_generators()
  };
  std::span<const TreeNode> lex_tree() const noexcept;
  /// Prefix lengths of lex_tree(): level_end()[j] = |⟨g₁..g_{j+1}⟩|.
  std::span<const std::size_t> level_end() const noexcept;

  std::string label(Elem a) const;
  bool has_labels() const noexcept;

  std::span<const Elem> table() const noexcept;

  /// FNV-1a hash of the table, used as a stable group fingerprint.
  std::uint64_t fingerprint() const noexcept;

  /// Structural equality (same table).
  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) noexcept;

 private:
  struct Data;
  struct TrustedTag {};

  FiniteGroup(std::shared_ptr<const Data> data);
  static FiniteGroup build(std::vector<Elem> table, std::vector<std::string> labels,
                           std::vector<Elem> generators, bool check_associativity);

  friend FiniteGroup trusted_group(std::vector<Elem>, std::vector<std::string>,
                                   std::vector<Elem>);

  std::shared_ptr<const Data> data_;
  // Hot-path copies of data_ pointers.
  std::size_t order_ = 1;
  const Elem* table_ = nullptr;
  const Elem* inv_ = nullptr;
};

/// Builds a group whose table is known to be associative (sub-tables of a
/// validated group); skips the cubic associativity scan.
FiniteGroup trusted_group(std::vector<Elem> table, std::vector<std::string> labels = {},
                          std::vector<Elem> generators = {});

/// A subgroup stored as a sorted element set of its parent.
class Subgroup {
 public:
  /// Validates closure; `elems` need not be sorted.
  Subgroup(FiniteGroup parent, std::vector<Elem> elems);

  static Subgroup trivial(const FiniteGroup& g);
  static Subgroup whole(const FiniteGroup& g);
  /// No closure check; caller guarantees `sorted_elems` is a sorted subgroup.
  static Subgroup trusted(FiniteGroup parent, std::vector<Elem> sorted_elems);

  const FiniteGroup& parent() const noexcept { return parent_; }
  std::span<const Elem> elements() const noexcept { return elems_; }
  std::size_t order() const noexcept { return elems_.size(); }
  bool contains(Elem a) const noexcept;
  bool is_trivial() const noexcept { return elems_.size() == 1; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) noexcept {
    return a.elems_ == b.elems_ && a.parent_ == b.parent_;
  }

 private:
  Subgroup() = default;
  FiniteGroup parent_;
  std::vector<Elem> elems_;
};

/// Factorization data for G = H ⋉ K with K normal.
struct SemidirectData {
  struct Factor {
    Elem h;
    Elem k;
  };
  Subgroup K;
  Subgroup H;
  std::vector<Factor> factor;  // g = factor[g].h · factor[g].k
};

/// A subgroup re-indexed as a standalone group.
struct Embedding {
  FiniteGroup group;
  std::vector<Elem> to_parent;    // standalone index -> parent element
  std::vector<Elem> from_parent;  // parent element -> standalone index or kNoElem
};

/// Re-indexes `s` in ascending parent order (identity stays at 0).
/// Results are memoized per (parent, element set).
Embedding embed(const Subgroup& s);

Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Elem> gens);
Subgroup derived_subgroup(const FiniteGroup& g);
Subgroup center_of(const FiniteGroup& g);
/// Frattini subgroup K′K^p of a p-group; throws kNotPGroup otherwise.
Subgroup frattini_pgroup(const FiniteGroup& k);
bool is_normal(const FiniteGroup& g, const Subgroup& s);
Elem commutator(const FiniteGroup& g, Elem a, Elem b);
/// [A, B] = ⟨[a, b] : a ∈ A, b ∈ B⟩.
Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b);
/// ⟨A ∪ B⟩.
Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
bool is_subset(const Subgroup& a, const Subgroup& b);
bool commute_elementwise(const FiniteGroup& g, std::span<const Elem> a,
                         std::span<const Elem> b);

/// If |G| = p^k with k ≥ 1 returns p, otherwise 0.
std::uint32_t prime_of_pgroup(std::size_t order);
bool is_prime(std::uint64_t n);

/// Factorizes G = H·K; distinct error codes for non-normal K, nontrivial
/// intersection, and HK ≠ G.
SemidirectData factorize_semidirect(const FiniteGroup& g, const Subgroup& k,
                                    const Subgroup& h);

}  // namespace endoforge
