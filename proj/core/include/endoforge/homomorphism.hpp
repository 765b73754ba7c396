#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "endoforge/group.hpp"

namespace endoforge {

/// Extends `images[i]` (the image of `gens[i]`) to a homomorphism
/// source → target. Returns nullopt when the assignment violates a relation.
/// Throws kInvalidArgument when `gens` does not generate `source`.
std::optional<std::vector<Elem>> extend_homomorphism(const FiniteGroup& source,
                                                     const FiniteGroup& target,
                                                     std::span<const Elem> gens,
                                                     std::span<const Elem> images);

/// Visitor over image arrays; return false to stop the search.
using HomVisitor = std::function<bool(std::span<const Elem>)>;

/// Generator-image backtracking over source.lex_generators().
///
/// Every homomorphism source → target whose image lies in `allowed`
/// (a subgroup of target given as a sorted element list; empty means all of
/// target) is visited exactly once. Because each lex generator is the least
/// index outside the span of its predecessors, the visiting order is the
/// lexicographic order of the full image arrays.
///
/// Relations are checked level by level: once the images of g₁..g_j are
/// fixed, every Cayley-graph edge inside ⟨g₁..g_j⟩ is verified before g_{j+1}
/// is branched on. Returns false if the visitor stopped early.
bool for_each_homomorphism(const FiniteGroup& source, const FiniteGroup& target,
                           std::span<const Elem> allowed, const HomVisitor& visit);

}  // namespace endoforge
