#pragma once

#include <string>
#include <vector>

#include "endoforge/group.hpp"
#include "endoforge/limits.hpp"

namespace endoforge {

/// Cyclic group Z/n, element k = generator^k.
FiniteGroup cyclic(long long n, const std::string& symbol = "x",
                   const Limits& limits = default_limits());

/// Z/n₁ × ⋯ × Z/n_k in mixed radix: index = c₁ + n₁·c₂ + n₁n₂·c₃ + ⋯.
FiniteGroup abelian(const std::vector<long long>& invariants,
                    const Limits& limits = default_limits());

/// Dihedral group of order 2m, ⟨x, y | xᵐ = y² = 1, x^y = x⁻¹⟩.
/// Element xⁱyʲ has index i + m·j, so x = 1 and y = m.
FiniteGroup dihedral(long long m, const Limits& limits = default_limits());

/// Sym(n) on points 0..n−1, elements in lexicographic one-line order.
/// Products compose left to right: (g·h)(i) = h(g(i)).
FiniteGroup symmetric(long long n, const Limits& limits = default_limits());

/// Alt(n) re-indexed from symmetric(n) in the same order.
FiniteGroup alternating(long long n, const Limits& limits = default_limits());

/// Heisenberg group mod p (order p³, exponent p) for odd primes p.
/// (x, y, z)(x′, y′, z′) = (x + x′, y + y′, z + z′ + x·y′), index x + p·y + p²·z;
/// a = (1,0,0) has index 1, b = (0,1,0) has index p and [a, b] = (0,0,1).
FiniteGroup heisenberg(long long p, const Limits& limits = default_limits());

/// Quaternion group of order 8.
FiniteGroup quaternion8();

/// A × B with index a + |A|·b.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                           const Limits& limits = default_limits());

struct SemidirectProduct {
  FiniteGroup group;
  SemidirectData data;
};

/// H ⋉ K on pairs (h, k) with (h₁,k₁)(h₂,k₂) = (h₁h₂, k₁^{action[h₂]}·k₂).
/// `action[h]` is the image array of the automorphism by which h acts; the
/// action must be a right action (action[h₁h₂] = action[h₁] then action[h₂]).
/// The pair (h, k) has index h·|K| + k.
SemidirectProduct make_semidirect(const FiniteGroup& k, const FiniteGroup& h,
                                  const std::vector<std::vector<Elem>>& action,
                                  const Limits& limits = default_limits());

/// Automorphism of `k` determined by generator images; throws
/// kNotAutomorphism if the images do not define a bijective homomorphism.
std::vector<Elem> automorphism_from_generators(const FiniteGroup& k, std::span<const Elem> gens,
                                               std::span<const Elem> images);

/// Extends automorphisms assigned to generators of `h` to a full right action.
std::vector<std::vector<Elem>> action_from_generators(
    const FiniteGroup& k, const FiniteGroup& h, std::span<const Elem> h_gens,
    const std::vector<std::vector<Elem>>& gen_automorphisms);

/// Frobenius-type group C_p ⋊ C_q with the generator of C_q acting as
/// a ↦ a^r, r the least element of multiplicative order q mod p.
/// a has index 1 and b has index p.
SemidirectProduct frobenius(long long p, long long q, const Limits& limits = default_limits());

/// Least r in (Z/p)^× of multiplicative order q.
long long least_unit_of_order(long long p, long long q);

/// Extension of a special p-group K by H = {1 + f : f ∈ Hom(K, Z(K))}.
SemidirectProduct make_central_aut_extension(const FiniteGroup& k,
                                             const Limits& limits = default_limits());

/// True iff K′ = Z(K) = Frat(K) is elementary abelian and K is nonabelian.
bool is_special_pgroup(const FiniteGroup& k);

/// K = Heis(3) extended by ⟨α⟩ ≅ C₃ with α: a ↦ ab, b ↦ b (order 81).
SemidirectProduct heisenberg_extension(long long p = 3, const Limits& limits = default_limits());

}  // namespace endoforge
