#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "endoforge/group.hpp"
#include "endoforge/nearring.hpp"

namespace endoforge::testkit {

using Map = std::vector<Elem>;

struct NamedGroup {
  std::string name;
  FiniteGroup group;
  std::optional<SemidirectData> data;
};

/// Elementary-divisor lists (prime powers) of every abelian group of order n.
std::vector<std::vector<long long>> abelian_types(long long n);
std::string abelian_name(const std::vector<long long>& divisors);

/// C_n (n ≤ 16), abelian groups of order ≤ 32, D(m) for 2m ≤ 40, S3, S4,
/// A4, Q8, F(7,3), F(5,4), Heis(3), the order-81 extension and CExt(D(4)).
std::vector<NamedGroup> theorem_corpus();
std::vector<NamedGroup> theorem_corpus_upto(std::size_t max_order);

/// Abelian p-groups of order ≤ max_order for the given primes.
std::vector<NamedGroup> abelian_pgroups(const std::vector<long long>& primes, std::size_t max_order);

/// Every group of order ≤ 6 up to isomorphism.
std::vector<NamedGroup> tiny_groups();

// Brute-force oracles. They use only the Cayley table.

/// Greedy generating set: scan elements upward, keep those outside the
/// closure of the ones kept so far.
std::vector<Elem> oracle_generators(const FiniteGroup& g);
std::vector<Elem> oracle_closure(const FiniteGroup& g, const std::vector<Elem>& gens);

/// The homomorphism law on all |G|² pairs.
bool oracle_is_hom(const FiniteGroup& g, const Map& f);
/// The law on x·s for all x and s in oracle_generators(g).
bool oracle_is_hom_fast(const FiniteGroup& g, const std::vector<Elem>& gens, const Map& f);

/// Every endomorphism, by trying all generator images and extending along
/// words; sorted lexicographically.
std::vector<Map> oracle_endomorphisms(const FiniteGroup& g);

bool oracle_fpf(const Map& f);
Map oracle_image(const FiniteGroup& g, const Map& f);   // sorted set
Map oracle_kernel(const FiniteGroup& g, const Map& f);  // sorted set
bool oracle_commute(const FiniteGroup& g, const Map& a, const Map& b);
/// Image abelian, checked on images of generators.
bool oracle_image_abelian(const FiniteGroup& g, const std::vector<Elem>& gens, const Map& f);

Map oracle_add(const FiniteGroup& g, const Map& a, const Map& b);
Map oracle_compose(const Map& a, const Map& b);
Map oracle_one_minus(const FiniteGroup& g, const Map& f);
/// The map ψ with (1 − φ)(1 − ψ) = 1, when 1 − φ is a bijection.
std::optional<Map> oracle_quasi_inverse_map(const FiniteGroup& g, const Map& f);
bool is_normal_set(const FiniteGroup& g, const Map& s);

/// Every subgroup, as sorted element sets, found by closing cyclic
/// subgroups under joins.
std::vector<Map> oracle_subgroups(const FiniteGroup& g);
/// Every G = H ⋉ K with K normal and H an abelian complement.
std::vector<SemidirectData> abelian_complement_decompositions(const FiniteGroup& g);

/// Regular subgroups of Sym(G) as sorted lists of image arrays, found by
/// closing every pair of derangements (|G| ≤ 6, where every group is
/// 2-generated). Permutations compose left to right.
std::set<std::vector<Map>> oracle_regular_subgroups(const FiniteGroup& g, bool normalized_only);

/// Nontrivial abelian fpf endomorphism counts of D(m) by label, computed in
/// dihedral arithmetic x^i y^j from the presentation alone.
std::map<std::string, std::size_t> dihedral_oracle_counts(long long m);
/// "label count" lines as stored in tests/golden.
std::map<std::string, std::size_t> read_golden(const std::string& path);
std::string format_golden(long long m, const std::map<std::string, std::size_t>& counts);

/// Seeded generator for property tests.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(eng_); }
  template <class T>
  const T& pick(const std::vector<T>& v) { return v[below(v.size())]; }
  /// Uniform self-map of g.
  Map map(const FiniteGroup& g);
  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace endoforge::testkit

namespace endoforge {
// gtest printers.
void PrintTo(const GMap& f, std::ostream* os);
void PrintTo(const Endo& f, std::ostream* os);
}  // namespace endoforge
