#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "endoforge/dihedral.hpp"
#include "endoforge/limits.hpp"
#include "endoforge/nearring.hpp"

namespace endoforge::cli {

/// Labels in report order.
const std::vector<std::string>& dihedral_labels();

struct DihedralEntry {
  Endo phi;
  DihedralCase kase;
};

/// Nontrivial abelian fpf endomorphisms of D(m), classified.
struct DihedralReport {
  long long m = 0;
  std::vector<DihedralEntry> entries;
  std::map<std::string, std::size_t> counts;  // every label, zero included
};

DihedralReport dihedral_report(long long m, const Limits& limits = default_limits());

struct SymmetricEntry {
  Endo phi;
  Elem involution = 0;  // generator of the image
  bool even = false;
  std::size_t nilpotency = 0;
  std::size_t fitting_kernel_order = 0;
};

/// Nontrivial abelian fpf endomorphisms of S_n. `holds` records that each
/// one is nilpotent, has Fitting kernel S_n and image generated by an even
/// involution.
struct SymmetricReport {
  long long n = 0;
  std::vector<SymmetricEntry> entries;
  bool holds = true;
};

SymmetricReport sn_report(long long n, const Limits& limits = default_limits());

struct FrobeniusEntry {
  Endo phi;
  Elem complement = 0;  // generator c of a φ-invariant complement containing G^φ
  long long s = 0;      // c^φ = c^s
  bool coprime = false;       // (s − 1, q) = 1
  bool prime_condition = false;  // s ≢ 1 mod ℓ for every prime ℓ | q
};

/// Nontrivial fpf endomorphisms of F(p, q). `expected` is
/// p·#{s ∈ [1, q) : (s − 1, q) = 1}, one map per complement and admissible s.
struct FrobeniusReport {
  long long p = 0;
  long long q = 0;
  std::vector<FrobeniusEntry> entries;
  std::size_t expected = 0;
  bool holds = true;
};

FrobeniusReport frobenius_report(long long p, long long q, const Limits& limits = default_limits());

}  // namespace endoforge::cli
