#include "endoforge/cli/reports.hpp"

#include <algorithm>
#include <numeric>

#include "endoforge/constructors.hpp"
#include "endoforge/fitting.hpp"

namespace endoforge::cli {

namespace {

EndoFilter nontrivial_abelian_fpf() {
  EndoFilter f;
  f.fpf = f.abelian = f.nontrivial = true;
  return f;
}

}  // namespace

const std::vector<std::string>& dihedral_labels() {
  static const std::vector<std::string> labels = {
      "complement-Klein", "case1", "case2", "case3", "case4",
      "case5", "case6", "case7", "unclassified"};
  return labels;
}

DihedralReport dihedral_report(long long m, const Limits& limits) {
  DihedralReport r;
  r.m = m;
  for (const auto& l : dihedral_labels()) r.counts[l] = 0;
  const FiniteGroup g = dihedral(m, limits);
  for_each_endomorphism(
      g, nontrivial_abelian_fpf(),
      [&](const Endo& phi) {
        DihedralCase c = classify_dihedral(phi, m);
        ++r.counts[c.label];
        r.entries.push_back({phi, std::move(c)});
        return true;
      },
      limits);
  return r;
}

SymmetricReport sn_report(long long n, const Limits& limits) {
  SymmetricReport r;
  r.n = n;
  const FiniteGroup g = symmetric(n, limits);
  const Subgroup alt = derived_subgroup(g);
  for_each_endomorphism(
      g, nontrivial_abelian_fpf(),
      [&](const Endo& phi) {
        SymmetricEntry e{phi};
        const Subgroup& im = phi.image();
        if (im.order() == 2) {
          e.involution = im.elements()[1];
          e.even = alt.contains(e.involution);
        }
        e.nilpotency = nilpotency_index(phi).value_or(0);
        e.fitting_kernel_order = fitting_decomposition(phi).K.order();
        r.holds = r.holds && im.order() == 2 && e.even && e.nilpotency > 0 &&
                  e.fitting_kernel_order == g.order();
        r.entries.push_back(std::move(e));
        return true;
      },
      limits);
  return r;
}

FrobeniusReport frobenius_report(long long p, long long q, const Limits& limits) {
  FrobeniusReport r;
  r.p = p;
  r.q = q;
  const SemidirectProduct f = frobenius(p, q, limits);
  const FiniteGroup& g = f.group;
  const Elem b = static_cast<Elem>(p);

  std::vector<long long> primes;
  for (long long l = 2; l <= q; ++l)
    if (q % l == 0 && is_prime(static_cast<std::uint64_t>(l))) primes.push_back(l);

  std::size_t admissible = 0;
  for (long long s = 1; s < q; ++s)
    if (std::gcd(s - 1, q) == 1) ++admissible;
  r.expected = static_cast<std::size_t>(p) * admissible;

  EndoFilter filter;
  filter.fpf = filter.nontrivial = true;
  for_each_endomorphism(
      g, filter,
      [&](const Endo& phi) {
        FrobeniusEntry e{phi};
        bool placed = false;
        for (Elem a : f.data.K.elements()) {
          const Elem c = g.conj(b, a);
          std::vector<Elem> powers;
          for (long long k = 0; k < q; ++k) powers.push_back(g.pow(c, k));
          const auto& im = phi.image().elements();
          const bool inside = std::all_of(im.begin(), im.end(), [&](Elem y) {
            return std::find(powers.begin(), powers.end(), y) != powers.end();
          });
          if (!inside) continue;
          const auto it = std::find(powers.begin(), powers.end(), phi(c));
          e.complement = c;
          e.s = it - powers.begin();
          placed = true;
          break;
        }
        e.coprime = placed && std::gcd(e.s - 1, q) == 1;
        e.prime_condition =
            placed && std::all_of(primes.begin(), primes.end(),
                                  [&](long long l) { return ((e.s - 1) % l + l) % l != 0; });
        r.holds = r.holds && placed && e.coprime && e.prime_condition &&
                  std::all_of(f.data.K.elements().begin(), f.data.K.elements().end(),
                              [&](Elem a) { return phi(a) == 0; });
        r.entries.push_back(std::move(e));
        return true;
      },
      limits);
  r.holds = r.holds && r.entries.size() == r.expected;
  return r;
}

}  // namespace endoforge::cli
