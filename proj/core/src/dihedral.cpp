#include "endoforge/dihedral.hpp"

#include <vector>

#include "endoforge/constructors.hpp"
#include "endoforge/error.hpp"
#include "endoforge/fitting.hpp"

namespace endoforge {

namespace {

std::string power(long long k) {
  if (k == 0) return "1";
  if (k == 1) return "x";
  return "x^" + std::to_string(k);
}

std::string reflection(long long k) { return k == 0 ? "y" : power(k) + "y"; }

}  // namespace

DihedralCase classify_dihedral(const Endo& phi, long long half) {
  ensure(half >= 2 && half % 2 == 0, ErrorCode::kInvalidArgument,
         "dihedral classification needs a group of order divisible by 4");
  const FiniteGroup& g = phi.group();
  if (!(g == dihedral(half)))
    fail(ErrorCode::kInvalidArgument, "endomorphism is not on D(" + std::to_string(half) + ")");
  ensure(!phi.is_zero() && phi.is_fpf() && phi.is_abelian(), ErrorCode::kInvalidArgument,
         "classification needs a nontrivial abelian fpf endomorphism");

  const long long big = half;  // order of x
  const long long m = half / 2;
  const Elem x = 1, y = static_cast<Elem>(big);
  auto xp = [&](long long k) { return g.pow(x, ((k % big) + big) % big); };
  auto xy = [&](long long k) { return g.mul(xp(k), y); };
  auto sub = [&](std::vector<Elem> gens) { return generated_subgroup(g, gens); };

  const Subgroup derived = sub({xp(2)});
  const Subgroup& ker = phi.kernel();
  const Subgroup& im = phi.image();
  const FittingDecomposition fd = fitting_decomposition(phi);

  // Klein four-group ⟨x^m, x^i y⟩ equal to s, least i.
  auto klein_index = [&](const Subgroup& s) -> std::optional<long long> {
    for (long long i = 0; i < big; ++i)
      if (s == sub({xp(m), xy(i)})) return i;
    return std::nullopt;
  };

  DihedralCase c;
  c.label = "unclassified";
  if (fd.K == derived) {
    c.kernel = "<" + power(2) + ">";
    if (auto i = klein_index(fd.H)) {
      c.label = "complement-Klein";
      c.i = i;
      c.image = "<" + power(m) + ", " + reflection(*i) + ">";
    }
    return c;
  }
  if (ker == derived) {
    c.kernel = "<" + power(2) + ">";
    if (auto i = klein_index(im)) {
      c.i = i;
      c.label = *i % 2 == 0 ? "case5" : "case7";
      c.image = "<" + power(m) + ", " + reflection(*i) + ">";
    }
    return c;
  }
  const Subgroup center_x = sub({xp(m)});
  auto reflection_image = [&](long long parity) -> std::optional<long long> {
    for (long long a = parity; a < big; a += 2)
      if (im == sub({xy(a)})) return a;
    return std::nullopt;
  };
  if (ker == sub({x})) {
    c.kernel = "<x>";
    if (im == center_x) {
      c.label = "case1";
      c.image = "<" + power(m) + ">";
    }
  } else if (ker == sub({xp(2), y})) {
    c.kernel = "<" + power(2) + ", y>";
    if (im == center_x) {
      c.label = "case3";
      c.image = "<" + power(m) + ">";
    } else if (auto a = reflection_image(0)) {
      c.label = "case4";
      c.image = "<" + reflection(*a) + ">";
    }
  } else if (ker == sub({xp(2), xy(1)})) {
    c.kernel = "<" + power(2) + ", xy>";
    if (im == center_x) {
      c.label = "case2";
      c.image = "<" + power(m) + ">";
    } else if (auto a = reflection_image(1)) {
      c.label = "case6";
      c.image = "<" + reflection(*a) + ">";
    }
  }
  if (c.kernel.empty()) c.kernel = "other";
  if (c.image.empty()) c.image = "other";
  return c;
}

}  // namespace endoforge
