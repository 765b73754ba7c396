#include "endoforge/constructors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "endoforge/error.hpp"
#include "endoforge/homomorphism.hpp"

namespace endoforge {

namespace {

std::span<const Elem> recorded_generators(const FiniteGroup& g) {
  return g.generators().empty() ? g.lex_generators() : g.generators();
}

void check_cap(std::size_t order, const Limits& limits) {
  if (order > limits.max_order)
    fail(ErrorCode::kCapExceeded, "group order " + std::to_string(order) + " exceeds the construction cap " +
                                      std::to_string(limits.max_order));
}

std::string power_label(const std::string& symbol, long long k) {
  if (k == 0) return "1";
  if (k == 1) return symbol;
  return symbol + "^" + std::to_string(k);
}

// Concatenates non-identity labels, "1" when both are trivial.
std::string join_labels(const std::string& a, const std::string& b) {
  if (a == "1") return b;
  if (b == "1") return a;
  return a + b;
}

}  // namespace

FiniteGroup cyclic(long long n, const std::string& symbol, const Limits& limits) {
  ensure(n >= 1, ErrorCode::kInvalidArgument, "cyclic group order must be positive");
  check_cap(static_cast<std::size_t>(n), limits);
  const auto m = static_cast<std::size_t>(n);
  std::vector<Elem> table(m * m);
  std::vector<std::string> labels(m);
  for (std::size_t a = 0; a < m; ++a) {
    labels[a] = power_label(symbol, static_cast<long long>(a));
    for (std::size_t b = 0; b < m; ++b) table[a * m + b] = static_cast<Elem>((a + b) % m);
  }
  std::vector<Elem> gens;
  if (m > 1) gens.push_back(1);
  return FiniteGroup::from_table(std::move(table), std::move(labels), std::move(gens), limits);
}

FiniteGroup abelian(const std::vector<long long>& invariants, const Limits& limits) {
  std::size_t order = 1;
  for (long long n : invariants) {
    ensure(n >= 1, ErrorCode::kInvalidArgument, "abelian invariants must be positive");
    order *= static_cast<std::size_t>(n);
    check_cap(order, limits);
  }
  const std::size_t k = invariants.size();
  auto digits = [&](std::size_t idx) {
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) {
      c[i] = idx % static_cast<std::size_t>(invariants[i]);
      idx /= static_cast<std::size_t>(invariants[i]);
    }
    return c;
  };
  std::vector<Elem> table(order * order);
  std::vector<std::string> labels(order);
  for (std::size_t a = 0; a < order; ++a) {
    const auto ca = digits(a);
    std::string lab = "(";
    for (std::size_t i = 0; i < k; ++i) lab += (i ? "," : "") + std::to_string(ca[i]);
    labels[a] = lab + ")";
    for (std::size_t b = 0; b < order; ++b) {
      const auto cb = digits(b);
      std::size_t idx = 0, stride = 1;
      for (std::size_t i = 0; i < k; ++i) {
        const auto n = static_cast<std::size_t>(invariants[i]);
        idx += ((ca[i] + cb[i]) % n) * stride;
        stride *= n;
      }
      table[a * order + b] = static_cast<Elem>(idx);
    }
  }
  std::vector<Elem> gens;
  std::size_t stride = 1;
  for (long long n : invariants) {
    if (n > 1) gens.push_back(static_cast<Elem>(stride));
    stride *= static_cast<std::size_t>(n);
  }
  return FiniteGroup::from_table(std::move(table), std::move(labels), std::move(gens), limits);
}

FiniteGroup dihedral(long long m, const Limits& limits) {
  ensure(m >= 1, ErrorCode::kInvalidArgument, "dihedral parameter must be positive");
  check_cap(static_cast<std::size_t>(2 * m), limits);
  const auto mm = static_cast<std::size_t>(m);
  const std::size_t n = 2 * mm;
  std::vector<Elem> table(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t i = a % mm, j = a / mm;
    labels[a] = join_labels(power_label("x", static_cast<long long>(i)), j ? "y" : "1");
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t i2 = b % mm, j2 = b / mm;
      // xⁱyʲ · x^{i2}y^{j2} = x^{i ± i2} y^{j+j2}
      const std::size_t rot = j ? (i + mm - i2) % mm : (i + i2) % mm;
      table[a * n + b] = static_cast<Elem>(rot + mm * ((j + j2) % 2));
    }
  }
  std::vector<Elem> gens;
  if (mm > 1) gens.push_back(1);
  gens.push_back(static_cast<Elem>(mm));
  return FiniteGroup::from_table(std::move(table), std::move(labels), std::move(gens), limits);
}

namespace {

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::string cycle_label(const std::vector<int>& p) {
  std::string out;
  std::vector<char> done(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = 1;
      out += (first ? "" : " ") + std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(p[j]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

FiniteGroup permutation_group(const std::vector<std::vector<int>>& perms,
                              std::vector<Elem> gens, const Limits& limits) {
  const std::size_t n = perms.size();
  std::map<std::vector<int>, Elem> index;
  for (std::size_t i = 0; i < n; ++i) index[perms[i]] = static_cast<Elem>(i);
  std::vector<Elem> table(n * n);
  std::vector<std::string> labels(n);
  const std::size_t deg = perms.empty() ? 0 : perms[0].size();
  std::vector<int> prod(deg);
  for (std::size_t a = 0; a < n; ++a) {
    labels[a] = cycle_label(perms[a]);
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < deg; ++i)
        prod[i] = perms[b][static_cast<std::size_t>(perms[a][i])];
      table[a * n + b] = index.at(prod);
    }
  }
  return FiniteGroup::from_table(std::move(table), std::move(labels), std::move(gens), limits);
}

int parity(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
  return inversions % 2;
}

}  // namespace

FiniteGroup symmetric(long long n, const Limits& limits) {
  ensure(n >= 1, ErrorCode::kInvalidArgument, "symmetric degree must be positive");
  std::size_t fact = 1;
  for (long long i = 2; i <= n; ++i) {
    fact *= static_cast<std::size_t>(i);
    check_cap(fact, limits);
  }
  const auto perms = all_permutations(static_cast<int>(n));
  std::vector<Elem> gens;
  if (n >= 2) {
    std::vector<int> t(static_cast<std::size_t>(n)), c(static_cast<std::size_t>(n));
    std::iota(t.begin(), t.end(), 0);
    std::swap(t[0], t[1]);
    for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = (i + 1) % static_cast<int>(n);
    gens.push_back(static_cast<Elem>(std::find(perms.begin(), perms.end(), t) - perms.begin()));
    if (n > 2)
      gens.push_back(static_cast<Elem>(std::find(perms.begin(), perms.end(), c) - perms.begin()));
  }
  return permutation_group(perms, std::move(gens), limits);
}

FiniteGroup alternating(long long n, const Limits& limits) {
  ensure(n >= 1, ErrorCode::kInvalidArgument, "alternating degree must be positive");
  std::size_t fact = 1;
  for (long long i = 2; i <= n; ++i) fact *= static_cast<std::size_t>(i);
  check_cap(n >= 2 ? fact / 2 : 1, limits);
  std::vector<std::vector<int>> even;
  for (auto& p : all_permutations(static_cast<int>(n)))
    if (parity(p) == 0) even.push_back(std::move(p));
  return permutation_group(even, {}, limits);
}

FiniteGroup heisenberg(long long p, const Limits& limits) {
  ensure(p >= 2 && is_prime(static_cast<std::uint64_t>(p)), ErrorCode::kInvalidArgument,
         "heisenberg requires a prime");
  ensure(p != 2, ErrorCode::kInvalidArgument,
         "heisenberg requires an odd prime (exponent p fails for p = 2)");
  check_cap(static_cast<std::size_t>(p * p * p), limits);
  const auto q = static_cast<std::size_t>(p);
  const std::size_t n = q * q * q;
  auto idx = [q](std::size_t x, std::size_t y, std::size_t z) { return x + q * y + q * q * z; };
  std::vector<Elem> table(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t x = a % q, y = (a / q) % q, z = a / (q * q);
    labels[a] = join_labels(join_labels(power_label("a", static_cast<long long>(x)),
                                        power_label("b", static_cast<long long>(y))),
                            power_label("z", static_cast<long long>(z)));
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t x2 = b % q, y2 = (b / q) % q, z2 = b / (q * q);
      table[a * n + b] =
          static_cast<Elem>(idx((x + x2) % q, (y + y2) % q, (z + z2 + x * y2) % q));
    }
  }
  return FiniteGroup::from_table(std::move(table), std::move(labels),
                                 {1, static_cast<Elem>(q)}, limits);
}

FiniteGroup quaternion8() {
  // Index = 2·unit + sign, units 1, i, j, k; sign 1 means negative.
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_mul[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static const char* names[4] = {"1", "i", "j", "k"};
  std::vector<Elem> table(64);
  std::vector<std::string> labels(8);
  for (int a = 0; a < 8; ++a) {
    labels[static_cast<std::size_t>(a)] =
        std::string(a % 2 ? "-" : "") + names[a / 2];
    for (int b = 0; b < 8; ++b) {
      const int u = unit_mul[a / 2][b / 2];
      const int s = (a % 2) ^ (b % 2) ^ sign_mul[a / 2][b / 2];
      table[static_cast<std::size_t>(a * 8 + b)] = static_cast<Elem>(2 * u + s);
    }
  }
  return FiniteGroup::from_table(std::move(table), std::move(labels), {2, 4});
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, const Limits& limits) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  check_cap(n, limits);
  std::vector<Elem> table(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto xa = static_cast<Elem>(x % na), xb = static_cast<Elem>(x / na);
    labels[x] = "(" + a.label(xa) + "," + b.label(xb) + ")";
    for (std::size_t y = 0; y < n; ++y) {
      const auto ya = static_cast<Elem>(y % na), yb = static_cast<Elem>(y / na);
      table[x * n + y] = static_cast<Elem>(a.mul(xa, ya) + na * b.mul(xb, yb));
    }
  }
  std::vector<Elem> gens;
  for (Elem g : recorded_generators(a)) gens.push_back(g);
  for (Elem g : recorded_generators(b)) gens.push_back(static_cast<Elem>(na * g));
  return FiniteGroup::from_table(std::move(table), std::move(labels), std::move(gens), limits);
}

namespace {

bool is_automorphism(const FiniteGroup& k, std::span<const Elem> f) {
  const std::size_t n = k.order();
  if (f.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (Elem e : f) {
    if (e >= n || seen[e]) return false;
    seen[e] = 1;
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (f[k.mul(x, y)] != k.mul(f[x], f[y])) return false;
  return true;
}

}  // namespace

SemidirectProduct make_semidirect(const FiniteGroup& k, const FiniteGroup& h,
                                  const std::vector<std::vector<Elem>>& action,
                                  const Limits& limits) {
  const std::size_t nk = k.order(), nh = h.order(), n = nk * nh;
  check_cap(n, limits);
  ensure(action.size() == nh, ErrorCode::kInvalidArgument,
         "action must assign an automorphism to every element of H");
  for (std::size_t x = 0; x < nh; ++x) {
    if (!is_automorphism(k, action[x]))
      fail(ErrorCode::kNotAutomorphism, "action of H element " + std::to_string(x) + " is not an automorphism of K");
  }
  for (Elem x = 0; x < nh; ++x)
    for (Elem y = 0; y < nh; ++y) {
      const auto& xy = action[h.mul(x, y)];
      for (Elem e = 0; e < nk; ++e) {
        if (xy[e] != action[y][action[x][e]])
          fail(ErrorCode::kNotHomomorphism, "action is not a homomorphism H -> Aut(K) at (" + std::to_string(x) +
                                                ", " + std::to_string(y) + ")");
      }
    }

  std::vector<Elem> table(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto h1 = static_cast<Elem>(a / nk), k1 = static_cast<Elem>(a % nk);
    labels[a] = join_labels(h.label(h1), k.label(k1));
    for (std::size_t b = 0; b < n; ++b) {
      const auto h2 = static_cast<Elem>(b / nk), k2 = static_cast<Elem>(b % nk);
      table[a * n + b] = static_cast<Elem>(h.mul(h1, h2) * nk + k.mul(action[h2][k1], k2));
    }
  }
  std::vector<Elem> gens;
  for (Elem g : recorded_generators(h)) gens.push_back(static_cast<Elem>(g * nk));
  for (Elem g : recorded_generators(k)) gens.push_back(g);
  FiniteGroup g =
      FiniteGroup::from_table(std::move(table), std::move(labels), std::move(gens), limits);

  std::vector<Elem> kel(nk), hel(nh);
  for (std::size_t i = 0; i < nk; ++i) kel[i] = static_cast<Elem>(i);
  for (std::size_t i = 0; i < nh; ++i) hel[i] = static_cast<Elem>(i * nk);
  SemidirectData data{Subgroup::trusted(g, kel), Subgroup::trusted(g, hel), {}};
  data.factor.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    data.factor[a] = {static_cast<Elem>((a / nk) * nk), static_cast<Elem>(a % nk)};
  return {std::move(g), std::move(data)};
}

std::vector<Elem> automorphism_from_generators(const FiniteGroup& k, std::span<const Elem> gens,
                                               std::span<const Elem> images) {
  auto f = extend_homomorphism(k, k, gens, images);
  ensure(f.has_value(), ErrorCode::kNotAutomorphism, "generator images violate a relation");
  ensure(is_automorphism(k, *f), ErrorCode::kNotAutomorphism,
         "generator images define a non-bijective endomorphism");
  return std::move(*f);
}

std::vector<std::vector<Elem>> action_from_generators(
    const FiniteGroup& k, const FiniteGroup& h, std::span<const Elem> h_gens,
    const std::vector<std::vector<Elem>>& gen_automorphisms) {
  ensure(h_gens.size() == gen_automorphisms.size(), ErrorCode::kInvalidArgument,
         "one automorphism per generator required");
  for (const auto& f : gen_automorphisms)
    ensure(is_automorphism(k, f), ErrorCode::kNotAutomorphism,
           "generator action is not an automorphism");
  const std::size_t nh = h.order(), nk = k.order();
  std::vector<std::vector<Elem>> act(nh);
  act[0].resize(nk);
  std::iota(act[0].begin(), act[0].end(), Elem{0});
  std::vector<Elem> queue{0};
  auto then = [](const std::vector<Elem>& f, const std::vector<Elem>& g) {
    std::vector<Elem> out(f.size());
    for (std::size_t e = 0; e < f.size(); ++e) out[e] = g[f[e]];
    return out;
  };
  for (std::size_t pos = 0; pos < queue.size(); ++pos) {
    const Elem x = queue[pos];
    for (std::size_t s = 0; s < h_gens.size(); ++s) {
      const Elem y = h.mul(x, h_gens[s]);
      auto candidate = then(act[x], gen_automorphisms[s]);
      if (act[y].empty()) {
        act[y] = std::move(candidate);
        queue.push_back(y);
      }
    }
  }
  ensure(queue.size() == nh, ErrorCode::kInvalidArgument, "H generators do not generate H");
  for (Elem x = 0; x < nh; ++x)
    for (std::size_t s = 0; s < h_gens.size(); ++s)
      ensure(act[h.mul(x, h_gens[s])] == then(act[x], gen_automorphisms[s]),
             ErrorCode::kNotHomomorphism, "generator actions violate a relation of H");
  return act;
}

long long least_unit_of_order(long long p, long long q) {
  for (long long r = 1; r < p; ++r) {
    long long x = r % p, ord = 1;
    while (x != 1) {
      x = (x * r) % p;
      ++ord;
    }
    if (ord == q) return r;
  }
  fail(ErrorCode::kInvalidArgument,
       "no unit of order " + std::to_string(q) + " modulo " + std::to_string(p));
}

SemidirectProduct frobenius(long long p, long long q, const Limits& limits) {
  ensure(p >= 2 && is_prime(static_cast<std::uint64_t>(p)), ErrorCode::kInvalidArgument,
         "F(p,q) requires p prime");
  ensure(q >= 1, ErrorCode::kInvalidArgument, "F(p,q) requires q >= 1");
  ensure((p - 1) % q == 0, ErrorCode::kInvalidArgument,
         "F(p,q) requires q to divide p - 1");
  check_cap(static_cast<std::size_t>(p * q), limits);
  const FiniteGroup k = cyclic(p, "a", limits);
  const FiniteGroup h = cyclic(q, "b", limits);
  const long long r = least_unit_of_order(p, q);
  std::vector<std::vector<Elem>> act(static_cast<std::size_t>(q),
                                     std::vector<Elem>(static_cast<std::size_t>(p)));
  long long rj = 1;
  for (long long j = 0; j < q; ++j) {
    for (long long e = 0; e < p; ++e)
      act[static_cast<std::size_t>(j)][static_cast<std::size_t>(e)] =
          static_cast<Elem>((e * rj) % p);
    rj = (rj * r) % p;
  }
  return make_semidirect(k, h, act, limits);
}

bool is_special_pgroup(const FiniteGroup& k) {
  if (prime_of_pgroup(k.order()) == 0 || k.is_abelian()) return false;
  const std::uint32_t p = prime_of_pgroup(k.order());
  const Subgroup d = derived_subgroup(k);
  if (!(d == center_of(k)) || !(d == frattini_pgroup(k))) return false;
  for (Elem z : d.elements())
    if (k.pow(z, p) != 0) return false;
  return true;  // d ≤ Z(K), so d is abelian
}

SemidirectProduct make_central_aut_extension(const FiniteGroup& k, const Limits& limits) {
  ensure(is_special_pgroup(k), ErrorCode::kNotSpecial,
         "central-automorphism extension requires a special p-group");
  const Subgroup z = center_of(k);
  std::vector<std::vector<Elem>> homs;
  for_each_homomorphism(k, k, z.elements(), [&](std::span<const Elem> f) {
    homs.emplace_back(f.begin(), f.end());
    return true;
  });
  const std::size_t nh = homs.size();
  check_cap(nh * k.order(), limits);
  std::map<std::vector<Elem>, Elem> index;
  for (std::size_t i = 0; i < nh; ++i) index[homs[i]] = static_cast<Elem>(i);
  std::vector<Elem> table(nh * nh);
  std::vector<Elem> sum(k.order());
  for (std::size_t i = 0; i < nh; ++i)
    for (std::size_t j = 0; j < nh; ++j) {
      for (Elem e = 0; e < k.order(); ++e) sum[e] = k.mul(homs[i][e], homs[j][e]);
      table[i * nh + j] = index.at(sum);
    }
  std::vector<std::string> labels(nh);
  for (std::size_t i = 0; i < nh; ++i) labels[i] = i == 0 ? "1" : "c" + std::to_string(i);
  const FiniteGroup h = FiniteGroup::from_table(std::move(table), std::move(labels), {}, limits);

  std::vector<std::vector<Elem>> act(nh, std::vector<Elem>(k.order()));
  for (std::size_t i = 0; i < nh; ++i)
    for (Elem e = 0; e < k.order(); ++e) act[i][e] = k.mul(e, homs[i][e]);
  return make_semidirect(k, h, act, limits);
}

SemidirectProduct heisenberg_extension(long long p, const Limits& limits) {
  const FiniteGroup k = heisenberg(p, limits);
  const FiniteGroup h = cyclic(p, "t", limits);
  const Elem a = 1, b = static_cast<Elem>(p);
  const std::vector<Elem> gens{a, b};
  const std::vector<Elem> images{k.mul(a, b), b};
  auto alpha = automorphism_from_generators(k, gens, images);
  const std::vector<Elem> h_gens{1};
  return make_semidirect(k, h, action_from_generators(k, h, h_gens, {alpha}), limits);
}

}  // namespace endoforge
