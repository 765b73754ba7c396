#include "endoforge/abelian_pgroup.hpp"

#include <algorithm>
#include <map>

#include "endoforge/error.hpp"

namespace endoforge {

namespace {

using Mat = std::vector<std::vector<std::uint64_t>>;

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  // p is prime; Fermat.
  std::uint64_t r = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

// Inverse over F_p, absent when singular.
std::optional<Mat> inverse_mod_p(Mat a, std::uint64_t p) {
  const std::size_t n = a.size();
  Mat inv(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] % p == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const std::uint64_t s = inv_mod(a[col][col], p);
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] = a[col][j] * s % p;
      inv[col][j] = inv[col][j] * s % p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] % p == 0) continue;
      const std::uint64_t f = a[r][col] % p;
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] = (a[r][j] + (p - f) * a[col][j]) % p;
        inv[r][j] = (inv[r][j] + (p - f) * inv[col][j]) % p;
      }
    }
  }
  return inv;
}

// Nonzero row vector v with v·A = 0 over F_p, if one exists.
std::optional<std::vector<std::uint64_t>> left_kernel_vector(const Mat& a, std::uint64_t p) {
  const std::size_t n = a.size();
  // Row-reduce Aᵀ and read a solution of Aᵀvᵀ = 0.
  Mat t(n, std::vector<std::uint64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a[j][i] % p;
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t piv = row;
    while (piv < n && t[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(t[piv], t[row]);
    const std::uint64_t s = inv_mod(t[row][col], p);
    for (auto& x : t[row]) x = x * s % p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || t[r][col] == 0) continue;
      const std::uint64_t f = t[r][col];
      for (std::size_t j = 0; j < n; ++j) t[r][j] = (t[r][j] + (p - f) * t[row][j]) % p;
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (pivot_col.size() == n) return std::nullopt;
  std::size_t free_col = 0;
  while (std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end()) ++free_col;
  std::vector<std::uint64_t> v(n, 0);
  v[free_col] = 1;
  for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = (p - t[r][free_col]) % p;
  return v;
}

}  // namespace

std::size_t AbelianPGroupShape::dimension() const noexcept {
  std::size_t d = 0;
  for (auto r : ranks) d += r;
  return d;
}

std::uint64_t AbelianPGroupShape::order() const noexcept {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < exps.size(); ++i) n *= ipow(ipow(p, exps[i]), ranks[i]);
  return n;
}

std::uint32_t AbelianPGroupShape::exponent_at(std::size_t t) const {
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (t < ranks[i]) return exps[i];
    t -= ranks[i];
  }
  fail(ErrorCode::kInvalidArgument, "basis index out of range");
}

std::size_t AbelianPGroupShape::offset(std::size_t i) const {
  std::size_t off = 0;
  for (std::size_t c = 0; c < i; ++c) off += ranks[c];
  return off;
}

AbelianIso::AbelianIso(FiniteGroup group, AbelianPGroupShape shape, std::vector<Elem> basis)
    : group_(std::move(group)), shape_(std::move(shape)), basis_(std::move(basis)) {
  const std::size_t d = shape_.dimension();
  ensure(basis_.size() == d, ErrorCode::kInvalidArgument, "basis size does not match shape");
  ensure(shape_.order() == group_.order(), ErrorCode::kInvalidArgument,
         "shape order does not match group order");
  moduli_.resize(d);
  for (std::size_t t = 0; t < d; ++t) moduli_[t] = ipow(shape_.p, shape_.exponent_at(t));

  const std::size_t n = group_.order();
  coords_.assign(n, Coords{});
  by_index_.assign(n, kNoElem);
  Coords c(d, 0);
  for (std::size_t idx = 0; idx < n; ++idx) {
    Elem x = 0;
    for (std::size_t t = 0; t < d; ++t) x = group_.mul(x, group_.pow(basis_[t], static_cast<long long>(c[t])));
    ensure(coords_[x].empty(), ErrorCode::kInvalidArgument, "basis is not independent");
    coords_[x] = c;
    by_index_[idx] = x;
    for (std::size_t t = 0; t < d; ++t) {
      if (++c[t] < moduli_[t]) break;
      c[t] = 0;
    }
  }
}

Elem AbelianIso::element(std::span<const std::uint64_t> c) const {
  std::size_t idx = 0, stride = 1;
  for (std::size_t t = 0; t < moduli_.size(); ++t) {
    idx += static_cast<std::size_t>(c[t] % moduli_[t]) * stride;
    stride *= moduli_[t];
  }
  return by_index_[idx];
}

std::vector<std::pair<std::uint32_t, Subgroup>> primary_decomposition(const FiniteGroup& g) {
  ensure(g.is_abelian(), ErrorCode::kNotAbelian, "primary decomposition requires an abelian group");
  std::vector<std::pair<std::uint32_t, Subgroup>> out;
  std::size_t rest = g.order();
  for (std::uint32_t p = 2; rest > 1; ++p) {
    if (rest % p) continue;
    while (rest % p == 0) rest /= p;
    std::vector<Elem> sylow;
    for (Elem x = 0; x < g.order(); ++x)
      if (prime_of_pgroup(g.element_order(x)) == p || x == 0) sylow.push_back(x);
    out.emplace_back(p, Subgroup::trusted(g, std::move(sylow)));
  }
  return out;
}

AbelianIso homocyclic_shape(const FiniteGroup& g) {
  ensure(g.is_abelian(), ErrorCode::kNotAbelian, "homocyclic decomposition requires an abelian group");
  const std::size_t n = g.order();
  const std::uint32_t p = prime_of_pgroup(n);
  ensure(p != 0, ErrorCode::kNotPGroup, "group order is not a prime power");

  // p^k·G for every k up to the exponent.
  std::vector<std::vector<char>> powers;  // powers[k][x]: x ∈ p^k G
  {
    std::vector<char> all(n, 1);
    powers.push_back(all);
    std::uint64_t pk = 1;
    while (true) {
      pk *= p;
      std::vector<char> in(n, 0);
      bool nontrivial = false;
      for (Elem x = 0; x < n; ++x) {
        const Elem y = g.pow(x, static_cast<long long>(pk));
        in[y] = 1;
        nontrivial |= y != 0;
      }
      powers.push_back(std::move(in));
      if (!nontrivial) break;
    }
  }
  auto pure = [&](const std::vector<char>& s) {
    std::uint64_t pk = 1;
    for (std::size_t k = 1; k < powers.size(); ++k) {
      pk *= p;
      std::vector<char> ps(n, 0);
      for (Elem x = 0; x < n; ++x)
        if (s[x]) ps[g.pow(x, static_cast<long long>(pk))] = 1;
      for (Elem x = 0; x < n; ++x)
        if ((powers[k][x] && s[x]) != static_cast<bool>(ps[x])) return false;
    }
    return true;
  };

  std::vector<Elem> chosen;
  std::vector<char> span(n, 0);
  span[0] = 1;
  std::size_t span_size = 1;
  while (span_size < n) {
    std::vector<Elem> by_order(n);
    for (Elem x = 0; x < n; ++x) by_order[x] = x;
    std::stable_sort(by_order.begin(), by_order.end(), [&](Elem a, Elem b) {
      return g.element_order(a) > g.element_order(b);
    });
    bool found = false;
    for (Elem x : by_order) {
      if (span[x]) continue;
      const std::size_t ox = g.element_order(x);
      std::vector<char> next(n, 0);
      std::size_t size = 0;
      Elem c = 0;
      for (std::size_t j = 0; j < ox; ++j, c = g.mul(c, x))
        for (Elem s = 0; s < n; ++s)
          if (span[s]) {
            const Elem y = g.mul(s, c);
            if (!next[y]) {
              next[y] = 1;
              ++size;
            }
          }
      if (size != span_size * ox || !pure(next)) continue;
      chosen.push_back(x);
      span = std::move(next);
      span_size = size;
      found = true;
      break;
    }
    ensure(found, ErrorCode::kInternal, "greedy basis extraction stalled");
  }

  // Chosen orders are non-increasing; components are listed by increasing exponent.
  std::map<std::uint32_t, std::vector<Elem>> by_exp;
  for (Elem x : chosen) {
    std::uint32_t e = 0;
    for (std::size_t o = g.element_order(x); o > 1; o /= p) ++e;
    by_exp[e].push_back(x);
  }
  AbelianPGroupShape shape;
  shape.p = p;
  std::vector<Elem> basis;
  for (auto& [e, xs] : by_exp) {
    shape.exps.push_back(e);
    shape.ranks.push_back(static_cast<std::uint32_t>(xs.size()));
    basis.insert(basis.end(), xs.begin(), xs.end());
  }
  if (n == 1) shape.p = 0;
  return AbelianIso(g, std::move(shape), std::move(basis));
}

EndoMatrix::EndoMatrix(AbelianPGroupShape shape, std::vector<std::uint64_t> entries)
    : shape_(std::move(shape)), dim_(shape_.dimension()), entries_(std::move(entries)) {
  ensure(entries_.size() == dim_ * dim_, ErrorCode::kInvalidArgument,
         "matrix size does not match shape");
  for (std::size_t u = 0; u < dim_; ++u) {
    const std::uint64_t mod = ipow(shape_.p, shape_.exponent_at(u));
    for (std::size_t t = 0; t < dim_; ++t) entries_[t * dim_ + u] %= mod;
  }
}

EndoMatrix EndoMatrix::zero(const AbelianPGroupShape& shape) {
  const std::size_t d = shape.dimension();
  return EndoMatrix(shape, std::vector<std::uint64_t>(d * d, 0));
}

EndoMatrix EndoMatrix::identity(const AbelianPGroupShape& shape) {
  const std::size_t d = shape.dimension();
  std::vector<std::uint64_t> e(d * d, 0);
  for (std::size_t t = 0; t < d; ++t) e[t * d + t] = 1;
  return EndoMatrix(shape, std::move(e));
}

EndoMatrix EndoMatrix::from_blocks(
    const AbelianPGroupShape& shape,
    const std::vector<std::vector<std::vector<std::vector<std::int64_t>>>>& blocks) {
  const std::size_t d = shape.dimension(), nc = shape.components();
  ensure(blocks.size() == nc, ErrorCode::kInvalidArgument, "wrong number of block rows");
  std::vector<std::uint64_t> e(d * d, 0);
  for (std::size_t i = 0; i < nc; ++i) {
    ensure(blocks[i].size() == nc, ErrorCode::kInvalidArgument, "wrong number of block columns");
    for (std::size_t j = 0; j < nc; ++j) {
      const auto& b = blocks[i][j];
      const auto mod = static_cast<std::int64_t>(ipow(shape.p, shape.exps[j]));
      ensure(b.size() == shape.ranks[i], ErrorCode::kInvalidArgument, "block has wrong row count");
      for (std::size_t s = 0; s < b.size(); ++s) {
        ensure(b[s].size() == shape.ranks[j], ErrorCode::kInvalidArgument,
               "block has wrong column count");
        for (std::size_t t = 0; t < b[s].size(); ++t)
          e[(shape.offset(i) + s) * d + shape.offset(j) + t] =
              static_cast<std::uint64_t>(((b[s][t] % mod) + mod) % mod);
      }
    }
  }
  return EndoMatrix(shape, std::move(e));
}

std::vector<std::vector<std::uint64_t>> EndoMatrix::block(std::size_t i, std::size_t j) const {
  const std::size_t oi = shape_.offset(i), oj = shape_.offset(j);
  Mat b(shape_.ranks[i], std::vector<std::uint64_t>(shape_.ranks[j]));
  for (std::size_t s = 0; s < b.size(); ++s)
    for (std::size_t t = 0; t < b[s].size(); ++t) b[s][t] = at(oi + s, oj + t);
  return b;
}

std::optional<std::pair<std::size_t, std::size_t>> EndoMatrix::divisibility_violation() const {
  for (std::size_t t = 0; t < dim_; ++t)
    for (std::size_t u = 0; u < dim_; ++u) {
      const std::uint32_t et = shape_.exponent_at(t), eu = shape_.exponent_at(u);
      if (et < eu && at(t, u) % ipow(shape_.p, eu - et) != 0) return std::make_pair(t, u);
    }
  return std::nullopt;
}

namespace {

void same_shape(const EndoMatrix& a, const EndoMatrix& b) {
  ensure(a.shape() == b.shape(), ErrorCode::kGroupMismatch, "matrices have different shapes");
}

}  // namespace

EndoMatrix multiply(const EndoMatrix& a, const EndoMatrix& b) {
  same_shape(a, b);
  const std::size_t d = a.dimension();
  std::vector<std::uint64_t> e(d * d, 0);
  for (std::size_t u = 0; u < d; ++u) {
    const std::uint64_t mod = ipow(a.shape().p, a.shape().exponent_at(u));
    for (std::size_t t = 0; t < d; ++t) {
      std::uint64_t s = 0;
      for (std::size_t v = 0; v < d; ++v) s = (s + (a.at(t, v) % mod) * b.at(v, u)) % mod;
      e[t * d + u] = s;
    }
  }
  return EndoMatrix(a.shape(), std::move(e));
}

EndoMatrix add(const EndoMatrix& a, const EndoMatrix& b) {
  same_shape(a, b);
  std::vector<std::uint64_t> e(a.entries().begin(), a.entries().end());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.entries()[i];
  return EndoMatrix(a.shape(), std::move(e));
}

EndoMatrix subtract(const EndoMatrix& a, const EndoMatrix& b) {
  same_shape(a, b);
  const std::size_t d = a.dimension();
  std::vector<std::uint64_t> e(d * d);
  for (std::size_t t = 0; t < d; ++t)
    for (std::size_t u = 0; u < d; ++u) {
      const std::uint64_t mod = ipow(a.shape().p, a.shape().exponent_at(u));
      e[t * d + u] = (a.at(t, u) + mod - b.at(t, u)) % mod;
    }
  return EndoMatrix(a.shape(), std::move(e));
}

EndoMatrix to_matrix(const Endo& alpha, const AbelianIso& iso) {
  ensure(alpha.group() == iso.group(), ErrorCode::kGroupMismatch,
         "endomorphism and basis live on different groups");
  const std::size_t d = iso.shape().dimension();
  std::vector<std::uint64_t> e(d * d);
  for (std::size_t t = 0; t < d; ++t) {
    const Coords& c = iso.coords(alpha(iso.basis()[t]));
    for (std::size_t u = 0; u < d; ++u) e[t * d + u] = c[u];
  }
  return EndoMatrix(iso.shape(), std::move(e));
}

GMap assemble_unchecked(const EndoMatrix& m, const AbelianIso& iso) {
  ensure(m.shape() == iso.shape(), ErrorCode::kGroupMismatch, "matrix and basis shapes differ");
  const FiniteGroup& g = iso.group();
  const std::size_t d = m.dimension();
  const auto mod = iso.moduli();
  std::vector<Elem> img(g.order());
  Coords out(d);
  for (Elem x = 0; x < g.order(); ++x) {
    const Coords& c = iso.coords(x);
    for (std::size_t u = 0; u < d; ++u) {
      std::uint64_t s = 0;
      for (std::size_t t = 0; t < d; ++t) s = (s + c[t] * m.at(t, u)) % mod[u];
      out[u] = s;
    }
    img[x] = iso.element(out);
  }
  return GMap(g, std::move(img));
}

Endo from_matrix(const EndoMatrix& m, const AbelianIso& iso) {
  if (auto v = m.divisibility_violation()) {
    fail(ErrorCode::kInvalidArgument,
         "matrix entry (" + std::to_string(v->first) + ", " + std::to_string(v->second) +
             ") violates the divisibility constraint");
  }
  return require_endo(assemble_unchecked(m, iso));
}

std::vector<BetaComponent> beta_components(const EndoMatrix& m) {
  std::vector<BetaComponent> out;
  const auto p = m.shape().p;
  for (std::size_t i = 0; i < m.shape().components(); ++i) {
    Mat b = m.block(i, i);
    for (auto& row : b)
      for (auto& x : row) x %= p;
    out.push_back({i, std::move(b)});
  }
  return out;
}

namespace {

Mat one_minus_mod_p(const Mat& b, std::uint64_t p) {
  Mat a = b;
  for (std::size_t s = 0; s < a.size(); ++s)
    for (std::size_t t = 0; t < a.size(); ++t)
      a[s][t] = ((s == t ? 1 : 0) + p - b[s][t] % p) % p;
  return a;
}

}  // namespace

bool is_fpf_abelian(const EndoMatrix& m) {
  const std::uint64_t p = m.shape().p;
  for (const auto& beta : beta_components(m))
    if (!inverse_mod_p(one_minus_mod_p(beta.matrix, p), p)) return false;
  return true;
}

std::optional<Coords> fixed_point_witness(const EndoMatrix& m) {
  const AbelianPGroupShape& sh = m.shape();
  const std::uint64_t p = sh.p;
  const auto betas = beta_components(m);
  std::optional<std::size_t> k;
  std::vector<std::uint64_t> vk;
  for (std::size_t i = betas.size(); i-- > 0;) {
    if (auto v = left_kernel_vector(one_minus_mod_p(betas[i].matrix, p), p)) {
      k = i;
      vk = std::move(*v);
      break;
    }
  }
  if (!k) return std::nullopt;

  // v[i] ∈ F_p^{r_i} with u_i = p^{e_i − 1}·v_i; components below k stay zero.
  std::vector<std::vector<std::uint64_t>> v(sh.components());
  for (std::size_t i = 0; i < sh.components(); ++i) v[i].assign(sh.ranks[i], 0);
  v[*k] = vk;
  for (std::size_t j = *k + 1; j < sh.components(); ++j) {
    // Right side x_j = Σ_{i<j} v_i·M′_ij where M_ij = p^{e_j − e_i}·M′_ij.
    std::vector<std::uint64_t> x(sh.ranks[j], 0);
    for (std::size_t i = *k; i < j; ++i) {
      const auto b = m.block(i, j);
      const std::uint64_t scale = ipow(p, sh.exps[j] - sh.exps[i]);
      for (std::size_t s = 0; s < sh.ranks[i]; ++s)
        for (std::size_t t = 0; t < sh.ranks[j]; ++t)
          x[t] = (x[t] + v[i][s] * ((b[s][t] / scale) % p)) % p;
    }
    const auto inv = inverse_mod_p(one_minus_mod_p(betas[j].matrix, p), p);
    ensure(inv.has_value(), ErrorCode::kInternal, "I - beta is singular above the top fixed component");
    for (std::size_t t = 0; t < sh.ranks[j]; ++t) {
      std::uint64_t s = 0;
      for (std::size_t r = 0; r < sh.ranks[j]; ++r) s = (s + x[r] * (*inv)[r][t]) % p;
      v[j][t] = s;
    }
  }
  Coords u(sh.dimension(), 0);
  for (std::size_t i = 0; i < sh.components(); ++i)
    for (std::size_t s = 0; s < sh.ranks[i]; ++s)
      u[sh.offset(i) + s] = v[i][s] * ipow(p, sh.exps[i] - 1);
  return u;
}

EndoMatrix inverse_one_minus(const EndoMatrix& m) {
  const AbelianPGroupShape& sh = m.shape();
  const std::uint64_t p = sh.p;
  const EndoMatrix id = EndoMatrix::identity(sh);
  const EndoMatrix n = subtract(id, m);
  const std::size_t d = m.dimension();

  std::vector<std::uint64_t> d0(d * d, 0);
  for (std::size_t i = 0; i < sh.components(); ++i) {
    Mat b = n.block(i, i);
    for (auto& row : b)
      for (auto& x : row) x %= p;
    const auto inv = inverse_mod_p(std::move(b), p);
    ensure(inv.has_value(), ErrorCode::kNotFpf, "I - M is singular modulo p");
    const std::size_t o = sh.offset(i);
    for (std::size_t s = 0; s < sh.ranks[i]; ++s)
      for (std::size_t t = 0; t < sh.ranks[i]; ++t) d0[(o + s) * d + o + t] = (*inv)[s][t];
  }
  EndoMatrix x(sh, std::move(d0));
  const EndoMatrix two = add(id, id);
  // The residual I − N·X lies in the radical and squares at every step.
  for (int iter = 0; iter < 64; ++iter) {
    if (multiply(n, x) == id && multiply(x, n) == id) return x;
    x = multiply(x, subtract(two, multiply(n, x)));
  }
  fail(ErrorCode::kInternal, "Newton iteration for (I - M)^-1 did not converge");
}

EndoMatrix matrix_quasi_inverse(const EndoMatrix& m) {
  return subtract(EndoMatrix::identity(m.shape()), inverse_one_minus(m));
}

}  // namespace endoforge
