#include "endoforge/group.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <utility>

#include "endoforge/error.hpp"

namespace endoforge {

struct FiniteGroup::Data {
  std::size_t order = 1;
  std::vector<Elem> table{0};
  std::vector<Elem> inv{0};
  std::vector<std::string> labels;
  std::vector<Elem> gens;
  std::vector<Elem> lex_gens;
  std::vector<TreeNode> tree{{0, 0, 0}};
  std::vector<std::size_t> level_end;
  std::uint64_t fingerprint = 0;
  bool abelian = true;
};

namespace {

std::uint64_t fnv1a(std::span<const Elem> table, std::size_t order) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) {
    for (int i = 0; i < 4; ++i) {
      h ^= (v >> (8 * i)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  mix(order);
  for (Elem e : table) mix(e);
  return h;
}

void build_lex_tree(FiniteGroup::TreeNode root, std::size_t n, const std::vector<Elem>& table,
                    std::vector<Elem>& lex_gens, std::vector<FiniteGroup::TreeNode>& tree,
                    std::vector<std::size_t>& level_end) {
  std::vector<char> in(n, 0);
  tree.assign(1, root);
  in[0] = 1;
  lex_gens.clear();
  level_end.clear();
  Elem next = 1;
  while (tree.size() < n) {
    while (in[next]) ++next;
    lex_gens.push_back(next);
    const std::uint32_t ngens = static_cast<std::uint32_t>(lex_gens.size());
    // Extend the span; new elements are appended, so every earlier level
    // stays a prefix.
    for (std::size_t pos = 0; pos < tree.size(); ++pos) {
      const Elem e = tree[pos].elem;
      for (std::uint32_t s = 0; s < ngens; ++s) {
        const Elem c = table[e * n + lex_gens[s]];
        if (!in[c]) {
          in[c] = 1;
          tree.push_back({c, e, s});
        }
      }
    }
    level_end.push_back(tree.size());
  }
}

}  // namespace

FiniteGroup::FiniteGroup()
    : FiniteGroup([] {
        static const auto empty = std::make_shared<const Data>();
        return empty;
      }()) {}

FiniteGroup::FiniteGroup(std::shared_ptr<const Data> data)
    : data_(std::move(data)),
      order_(data_->order),
      table_(data_->table.data()),
      inv_(data_->inv.data()) {}

FiniteGroup FiniteGroup::build(std::vector<Elem> table, std::vector<std::string> labels,
                               std::vector<Elem> generators, bool check_associativity) {
  const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(table.size()))));
  ensure(n >= 1 && n * n == table.size(), ErrorCode::kNotAGroup,
         "Cayley table is not square");
  for (Elem e : table) ensure(e < n, ErrorCode::kNotAGroup, "table entry out of range");
  for (std::size_t x = 0; x < n; ++x) {
    ensure(table[x] == x && table[x * n] == x, ErrorCode::kNotAGroup,
           "index 0 is not the identity");
  }
  auto data = std::make_shared<Data>();
  data->order = n;
  data->inv.assign(n, kNoElem);
  // Latin square: every row and column is a permutation.
  std::vector<char> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < n; ++c) {
      const Elem v = table[r * n + c];
      if (seen[v]) fail(ErrorCode::kNotAGroup, "row " + std::to_string(r) + " repeats an entry");
      seen[v] = 1;
      if (v == 0) data->inv[r] = static_cast<Elem>(c);
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t r = 0; r < n; ++r) {
      const Elem v = table[r * n + c];
      if (seen[v]) fail(ErrorCode::kNotAGroup, "column " + std::to_string(c) + " repeats an entry");
      seen[v] = 1;
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    ensure(table[data->inv[x] * n + x] == 0, ErrorCode::kNotAGroup, "inverse is not two-sided");
  }
  if (check_associativity && n <= 512) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const Elem xy = table[x * n + y];
        for (std::size_t z = 0; z < n; ++z) {
          if (table[xy * n + z] != table[x * n + table[y * n + z]]) {
            fail(ErrorCode::kNotAGroup, "associativity fails at (" + std::to_string(x) + ", " +
                                            std::to_string(y) + ", " + std::to_string(z) + ")");
          }
        }
      }
  }
  if (!labels.empty()) {
    ensure(labels.size() == n, ErrorCode::kInvalidArgument, "label count differs from order");
  }
  for (Elem g : generators) ensure(g < n, ErrorCode::kInvalidArgument, "generator out of range");

  bool abelian = true;
  for (std::size_t x = 0; x < n && abelian; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (table[x * n + y] != table[y * n + x]) {
        abelian = false;
        break;
      }
  data->abelian = abelian;
  data->fingerprint = fnv1a(table, n);
  data->labels = std::move(labels);
  data->gens = std::move(generators);
  build_lex_tree({0, 0, 0}, n, table, data->lex_gens, data->tree, data->level_end);
  data->table = std::move(table);
  return FiniteGroup(std::shared_ptr<const Data>(std::move(data)));
}

FiniteGroup FiniteGroup::from_table(std::vector<Elem> table, std::vector<std::string> labels,
                                    std::vector<Elem> generators, const Limits& limits) {
  const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(table.size()))));
  if (n > limits.max_order)
    fail(ErrorCode::kCapExceeded, "group order " + std::to_string(n) + " exceeds the construction cap " +
                                      std::to_string(limits.max_order));
  return build(std::move(table), std::move(labels), std::move(generators), true);
}

FiniteGroup trusted_group(std::vector<Elem> table, std::vector<std::string> labels,
                          std::vector<Elem> generators) {
  return FiniteGroup::build(std::move(table), std::move(labels), std::move(generators), false);
}

Elem FiniteGroup::pow(Elem a, long long k) const noexcept {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Elem result = 0;
  Elem base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::size_t FiniteGroup::element_order(Elem a) const noexcept {
  std::size_t k = 1;
  for (Elem x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const noexcept { return data_->abelian; }

std::span<const Elem> FiniteGroup::generators() const noexcept { return data_->gens; }
std::span<const Elem> FiniteGroup::lex_generators() const noexcept { return data_->lex_gens; }
std::span<const FiniteGroup::TreeNode> FiniteGroup::lex_tree() const noexcept {
  return data_->tree;
}
std::span<const std::size_t> FiniteGroup::level_end() const noexcept { return data_->level_end; }

std::string FiniteGroup::label(Elem a) const {
  if (a < data_->labels.size()) return data_->labels[a];
  return std::to_string(a);
}

bool FiniteGroup::has_labels() const noexcept { return !data_->labels.empty(); }

std::span<const Elem> FiniteGroup::table() const noexcept { return data_->table; }

std::uint64_t FiniteGroup::fingerprint() const noexcept { return data_->fingerprint; }

bool operator==(const FiniteGroup& a, const FiniteGroup& b) noexcept {
  if (a.data_ == b.data_) return true;
  return a.order_ == b.order_ && a.data_->fingerprint == b.data_->fingerprint &&
         a.data_->table == b.data_->table;
}

// ---------------------------------------------------------------------------

Subgroup::Subgroup(FiniteGroup parent, std::vector<Elem> elems) : parent_(std::move(parent)) {
  const std::size_t n = parent_.order();
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  ensure(!elems.empty() && elems.front() == 0, ErrorCode::kNotASubgroup,
         "subset does not contain the identity");
  ensure(elems.back() < n, ErrorCode::kInvalidArgument, "element out of range");
  std::vector<char> in(n, 0);
  for (Elem e : elems) in[e] = 1;
  for (Elem a : elems) {
    ensure(in[parent_.inv(a)], ErrorCode::kNotASubgroup, "subset not closed under inverses");
    for (Elem b : elems) {
      if (!in[parent_.mul(a, b)])
        fail(ErrorCode::kNotASubgroup,
             "subset not closed under products (" + std::to_string(a) + ", " + std::to_string(b) + ")");
    }
  }
  elems_ = std::move(elems);
}

Subgroup Subgroup::trusted(FiniteGroup parent, std::vector<Elem> sorted_elems) {
  Subgroup s;
  s.parent_ = std::move(parent);
  s.elems_ = std::move(sorted_elems);
  return s;
}

Subgroup Subgroup::trivial(const FiniteGroup& g) { return trusted(g, {0}); }

Subgroup Subgroup::whole(const FiniteGroup& g) {
  std::vector<Elem> all(g.order());
  std::iota(all.begin(), all.end(), Elem{0});
  return trusted(g, std::move(all));
}

bool Subgroup::contains(Elem a) const noexcept {
  return std::binary_search(elems_.begin(), elems_.end(), a);
}

// ---------------------------------------------------------------------------

Embedding embed(const Subgroup& s) {
  struct Entry {
    FiniteGroup parent;  // keeps the key's address alive
    Embedding embedding;
  };
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, std::vector<Elem>>, std::vector<Entry>> cache;

  const FiniteGroup& g = s.parent();
  auto key = std::make_pair(g.fingerprint(), std::vector<Elem>(s.elements().begin(),
                                                               s.elements().end()));
  {
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) {
      for (const Entry& e : it->second)
        if (e.parent == g) return e.embedding;
    }
  }

  const auto elems = s.elements();
  const std::size_t m = elems.size();
  Embedding out;
  out.to_parent.assign(elems.begin(), elems.end());
  out.from_parent.assign(g.order(), kNoElem);
  for (std::size_t i = 0; i < m; ++i) out.from_parent[elems[i]] = static_cast<Elem>(i);
  std::vector<Elem> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      table[i * m + j] = out.from_parent[g.mul(elems[i], elems[j])];
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels.reserve(m);
    for (Elem e : elems) labels.push_back(g.label(e));
  }
  out.group = trusted_group(std::move(table), std::move(labels));

  std::lock_guard lock(mu);
  if (cache.size() > 4096) cache.clear();
  cache[std::move(key)].push_back({g, out});
  return out;
}

Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Elem> gens) {
  const std::size_t n = g.order();
  std::vector<char> in(n, 0);
  std::vector<Elem> elems{0};
  in[0] = 1;
  std::vector<Elem> real_gens;
  for (Elem s : gens) {
    ensure(s < n, ErrorCode::kInvalidArgument, "generator out of range");
    if (s != 0) real_gens.push_back(s);
  }
  for (std::size_t pos = 0; pos < elems.size(); ++pos) {
    const Elem e = elems[pos];
    for (Elem s : real_gens) {
      const Elem c = g.mul(e, s);
      if (!in[c]) {
        in[c] = 1;
        elems.push_back(c);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return Subgroup::trusted(g, std::move(elems));
}

Subgroup derived_subgroup(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<Elem> comms;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem c = g.commutator(a, b);
      if (!seen[c]) {
        seen[c] = 1;
        comms.push_back(c);
      }
    }
  return generated_subgroup(g, comms);
}

Subgroup center_of(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<Elem> z;
  for (Elem a = 0; a < n; ++a) {
    bool central = true;
    for (Elem b = 0; b < n && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) z.push_back(a);
  }
  return Subgroup::trusted(g, std::move(z));
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t prime_of_pgroup(std::size_t order) {
  if (order < 2) return 0;
  std::size_t p = 2;
  while (order % p != 0) ++p;
  std::size_t m = order;
  while (m % p == 0) m /= p;
  return m == 1 ? static_cast<std::uint32_t>(p) : 0;
}

Subgroup frattini_pgroup(const FiniteGroup& k) {
  if (k.order() == 1) return Subgroup::trivial(k);
  const std::uint32_t p = prime_of_pgroup(k.order());
  ensure(p != 0, ErrorCode::kNotPGroup, "Frattini subgroup requested for a non-p-group");
  const Subgroup d = derived_subgroup(k);
  std::vector<Elem> gens(d.elements().begin(), d.elements().end());
  for (Elem x = 0; x < k.order(); ++x) gens.push_back(k.pow(x, p));
  return generated_subgroup(k, gens);
}

bool is_normal(const FiniteGroup& g, const Subgroup& s) {
  std::span<const Elem> gens = g.lex_generators();
  for (Elem a : s.elements())
    for (Elem x : gens)
      if (!s.contains(g.conj(a, x))) return false;
  return true;
}

Elem commutator(const FiniteGroup& g, Elem a, Elem b) { return g.commutator(a, b); }

Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b) {
  const FiniteGroup& g = a.parent();
  ensure(g == b.parent(), ErrorCode::kGroupMismatch, "subgroups of different groups");
  std::vector<char> seen(g.order(), 0);
  std::vector<Elem> comms;
  for (Elem x : a.elements())
    for (Elem y : b.elements()) {
      const Elem c = g.commutator(x, y);
      if (!seen[c]) {
        seen[c] = 1;
        comms.push_back(c);
      }
    }
  return generated_subgroup(g, comms);
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  ensure(a.parent() == b.parent(), ErrorCode::kGroupMismatch, "subgroups of different groups");
  std::vector<Elem> gens(a.elements().begin(), a.elements().end());
  gens.insert(gens.end(), b.elements().begin(), b.elements().end());
  return generated_subgroup(a.parent(), gens);
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  ensure(a.parent() == b.parent(), ErrorCode::kGroupMismatch, "subgroups of different groups");
  std::vector<Elem> out;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(),
                        b.elements().end(), std::back_inserter(out));
  return Subgroup::trusted(a.parent(), std::move(out));
}

bool is_subset(const Subgroup& a, const Subgroup& b) {
  return std::includes(b.elements().begin(), b.elements().end(), a.elements().begin(),
                       a.elements().end());
}

bool commute_elementwise(const FiniteGroup& g, std::span<const Elem> a,
                         std::span<const Elem> b) {
  for (Elem x : a)
    for (Elem y : b)
      if (g.mul(x, y) != g.mul(y, x)) return false;
  return true;
}

SemidirectData factorize_semidirect(const FiniteGroup& g, const Subgroup& k, const Subgroup& h) {
  ensure(k.parent() == g && h.parent() == g, ErrorCode::kGroupMismatch,
         "factors are not subgroups of the given group");
  ensure(is_normal(g, k), ErrorCode::kNotNormal, "K is not normal");
  std::size_t common = 0;
  for (Elem x : h.elements()) common += k.contains(x) ? 1 : 0;
  ensure(common == 1, ErrorCode::kIntersectionNontrivial, "H and K intersect nontrivially");
  ensure(h.order() * k.order() == g.order(), ErrorCode::kProductIncomplete,
         "HK is not the whole group");
  SemidirectData data{k, h, std::vector<SemidirectData::Factor>(g.order(), {kNoElem, kNoElem})};
  for (Elem x : h.elements())
    for (Elem y : k.elements()) data.factor[g.mul(x, y)] = {x, y};
  return data;
}

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid argument";
    case ErrorCode::kGroupMismatch: return "group mismatch";
    case ErrorCode::kNotAGroup: return "not a group";
    case ErrorCode::kNotASubgroup: return "not a subgroup";
    case ErrorCode::kNotNormal: return "not normal";
    case ErrorCode::kIntersectionNontrivial: return "intersection nontrivial";
    case ErrorCode::kProductIncomplete: return "product not all of G";
    case ErrorCode::kNotHomomorphism: return "not a homomorphism";
    case ErrorCode::kNotAutomorphism: return "not an automorphism";
    case ErrorCode::kNotPGroup: return "not a p-group";
    case ErrorCode::kNotAbelian: return "not abelian";
    case ErrorCode::kNotSpecial: return "not special";
    case ErrorCode::kNotFpf: return "not fpf";
    case ErrorCode::kNotNilpotent: return "not nilpotent";
    case ErrorCode::kNotInvariant: return "not invariant";
    case ErrorCode::kGlueConditions: return "glue conditions fail";
    case ErrorCode::kCapExceeded: return "cap exceeded";
    case ErrorCode::kParse: return "parse error";
    case ErrorCode::kSemantic: return "semantic error";
    case ErrorCode::kInternal: return "internal error";
  }
  return "unknown";
}

}  // namespace endoforge
