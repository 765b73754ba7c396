#include "endoforge/homomorphism.hpp"

#include <algorithm>

#include "endoforge/error.hpp"

namespace endoforge {

std::optional<std::vector<Elem>> extend_homomorphism(const FiniteGroup& source,
                                                     const FiniteGroup& target,
                                                     std::span<const Elem> gens,
                                                     std::span<const Elem> images) {
  ensure(gens.size() == images.size(), ErrorCode::kInvalidArgument,
         "generator and image lists differ in length");
  const std::size_t n = source.order();
  for (Elem s : gens) ensure(s < n, ErrorCode::kInvalidArgument, "generator out of range");
  for (Elem t : images)
    ensure(t < target.order(), ErrorCode::kInvalidArgument, "image out of range");

  std::vector<Elem> img(n, kNoElem);
  std::vector<Elem> queue{0};
  img[0] = 0;
  for (std::size_t pos = 0; pos < queue.size(); ++pos) {
    const Elem e = queue[pos];
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const Elem c = source.mul(e, gens[s]);
      if (img[c] == kNoElem) {
        img[c] = target.mul(img[e], images[s]);
        queue.push_back(c);
      }
    }
  }
  ensure(queue.size() == n, ErrorCode::kInvalidArgument, "elements do not generate the group");
  // f(e·s) = f(e)·f(s) on every edge implies the homomorphism law.
  for (Elem e = 0; e < n; ++e)
    for (std::size_t s = 0; s < gens.size(); ++s)
      if (img[source.mul(e, gens[s])] != target.mul(img[e], images[s])) return std::nullopt;
  return img;
}

namespace {

class HomSearch {
 public:
  HomSearch(const FiniteGroup& source, const FiniteGroup& target, std::span<const Elem> allowed,
            const HomVisitor& visit)
      : src_(source), tgt_(target), visit_(visit) {
    gens_.assign(source.lex_generators().begin(), source.lex_generators().end());
    tree_ = source.lex_tree();
    level_end_ = source.level_end();
    img_.assign(source.order(), kNoElem);
    img_[0] = 0;
    gen_img_.assign(gens_.size(), 0);

    std::vector<Elem> pool;
    if (allowed.empty()) {
      pool.resize(target.order());
      for (Elem t = 0; t < target.order(); ++t) pool[t] = t;
    } else {
      pool.assign(allowed.begin(), allowed.end());
      std::sort(pool.begin(), pool.end());
    }
    candidates_.resize(gens_.size());
    for (std::size_t j = 0; j < gens_.size(); ++j) {
      const std::size_t ord = source.element_order(gens_[j]);
      for (Elem t : pool)
        if (ord % target.element_order(t) == 0) candidates_[j].push_back(t);
    }
  }

  bool run() {
    if (gens_.empty()) return visit_(img_);
    return branch(0);
  }

 private:
  bool branch(std::size_t j) {
    const std::size_t begin = j == 0 ? 1 : level_end_[j - 1];
    const std::size_t end = level_end_[j];
    for (Elem t : candidates_[j]) {
      gen_img_[j] = t;
      for (std::size_t pos = begin; pos < end; ++pos) {
        const auto& node = tree_[pos];
        img_[node.elem] = tgt_.mul(img_[node.parent], gen_img_[node.gen]);
      }
      if (!consistent(j, begin, end)) continue;
      if (j + 1 == gens_.size()) {
        if (!visit_(img_)) return false;
      } else if (!branch(j + 1)) {
        return false;
      }
    }
    // Reset this level so stale values never leak into a shallower branch.
    for (std::size_t pos = begin; pos < end; ++pos) img_[tree_[pos].elem] = kNoElem;
    return true;
  }

  bool consistent(std::size_t j, std::size_t begin, std::size_t end) const {
    // Edges (e, g_j) for e in the previous span.
    const Elem gj = gens_[j];
    const Elem tj = gen_img_[j];
    for (std::size_t pos = 0; pos < begin; ++pos) {
      const Elem e = tree_[pos].elem;
      if (img_[src_.mul(e, gj)] != tgt_.mul(img_[e], tj)) return false;
    }
    // Edges (e, g_s) for new e and every s ≤ j.
    for (std::size_t pos = begin; pos < end; ++pos) {
      const Elem e = tree_[pos].elem;
      for (std::size_t s = 0; s <= j; ++s)
        if (img_[src_.mul(e, gens_[s])] != tgt_.mul(img_[e], gen_img_[s])) return false;
    }
    return true;
  }

  const FiniteGroup& src_;
  const FiniteGroup& tgt_;
  const HomVisitor& visit_;
  std::vector<Elem> gens_;
  std::span<const FiniteGroup::TreeNode> tree_;
  std::span<const std::size_t> level_end_;
  std::vector<Elem> img_;
  std::vector<Elem> gen_img_;
  std::vector<std::vector<Elem>> candidates_;
};

}  // namespace

bool for_each_homomorphism(const FiniteGroup& source, const FiniteGroup& target,
                           std::span<const Elem> allowed, const HomVisitor& visit) {
  return HomSearch(source, target, allowed, visit).run();
}

}  // namespace endoforge
