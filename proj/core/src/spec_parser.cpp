#include "endoforge/spec_parser.hpp"

#include <cctype>
#include <limits>

#include "endoforge/constructors.hpp"
#include "endoforge/error.hpp"

namespace endoforge {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupSpecAST parse() {
    GroupSpecAST first = term();
    skip_ws();
    if (pos_ == text_.size()) return first;
    GroupSpecAST prod;
    prod.kind = GroupSpecAST::Kind::kProduct;
    prod.offset = first.offset;
    prod.children.push_back(std::move(first));
    while (pos_ < text_.size()) {
      expect('x');
      prod.children.push_back(term());
      skip_ws();
    }
    return prod;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void error(const std::string& what) const {
    throw ParseError(pos_, what + " at offset " + std::to_string(pos_));
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) error(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool accept_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }

  long long integer() {
    skip_ws();
    const std::size_t start = pos_;
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (std::numeric_limits<long long>::max() - 9) / 10) error("integer too large");
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) error("expected an integer");
    return v;
  }

  [[noreturn]] void semantic(std::size_t at, const std::string& what) const {
    throw Error(ErrorCode::kSemantic, what + " (offset " + std::to_string(at) + ")");
  }

  GroupSpecAST term() {
    skip_ws();
    GroupSpecAST t;
    t.offset = pos_;
    using K = GroupSpecAST::Kind;
    if (accept_word("CExt")) {
      t.kind = K::kCExt;
      expect('(');
      t.children.push_back(term());
      expect(')');
    } else if (accept_word("Heis")) {
      t.kind = K::kHeisenberg;
      expect('(');
      t.a = integer();
      expect(')');
      if (!is_prime(static_cast<std::uint64_t>(t.a))) semantic(t.offset, "Heis(p) requires p prime");
      if (t.a == 2) semantic(t.offset, "Heis(p) requires an odd prime");
    } else if (accept_word("C")) {
      t.kind = K::kCyclic;
      t.a = integer();
      if (t.a < 1) semantic(t.offset, "C n requires n >= 1");
    } else if (accept_word("D")) {
      t.kind = K::kDihedral;
      expect('(');
      t.a = integer();
      expect(')');
      if (t.a < 1) semantic(t.offset, "D(m) requires m >= 1");
    } else if (accept_word("S")) {
      t.kind = K::kSymmetric;
      t.a = integer();
      if (t.a < 1) semantic(t.offset, "S n requires n >= 1");
    } else if (accept_word("A")) {
      t.kind = K::kAlternating;
      t.a = integer();
      if (t.a < 1) semantic(t.offset, "A n requires n >= 1");
    } else if (accept_word("F")) {
      t.kind = K::kFrobenius;
      expect('(');
      t.a = integer();
      expect(',');
      t.b = integer();
      expect(')');
      if (!is_prime(static_cast<std::uint64_t>(t.a))) semantic(t.offset, "F(p,q) requires p prime");
      if (t.b < 1 || (t.a - 1) % t.b != 0)
        semantic(t.offset, "F(p,q) requires q to divide p - 1");
    } else {
      error("expected a group term (C, D, S, A, Heis, F, CExt)");
    }
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupSpecAST parse_spec(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const GroupSpecAST& ast) {
  using K = GroupSpecAST::Kind;
  switch (ast.kind) {
    case K::kCyclic:
      return "C" + std::to_string(ast.a);
    case K::kDihedral:
      return "D(" + std::to_string(ast.a) + ")";
    case K::kSymmetric:
      return "S" + std::to_string(ast.a);
    case K::kAlternating:
      return "A" + std::to_string(ast.a);
    case K::kHeisenberg:
      return "Heis(" + std::to_string(ast.a) + ")";
    case K::kFrobenius:
      return "F(" + std::to_string(ast.a) + "," + std::to_string(ast.b) + ")";
    case K::kCExt:
      return "CExt(" + to_string(ast.children.at(0)) + ")";
    case K::kProduct: {
      std::string out;
      for (const auto& c : ast.children) out += (out.empty() ? "" : " x ") + to_string(c);
      return out;
    }
  }
  return {};
}

BuiltGroup build_group(const GroupSpecAST& ast, const Limits& limits) {
  using K = GroupSpecAST::Kind;
  switch (ast.kind) {
    case K::kCyclic:
      return {cyclic(ast.a, "x", limits), std::nullopt};
    case K::kDihedral:
      return {dihedral(ast.a, limits), std::nullopt};
    case K::kSymmetric:
      return {symmetric(ast.a, limits), std::nullopt};
    case K::kAlternating:
      return {alternating(ast.a, limits), std::nullopt};
    case K::kHeisenberg:
      return {heisenberg(ast.a, limits), std::nullopt};
    case K::kFrobenius: {
      auto sp = frobenius(ast.a, ast.b, limits);
      return {std::move(sp.group), std::move(sp.data)};
    }
    case K::kCExt: {
      const BuiltGroup inner = build_group(ast.children.at(0), limits);
      auto sp = make_central_aut_extension(inner.group, limits);
      return {std::move(sp.group), std::move(sp.data)};
    }
    case K::kProduct: {
      bool all_cyclic = true;
      std::vector<long long> inv;
      for (const auto& c : ast.children) {
        all_cyclic &= c.kind == K::kCyclic;
        inv.push_back(c.a);
      }
      if (all_cyclic) return {abelian(inv, limits), std::nullopt};
      FiniteGroup g = build_group(ast.children.at(0), limits).group;
      for (std::size_t i = 1; i < ast.children.size(); ++i)
        g = direct_product(g, build_group(ast.children[i], limits).group, limits);
      return {std::move(g), std::nullopt};
    }
  }
  fail(ErrorCode::kInternal, "unknown spec kind");
}

}  // namespace endoforge
