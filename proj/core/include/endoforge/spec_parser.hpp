#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "endoforge/group.hpp"
#include "endoforge/limits.hpp"

namespace endoforge {

/// Parse tree of the group-spec language:
///   spec := term ("x" term)*
///   term := "C" int | "D" "(" int ")" | "S" int | "A" int | "Heis" "(" prime ")"
///         | "F" "(" prime "," int ")" | "CExt" "(" term ")"
struct GroupSpecAST {
  enum class Kind { kCyclic, kDihedral, kSymmetric, kAlternating, kHeisenberg, kFrobenius, kCExt, kProduct };

  Kind kind = Kind::kCyclic;
  long long a = 0;  // n, m, p
  long long b = 0;  // q for F(p, q)
  std::vector<GroupSpecAST> children;  // CExt operand or product factors
  std::size_t offset = 0;

  friend bool operator==(const GroupSpecAST& x, const GroupSpecAST& y) {
    return x.kind == y.kind && x.a == y.a && x.b == y.b && x.children == y.children;
  }
};

/// Recursive-descent parse, whitespace-insensitive. Throws ParseError with a
/// byte offset on syntax errors and Error(kSemantic) on constraint
/// violations (non-positive orders, non-prime p, q ∤ p − 1).
GroupSpecAST parse_spec(std::string_view text);

/// Canonical text form; parse_spec(to_string(ast)) == ast.
std::string to_string(const GroupSpecAST& ast);

struct BuiltGroup {
  FiniteGroup group;
  std::optional<SemidirectData> data;  // for F(p, q) and CExt(·)
};

/// Constructs the group. Products of cyclic groups use abelian() indexing;
/// other products fold direct_product() left to right.
BuiltGroup build_group(const GroupSpecAST& ast, const Limits& limits = default_limits());

}  // namespace endoforge
