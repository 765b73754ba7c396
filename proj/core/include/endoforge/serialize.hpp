#pragma once

#include <string>
#include <string_view>

#include "endoforge/abelian_pgroup.hpp"
#include "endoforge/fitting.hpp"
#include "endoforge/group.hpp"
#include "endoforge/hopf_galois.hpp"
#include "endoforge/nearring.hpp"

namespace endoforge {

// Compact single-line JSON documents.

/// {"order": n, "table": [[...]], "labels": [...]}
std::string group_to_json(const FiniteGroup& g);
/// Validates the table as a group; throws kParse on malformed JSON.
FiniteGroup group_from_json(std::string_view text);

/// 16-digit lowercase hex of the table fingerprint.
std::string fingerprint_hex(const FiniteGroup& g);

/// {"group": "<fingerprint>", "images": [...]}
std::string endo_to_json(const Endo& phi);
/// Throws kGroupMismatch if the fingerprint differs from `g`'s,
/// kNotHomomorphism if the images are not an endomorphism.
Endo endo_from_json(std::string_view text, const FiniteGroup& g);

/// {"n": ..., "K": [...], "H": [...]}
std::string decomposition_to_json(const FittingDecomposition& d);

/// {"p": ..., "exps": [...], "ranks": [...], "blocks": [[[[...]]]]}
std::string matrix_to_json(const EndoMatrix& m);
EndoMatrix matrix_from_json(std::string_view text);

/// {"perms": [[...]], "regular": ..., "normalized": ...}
std::string regular_subgroup_to_json(const RegularSubgroup& n);

}  // namespace endoforge
