#include "endoforge/serialize.hpp"

#include <cstdio>

#include "endoforge/error.hpp"
#include "json.hpp"

namespace endoforge {

using nlohmann::json;

namespace {

json array_of(std::span<const Elem> xs) { return json(std::vector<Elem>(xs.begin(), xs.end())); }

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.byte, std::string("malformed JSON: ") + e.what());
  }
}

template <class F>
auto with_json_errors(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("unexpected JSON shape: ") + e.what());
  }
}

}  // namespace

std::string group_to_json(const FiniteGroup& g) {
  json table = json::array();
  for (Elem a = 0; a < g.order(); ++a) {
    json row = json::array();
    for (Elem b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    table.push_back(std::move(row));
  }
  json labels = json::array();
  for (Elem a = 0; a < g.order(); ++a) labels.push_back(g.label(a));
  return json{{"order", g.order()}, {"table", std::move(table)}, {"labels", std::move(labels)}}
      .dump();
}

FiniteGroup group_from_json(std::string_view text) {
  const json j = parse_json(text);
  return with_json_errors([&] {
    const auto n = j.at("order").get<std::size_t>();
    const auto& rows = j.at("table");
    ensure(rows.size() == n, ErrorCode::kNotAGroup, "table row count differs from order");
    std::vector<Elem> table;
    table.reserve(n * n);
    for (const auto& row : rows) {
      ensure(row.size() == n, ErrorCode::kNotAGroup, "table row length differs from order");
      for (const auto& v : row) table.push_back(v.get<Elem>());
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return FiniteGroup::from_table(std::move(table), std::move(labels));
  });
}

std::string fingerprint_hex(const FiniteGroup& g) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(g.fingerprint()));
  return buf;
}

std::string endo_to_json(const Endo& phi) {
  json images = array_of(phi.images());
  return json{{"group", fingerprint_hex(phi.group())}, {"images", std::move(images)}}.dump();
}

Endo endo_from_json(std::string_view text, const FiniteGroup& g) {
  const json j = parse_json(text);
  return with_json_errors([&] {
    ensure(j.at("group").get<std::string>() == fingerprint_hex(g), ErrorCode::kGroupMismatch,
           "endomorphism belongs to a different group");
    return require_endo(GMap(g, j.at("images").get<std::vector<Elem>>()));
  });
}

std::string decomposition_to_json(const FittingDecomposition& d) {
  json k = array_of(d.K.elements());
  json h = array_of(d.H.elements());
  return json{{"n", d.n}, {"K", std::move(k)}, {"H", std::move(h)}}.dump();
}

std::string matrix_to_json(const EndoMatrix& m) {
  const auto& sh = m.shape();
  json blocks = json::array();
  for (std::size_t i = 0; i < sh.components(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < sh.components(); ++j) row.push_back(m.block(i, j));
    blocks.push_back(std::move(row));
  }
  return json{{"p", sh.p}, {"exps", sh.exps}, {"ranks", sh.ranks}, {"blocks", std::move(blocks)}}
      .dump();
}

EndoMatrix matrix_from_json(std::string_view text) {
  const json j = parse_json(text);
  return with_json_errors([&] {
    AbelianPGroupShape sh;
    sh.p = j.at("p").get<std::uint32_t>();
    sh.exps = j.at("exps").get<std::vector<std::uint32_t>>();
    sh.ranks = j.at("ranks").get<std::vector<std::uint32_t>>();
    ensure(sh.exps.size() == sh.ranks.size(), ErrorCode::kInvalidArgument,
           "exps and ranks differ in length");
    return EndoMatrix::from_blocks(
        sh, j.at("blocks").get<std::vector<std::vector<std::vector<std::vector<std::int64_t>>>>>());
  });
}

std::string regular_subgroup_to_json(const RegularSubgroup& n) {
  json perms = json::array();
  for (const Perm& p : n.perms()) perms.push_back(array_of(p.images()));
  return json{{"perms", std::move(perms)}, {"regular", n.regular()}, {"normalized", n.normalized()}}
      .dump();
}

}  // namespace endoforge
