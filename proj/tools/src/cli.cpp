#include "endoforge/cli/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "endoforge/cli/reports.hpp"
#include "endoforge/fitting.hpp"
#include "endoforge/hopf_galois.hpp"
#include "endoforge/serialize.hpp"
#include "endoforge/spec_parser.hpp"
#include "json.hpp"

namespace endoforge::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string spec;
  bool as_json = false;
  bool table = false;
  bool normalized = false;
  std::string filter = "all";
  std::optional<std::string> images;
  std::optional<std::size_t> index;
};

struct Context {
  GroupSpecAST ast;
  BuiltGroup built;
  std::string name;
  Limits limits;
};

Context load(const std::string& spec) {
  Context c{parse_spec(spec), {}, {}, default_limits()};
  c.built = build_group(c.ast, c.limits);
  c.name = to_string(c.ast);
  return c;
}

json elems(std::span<const Elem> xs) { return json(std::vector<Elem>(xs.begin(), xs.end())); }

std::string labels(const FiniteGroup& g, std::span<const Elem> xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ", ";
    s += g.label(xs[i]);
  }
  return s + "]";
}

std::string indices(std::span<const Elem> xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(xs[i]);
  }
  return s;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void row(std::ostream& out, const std::string& key, const std::string& value) {
  out << std::left << std::setw(18) << key << value << '\n';
}

json header(const char* command, const Context& c) {
  return json{{"schema", "v1"}, {"command", command}, {"spec", c.name}, {"order", c.built.group.order()}};
}

std::vector<Elem> parse_images(const std::string& text) {
  std::vector<Elem> out;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    std::istringstream words(tok);
    std::string w;
    while (words >> w) {
      std::size_t used = 0;
      unsigned long v = 0;
      try {
        v = std::stoul(w, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != w.size() || used == 0)
        fail(ErrorCode::kInvalidArgument, "--images expects element indices, got '" + w + "'");
      out.push_back(static_cast<Elem>(v));
    }
  }
  return out;
}

Endo select_endo(const Context& c, const Options& o) {
  const FiniteGroup& g = c.built.group;
  ensure(o.images.has_value() != o.index.has_value(), ErrorCode::kInvalidArgument,
         "give exactly one of --images and --index");
  if (o.images) {
    auto r = as_endo(GMap(g, parse_images(*o.images)));
    if (!r) {
      const HomViolation v = r.error();
      fail(ErrorCode::kSemantic, "not an endomorphism: f(xy) != f(x)f(y) at x = " +
                                     g.label(v.x) + ", y = " + g.label(v.y));
    }
    return *r;
  }
  std::optional<Endo> found;
  std::size_t seen = 0;
  for_each_endomorphism(
      g, EndoFilter::parse(o.filter),
      [&](const Endo& phi) {
        if (seen++ == *o.index) {
          found = phi;
          return false;
        }
        return true;
      },
      c.limits);
  if (!found)
    fail(ErrorCode::kInvalidArgument, "--index " + std::to_string(*o.index) + " out of range (" +
                                          std::to_string(seen) + " endomorphisms match)");
  return *found;
}

std::size_t exponent(const FiniteGroup& g) {
  std::size_t e = 1;
  for (Elem x = 0; x < g.order(); ++x) e = std::lcm(e, g.element_order(x));
  return e;
}

int cmd_describe(const Options& o, std::ostream& out) {
  const Context c = load(o.spec);
  const FiniteGroup& g = c.built.group;
  const Subgroup z = center_of(g);
  const Subgroup d = derived_subgroup(g);
  const auto gens = g.generators().empty() ? g.lex_generators() : g.generators();
  if (o.as_json) {
    json j = header("describe", c);
    j["abelian"] = g.is_abelian();
    j["exponent"] = exponent(g);
    j["center"] = elems(z.elements());
    j["derived"] = elems(d.elements());
    j["generators"] = elems(gens);
    json lab = json::array();
    for (Elem x = 0; x < g.order(); ++x) lab.push_back(g.label(x));
    j["labels"] = std::move(lab);
    j["fingerprint"] = fingerprint_hex(g);
    if (o.table) j["table"] = json::parse(group_to_json(g))["table"];
    out << j.dump() << '\n';
    return kOk;
  }
  row(out, "group", c.name);
  row(out, "order", std::to_string(g.order()));
  row(out, "abelian", yes_no(g.is_abelian()));
  row(out, "exponent", std::to_string(exponent(g)));
  row(out, "center", std::to_string(z.order()) + "  " + labels(g, z.elements()));
  row(out, "derived", std::to_string(d.order()) + "  " + labels(g, d.elements()));
  row(out, "generators", labels(g, gens));
  row(out, "fingerprint", fingerprint_hex(g));
  std::vector<Elem> all(g.order());
  std::iota(all.begin(), all.end(), Elem{0});
  row(out, "elements", labels(g, all));
  if (o.table) {
    out << "table\n";
    for (Elem a = 0; a < g.order(); ++a) {
      out << "  ";
      for (Elem b = 0; b < g.order(); ++b) out << std::setw(4) << g.mul(a, b);
      out << '\n';
    }
  }
  return kOk;
}

int cmd_endos(const Options& o, std::ostream& out) {
  const Context c = load(o.spec);
  const FiniteGroup& g = c.built.group;
  const EndoFilter filter = EndoFilter::parse(o.filter);
  std::size_t count = 0;
  bool headed = false;
  auto head = [&] {
    if (headed || o.as_json) return;
    headed = true;
    out << "endomorphisms of " << c.name << ", filter: " << filter.to_string() << '\n';
    out << std::right << std::setw(6) << "#" << std::setw(8) << "kernel" << std::setw(7)
        << "image" << std::setw(5) << "fpf" << std::setw(9) << "abelian" << "  images\n";
  };
  for_each_endomorphism(
      g, filter,
      [&](const Endo& phi) {
        head();
        if (o.as_json) {
          out << json{{"schema", "v1"},
                      {"type", "endo"},
                      {"index", count},
                      {"images", elems(phi.images())},
                      {"fpf", phi.is_fpf()},
                      {"abelian", phi.is_abelian()},
                      {"kernel_order", phi.kernel().order()},
                      {"image_order", phi.image().order()}}
                     .dump()
              << '\n';
        } else {
          out << std::right << std::setw(6) << count << std::setw(8) << phi.kernel().order()
              << std::setw(7) << phi.image().order() << std::setw(5) << yes_no(phi.is_fpf())
              << std::setw(9) << yes_no(phi.is_abelian()) << "  " << indices(phi.images())
              << '\n';
        }
        ++count;
        return true;
      },
      c.limits);
  if (o.as_json) {
    json j = header("endos", c);
    j["type"] = "summary";
    j["filter"] = filter.to_string();
    j["count"] = count;
    out << j.dump() << '\n';
  } else {
    head();
    out << "count: " << count << '\n';
  }
  return kOk;
}

int cmd_fitting(const Options& o, std::ostream& out) {
  const Context c = load(o.spec);
  const FiniteGroup& g = c.built.group;
  const Endo phi = select_endo(c, o);
  const FittingDecomposition d = fitting_decomposition(phi);
  const RestrictedEndo on_k = restrict_endo(phi, d.K);
  const RestrictedEndo on_h = restrict_endo(phi, d.H);
  const auto nil = nilpotency_index(on_k.endo);
  const bool aut = is_bijective(on_h.endo);
  if (o.as_json) {
    json j = header("fitting", c);
    j["images"] = elems(phi.images());
    j.update(json::parse(decomposition_to_json(d)));
    j["nilpotency_on_K"] = nil ? json(*nil) : json(nullptr);
    j["automorphism_on_H"] = aut;
    out << j.dump() << '\n';
    return kOk;
  }
  row(out, "group", c.name);
  row(out, "phi", indices(phi.images()));
  row(out, "n", std::to_string(d.n));
  row(out, "K", std::to_string(d.K.order()) + "  " + labels(g, d.K.elements()));
  row(out, "H", std::to_string(d.H.order()) + "  " + labels(g, d.H.elements()));
  row(out, "phi on K", nil ? "nilpotent, index " + std::to_string(*nil) : "not nilpotent");
  row(out, "phi on H", aut ? "automorphism" : "not bijective");
  return kOk;
}

json clause_json(const QuasiInverseReport::Clause& c) {
  return json{{"holds", c.holds}, {"witness", c.witness ? json(*c.witness) : json(nullptr)}};
}

std::string clause_text(const FiniteGroup& g, const QuasiInverseReport::Clause& c) {
  if (c.holds) return "holds";
  return c.witness ? "fails at " + g.label(*c.witness) : "fails";
}

int cmd_quasi_inverse(const Options& o, std::ostream& out) {
  const Context c = load(o.spec);
  const FiniteGroup& g = c.built.group;
  const Endo phi = select_endo(c, o);
  std::optional<Endo> psi;
  if (phi.is_fpf()) psi = quasi_inverse(phi);
  std::optional<QuasiInverseReport> rep;
  if (psi) rep = quasi_inverse_properties(phi, *psi);

  if (o.as_json) {
    json j = header("quasi-inverse", c);
    j["phi"] = elems(phi.images());
    j["fpf"] = phi.is_fpf();
    j["abelian"] = phi.is_abelian();
    j["psi"] = psi ? elems(psi->images()) : json(nullptr);
    if (rep) {
      j["clauses"] = {{"sums_commute", clause_json(rep->sums_commute)},
                      {"compositions_commute", clause_json(rep->compositions_commute)},
                      {"images_equal_abelian", clause_json(rep->images_equal_abelian)},
                      {"kernels_equal", clause_json(rep->kernels_equal)}};
    }
    out << j.dump() << '\n';
    return kOk;
  }
  row(out, "group", c.name);
  row(out, "phi", indices(phi.images()));
  row(out, "fpf", yes_no(phi.is_fpf()));
  row(out, "abelian", yes_no(phi.is_abelian()));
  if (!phi.is_fpf()) {
    row(out, "psi", "undefined (phi has a nontrivial fixed point)");
    return kOk;
  }
  if (!psi) {
    row(out, "psi", "none (1 - (1 - phi)^-1 is not an endomorphism)");
    return kOk;
  }
  row(out, "psi", indices(psi->images()));
  row(out, "sums commute", clause_text(g, rep->sums_commute));
  row(out, "products commute", clause_text(g, rep->compositions_commute));
  row(out, "images", clause_text(g, rep->images_equal_abelian) + "  " +
                         labels(g, phi.image().elements()));
  row(out, "kernels", clause_text(g, rep->kernels_equal) + "  " +
                          labels(g, phi.kernel().elements()));
  return kOk;
}

int cmd_classes(const Options& o, std::ostream& out) {
  const Context c = load(o.spec);
  const auto classes = equivalence_classes(c.built.group, c.limits);
  if (o.as_json) {
    json j = header("classes", c);
    json arr = json::array();
    for (const auto& cls : classes) {
      json members = json::array();
      for (const Endo& e : cls) members.push_back(elems(e.images()));
      arr.push_back({{"size", cls.size()},
                     {"regular_subgroup", json::parse(regular_subgroup_to_json(beta_subgroup(cls.front())))["perms"]},
                     {"members", std::move(members)}});
    }
    j["classes"] = std::move(arr);
    out << j.dump() << '\n';
    return kOk;
  }
  std::size_t total = 0;
  for (const auto& cls : classes) total += cls.size();
  out << "Childs classes of abelian fpf endomorphisms of " << c.name << ": " << classes.size()
      << " classes, " << total << " endomorphisms\n";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    out << "class " << i << "  size " << classes[i].size() << '\n';
    for (const Endo& e : classes[i]) out << "    " << indices(e.images()) << '\n';
  }
  return kOk;
}

int cmd_regular(const Options& o, std::ostream& out) {
  const Context c = load(o.spec);
  const auto subs = enumerate_regular_subgroups(c.built.group, o.normalized, c.limits);
  const auto [left, right] = translation_subgroups(c.built.group);
  auto translation = [&](const RegularSubgroup& n) {
    std::string t;
    if (n == left) t += "L";
    if (n == right) t += t.empty() ? "R" : ",R";
    return t.empty() ? std::string("-") : t;
  };
  if (o.as_json) {
    json j = header("regular", c);
    j["normalized_only"] = o.normalized;
    json arr = json::array();
    for (const auto& n : subs) {
      json s = json::parse(regular_subgroup_to_json(n));
      s["translation"] = translation(n);
      arr.push_back(std::move(s));
    }
    j["count"] = subs.size();
    j["subgroups"] = std::move(arr);
    out << j.dump() << '\n';
    return kOk;
  }
  out << "regular subgroups of Sym(" << c.name << ")" << (o.normalized ? " normalized by L" : "")
      << ": " << subs.size() << '\n';
  for (std::size_t i = 0; i < subs.size(); ++i) {
    out << "#" << i << "  normalized " << yes_no(subs[i].normalized()) << "  translation "
        << translation(subs[i]) << '\n';
    for (const Perm& p : subs[i].perms()) out << "    " << indices(p.images()) << '\n';
  }
  return kOk;
}

void require_kind(const Context& c, GroupSpecAST::Kind kind, const char* what) {
  if (c.ast.kind != kind) fail(ErrorCode::kSemantic, std::string("this report needs ") + what + ", got " + c.name);
}

int cmd_dihedral(const Options& o, std::ostream& out) {
  const Context c = load(o.spec);
  require_kind(c, GroupSpecAST::Kind::kDihedral, "a dihedral group D(m)");
  const FiniteGroup& g = c.built.group;
  const DihedralReport r = dihedral_report(c.ast.a, c.limits);
  if (o.as_json) {
    json j = header("dihedral-report", c);
    json arr = json::array();
    for (const auto& e : r.entries) {
      arr.push_back({{"images", elems(e.phi.images())},
                     {"label", e.kase.label},
                     {"kernel", e.kase.kernel},
                     {"image", e.kase.image},
                     {"i", e.kase.i ? json(*e.kase.i) : json(nullptr)},
                     {"kernel_elements", elems(e.phi.kernel().elements())},
                     {"image_elements", elems(e.phi.image().elements())}});
    }
    j["endomorphisms"] = std::move(arr);
    j["counts"] = r.counts;
    j["total"] = r.entries.size();
    out << j.dump() << '\n';
    return kOk;
  }
  out << "nontrivial abelian fpf endomorphisms of " << c.name << " (order " << g.order()
      << "): " << r.entries.size() << '\n';
  if (r.m % 2 != 0) out << "none exist: the order is twice an odd number\n";
  for (std::size_t k = 0; k < r.entries.size(); ++k) {
    const auto& e = r.entries[k];
    out << "#" << k << "  " << e.kase.label;
    if (e.kase.i) out << "  i = " << *e.kase.i;
    out << "\n    phi     " << indices(e.phi.images()) << "\n    kernel  " << e.kase.kernel
        << " = " << labels(g, e.phi.kernel().elements()) << "\n    image   " << e.kase.image
        << " = " << labels(g, e.phi.image().elements()) << '\n';
  }
  out << "counts\n";
  for (const auto& l : dihedral_labels()) out << "  " << std::left << std::setw(18) << l << r.counts.at(l) << '\n';
  return kOk;
}

int cmd_sn(const Options& o, std::ostream& out) {
  const Context c = load(o.spec);
  require_kind(c, GroupSpecAST::Kind::kSymmetric, "a symmetric group Sn");
  const FiniteGroup& g = c.built.group;
  const SymmetricReport r = sn_report(c.ast.a, c.limits);
  if (o.as_json) {
    json j = header("sn-report", c);
    json arr = json::array();
    for (const auto& e : r.entries) {
      arr.push_back({{"images", elems(e.phi.images())},
                     {"involution", e.involution},
                     {"involution_label", g.label(e.involution)},
                     {"even", e.even},
                     {"nilpotency", e.nilpotency},
                     {"fitting_kernel_order", e.fitting_kernel_order},
                     {"kernel_elements", elems(e.phi.kernel().elements())},
                     {"image_elements", elems(e.phi.image().elements())}});
    }
    j["endomorphisms"] = std::move(arr);
    j["count"] = r.entries.size();
    j["holds"] = r.holds;
    out << j.dump() << '\n';
    return kOk;
  }
  out << "nontrivial abelian fpf endomorphisms of " << c.name << ": " << r.entries.size() << '\n';
  for (std::size_t k = 0; k < r.entries.size(); ++k) {
    const auto& e = r.entries[k];
    out << "#" << k << "  image <" << g.label(e.involution) << ">  "
        << (e.even ? "even" : "odd") << " involution, nilpotent of index " << e.nilpotency
        << ", Fitting kernel of order " << e.fitting_kernel_order << "\n    phi     "
        << indices(e.phi.images()) << "\n    kernel  " << labels(g, e.phi.kernel().elements())
        << '\n';
  }
  out << "every image generated by an even involution, K = " << c.name << ": " << yes_no(r.holds)
      << '\n';
  return kOk;
}

int cmd_frobenius(const Options& o, std::ostream& out) {
  const Context c = load(o.spec);
  require_kind(c, GroupSpecAST::Kind::kFrobenius, "a Frobenius group F(p,q)");
  const FiniteGroup& g = c.built.group;
  const FrobeniusReport r = frobenius_report(c.ast.a, c.ast.b, c.limits);
  if (o.as_json) {
    json j = header("frobenius-report", c);
    json arr = json::array();
    for (const auto& e : r.entries) {
      arr.push_back({{"images", elems(e.phi.images())},
                     {"complement", e.complement},
                     {"complement_label", g.label(e.complement)},
                     {"s", e.s},
                     {"coprime", e.coprime},
                     {"prime_condition", e.prime_condition}});
    }
    j["endomorphisms"] = std::move(arr);
    j["count"] = r.entries.size();
    j["expected"] = r.expected;
    j["holds"] = r.holds;
    out << j.dump() << '\n';
    return kOk;
  }
  out << "nontrivial fpf endomorphisms of " << c.name << ": " << r.entries.size()
      << " (expected " << r.expected << ")\n";
  out << "each kills the kernel C" << r.p << " and maps b -> b^s on an invariant complement <b>\n";
  out << std::right << std::setw(6) << "#" << std::setw(10) << "b" << std::setw(4) << "s"
      << std::setw(14) << "(s-1,q)=1" << std::setw(22) << "s!=1 mod primes|q" << '\n';
  for (std::size_t k = 0; k < r.entries.size(); ++k) {
    const auto& e = r.entries[k];
    out << std::setw(6) << k << std::setw(10) << g.label(e.complement) << std::setw(4) << e.s
        << std::setw(14) << yes_no(e.coprime) << std::setw(22) << yes_no(e.prime_condition)
        << '\n';
  }
  out << "all conditions hold: " << yes_no(r.holds) << '\n';
  return kOk;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kParse:
    case ErrorCode::kInvalidArgument:
      return kUsage;
    case ErrorCode::kCapExceeded:
      return kCap;
    default:
      return kSemantic;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Endomorphism near-ring and Hopf-Galois toolkit for finite groups", "endoforge"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.as_json, "Emit JSON (schema v1) instead of aligned text");

  auto spec_arg = [&](CLI::App* sub) {
    sub->add_option("spec", o.spec, "Group spec, e.g. \"C2 x C4\", \"D(6)\", \"F(7,3)\"")->required();
  };
  auto select_args = [&](CLI::App* sub) {
    sub->add_option("--images", o.images, "Endomorphism as image indices, comma or space separated");
    sub->add_option("--index", o.index, "Position in the lexicographic list of endomorphisms");
    sub->add_option("--filter", o.filter, "Restrict --index to a filtered list");
  };

  std::vector<std::pair<CLI::App*, int (*)(const Options&, std::ostream&)>> commands;
  auto add = [&](const char* name, const char* help, int (*fn)(const Options&, std::ostream&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    spec_arg(sub);
    commands.emplace_back(sub, fn);
    return sub;
  };

  add("describe", "Order, center, derived subgroup and elements", cmd_describe)
      ->add_flag("--table", o.table, "Include the Cayley table");
  add("endos", "List endomorphisms", cmd_endos)
      ->add_option("--filter", o.filter,
                   "Any of all, fpf, abelian, fpf-abelian, nontrivial, quasi-invertible");
  select_args(add("fitting", "Fitting decomposition of one endomorphism", cmd_fitting));
  select_args(add("quasi-inverse", "Quasi-inverse of one endomorphism", cmd_quasi_inverse));
  add("classes", "Childs equivalence classes of abelian fpf endomorphisms", cmd_classes);
  add("regular", "Census of regular subgroups of Sym(G)", cmd_regular)
      ->add_flag("--normalized", o.normalized, "Only those normalized by the left translations");
  add("dihedral-report", "Classify the abelian fpf endomorphisms of D(m)", cmd_dihedral);
  add("sn-report", "Abelian fpf endomorphisms of Sn", cmd_sn);
  add("frobenius-report", "Fpf endomorphisms of F(p,q)", cmd_frobenius);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    for (auto& [sub, fn] : commands)
      if (sub->parsed()) return fn(o, out);
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n' << "  " << o.spec << '\n'
        << "  " << std::string(std::min(e.offset(), o.spec.size()), ' ') << "^\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace endoforge::cli
