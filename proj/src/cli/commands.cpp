#include "bruhat/cli.hpp"

#include "bruhat/deodhar.hpp"
#include "bruhat/error.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace bruhat::cli {

using nlohmann::json;

namespace {

struct GroupOptions {
  std::string type;
  int rank = 0;
  std::string notation = "auto";

  RootSystemPtr build() const {
    if (type.empty())
      throw InputError("--type is required");
    return build_root_system(parse_family(type), rank);
  }
};

void add_group_options(CLI::App *sub, GroupOptions &g) {
  sub->add_option("--type", g.type, "Cartan type: A, B, C, D, E, F or G")->required();
  sub->add_option("--rank", g.rank, "Rank of the root system")->required();
}

void add_notation_option(CLI::App *sub, GroupOptions &g) {
  sub->add_option("--notation", g.notation, "Element notation: auto, word or oneline")
      ->check(CLI::IsMember({"auto", "word", "oneline"}));
}

// Raised for a hypothesis the partial-flag Levi formula needs but that the
// complexity module reports as a status rather than an exception.
HypothesisError partial_levi_error(const PartialLeviResult &res) {
  const std::string formula = "c_{L_I}(X^{P_J}_w) = c_{L_I}(X_w)";
  const std::string idx = to_string(res.offending);
  switch (res.status) {
  case PartialLeviStatus::not_minimal_coset_rep:
    return {"w in W^J", formula,
            "w is not a minimal coset representative for J: right descents " + idx + " lie in J"};
  case PartialLeviStatus::not_stabilized:
    return {"I subset of D_L(w w_0(J))", formula,
            "L_I does not act on the partial flag Schubert variety: indices " + idx +
                " are not left descents of w w_0(J)"};
  case PartialLeviStatus::acts_on_partial_only:
    return {"I subset of D_L(w)", formula,
            "I not contained in left descent set: indices " + idx +
                " are not left descents of w, so L_I does not act on X_w"};
  case PartialLeviStatus::ok:
    break;
  }
  return {"", formula, "unexpected status"};
}

std::string element_text(const WeylElement &w) {
  std::string s = format_word(w);
  if (w.root_system().datum().family == Family::A)
    s += " [" + format_oneline(w) + "]";
  return s;
}

std::string formula_text(const ComplexityReport &r) {
  const ComplexityWitness &w = r.witness;
  std::ostringstream os;
  switch (r.kind) {
  case ComplexityKind::torus_richardson:
    os << "l(v) - l(u) - ad(u,v) = " << *w.length_v << " - " << *w.length_u << " - " << *w.ad;
    break;
  case ComplexityKind::torus_schubert:
  case ComplexityKind::torus_partial:
    os << "l(w) - supp(w) = " << *w.length_w << " - " << *w.supp;
    break;
  case ComplexityKind::levi_borel_schubert:
  case ComplexityKind::levi_partial:
    os << "l(^I w) - supp(^I w) = " << *w.length_coset_rep << " - " << *w.supp_coset_rep;
    break;
  }
  os << " = " << r.value;
  return os.str();
}

void print_report_text(std::ostream &out, const ComplexityReport &r) {
  const ComplexityWitness &w = r.witness;
  out << "kind: " << to_string(r.kind) << "\n";
  out << "value: " << r.value << "\n";
  out << "formula: " << formula_text(r) << "\n";
  auto el = [&](const char *key, const std::optional<WeylElement> &e) {
    if (e)
      out << key << ": " << element_text(*e) << "\n";
  };
  auto num = [&](const char *key, const std::optional<int> &v) {
    if (v)
      out << key << ": " << *v << "\n";
  };
  auto set = [&](const char *key, const std::optional<SimpleSubset> &s) {
    if (s)
      out << key << ": " << to_string(*s) << "\n";
  };
  el("u", w.u);
  el("v", w.v);
  el("w", w.w);
  num("length_u", w.length_u);
  num("length_v", w.length_v);
  num("length_w", w.length_w);
  num("ad", w.ad);
  el("toric_witness", w.toric_witness);
  set("support_set", w.support_set);
  num("supp", w.supp);
  set("levi_set", w.levi_set);
  set("parabolic_set", w.parabolic_set);
  set("left_descents", w.left_descents);
  set("stabilizer_set", w.stabilizer_set);
  el("levi_factor", w.levi_factor);
  el("coset_rep", w.coset_rep);
  num("length_coset_rep", w.length_coset_rep);
  num("supp_coset_rep", w.supp_coset_rep);
}

void print_hypothesis_error(std::ostream &err, const HypothesisError &e, const std::string &format) {
  if (format == "json") {
    json j{{"error", "hypothesis"},
           {"hypothesis", e.hypothesis()},
           {"formula", e.formula()},
           {"message", e.what()}};
    err << j.dump() << "\n";
    return;
  }
  err << "error: hypothesis failed: " << e.hypothesis() << "\n"
      << "formula: " << e.formula() << "\n"
      << "detail: " << e.what() << "\n";
}

// ---- info -----------------------------------------------------------------

struct InfoOptions {
  GroupOptions group;
  std::string format = "text";
};

int cmd_info(const InfoOptions &o, std::ostream &out) {
  const RootSystemPtr rs = o.group.build();
  const CartanDatum &d = rs->datum();
  const std::uint64_t order = group_order(d);
  if (o.format == "json") {
    json cartan = json::array();
    for (int i = 0; i < d.rank; ++i) {
      json row = json::array();
      for (int j = 0; j < d.rank; ++j)
        row.push_back(d.cartan(i, j));
      cartan.push_back(row);
    }
    json roots = json::array();
    for (const Root &r : rs->positive_roots())
      roots.push_back(r.coeffs);
    json j{{"type", std::string(1, family_letter(d.family))},
           {"rank", d.rank},
           {"name", d.name()},
           {"positive_roots", rs->num_positive_roots()},
           {"group_order", order},
           {"cartan", cartan},
           {"roots", roots}};
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "type: " << d.name() << "\n";
  out << "rank: " << d.rank << "\n";
  out << "positive roots: " << rs->num_positive_roots() << "\n";
  out << "group order: " << order << "\n";
  out << "cartan matrix:\n";
  for (int i = 0; i < d.rank; ++i) {
    out << " ";
    for (int j = 0; j < d.rank; ++j)
      out << std::setw(3) << d.cartan(i, j);
    out << "\n";
  }
  out << "positive roots (simple-root coordinates):\n";
  for (const Root &r : rs->positive_roots())
    out << "  (" << to_string(r) << ")\n";
  return 0;
}

// ---- complexity -----------------------------------------------------------

struct ComplexityOptions {
  GroupOptions group;
  std::string kind;
  std::optional<std::string> u, v, w, I, J;
  std::string format = "text";
  std::uint64_t seed = 0;
};

const std::string &require(const std::optional<std::string> &value, const char *flag,
                           const std::string &kind) {
  if (!value)
    throw InputError(std::string(flag) + " is required for --kind " + kind);
  return *value;
}

int cmd_complexity(const ComplexityOptions &o, std::ostream &out, std::ostream &err) {
  const RootSystemPtr rs = o.group.build();
  const Notation notation = parse_notation(o.group.notation);
  auto element = [&](const std::optional<std::string> &text, const char *flag) {
    return parse_element(rs, require(text, flag, o.kind), notation);
  };
  auto subset = [&](const std::optional<std::string> &text) {
    return text ? parse_subset(*text, rs->rank()) : SimpleSubset{};
  };

  try {
    ComplexityReport report;
    if (o.kind == "richardson") {
      report = torus_complexity_richardson(element(o.u, "--u"), element(o.v, "--v"));
    } else if (o.kind == "schubert") {
      report = torus_complexity_schubert(element(o.w, "--w"));
    } else if (o.kind == "levi") {
      report = levi_borel_complexity(parse_subset(require(o.I, "--I", o.kind), rs->rank()),
                                     element(o.w, "--w"));
    } else if (o.kind == "partial") {
      const WeylElement w = element(o.w, "--w");
      const SimpleSubset J = subset(o.J);
      const SimpleSubset I = subset(o.I);
      if (I.empty()) {
        report = partial_flag_torus_complexity(w, J);
      } else {
        const PartialLeviResult res = partial_flag_levi_complexity(w, J, I);
        if (res.status != PartialLeviStatus::ok)
          throw partial_levi_error(res);
        report = *res.report;
      }
    } else {
      throw InputError("unknown --kind '" + o.kind + "'");
    }

    if (o.format == "json") {
      out << report_to_json(report, make_meta(*rs, o.seed)).dump(2) << "\n";
    } else if (o.format == "csv") {
      out << report_csv_header() << report_csv_row(report);
    } else {
      print_report_text(out, report);
    }
    return 0;
  } catch (const HypothesisError &e) {
    print_hypothesis_error(err, e, o.format);
    return 3;
  }
}

// ---- scan -----------------------------------------------------------------

struct ScanOptions {
  GroupOptions group;
  std::string target;
  std::string out_path;
  std::string format = "csv";
  unsigned jobs = 1;
  std::optional<int> max_length;
  std::optional<std::size_t> sample;
  std::uint64_t seed = 0;
};

int cmd_scan(const ScanOptions &o, std::ostream &out) {
  const RootSystemPtr rs = o.group.build();
  const ScanTarget target = parse_scan_target(o.target);
  ScanBounds bounds;
  bounds.max_length = o.max_length;
  bounds.sample = o.sample;
  bounds.seed = o.seed;
  bounds.cap = group_cap_from_env();
  const std::uint64_t order = group_order(rs->datum());
  if (order > bounds.cap)
    throw CapExceeded(order, bounds.cap);

  std::ofstream file;
  std::ostream *dest = &out;
  if (!o.out_path.empty()) {
    file.open(o.out_path, std::ios::binary | std::ios::trunc);
    if (!file)
      throw InputError("cannot open output file '" + o.out_path + "'");
    dest = &file;
  }

  const Meta meta = make_meta(*rs, o.seed);
  bool first = true;
  if (o.format == "csv") {
    *dest << scan_csv_header(target);
    scan(rs, target, bounds, o.jobs, [&](const ScanRow &row) { *dest << scan_csv_row(row); });
  } else if (o.format == "jsonl") {
    scan(rs, target, bounds, o.jobs,
         [&](const ScanRow &row) { *dest << scan_row_to_json(row).dump() << "\n"; });
  } else {
    json m{{"type", meta.type}, {"rank", meta.rank}, {"seed", meta.seed}, {"version", meta.version}};
    *dest << "{\"target\":" << json(to_string(target)).dump() << ",\"meta\":" << m.dump()
          << ",\"rows\":[";
    scan(rs, target, bounds, o.jobs, [&](const ScanRow &row) {
      *dest << (first ? "\n" : ",\n") << scan_row_to_json(row).dump();
      first = false;
    });
    *dest << "\n]}\n";
  }
  dest->flush();
  if (!*dest)
    throw InputError("failed writing scan output");
  return 0;
}

// ---- deodhar --------------------------------------------------------------

struct DeodharOptions {
  GroupOptions group;
  std::string v_word;
  std::string u = "id";
  std::string format = "text";
};

std::string positions_text(const std::vector<int> &positions) {
  std::string s = "{";
  for (std::size_t k = 0; k < positions.size(); ++k)
    s += (k ? "," : "") + std::to_string(positions[k]);
  return s + "}";
}

int cmd_deodhar(const DeodharOptions &o, std::ostream &out) {
  const RootSystemPtr rs = o.group.build();
  const Word word = parse_word(o.v_word);
  for (int i : word)
    if (i < 1 || i > rs->rank())
      throw InputError("simple index " + std::to_string(i) + " out of range in --v-word");
  const WeylElement u = parse_element(rs, o.u, parse_notation(o.group.notation));
  const std::vector<Subexpression> rows = enumerate_distinguished(rs, word, u);
  const DeodharPolynomial poly = deodhar_polynomial(rs, word, u);

  if (o.format == "json") {
    json arr = json::array();
    for (const Subexpression &se : rows) {
      json mask = json::array();
      for (Choice c : se.choices)
        mask.push_back(c == Choice::take ? "take" : "skip");
      json betas = json::array();
      for (const auto &[pos, beta] : se.betas)
        betas.push_back({{"position", pos}, {"root", beta.coeffs}});
      const DeodharComponentShape shape = component_shape(se);
      arr.push_back({{"mask", mask},
                     {"j_plus", se.j_plus},
                     {"j_circ", se.j_circ},
                     {"j_minus", se.j_minus},
                     {"betas", betas},
                     {"shape", {shape.circ_count, shape.minus_count}},
                     {"td", td_span(se).rank()},
                     {"positive", se.is_positive()}});
    }
    json j{{"v_word", format_word(word)},
           {"u", element_to_json(u)},
           {"rows", arr},
           {"polynomial", poly.polynomial.coefficients},
           {"polynomial_text", poly.polynomial.to_string()}};
    if (!poly.warning.empty())
      j["warning"] = poly.warning;
    out << j.dump(2) << "\n";
    return 0;
  }

  out << "v-word: " << format_word(word) << "  u: " << element_text(u) << "\n";
  for (const Subexpression &se : rows) {
    const DeodharComponentShape shape = component_shape(se);
    out << se.mask_string() << "  J+=" << positions_text(se.j_plus)
        << " Jo=" << positions_text(se.j_circ) << " J-=" << positions_text(se.j_minus)
        << "  betas=[";
    bool first = true;
    for (const auto &[pos, beta] : se.betas) {
      out << (first ? "" : " ") << pos << ":(" << to_string(beta) << ")";
      first = false;
    }
    out << "]  shape=(" << shape.circ_count << "," << shape.minus_count << ")"
        << "  td=" << td_span(se).rank() << (se.is_positive() ? "  positive" : "") << "\n";
  }
  if (!poly.warning.empty())
    out << "warning: " << poly.warning << "\n";
  out << "polynomial: " << poly.polynomial.to_string() << "\n";
  return 0;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Torus and Levi-Borel complexity of Richardson and Schubert varieties", "bruhat"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  InfoOptions info_o;
  CLI::App *info = app.add_subcommand("info", "Summarize a root system");
  add_group_options(info, info_o.group);
  info->add_option("--format", info_o.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  ComplexityOptions cx;
  CLI::App *complexity = app.add_subcommand("complexity", "Compute one complexity report");
  add_group_options(complexity, cx.group);
  add_notation_option(complexity, cx.group);
  complexity->add_option("--kind", cx.kind, "richardson, schubert, levi or partial")
      ->required()
      ->check(CLI::IsMember({"richardson", "schubert", "levi", "partial"}));
  complexity->add_option("--u", cx.u, "Bottom element");
  complexity->add_option("--v", cx.v, "Top element");
  complexity->add_option("--w", cx.w, "Schubert element");
  complexity->add_option("--I", cx.I, "Levi subset, e.g. 1,3");
  complexity->add_option("--J", cx.J, "Parabolic subset, e.g. 2");
  complexity->add_option("--format", cx.format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  complexity->add_option("--seed", cx.seed, "Seed recorded in the output metadata");

  ScanOptions sc;
  CLI::App *scan_cmd = app.add_subcommand("scan", "Enumerate a table over the whole group");
  add_group_options(scan_cmd, sc.group);
  scan_cmd->add_option("--target", sc.target,
                       "toric_schubert, toric_richardson, complexity_histogram or levi_table")
      ->required()
      ->check(CLI::IsMember(
          {"toric_schubert", "toric_richardson", "complexity_histogram", "levi_table"}));
  scan_cmd->add_option("--out", sc.out_path, "Output file (default stdout)");
  scan_cmd->add_option("--format", sc.format, "csv, jsonl or json")
      ->check(CLI::IsMember({"csv", "jsonl", "json"}));
  scan_cmd->add_option("--jobs", sc.jobs, "Worker threads")->check(CLI::PositiveNumber);
  scan_cmd->add_option("--max-length", sc.max_length, "Skip elements longer than this");
  scan_cmd->add_option("--sample", sc.sample, "toric_richardson: number of random pairs");
  scan_cmd->add_option("--seed", sc.seed, "Seed for --sample");

  DeodharOptions dd;
  CLI::App *deodhar = app.add_subcommand("deodhar", "List distinguished subexpressions");
  add_group_options(deodhar, dd.group);
  add_notation_option(deodhar, dd.group);
  deodhar->add_option("--v-word", dd.v_word, "Reduced word for v, e.g. 1.2.1")->required();
  deodhar->add_option("--u", dd.u, "Bottom element (default id)");
  deodhar->add_option("--format", dd.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*info)
      return cmd_info(info_o, out);
    if (*complexity)
      return cmd_complexity(cx, out, err);
    if (*scan_cmd)
      return cmd_scan(sc, out);
    if (*deodhar)
      return cmd_deodhar(dd, out);
  } catch (const InputError &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const HypothesisError &e) {
    print_hypothesis_error(err, e, "text");
    return 3;
  } catch (const CapExceeded &e) {
    err << "error: " << e.what() << " (set BRUHAT_GROUP_CAP to raise it)\n";
    return 4;
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

} // namespace bruhat::cli
