#include "bruhat/cli.hpp"

#include "bruhat/error.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace bruhat::cli {

using nlohmann::json;

namespace {

int parse_int(const std::string &s, const std::string &what) {
  int value = 0;
  const char *first = s.data();
  const char *last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (s.empty() || ec != std::errc{} || ptr != last)
    throw InputError("bad " + what + " '" + s + "'");
  return value;
}

std::vector<std::string> split(const std::string &s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

bool all_digits(const std::string &s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

bool is_permutation_of_range(const std::vector<int> &perm) {
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k)
    if (sorted[k] != static_cast<int>(k) + 1)
      return false;
  return true;
}

std::optional<std::vector<int>> oneline_digits(const std::string &text) {
  std::vector<int> perm;
  if (text.find(',') != std::string::npos) {
    for (const std::string &p : split(text, ',')) {
      if (!all_digits(p))
        return std::nullopt;
      perm.push_back(parse_int(p, "permutation entry"));
    }
  } else {
    if (!all_digits(text))
      return std::nullopt;
    for (char c : text)
      perm.push_back(c - '0');
  }
  return perm;
}

std::string subset_cell(const SimpleSubset &s) {
  std::string out = "{";
  bool first = true;
  for (int i : s.indices()) {
    out += (first ? "" : ";") + std::to_string(i);
    first = false;
  }
  return out + "}";
}

json subset_to_json(const SimpleSubset &s) { return s.indices(); }

SimpleSubset subset_from_json(const json &j) {
  return SimpleSubset::from_indices(j.get<std::vector<int>>());
}

} // namespace

Notation parse_notation(const std::string &s) {
  if (s == "auto")
    return Notation::auto_detect;
  if (s == "word")
    return Notation::word;
  if (s == "oneline")
    return Notation::oneline;
  throw InputError("unknown notation '" + s + "'");
}

Word parse_word(const std::string &text) {
  if (text == "id" || text.empty())
    return {};
  Word word;
  for (const std::string &part : split(text, '.'))
    word.push_back(parse_int(part, "simple index"));
  return word;
}

std::vector<int> to_oneline(const WeylElement &w) {
  if (w.root_system().datum().family != Family::A)
    throw InputError("one-line notation is only defined for type A");
  const int n = w.rank() + 1;
  const IntMatrix &m = w.action();
  // Column j in e-coordinates: e_k coefficient is c_k - c_{k-1}. It is
  // e_{w(j)} - e_{w(j+1)}.
  auto e_coords = [&](int j) {
    std::vector<int> e(n, 0);
    for (int k = 0; k < n; ++k) {
      const int ck = k < n - 1 ? m(k, j) : 0;
      const int prev = k > 0 ? m(k - 1, j) : 0;
      e[k] = ck - prev;
    }
    return e;
  };
  std::vector<int> perm(n, 0);
  for (int j = 0; j < n - 1; ++j) {
    const std::vector<int> e = e_coords(j);
    for (int k = 0; k < n; ++k) {
      if (e[k] == 1)
        perm[j] = k + 1;
      else if (e[k] == -1)
        perm[j + 1] = k + 1;
    }
  }
  if (n == 1)
    perm[0] = 1;
  return perm;
}

WeylElement from_oneline(const RootSystemPtr &rs, const std::vector<int> &perm) {
  if (rs->datum().family != Family::A)
    throw InputError("one-line notation is only valid for type A");
  const int r = rs->rank();
  if (static_cast<int>(perm.size()) != r + 1 || !is_permutation_of_range(perm))
    throw InputError("one-line element must be a permutation of 1.." + std::to_string(r + 1));
  IntMatrix m(r, r);
  for (int j = 0; j < r; ++j) {
    const int a = perm[j];
    const int b = perm[j + 1];
    if (a < b) {
      for (int k = a; k < b; ++k)
        m(k - 1, j) = 1;
    } else {
      for (int k = b; k < a; ++k)
        m(k - 1, j) = -1;
    }
  }
  return WeylElement(rs, std::move(m));
}

std::string format_oneline(const WeylElement &w) {
  const std::vector<int> perm = to_oneline(w);
  std::string out;
  const bool wide = perm.size() > 9;
  for (std::size_t k = 0; k < perm.size(); ++k) {
    if (wide && k)
      out += ',';
    out += std::to_string(perm[k]);
  }
  return out;
}

std::string format_word(const Word &word) {
  if (word.empty())
    return "id";
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k)
    out += (k ? "." : "") + std::to_string(word[k]);
  return out;
}

std::string format_word(const WeylElement &w) { return format_word(reduced_word(w)); }

WeylElement parse_element(const RootSystemPtr &rs, const std::string &text, Notation notation) {
  if (text == "id")
    return WeylElement::identity(rs);
  const bool type_a = rs->datum().family == Family::A;
  if (notation == Notation::oneline) {
    const auto perm = oneline_digits(text);
    if (!perm)
      throw InputError("bad one-line element '" + text + "'");
    return from_oneline(rs, *perm);
  }
  if (notation == Notation::auto_detect && type_a && text.find('.') == std::string::npos) {
    const auto perm = oneline_digits(text);
    if (perm && static_cast<int>(perm->size()) == rs->rank() + 1 && is_permutation_of_range(*perm))
      return from_oneline(rs, *perm);
  }
  const Word word = parse_word(text);
  for (int i : word)
    if (i < 1 || i > rs->rank())
      throw InputError("simple index " + std::to_string(i) + " out of range 1.." +
                       std::to_string(rs->rank()) + " in '" + text + "'");
  return from_word(rs, word);
}

SimpleSubset parse_subset(const std::string &text, int rank) {
  std::string body = text;
  if (body.size() >= 2 && body.front() == '{' && body.back() == '}')
    body = body.substr(1, body.size() - 2);
  if (body.empty() || body == "none")
    return {};
  std::replace(body.begin(), body.end(), '.', ',');
  std::replace(body.begin(), body.end(), ';', ',');
  SimpleSubset s;
  for (const std::string &part : split(body, ',')) {
    const int i = parse_int(part, "simple index");
    if (i < 1 || i > rank)
      throw InputError("simple index " + std::to_string(i) + " out of range 1.." +
                       std::to_string(rank));
    s.insert(i);
  }
  return s;
}

Meta make_meta(const RootSystem &rs, std::uint64_t seed) {
  return Meta{std::string(1, family_letter(rs.datum().family)), rs.rank(), seed, kVersion};
}

json element_to_json(const WeylElement &w) {
  json j;
  j["word"] = format_word(w);
  if (w.root_system().datum().family == Family::A)
    j["oneline"] = format_oneline(w);
  return j;
}

WeylElement element_from_json(const RootSystemPtr &rs, const json &j) {
  return parse_element(rs, j.at("word").get<std::string>(), Notation::word);
}

json report_to_json(const ComplexityReport &report, const Meta &meta) {
  const ComplexityWitness &w = report.witness;
  json wit = json::object();
  auto put_element = [&](const char *key, const std::optional<WeylElement> &e) {
    if (e)
      wit[key] = element_to_json(*e);
  };
  auto put_int = [&](const char *key, const std::optional<int> &v) {
    if (v)
      wit[key] = *v;
  };
  auto put_set = [&](const char *key, const std::optional<SimpleSubset> &s) {
    if (s)
      wit[key] = subset_to_json(*s);
  };
  put_element("u", w.u);
  put_element("v", w.v);
  put_element("w", w.w);
  put_int("length_u", w.length_u);
  put_int("length_v", w.length_v);
  put_int("length_w", w.length_w);
  put_int("ad", w.ad);
  put_element("toric_witness", w.toric_witness);
  put_set("support_set", w.support_set);
  put_int("supp", w.supp);
  put_set("levi_set", w.levi_set);
  put_set("parabolic_set", w.parabolic_set);
  put_set("left_descents", w.left_descents);
  put_set("stabilizer_set", w.stabilizer_set);
  put_element("levi_factor", w.levi_factor);
  put_element("coset_rep", w.coset_rep);
  put_int("length_coset_rep", w.length_coset_rep);
  put_int("supp_coset_rep", w.supp_coset_rep);

  json j;
  j["kind"] = to_string(report.kind);
  j["value"] = report.value;
  j["witness"] = std::move(wit);
  j["meta"] = {{"type", meta.type}, {"rank", meta.rank}, {"seed", meta.seed},
               {"version", meta.version}};
  return j;
}

ComplexityReport report_from_json(const RootSystemPtr &rs, const json &j) {
  ComplexityReport r;
  r.kind = parse_complexity_kind(j.at("kind").get<std::string>());
  r.value = j.at("value").get<int>();
  const json &wit = j.at("witness");
  ComplexityWitness &w = r.witness;
  auto get_element = [&](const char *key, std::optional<WeylElement> &e) {
    if (wit.contains(key))
      e = element_from_json(rs, wit.at(key));
  };
  auto get_int = [&](const char *key, std::optional<int> &v) {
    if (wit.contains(key))
      v = wit.at(key).get<int>();
  };
  auto get_set = [&](const char *key, std::optional<SimpleSubset> &s) {
    if (wit.contains(key))
      s = subset_from_json(wit.at(key));
  };
  get_element("u", w.u);
  get_element("v", w.v);
  get_element("w", w.w);
  get_int("length_u", w.length_u);
  get_int("length_v", w.length_v);
  get_int("length_w", w.length_w);
  get_int("ad", w.ad);
  get_element("toric_witness", w.toric_witness);
  get_set("support_set", w.support_set);
  get_int("supp", w.supp);
  get_set("levi_set", w.levi_set);
  get_set("parabolic_set", w.parabolic_set);
  get_set("left_descents", w.left_descents);
  get_set("stabilizer_set", w.stabilizer_set);
  get_element("levi_factor", w.levi_factor);
  get_element("coset_rep", w.coset_rep);
  get_int("length_coset_rep", w.length_coset_rep);
  get_int("supp_coset_rep", w.supp_coset_rep);
  return r;
}

Meta meta_from_json(const json &j) {
  const json &m = j.at("meta");
  return Meta{m.at("type").get<std::string>(), m.at("rank").get<int>(),
              m.at("seed").get<std::uint64_t>(), m.at("version").get<std::string>()};
}

const std::vector<std::string> &report_csv_columns() {
  static const std::vector<std::string> columns{
      "kind",          "value",          "u",
      "v",             "w",              "length_u",
      "length_v",      "length_w",       "ad",
      "toric_witness", "support_set",    "supp",
      "levi_set",      "parabolic_set",  "left_descents",
      "stabilizer_set", "levi_factor",   "coset_rep",
      "length_coset_rep", "supp_coset_rep"};
  return columns;
}

std::string report_csv_header() {
  std::string out;
  for (const std::string &c : report_csv_columns())
    out += (out.empty() ? "" : ",") + c;
  return out + "\n";
}

std::string report_csv_row(const ComplexityReport &report) {
  const ComplexityWitness &w = report.witness;
  auto el = [](const std::optional<WeylElement> &e) { return e ? format_word(*e) : std::string(); };
  auto num = [](const std::optional<int> &v) { return v ? std::to_string(*v) : std::string(); };
  auto set = [](const std::optional<SimpleSubset> &s) { return s ? subset_cell(*s) : std::string(); };
  const std::vector<std::string> cells{
      to_string(report.kind), std::to_string(report.value),
      el(w.u), el(w.v), el(w.w),
      num(w.length_u), num(w.length_v), num(w.length_w), num(w.ad),
      el(w.toric_witness), set(w.support_set), num(w.supp),
      set(w.levi_set), set(w.parabolic_set), set(w.left_descents), set(w.stabilizer_set),
      el(w.levi_factor), el(w.coset_rep), num(w.length_coset_rep), num(w.supp_coset_rep)};
  std::string out;
  for (std::size_t k = 0; k < cells.size(); ++k)
    out += (k ? "," : "") + cells[k];
  return out + "\n";
}

std::string scan_csv_header(ScanTarget target) {
  switch (target) {
  case ScanTarget::toric_schubert:
    return "w,length\n";
  case ScanTarget::toric_richardson:
    return "u,v,ad\n";
  case ScanTarget::complexity_histogram:
    return "complexity,count\n";
  case ScanTarget::levi_table:
    return "w,I,coset_rep,value\n";
  }
  return "\n";
}

std::string scan_csv_row(const ScanRow &row) {
  std::ostringstream os;
  std::visit(
      [&](const auto &r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, ToricSchubertRow>)
          os << format_word(r.w) << ',' << r.length;
        else if constexpr (std::is_same_v<T, ToricRichardsonRow>)
          os << format_word(r.u) << ',' << format_word(r.v) << ',' << r.ad;
        else if constexpr (std::is_same_v<T, HistogramRow>)
          os << r.complexity << ',' << r.count;
        else
          os << format_word(r.w) << ',' << subset_cell(r.I) << ',' << format_word(r.coset_rep)
             << ',' << r.value;
      },
      row);
  os << '\n';
  return os.str();
}

json scan_row_to_json(const ScanRow &row) {
  return std::visit(
      [](const auto &r) -> json {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, ToricSchubertRow>)
          return {{"w", element_to_json(r.w)}, {"length", r.length}};
        else if constexpr (std::is_same_v<T, ToricRichardsonRow>)
          return {{"u", element_to_json(r.u)}, {"v", element_to_json(r.v)}, {"ad", r.ad}};
        else if constexpr (std::is_same_v<T, HistogramRow>)
          return {{"complexity", r.complexity}, {"count", r.count}};
        else
          return {{"w", element_to_json(r.w)},
                  {"I", subset_to_json(r.I)},
                  {"coset_rep", element_to_json(r.coset_rep)},
                  {"value", r.value}};
      },
      row);
}

} // namespace bruhat::cli
