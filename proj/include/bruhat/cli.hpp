#ifndef BRUHAT_CLI_HPP
#define BRUHAT_CLI_HPP

#include "bruhat/complexity.hpp"
#include "bruhat/scan.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bruhat::cli {

inline constexpr const char *kVersion = "0.1.0";

// Element notation. auto_detect reads "id" as the identity, anything with a
// dot as a word, a permutation of 1..n+1 as one-line notation (type A_n
// only) and any other bare integer as a one-letter word.
enum class Notation { auto_detect, word, oneline };

Notation parse_notation(const std::string &s);

WeylElement parse_element(const RootSystemPtr &rs, const std::string &text,
                          Notation notation = Notation::auto_detect);
Word parse_word(const std::string &text); // "1.2.1"; "id" is the empty word

// One-line notation w(1) w(2) ... w(n+1) for type A_n. Digits are
// concatenated when n + 1 <= 9 and comma-separated otherwise.
std::vector<int> to_oneline(const WeylElement &w);
WeylElement from_oneline(const RootSystemPtr &rs, const std::vector<int> &perm);
std::string format_oneline(const WeylElement &w);

// "id" or the least reduced word, dotted.
std::string format_word(const WeylElement &w);
std::string format_word(const Word &word);

// "2", "1,3", "1.3", "{1,3}"; "", "{}" and "none" give the empty set.
SimpleSubset parse_subset(const std::string &text, int rank);

struct Meta {
  std::string type;
  int rank = 0;
  std::uint64_t seed = 0;
  std::string version = kVersion;

  friend bool operator==(const Meta &, const Meta &) = default;
};

Meta make_meta(const RootSystem &rs, std::uint64_t seed);

nlohmann::json element_to_json(const WeylElement &w);
WeylElement element_from_json(const RootSystemPtr &rs, const nlohmann::json &j);

nlohmann::json report_to_json(const ComplexityReport &report, const Meta &meta);
ComplexityReport report_from_json(const RootSystemPtr &rs, const nlohmann::json &j);
Meta meta_from_json(const nlohmann::json &j);

// Report CSV columns, in order:
//   kind,value,u,v,w,length_u,length_v,length_w,ad,toric_witness,
//   support_set,supp,levi_set,parabolic_set,left_descents,stabilizer_set,
//   levi_factor,coset_rep,length_coset_rep,supp_coset_rep
// Elements are dotted words ("id" for the identity), sets are written
// "{1;3}", and witness fields a report does not carry are left empty.
const std::vector<std::string> &report_csv_columns();
std::string report_csv_header();
std::string report_csv_row(const ComplexityReport &report);

// Scan rows. CSV columns per target:
//   toric_schubert:       w,length
//   toric_richardson:     u,v,ad
//   complexity_histogram: complexity,count
//   levi_table:           w,I,coset_rep,value
std::string scan_csv_header(ScanTarget target);
std::string scan_csv_row(const ScanRow &row);
nlohmann::json scan_row_to_json(const ScanRow &row);

// Entry point behind the bruhat executable. args excludes the program name.
// Returns the process exit code: 0 ok, 2 bad input, 3 failed hypothesis,
// 4 enumeration cap exceeded.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace bruhat::cli

#endif
