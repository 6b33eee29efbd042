#ifndef BRUHAT_SCAN_HPP
#define BRUHAT_SCAN_HPP

#include "bruhat/complexity.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace bruhat {

enum class ScanTarget { toric_schubert, toric_richardson, complexity_histogram, levi_table };

std::string to_string(ScanTarget target);
ScanTarget parse_scan_target(const std::string &s);

struct ScanBounds {
  std::optional<int> max_length;  // skip elements (tops of intervals) longer than this
  std::optional<std::size_t> sample; // toric_richardson only: random comparable pairs
  std::uint64_t seed = 0;
  std::uint64_t cap = kDefaultGroupCap;
};

// Toric Schubert variety X_w (l(w) = supp(w)).
struct ToricSchubertRow {
  WeylElement w;
  int length;
};

// Toric interval [u, v].
struct ToricRichardsonRow {
  WeylElement u;
  WeylElement v;
  int ad; // = l(v) - l(u)
};

// Number of w with c_T(X_w) = complexity.
struct HistogramRow {
  int complexity;
  std::size_t count;
};

// c_{L_I}(X_w) for one I inside D_L(w).
struct LeviRow {
  WeylElement w;
  SimpleSubset I;
  WeylElement coset_rep;
  int value;
};

using ScanRow = std::variant<ToricSchubertRow, ToricRichardsonRow, HistogramRow, LeviRow>;
using RowSink = std::function<void(const ScanRow &)>;

// Streams rows to sink in canonical order (length-lex of reduced words).
// Work fans out over `jobs` threads; output does not depend on jobs.
// Throws CapExceeded when |W| is above bounds.cap.
void scan(const RootSystemPtr &rs, ScanTarget target, const ScanBounds &bounds, unsigned jobs,
          const RowSink &sink);

std::vector<ScanRow> scan(const RootSystemPtr &rs, ScanTarget target, const ScanBounds &bounds,
                          unsigned jobs = 1);

} // namespace bruhat

#endif
