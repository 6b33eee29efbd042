#include "bruhat/scan.hpp"

#include "bruhat/error.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <random>
#include <set>
#include <thread>

namespace bruhat {

std::string to_string(ScanTarget target) {
  switch (target) {
  case ScanTarget::toric_schubert:
    return "toric_schubert";
  case ScanTarget::toric_richardson:
    return "toric_richardson";
  case ScanTarget::complexity_histogram:
    return "complexity_histogram";
  case ScanTarget::levi_table:
    return "levi_table";
  }
  return "unknown";
}

ScanTarget parse_scan_target(const std::string &s) {
  for (ScanTarget t : {ScanTarget::toric_schubert, ScanTarget::toric_richardson,
                       ScanTarget::complexity_histogram, ScanTarget::levi_table})
    if (to_string(t) == s)
      return t;
  throw InputError("unknown scan target '" + s + "'");
}

namespace {

constexpr std::size_t kBatch = 256;

// Runs work(k) for k in [0, n) on up to `jobs` threads and hands the results
// to emit in index order, one batch at a time.
template <typename Result, typename Work, typename Emit>
void ordered_parallel(std::size_t n, unsigned jobs, Work work, Emit emit) {
  jobs = std::max(1u, jobs);
  for (std::size_t start = 0; start < n; start += kBatch) {
    const std::size_t end = std::min(n, start + kBatch);
    std::vector<Result> results(end - start);
    if (jobs == 1 || end - start == 1) {
      for (std::size_t k = start; k < end; ++k)
        results[k - start] = work(k);
    } else {
      std::atomic<std::size_t> next{start};
      std::vector<std::thread> pool;
      const unsigned nthreads = static_cast<unsigned>(std::min<std::size_t>(jobs, end - start));
      for (unsigned t = 0; t < nthreads; ++t)
        pool.emplace_back([&] {
          for (std::size_t k = next++; k < end; k = next++)
            results[k - start] = work(k);
        });
      for (std::thread &th : pool)
        th.join();
    }
    for (Result &r : results)
      emit(r);
  }
}

std::vector<WeylElement> bounded_group(const RootSystemPtr &rs, const ScanBounds &bounds) {
  std::vector<WeylElement> group = enumerate_group(rs, bounds.cap);
  if (bounds.max_length) {
    std::erase_if(group, [&](const WeylElement &w) { return w.length() > *bounds.max_length; });
  }
  return group;
}

std::vector<std::pair<std::size_t, std::size_t>>
sampled_pairs(const std::vector<WeylElement> &group, const ScanBounds &bounds) {
  std::set<std::pair<std::size_t, std::size_t>> chosen;
  std::mt19937_64 rng(bounds.seed);
  std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
  const std::size_t want = *bounds.sample;
  std::size_t attempts = 0;
  const std::size_t max_attempts = 1000 * std::max<std::size_t>(want, 1);
  while (chosen.size() < want && attempts++ < max_attempts) {
    std::size_t a = pick(rng);
    std::size_t b = pick(rng);
    if (group[a].length() > group[b].length())
      std::swap(a, b);
    if (bruhat_le(group[a], group[b]))
      chosen.emplace(a, b);
  }
  return {chosen.begin(), chosen.end()};
}

} // namespace

void scan(const RootSystemPtr &rs, ScanTarget target, const ScanBounds &bounds, unsigned jobs,
          const RowSink &sink) {
  const std::vector<WeylElement> group = bounded_group(rs, bounds);

  switch (target) {
  case ScanTarget::toric_schubert: {
    ordered_parallel<std::optional<ScanRow>>(
        group.size(), jobs,
        [&](std::size_t k) -> std::optional<ScanRow> {
          const WeylElement &w = group[k];
          if (support(w).size() != w.length())
            return std::nullopt;
          return ToricSchubertRow{w, w.length()};
        },
        [&](const std::optional<ScanRow> &row) {
          if (row)
            sink(*row);
        });
    break;
  }
  case ScanTarget::toric_richardson: {
    if (bounds.sample) {
      const auto pairs = sampled_pairs(group, bounds);
      ordered_parallel<std::optional<ScanRow>>(
          pairs.size(), jobs,
          [&](std::size_t k) -> std::optional<ScanRow> {
            const WeylElement &u = group[pairs[k].first];
            const WeylElement &v = group[pairs[k].second];
            if (!is_toric(u, v))
              return std::nullopt;
            return ToricRichardsonRow{u, v, v.length() - u.length()};
          },
          [&](const std::optional<ScanRow> &row) {
            if (row)
              sink(*row);
          });
      break;
    }
    std::unordered_map<WeylElement, std::size_t, WeylElementHash> position;
    for (std::size_t k = 0; k < group.size(); ++k)
      position.emplace(group[k], k);
    // Rows for one bottom u, tops v in canonical order.
    ordered_parallel<std::vector<ScanRow>>(
        group.size(), jobs,
        [&](std::size_t k) {
          const WeylElement &u = group[k];
          std::vector<std::size_t> tops;
          for (const WeylElement &v : group)
            if (v.length() >= u.length() && bruhat_le(u, v))
              tops.push_back(position.at(v));
          std::sort(tops.begin(), tops.end());
          std::vector<ScanRow> rows;
          for (std::size_t t : tops) {
            const WeylElement &v = group[t];
            if (is_toric(u, v))
              rows.push_back(ToricRichardsonRow{u, v, v.length() - u.length()});
          }
          return rows;
        },
        [&](const std::vector<ScanRow> &rows) {
          for (const ScanRow &r : rows)
            sink(r);
        });
    break;
  }
  case ScanTarget::complexity_histogram: {
    std::map<int, std::size_t> counts;
    ordered_parallel<int>(
        group.size(), jobs, [&](std::size_t k) { return torus_complexity_schubert(group[k]).value; },
        [&](int value) { ++counts[value]; });
    for (const auto &[value, count] : counts)
      sink(HistogramRow{value, count});
    break;
  }
  case ScanTarget::levi_table: {
    ordered_parallel<std::vector<ScanRow>>(
        group.size(), jobs,
        [&](std::size_t k) {
          const WeylElement &w = group[k];
          const std::vector<int> descents = w.left_descent_set().indices();
          std::vector<ScanRow> rows;
          const std::size_t subsets = std::size_t{1} << descents.size();
          for (std::size_t mask = 0; mask < subsets; ++mask) {
            SimpleSubset I;
            for (std::size_t b = 0; b < descents.size(); ++b)
              if (mask >> b & 1u)
                I.insert(descents[b]);
            const ComplexityReport r = levi_borel_complexity(I, w);
            rows.push_back(LeviRow{w, I, *r.witness.coset_rep, r.value});
          }
          return rows;
        },
        [&](const std::vector<ScanRow> &rows) {
          for (const ScanRow &r : rows)
            sink(r);
        });
    break;
  }
  }
}

std::vector<ScanRow> scan(const RootSystemPtr &rs, ScanTarget target, const ScanBounds &bounds,
                          unsigned jobs) {
  std::vector<ScanRow> rows;
  scan(rs, target, bounds, jobs, [&](const ScanRow &r) { rows.push_back(r); });
  return rows;
}

} // namespace bruhat
