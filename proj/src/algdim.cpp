#include "bruhat/algdim.hpp"

#include "bruhat/error.hpp"

#include <algorithm>
#include <cstdlib>

namespace bruhat {

std::size_t span_rank(std::span<const Root> roots) {
  if (roots.empty())
    return 0;
  const std::size_t cols = roots.front().coeffs.size();
  std::vector<std::vector<__int128>> m;
  m.reserve(roots.size());
  for (const Root &r : roots) {
    if (r.coeffs.size() != cols)
      throw InputError("span_rank: vectors of different lengths");
    m.emplace_back(r.coeffs.begin(), r.coeffs.end());
  }

  // Bareiss elimination; every entry stays an integer minor.
  std::size_t rank = 0;
  __int128 prev = 1;
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0)
      ++pivot;
    if (pivot == m.size())
      continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      for (std::size_t c = col + 1; c < cols; ++c)
        m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

SpanBasis::SpanBasis(std::vector<Root> generators)
    : generators_(std::move(generators)), rank_(span_rank(generators_)) {}

bool SpanBasis::contains(const Root &r) const {
  if (r.is_zero())
    return true;
  std::vector<Root> g = generators_;
  g.push_back(r);
  return span_rank(g) == rank_;
}

bool SpanBasis::contains(const SpanBasis &other) const {
  if (other.rank_ == 0)
    return true;
  std::vector<Root> g = generators_;
  g.insert(g.end(), other.generators_.begin(), other.generators_.end());
  return span_rank(g) == rank_;
}

SpanBasis SpanBasis::with(const Root &r) const {
  std::vector<Root> g = generators_;
  g.push_back(r);
  return SpanBasis(std::move(g));
}

SpanBasis SpanBasis::with(const SpanBasis &other) const {
  std::vector<Root> g = generators_;
  g.insert(g.end(), other.generators_.begin(), other.generators_.end());
  return SpanBasis(std::move(g));
}

bool SpanBasis::same_span(const SpanBasis &other) const {
  return rank_ == other.rank_ && contains(other);
}

namespace {

// Deduplicated labels in root order.
SpanBasis labels_span(const RootSystem &rs, const std::vector<const Root *> &labels) {
  std::vector<std::size_t> idx;
  idx.reserve(labels.size());
  for (const Root *r : labels)
    idx.push_back(rs.index_of_abs(*r));
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  std::vector<Root> g;
  g.reserve(idx.size());
  for (std::size_t k : idx)
    g.push_back(rs.positive_roots()[k]);
  return SpanBasis(std::move(g));
}

} // namespace

SpanBasis ad_direct(const LabeledInterval &iv) {
  std::vector<const Root *> labels;
  for (const CoverEdge &e : iv.graph_edges())
    labels.push_back(&e.label);
  return labels_span(iv.bottom().root_system(), labels);
}

SpanBasis ad_direct(const WeylElement &u, const WeylElement &v) {
  return ad_direct(interval(u, v));
}

SpanBasis ad_via_covers_at(const WeylElement &u, const WeylElement &v, IntervalEnd end) {
  if (!bruhat_le(u, v))
    throw HypothesisError("u <= v", "AD(u,v)", "u is not below v in the Bruhat order");
  std::vector<CoverEdge> edges;
  if (end == IntervalEnd::bottom) {
    edges = upper_covers_le(u, v);
  } else {
    for (CoverEdge &e : lower_covers(v))
      if (bruhat_le(u, e.lower))
        edges.push_back(std::move(e));
  }
  std::vector<const Root *> labels;
  for (const CoverEdge &e : edges)
    labels.push_back(&e.label);
  return labels_span(u.root_system(), labels);
}

SpanBasis chain_span(std::span<const WeylElement> chain) {
  std::vector<Root> labels;
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    auto label = edge_label(chain[k], chain[k + 1]);
    if (!label)
      throw InputError("chain_span: consecutive elements are not joined by a reflection");
    labels.push_back(std::move(*label));
  }
  return SpanBasis(std::move(labels));
}

SpanBasis ad_via_chain(const WeylElement &u, const WeylElement &v) {
  const std::vector<WeylElement> chain = saturated_chain(u, v);
  return chain_span(chain);
}

int least_descent(const SimpleSubset &descents, const WeylElement &, const WeylElement &) {
  return descents.indices().front();
}

SpanBasis ad_recursive_span(const WeylElement &u, const WeylElement &v,
                            const DescentChoice &choose) {
  if (!bruhat_le(u, v))
    throw HypothesisError("u <= v", "AD(u,v)", "u is not below v in the Bruhat order");
  std::vector<Root> acc;
  WeylElement x = u;
  WeylElement y = v;
  while (!(x == y)) {
    const int i = choose(y.right_descent_set(), x, y);
    if (!y.has_right_descent(i))
      throw InputError("descent choice " + std::to_string(i) + " is not a right descent of v");
    if (x.has_right_descent(i)) {
      x = x.times_simple(i);
    } else {
      // wt(x, x s_i) = x(alpha_i), positive since x s_i > x.
      acc.push_back(x.apply(x.root_system().simple_root(i)));
    }
    y = y.times_simple(i);
  }
  return SpanBasis(std::move(acc));
}

int ad_recursive(const WeylElement &u, const WeylElement &v) {
  return static_cast<int>(ad_recursive_span(u, v).rank());
}

bool is_toric(const WeylElement &u, const WeylElement &v) {
  return ad_recursive(u, v) == v.length() - u.length();
}

ToricWitness max_toric_above_bottom(const WeylElement &u, const WeylElement &v) {
  const std::vector<WeylElement> elems = interval_elements(u, v);
  ToricWitness best{u, 0};
  for (const WeylElement &w : elems) {
    const int value = w.length() - u.length();
    if (value > best.value && is_toric(u, w))
      best = {w, value};
  }
  return best;
}

ToricWitness max_toric_below_top(const WeylElement &u, const WeylElement &v) {
  const std::vector<WeylElement> elems = interval_elements(u, v);
  ToricWitness best{v, 0};
  for (const WeylElement &w : elems) {
    const int value = v.length() - w.length();
    if (value > best.value && is_toric(w, v))
      best = {w, value};
  }
  return best;
}

} // namespace bruhat
