#ifndef BRUHAT_ALGDIM_HPP
#define BRUHAT_ALGDIM_HPP

#include "bruhat/order.hpp"

#include <functional>
#include <span>
#include <vector>

namespace bruhat {

// Rank of the rational span of the given vectors (fraction-free elimination).
std::size_t span_rank(std::span<const Root> roots);

// A list of generators together with the rank of their span.
class SpanBasis {
public:
  SpanBasis() = default;
  explicit SpanBasis(std::vector<Root> generators);

  const std::vector<Root> &generators() const { return generators_; }
  std::size_t rank() const { return rank_; }

  bool contains(const Root &r) const;
  bool contains(const SpanBasis &other) const;
  SpanBasis with(const Root &r) const;
  SpanBasis with(const SpanBasis &other) const;

  // Equality of spans, not of generator lists.
  bool same_span(const SpanBasis &other) const;

private:
  std::vector<Root> generators_;
  std::size_t rank_ = 0;
};

// AD(u, v): span of every Bruhat-graph label inside [u, v].
SpanBasis ad_direct(const LabeledInterval &iv);
SpanBasis ad_direct(const WeylElement &u, const WeylElement &v);

enum class IntervalEnd { bottom, top };

// Span of the labels of the covers of [u, v] incident to one endpoint.
SpanBasis ad_via_covers_at(const WeylElement &u, const WeylElement &v, IntervalEnd end);

// Span of the labels along saturated_chain(u, v), or along a given chain.
SpanBasis ad_via_chain(const WeylElement &u, const WeylElement &v);
SpanBasis chain_span(std::span<const WeylElement> chain);

// Picks the right descent of v used by one recursion step.
using DescentChoice =
    std::function<int(const SimpleSubset &descents, const WeylElement &u, const WeylElement &v)>;

int least_descent(const SimpleSubset &descents, const WeylElement &u, const WeylElement &v);

// Descent recursion on v: for a right descent s_i of v,
//   AD(u, v) = AD(u s_i, v s_i)                  if u s_i < u
//   AD(u, v) = AD(u, v s_i) + R wt(u, u s_i)     otherwise.
SpanBasis ad_recursive_span(const WeylElement &u, const WeylElement &v,
                            const DescentChoice &choose = least_descent);
int ad_recursive(const WeylElement &u, const WeylElement &v);

// ad(u, v) = l(v) - l(u).
bool is_toric(const WeylElement &u, const WeylElement &v);

struct ToricWitness {
  WeylElement w;
  int value;
};

// max over w in [u, v] with [u, w] toric of l(w) - l(u); first maximizer in
// canonical order.
ToricWitness max_toric_above_bottom(const WeylElement &u, const WeylElement &v);
// max over w in [u, v] with [w, v] toric of l(v) - l(w).
ToricWitness max_toric_below_top(const WeylElement &u, const WeylElement &v);

} // namespace bruhat

#endif
