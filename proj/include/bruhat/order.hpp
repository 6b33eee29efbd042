#ifndef BRUHAT_ORDER_HPP
#define BRUHAT_ORDER_HPP

#include "bruhat/weyl.hpp"

#include <optional>
#include <unordered_map>
#include <vector>

namespace bruhat {

// Edge of the Bruhat graph: upper = s_label * lower, l(upper) > l(lower).
// A cover edge additionally has l(upper) = l(lower) + 1.
struct CoverEdge {
  WeylElement lower;
  WeylElement upper;
  Root label;
};

bool bruhat_le(const WeylElement &u, const WeylElement &v);

std::vector<CoverEdge> lower_covers(const WeylElement &w);
std::vector<CoverEdge> upper_covers(const WeylElement &w);
// Upper covers of w that stay below v.
std::vector<CoverEdge> upper_covers_le(const WeylElement &w, const WeylElement &v);

// Elements of [u, v] in canonical order, without edges. Throws
// HypothesisError if u is not below v.
std::vector<WeylElement> interval_elements(const WeylElement &u, const WeylElement &v);

// The Bruhat interval [u, v] together with the Bruhat graph Gamma(u, v).
class LabeledInterval {
public:
  const WeylElement &bottom() const { return u_; }
  const WeylElement &top() const { return v_; }

  // Canonical order (length, then reduced word).
  const std::vector<WeylElement> &elements() const { return elements_; }
  const std::vector<CoverEdge> &cover_edges() const { return covers_; }
  const std::vector<CoverEdge> &graph_edges() const { return graph_; }

  std::size_t size() const { return elements_.size(); }
  bool contains(const WeylElement &w) const { return index_.count(w) != 0; }
  std::optional<std::size_t> index_of(const WeylElement &w) const;

  // Number of elements at each length l(u), ..., l(v).
  std::vector<std::size_t> rank_sizes() const;

  friend LabeledInterval interval(const WeylElement &u, const WeylElement &v);

private:
  LabeledInterval(WeylElement u, WeylElement v) : u_(std::move(u)), v_(std::move(v)) {}

  WeylElement u_;
  WeylElement v_;
  std::vector<WeylElement> elements_;
  std::unordered_map<WeylElement, std::size_t, WeylElementHash> index_;
  std::vector<CoverEdge> covers_;
  std::vector<CoverEdge> graph_;
};

LabeledInterval interval(const WeylElement &u, const WeylElement &v);

// u = w0 < w1 < ... < wl = v, each step taking the upper cover with the
// least label in root order. Throws HypothesisError if u is not below v.
std::vector<WeylElement> saturated_chain(const WeylElement &u, const WeylElement &v);

// The label alpha with y = s_alpha x, if x and y differ by a reflection.
std::optional<Root> edge_label(const WeylElement &x, const WeylElement &y);

} // namespace bruhat

#endif
