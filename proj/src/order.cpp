#include "bruhat/order.hpp"

#include "bruhat/error.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace bruhat {

namespace {

void require_same_system(const WeylElement &u, const WeylElement &v) {
  if (u.root_system_ptr() != v.root_system_ptr())
    throw InputError("elements belong to different root systems");
}

[[noreturn]] void throw_not_below() {
  throw HypothesisError("u <= v", "[u,v] = {w : u <= w <= v}",
                        "empty interval: u is not below v in the Bruhat order");
}

std::vector<CoverEdge> covers(const WeylElement &w, int delta) {
  std::vector<CoverEdge> out;
  const RootSystem &rs = w.root_system();
  for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
    WeylElement x = reflect_left(k, w);
    if (x.length() != w.length() + delta)
      continue;
    if (delta < 0)
      out.push_back({std::move(x), w, rs.positive_roots()[k]});
    else
      out.push_back({w, std::move(x), rs.positive_roots()[k]});
  }
  return out;
}

} // namespace

bool bruhat_le(const WeylElement &u, const WeylElement &v) {
  require_same_system(u, v);
  WeylElement x = u;
  WeylElement y = v;
  for (;;) {
    if (x.length() > y.length())
      return false;
    if (x.length() == y.length())
      return x == y;
    if (x.is_identity())
      return true;
    // y is not the identity here since l(y) > l(x) >= 0.
    const int s = y.right_descent_set().indices().front();
    if (x.has_right_descent(s))
      x = x.times_simple(s);
    y = y.times_simple(s);
  }
}

std::vector<CoverEdge> lower_covers(const WeylElement &w) { return covers(w, -1); }

std::vector<CoverEdge> upper_covers(const WeylElement &w) { return covers(w, +1); }

std::vector<CoverEdge> upper_covers_le(const WeylElement &w, const WeylElement &v) {
  std::vector<CoverEdge> out;
  for (CoverEdge &e : covers(w, +1))
    if (bruhat_le(e.upper, v))
      out.push_back(std::move(e));
  return out;
}

std::vector<WeylElement> interval_elements(const WeylElement &u, const WeylElement &v) {
  require_same_system(u, v);
  if (!bruhat_le(u, v))
    throw_not_below();
  std::vector<WeylElement> out;
  std::unordered_set<WeylElement, WeylElementHash> seen{v};
  std::unordered_set<WeylElement, WeylElementHash> rejected;
  std::deque<WeylElement> queue{v};
  const int floor = u.length();
  while (!queue.empty()) {
    WeylElement w = queue.front();
    queue.pop_front();
    if (w.length() > floor) {
      for (CoverEdge &e : lower_covers(w)) {
        if (seen.count(e.lower) || rejected.count(e.lower))
          continue;
        if (!bruhat_le(u, e.lower)) {
          rejected.insert(std::move(e.lower));
          continue;
        }
        seen.insert(e.lower);
        queue.push_back(std::move(e.lower));
      }
    }
    out.push_back(std::move(w));
  }
  canonical_sort(out);
  return out;
}

std::optional<std::size_t> LabeledInterval::index_of(const WeylElement &w) const {
  auto it = index_.find(w);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

std::vector<std::size_t> LabeledInterval::rank_sizes() const {
  std::vector<std::size_t> sizes(v_.length() - u_.length() + 1, 0);
  for (const WeylElement &w : elements_)
    ++sizes[w.length() - u_.length()];
  return sizes;
}

LabeledInterval interval(const WeylElement &u, const WeylElement &v) {
  LabeledInterval iv(u, v);
  iv.elements_ = interval_elements(u, v);
  for (std::size_t k = 0; k < iv.elements_.size(); ++k)
    iv.index_.emplace(iv.elements_[k], k);

  const RootSystem &rs = u.root_system();
  for (const WeylElement &x : iv.elements_) {
    for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
      WeylElement y = reflect_left(k, x);
      if (y.length() <= x.length() || !iv.contains(y))
        continue;
      CoverEdge e{x, std::move(y), rs.positive_roots()[k]};
      if (e.upper.length() == x.length() + 1)
        iv.covers_.push_back(e);
      iv.graph_.push_back(std::move(e));
    }
  }
  return iv;
}

std::vector<WeylElement> saturated_chain(const WeylElement &u, const WeylElement &v) {
  require_same_system(u, v);
  if (!bruhat_le(u, v))
    throw_not_below();
  std::vector<WeylElement> chain{u};
  WeylElement w = u;
  const RootSystem &rs = u.root_system();
  while (w.length() < v.length()) {
    bool stepped = false;
    for (std::size_t k = 0; k < rs.num_positive_roots() && !stepped; ++k) {
      WeylElement x = reflect_left(k, w);
      if (x.length() == w.length() + 1 && bruhat_le(x, v)) {
        w = std::move(x);
        stepped = true;
      }
    }
    chain.push_back(w);
  }
  return chain;
}

std::optional<Root> edge_label(const WeylElement &x, const WeylElement &y) {
  require_same_system(x, y);
  const RootSystem &rs = x.root_system();
  for (std::size_t k = 0; k < rs.num_positive_roots(); ++k)
    if (reflect_left(k, x) == y)
      return rs.positive_roots()[k];
  return std::nullopt;
}

} // namespace bruhat
