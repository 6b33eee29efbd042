#include <doctest.h>

#include "bruhat/algdim.hpp"
#include "bruhat/error.hpp"
#include "bruhat/order.hpp"
#include "../support/helpers.hpp"

#include <set>

using namespace bruhat;
using namespace testing_support;

namespace {

std::set<Root> labels(const std::vector<CoverEdge> &edges) {
  std::set<Root> out;
  for (const CoverEdge &e : edges)
    out.insert(e.label);
  return out;
}

bool has_subword(const RootSystemPtr &rs, const Word &word, const WeylElement &u) {
  const std::size_t n = word.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Word sub;
    for (std::size_t k = 0; k < n; ++k)
      if (mask >> k & 1u)
        sub.push_back(word[k]);
    if (from_word(rs, sub) == u)
      return true;
  }
  return false;
}

const std::vector<std::pair<Family, int>> kSmall{{Family::A, 3}, {Family::B, 3}, {Family::G, 2}};

} // namespace

TEST_CASE("bruhat_le examples") {
  const auto a3 = build_root_system(Family::A, 3);
  const WeylElement w = from_perm(a3, "3412");
  CHECK(bruhat_le(w, w));
  CHECK(bruhat_le(from_perm(a3, "1324"), w));
  const auto a2 = build_root_system(Family::A, 2);
  CHECK_FALSE(bruhat_le(from_word(a2, {1}), from_word(a2, {2})));
  CHECK_FALSE(bruhat_le(from_word(a2, {2}), from_word(a2, {1})));
  CHECK_THROWS_AS(bruhat_le(w, WeylElement::identity(a2)), InputError);
}

TEST_CASE("bruhat_le agrees with the tableau criterion and the subword property in S4") {
  const auto rs = build_root_system(Family::A, 3);
  const auto perms = oracle::all_perms(4);
  for (const oracle::Perm &p : perms)
    for (const oracle::Perm &q : perms) {
      const WeylElement u = from_perm(rs, p);
      const WeylElement v = from_perm(rs, q);
      const bool le = bruhat_le(u, v);
      CHECK(le == oracle::bruhat_le(p, q));
      CHECK(le == has_subword(rs, reduced_word(v), u));
    }
}

TEST_CASE("lifting property in S4 and B3") {
  for (const auto &[f, n] : {std::pair{Family::A, 3}, std::pair{Family::B, 3}}) {
    const auto rs = build_root_system(f, n);
    const auto g = enumerate_group(rs);
    for (const WeylElement &u : g)
      for (const WeylElement &w : g) {
        if (u == w || !bruhat_le(u, w))
          continue;
        for (int s : w.right_descent_set().minus(u.right_descent_set()).indices()) {
          CHECK(bruhat_le(u, w.times_simple(s)));
          CHECK(bruhat_le(u.times_simple(s), w));
        }
      }
  }
}

TEST_CASE("lower covers") {
  const auto a3 = build_root_system(Family::A, 3);
  CHECK(lower_covers(WeylElement::identity(a3)).empty());
  const std::vector<CoverEdge> c = lower_covers(from_perm(a3, "3412"));
  CHECK(c.size() == 4);
  CHECK(labels(c) == std::set<Root>{e_root(1, 3, 4), e_root(2, 3, 4), e_root(1, 4, 4),
                                    e_root(2, 4, 4)});
  const LabeledInterval iv = interval(WeylElement::identity(a3), from_perm(a3, "3142"));
  std::set<Root> top;
  for (const CoverEdge &e : iv.cover_edges())
    if (e.upper == iv.top())
      top.insert(e.label);
  CHECK(top == std::set<Root>{e_root(1, 3, 4), e_root(2, 3, 4), e_root(2, 4, 4)});
}

TEST_CASE("cover labels match the oracle in S4") {
  const auto rs = build_root_system(Family::A, 3);
  for (const oracle::Perm &p : oracle::all_perms(4)) {
    const WeylElement w = from_perm(rs, p);
    std::set<Root> expected;
    for (const auto &[i, j] : oracle::lower_cover_labels(p))
      expected.insert(e_root(i, j, 4));
    CHECK(labels(lower_covers(w)) == expected);
    for (const CoverEdge &e : lower_covers(w)) {
      CHECK(e.upper == w);
      CHECK(e.lower.length() == w.length() - 1);
      CHECK(reflect_left(*rs->index_of(e.label), e.lower) == e.upper);
      CHECK(edge_label(e.lower, e.upper) == e.label);
    }
    for (const CoverEdge &e : upper_covers(w)) {
      CHECK(e.lower == w);
      CHECK(e.upper.length() == w.length() + 1);
    }
  }
}

TEST_CASE("intervals: examples") {
  const auto a3 = build_root_system(Family::A, 3);
  const WeylElement w = from_perm(a3, "3412");
  const LabeledInterval point = interval(w, w);
  CHECK(point.size() == 1);
  CHECK(point.cover_edges().empty());
  CHECK(point.graph_edges().empty());
  CHECK(interval(from_perm(a3, "1324"), w).rank_sizes() == std::vector<std::size_t>{1, 4, 4, 1});
  CHECK(interval(from_perm(a3, "1234"), from_perm(a3, "3142")).rank_sizes() ==
        std::vector<std::size_t>{1, 3, 3, 1});
  CHECK_THROWS_AS(interval(w, from_perm(a3, "1324")), HypothesisError);
  CHECK_THROWS_AS(interval(from_perm(a3, "2134"), from_perm(a3, "1324")), HypothesisError);
}

TEST_CASE("intervals match the oracle in S4") {
  const auto rs = build_root_system(Family::A, 3);
  for (const oracle::Perm &p : oracle::all_perms(4))
    for (const oracle::Perm &q : oracle::all_perms(4)) {
      if (!oracle::bruhat_le(p, q))
        continue;
      const LabeledInterval iv = interval(from_perm(rs, p), from_perm(rs, q));
      std::unordered_set<WeylElement, WeylElementHash> expected;
      for (const oracle::Perm &x : oracle::interval(p, q))
        expected.insert(from_perm(rs, x));
      CHECK(iv.size() == expected.size());
      for (const WeylElement &x : iv.elements())
        CHECK(expected.count(x) == 1);
      std::size_t oracle_edges = oracle::graph_labels(p, q).size() / 2;
      CHECK(iv.graph_edges().size() == oracle_edges);
    }
}

TEST_CASE("interval edges are inside the interval") {
  for (const auto &[f, n] : kSmall) {
    const auto rs = build_root_system(f, n);
    const auto g = enumerate_group(rs);
    for (const auto &[u, v] : comparable_pairs(g)) {
      const LabeledInterval iv = interval(u, v);
      CHECK(iv.contains(u));
      CHECK(iv.contains(v));
      for (const CoverEdge &e : iv.graph_edges()) {
        CHECK(iv.contains(e.lower));
        CHECK(iv.contains(e.upper));
        CHECK(e.label.is_positive());
        CHECK(e.upper.length() > e.lower.length());
        CHECK(reflect_left(*rs->index_of(e.label), e.lower) == e.upper);
      }
      for (const CoverEdge &e : iv.cover_edges())
        CHECK(e.upper.length() == e.lower.length() + 1);
    }
  }
}

TEST_CASE("diamond property in S4, B3, G2") {
  for (const auto &[f, n] : kSmall) {
    const auto rs = build_root_system(f, n);
    const auto g = enumerate_group(rs);
    int count = 0;
    for (const auto &[u, v] : comparable_pairs(g))
      if (v.length() - u.length() == 2) {
        CHECK(interval(u, v).size() == 4);
        ++count;
      }
    CHECK(count > 0);
  }
}

TEST_CASE("products of two reflections determine a 2-dimensional span") {
  for (const auto &[f, n] : kSmall) {
    const auto rs = build_root_system(f, n);
    const auto &roots = rs->positive_roots();
    std::map<IntMatrix, std::vector<std::pair<std::size_t, std::size_t>>> by_product;
    for (std::size_t a = 0; a < roots.size(); ++a)
      for (std::size_t b = 0; b < roots.size(); ++b)
        if (a != b)
          by_product[rs->reflection_matrix(a) * rs->reflection_matrix(b)].emplace_back(a, b);
    for (const auto &[m, pairs] : by_product) {
      const SpanBasis first({roots[pairs[0].first], roots[pairs[0].second]});
      CHECK(first.rank() == 2);
      for (const auto &[a, b] : pairs)
        CHECK(SpanBasis({roots[a], roots[b]}).same_span(first));
    }
  }
}

TEST_CASE("long Bruhat-graph edges lie in the span of two shorter edge labels (S4)") {
  const auto rs = build_root_system(Family::A, 3);
  for (const auto &[u, v] : comparable_pairs(enumerate_group(rs))) {
    const LabeledInterval iv = interval(u, v);
    for (const CoverEdge &e : iv.graph_edges()) {
      const int len = e.upper.length() - e.lower.length();
      if (len < 2)
        continue;
      std::set<Root> shorter;
      for (const CoverEdge &o : iv.graph_edges())
        if (o.upper.length() - o.lower.length() < len)
          shorter.insert(o.label);
      const std::vector<Root> s(shorter.begin(), shorter.end());
      bool found = false;
      for (std::size_t a = 0; a < s.size() && !found; ++a)
        for (std::size_t b = a + 1; b < s.size() && !found; ++b)
          found = SpanBasis({s[a], s[b]}).contains(e.label);
      CHECK(found);
    }
  }
}

TEST_CASE("covers around a simple descent form diamonds (S4)") {
  const auto rs = build_root_system(Family::A, 3);
  for (const WeylElement &w : enumerate_group(rs))
    for (int i = 1; i <= 3; ++i)
      for (std::size_t k = 0; k < rs->num_positive_roots(); ++k) {
        const WeylElement ws = w.times_simple(i);
        const WeylElement aw = reflect_left(k, w);
        if (ws == aw)
          continue;
        const WeylElement aws = aw.times_simple(i);
        if (ws.length() == w.length() - 1 && aw.length() == w.length() - 1) {
          CHECK(aws.length() == w.length() - 2);
          CHECK(bruhat_le(aws, ws));
          CHECK(bruhat_le(aws, aw));
        }
        if (ws.length() == w.length() + 1 && aw.length() == w.length() + 1) {
          CHECK(aws.length() == w.length() + 2);
          CHECK(bruhat_le(ws, aws));
          CHECK(bruhat_le(aw, aws));
        }
      }
}

TEST_CASE("saturated chains") {
  const auto a2 = build_root_system(Family::A, 2);
  const WeylElement s1s2 = from_word(a2, {1, 2});
  CHECK(saturated_chain(s1s2, s1s2) == std::vector<WeylElement>{s1s2});
  CHECK(saturated_chain(WeylElement::identity(a2), s1s2).size() == 3);
  const auto a3 = build_root_system(Family::A, 3);
  const auto chain = saturated_chain(from_perm(a3, "1324"), from_perm(a3, "3412"));
  CHECK(chain.size() == 4);
  CHECK_THROWS_AS(saturated_chain(s1s2, WeylElement::identity(a2)), HypothesisError);

  for (const auto &[f, n] : kSmall) {
    const auto rs = build_root_system(f, n);
    for (const auto &[u, v] : comparable_pairs(enumerate_group(rs))) {
      const auto c = saturated_chain(u, v);
      REQUIRE(static_cast<int>(c.size()) == v.length() - u.length() + 1);
      CHECK(c.front() == u);
      CHECK(c.back() == v);
      for (std::size_t k = 1; k < c.size(); ++k) {
        CHECK(c[k].length() == c[k - 1].length() + 1);
        CHECK(edge_label(c[k - 1], c[k]).has_value());
        CHECK(bruhat_le(c[k], v));
      }
    }
  }
}
