#include <doctest.h>

#include "bruhat/complexity.hpp"
#include "bruhat/error.hpp"
#include "../support/helpers.hpp"

using namespace bruhat;
using namespace testing_support;

TEST_CASE("torus complexity of Richardson varieties: examples") {
  const auto a3 = build_root_system(Family::A, 3);
  const WeylElement w = from_perm(a3, "3412");
  CHECK(torus_complexity_richardson(w, w).value == 0);
  const ComplexityReport r = torus_complexity_richardson(from_perm(a3, "1324"), w);
  CHECK(r.kind == ComplexityKind::torus_richardson);
  CHECK(r.value == 0);
  CHECK(*r.witness.length_v == 4);
  CHECK(*r.witness.length_u == 1);
  CHECK(*r.witness.ad == 3);
  CHECK(torus_complexity_richardson(from_perm(a3, "1324"), from_perm(a3, "4231")).value == 1);
  try {
    torus_complexity_richardson(w, from_perm(a3, "1324"));
    FAIL("expected a hypothesis error");
  } catch (const HypothesisError &e) {
    CHECK(e.hypothesis() == "u <= v");
  }
}

TEST_CASE("torus complexity of Schubert varieties: examples") {
  const auto a2 = build_root_system(Family::A, 2);
  CHECK(torus_complexity_schubert(WeylElement::identity(a2)).value == 0);
  CHECK(torus_complexity_schubert(from_word(a2, {1, 2, 1})).value == 1);
  const auto a4 = build_root_system(Family::A, 4);
  const ComplexityReport r = torus_complexity_schubert(from_perm(a4, "51234"));
  CHECK(r.value == 0);
  CHECK(*r.witness.support_set == SimpleSubset{1, 2, 3, 4});
}

TEST_CASE("Levi action: examples") {
  const auto a2 = build_root_system(Family::A, 2);
  const WeylElement w = from_word(a2, {1, 2});
  CHECK(levi_acts({}, w).acts);
  CHECK(levi_acts({1}, w).acts);
  const LeviAction no = levi_acts({2}, w);
  CHECK_FALSE(no.acts);
  CHECK_FALSE(no.factor_is_longest);
  CHECK(no.missing == SimpleSubset{2});
}

TEST_CASE("Levi-Borel complexity: examples") {
  const auto a3 = build_root_system(Family::A, 3);
  const WeylElement w = from_word(a3, {2, 1, 3, 2});
  CHECK(w == from_perm(a3, "3412"));
  CHECK(levi_borel_complexity({}, w).value == torus_complexity_schubert(w).value);
  const ComplexityReport r = levi_borel_complexity({2}, w);
  CHECK(*r.witness.coset_rep == from_word(a3, {1, 3, 2}));
  CHECK(r.value == 0);
  const WeylElement w0 = longest_element(a3, {1, 2});
  CHECK(levi_borel_complexity({1, 2}, w0).value == 0);
  CHECK(levi_borel_complexity({1, 2}, w0).witness.coset_rep->is_identity());

  const auto a2 = build_root_system(Family::A, 2);
  try {
    levi_borel_complexity({2}, from_word(a2, {1, 2}));
    FAIL("expected a hypothesis error");
  } catch (const HypothesisError &e) {
    CHECK(e.hypothesis() == "I subset of D_L(w)");
    CHECK(std::string(e.what()).find("I not contained in left descent set") != std::string::npos);
    CHECK(std::string(e.what()).find("{2}") != std::string::npos);
  }
}

TEST_CASE("partial flag varieties: examples") {
  const auto a2 = build_root_system(Family::A, 2);
  const WeylElement s1s2 = from_word(a2, {1, 2});
  CHECK(partial_stabilizer_descents(s1s2, {}) == s1s2.left_descent_set());
  CHECK(partial_stabilizer_descents(WeylElement::identity(a2), {1}) == SimpleSubset{1});
  CHECK(partial_stabilizer_descents(WeylElement::identity(a2), {1, 2}) == SimpleSubset{1, 2});
  CHECK(partial_stabilizer_descents(s1s2, {1}) == SimpleSubset{1, 2});
  CHECK_THROWS_AS(partial_stabilizer_descents(s1s2, {2}), HypothesisError);

  CHECK(is_toric_partial(WeylElement::identity(a2), {1}));
  const ComplexityReport w0 = partial_flag_torus_complexity(from_word(a2, {1, 2, 1}), {});
  CHECK(w0.value == 1);
  CHECK_FALSE(is_toric_partial(from_word(a2, {1, 2, 1}), {}));
  CHECK_THROWS_AS(partial_flag_torus_complexity(from_word(a2, {1, 2, 1}), {1}), HypothesisError);

  const auto a4 = build_root_system(Family::A, 4);
  const WeylElement w = from_perm(a4, "51234");
  for (const SimpleSubset &J : all_subsets(4))
    if ((w.right_descent_set() & J).empty())
      CHECK(is_toric_partial(w, J));
    else
      CHECK_THROWS_AS(is_toric_partial(w, J), HypothesisError);

  const PartialLeviResult ok = partial_flag_levi_complexity(s1s2, {1}, {1});
  REQUIRE(ok.status == PartialLeviStatus::ok);
  CHECK(ok.report->value == 0);
  CHECK(ok.report->value == levi_borel_complexity({1}, s1s2).value);
  CHECK(ok.report->kind == ComplexityKind::levi_partial);

  // I inside D_L(w w_0(J)) = {1,2} but not inside D_L(s1 s2) = {1}.
  const PartialLeviResult partial_only = partial_flag_levi_complexity(s1s2, {1}, {2});
  CHECK(partial_only.status == PartialLeviStatus::acts_on_partial_only);
  CHECK_FALSE(partial_only.report.has_value());
  CHECK(partial_only.offending == SimpleSubset{2});

  CHECK(partial_flag_levi_complexity(s1s2, {2}, {1}).status ==
        PartialLeviStatus::not_minimal_coset_rep);
  const WeylElement s1 = from_word(a2, {1});
  CHECK(partial_flag_levi_complexity(s1, {}, {2}).status == PartialLeviStatus::not_stabilized);
}

TEST_CASE("partial Levi complexity reduces to the full-flag and torus cases") {
  const auto rs = build_root_system(Family::A, 3);
  for (const WeylElement &w : enumerate_group(rs))
    for (const SimpleSubset &J : all_subsets(3)) {
      if (!(w.right_descent_set() & J).empty())
        continue;
      const PartialLeviResult empty_i = partial_flag_levi_complexity(w, J, {});
      REQUIRE(empty_i.status == PartialLeviStatus::ok);
      CHECK(empty_i.report->value == partial_flag_torus_complexity(w, J).value);
      for (const SimpleSubset &I : all_subsets(3)) {
        if (!J.empty() || !I.is_subset_of(w.left_descent_set()))
          continue;
        const PartialLeviResult full = partial_flag_levi_complexity(w, J, I);
        REQUIRE(full.status == PartialLeviStatus::ok);
        CHECK(full.report->value == levi_borel_complexity(I, w).value);
      }
    }
}

TEST_CASE("Richardson complexity consistency (S4, B3)") {
  for (const auto &[f, n] : {std::pair{Family::A, 3}, std::pair{Family::B, 3}}) {
    const auto rs = build_root_system(f, n);
    for (const auto &[u, v] : comparable_pairs(enumerate_group(rs))) {
      const ComplexityReport r = torus_complexity_richardson(u, v);
      CHECK(r.value >= 0);
      CHECK(r.value + *r.witness.ad == v.length() - u.length());
      CHECK(value_from_witness(r) == r.value);
      const WeylElement x = *r.witness.toric_witness;
      CHECK(bruhat_le(u, x));
      CHECK(bruhat_le(x, v));
      CHECK(is_toric(x, v));
      CHECK(v.length() - x.length() == *r.witness.ad);
    }
  }
}

TEST_CASE("Schubert complexity equals Richardson complexity over the identity") {
  for (const auto &[f, n] :
       {std::pair{Family::A, 4}, std::pair{Family::B, 3}, std::pair{Family::G, 2}}) {
    const auto rs = build_root_system(f, n);
    const WeylElement id = WeylElement::identity(rs);
    for (const WeylElement &w : enumerate_group(rs)) {
      const ComplexityReport s = torus_complexity_schubert(w);
      CHECK(s.value == torus_complexity_richardson(id, w).value);
      CHECK(value_from_witness(s) == s.value);
    }
  }
}

TEST_CASE("Levi-Borel complexity: reductions, monotonicity and action criteria") {
  for (const auto &[f, n] : {std::pair{Family::A, 3}, std::pair{Family::B, 3}}) {
    const auto rs = build_root_system(f, n);
    for (const WeylElement &w : enumerate_group(rs)) {
      CHECK(levi_borel_complexity({}, w).value == torus_complexity_schubert(w).value);
      for (const SimpleSubset &I : all_subsets(n)) {
        const LeviAction a = levi_acts(I, w);
        CHECK(a.descent_containment == a.factor_is_longest);
        CHECK(a.acts == I.is_subset_of(w.left_descent_set()));
        if (!a.acts) {
          CHECK_THROWS_AS(levi_borel_complexity(I, w), HypothesisError);
          continue;
        }
        const ComplexityReport r = levi_borel_complexity(I, w);
        CHECK(value_from_witness(r) == r.value);
        CHECK(r.value >= 0);
        for (const SimpleSubset &I2 : all_subsets(n))
          if (I.is_subset_of(I2) && I2.is_subset_of(w.left_descent_set()))
            CHECK(levi_borel_complexity(I2, w).value <= r.value);
      }
    }
  }
}

TEST_CASE("coset representatives are monotone under Bruhat order (S4)") {
  const auto rs = build_root_system(Family::A, 3);
  const auto g = enumerate_group(rs);
  for (const SimpleSubset &I : all_subsets(3))
    for (const auto &[u, w] : comparable_pairs(g)) {
      const WeylElement du = left_parabolic_decomposition(u, I).coset_rep;
      const WeylElement dw = left_parabolic_decomposition(w, I).coset_rep;
      CHECK(bruhat_le(du, dw));
      CHECK(du.length() <= dw.length());
      CHECK(support(du).size() <= support(dw).size());
    }
}

TEST_CASE("complexity kinds parse and print") {
  for (ComplexityKind k :
       {ComplexityKind::torus_richardson, ComplexityKind::torus_schubert,
        ComplexityKind::levi_borel_schubert, ComplexityKind::torus_partial,
        ComplexityKind::levi_partial})
    CHECK(parse_complexity_kind(to_string(k)) == k);
  CHECK_THROWS_AS(parse_complexity_kind("nope"), InputError);
}
