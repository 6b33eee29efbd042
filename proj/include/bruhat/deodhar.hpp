#ifndef BRUHAT_DEODHAR_HPP
#define BRUHAT_DEODHAR_HPP

#include "bruhat/algdim.hpp"

#include <map>
#include <string>
#include <vector>

namespace bruhat {

enum class Choice { take, skip };

// A subexpression of a reduced word for v. Positions are 1-based, matching
// the letters of base_word; prefixes[k] is the product of the first k chosen
// letters, so prefixes[0] is the identity.
struct Subexpression {
  Word base_word;
  std::vector<Choice> choices;
  std::vector<WeylElement> prefixes;
  std::vector<int> j_plus;  // prefix grows
  std::vector<int> j_circ;  // prefix unchanged
  std::vector<int> j_minus; // prefix shrinks
  // beta_k = u_(k-1)(alpha_{i_k}) on j_circ, -u_(k-1)(alpha_{i_k}) on j_minus.
  std::map<int, Root> betas;

  const WeylElement &value() const { return prefixes.back(); }
  bool is_positive() const { return j_minus.empty(); }
  bool is_distinguished() const;
  std::string mask_string() const; // e.g. "TST"
};

// Evaluates a mask over base_word and classifies every position.
Subexpression make_subexpression(const RootSystemPtr &rs, const Word &base_word,
                                 const std::vector<Choice> &choices);

struct DeodharComponentShape {
  int circ_count = 0;  // |J circ|: torus factors
  int minus_count = 0; // |J minus|: affine factors
  friend bool operator==(const DeodharComponentShape &, const DeodharComponentShape &) = default;
};

// Every distinguished mask over v_word evaluating to u, in lexicographic mask
// order with take < skip. Throws InputError if v_word is not reduced.
std::vector<Subexpression> enumerate_distinguished(const RootSystemPtr &rs, const Word &v_word,
                                                   const WeylElement &u);

// The unique distinguished subexpression for u with empty J minus, by
// right-to-left greedy selection. Throws HypothesisError if u is not below v.
Subexpression positive_distinguished(const RootSystemPtr &rs, const Word &v_word,
                                     const WeylElement &u);

SpanBasis td_span(const Subexpression &se);

DeodharComponentShape component_shape(const Subexpression &se);

// Integer polynomial in q, coefficients[k] multiplies q^k.
struct QPolynomial {
  std::vector<long long> coefficients;

  bool is_zero() const;
  void normalize();
  std::string to_string() const;
  friend bool operator==(const QPolynomial &, const QPolynomial &) = default;
};

// (q - 1)^a q^b.
QPolynomial shape_polynomial(const DeodharComponentShape &shape);

struct DeodharPolynomial {
  QPolynomial polynomial;
  std::string warning; // nonempty if u is not below v
};

// Sum over distinguished subexpressions for u of (q-1)^{|J circ|} q^{|J minus|}.
DeodharPolynomial deodhar_polynomial(const RootSystemPtr &rs, const Word &v_word,
                                     const WeylElement &u);

} // namespace bruhat

#endif
