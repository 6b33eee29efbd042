#include "bruhat/deodhar.hpp"

#include "bruhat/error.hpp"

#include <cstdlib>
#include <sstream>

namespace bruhat {

namespace {

void require_reduced(const RootSystemPtr &rs, const Word &v_word) {
  if (!is_reduced(rs, v_word)) {
    std::ostringstream os;
    os << "word ";
    for (std::size_t k = 0; k < v_word.size(); ++k)
      os << (k ? "." : "") << v_word[k];
    os << " is not reduced";
    throw InputError(os.str());
  }
}

void dfs(const RootSystemPtr &rs, const Word &word, const WeylElement &target,
         std::vector<Choice> &mask, const WeylElement &prefix,
         std::vector<Subexpression> &out) {
  const std::size_t k = mask.size();
  const int remaining = static_cast<int>(word.size() - k);
  if (std::abs(prefix.length() - target.length()) > remaining)
    return;
  if (remaining == 0) {
    if (prefix == target)
      out.push_back(make_subexpression(rs, word, mask));
    return;
  }
  const int i = word[k];
  mask.push_back(Choice::take);
  dfs(rs, word, target, mask, prefix.times_simple(i), out);
  mask.pop_back();
  if (!prefix.has_right_descent(i)) {
    mask.push_back(Choice::skip);
    dfs(rs, word, target, mask, prefix, out);
    mask.pop_back();
  }
}

} // namespace

bool Subexpression::is_distinguished() const {
  for (std::size_t k = 0; k < choices.size(); ++k)
    if (choices[k] == Choice::skip && prefixes[k].has_right_descent(base_word[k]))
      return false;
  return true;
}

std::string Subexpression::mask_string() const {
  std::string s;
  for (Choice c : choices)
    s += c == Choice::take ? 'T' : 'S';
  return s;
}

Subexpression make_subexpression(const RootSystemPtr &rs, const Word &base_word,
                                 const std::vector<Choice> &choices) {
  if (choices.size() != base_word.size())
    throw InputError("mask length does not match the word");
  Subexpression se;
  se.base_word = base_word;
  se.choices = choices;
  se.prefixes.reserve(base_word.size() + 1);
  se.prefixes.push_back(WeylElement::identity(rs));
  for (std::size_t k = 0; k < base_word.size(); ++k) {
    const int pos = static_cast<int>(k) + 1;
    const int i = base_word[k];
    const WeylElement &prev = se.prefixes.back();
    const Root image = prev.apply(rs->simple_root(i));
    if (choices[k] == Choice::skip) {
      se.j_circ.push_back(pos);
      se.betas.emplace(pos, image);
      se.prefixes.push_back(prev);
      continue;
    }
    WeylElement next = prev.times_simple(i);
    if (next.length() > prev.length()) {
      se.j_plus.push_back(pos);
    } else {
      se.j_minus.push_back(pos);
      se.betas.emplace(pos, -image);
    }
    se.prefixes.push_back(std::move(next));
  }
  return se;
}

std::vector<Subexpression> enumerate_distinguished(const RootSystemPtr &rs, const Word &v_word,
                                                   const WeylElement &u) {
  require_reduced(rs, v_word);
  if (u.root_system_ptr() != rs)
    throw InputError("u belongs to a different root system");
  std::vector<Subexpression> out;
  std::vector<Choice> mask;
  mask.reserve(v_word.size());
  dfs(rs, v_word, u, mask, WeylElement::identity(rs), out);
  return out;
}

Subexpression positive_distinguished(const RootSystemPtr &rs, const Word &v_word,
                                     const WeylElement &u) {
  require_reduced(rs, v_word);
  std::vector<Choice> mask(v_word.size(), Choice::skip);
  WeylElement t = u;
  for (std::size_t k = v_word.size(); k-- > 0;) {
    const int i = v_word[k];
    if (t.has_right_descent(i)) {
      mask[k] = Choice::take;
      t = t.times_simple(i);
    }
  }
  if (!t.is_identity())
    throw HypothesisError("u <= v", "u_+ exists iff u <= v",
                          "no positive distinguished subexpression: u is not below v");
  return make_subexpression(rs, v_word, mask);
}

SpanBasis td_span(const Subexpression &se) {
  std::vector<Root> g;
  g.reserve(se.betas.size());
  for (const auto &[pos, beta] : se.betas)
    g.push_back(beta);
  return SpanBasis(std::move(g));
}

DeodharComponentShape component_shape(const Subexpression &se) {
  return {static_cast<int>(se.j_circ.size()), static_cast<int>(se.j_minus.size())};
}

bool QPolynomial::is_zero() const {
  for (long long c : coefficients)
    if (c != 0)
      return false;
  return true;
}

void QPolynomial::normalize() {
  while (!coefficients.empty() && coefficients.back() == 0)
    coefficients.pop_back();
}

std::string QPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coefficients.size(); k-- > 0;) {
    const long long c = coefficients[k];
    if (c == 0)
      continue;
    const long long mag = c < 0 ? -c : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    if (mag != 1 || k == 0)
      os << mag;
    if (k >= 1)
      os << "q";
    if (k >= 2)
      os << "^" << k;
    first = false;
  }
  if (first)
    os << "0";
  return os.str();
}

QPolynomial shape_polynomial(const DeodharComponentShape &shape) {
  // (q - 1)^a via repeated multiplication, then shift by b.
  std::vector<long long> p{1};
  for (int k = 0; k < shape.circ_count; ++k) {
    std::vector<long long> next(p.size() + 1, 0);
    for (std::size_t j = 0; j < p.size(); ++j) {
      next[j + 1] += p[j];
      next[j] -= p[j];
    }
    p = std::move(next);
  }
  QPolynomial out;
  out.coefficients.assign(shape.minus_count, 0);
  out.coefficients.insert(out.coefficients.end(), p.begin(), p.end());
  out.normalize();
  return out;
}

DeodharPolynomial deodhar_polynomial(const RootSystemPtr &rs, const Word &v_word,
                                     const WeylElement &u) {
  DeodharPolynomial result;
  const std::vector<Subexpression> all = enumerate_distinguished(rs, v_word, u);
  if (all.empty()) {
    result.warning = "u is not below v; the Richardson cell is empty";
    return result;
  }
  std::vector<long long> &acc = result.polynomial.coefficients;
  for (const Subexpression &se : all) {
    const QPolynomial p = shape_polynomial(component_shape(se));
    if (acc.size() < p.coefficients.size())
      acc.resize(p.coefficients.size(), 0);
    for (std::size_t k = 0; k < p.coefficients.size(); ++k)
      acc[k] += p.coefficients[k];
  }
  result.polynomial.normalize();
  return result;
}

} // namespace bruhat
