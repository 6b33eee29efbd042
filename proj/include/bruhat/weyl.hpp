#ifndef BRUHAT_WEYL_HPP
#define BRUHAT_WEYL_HPP

#include "bruhat/root_system.hpp"

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <set>
#include <span>
#include <utility>
#include <vector>

namespace bruhat {

// Reduced or unreduced sequence of 1-based simple indices.
using Word = std::vector<int>;

// A set of 1-based simple indices (I, J, descent sets, supports).
class SimpleSubset {
public:
  SimpleSubset() = default;
  SimpleSubset(std::initializer_list<int> indices);
  static SimpleSubset from_indices(std::span<const int> indices);
  static SimpleSubset all(int rank);
  static SimpleSubset from_bits(std::uint64_t bits) {
    SimpleSubset s;
    s.bits_ = bits;
    return s;
  }

  bool contains(int i) const { return i >= 1 && i <= 64 && (bits_ >> (i - 1)) & 1u; }
  void insert(int i);
  void erase(int i);
  bool empty() const { return bits_ == 0; }
  int size() const;
  std::vector<int> indices() const;
  std::uint64_t bits() const { return bits_; }

  bool is_subset_of(const SimpleSubset &o) const { return (bits_ & ~o.bits_) == 0; }
  SimpleSubset operator&(const SimpleSubset &o) const { return from_bits(bits_ & o.bits_); }
  SimpleSubset operator|(const SimpleSubset &o) const { return from_bits(bits_ | o.bits_); }
  SimpleSubset minus(const SimpleSubset &o) const { return from_bits(bits_ & ~o.bits_); }

  friend bool operator==(const SimpleSubset &, const SimpleSubset &) = default;
  friend auto operator<=>(const SimpleSubset &, const SimpleSubset &) = default;

private:
  std::uint64_t bits_ = 0;
};

std::string to_string(const SimpleSubset &s); // "{1,3}"

// Element of the Weyl group, stored as its action on the root lattice:
// column j of action() is w(alpha_j) in simple-root coordinates.
// Length and both descent sets are computed once at construction.
class WeylElement {
public:
  WeylElement(RootSystemPtr rs, IntMatrix action);

  static WeylElement identity(RootSystemPtr rs);

  const RootSystem &root_system() const { return *rs_; }
  const RootSystemPtr &root_system_ptr() const { return rs_; }
  const IntMatrix &action() const { return action_; }
  int rank() const { return rs_->rank(); }
  int length() const { return length_; }
  bool is_identity() const { return length_ == 0; }

  Root apply(const Root &r) const;

  bool has_right_descent(int i) const { return right_descents_.contains(i); }
  bool has_left_descent(int i) const { return left_descents_.contains(i); }
  const SimpleSubset &right_descent_set() const { return right_descents_; }
  const SimpleSubset &left_descent_set() const { return left_descents_; }

  WeylElement times_simple(int i) const; // w s_i
  WeylElement simple_times(int i) const; // s_i w

  friend bool operator==(const WeylElement &a, const WeylElement &b) {
    return a.rs_ == b.rs_ && a.action_ == b.action_;
  }

private:
  RootSystemPtr rs_;
  IntMatrix action_;
  int length_ = 0;
  SimpleSubset right_descents_;
  SimpleSubset left_descents_;
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement &w) const;
};

// Total order: length first, then the action matrix. Used for containers;
// see canonical_sort for the presentation order.
struct WeylElementLess {
  bool operator()(const WeylElement &a, const WeylElement &b) const;
};

// s_{i_1} s_{i_2} ... s_{i_k}, with (s_1 s_2)(x) = s_1(s_2(x)).
WeylElement from_word(const RootSystemPtr &rs, std::span<const int> word);
WeylElement from_word(const RootSystemPtr &rs, std::initializer_list<int> word);

WeylElement multiply(const WeylElement &u, const WeylElement &v);
WeylElement inverse(const WeylElement &w);
Root apply_to_root(const WeylElement &w, const Root &r);

// s_alpha for a root alpha (either sign).
WeylElement reflection(const RootSystemPtr &rs, const Root &alpha);
// s_alpha w, via the cached reflection matrix of the positive root at index.
WeylElement reflect_left(std::size_t positive_root_index, const WeylElement &w);

SimpleSubset right_descents(const WeylElement &w);
SimpleSubset left_descents(const WeylElement &w);

// {alpha > 0 : w^{-1}(alpha) < 0} and {alpha > 0 : w(alpha) < 0}, in root order.
std::vector<Root> left_inversions(const WeylElement &w);
std::vector<Root> right_inversions(const WeylElement &w);

SimpleSubset support(const WeylElement &w);

// Lexicographically least reduced word (greedy smallest left descent).
Word reduced_word(const WeylElement &w);
// Every reduced word, sorted lexicographically.
std::vector<Word> all_reduced_words(const WeylElement &w);

bool is_reduced(const RootSystemPtr &rs, std::span<const int> word);

struct ParabolicFactors {
  WeylElement parabolic; // in W_I
  WeylElement coset_rep; // minimal coset representative
};

// w = a d with a in W_I, d in ^I W (no left descent in I), lengths adding.
ParabolicFactors left_parabolic_decomposition(const WeylElement &w, const SimpleSubset &I);
// w = w^I w_I with w_I in W_I, w^I in W^I (no right descent in I).
ParabolicFactors right_parabolic_decomposition(const WeylElement &w, const SimpleSubset &I);

// w_0(I), the longest element of W_I.
WeylElement longest_element(const RootSystemPtr &rs, const SimpleSubset &I);

// Default enumeration cap; BRUHAT_GROUP_CAP overrides it.
constexpr std::uint64_t kDefaultGroupCap = 51840;
std::uint64_t group_cap_from_env();

// |W| from the classical product formula (saturating at UINT64_MAX). Only
// meaningful for the standard Cartan matrices.
std::uint64_t group_order(const CartanDatum &datum);

// All elements of W in canonical order. Throws CapExceeded if |W| > cap.
std::vector<WeylElement> enumerate_group(const RootSystemPtr &rs, std::uint64_t cap);
std::vector<WeylElement> enumerate_group(const RootSystemPtr &rs);

// Sort by length, then lexicographically by reduced_word.
void canonical_sort(std::vector<WeylElement> &elements);

} // namespace bruhat

#endif
