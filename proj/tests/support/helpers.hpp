// Conversions between the permutation oracle and library types.
#ifndef BRUHAT_TESTS_HELPERS_HPP
#define BRUHAT_TESTS_HELPERS_HPP

#include "bruhat/order.hpp"
#include "bruhat/weyl.hpp"
#include "../oracle/perm_oracle.hpp"

#include <map>
#include <set>
#include <unordered_set>
#include <vector>

namespace testing_support {

using namespace bruhat;

inline WeylElement from_perm(const RootSystemPtr &rs, const oracle::Perm &p) {
  return from_word(rs, oracle::reduced_word(p));
}

inline WeylElement from_perm(const RootSystemPtr &rs, const std::string &oneline) {
  return from_perm(rs, oracle::parse(oneline));
}

inline Root root(const oracle::Vec &v) { return Root(v); }

inline Root e_root(int i, int j, int n) { return Root(oracle::root(i, j, n)); }

inline std::set<int> to_set(const SimpleSubset &s) {
  const std::vector<int> v = s.indices();
  return {v.begin(), v.end()};
}

inline SimpleSubset to_subset(const std::set<int> &s) {
  const std::vector<int> v(s.begin(), s.end());
  return SimpleSubset::from_indices(v);
}

inline std::vector<SimpleSubset> all_subsets(int rank) {
  std::vector<SimpleSubset> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << rank); ++bits)
    out.push_back(SimpleSubset::from_bits(bits));
  return out;
}

// Every comparable pair (u, v) of the group, u <= v.
inline std::vector<std::pair<WeylElement, WeylElement>> comparable_pairs(
    const std::vector<WeylElement> &group) {
  std::vector<std::pair<WeylElement, WeylElement>> out;
  for (const WeylElement &u : group)
    for (const WeylElement &v : group)
      if (bruhat_le(u, v))
        out.emplace_back(u, v);
  return out;
}

} // namespace testing_support

#endif
