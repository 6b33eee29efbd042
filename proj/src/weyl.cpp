#include "bruhat/weyl.hpp"

#include "bruhat/error.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <deque>
#include <limits>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace bruhat {

SimpleSubset::SimpleSubset(std::initializer_list<int> indices) {
  for (int i : indices)
    insert(i);
}

SimpleSubset SimpleSubset::from_indices(std::span<const int> indices) {
  SimpleSubset s;
  for (int i : indices)
    s.insert(i);
  return s;
}

SimpleSubset SimpleSubset::all(int rank) {
  SimpleSubset s;
  for (int i = 1; i <= rank; ++i)
    s.insert(i);
  return s;
}

void SimpleSubset::insert(int i) {
  if (i < 1 || i > 64)
    throw InputError("simple index " + std::to_string(i) + " out of range");
  bits_ |= std::uint64_t{1} << (i - 1);
}

void SimpleSubset::erase(int i) {
  if (i >= 1 && i <= 64)
    bits_ &= ~(std::uint64_t{1} << (i - 1));
}

int SimpleSubset::size() const { return std::popcount(bits_); }

std::vector<int> SimpleSubset::indices() const {
  std::vector<int> out;
  for (int i = 1; i <= 64; ++i)
    if (contains(i))
      out.push_back(i);
  return out;
}

std::string to_string(const SimpleSubset &s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i : s.indices()) {
    os << (first ? "" : ",") << i;
    first = false;
  }
  os << '}';
  return os.str();
}

WeylElement::WeylElement(RootSystemPtr rs, IntMatrix action)
    : rs_(std::move(rs)), action_(std::move(action)) {
  const int n = rs_->rank();
  for (int j = 0; j < n; ++j) {
    bool negative = false;
    for (int i = 0; i < n; ++i)
      if (action_(i, j) != 0) {
        negative = action_(i, j) < 0;
        break;
      }
    if (negative)
      right_descents_.insert(j + 1);
  }
  for (const Root &beta : rs_->positive_roots()) {
    int first = 0;
    int nonzero = 0;
    int where = -1;
    int value = 0;
    for (int i = 0; i < n; ++i) {
      int c = 0;
      for (int j = 0; j < n; ++j)
        c += action_(i, j) * beta.coeffs[j];
      if (c != 0) {
        if (first == 0)
          first = c;
        ++nonzero;
        where = i;
        value = c;
      }
    }
    if (first < 0) {
      ++length_;
      if (nonzero == 1 && value == -1)
        left_descents_.insert(where + 1);
    }
  }
}

WeylElement WeylElement::identity(RootSystemPtr rs) {
  const int n = rs->rank();
  return WeylElement(std::move(rs), IntMatrix::identity(n));
}

Root WeylElement::apply(const Root &r) const {
  const int n = rank();
  if (r.rank() != n)
    throw InputError("root has wrong rank for this Weyl group");
  Root out(std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out.coeffs[i] += action_(i, j) * r.coeffs[j];
  return out;
}

WeylElement WeylElement::times_simple(int i) const {
  return WeylElement(rs_, action_ * rs_->simple_reflection_matrix(i));
}

WeylElement WeylElement::simple_times(int i) const {
  return WeylElement(rs_, rs_->simple_reflection_matrix(i) * action_);
}

std::size_t WeylElementHash::operator()(const WeylElement &w) const {
  std::size_t h = 1469598103934665603ull;
  for (int x : w.action().data()) {
    h ^= static_cast<std::size_t>(x + 0x9e37);
    h *= 1099511628211ull;
  }
  return h;
}

bool WeylElementLess::operator()(const WeylElement &a, const WeylElement &b) const {
  if (a.length() != b.length())
    return a.length() < b.length();
  return a.action() < b.action();
}

WeylElement from_word(const RootSystemPtr &rs, std::span<const int> word) {
  IntMatrix m = IntMatrix::identity(rs->rank());
  for (int i : word)
    m = m * rs->simple_reflection_matrix(i);
  return WeylElement(rs, std::move(m));
}

WeylElement from_word(const RootSystemPtr &rs, std::initializer_list<int> word) {
  return from_word(rs, std::span<const int>(word.begin(), word.size()));
}

WeylElement multiply(const WeylElement &u, const WeylElement &v) {
  if (u.root_system_ptr() != v.root_system_ptr())
    throw InputError("cannot multiply elements of different root systems");
  return WeylElement(u.root_system_ptr(), u.action() * v.action());
}

WeylElement inverse(const WeylElement &w) {
  Word word = reduced_word(w);
  std::reverse(word.begin(), word.end());
  return from_word(w.root_system_ptr(), word);
}

Root apply_to_root(const WeylElement &w, const Root &r) { return w.apply(r); }

WeylElement reflection(const RootSystemPtr &rs, const Root &alpha) {
  return WeylElement(rs, rs->reflection_matrix(rs->index_of_abs(alpha)));
}

WeylElement reflect_left(std::size_t positive_root_index, const WeylElement &w) {
  const RootSystem &rs = w.root_system();
  return WeylElement(w.root_system_ptr(),
                     rs.reflection_matrix(positive_root_index) * w.action());
}

SimpleSubset right_descents(const WeylElement &w) { return w.right_descent_set(); }
SimpleSubset left_descents(const WeylElement &w) { return w.left_descent_set(); }

std::vector<Root> left_inversions(const WeylElement &w) {
  const WeylElement winv = inverse(w);
  std::vector<Root> out;
  for (const Root &alpha : w.root_system().positive_roots())
    if (winv.apply(alpha).is_negative())
      out.push_back(alpha);
  return out;
}

std::vector<Root> right_inversions(const WeylElement &w) {
  std::vector<Root> out;
  for (const Root &alpha : w.root_system().positive_roots())
    if (w.apply(alpha).is_negative())
      out.push_back(alpha);
  return out;
}

SimpleSubset support(const WeylElement &w) {
  const Word word = reduced_word(w);
  return SimpleSubset::from_indices(word);
}

Word reduced_word(const WeylElement &w) {
  Word word;
  word.reserve(w.length());
  WeylElement x = w;
  while (!x.is_identity()) {
    const int i = x.left_descent_set().indices().front();
    word.push_back(i);
    x = x.simple_times(i);
  }
  return word;
}

namespace {

using WordCache = std::unordered_map<WeylElement, std::vector<Word>, WeylElementHash>;

const std::vector<Word> &reduced_words_memo(const WeylElement &w, WordCache &cache) {
  if (auto it = cache.find(w); it != cache.end())
    return it->second;
  std::vector<Word> words;
  if (w.is_identity()) {
    words.push_back({});
  } else {
    for (int i : w.right_descent_set().indices()) {
      for (Word prefix : reduced_words_memo(w.times_simple(i), cache)) {
        prefix.push_back(i);
        words.push_back(std::move(prefix));
      }
    }
  }
  return cache.emplace(w, std::move(words)).first->second;
}

} // namespace

std::vector<Word> all_reduced_words(const WeylElement &w) {
  WordCache cache;
  std::vector<Word> words = reduced_words_memo(w, cache);
  std::sort(words.begin(), words.end());
  return words;
}

bool is_reduced(const RootSystemPtr &rs, std::span<const int> word) {
  return from_word(rs, word).length() == static_cast<int>(word.size());
}

ParabolicFactors left_parabolic_decomposition(const WeylElement &w, const SimpleSubset &I) {
  WeylElement a = WeylElement::identity(w.root_system_ptr());
  WeylElement d = w;
  for (;;) {
    const SimpleSubset strip = d.left_descent_set() & I;
    if (strip.empty())
      break;
    const int i = strip.indices().front();
    d = d.simple_times(i);
    a = a.times_simple(i);
  }
  return {a, d};
}

ParabolicFactors right_parabolic_decomposition(const WeylElement &w, const SimpleSubset &I) {
  WeylElement rep = w;
  WeylElement b = WeylElement::identity(w.root_system_ptr());
  for (;;) {
    const SimpleSubset strip = rep.right_descent_set() & I;
    if (strip.empty())
      break;
    const int i = strip.indices().front();
    rep = rep.times_simple(i);
    b = b.simple_times(i);
  }
  return {b, rep};
}

WeylElement longest_element(const RootSystemPtr &rs, const SimpleSubset &I) {
  for (int i : I.indices())
    if (i > rs->rank())
      throw InputError("simple index " + std::to_string(i) + " out of range 1.." +
                       std::to_string(rs->rank()));
  WeylElement w = WeylElement::identity(rs);
  for (;;) {
    const SimpleSubset ascents = I.minus(w.right_descent_set());
    if (ascents.empty())
      return w;
    w = w.times_simple(ascents.indices().front());
  }
}

std::uint64_t group_cap_from_env() {
  if (const char *env = std::getenv("BRUHAT_GROUP_CAP")) {
    char *end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      return v;
  }
  return kDefaultGroupCap;
}

std::uint64_t group_order(const CartanDatum &datum) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  const auto mul = [](std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kMax / a)
      return kMax;
    return a * b;
  };
  const auto factorial = [&](int n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k)
      f = mul(f, static_cast<std::uint64_t>(k));
    return f;
  };
  const auto pow2 = [&](int n) {
    std::uint64_t p = 1;
    for (int k = 0; k < n; ++k)
      p = mul(p, 2);
    return p;
  };
  const int n = datum.rank;
  switch (datum.family) {
  case Family::A:
    return factorial(n + 1);
  case Family::B:
  case Family::C:
    return mul(pow2(n), factorial(n));
  case Family::D:
    return mul(pow2(n - 1), factorial(n));
  case Family::E:
    return n == 6 ? 51840ull : n == 7 ? 2903040ull : 696729600ull;
  case Family::F:
    return 1152;
  case Family::G:
    return 12;
  }
  return kMax;
}

std::vector<WeylElement> enumerate_group(const RootSystemPtr &rs, std::uint64_t cap) {
  const std::uint64_t estimate = group_order(rs->datum());
  if (estimate > cap)
    throw CapExceeded(estimate, cap);
  std::vector<WeylElement> out;
  std::unordered_set<WeylElement, WeylElementHash> seen;
  std::deque<WeylElement> queue;
  const WeylElement e = WeylElement::identity(rs);
  seen.insert(e);
  queue.push_back(e);
  while (!queue.empty()) {
    WeylElement w = queue.front();
    queue.pop_front();
    for (int i = 1; i <= rs->rank(); ++i) {
      WeylElement x = w.times_simple(i);
      if (seen.insert(x).second) {
        if (seen.size() > cap)
          throw CapExceeded(std::max<std::uint64_t>(estimate, seen.size()), cap);
        queue.push_back(std::move(x));
      }
    }
    out.push_back(std::move(w));
  }
  canonical_sort(out);
  return out;
}

std::vector<WeylElement> enumerate_group(const RootSystemPtr &rs) {
  return enumerate_group(rs, group_cap_from_env());
}

void canonical_sort(std::vector<WeylElement> &elements) {
  std::vector<std::pair<Word, std::size_t>> keys;
  keys.reserve(elements.size());
  for (std::size_t k = 0; k < elements.size(); ++k)
    keys.emplace_back(reduced_word(elements[k]), k);
  std::sort(keys.begin(), keys.end(), [](const auto &a, const auto &b) {
    if (a.first.size() != b.first.size())
      return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<WeylElement> sorted;
  sorted.reserve(elements.size());
  for (const auto &[word, k] : keys)
    sorted.push_back(elements[k]);
  elements = std::move(sorted);
}

} // namespace bruhat
