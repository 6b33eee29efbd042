#include "bruhat/root_system.hpp"

#include "bruhat/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace bruhat {

namespace {

constexpr std::size_t kMaxRoots = 20000;

void link(IntMatrix &m, int i, int j, int aij, int aji) {
  m(i - 1, j - 1) = aij;
  m(j - 1, i - 1) = aji;
}

} // namespace

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix &rhs) const {
  IntMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const int a = (*this)(i, k);
      if (a == 0)
        continue;
      for (int j = 0; j < rhs.cols_; ++j)
        out(i, j) += a * rhs(k, j);
    }
  return out;
}

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

Family parse_family(const std::string &s) {
  if (s.size() == 1) {
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (c >= 'A' && c <= 'G')
      return static_cast<Family>(c - 'A');
  }
  throw InputError("unknown Lie type '" + s + "' (expected one of A..G)");
}

CartanDatum CartanDatum::standard(Family family, int rank) {
  CartanDatum d;
  d.family = family;
  d.rank = rank;
  if (rank < 1)
    throw InputError("rank must be positive");
  const auto bad_rank = [&] {
    return InputError("invalid rank " + std::to_string(rank) + " for type " +
                      family_letter(family));
  };
  switch (family) {
  case Family::A:
  case Family::B:
  case Family::C:
    break;
  case Family::D:
    if (rank < 2)
      throw bad_rank();
    break;
  case Family::E:
    if (rank < 6 || rank > 8)
      throw bad_rank();
    break;
  case Family::F:
    if (rank != 4)
      throw bad_rank();
    break;
  case Family::G:
    if (rank != 2)
      throw bad_rank();
    break;
  }

  IntMatrix m = IntMatrix::identity(rank);
  for (int i = 0; i < rank; ++i)
    m(i, i) = 2;
  const int n = rank;
  switch (family) {
  case Family::A:
    for (int i = 1; i < n; ++i)
      link(m, i, i + 1, -1, -1);
    break;
  case Family::B:
    for (int i = 1; i + 1 < n; ++i)
      link(m, i, i + 1, -1, -1);
    if (n >= 2)
      link(m, n - 1, n, -1, -2);
    break;
  case Family::C:
    for (int i = 1; i + 1 < n; ++i)
      link(m, i, i + 1, -1, -1);
    if (n >= 2)
      link(m, n - 1, n, -2, -1);
    break;
  case Family::D:
    for (int i = 1; i + 2 < n; ++i)
      link(m, i, i + 1, -1, -1);
    if (n >= 3) {
      link(m, n - 2, n - 1, -1, -1);
      link(m, n - 2, n, -1, -1);
    }
    break;
  case Family::E:
    link(m, 1, 3, -1, -1);
    link(m, 2, 4, -1, -1);
    for (int i = 3; i < n; ++i)
      link(m, i, i + 1, -1, -1);
    break;
  case Family::F:
    link(m, 1, 2, -1, -1);
    link(m, 2, 3, -1, -2);
    link(m, 3, 4, -1, -1);
    break;
  case Family::G:
    link(m, 1, 2, -3, -1);
    break;
  }
  d.cartan = std::move(m);
  return d;
}

void CartanDatum::validate() const {
  if (rank < 1)
    throw InputError("rank must be positive");
  if (cartan.rows() != rank || cartan.cols() != rank)
    throw InputError("Cartan matrix must be " + std::to_string(rank) + "x" +
                     std::to_string(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      const int a = cartan(i, j);
      const std::string where = "a(" + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + ")";
      if (i == j && a != 2)
        throw InputError("invalid Cartan matrix: diagonal entry " + where +
                         " = " + std::to_string(a) + ", expected 2");
      if (i != j && a > 0)
        throw InputError("invalid Cartan matrix: off-diagonal entry " + where +
                         " = " + std::to_string(a) + " is positive");
      if (i != j && (a == 0) != (cartan(j, i) == 0))
        throw InputError("invalid Cartan matrix: " + where +
                         " and its transpose disagree on being zero");
    }
  const bool ok = [&] {
    switch (family) {
    case Family::E:
      return rank >= 6 && rank <= 8;
    case Family::F:
      return rank == 4;
    case Family::G:
      return rank == 2;
    default:
      return true;
    }
  }();
  if (!ok)
    throw InputError("invalid rank " + std::to_string(rank) + " for type " +
                     family_letter(family));
}

std::string CartanDatum::name() const {
  return std::string(1, family_letter(family)) + std::to_string(rank);
}

bool Root::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c == 0; });
}

bool Root::is_positive() const {
  return !is_zero() &&
         std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c >= 0; });
}

bool Root::is_negative() const {
  return !is_zero() &&
         std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c <= 0; });
}

int Root::height() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0); }

Root Root::operator-() const { return scaled(-1); }

Root Root::operator+(const Root &o) const {
  Root r = *this;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i)
    r.coeffs[i] += o.coeffs[i];
  return r;
}

Root Root::operator-(const Root &o) const { return *this + (-o); }

Root Root::scaled(int k) const {
  Root r = *this;
  for (int &c : r.coeffs)
    c *= k;
  return r;
}

std::string to_string(const Root &r) {
  std::ostringstream os;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i)
    os << (i ? "," : "") << r.coeffs[i];
  return os.str();
}

RootSystem::RootSystem(CartanDatum datum) : datum_(std::move(datum)) {
  datum_.validate();
  const int n = datum_.rank;
  const IntMatrix &a = datum_.cartan;

  // Symmetrizer d with d_i a_ij = d_j a_ji, as fractions num/den.
  std::vector<long long> num(n, 0), den(n, 1);
  for (int start = 0; start < n; ++start) {
    if (num[start] != 0)
      continue;
    num[start] = 1;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      const int i = queue.front();
      queue.pop_front();
      for (int j = 0; j < n; ++j) {
        if (j == i || a(i, j) == 0 || num[j] != 0)
          continue;
        // d_j = d_i * a_ij / a_ji
        long long p = num[i] * a(i, j);
        long long q = den[i] * a(j, i);
        if (q < 0) {
          p = -p;
          q = -q;
        }
        const long long g = std::gcd(p, q);
        num[j] = p / g;
        den[j] = q / g;
        queue.push_back(j);
      }
    }
  }
  long long l = 1;
  for (long long d : den)
    l = std::lcm(l, d);
  symmetrizer_.resize(n);
  for (int i = 0; i < n; ++i)
    symmetrizer_[i] = num[i] * (l / den[i]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (symmetrizer_[i] * a(i, j) != symmetrizer_[j] * a(j, i))
        throw InputError("invalid Cartan matrix: not symmetrizable");

  simple_reflections_.reserve(n);
  for (int i = 0; i < n; ++i) {
    IntMatrix s = IntMatrix::identity(n);
    for (int j = 0; j < n; ++j)
      s(i, j) -= a(i, j);
    simple_reflections_.push_back(std::move(s));
  }

  std::vector<Root> found;
  std::map<std::vector<int>, bool> seen;
  std::deque<Root> queue;
  for (int i = 1; i <= n; ++i) {
    Root r = simple_root(i);
    seen[r.coeffs] = true;
    found.push_back(r);
    queue.push_back(r);
  }
  while (!queue.empty()) {
    const Root r = queue.front();
    queue.pop_front();
    for (int i = 1; i <= n; ++i) {
      Root s = simple_reflect(i, r);
      if (s.is_negative())
        continue;
      if (!s.is_positive())
        throw InputError("Cartan matrix " + datum_.name() +
                         " is not of finite type (mixed-sign reflection image)");
      if (seen.emplace(s.coeffs, true).second) {
        found.push_back(s);
        queue.push_back(std::move(s));
        if (found.size() > kMaxRoots)
          throw InputError("Cartan matrix " + datum_.name() +
                           " is not of finite type (root closure diverges)");
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const Root &x, const Root &y) {
    if (x.height() != y.height())
      return x.height() < y.height();
    return x.coeffs > y.coeffs;
  });
  positive_ = std::move(found);
  for (std::size_t k = 0; k < positive_.size(); ++k)
    index_[positive_[k].coeffs] = k;

  reflections_.reserve(positive_.size());
  for (const Root &alpha : positive_) {
    IntMatrix m(n, n);
    for (int j = 1; j <= n; ++j) {
      const Root img = reflect(alpha, simple_root(j));
      for (int i = 0; i < n; ++i)
        m(i, j - 1) = img.coeffs[i];
    }
    reflections_.push_back(std::move(m));
  }
}

std::optional<std::size_t> RootSystem::index_of(const Root &r) const {
  auto it = index_.find(r.coeffs);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

std::size_t RootSystem::index_of_abs(const Root &r) const {
  if (auto k = index_of(r))
    return *k;
  if (auto k = index_of(-r))
    return *k;
  throw InputError("(" + to_string(r) + ") is not a root of " + datum_.name());
}

bool RootSystem::is_root(const Root &r) const {
  return index_of(r).has_value() || index_of(-r).has_value();
}

void RootSystem::check_index(int i) const {
  if (i < 1 || i > datum_.rank)
    throw InputError("simple index " + std::to_string(i) + " out of range 1.." +
                     std::to_string(datum_.rank));
}

Root RootSystem::simple_root(int i) const {
  check_index(i);
  Root r(std::vector<int>(datum_.rank, 0));
  r.coeffs[i - 1] = 1;
  return r;
}

Root RootSystem::simple_reflect(int i, const Root &r) const {
  check_index(i);
  if (r.rank() != datum_.rank)
    throw InputError("root has wrong rank");
  int p = 0;
  for (int j = 0; j < datum_.rank; ++j)
    p += r.coeffs[j] * datum_.cartan(i - 1, j);
  Root out = r;
  out.coeffs[i - 1] -= p;
  return out;
}

long long RootSystem::form(const Root &x, const Root &y) const {
  long long s = 0;
  for (int i = 0; i < datum_.rank; ++i) {
    if (x.coeffs[i] == 0)
      continue;
    for (int j = 0; j < datum_.rank; ++j)
      s += static_cast<long long>(x.coeffs[i]) * y.coeffs[j] * symmetrizer_[i] *
           datum_.cartan(i, j);
  }
  return s;
}

int RootSystem::pairing(const Root &beta, const Root &alpha) const {
  const long long aa = form(alpha, alpha);
  if (aa == 0)
    throw InputError("pairing with the zero vector");
  return static_cast<int>(2 * form(beta, alpha) / aa);
}

Root RootSystem::reflect(const Root &alpha, const Root &beta) const {
  return beta - alpha.scaled(pairing(beta, alpha));
}

const IntMatrix &RootSystem::simple_reflection_matrix(int i) const {
  check_index(i);
  return simple_reflections_[i - 1];
}

RootSystemPtr build_root_system(const CartanDatum &datum) {
  return std::make_shared<const RootSystem>(datum);
}

RootSystemPtr build_root_system(Family family, int rank) {
  return build_root_system(CartanDatum::standard(family, rank));
}

Root simple_reflect(const RootSystem &rs, int i, const Root &r) {
  return rs.simple_reflect(i, r);
}

} // namespace bruhat
