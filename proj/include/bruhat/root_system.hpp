#ifndef BRUHAT_ROOT_SYSTEM_HPP
#define BRUHAT_ROOT_SYSTEM_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace bruhat {

// Dense row-major integer matrix. Small (rank <= 8 in practice).
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int &operator()(int i, int j) { return data_[i * cols_ + j]; }
  int operator()(int i, int j) const { return data_[i * cols_ + j]; }
  const std::vector<int> &data() const { return data_; }

  IntMatrix operator*(const IntMatrix &rhs) const;

  friend bool operator==(const IntMatrix &, const IntMatrix &) = default;
  friend auto operator<=>(const IntMatrix &a, const IntMatrix &b) {
    return a.data_ <=> b.data_;
  }

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> data_;
};

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);
Family parse_family(const std::string &s);

// Cartan data. Entry cartan(i, j) is <alpha_j, alpha_i^vee>, so that
// s_i(alpha_j) = alpha_j - cartan(i, j) alpha_i.
//
// Bourbaki numbering throughout. Under this convention the last simple root
// of B_n is short (cartan(n, n-1) = -2) and the last simple root of C_n is
// long (cartan(n-1, n) = -2); C_n is the transpose of B_n. In G2 alpha_1 is
// short (cartan(1, 2) = -3). In F4 alpha_1, alpha_2 are long.
struct CartanDatum {
  Family family = Family::A;
  int rank = 1;
  IntMatrix cartan;

  // Standard matrix for a finite type; throws InputError on bad rank.
  static CartanDatum standard(Family family, int rank);

  // Checks diagonal = 2, off-diagonal <= 0, a_ij = 0 iff a_ji = 0, and the
  // family rank restrictions. Throws InputError with a diagnostic.
  void validate() const;

  std::string name() const; // e.g. "A3"
};

// A root in simple-root coordinates.
struct Root {
  std::vector<int> coeffs;

  Root() = default;
  explicit Root(std::vector<int> c) : coeffs(std::move(c)) {}

  int rank() const { return static_cast<int>(coeffs.size()); }
  bool is_zero() const;
  bool is_positive() const; // nonzero with all coefficients >= 0
  bool is_negative() const;
  int height() const;
  Root operator-() const;
  Root operator+(const Root &o) const;
  Root operator-(const Root &o) const;
  Root scaled(int k) const;

  friend bool operator==(const Root &, const Root &) = default;
  friend auto operator<=>(const Root &a, const Root &b) {
    return a.coeffs <=> b.coeffs;
  }
};

std::string to_string(const Root &r); // "1,1,0"

class RootSystem {
public:
  explicit RootSystem(CartanDatum datum);

  const CartanDatum &datum() const { return datum_; }
  int rank() const { return datum_.rank; }

  // Positive roots ordered by height, then by descending coefficient vector,
  // so that alpha_1, ..., alpha_r come first in index order.
  const std::vector<Root> &positive_roots() const { return positive_; }
  std::size_t num_positive_roots() const { return positive_.size(); }

  // Ordinal of a positive root; nullopt if r is not a positive root.
  std::optional<std::size_t> index_of(const Root &r) const;
  // Ordinal of the positive root +-r; throws InputError if r is not a root.
  std::size_t index_of_abs(const Root &r) const;
  bool is_root(const Root &r) const;

  // 1-based simple index.
  Root simple_root(int i) const;
  Root simple_reflect(int i, const Root &r) const;

  // <beta, alpha^vee> for a root alpha.
  int pairing(const Root &beta, const Root &alpha) const;
  // s_alpha(beta).
  Root reflect(const Root &alpha, const Root &beta) const;

  // Matrix of s_alpha for the positive root with the given ordinal; columns
  // are the images of the simple roots.
  const IntMatrix &reflection_matrix(std::size_t index) const {
    return reflections_[index];
  }
  // Matrix of s_i (1-based).
  const IntMatrix &simple_reflection_matrix(int i) const;

private:
  void check_index(int i) const;
  long long form(const Root &a, const Root &b) const;

  CartanDatum datum_;
  std::vector<long long> symmetrizer_; // (alpha_i, alpha_i) / 2 up to scale
  std::vector<Root> positive_;
  std::map<std::vector<int>, std::size_t> index_;
  std::vector<IntMatrix> reflections_;
  std::vector<IntMatrix> simple_reflections_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

// Closure of the simple roots under the simple reflections. Throws InputError
// for an invalid Cartan matrix or one that is not of finite type.
RootSystemPtr build_root_system(const CartanDatum &datum);
RootSystemPtr build_root_system(Family family, int rank);

// Free-function form of RootSystem::simple_reflect.
Root simple_reflect(const RootSystem &rs, int i, const Root &r);

} // namespace bruhat

#endif
