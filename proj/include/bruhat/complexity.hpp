#ifndef BRUHAT_COMPLEXITY_HPP
#define BRUHAT_COMPLEXITY_HPP

#include "bruhat/algdim.hpp"

#include <optional>
#include <string>

namespace bruhat {

enum class ComplexityKind {
  torus_richardson,    // c_T(R_{u,v}) = l(v) - l(u) - ad(u,v)
  torus_schubert,      // c_T(X_w) = l(w) - supp(w)
  levi_borel_schubert, // c_{L_I}(X_w) = l(^I w) - supp(^I w)
  torus_partial,       // c_T(X^{P_J}_w) = l(w) - supp(w), w in W^J
  levi_partial,        // c_{L_I}(X^{P_J}_w) = c_{L_I}(X_w)
};

std::string to_string(ComplexityKind kind);
ComplexityKind parse_complexity_kind(const std::string &s);

// The ingredients a report was computed from; which fields are set depends
// on the kind.
struct ComplexityWitness {
  std::optional<WeylElement> u;
  std::optional<WeylElement> v;
  std::optional<WeylElement> w;
  std::optional<int> length_u;
  std::optional<int> length_v;
  std::optional<int> length_w;
  std::optional<int> ad;
  // For torus_richardson: some x in [u, v] with [x, v] toric and
  // l(v) - l(x) = ad(u, v).
  std::optional<WeylElement> toric_witness;
  std::optional<SimpleSubset> support_set;
  std::optional<int> supp;
  std::optional<SimpleSubset> levi_set;        // I
  std::optional<SimpleSubset> parabolic_set;   // J
  std::optional<SimpleSubset> left_descents;   // D_L(w)
  std::optional<SimpleSubset> stabilizer_set;  // D_L(w w_0(J))
  std::optional<WeylElement> levi_factor;      // _I w
  std::optional<WeylElement> coset_rep;        // ^I w
  std::optional<int> length_coset_rep;
  std::optional<int> supp_coset_rep;

  friend bool operator==(const ComplexityWitness &, const ComplexityWitness &) = default;
};

struct ComplexityReport {
  ComplexityKind kind;
  int value = 0;
  ComplexityWitness witness;

  friend bool operator==(const ComplexityReport &, const ComplexityReport &) = default;
};

// Recomputes the value from the witness by the governing formula; nullopt
// if a needed ingredient is missing.
std::optional<int> value_from_witness(const ComplexityReport &report);

ComplexityReport torus_complexity_richardson(const WeylElement &u, const WeylElement &v);
ComplexityReport torus_complexity_schubert(const WeylElement &w);

struct LeviAction {
  bool acts = false;                 // I subset of D_L(w)
  bool descent_containment = false;  // I subset of D_L(w)
  bool factor_is_longest = false;    // _I w == w_0(I)
  SimpleSubset missing;              // I \ D_L(w)
  WeylElement levi_factor;
  WeylElement longest;               // w_0(I)
};

// Whether L_I acts on X_w, with both equivalent criteria evaluated.
LeviAction levi_acts(const SimpleSubset &I, const WeylElement &w);

// Throws HypothesisError naming the indices of I outside D_L(w).
ComplexityReport levi_borel_complexity(const SimpleSubset &I, const WeylElement &w);

// D_L(w w_0(J)). Throws HypothesisError if w has a right descent in J.
SimpleSubset partial_stabilizer_descents(const WeylElement &w, const SimpleSubset &J);

ComplexityReport partial_flag_torus_complexity(const WeylElement &w, const SimpleSubset &J);
bool is_toric_partial(const WeylElement &w, const SimpleSubset &J);

enum class PartialLeviStatus {
  ok,
  not_minimal_coset_rep,  // w has a right descent in J
  not_stabilized,         // I not inside D_L(w w_0(J)): L_I does not act on X^{P_J}_w
  acts_on_partial_only,   // L_I acts on X^{P_J}_w but not on X_w; no formula
};

std::string to_string(PartialLeviStatus status);

struct PartialLeviResult {
  PartialLeviStatus status = PartialLeviStatus::ok;
  std::optional<ComplexityReport> report; // set iff status == ok
  SimpleSubset offending;                 // indices that violate the failed hypothesis
};

PartialLeviResult partial_flag_levi_complexity(const WeylElement &w, const SimpleSubset &J,
                                               const SimpleSubset &I);

} // namespace bruhat

#endif
