#include "bruhat/complexity.hpp"

#include "bruhat/error.hpp"

namespace bruhat {

std::string to_string(ComplexityKind kind) {
  switch (kind) {
  case ComplexityKind::torus_richardson:
    return "torus_richardson";
  case ComplexityKind::torus_schubert:
    return "torus_schubert";
  case ComplexityKind::levi_borel_schubert:
    return "levi_borel_schubert";
  case ComplexityKind::torus_partial:
    return "torus_partial";
  case ComplexityKind::levi_partial:
    return "levi_partial";
  }
  return "unknown";
}

ComplexityKind parse_complexity_kind(const std::string &s) {
  for (ComplexityKind k :
       {ComplexityKind::torus_richardson, ComplexityKind::torus_schubert,
        ComplexityKind::levi_borel_schubert, ComplexityKind::torus_partial,
        ComplexityKind::levi_partial})
    if (to_string(k) == s)
      return k;
  throw InputError("unknown complexity kind '" + s + "'");
}

std::string to_string(PartialLeviStatus status) {
  switch (status) {
  case PartialLeviStatus::ok:
    return "ok";
  case PartialLeviStatus::not_minimal_coset_rep:
    return "not_minimal_coset_rep";
  case PartialLeviStatus::not_stabilized:
    return "not_stabilized";
  case PartialLeviStatus::acts_on_partial_only:
    return "acts_on_partial_only";
  }
  return "unknown";
}

std::optional<int> value_from_witness(const ComplexityReport &report) {
  const ComplexityWitness &w = report.witness;
  switch (report.kind) {
  case ComplexityKind::torus_richardson:
    if (w.length_u && w.length_v && w.ad)
      return *w.length_v - *w.length_u - *w.ad;
    break;
  case ComplexityKind::torus_schubert:
  case ComplexityKind::torus_partial:
    if (w.length_w && w.supp)
      return *w.length_w - *w.supp;
    break;
  case ComplexityKind::levi_borel_schubert:
  case ComplexityKind::levi_partial:
    if (w.length_coset_rep && w.supp_coset_rep)
      return *w.length_coset_rep - *w.supp_coset_rep;
    break;
  }
  return std::nullopt;
}

ComplexityReport torus_complexity_richardson(const WeylElement &u, const WeylElement &v) {
  if (!bruhat_le(u, v))
    throw HypothesisError("u <= v", "c_T(R_{u,v}) = l(v) - l(u) - ad(u,v)",
                          "u is not below v in the Bruhat order");
  const int ad = ad_recursive(u, v);
  const ToricWitness toric = max_toric_below_top(u, v);
  ComplexityReport r{ComplexityKind::torus_richardson, v.length() - u.length() - ad, {}};
  r.witness.u = u;
  r.witness.v = v;
  r.witness.length_u = u.length();
  r.witness.length_v = v.length();
  r.witness.ad = ad;
  r.witness.toric_witness = toric.w;
  return r;
}

ComplexityReport torus_complexity_schubert(const WeylElement &w) {
  const SimpleSubset supp = support(w);
  ComplexityReport r{ComplexityKind::torus_schubert, w.length() - supp.size(), {}};
  r.witness.w = w;
  r.witness.length_w = w.length();
  r.witness.support_set = supp;
  r.witness.supp = supp.size();
  return r;
}

LeviAction levi_acts(const SimpleSubset &I, const WeylElement &w) {
  const SimpleSubset descents = w.left_descent_set();
  const ParabolicFactors f = left_parabolic_decomposition(w, I);
  WeylElement longest = longest_element(w.root_system_ptr(), I);
  const bool containment = I.is_subset_of(descents);
  const bool factor = f.parabolic == longest;
  return LeviAction{containment, containment, factor, I.minus(descents), f.parabolic,
                    std::move(longest)};
}

ComplexityReport levi_borel_complexity(const SimpleSubset &I, const WeylElement &w) {
  const SimpleSubset descents = w.left_descent_set();
  if (!I.is_subset_of(descents))
    throw HypothesisError("I subset of D_L(w)", "c_{L_I}(X_w) = l(^I w) - supp(^I w)",
                          "I not contained in left descent set: indices " +
                              to_string(I.minus(descents)) + " are not left descents of w");
  const ParabolicFactors f = left_parabolic_decomposition(w, I);
  const SimpleSubset supp_d = support(f.coset_rep);
  ComplexityReport r{ComplexityKind::levi_borel_schubert,
                     f.coset_rep.length() - supp_d.size(), {}};
  r.witness.w = w;
  r.witness.length_w = w.length();
  r.witness.levi_set = I;
  r.witness.left_descents = descents;
  r.witness.levi_factor = f.parabolic;
  r.witness.coset_rep = f.coset_rep;
  r.witness.length_coset_rep = f.coset_rep.length();
  r.witness.supp_coset_rep = supp_d.size();
  r.witness.support_set = supp_d;
  return r;
}

namespace {

void require_minimal_rep(const WeylElement &w, const SimpleSubset &J, const std::string &formula) {
  const SimpleSubset bad = w.right_descent_set() & J;
  if (!bad.empty())
    throw HypothesisError("w in W^J", formula,
                          "w is not a minimal coset representative for J: right descents " +
                              to_string(bad) + " lie in J");
}

} // namespace

SimpleSubset partial_stabilizer_descents(const WeylElement &w, const SimpleSubset &J) {
  require_minimal_rep(w, J, "stab(X^{P_J}_w) = P_{D_L(w w_0(J))}");
  return multiply(w, longest_element(w.root_system_ptr(), J)).left_descent_set();
}

ComplexityReport partial_flag_torus_complexity(const WeylElement &w, const SimpleSubset &J) {
  require_minimal_rep(w, J, "c_T(X^{P_J}_w) = c_T(X_w) = l(w) - supp(w)");
  ComplexityReport r = torus_complexity_schubert(w);
  r.kind = ComplexityKind::torus_partial;
  r.witness.parabolic_set = J;
  return r;
}

bool is_toric_partial(const WeylElement &w, const SimpleSubset &J) {
  return partial_flag_torus_complexity(w, J).value == 0;
}

PartialLeviResult partial_flag_levi_complexity(const WeylElement &w, const SimpleSubset &J,
                                               const SimpleSubset &I) {
  PartialLeviResult out;
  const SimpleSubset bad_rep = w.right_descent_set() & J;
  if (!bad_rep.empty()) {
    out.status = PartialLeviStatus::not_minimal_coset_rep;
    out.offending = bad_rep;
    return out;
  }
  const SimpleSubset stab = partial_stabilizer_descents(w, J);
  if (!I.is_subset_of(stab)) {
    out.status = PartialLeviStatus::not_stabilized;
    out.offending = I.minus(stab);
    return out;
  }
  if (!I.is_subset_of(w.left_descent_set())) {
    out.status = PartialLeviStatus::acts_on_partial_only;
    out.offending = I.minus(w.left_descent_set());
    return out;
  }
  ComplexityReport r = levi_borel_complexity(I, w);
  r.kind = ComplexityKind::levi_partial;
  r.witness.parabolic_set = J;
  r.witness.stabilizer_set = stab;
  out.report = std::move(r);
  return out;
}

} // namespace bruhat
