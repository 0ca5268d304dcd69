#pragma once

#include <string>
#include <vector>

#include "conehankel/fourier.hpp"
#include "conehankel/ordered_group.hpp"

namespace conehankel {

/// A dense finite section of an operator, with explicit row/column index
/// slabs. Entries are exact: only the domain is truncated.
struct OperatorMatrix {
  ConeSlab rows;
  ConeSlab cols;
  MatrixXc data;
  std::string label;

  void check_invariants() const;  // sizes match, entries finite
};

/// Hankel section on l2(X+): entry(xi, chi) = a(chi + xi). The symbol a must
/// be supported in X+ (coefficients in X- above the prune tolerance reject).
OperatorMatrix hankel_matrix(const FourierCoeffs& a, const ConeSlab& slab);

/// The bilinear Hankel form sum_{chi,eta} k(chi+eta) a(chi) b(eta) over a
/// positive slab. Not sesquilinear: no conjugation on either argument.
Complex hankel_form(const FourierCoeffs& k, const ConeSlab& slab,
                    const VectorXc& a, const VectorXc& b);

/// Section of H_phi = P- M_phi from the positive slab to the negative slab:
/// entry(eta, chi) = phi^(eta - chi). Only P- phi matters.
OperatorMatrix hphi_matrix(const FourierCoeffs& phi, const OrderSpec& spec, int radius);

/// Sparse application of G_nu: (nu * f) restricted to X- within the out box.
/// f lives on a positive slab; the result on cone_slab(X-, out_radius).
VectorXc gnu_apply(const FourierCoeffs& nu, const ConeSlab& domain, const VectorXc& f,
                   const ConeSlab& out_slab);

/// Toeplitz section on the positive slab: entry(xi, chi) = phi^(xi - chi).
OperatorMatrix toeplitz_matrix(const FourierCoeffs& phi, const ConeSlab& slab);

/// Section of f |-> P+ J(psi f) on the positive slab:
/// entry(xi, chi) = psi^(-(chi + xi)); complex symmetric.
OperatorMatrix gamma_psi_matrix(const FourierCoeffs& psi, const ConeSlab& slab);

/// Shift by chi in X+: entry(xi, eta) = 1 iff xi = eta + chi. The adjoint is
/// the transpose.
OperatorMatrix shift_matrix(const GroupElement& chi, const ConeSlab& slab);

struct CommutationWitness {
  GroupElement shift, eta, xi;
  Complex lhs, rhs;
};

struct CommutationResult {
  bool commutes = true;
  double max_residual = 0;
  long checked = 0;
  std::optional<CommutationWitness> witness;  // worst offender when it fails
};

/// Checks the Hankel commutation relations S_chi^* T = T S_chi entrywise on
/// the interior of a square positive-slab section: T[eta+chi, xi] must equal
/// T[eta, xi+chi] whenever all four indices stay in the slab. Test shifts are
/// the nonzero positive elements within the margin box; eta, xi range over
/// the interior (box radius minus margin).
CommutationResult shift_commutation_check(const OperatorMatrix& T, int interior_margin,
                                          double tol = 1e-10);

/// Same check with explicit shifts.
CommutationResult shift_commutation_check(const OperatorMatrix& T,
                                          const std::vector<GroupElement>& test_shifts,
                                          int interior_margin, double tol = 1e-10);

/// The Hankel symbol induced by re-indexing rows of H_phi through the cone
/// bijection X- = -X+ - chi1: a(chi) = phi^(-chi - chi1), restricted to X+.
FourierCoeffs reindexed_symbol(const FourierCoeffs& phi, const OrderSpec& spec);

/// Relabels the rows of an H_phi section via eta |-> -eta - chi1, producing a
/// square Hankel section on the positive sub-slab where the bijection lands.
/// Requires a smallest positive element.
OperatorMatrix reindex_rows(const OperatorMatrix& hphi, const OrderSpec& spec);

}  // namespace conehankel
