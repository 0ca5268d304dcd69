#include "conehankel/operators.hpp"

#include <cmath>

namespace conehankel {

void OperatorMatrix::check_invariants() const {
  if (data.rows() != rows.size() || data.cols() != cols.size())
    throw InternalError("operator matrix shape disagrees with its slabs");
  if (!data.allFinite()) throw InternalError("operator matrix holds non-finite entries");
}

OperatorMatrix hankel_matrix(const FourierCoeffs& a, const ConeSlab& slab) {
  if (slab.sign != ConeSign::Positive)
    throw InvalidInput("hankel_matrix needs a positive slab");
  if (a.dim() != slab.spec.dim()) throw InvalidInput("symbol/slab dimension mismatch");
  for (const auto& [n, c] : a.entries()) {
    if (slab.spec.sign(n) < 0)
      throw InvalidInput("hankel symbol has mass at negative frequency " + to_string(n));
  }
  OperatorMatrix M{slab, slab, MatrixXc::Zero(slab.size(), slab.size()), "hankel"};
  for (Index i = 0; i < slab.size(); ++i) {
    for (Index j = 0; j < slab.size(); ++j) {
      M.data(i, j) = a.at(slab[i] + slab[j]);
    }
  }
  return M;
}

Complex hankel_form(const FourierCoeffs& k, const ConeSlab& slab,
                    const VectorXc& a, const VectorXc& b) {
  if (slab.sign != ConeSign::Positive) throw InvalidInput("hankel_form needs a positive slab");
  if (a.size() != slab.size() || b.size() != slab.size())
    throw InvalidInput("hankel_form vectors must be indexed by the slab");
  Complex s = 0;
  for (Index i = 0; i < slab.size(); ++i) {
    if (a(i) == Complex(0.0)) continue;
    for (Index j = 0; j < slab.size(); ++j) {
      s += k.at(slab[i] + slab[j]) * a(i) * b(j);
    }
  }
  return s;
}

OperatorMatrix hphi_matrix(const FourierCoeffs& phi, const OrderSpec& spec, int radius) {
  if (phi.dim() != spec.dim()) throw InvalidInput("symbol/spec dimension mismatch");
  ConeSlab rows = cone_slab(spec, ConeSign::Negative, radius);
  ConeSlab cols = cone_slab(spec, ConeSign::Positive, radius);
  OperatorMatrix M{rows, cols, MatrixXc::Zero(rows.size(), cols.size()), "hphi"};
  for (Index i = 0; i < rows.size(); ++i) {
    for (Index j = 0; j < cols.size(); ++j) {
      M.data(i, j) = phi.at(rows[i] - cols[j]);
    }
  }
  return M;
}

VectorXc gnu_apply(const FourierCoeffs& nu, const ConeSlab& domain, const VectorXc& f,
                   const ConeSlab& out_slab) {
  if (domain.sign != ConeSign::Positive || out_slab.sign != ConeSign::Negative)
    throw InvalidInput("gnu_apply maps a positive slab into a negative slab");
  if (f.size() != domain.size()) throw InvalidInput("gnu_apply vector/slab size mismatch");
  VectorXc out = VectorXc::Zero(out_slab.size());
  for (const auto& [m, c] : nu.entries()) {
    for (Index j = 0; j < domain.size(); ++j) {
      if (f(j) == Complex(0.0)) continue;
      if (auto row = out_slab.find(m + domain[j])) out(*row) += c * f(j);
    }
  }
  return out;
}

OperatorMatrix toeplitz_matrix(const FourierCoeffs& phi, const ConeSlab& slab) {
  if (slab.sign != ConeSign::Positive) throw InvalidInput("toeplitz_matrix needs a positive slab");
  if (phi.dim() != slab.spec.dim()) throw InvalidInput("symbol/slab dimension mismatch");
  OperatorMatrix M{slab, slab, MatrixXc::Zero(slab.size(), slab.size()), "toeplitz"};
  for (Index i = 0; i < slab.size(); ++i) {
    for (Index j = 0; j < slab.size(); ++j) {
      M.data(i, j) = phi.at(slab[i] - slab[j]);
    }
  }
  return M;
}

OperatorMatrix gamma_psi_matrix(const FourierCoeffs& psi, const ConeSlab& slab) {
  if (slab.sign != ConeSign::Positive)
    throw InvalidInput("gamma_psi_matrix needs a positive slab");
  if (psi.dim() != slab.spec.dim()) throw InvalidInput("symbol/slab dimension mismatch");
  OperatorMatrix M{slab, slab, MatrixXc::Zero(slab.size(), slab.size()), "gamma_psi"};
  for (Index i = 0; i < slab.size(); ++i) {
    for (Index j = 0; j < slab.size(); ++j) {
      M.data(i, j) = psi.at(-(slab[i] + slab[j]));
    }
  }
  return M;
}

OperatorMatrix shift_matrix(const GroupElement& chi, const ConeSlab& slab) {
  if (slab.sign != ConeSign::Positive) throw InvalidInput("shift_matrix needs a positive slab");
  if (slab.spec.sign(chi) < 0)
    throw InvalidInput("shift character " + to_string(chi) + " is not in the positive cone");
  OperatorMatrix M{slab, slab, MatrixXc::Zero(slab.size(), slab.size()), "shift"};
  for (Index j = 0; j < slab.size(); ++j) {
    if (auto i = slab.find(slab[j] + chi)) M.data(*i, j) = 1.0;
  }
  return M;
}

CommutationResult shift_commutation_check(const OperatorMatrix& T,
                                          const std::vector<GroupElement>& test_shifts,
                                          int interior_margin, double tol) {
  T.check_invariants();
  if (T.rows.sign != ConeSign::Positive || T.cols.sign != ConeSign::Positive ||
      T.data.rows() != T.data.cols())
    throw InvalidInput("commutation check needs a square positive-slab section");
  const OrderSpec& spec = T.rows.spec;

  // interior = elements whose box coordinates leave room for every shift
  Coord interior_bound = -1;
  for (const auto& n : T.rows.elements)
    interior_bound = std::max(interior_bound, n.cwiseAbs().maxCoeff());
  interior_bound -= interior_margin;
  std::vector<Index> interior;
  for (Index i = 0; i < T.rows.size(); ++i) {
    if (T.rows[i].cwiseAbs().maxCoeff() <= interior_bound) interior.push_back(i);
  }
  if (interior.empty()) throw InvalidInput("interior margin leaves no test indices");

  CommutationResult result;
  for (const auto& chi : test_shifts) {
    if (spec.sign(chi) < 0)
      throw InvalidInput("test shift " + to_string(chi) + " is not in the positive cone");
    for (Index ei : interior) {
      auto row_shift = T.rows.find(T.rows[ei] + chi);
      if (!row_shift) continue;
      for (Index xi : interior) {
        auto col_shift = T.cols.find(T.cols[xi] + chi);
        if (!col_shift) continue;
        Complex lhs = T.data(*row_shift, xi);   // <S* T e_xi, e_eta>
        Complex rhs = T.data(ei, *col_shift);   // <T S e_xi, e_eta>
        double r = std::abs(lhs - rhs);
        ++result.checked;
        if (r > result.max_residual) {
          result.max_residual = r;
          if (r > tol) result.witness = CommutationWitness{chi, T.rows[ei], T.cols[xi], lhs, rhs};
        }
      }
    }
  }
  result.commutes = result.max_residual <= tol;
  if (result.commutes) result.witness.reset();
  return result;
}

CommutationResult shift_commutation_check(const OperatorMatrix& T, int interior_margin,
                                          double tol) {
  std::vector<GroupElement> shifts;
  for (const auto& n : cone_slab(T.rows.spec, ConeSign::Positive, interior_margin).elements) {
    if (!n.isZero()) shifts.push_back(n);
  }
  return shift_commutation_check(T, shifts, interior_margin, tol);
}

FourierCoeffs reindexed_symbol(const FourierCoeffs& phi, const OrderSpec& spec) {
  auto sp = smallest_positive(spec, 1);
  if (!sp.element) throw InvalidInput("re-indexing requires a smallest positive element");
  const GroupElement chi1 = *sp.element;
  FourierCoeffs a(phi.dim());
  for (const auto& [m, c] : phi.entries()) {
    if (spec.sign(m) >= 0) continue;  // H_phi ignores the analytic part
    a.set(-m - chi1, c);
  }
  return a;
}

OperatorMatrix reindex_rows(const OperatorMatrix& hphi, const OrderSpec& spec) {
  hphi.check_invariants();
  if (hphi.rows.sign != ConeSign::Negative || hphi.cols.sign != ConeSign::Positive)
    throw InvalidInput("reindex_rows expects an H_phi section (negative rows, positive columns)");
  auto sp = smallest_positive(spec, 1);
  if (!sp.element) throw InvalidInput("re-indexing requires a smallest positive element");
  const GroupElement chi1 = *sp.element;

  // Common index set: columns chi whose partner -chi - chi1 is a usable row.
  std::vector<GroupElement> common;
  for (const auto& chi : hphi.cols.elements) {
    GroupElement eta = -chi - chi1;
    if (hphi.rows.find(eta)) common.push_back(chi);
  }
  if (common.empty()) throw InvalidInput("slabs are not bijection-compatible: empty overlap");
  ConeSlab square = ConeSlab::from_elements(spec, ConeSign::Positive, std::move(common));

  OperatorMatrix M{square, square, MatrixXc::Zero(square.size(), square.size()),
                   hphi.label + "/reindexed"};
  for (Index i = 0; i < square.size(); ++i) {
    Index row = *hphi.rows.find(-square[i] - chi1);
    for (Index j = 0; j < square.size(); ++j) {
      M.data(i, j) = hphi.data(row, *hphi.cols.find(square[j]));
    }
  }
  return M;
}

}  // namespace conehankel
