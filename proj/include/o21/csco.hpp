#pragma once

#include <string>
#include <vector>

#include "o21/spectral.hpp"

namespace o21 {

// Joint eigenvalue label of the commuting chain L_q^2, ..., L_3^2, L_12.
// ells holds (l_q, ..., l_2); it is empty for q = 1 and |m| = l_2 always.
struct CscoLabel {
  std::vector<int> ells;
  int m = 0;
};

bool operator==(const CscoLabel& a, const CscoLabel& b);
// Report order: descending lexicographically on ells, then descending m.
bool label_less(const CscoLabel& a, const CscoLabel& b);
std::string label_str(const CscoLabel& label);

struct LabeledVector {
  CscoLabel label;
  StateVector vec;  // unit norm, phase-fixed
  double residual;  // max eigen-relation deviation over the chain
};

struct LabeledBasis {
  int q = 0;
  int n = 0;
  SectorPtr sector;
  std::vector<LabeledVector> vectors;
  bool pass = false;
};

// L_{q'}^2 over modes 1..q' embedded in sector (q,n); requires 2 <= q' < q.
LinearOperator embed_suboperator(int q_prime, int q, int n,
                                 std::size_t cap = kDefaultSectorCap);

// Diagonalizes the chain top-down by recursive eigenspace refinement and
// labels every vector with snapped integer eigenvalues.  Snapping failures
// and residuals above tol abort with a diagnostic naming the offending
// eigenspace.  For q = 2 the chain is L_12 alone; q = 1 yields the single
// trivial label.
LabeledBasis joint_diagonalize(int q, int n, double tol = kEigenvalueTol,
                               std::size_t cap = kDefaultSectorCap);

// All weakly decreasing integer chains l_q = ell_q >= l_{q-1} >= ... >= l_2
// >= 0, each expanded to m = +-l_2.  The list size equals degeneracy(q,
// ell_q).  Supports q >= 2 (the q = 2 chain is the single entry (ell_q)).
std::vector<CscoLabel> enumerate_chains(int q, int ell_q);

// Union of enumerate_chains(q, l) over l = n, n-2, ..., sorted in report
// order; the trivial label for q = 1.
std::vector<CscoLabel> expected_sector_labels(int q, int n);

struct CscoVerification {
  int q = 0;
  int n = 0;
  LabeledBasis basis;
  std::vector<CscoLabel> missing;  // expected but not produced
  std::vector<CscoLabel> extra;    // produced but not expected
  double max_parity_residual = 0.0;
  bool pass = false;
};

// Checks that the joint-diagonalization label multiset equals the chain
// enumeration, that labels are pairwise distinct and obey the chain
// inequality with |m| = l_2, and that parity maps each labeled vector onto
// its m -> -m partner up to phase.
CscoVerification verify_csco(int q, int n, double tol = kEigenvalueTol,
                             std::size_t cap = kDefaultSectorCap);

}  // namespace o21
