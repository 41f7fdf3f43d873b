#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "o21/algebra.hpp"

namespace o21 {

// Default tolerance when snapping eigenvalues to l(l+q-2).
inline constexpr double kEigenvalueTol = 1e-8;

// Gap threshold for grouping raw eigenvalues before snapping.
inline constexpr double kClusterGap = 1e-6;

// Multiplicity of the angular momentum level l in q dimensions,
// (q+2l-2) (q+l-3)! / (l! (q-2)!), in exact integer arithmetic.  The q = 2
// formula degenerates at l = 0, where the value is 1; q = 1 is rejected.
// Throws std::overflow_error when the result does not fit in 64 bits.
std::uint64_t degeneracy(int q, int ell);

// Inverts l(l+q-2); returns the unique l >= 0 within tol of the eigenvalue,
// or nullopt.  Failure is a value, never an exception.
std::optional<int> snap_to_ell(double eigenvalue, int q, double tol);

struct EigenvalueCluster {
  double mean;
  int begin;  // index of first member in the sorted eigenvalue list
  int count;
};

// Greedy grouping of an ascending eigenvalue list: a new cluster starts
// whenever the gap to the previous value exceeds `gap`.
std::vector<EigenvalueCluster> cluster_sorted_eigenvalues(const Eigen::VectorXd& values,
                                                          double gap = kClusterGap);

struct SpectrumLine {
  int ell;
  double eigenvalue;  // exact snapped value l(l+q-2)
  int multiplicity;
  double max_residual;  // largest |raw - snapped| over the cluster
};

struct SpectrumReport {
  int q = 0;
  int n = 0;
  std::vector<SpectrumLine> lines;  // sorted by descending ell
  std::vector<double> unsnapped;    // raw eigenvalues that failed snapping
  bool pass = false;
};

// Diagonalizes L^2 on sector (q,n), snaps eigenvalues, and compares each
// multiplicity with degeneracy(q, ell).  Requires q >= 2.
SpectrumReport sector_spectrum(int q, int n, double tol = kEigenvalueTol,
                               std::size_t cap = kDefaultSectorCap);

struct LowestWeightState {
  int q = 0;
  int ell = 0;
  int sign = +1;  // +1 or -1: which circular mode was raised
  SectorPtr sector;
  StateVector vec;      // unit norm, phase-fixed
  double raw_norm = 1;  // norm of the unnormalized product state, sqrt(ell!)
};

// The state (a_+-^dag)^ell |0> in sector (q, ell): annihilated by K_-, with
// L^2 eigenvalue ell(ell+q-2), J3 eigenvalue ell/2 + q/4 and L_12 eigenvalue
// +-ell.  Requires q >= 2.
LowestWeightState lowest_weight_state(int q, int ell, int sign,
                                      std::size_t cap = kDefaultSectorCap);

// Rotates v so that its first coefficient of magnitude above `threshold` is
// real and positive.
StateVector fix_phase(StateVector v, double threshold = 1e-12);

// Eigenvalues of a Hermitian sector operator, ascending.  Throws
// std::runtime_error if the solver does not converge.
Eigen::VectorXd hermitian_eigenvalues(const LinearOperator& op);

}  // namespace o21
