#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "o21/fock.hpp"

namespace o21 {

// Default tolerance for operator identities; residuals are pure rounding.
inline constexpr double kIdentityTol = 1e-10;

// Total number operator, diagonal with constant value n on sector (q,n).
LinearOperator number_operator(const SectorPtr& s);

// Compact o(2,1) generator, diagonal with constant value n/2 + q/4.
LinearOperator j3_operator(const SectorPtr& s);

// Mode-1 reflection, diagonal with entries (-1)^{n_1}.
LinearOperator parity_op(const SectorPtr& s);

// Sum_i a_i a_i : (q,n) -> (q,n-2); the zero map for n < 2.
LinearOperator pair_annihilator(const SectorPtr& s, std::size_t cap = kDefaultSectorCap);

// Sum_i a_i^dag a_i^dag : (q,n) -> (q,n+2).
LinearOperator pair_creator(const SectorPtr& s, std::size_t cap = kDefaultSectorCap);

// Angular momentum generator L_ij = -i (a_i^dag a_j - a_j^dag a_i), Hermitian,
// sector-preserving.  Requires i != j.
LinearOperator l_generator(int i, int j, const SectorPtr& s,
                           std::size_t cap = kDefaultSectorCap);

// Circular modes a_+- = (a_2 +- i a_1)/sqrt(2) as maps (q,n) -> (q,n-1).
// Requires q >= 2.
std::pair<LinearOperator, LinearOperator> plus_minus_modes(
    const SectorPtr& s, std::size_t cap = kDefaultSectorCap);

// L_q^2 built as N(N+q-2) - A^dag A through the n-2 sector.
LinearOperator angular_momentum_sq(const SectorPtr& s, std::size_t cap = kDefaultSectorCap);

// L_q^2 built independently as (1/2) Sum_{ij} L_ij^2 = Sum_{i<j} L_ij^2.
LinearOperator angular_momentum_sq_from_generators(const SectorPtr& s,
                                                   std::size_t cap = kDefaultSectorCap);

// L_k^2 over modes 1..k only, acting on the full (q,n) sector; 2 <= k <= q.
LinearOperator angular_momentum_sq_subset(int k, const SectorPtr& s,
                                          std::size_t cap = kDefaultSectorCap);

// Every named operator of the algebra on one sector.
struct AlgebraSet {
  SectorPtr sector;
  LinearOperator number_op;    // N : n -> n
  LinearOperator pair_lower;   // A : n -> n-2
  LinearOperator pair_raise;   // A^dag : n -> n+2
  LinearOperator k_minus;      // A/2 : n -> n-2
  LinearOperator k_plus;       // A^dag/2 : n -> n+2
  LinearOperator k_plus_into;  // adjoint of k_minus : n-2 -> n
  LinearOperator j3;           // n -> n
  LinearOperator parity;       // n -> n
  LinearOperator lsq;          // L^2, number-operator form
  LinearOperator lsq_generators;
  std::map<std::pair<int, int>, LinearOperator> l;  // L_ij for i < j
};

AlgebraSet build_algebra(int q, int n, std::size_t cap = kDefaultSectorCap);

struct SectorResidual {
  int n;
  double residual;
};

struct IdentityCheck {
  std::string name;
  std::vector<SectorResidual> sectors;
  double max_residual = 0.0;
  bool pass = true;
};

struct IdentityReport {
  int q = 0;
  int n_max = 0;
  double tol = 0.0;
  std::vector<IdentityCheck> checks;
  bool pass = true;
};

// Checks, per sector n <= n_max, the bracket relations of N and A, the three
// o(2,1) relations assembled from K_+- path compositions, the Casimir
// relation for L^2 in lowered and symmetric form, agreement of the two L^2
// constructions, and the parity (anti)commutation rules.  Relations that need
// the n+2 neighbour are evaluated for n <= n_max-2.
IdentityReport verify_algebra(int q, int n_max, double tol = kIdentityTol,
                              std::size_t cap = kDefaultSectorCap, int workers = 1);

}  // namespace o21
