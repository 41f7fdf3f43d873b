#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

namespace o21 {

using Complex = std::complex<double>;
using SparseMatrix = Eigen::SparseMatrix<Complex>;
using StateVector = Eigen::VectorXcd;

// Sparse entries at or below this magnitude are dropped from storage.
inline constexpr double kDropTolerance = 1e-14;

// Default guard on sector dimension; enumerate_sector refuses anything larger.
inline constexpr std::size_t kDefaultSectorCap = 10000;

// Thrown when a requested sector would exceed the configured dimension cap.
class SectorCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// C(n, k) in exact integer arithmetic; throws std::overflow_error when the
// result does not fit in 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Occupations (n_1, ..., n_q) of a q-mode number state.  Mode indices are
// 1-based throughout.
class OccupationVector {
 public:
  explicit OccupationVector(std::vector<int> occ);

  int modes() const { return static_cast<int>(occ_.size()); }
  int occupation(int mode) const;
  int total() const;
  const std::vector<int>& occ() const { return occ_; }

  OccupationVector lowered(int mode) const;  // requires occupation(mode) > 0
  OccupationVector raised(int mode) const;

  std::string str() const;  // "|n_1,n_2,...,n_q>"

  // Basis order: states are compared reading occupations from mode q down to
  // mode 1, ascending, so the state with all quanta in mode 1 comes first and
  // the state with all quanta in mode q comes last.
  friend bool operator<(const OccupationVector& a, const OccupationVector& b);
  friend bool operator==(const OccupationVector& a, const OccupationVector& b);

 private:
  std::vector<int> occ_;
};

class Sector;
using SectorPtr = std::shared_ptr<const Sector>;

// All q-mode number states with fixed total occupation n, in a fixed
// deterministic order, together with the inverse index map.
class Sector {
 public:
  int q() const { return q_; }
  int n() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<OccupationVector>& basis() const { return basis_; }
  const OccupationVector& state(std::size_t i) const;
  std::size_t index_of(const OccupationVector& v) const;
  bool contains(const OccupationVector& v) const;
  std::string str() const;  // "(q=3,n=2)"

  // Sectors are value-identified by (q, n); the basis order is a function of
  // those two numbers.
  friend bool operator==(const Sector& a, const Sector& b) {
    return a.q_ == b.q_ && a.n_ == b.n_;
  }

  friend SectorPtr enumerate_sector(int q, int n, std::size_t cap);

 private:
  Sector(int q, int n);

  int q_;
  int n_;
  std::vector<OccupationVector> basis_;
  std::map<OccupationVector, std::size_t> index_;
};

SectorPtr enumerate_sector(int q, int n, std::size_t cap = kDefaultSectorCap);

// Sector reached by removing/adding one quantum.  lower_sector maps (q,0) to
// itself so that annihilation on the vacuum stays well-typed (as a zero map).
SectorPtr lower_sector(const SectorPtr& s, std::size_t cap = kDefaultSectorCap);
SectorPtr raise_sector(const SectorPtr& s, std::size_t cap = kDefaultSectorCap);

// A sparse complex matrix with explicit domain and codomain sectors.
// Immutable after construction; safe for concurrent reads.
class LinearOperator {
 public:
  LinearOperator(SectorPtr domain, SectorPtr codomain, SparseMatrix m);

  static LinearOperator zero(SectorPtr domain, SectorPtr codomain);
  static LinearOperator identity(SectorPtr s);
  static LinearOperator diagonal(SectorPtr s, const std::vector<Complex>& d);

  const Sector& domain() const { return *domain_; }
  const Sector& codomain() const { return *codomain_; }
  const SectorPtr& domain_ptr() const { return domain_; }
  const SectorPtr& codomain_ptr() const { return codomain_; }

  const SparseMatrix& matrix() const { return matrix_; }
  Eigen::MatrixXcd dense() const;
  std::size_t nonzeros() const;
  double max_abs_entry() const;

 private:
  SectorPtr domain_;
  SectorPtr codomain_;
  SparseMatrix matrix_;
};

// Single-mode ladder operators.  annihilator maps (q,n) -> (q,n-1) with
// amplitude sqrt(n_i); on the vacuum sector it is the zero map (q,0) -> (q,0).
// creator maps (q,n) -> (q,n+1) with amplitude sqrt(n_i+1).
LinearOperator annihilator(int mode, const SectorPtr& from,
                           std::size_t cap = kDefaultSectorCap);
LinearOperator annihilator(int mode, const SectorPtr& from, const SectorPtr& to);
LinearOperator creator(int mode, const SectorPtr& from,
                       std::size_t cap = kDefaultSectorCap);
LinearOperator creator(int mode, const SectorPtr& from, const SectorPtr& to);

// Sparse operator arithmetic.  Sector mismatches are hard errors.
LinearOperator op_add(const LinearOperator& a, const LinearOperator& b);
LinearOperator op_sub(const LinearOperator& a, const LinearOperator& b);
LinearOperator op_scale(Complex c, const LinearOperator& a);
LinearOperator op_compose(const LinearOperator& a, const LinearOperator& b);  // a after b
LinearOperator op_adjoint(const LinearOperator& a);

// a*b - b*a.  Defined only when both products exist and have equal shapes,
// i.e. for endomorphisms of one common sector; sector-changing brackets are
// assembled from explicit path compositions instead.
LinearOperator op_commutator(const LinearOperator& a, const LinearOperator& b);

StateVector apply(const LinearOperator& op, const StateVector& v);

// [a_i, a_j^dagger] assembled on the sector of `s` through its n+-1
// neighbours; equals delta_ij times the identity.
LinearOperator ladder_commutator(int i, int j, const SectorPtr& s,
                                 std::size_t cap = kDefaultSectorCap);

}  // namespace o21
