#include "o21/fock.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace o21 {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;  // running product is C(n-k+i, i), exact
    if (result > std::numeric_limits<std::uint64_t>::max()) {
      throw std::overflow_error("binomial(" + std::to_string(n) + "," +
                                std::to_string(k) + ") exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(result);
}

OccupationVector::OccupationVector(std::vector<int> occ) : occ_(std::move(occ)) {
  if (occ_.empty()) throw std::invalid_argument("occupation vector must have at least one mode");
  for (int v : occ_) {
    if (v < 0) throw std::invalid_argument("occupation numbers must be non-negative");
  }
}

int OccupationVector::occupation(int mode) const {
  if (mode < 1 || mode > modes()) {
    throw std::invalid_argument("mode index " + std::to_string(mode) + " out of range");
  }
  return occ_[static_cast<std::size_t>(mode - 1)];
}

int OccupationVector::total() const {
  int t = 0;
  for (int v : occ_) t += v;
  return t;
}

OccupationVector OccupationVector::lowered(int mode) const {
  if (occupation(mode) <= 0) {
    throw std::invalid_argument("cannot lower empty mode " + std::to_string(mode));
  }
  std::vector<int> occ = occ_;
  --occ[static_cast<std::size_t>(mode - 1)];
  return OccupationVector(std::move(occ));
}

OccupationVector OccupationVector::raised(int mode) const {
  occupation(mode);  // range check
  std::vector<int> occ = occ_;
  ++occ[static_cast<std::size_t>(mode - 1)];
  return OccupationVector(std::move(occ));
}

std::string OccupationVector::str() const {
  std::ostringstream out;
  out << "|";
  for (std::size_t i = 0; i < occ_.size(); ++i) {
    if (i > 0) out << ",";
    out << occ_[i];
  }
  out << ">";
  return out.str();
}

bool operator<(const OccupationVector& a, const OccupationVector& b) {
  return std::lexicographical_compare(a.occ_.rbegin(), a.occ_.rend(),
                                      b.occ_.rbegin(), b.occ_.rend());
}

bool operator==(const OccupationVector& a, const OccupationVector& b) {
  return a.occ_ == b.occ_;
}

namespace {

// Emits states in basis order: modes q..2 ascending, mode 1 takes the rest.
void fill_states(int mode, int remaining, std::vector<int>& occ,
                 std::vector<OccupationVector>& out) {
  if (mode == 1) {
    occ[0] = remaining;
    out.emplace_back(occ);
    return;
  }
  for (int k = 0; k <= remaining; ++k) {
    occ[static_cast<std::size_t>(mode - 1)] = k;
    fill_states(mode - 1, remaining - k, occ, out);
  }
}

}  // namespace

Sector::Sector(int q, int n) : q_(q), n_(n) {
  std::vector<int> occ(static_cast<std::size_t>(q), 0);
  fill_states(q, n, occ, basis_);
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
}

const OccupationVector& Sector::state(std::size_t i) const {
  if (i >= basis_.size()) {
    throw std::out_of_range("state index " + std::to_string(i) + " out of range in " + str());
  }
  return basis_[i];
}

std::size_t Sector::index_of(const OccupationVector& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) {
    throw std::out_of_range("state " + v.str() + " not in sector " + str());
  }
  return it->second;
}

bool Sector::contains(const OccupationVector& v) const { return index_.count(v) > 0; }

std::string Sector::str() const {
  return "(q=" + std::to_string(q_) + ",n=" + std::to_string(n_) + ")";
}

SectorPtr enumerate_sector(int q, int n, std::size_t cap) {
  if (q < 1) throw std::invalid_argument("number of modes q must be >= 1");
  if (n < 0) throw std::invalid_argument("total occupation n must be >= 0");
  if (cap < 1) throw std::invalid_argument("sector dimension cap must be >= 1");
  std::uint64_t dim = binomial(static_cast<std::uint64_t>(n + q - 1),
                               static_cast<std::uint64_t>(q - 1));
  if (dim > cap) {
    throw SectorCapError("sector (q=" + std::to_string(q) + ",n=" + std::to_string(n) +
                         ") has dimension " + std::to_string(dim) +
                         ", above the cap of " + std::to_string(cap));
  }
  return SectorPtr(new Sector(q, n));
}

SectorPtr lower_sector(const SectorPtr& s, std::size_t cap) {
  if (s->n() == 0) return s;
  return enumerate_sector(s->q(), s->n() - 1, cap);
}

SectorPtr raise_sector(const SectorPtr& s, std::size_t cap) {
  return enumerate_sector(s->q(), s->n() + 1, cap);
}

LinearOperator::LinearOperator(SectorPtr domain, SectorPtr codomain, SparseMatrix m)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(m)) {
  if (!domain_ || !codomain_) throw std::invalid_argument("operator sectors must be non-null");
  if (matrix_.rows() != static_cast<Eigen::Index>(codomain_->dim()) ||
      matrix_.cols() != static_cast<Eigen::Index>(domain_->dim())) {
    throw std::invalid_argument("matrix shape does not match sectors " + codomain_->str() +
                                " x " + domain_->str());
  }
  matrix_.prune(Complex(1.0, 0.0), kDropTolerance);
  matrix_.makeCompressed();
}

LinearOperator LinearOperator::zero(SectorPtr domain, SectorPtr codomain) {
  SparseMatrix m(static_cast<Eigen::Index>(codomain->dim()),
                 static_cast<Eigen::Index>(domain->dim()));
  return LinearOperator(std::move(domain), std::move(codomain), std::move(m));
}

LinearOperator LinearOperator::identity(SectorPtr s) {
  SparseMatrix m(static_cast<Eigen::Index>(s->dim()), static_cast<Eigen::Index>(s->dim()));
  m.setIdentity();
  return LinearOperator(s, s, std::move(m));
}

LinearOperator LinearOperator::diagonal(SectorPtr s, const std::vector<Complex>& d) {
  if (d.size() != s->dim()) {
    throw std::invalid_argument("diagonal length does not match sector " + s->str());
  }
  std::vector<Eigen::Triplet<Complex>> trips;
  trips.reserve(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    trips.emplace_back(static_cast<int>(i), static_cast<int>(i), d[i]);
  }
  SparseMatrix m(static_cast<Eigen::Index>(s->dim()), static_cast<Eigen::Index>(s->dim()));
  m.setFromTriplets(trips.begin(), trips.end());
  return LinearOperator(s, s, std::move(m));
}

Eigen::MatrixXcd LinearOperator::dense() const { return Eigen::MatrixXcd(matrix_); }

std::size_t LinearOperator::nonzeros() const {
  return static_cast<std::size_t>(matrix_.nonZeros());
}

double LinearOperator::max_abs_entry() const {
  double m = 0.0;
  for (int k = 0; k < matrix_.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(matrix_, k); it; ++it) {
      m = std::max(m, std::abs(it.value()));
    }
  }
  return m;
}

namespace {

void check_ladder_target(const Sector& from, const Sector& to, int shift) {
  int expected = from.n() + shift;
  if (shift < 0 && expected < 0) expected = 0;
  if (to.q() != from.q() || to.n() != expected) {
    throw std::invalid_argument("ladder target sector " + to.str() +
                                " does not match source " + from.str());
  }
}

}  // namespace

LinearOperator annihilator(int mode, const SectorPtr& from, std::size_t cap) {
  return annihilator(mode, from, lower_sector(from, cap));
}

LinearOperator annihilator(int mode, const SectorPtr& from, const SectorPtr& to) {
  if (mode < 1 || mode > from->q()) {
    throw std::invalid_argument("mode index " + std::to_string(mode) +
                                " out of range for sector " + from->str());
  }
  check_ladder_target(*from, *to, -1);
  std::vector<Eigen::Triplet<Complex>> trips;
  if (from->n() > 0) {
    for (std::size_t col = 0; col < from->dim(); ++col) {
      const OccupationVector& state = from->state(col);
      int occ = state.occupation(mode);
      if (occ == 0) continue;
      std::size_t row = to->index_of(state.lowered(mode));
      trips.emplace_back(static_cast<int>(row), static_cast<int>(col),
                         Complex(std::sqrt(static_cast<double>(occ)), 0.0));
    }
  }
  SparseMatrix m(static_cast<Eigen::Index>(to->dim()), static_cast<Eigen::Index>(from->dim()));
  m.setFromTriplets(trips.begin(), trips.end());
  return LinearOperator(from, to, std::move(m));
}

LinearOperator creator(int mode, const SectorPtr& from, std::size_t cap) {
  return creator(mode, from, raise_sector(from, cap));
}

LinearOperator creator(int mode, const SectorPtr& from, const SectorPtr& to) {
  if (mode < 1 || mode > from->q()) {
    throw std::invalid_argument("mode index " + std::to_string(mode) +
                                " out of range for sector " + from->str());
  }
  check_ladder_target(*from, *to, +1);
  std::vector<Eigen::Triplet<Complex>> trips;
  trips.reserve(from->dim());
  for (std::size_t col = 0; col < from->dim(); ++col) {
    const OccupationVector& state = from->state(col);
    int occ = state.occupation(mode);
    std::size_t row = to->index_of(state.raised(mode));
    trips.emplace_back(static_cast<int>(row), static_cast<int>(col),
                       Complex(std::sqrt(static_cast<double>(occ + 1)), 0.0));
  }
  SparseMatrix m(static_cast<Eigen::Index>(to->dim()), static_cast<Eigen::Index>(from->dim()));
  m.setFromTriplets(trips.begin(), trips.end());
  return LinearOperator(from, to, std::move(m));
}

namespace {

void require_same_shape(const LinearOperator& a, const LinearOperator& b,
                        const char* what) {
  if (!(a.domain() == b.domain()) || !(a.codomain() == b.codomain())) {
    throw std::invalid_argument(std::string("sector mismatch in ") + what + ": " +
                                a.codomain().str() + "x" + a.domain().str() + " vs " +
                                b.codomain().str() + "x" + b.domain().str());
  }
}

}  // namespace

LinearOperator op_add(const LinearOperator& a, const LinearOperator& b) {
  require_same_shape(a, b, "op_add");
  SparseMatrix m = a.matrix() + b.matrix();
  return LinearOperator(a.domain_ptr(), a.codomain_ptr(), std::move(m));
}

LinearOperator op_sub(const LinearOperator& a, const LinearOperator& b) {
  require_same_shape(a, b, "op_sub");
  SparseMatrix m = a.matrix() - b.matrix();
  return LinearOperator(a.domain_ptr(), a.codomain_ptr(), std::move(m));
}

LinearOperator op_scale(Complex c, const LinearOperator& a) {
  SparseMatrix m = a.matrix() * c;
  return LinearOperator(a.domain_ptr(), a.codomain_ptr(), std::move(m));
}

LinearOperator op_compose(const LinearOperator& a, const LinearOperator& b) {
  if (!(a.domain() == b.codomain())) {
    throw std::invalid_argument("sector mismatch composing: inner sectors " +
                                a.domain().str() + " vs " + b.codomain().str());
  }
  SparseMatrix m = a.matrix() * b.matrix();
  return LinearOperator(b.domain_ptr(), a.codomain_ptr(), std::move(m));
}

LinearOperator op_adjoint(const LinearOperator& a) {
  SparseMatrix m = a.matrix().adjoint();
  return LinearOperator(a.codomain_ptr(), a.domain_ptr(), std::move(m));
}

LinearOperator op_commutator(const LinearOperator& a, const LinearOperator& b) {
  if (!(a.domain() == b.codomain()) || !(b.domain() == a.codomain())) {
    throw std::invalid_argument("op_commutator: products a*b and b*a are not both defined");
  }
  LinearOperator ab = op_compose(a, b);
  LinearOperator ba = op_compose(b, a);
  require_same_shape(ab, ba, "op_commutator");
  return op_sub(ab, ba);
}

StateVector apply(const LinearOperator& op, const StateVector& v) {
  if (v.size() != static_cast<Eigen::Index>(op.domain().dim())) {
    throw std::invalid_argument("state vector length " + std::to_string(v.size()) +
                                " does not match sector " + op.domain().str());
  }
  return op.matrix() * v;
}

LinearOperator ladder_commutator(int i, int j, const SectorPtr& s, std::size_t cap) {
  SectorPtr up = raise_sector(s, cap);
  LinearOperator raise_then_lower =
      op_compose(annihilator(i, up, s), creator(j, s, up));
  if (s->n() == 0) return raise_then_lower;  // a_j^dag a_i kills the vacuum
  SectorPtr down = lower_sector(s, cap);
  LinearOperator lower_then_raise =
      op_compose(creator(j, down, s), annihilator(i, s, down));
  return op_sub(raise_then_lower, lower_then_raise);
}

}  // namespace o21
