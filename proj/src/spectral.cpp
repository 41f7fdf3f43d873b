#include "o21/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>

namespace o21 {

std::uint64_t degeneracy(int q, int ell) {
  if (q < 2) throw std::invalid_argument("degeneracy is defined for q >= 2");
  if (ell < 0) throw std::invalid_argument("degeneracy requires ell >= 0");
  if (q == 2) return ell == 0 ? 1 : 2;
  // (q+2l-2) C(q+l-3, l) / (q-2); the division is exact.
  std::uint64_t c = binomial(static_cast<std::uint64_t>(q + ell - 3),
                             static_cast<std::uint64_t>(ell));
  unsigned __int128 num =
      static_cast<unsigned __int128>(q + 2 * ell - 2) * static_cast<unsigned __int128>(c);
  if (num % static_cast<unsigned __int128>(q - 2) != 0) {
    throw std::logic_error("degeneracy: inexact division");
  }
  num /= static_cast<unsigned __int128>(q - 2);
  if (num > std::numeric_limits<std::uint64_t>::max()) {
    throw std::overflow_error("degeneracy(" + std::to_string(q) + "," +
                              std::to_string(ell) + ") exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(num);
}

std::optional<int> snap_to_ell(double eigenvalue, int q, double tol) {
  if (q < 2) throw std::invalid_argument("snap_to_ell is defined for q >= 2");
  if (tol <= 0) throw std::invalid_argument("snap tolerance must be positive");
  // l = -(q-2)/2 + sqrt((q-2)^2/4 + eigenvalue); the map is strictly
  // increasing for l >= 0, so checking the rounded root and its neighbours
  // is enough.
  double half = 0.5 * (q - 2);
  double arg = half * half + eigenvalue;
  double root = arg > 0.0 ? std::sqrt(arg) - half : -half;
  long center = std::lround(std::max(0.0, root));
  std::optional<int> best;
  double best_residual = tol;
  for (long cand = std::max(0L, center - 1); cand <= center + 1; ++cand) {
    double exact = static_cast<double>(cand) * (static_cast<double>(cand) + q - 2);
    double residual = std::abs(exact - eigenvalue);
    if (residual < best_residual) {
      best = static_cast<int>(cand);
      best_residual = residual;
    }
  }
  return best;
}

std::vector<EigenvalueCluster> cluster_sorted_eigenvalues(const Eigen::VectorXd& values,
                                                          double gap) {
  std::vector<EigenvalueCluster> clusters;
  if (values.size() == 0) return clusters;
  int begin = 0;
  double sum = values[0];
  for (int i = 1; i <= values.size(); ++i) {
    if (i == values.size() || values[i] - values[i - 1] > gap) {
      int count = i - begin;
      clusters.push_back({sum / count, begin, count});
      if (i < values.size()) {
        begin = i;
        sum = values[i];
      }
    } else {
      sum += values[i];
    }
  }
  return clusters;
}

Eigen::VectorXd hermitian_eigenvalues(const LinearOperator& op) {
  if (!(op.domain() == op.codomain())) {
    throw std::invalid_argument("hermitian_eigenvalues requires a sector endomorphism");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(op.dense(),
                                                         Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigensolver did not converge on " + op.domain().str());
  }
  return solver.eigenvalues();
}

SpectrumReport sector_spectrum(int q, int n, double tol, std::size_t cap) {
  if (q < 2) throw std::invalid_argument("sector_spectrum requires q >= 2");
  if (n < 0) throw std::invalid_argument("sector_spectrum requires n >= 0");
  if (tol <= 0) throw std::invalid_argument("snap tolerance must be positive");

  SectorPtr s = enumerate_sector(q, n, cap);
  Eigen::VectorXd raw = hermitian_eigenvalues(angular_momentum_sq(s, cap));

  SpectrumReport report;
  report.q = q;
  report.n = n;
  for (const EigenvalueCluster& cluster : cluster_sorted_eigenvalues(raw)) {
    std::optional<int> ell = snap_to_ell(cluster.mean, q, tol);
    if (!ell) {
      for (int i = 0; i < cluster.count; ++i) {
        report.unsnapped.push_back(raw[cluster.begin + i]);
      }
      continue;
    }
    double exact = static_cast<double>(*ell) * (*ell + q - 2);
    double max_residual = 0.0;
    for (int i = 0; i < cluster.count; ++i) {
      max_residual = std::max(max_residual, std::abs(raw[cluster.begin + i] - exact));
    }
    report.lines.push_back({*ell, exact, cluster.count, max_residual});
  }
  std::sort(report.lines.begin(), report.lines.end(),
            [](const SpectrumLine& a, const SpectrumLine& b) { return a.ell > b.ell; });

  bool ok = report.unsnapped.empty();
  std::uint64_t total = 0;
  for (const SpectrumLine& line : report.lines) {
    total += static_cast<std::uint64_t>(line.multiplicity);
    if (line.ell < 0 || line.ell > n || (line.ell - n) % 2 != 0 ||
        static_cast<std::uint64_t>(line.multiplicity) != degeneracy(q, line.ell)) {
      ok = false;
    }
  }
  report.pass = ok && total == s->dim();
  return report;
}

StateVector fix_phase(StateVector v, double threshold) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    double mag = std::abs(v[i]);
    if (mag > threshold) {
      v *= std::conj(v[i]) / mag;
      break;
    }
  }
  return v;
}

LowestWeightState lowest_weight_state(int q, int ell, int sign, std::size_t cap) {
  if (q < 2) throw std::invalid_argument("lowest_weight_state requires q >= 2");
  if (ell < 0) throw std::invalid_argument("lowest_weight_state requires ell >= 0");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");

  SectorPtr s = enumerate_sector(q, 0, cap);
  StateVector v(1);
  v << Complex(1.0, 0.0);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int k = 0; k < ell; ++k) {
    SectorPtr next = raise_sector(s, cap);
    // a_+-^dag = (a_2^dag -+ i a_1^dag)/sqrt(2): conjugating a_+- flips the i.
    LinearOperator raise = op_scale(
        Complex(inv_sqrt2, 0.0),
        op_add(creator(2, s, next),
               op_scale(Complex(0.0, -static_cast<double>(sign)), creator(1, s, next))));
    v = o21::apply(raise, v);
    s = next;
  }
  LowestWeightState state;
  state.q = q;
  state.ell = ell;
  state.sign = sign;
  state.sector = s;
  state.raw_norm = v.norm();
  if (state.raw_norm > 0) v /= state.raw_norm;
  state.vec = fix_phase(std::move(v));
  return state;
}

}  // namespace o21
