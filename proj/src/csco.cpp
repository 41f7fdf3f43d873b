#include "o21/csco.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace o21 {

bool operator==(const CscoLabel& a, const CscoLabel& b) {
  return a.ells == b.ells && a.m == b.m;
}

bool label_less(const CscoLabel& a, const CscoLabel& b) {
  if (a.ells != b.ells) {
    return std::lexicographical_compare(b.ells.begin(), b.ells.end(), a.ells.begin(),
                                        a.ells.end());
  }
  return a.m > b.m;
}

std::string label_str(const CscoLabel& label) {
  std::ostringstream out;
  out << "(";
  for (int ell : label.ells) out << ell << ",";
  out << "m=" << label.m << ")";
  return out.str();
}

LinearOperator embed_suboperator(int q_prime, int q, int n, std::size_t cap) {
  if (q_prime < 2 || q_prime >= q) {
    throw std::invalid_argument("embed_suboperator requires 2 <= q' < q");
  }
  SectorPtr s = enumerate_sector(q, n, cap);
  return angular_momentum_sq_subset(q_prime, s, cap);
}

namespace {

struct Subspace {
  Eigen::MatrixXcd frame;  // orthonormal columns spanning the subspace
  std::vector<int> ells;   // snapped labels collected so far, top-down
};

std::string subspace_str(const std::vector<int>& ells) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < ells.size(); ++i) {
    if (i > 0) out << ",";
    out << ells[i];
  }
  out << "]";
  return out.str();
}

// Diagonalizes op projected onto the subspace frame and splits the frame by
// eigenvalue cluster.  snap_dim > 0 snaps to l(l+snap_dim-2); snap_dim == 0
// snaps to the nearest integer (the L_12 level).
struct RefinedPiece {
  Eigen::MatrixXcd frame;
  int value;
};

std::vector<RefinedPiece> refine(const Subspace& sub, const LinearOperator& op,
                                 int snap_dim, double tol, const std::string& op_name) {
  Eigen::MatrixXcd projected =
      sub.frame.adjoint() * (op.matrix() * sub.frame);
  projected = 0.5 * (projected + projected.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(projected);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigensolver did not converge for " + op_name +
                             " in subspace " + subspace_str(sub.ells));
  }
  Eigen::MatrixXcd vectors = sub.frame * solver.eigenvectors();

  std::vector<RefinedPiece> pieces;
  for (const EigenvalueCluster& cluster :
       cluster_sorted_eigenvalues(solver.eigenvalues())) {
    int value = 0;
    if (snap_dim > 0) {
      std::optional<int> ell = snap_to_ell(cluster.mean, snap_dim, tol);
      if (!ell) {
        std::ostringstream msg;
        msg << "eigenvalue " << cluster.mean << " of " << op_name << " in subspace "
            << subspace_str(sub.ells) << " does not snap to l(l+" << (snap_dim - 2)
            << ")";
        throw std::runtime_error(msg.str());
      }
      value = *ell;
    } else {
      double rounded = std::round(cluster.mean);
      if (std::abs(cluster.mean - rounded) >= tol) {
        std::ostringstream msg;
        msg << "eigenvalue " << cluster.mean << " of " << op_name << " in subspace "
            << subspace_str(sub.ells) << " is not near an integer";
        throw std::runtime_error(msg.str());
      }
      value = static_cast<int>(rounded);
    }
    pieces.push_back({vectors.middleCols(cluster.begin, cluster.count), value});
  }
  return pieces;
}

}  // namespace

LabeledBasis joint_diagonalize(int q, int n, double tol, std::size_t cap) {
  if (q < 1) throw std::invalid_argument("joint_diagonalize requires q >= 1");
  if (n < 0) throw std::invalid_argument("joint_diagonalize requires n >= 0");
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");

  SectorPtr s = enumerate_sector(q, n, cap);
  LabeledBasis out;
  out.q = q;
  out.n = n;
  out.sector = s;

  if (q == 1) {
    // No rotations in one dimension: the chain is empty and the sector is a
    // single trivially-labeled state.
    StateVector v = StateVector::Zero(1);
    v[0] = Complex(1.0, 0.0);
    out.vectors.push_back({CscoLabel{{}, 0}, v, 0.0});
    out.pass = true;
    return out;
  }

  // Chain operators, top-down: L_q^2, L_{q-1}^2, ..., L_3^2, then L_12.
  std::vector<LinearOperator> chain;
  std::vector<int> snap_dims;
  std::vector<std::string> names;
  for (int k = q; k >= 3; --k) {
    chain.push_back(angular_momentum_sq_subset(k, s, cap));
    snap_dims.push_back(k);
    names.push_back("L_" + std::to_string(k) + "^2");
  }
  chain.push_back(l_generator(1, 2, s, cap));
  snap_dims.push_back(0);
  names.push_back("L_12");

  std::vector<Subspace> current;
  current.push_back({Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(s->dim()),
                                                static_cast<Eigen::Index>(s->dim())),
                     {}});
  for (std::size_t level = 0; level < chain.size(); ++level) {
    std::vector<Subspace> refined;
    for (const Subspace& sub : current) {
      for (RefinedPiece& piece :
           refine(sub, chain[level], snap_dims[level], tol, names[level])) {
        Subspace next{std::move(piece.frame), sub.ells};
        next.ells.push_back(piece.value);
        refined.push_back(std::move(next));
      }
    }
    current = std::move(refined);
  }

  for (const Subspace& sub : current) {
    // sub.ells is (l_q, ..., l_3, m); l_2 = |m| completes the label.
    int m = sub.ells.back();
    CscoLabel label;
    label.ells.assign(sub.ells.begin(), sub.ells.end() - 1);
    label.ells.push_back(std::abs(m));
    label.m = m;
    for (Eigen::Index col = 0; col < sub.frame.cols(); ++col) {
      StateVector v = fix_phase(sub.frame.col(col));
      // Residual against every chain member at the snapped eigenvalue.
      double residual = 0.0;
      for (std::size_t level = 0; level < chain.size(); ++level) {
        int value = sub.ells[level];
        double exact =
            snap_dims[level] > 0
                ? static_cast<double>(value) * (value + snap_dims[level] - 2)
                : static_cast<double>(value);
        StateVector deviation = o21::apply(chain[level], v) - exact * v;
        residual = std::max(residual, deviation.cwiseAbs().maxCoeff());
      }
      if (residual >= tol) {
        std::ostringstream msg;
        msg << "joint eigenvector " << label_str(label) << " in " << s->str()
            << " has residual " << residual << " above tolerance " << tol;
        throw std::runtime_error(msg.str());
      }
      out.vectors.push_back({label, std::move(v), residual});
    }
  }

  std::sort(out.vectors.begin(), out.vectors.end(),
            [](const LabeledVector& a, const LabeledVector& b) {
              return label_less(a.label, b.label);
            });

  std::set<std::vector<int>> seen;
  bool distinct = true;
  for (const LabeledVector& lv : out.vectors) {
    std::vector<int> key = lv.label.ells;
    key.push_back(lv.label.m);
    distinct = distinct && seen.insert(key).second;
  }
  out.pass = distinct && out.vectors.size() == s->dim();
  return out;
}

namespace {

void extend_chains(int ell_prev, int levels_left, std::vector<int>& chain,
                   std::vector<CscoLabel>& out) {
  if (levels_left == 0) {
    int ell2 = chain.back();
    if (ell2 > 0) {
      out.push_back({chain, +ell2});
      out.push_back({chain, -ell2});
    } else {
      out.push_back({chain, 0});
    }
    return;
  }
  for (int ell = ell_prev; ell >= 0; --ell) {
    chain.push_back(ell);
    extend_chains(ell, levels_left - 1, chain, out);
    chain.pop_back();
  }
}

}  // namespace

std::vector<CscoLabel> enumerate_chains(int q, int ell_q) {
  if (q < 2) throw std::invalid_argument("enumerate_chains requires q >= 2");
  if (ell_q < 0) throw std::invalid_argument("enumerate_chains requires ell_q >= 0");
  std::vector<CscoLabel> out;
  std::vector<int> chain{ell_q};
  extend_chains(ell_q, q - 2, chain, out);
  std::sort(out.begin(), out.end(), label_less);
  return out;
}

std::vector<CscoLabel> expected_sector_labels(int q, int n) {
  if (q < 1) throw std::invalid_argument("expected_sector_labels requires q >= 1");
  if (n < 0) throw std::invalid_argument("expected_sector_labels requires n >= 0");
  if (q == 1) return {CscoLabel{{}, 0}};
  std::vector<CscoLabel> out;
  for (int ell = n; ell >= 0; ell -= 2) {
    std::vector<CscoLabel> chains = enumerate_chains(q, ell);
    out.insert(out.end(), chains.begin(), chains.end());
  }
  std::sort(out.begin(), out.end(), label_less);
  return out;
}

CscoVerification verify_csco(int q, int n, double tol, std::size_t cap) {
  CscoVerification v;
  v.q = q;
  v.n = n;
  v.basis = joint_diagonalize(q, n, tol, cap);

  std::vector<CscoLabel> produced;
  produced.reserve(v.basis.vectors.size());
  for (const LabeledVector& lv : v.basis.vectors) produced.push_back(lv.label);
  std::vector<CscoLabel> expected = expected_sector_labels(q, n);

  std::set_difference(expected.begin(), expected.end(), produced.begin(), produced.end(),
                      std::back_inserter(v.missing), label_less);
  std::set_difference(produced.begin(), produced.end(), expected.begin(), expected.end(),
                      std::back_inserter(v.extra), label_less);

  bool labels_valid = true;
  for (const CscoLabel& label : produced) {
    for (std::size_t i = 0; i + 1 < label.ells.size(); ++i) {
      if (label.ells[i] < label.ells[i + 1]) labels_valid = false;
    }
    if (!label.ells.empty() && std::abs(label.m) != label.ells.back()) labels_valid = false;
  }

  // Parity sends the (ells, m) eigenvector to the (ells, -m) one up to phase.
  v.max_parity_residual = 0.0;
  if (q >= 2 && !v.basis.vectors.empty()) {
    LinearOperator parity = parity_op(v.basis.sector);
    for (const LabeledVector& lv : v.basis.vectors) {
      CscoLabel partner_label = lv.label;
      partner_label.m = -partner_label.m;
      auto partner = std::find_if(v.basis.vectors.begin(), v.basis.vectors.end(),
                                  [&](const LabeledVector& other) {
                                    return other.label == partner_label;
                                  });
      if (partner == v.basis.vectors.end()) {
        labels_valid = false;
        continue;
      }
      StateVector image = o21::apply(parity, lv.vec);
      Complex overlap = partner->vec.dot(image);
      StateVector deviation = image - overlap * partner->vec;
      v.max_parity_residual =
          std::max(v.max_parity_residual, deviation.cwiseAbs().maxCoeff());
    }
  }

  v.pass = v.basis.pass && v.missing.empty() && v.extra.empty() && labels_valid &&
           v.max_parity_residual < tol;
  v.basis.pass = v.pass;
  return v;
}

}  // namespace o21
