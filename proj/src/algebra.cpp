#include "o21/algebra.hpp"

#include <algorithm>
#include <cmath>

#include "o21/parallel.hpp"

namespace o21 {

LinearOperator number_operator(const SectorPtr& s) {
  std::vector<Complex> d(s->dim(), Complex(static_cast<double>(s->n()), 0.0));
  return LinearOperator::diagonal(s, d);
}

LinearOperator j3_operator(const SectorPtr& s) {
  double value = 0.5 * s->n() + 0.25 * s->q();
  std::vector<Complex> d(s->dim(), Complex(value, 0.0));
  return LinearOperator::diagonal(s, d);
}

LinearOperator parity_op(const SectorPtr& s) {
  std::vector<Complex> d(s->dim());
  for (std::size_t i = 0; i < s->dim(); ++i) {
    d[i] = (s->state(i).occupation(1) % 2 == 0) ? Complex(1.0, 0.0) : Complex(-1.0, 0.0);
  }
  return LinearOperator::diagonal(s, d);
}

LinearOperator pair_annihilator(const SectorPtr& s, std::size_t cap) {
  SectorPtr mid = lower_sector(s, cap);
  SectorPtr down = lower_sector(mid, cap);
  LinearOperator sum = LinearOperator::zero(s, down);
  for (int i = 1; i <= s->q(); ++i) {
    sum = op_add(sum, op_compose(annihilator(i, mid, down), annihilator(i, s, mid)));
  }
  return sum;
}

LinearOperator pair_creator(const SectorPtr& s, std::size_t cap) {
  SectorPtr mid = raise_sector(s, cap);
  SectorPtr up = raise_sector(mid, cap);
  LinearOperator sum = LinearOperator::zero(s, up);
  for (int i = 1; i <= s->q(); ++i) {
    sum = op_add(sum, op_compose(creator(i, mid, up), creator(i, s, mid)));
  }
  return sum;
}

LinearOperator l_generator(int i, int j, const SectorPtr& s, std::size_t cap) {
  if (i == j) throw std::invalid_argument("l_generator requires i != j");
  if (i < 1 || i > s->q() || j < 1 || j > s->q()) {
    throw std::invalid_argument("l_generator mode indices out of range for " + s->str());
  }
  if (s->n() == 0) return LinearOperator::zero(s, s);
  SectorPtr mid = lower_sector(s, cap);
  LinearOperator hop_ij = op_compose(creator(i, mid, s), annihilator(j, s, mid));
  LinearOperator hop_ji = op_compose(creator(j, mid, s), annihilator(i, s, mid));
  return op_scale(Complex(0.0, -1.0), op_sub(hop_ij, hop_ji));
}

std::pair<LinearOperator, LinearOperator> plus_minus_modes(const SectorPtr& s,
                                                           std::size_t cap) {
  if (s->q() < 2) throw std::invalid_argument("plus_minus_modes requires q >= 2");
  SectorPtr down = lower_sector(s, cap);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  LinearOperator a1 = annihilator(1, s, down);
  LinearOperator a2 = annihilator(2, s, down);
  LinearOperator a_plus =
      op_scale(Complex(inv_sqrt2, 0.0), op_add(a2, op_scale(Complex(0.0, 1.0), a1)));
  LinearOperator a_minus =
      op_scale(Complex(inv_sqrt2, 0.0), op_add(a2, op_scale(Complex(0.0, -1.0), a1)));
  return {a_plus, a_minus};
}

LinearOperator angular_momentum_sq(const SectorPtr& s, std::size_t cap) {
  int n = s->n();
  int q = s->q();
  LinearOperator pair_lower = pair_annihilator(s, cap);
  LinearOperator quadratic = op_compose(op_adjoint(pair_lower), pair_lower);
  double casimir = static_cast<double>(n) * (n + q - 2);
  return op_sub(op_scale(Complex(casimir, 0.0), LinearOperator::identity(s)), quadratic);
}

LinearOperator angular_momentum_sq_from_generators(const SectorPtr& s, std::size_t cap) {
  return angular_momentum_sq_subset(s->q(), s, cap);
}

LinearOperator angular_momentum_sq_subset(int k, const SectorPtr& s, std::size_t cap) {
  if (k < 2 || k > s->q()) {
    if (s->q() == 1 && k == 1) return LinearOperator::zero(s, s);  // no rotations in 1D
    throw std::invalid_argument("subset size must satisfy 2 <= k <= q");
  }
  LinearOperator sum = LinearOperator::zero(s, s);
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      LinearOperator lij = l_generator(i, j, s, cap);
      sum = op_add(sum, op_compose(lij, lij));
    }
  }
  return sum;
}

AlgebraSet build_algebra(int q, int n, std::size_t cap) {
  SectorPtr s = enumerate_sector(q, n, cap);
  LinearOperator pair_lower = pair_annihilator(s, cap);
  LinearOperator pair_raise = pair_creator(s, cap);
  LinearOperator k_minus = op_scale(Complex(0.5, 0.0), pair_lower);
  AlgebraSet set{
      s,
      number_operator(s),
      pair_lower,
      pair_raise,
      k_minus,
      op_scale(Complex(0.5, 0.0), pair_raise),
      op_adjoint(k_minus),
      j3_operator(s),
      parity_op(s),
      angular_momentum_sq(s, cap),
      angular_momentum_sq_from_generators(s, cap),
      {},
  };
  for (int i = 1; i <= q; ++i) {
    for (int j = i + 1; j <= q; ++j) {
      set.l.emplace(std::make_pair(i, j), l_generator(i, j, s, cap));
    }
  }
  return set;
}

namespace {

const std::vector<std::string> kIdentityNames = {
    "number_pair_bracket",        // [N,A] + 2A
    "pair_pair_bracket",          // [A,A^dag] - 4N - 2q
    "o21_j3_k1",                  // [J3,K1] - iK2
    "o21_j3_k2",                  // [J3,K2] + iK1
    "o21_k1_k2",                  // [K1,K2] + iJ3
    "casimir_lowered",            // L^2 - 4Q + (q^2/4 - q) with Q = J3(J3-1) - K+K-
    "casimir_symmetric",          // Q lowered vs J3^2 - K1^2 - K2^2
    "lsq_two_forms",              // number-operator form vs generator sum
    "parity_l12_anticommutator",  // PL12 + L12P
    "parity_chain_commutator",    // [P, L_k^2] for k = 2..q
};

struct SectorChecks {
  std::map<std::string, double> residual;
};

SectorChecks check_sector(int q, int n, int n_max, std::size_t cap) {
  SectorChecks out;
  SectorPtr s = enumerate_sector(q, n, cap);
  std::size_t dim = s->dim();

  LinearOperator pair_lower = pair_annihilator(s, cap);
  LinearOperator k_minus = op_scale(Complex(0.5, 0.0), pair_lower);
  LinearOperator k_plus_into = op_adjoint(k_minus);
  LinearOperator n_here = number_operator(s);
  LinearOperator n_down = number_operator(pair_lower.codomain_ptr());
  LinearOperator j3_here = j3_operator(s);
  LinearOperator j3_down = j3_operator(pair_lower.codomain_ptr());
  LinearOperator ident = LinearOperator::identity(s);

  // [N,A] + 2A, assembled through the n-2 sector.
  {
    LinearOperator bracket =
        op_sub(op_compose(n_down, pair_lower), op_compose(pair_lower, n_here));
    out.residual["number_pair_bracket"] =
        op_add(bracket, op_scale(Complex(2.0, 0.0), pair_lower)).max_abs_entry();
  }

  // Down-blocks of the two mixed o(2,1) brackets; K- = A/2 vanishes for n < 2
  // so these are exact zeros there.
  LinearOperator comm_j3_km =
      op_sub(op_compose(j3_down, k_minus), op_compose(k_minus, j3_here));
  double j3k1 = op_scale(Complex(0.5, 0.0), op_add(comm_j3_km, k_minus)).max_abs_entry();
  // [J3,K2] down-block is -[J3,K-]/(2i); target -iK1 has down-block -iK-/2.
  double j3k2 = op_sub(op_scale(Complex(0.0, 0.5), comm_j3_km),
                       op_scale(Complex(0.0, -0.5), k_minus))
                    .max_abs_entry();

  // Q in the lowered form J3(J3-1) - K+K-; defined on every sector.
  double j3v = 0.5 * n + 0.25 * q;
  LinearOperator q_lowered =
      op_sub(op_scale(Complex(j3v * (j3v - 1.0), 0.0), ident),
             op_compose(k_plus_into, k_minus));

  LinearOperator lsq = angular_momentum_sq(s, cap);
  {
    LinearOperator residual = op_add(
        op_sub(lsq, op_scale(Complex(4.0, 0.0), q_lowered)),
        op_scale(Complex(0.25 * q * q - q, 0.0), ident));
    out.residual["casimir_lowered"] = residual.max_abs_entry();
  }

  {
    LinearOperator lsq_gen = angular_momentum_sq_from_generators(s, cap);
    out.residual["lsq_two_forms"] = op_sub(lsq, lsq_gen).max_abs_entry();
  }

  // Identities that reach through the n+2 sector exist only where that
  // neighbour is instantiated.
  if (n + 2 <= n_max) {
    LinearOperator pair_raise = pair_creator(s, cap);
    LinearOperator k_plus = op_scale(Complex(0.5, 0.0), pair_raise);
    SectorPtr up = pair_raise.codomain_ptr();
    LinearOperator pair_lower_up = pair_annihilator(up, cap);
    LinearOperator j3_up = j3_operator(up);

    // [A, A^dag] - 4N - 2q
    {
      LinearOperator down_up = op_compose(op_adjoint(pair_lower), pair_lower);
      LinearOperator up_down = op_compose(pair_lower_up, pair_raise);
      LinearOperator bracket = op_sub(up_down, down_up);
      LinearOperator target = op_scale(Complex(4.0 * n + 2.0 * q, 0.0), ident);
      out.residual["pair_pair_bracket"] = op_sub(bracket, target).max_abs_entry();
    }

    // Up-blocks of [J3,K1] = iK2 and [J3,K2] = -iK1.
    LinearOperator comm_j3_kp =
        op_sub(op_compose(j3_up, k_plus), op_compose(k_plus, j3_here));
    j3k1 = std::max(
        j3k1, op_scale(Complex(0.5, 0.0), op_sub(comm_j3_kp, k_plus)).max_abs_entry());
    j3k2 = std::max(j3k2, op_sub(op_scale(Complex(0.0, -0.5), comm_j3_kp),
                                 op_scale(Complex(0.0, -0.5), k_plus))
                              .max_abs_entry());

    // [K1,K2] + iJ3 = (K-K+ - K+K-)/(2i) + iJ3
    {
      LinearOperator km_kp = op_compose(op_scale(Complex(0.5, 0.0), pair_lower_up), k_plus);
      LinearOperator kp_km = op_compose(k_plus_into, k_minus);
      LinearOperator bracket = op_scale(Complex(0.0, -0.5), op_sub(km_kp, kp_km));
      out.residual["o21_k1_k2"] =
          op_add(bracket, op_scale(Complex(0.0, 1.0), j3_here)).max_abs_entry();

      // Symmetric Casimir J3^2 - K1^2 - K2^2 = J3^2 - (K+K- + K-K+)/2.
      LinearOperator q_symmetric =
          op_sub(op_compose(j3_here, j3_here),
                 op_scale(Complex(0.5, 0.0), op_add(kp_km, km_kp)));
      out.residual["casimir_symmetric"] = op_sub(q_lowered, q_symmetric).max_abs_entry();
    }
  }
  out.residual["o21_j3_k1"] = j3k1;
  out.residual["o21_j3_k2"] = j3k2;

  // Parity anticommutes with L_12 and commutes with every chain L_k^2.
  LinearOperator parity = parity_op(s);
  if (q >= 2) {
    LinearOperator l12 = l_generator(1, 2, s, cap);
    out.residual["parity_l12_anticommutator"] =
        op_add(op_compose(parity, l12), op_compose(l12, parity)).max_abs_entry();
    double chain = 0.0;
    for (int k = 2; k <= q; ++k) {
      LinearOperator lk2 = angular_momentum_sq_subset(k, s, cap);
      chain = std::max(chain, op_commutator(parity, lk2).max_abs_entry());
    }
    out.residual["parity_chain_commutator"] = chain;
  } else {
    out.residual["parity_l12_anticommutator"] = 0.0;
    out.residual["parity_chain_commutator"] = 0.0;
  }

  (void)dim;
  return out;
}

}  // namespace

IdentityReport verify_algebra(int q, int n_max, double tol, std::size_t cap, int workers) {
  if (q < 1) throw std::invalid_argument("verify_algebra requires q >= 1");
  if (n_max < 2) throw std::invalid_argument("verify_algebra requires n_max >= 2");
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");

  std::vector<SectorChecks> per_sector(static_cast<std::size_t>(n_max) + 1);
  parallel_for_index(per_sector.size(), workers, [&](std::size_t i) {
    per_sector[i] = check_sector(q, static_cast<int>(i), n_max, cap);
  });

  IdentityReport report;
  report.q = q;
  report.n_max = n_max;
  report.tol = tol;
  report.pass = true;
  for (const std::string& name : kIdentityNames) {
    IdentityCheck check;
    check.name = name;
    for (int n = 0; n <= n_max; ++n) {
      auto it = per_sector[static_cast<std::size_t>(n)].residual.find(name);
      if (it == per_sector[static_cast<std::size_t>(n)].residual.end()) continue;
      check.sectors.push_back({n, it->second});
      check.max_residual = std::max(check.max_residual, it->second);
    }
    check.pass = check.max_residual < tol;
    report.pass = report.pass && check.pass;
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace o21
