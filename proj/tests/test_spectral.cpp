#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <Eigen/Eigenvalues>

#include <cmath>

#include "o21/spectral.hpp"

using namespace o21;

TEST_CASE("degeneracy") {
  SUBCASE("reference values") {
    CHECK(degeneracy(3, 2) == 5);
    CHECK(degeneracy(4, 1) == 4);
    CHECK(degeneracy(4, 2) == 9);
    CHECK(degeneracy(2, 3) == 2);
    CHECK(degeneracy(2, 0) == 1);
    for (int q = 3; q <= 8; ++q) CHECK(degeneracy(q, 0) == 1);
  }
  SUBCASE("known closed forms in three and four dimensions") {
    for (int ell = 0; ell <= 10; ++ell) {
      CHECK(degeneracy(3, ell) == static_cast<std::uint64_t>(2 * ell + 1));
      CHECK(degeneracy(4, ell) == static_cast<std::uint64_t>((ell + 1) * (ell + 1)));
    }
  }
  SUBCASE("validation and overflow") {
    CHECK_THROWS_AS(degeneracy(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(degeneracy(3, -1), std::invalid_argument);
    CHECK_THROWS_AS(degeneracy(40, 60), std::overflow_error);
  }
  SUBCASE("levels of fixed parity fill the sector") {
    for (int q = 2; q <= 6; ++q) {
      for (int n = 0; n <= 8; ++n) {
        std::uint64_t total = 0;
        for (int ell = n; ell >= 0; ell -= 2) total += degeneracy(q, ell);
        CHECK(total == binomial(static_cast<std::uint64_t>(n + q - 1),
                                static_cast<std::uint64_t>(q - 1)));
      }
    }
  }
}

TEST_CASE("snap_to_ell") {
  CHECK(snap_to_ell(6.0000000001, 3, kEigenvalueTol) == 2);
  CHECK(snap_to_ell(0.0, 5, kEigenvalueTol) == 0);
  CHECK(snap_to_ell(3.4, 3, 1e-6) == std::nullopt);
  CHECK(snap_to_ell(-1e-10, 4, kEigenvalueTol) == 0);
  CHECK(snap_to_ell(35.0 + 5e-7, 4, 1e-6) == 5);  // 5*(5+2) = 35
  CHECK(snap_to_ell(35.0 + 5e-7, 4, 1e-8) == std::nullopt);
  CHECK_THROWS_AS(snap_to_ell(1.0, 1, 1e-8), std::invalid_argument);
  CHECK_THROWS_AS(snap_to_ell(1.0, 3, 0.0), std::invalid_argument);
  // Exact inversion across the table.
  for (int q = 2; q <= 6; ++q) {
    for (int ell = 0; ell <= 12; ++ell) {
      CHECK(snap_to_ell(static_cast<double>(ell) * (ell + q - 2), q, 1e-10) == ell);
    }
  }
}

TEST_CASE("eigenvalue clustering") {
  Eigen::VectorXd values(6);
  values << 0.0, 1e-9, 2.0, 2.0 + 1e-8, 2.0 + 2e-8, 6.0;
  auto clusters = cluster_sorted_eigenvalues(values, 1e-6);
  REQUIRE(clusters.size() == 3);
  CHECK(clusters[0].count == 2);
  CHECK(clusters[1].count == 3);
  CHECK(clusters[2].count == 1);
  CHECK(clusters[1].begin == 2);
  CHECK(clusters[2].mean == 6.0);
  CHECK(cluster_sorted_eigenvalues(Eigen::VectorXd()).empty());
}

TEST_CASE("sector spectrum") {
  SUBCASE("six-state sector splits into l = 2 and l = 0") {
    SpectrumReport report = sector_spectrum(3, 2);
    CHECK(report.pass);
    REQUIRE(report.lines.size() == 2);
    CHECK(report.lines[0].ell == 2);
    CHECK(report.lines[0].eigenvalue == 6.0);
    CHECK(report.lines[0].multiplicity == 5);
    CHECK(report.lines[1].ell == 0);
    CHECK(report.lines[1].eigenvalue == 0.0);
    CHECK(report.lines[1].multiplicity == 1);
    CHECK(report.unsnapped.empty());
  }
  SUBCASE("vector level in four dimensions") {
    SpectrumReport report = sector_spectrum(4, 1);
    CHECK(report.pass);
    REQUIRE(report.lines.size() == 1);
    CHECK(report.lines[0].ell == 1);
    CHECK(report.lines[0].eigenvalue == 3.0);
    CHECK(report.lines[0].multiplicity == 4);
  }
  SUBCASE("planar vacuum") {
    SpectrumReport report = sector_spectrum(2, 0);
    CHECK(report.pass);
    REQUIRE(report.lines.size() == 1);
    CHECK(report.lines[0].ell == 0);
    CHECK(report.lines[0].multiplicity == 1);
  }
  SUBCASE("validation") {
    CHECK_THROWS_AS(sector_spectrum(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(sector_spectrum(3, -1), std::invalid_argument);
    CHECK_THROWS_AS(sector_spectrum(3, 2, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(sector_spectrum(6, 30), SectorCapError);
  }
  SUBCASE("full reports across a block of sectors") {
    for (int q = 2; q <= 5; ++q) {
      for (int n = 0; n <= 6; ++n) {
        SpectrumReport report = sector_spectrum(q, n);
        INFO("q=", q, " n=", n);
        CHECK(report.pass);
        std::uint64_t total = 0;
        int previous = n + 2;
        for (const SpectrumLine& line : report.lines) {
          CHECK(line.ell < previous);  // strictly descending
          previous = line.ell;
          CHECK((n - line.ell) % 2 == 0);
          CHECK(line.ell >= 0);
          CHECK(line.ell <= n);
          CHECK(line.max_residual < 1e-8);
          CHECK(static_cast<std::uint64_t>(line.multiplicity) == degeneracy(q, line.ell));
          total += static_cast<std::uint64_t>(line.multiplicity);
        }
        CHECK(total == enumerate_sector(q, n)->dim());
      }
    }
  }
}

TEST_CASE("phase fixing") {
  StateVector v(3);
  v << Complex(0.0, 0.0), Complex(0.0, -2.0), Complex(1.0, 1.0);
  StateVector fixed = fix_phase(v);
  CHECK(std::abs(fixed[1].imag()) < 1e-15);
  CHECK(fixed[1].real() > 0.0);
  CHECK(std::abs(fixed.norm() - v.norm()) < 1e-12);
}

TEST_CASE("lowest weight states") {
  SUBCASE("the vacuum level") {
    LowestWeightState state = lowest_weight_state(4, 0, +1);
    REQUIRE(state.vec.size() == 1);
    CHECK(state.vec[0] == Complex(1.0, 0.0));
    CHECK(state.raw_norm == 1.0);
  }
  SUBCASE("planar one-quantum state is (|0,1> - i|1,0>)/sqrt(2) up to phase") {
    LowestWeightState state = lowest_weight_state(2, 1, +1);
    StateVector expected(2);
    expected << Complex(0.0, -1.0 / std::sqrt(2.0)), Complex(1.0 / std::sqrt(2.0), 0.0);
    Complex overlap = expected.dot(state.vec);
    CHECK(std::abs(std::abs(overlap) - 1.0) < 1e-12);
    // L_12 eigenvalue +1
    LinearOperator l12 = l_generator(1, 2, state.sector);
    CHECK((o21::apply(l12, state.vec) - state.vec).norm() < 1e-12);
  }
  SUBCASE("annihilated by the pair lowering operator") {
    LowestWeightState state = lowest_weight_state(3, 2, -1);
    LinearOperator k_minus = op_scale(Complex(0.5, 0.0), pair_annihilator(state.sector));
    CHECK(o21::apply(k_minus, state.vec).norm() < 1e-12);
    LinearOperator lsq = angular_momentum_sq(state.sector);
    CHECK((o21::apply(lsq, state.vec) - 6.0 * state.vec).norm() < 1e-12);
  }
  SUBCASE("validation") {
    CHECK_THROWS_AS(lowest_weight_state(1, 2, +1), std::invalid_argument);
    CHECK_THROWS_AS(lowest_weight_state(3, -1, +1), std::invalid_argument);
    CHECK_THROWS_AS(lowest_weight_state(3, 2, 2), std::invalid_argument);
  }
  SUBCASE("full contract over the working range") {
    for (int q = 2; q <= 6; ++q) {
      for (int ell = 0; ell <= 8; ++ell) {
        for (int sign : {+1, -1}) {
          LowestWeightState state = lowest_weight_state(q, ell, sign);
          INFO("q=", q, " ell=", ell, " sign=", sign);

          // Unnormalized norm is sqrt(ell!).
          double factorial = 1.0;
          for (int k = 2; k <= ell; ++k) factorial *= k;
          CHECK(std::abs(state.raw_norm * state.raw_norm - factorial) <
                1e-10 * factorial);

          // K_- annihilates the state.
          LinearOperator k_minus =
              op_scale(Complex(0.5, 0.0), pair_annihilator(state.sector));
          CHECK(o21::apply(k_minus, state.vec).norm() < 1e-10);

          // L^2 eigenvalue ell(ell+q-2).
          double lsq_value = static_cast<double>(ell) * (ell + q - 2);
          CHECK((o21::apply(angular_momentum_sq(state.sector), state.vec) -
                 lsq_value * state.vec)
                    .norm() < 1e-10);

          // J3 is diagonal-constant, so the eigenvalue is exact.
          Eigen::MatrixXcd j3 = j3_operator(state.sector).dense();
          for (Eigen::Index i = 0; i < j3.rows(); ++i) {
            CHECK(j3(i, i) == Complex(0.5 * ell + 0.25 * q, 0.0));
          }

          // Lowered-form Casimir acts as J3(J3-1) on the state.
          double j3_value = 0.5 * ell + 0.25 * q;
          LinearOperator k_plus_into = op_adjoint(k_minus);
          StateVector q_applied =
              j3_value * (j3_value - 1.0) * state.vec -
              o21::apply(k_plus_into, o21::apply(k_minus, state.vec));
          CHECK((q_applied - j3_value * (j3_value - 1.0) * state.vec).norm() < 1e-10);

          // L_12 eigenvalue is +-ell.
          LinearOperator l12 = l_generator(1, 2, state.sector);
          CHECK((o21::apply(l12, state.vec) - sign * static_cast<double>(ell) * state.vec)
                    .norm() < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("pair lowering maps eigenvectors down without changing the level") {
  SectorPtr s = enumerate_sector(3, 4);
  LinearOperator lsq = angular_momentum_sq(s);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(lsq.dense());
  REQUIRE(solver.info() == Eigen::Success);
  LinearOperator k_minus = op_scale(Complex(0.5, 0.0), pair_annihilator(s));
  LinearOperator lsq_down = angular_momentum_sq(k_minus.codomain_ptr());
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    std::optional<int> ell = snap_to_ell(solver.eigenvalues()[i], 3, 1e-8);
    REQUIRE(ell.has_value());
    StateVector image = o21::apply(k_minus, StateVector(solver.eigenvectors().col(i)));
    if (image.norm() < 1e-10) continue;
    double value = static_cast<double>(*ell) * (*ell + 1);
    CHECK((o21::apply(lsq_down, image) - value * image).norm() < 1e-8 * image.norm());
  }
}

TEST_CASE("pair lowering commutes with repeated raising up to the derivative term") {
  // [K_-, R^l] = l R^(l-1) a_-+ for R = a_+-^dag; checked entrywise as maps
  // (q,m) -> (q,m+l-2).
  const int q = 3;
  const int m = 2;
  const int ell = 3;
  for (int sign : {+1, -1}) {
    auto raise_op = [&](const SectorPtr& from) {
      SectorPtr to = raise_sector(from);
      return op_scale(Complex(1.0 / std::sqrt(2.0), 0.0),
                      op_add(creator(2, from, to),
                             op_scale(Complex(0.0, -static_cast<double>(sign)),
                                      creator(1, from, to))));
    };
    auto repeated_raise = [&](const SectorPtr& from, int times) {
      LinearOperator out = LinearOperator::identity(from);
      SectorPtr at = from;
      for (int k = 0; k < times; ++k) {
        LinearOperator step = raise_op(at);
        out = op_compose(step, out);
        at = step.codomain_ptr();
      }
      return out;
    };

    SectorPtr base = enumerate_sector(q, m);
    LinearOperator raised = repeated_raise(base, ell);
    LinearOperator k_minus_top =
        op_scale(Complex(0.5, 0.0), pair_annihilator(raised.codomain_ptr()));
    LinearOperator k_minus_base = op_scale(Complex(0.5, 0.0), pair_annihilator(base));
    LinearOperator lhs = op_sub(op_compose(k_minus_top, raised),
                                op_compose(repeated_raise(k_minus_base.codomain_ptr(), ell),
                                           k_minus_base));

    auto [a_plus, a_minus] = plus_minus_modes(base);
    const LinearOperator& opposite = sign > 0 ? a_minus : a_plus;
    LinearOperator rhs = op_scale(
        Complex(static_cast<double>(ell), 0.0),
        op_compose(repeated_raise(opposite.codomain_ptr(), ell - 1), opposite));

    CHECK(op_sub(lhs, rhs).max_abs_entry() < 1e-12);
  }
}
