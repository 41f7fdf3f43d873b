#include "o21/classify.hpp"

#include <cmath>
#include <stdexcept>

namespace o21 {

namespace {

bool real_within(Complex z, double tol) { return std::abs(z.imag()) < tol; }

bool zero_within(Complex z, double tol) { return std::abs(z) < tol; }

bool integer_within(Complex z, double tol) {
  return real_within(z, tol) && std::abs(z.real() - std::round(z.real())) < tol;
}

bool nonneg_integer_within(Complex z, double tol) {
  return integer_within(z, tol) && std::llround(z.real()) >= 0;
}

J3Spectrum two_sided(Complex e0) { return {e0, J3Direction::two_sided, {}, {}}; }

}  // namespace

SeriesClassification classify(const RepParams& p, double int_tol) {
  if (int_tol <= 0) throw std::invalid_argument("integer tolerance must be positive");
  const Complex phi = p.phi;
  const Complex e0 = p.e0;

  SeriesClassification out;

  // D(Phi): E0 = 0 and 2Phi a non-negative integer; finite spectrum.
  if (zero_within(e0, int_tol) && nonneg_integer_within(2.0 * phi, int_tol)) {
    out.series = Series::d_phi;
    out.j3 = J3Spectrum{e0, J3Direction::finite_range, -phi, phi};
    if (zero_within(phi, int_tol)) {
      out.unitary = true;
      out.reason = UnitarityReason::trivial;
    }
    return out;
  }

  // D+-(Phi): E0 = -+Phi with 2Phi not a non-negative integer; unitary when
  // E0 is real and Phi < 0.
  bool half_bounded_plus = zero_within(e0 + phi, int_tol);
  bool half_bounded_minus = zero_within(e0 - phi, int_tol);
  if ((half_bounded_plus || half_bounded_minus) &&
      !nonneg_integer_within(2.0 * phi, int_tol)) {
    out.series = half_bounded_plus ? Series::d_plus : Series::d_minus;
    out.j3 = J3Spectrum{
        e0, half_bounded_plus ? J3Direction::up : J3Direction::down, {}, {}};
    if (real_within(e0, int_tol) && phi.real() < 0.0) {
      out.unitary = true;
      out.reason = UnitarityReason::discrete;
    }
    return out;
  }

  // D(Phi,E0): -1/2 < Re(E0) <= 1/2 with Phi +- E0 never an integer.
  if (e0.real() > -0.5 && e0.real() <= 0.5 && !integer_within(phi + e0, int_tol) &&
      !integer_within(phi - e0, int_tol)) {
    out.series = Series::d_phi_e0;
    out.j3 = two_sided(e0);
    if (real_within(e0, int_tol) && std::abs(phi.real() + 0.5) < int_tol) {
      // Phi = -1/2 + i lambda, lambda real (possibly zero).
      out.unitary = true;
      out.reason = UnitarityReason::principal;
    } else if (real_within(e0, int_tol) && real_within(phi, int_tol) &&
               std::abs(phi.real() + 0.5) < 0.5 - std::abs(e0.real())) {
      out.unitary = true;
      out.reason = UnitarityReason::supplementary;
    }
    return out;
  }

  return out;  // unclassified, not unitary
}

RepParams physical_rep_params(int q, int ell) {
  if (q < 1) throw std::invalid_argument("physical_rep_params requires q >= 1");
  if (ell < 0) throw std::invalid_argument("physical_rep_params requires ell >= 0");
  double e0 = 0.5 * ell + 0.25 * q;
  return {Complex(-e0, 0.0), Complex(e0, 0.0)};
}

Complex casimir_to_l2(Complex phi, int q) {
  return 4.0 * phi * (phi + 1.0) - 0.25 * q * q + static_cast<double>(q);
}

std::string to_string(Series s) {
  switch (s) {
    case Series::d_phi_e0: return "D(Phi,E0)";
    case Series::d_plus: return "D+(Phi)";
    case Series::d_minus: return "D-(Phi)";
    case Series::d_phi: return "D(Phi)";
    case Series::unclassified: return "unclassified";
  }
  return "unclassified";
}

std::string to_string(UnitarityReason r) {
  switch (r) {
    case UnitarityReason::principal: return "principal";
    case UnitarityReason::supplementary: return "supplementary";
    case UnitarityReason::discrete: return "discrete";
    case UnitarityReason::trivial: return "trivial";
    case UnitarityReason::not_unitary: return "not-unitary";
  }
  return "not-unitary";
}

std::string to_string(J3Direction d) {
  switch (d) {
    case J3Direction::two_sided: return "two-sided";
    case J3Direction::up: return "up";
    case J3Direction::down: return "down";
    case J3Direction::finite_range: return "finite";
  }
  return "two-sided";
}

}  // namespace o21
