#pragma once

#include <complex>
#include <optional>
#include <string>

namespace o21 {

using Complex = std::complex<double>;

// Tolerance for "equals an integer" tests on complex inputs: imaginary part
// and distance to the nearest integer must both fall below it.
inline constexpr double kIntegerTol = 1e-9;

// A candidate o(2,1) representation, characterized by the complex pair
// (Phi, E0).
struct RepParams {
  Complex phi;
  Complex e0;
};

enum class Series {
  d_phi_e0,      // D(Phi,E0): two-sided J3 spectrum E0 +- n
  d_plus,        // D+(Phi):  E0 = -Phi, spectrum E0 + n
  d_minus,       // D-(Phi):  E0 = Phi, spectrum E0 - n
  d_phi,         // D(Phi):   E0 = 0, 2Phi = n, finite spectrum -Phi..Phi
  unclassified,  // excluded-point inputs outside all four families
};

enum class UnitarityReason { principal, supplementary, discrete, trivial, not_unitary };

enum class J3Direction { two_sided, up, down, finite_range };

struct J3Spectrum {
  Complex base;  // E0
  J3Direction direction;
  Complex range_min;  // populated for finite_range: [-Phi, Phi]
  Complex range_max;
};

struct SeriesClassification {
  Series series = Series::unclassified;
  bool unitary = false;
  UnitarityReason reason = UnitarityReason::not_unitary;
  std::optional<J3Spectrum> j3;
};

// Rule table for the four series and their unitarity conditions, evaluated
// in the order D(Phi) -> D+ -> D- -> D(Phi,E0) so that printed-boundary
// overlaps resolve deterministically.  Every input classifies (possibly as
// unclassified); this never throws on values.
SeriesClassification classify(const RepParams& p, double int_tol = kIntegerTol);

// The representation realized on angular momentum level ell in q dimensions:
// Phi = -(ell/2 + q/4), E0 = ell/2 + q/4.  classify() of the result is
// (D+, unitary).
RepParams physical_rep_params(int q, int ell);

// The spectrum map 4 Phi (Phi + 1) - q^2/4 + q.
Complex casimir_to_l2(Complex phi, int q);

std::string to_string(Series s);
std::string to_string(UnitarityReason r);
std::string to_string(J3Direction d);

}  // namespace o21
