#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "o21/serialize.hpp"

namespace py = pybind11;

namespace {

// Thin handle: the C++ side shares immutable sectors as shared_ptr-to-const,
// which pybind11 cannot use as a holder directly.
struct PySector {
  o21::SectorPtr ptr;
};

std::vector<std::vector<int>> basis_lists(const o21::Sector& s) {
  std::vector<std::vector<int>> out;
  out.reserve(s.dim());
  for (const o21::OccupationVector& state : s.basis()) out.push_back(state.occ());
  return out;
}

}  // namespace

PYBIND11_MODULE(o21py, m) {
  m.doc() = "Fixed-occupation bosonic sectors, angular momentum spectra and "
            "o(2,1) representation tools";

  py::register_exception<o21::SectorCapError>(m, "SectorCapError", PyExc_RuntimeError);

  py::class_<PySector>(m, "Sector")
      .def_property_readonly("q", [](const PySector& s) { return s.ptr->q(); })
      .def_property_readonly("n", [](const PySector& s) { return s.ptr->n(); })
      .def_property_readonly("dim", [](const PySector& s) { return s.ptr->dim(); })
      .def("basis", [](const PySector& s) { return basis_lists(*s.ptr); })
      .def("index_of",
           [](const PySector& s, const std::vector<int>& occ) {
             return s.ptr->index_of(o21::OccupationVector(occ));
           })
      .def("to_json", [](const PySector& s) { return o21::to_json(*s.ptr).dump(2); })
      .def("__repr__", [](const PySector& s) { return "Sector" + s.ptr->str(); });

  m.def(
      "enumerate_sector",
      [](int q, int n, std::size_t cap) {
        return PySector{o21::enumerate_sector(q, n, cap)};
      },
      py::arg("q"), py::arg("n"), py::arg("cap") = o21::kDefaultSectorCap);

  m.def("binomial", &o21::binomial, py::arg("n"), py::arg("k"));
  m.def("degeneracy", &o21::degeneracy, py::arg("q"), py::arg("ell"));
  m.def(
      "snap_to_ell",
      [](double eigenvalue, int q, double tol) -> py::object {
        std::optional<int> ell = o21::snap_to_ell(eigenvalue, q, tol);
        if (!ell) return py::none();
        return py::int_(*ell);
      },
      py::arg("eigenvalue"), py::arg("q"), py::arg("tol") = o21::kEigenvalueTol);

  py::class_<o21::SpectrumLine>(m, "SpectrumLine")
      .def_readonly("ell", &o21::SpectrumLine::ell)
      .def_readonly("eigenvalue", &o21::SpectrumLine::eigenvalue)
      .def_readonly("multiplicity", &o21::SpectrumLine::multiplicity)
      .def_readonly("max_residual", &o21::SpectrumLine::max_residual);

  py::class_<o21::SpectrumReport>(m, "SpectrumReport")
      .def_readonly("q", &o21::SpectrumReport::q)
      .def_readonly("n", &o21::SpectrumReport::n)
      .def_readonly("lines", &o21::SpectrumReport::lines)
      .def_readonly("unsnapped", &o21::SpectrumReport::unsnapped)
      .def_readonly("passed", &o21::SpectrumReport::pass)
      .def("to_json",
           [](const o21::SpectrumReport& r) { return o21::to_json(r).dump(2); });

  m.def("sector_spectrum", &o21::sector_spectrum, py::arg("q"), py::arg("n"),
        py::arg("tol") = o21::kEigenvalueTol, py::arg("cap") = o21::kDefaultSectorCap);

  py::class_<o21::IdentityReport>(m, "IdentityReport")
      .def_readonly("q", &o21::IdentityReport::q)
      .def_readonly("n_max", &o21::IdentityReport::n_max)
      .def_readonly("tol", &o21::IdentityReport::tol)
      .def_readonly("passed", &o21::IdentityReport::pass)
      .def("max_residual",
           [](const o21::IdentityReport& r) {
             double m = 0.0;
             for (const o21::IdentityCheck& c : r.checks) m = std::max(m, c.max_residual);
             return m;
           })
      .def("to_json",
           [](const o21::IdentityReport& r) { return o21::to_json(r).dump(2); });

  m.def("verify_algebra", &o21::verify_algebra, py::arg("q"), py::arg("n_max"),
        py::arg("tol") = o21::kIdentityTol, py::arg("cap") = o21::kDefaultSectorCap,
        py::arg("workers") = 1);

  py::class_<o21::CscoLabel>(m, "CscoLabel")
      .def_readonly("ells", &o21::CscoLabel::ells)
      .def_readonly("m", &o21::CscoLabel::m)
      .def("__repr__", [](const o21::CscoLabel& l) { return o21::label_str(l); });

  py::class_<o21::LabeledBasis>(m, "LabeledBasis")
      .def_readonly("q", &o21::LabeledBasis::q)
      .def_readonly("n", &o21::LabeledBasis::n)
      .def_readonly("passed", &o21::LabeledBasis::pass)
      .def("labels",
           [](const o21::LabeledBasis& b) {
             std::vector<o21::CscoLabel> out;
             out.reserve(b.vectors.size());
             for (const o21::LabeledVector& lv : b.vectors) out.push_back(lv.label);
             return out;
           })
      .def("to_json", [](const o21::LabeledBasis& b) { return o21::to_json(b).dump(2); });

  py::class_<o21::CscoVerification>(m, "CscoVerification")
      .def_readonly("q", &o21::CscoVerification::q)
      .def_readonly("n", &o21::CscoVerification::n)
      .def_readonly("basis", &o21::CscoVerification::basis)
      .def_readonly("missing", &o21::CscoVerification::missing)
      .def_readonly("extra", &o21::CscoVerification::extra)
      .def_readonly("max_parity_residual", &o21::CscoVerification::max_parity_residual)
      .def_readonly("passed", &o21::CscoVerification::pass);

  m.def("joint_diagonalize", &o21::joint_diagonalize, py::arg("q"), py::arg("n"),
        py::arg("tol") = o21::kEigenvalueTol, py::arg("cap") = o21::kDefaultSectorCap);
  m.def("enumerate_chains", &o21::enumerate_chains, py::arg("q"), py::arg("ell_q"));
  m.def("verify_csco", &o21::verify_csco, py::arg("q"), py::arg("n"),
        py::arg("tol") = o21::kEigenvalueTol, py::arg("cap") = o21::kDefaultSectorCap);

  py::class_<o21::LowestWeightState>(m, "LowestWeightState")
      .def_readonly("q", &o21::LowestWeightState::q)
      .def_readonly("ell", &o21::LowestWeightState::ell)
      .def_readonly("sign", &o21::LowestWeightState::sign)
      .def_readonly("raw_norm", &o21::LowestWeightState::raw_norm)
      .def_property_readonly("vec",
                             [](const o21::LowestWeightState& s) { return s.vec; });

  m.def("lowest_weight_state", &o21::lowest_weight_state, py::arg("q"), py::arg("ell"),
        py::arg("sign") = 1, py::arg("cap") = o21::kDefaultSectorCap);

  m.def(
      "angular_momentum_sq_dense",
      [](int q, int n, std::size_t cap) {
        return o21::angular_momentum_sq(o21::enumerate_sector(q, n, cap), cap).dense();
      },
      py::arg("q"), py::arg("n"), py::arg("cap") = o21::kDefaultSectorCap);

  m.def(
      "classify",
      [](o21::Complex phi, o21::Complex e0, double int_tol) {
        o21::RepParams params{phi, e0};
        o21::SeriesClassification c = o21::classify(params, int_tol);
        py::dict out;
        out["series"] = o21::to_string(c.series);
        out["unitary"] = c.unitary;
        out["reason"] = o21::to_string(c.reason);
        out["json"] = o21::classification_to_json(params, c).dump(2);
        return out;
      },
      py::arg("phi"), py::arg("e0"), py::arg("int_tol") = o21::kIntegerTol);

  m.def(
      "physical_rep_params",
      [](int q, int ell) {
        o21::RepParams p = o21::physical_rep_params(q, ell);
        return py::make_tuple(p.phi, p.e0);
      },
      py::arg("q"), py::arg("ell"));

  m.def("casimir_to_l2", &o21::casimir_to_l2, py::arg("phi"), py::arg("q"));
}
