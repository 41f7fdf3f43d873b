#include "o21/serialize.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace o21 {

namespace {

std::string format_double(double v) {
  std::ostringstream out;
  out << std::setprecision(17) << v;
  return out.str();
}

}  // namespace

Json to_json(const Sector& s) {
  Json j;
  j["q"] = s.q();
  j["n"] = s.n();
  Json basis = Json::array();
  for (const OccupationVector& state : s.basis()) basis.push_back(state.occ());
  j["basis"] = std::move(basis);
  return j;
}

SectorPtr sector_from_json(const Json& j, std::size_t cap) {
  SectorPtr s = enumerate_sector(j.at("q").get<int>(), j.at("n").get<int>(), cap);
  const Json& basis = j.at("basis");
  if (basis.size() != s->dim()) {
    throw std::invalid_argument("stored basis size does not match sector " + s->str());
  }
  for (std::size_t i = 0; i < s->dim(); ++i) {
    if (!(OccupationVector(basis[i].get<std::vector<int>>()) == s->state(i))) {
      throw std::invalid_argument("stored basis order does not match re-enumeration of " +
                                  s->str());
    }
  }
  return s;
}

Json to_json(const LinearOperator& op) {
  Json j;
  j["domain"] = to_json(op.domain());
  j["codomain"] = to_json(op.codomain());
  struct Entry {
    int row;
    int col;
    Complex value;
  };
  std::vector<Entry> entries;
  entries.reserve(op.nonzeros());
  const SparseMatrix& m = op.matrix();
  for (int k = 0; k < m.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(m, k); it; ++it) {
      entries.push_back({static_cast<int>(it.row()), static_cast<int>(it.col()), it.value()});
    }
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  Json list = Json::array();
  for (const Entry& e : entries) {
    list.push_back(Json::array({e.row, e.col, e.value.real(), e.value.imag()}));
  }
  j["entries"] = std::move(list);
  return j;
}

LinearOperator operator_from_json(const Json& j, std::size_t cap) {
  SectorPtr domain = sector_from_json(j.at("domain"), cap);
  SectorPtr codomain = sector_from_json(j.at("codomain"), cap);
  std::vector<Eigen::Triplet<Complex>> trips;
  for (const Json& e : j.at("entries")) {
    trips.emplace_back(e.at(0).get<int>(), e.at(1).get<int>(),
                       Complex(e.at(2).get<double>(), e.at(3).get<double>()));
  }
  SparseMatrix m(static_cast<Eigen::Index>(codomain->dim()),
                 static_cast<Eigen::Index>(domain->dim()));
  m.setFromTriplets(trips.begin(), trips.end());
  return LinearOperator(std::move(domain), std::move(codomain), std::move(m));
}

Json to_json(const IdentityReport& report) {
  Json j;
  j["q"] = report.q;
  j["n_max"] = report.n_max;
  j["tol"] = report.tol;
  Json checks = Json::array();
  for (const IdentityCheck& check : report.checks) {
    Json c;
    c["name"] = check.name;
    Json sectors = Json::array();
    for (const SectorResidual& r : check.sectors) {
      sectors.push_back(Json{{"n", r.n}, {"residual", r.residual}});
    }
    c["sectors"] = std::move(sectors);
    c["max_residual"] = check.max_residual;
    c["pass"] = check.pass;
    checks.push_back(std::move(c));
  }
  j["identities"] = std::move(checks);
  j["pass"] = report.pass;
  return j;
}

Json to_json(const SpectrumReport& report) {
  Json j;
  j["q"] = report.q;
  j["n"] = report.n;
  Json lines = Json::array();
  for (const SpectrumLine& line : report.lines) {
    Json l;
    l["ell"] = line.ell;
    l["eigenvalue"] = line.eigenvalue;
    l["multiplicity"] = line.multiplicity;
    l["max_residual"] = line.max_residual;
    lines.push_back(std::move(l));
  }
  j["lines"] = std::move(lines);
  j["pass"] = report.pass;
  return j;
}

Json to_json(const LabeledBasis& basis) {
  Json j;
  j["q"] = basis.q;
  j["n"] = basis.n;
  Json labels = Json::array();
  for (const LabeledVector& lv : basis.vectors) {
    Json l;
    l["ells"] = lv.label.ells;
    l["m"] = lv.label.m;
    l["residual"] = lv.residual;
    labels.push_back(std::move(l));
  }
  j["labels"] = std::move(labels);
  j["pass"] = basis.pass;
  return j;
}

Json classification_to_json(const RepParams& p, const SeriesClassification& c) {
  Json j;
  j["phi"] = Json::array({p.phi.real(), p.phi.imag()});
  j["e0"] = Json::array({p.e0.real(), p.e0.imag()});
  j["series"] = to_string(c.series);
  j["unitary"] = c.unitary;
  j["reason"] = to_string(c.reason);
  if (c.j3) {
    Json spec;
    spec["base"] = Json::array({c.j3->base.real(), c.j3->base.imag()});
    spec["direction"] = to_string(c.j3->direction);
    if (c.j3->direction == J3Direction::finite_range) {
      spec["range"] = Json::array(
          {Json::array({c.j3->range_min.real(), c.j3->range_min.imag()}),
           Json::array({c.j3->range_max.real(), c.j3->range_max.imag()})});
    }
    j["j3_spectrum"] = std::move(spec);
  } else {
    j["j3_spectrum"] = nullptr;
  }
  return j;
}

std::string spectrum_csv(const std::vector<SpectrumReport>& reports) {
  std::ostringstream out;
  out << "q,n,ell,eigenvalue,multiplicity,max_residual\n";
  for (const SpectrumReport& report : reports) {
    for (const SpectrumLine& line : report.lines) {
      out << report.q << "," << report.n << "," << line.ell << ","
          << format_double(line.eigenvalue) << "," << line.multiplicity << ","
          << format_double(line.max_residual) << "\n";
    }
  }
  return out.str();
}

std::string identity_csv(const IdentityReport& report) {
  std::ostringstream out;
  out << "q,identity,n,residual\n";
  for (const IdentityCheck& check : report.checks) {
    for (const SectorResidual& r : check.sectors) {
      out << report.q << "," << check.name << "," << r.n << ","
          << format_double(r.residual) << "\n";
    }
  }
  return out.str();
}

std::string labels_csv(const std::vector<LabeledBasis>& bases) {
  std::ostringstream out;
  out << "q,n,ells,m,residual\n";
  for (const LabeledBasis& basis : bases) {
    for (const LabeledVector& lv : basis.vectors) {
      out << basis.q << "," << basis.n << ",";
      for (std::size_t i = 0; i < lv.label.ells.size(); ++i) {
        if (i > 0) out << ";";
        out << lv.label.ells[i];
      }
      out << "," << lv.label.m << "," << format_double(lv.residual) << "\n";
    }
  }
  return out.str();
}

std::vector<DegeneracyRow> degeneracy_table(int q_max, int ell_max) {
  if (q_max < 2) throw std::invalid_argument("degeneracy table requires q_max >= 2");
  if (ell_max < 0) throw std::invalid_argument("degeneracy table requires ell_max >= 0");
  std::vector<DegeneracyRow> rows;
  for (int q = 2; q <= q_max; ++q) {
    for (int ell = 0; ell <= ell_max; ++ell) {
      rows.push_back({q, ell, degeneracy(q, ell)});
    }
  }
  return rows;
}

Json degeneracy_table_json(int q_max, int ell_max) {
  Json j;
  j["q_max"] = q_max;
  j["ell_max"] = ell_max;
  Json rows = Json::array();
  for (const DegeneracyRow& row : degeneracy_table(q_max, ell_max)) {
    rows.push_back(Json{{"q", row.q}, {"ell", row.ell}, {"degeneracy", row.value}});
  }
  j["rows"] = std::move(rows);
  return j;
}

std::string degeneracy_table_csv(int q_max, int ell_max) {
  std::ostringstream out;
  out << "q,ell,degeneracy\n";
  for (const DegeneracyRow& row : degeneracy_table(q_max, ell_max)) {
    out << row.q << "," << row.ell << "," << row.value << "\n";
  }
  return out.str();
}

}  // namespace o21
