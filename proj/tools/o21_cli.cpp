// Batch front-end: spectra, identity checks, CSCO labels, degeneracy tables
// and o(2,1) series classification with machine-readable output.
//
// Exit codes: 0 all checks pass, 1 any check fails or a computation errors,
// 2 configuration error, 3 sector dimension cap exceeded.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "o21/parallel.hpp"
#include "o21/serialize.hpp"

namespace {

struct RunConfig {
  int q = 3;
  int n_max = 4;
  double tol = 0.0;  // per-command default filled at registration
  std::size_t cap = o21::kDefaultSectorCap;
  std::string format = "json";
  std::string out_path;
  int workers = 1;
};

void write_output(const RunConfig& config, const std::string& text) {
  if (config.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(config.out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + config.out_path);
  out << text;
}

void add_common_options(CLI::App* cmd, RunConfig& config, double default_tol) {
  config.tol = default_tol;
  cmd->add_option("--q", config.q, "number of spatial dimensions (modes)");
  cmd->add_option("--n-max", config.n_max, "largest total occupation to instantiate")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--tol", config.tol, "numerical tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--cap", config.cap, "sector dimension cap")
      ->check(CLI::PositiveNumber)
      ->envname("O21_CAP")
      ->capture_default_str();
  cmd->add_option("--format", config.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--out", config.out_path, "write output to this path instead of stdout");
  cmd->add_option("--workers", config.workers, "parallel sector workers")
      ->check(CLI::PositiveNumber)
      ->envname("O21_WORKERS")
      ->capture_default_str();
}

int run_spectrum(const RunConfig& config) {
  std::vector<o21::SpectrumReport> reports(static_cast<std::size_t>(config.n_max) + 1);
  o21::parallel_for_index(reports.size(), config.workers, [&](std::size_t i) {
    reports[i] = o21::sector_spectrum(config.q, static_cast<int>(i), config.tol, config.cap);
  });

  bool all_pass = true;
  for (const o21::SpectrumReport& report : reports) {
    all_pass = all_pass && report.pass;
    for (double value : report.unsnapped) {
      std::cerr << "unsnapped eigenvalue " << value << " in sector (q=" << report.q
                << ",n=" << report.n << ")\n";
    }
  }

  if (config.format == "csv") {
    write_output(config, o21::spectrum_csv(reports));
  } else {
    o21::Json j = o21::Json::array();
    for (const o21::SpectrumReport& report : reports) j.push_back(o21::to_json(report));
    write_output(config, j.dump(2) + "\n");
  }
  return all_pass ? 0 : 1;
}

int run_verify_algebra(const RunConfig& config) {
  o21::IdentityReport report =
      o21::verify_algebra(config.q, config.n_max, config.tol, config.cap, config.workers);
  if (config.format == "csv") {
    write_output(config, o21::identity_csv(report));
  } else {
    write_output(config, o21::to_json(report).dump(2) + "\n");
  }
  if (!report.pass) {
    for (const o21::IdentityCheck& check : report.checks) {
      if (!check.pass) {
        std::cerr << "identity " << check.name << " residual " << check.max_residual
                  << " above tolerance " << report.tol << "\n";
      }
    }
  }
  return report.pass ? 0 : 1;
}

int run_csco(const RunConfig& config) {
  std::vector<o21::CscoVerification> results(static_cast<std::size_t>(config.n_max) + 1);
  o21::parallel_for_index(results.size(), config.workers, [&](std::size_t i) {
    results[i] = o21::verify_csco(config.q, static_cast<int>(i), config.tol, config.cap);
  });

  bool all_pass = true;
  std::vector<o21::LabeledBasis> bases;
  bases.reserve(results.size());
  for (const o21::CscoVerification& v : results) {
    all_pass = all_pass && v.pass;
    for (const o21::CscoLabel& label : v.missing) {
      std::cerr << "sector n=" << v.n << ": expected label " << o21::label_str(label)
                << " missing\n";
    }
    for (const o21::CscoLabel& label : v.extra) {
      std::cerr << "sector n=" << v.n << ": unexpected label " << o21::label_str(label)
                << "\n";
    }
    bases.push_back(v.basis);
  }

  if (config.format == "csv") {
    write_output(config, o21::labels_csv(bases));
  } else {
    o21::Json j = o21::Json::array();
    for (const o21::LabeledBasis& basis : bases) j.push_back(o21::to_json(basis));
    write_output(config, j.dump(2) + "\n");
  }
  return all_pass ? 0 : 1;
}

int run_degeneracy_table(const RunConfig& config) {
  if (config.format == "csv") {
    write_output(config, o21::degeneracy_table_csv(config.q, config.n_max));
  } else {
    write_output(config, o21::degeneracy_table_json(config.q, config.n_max).dump(2) + "\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bosonic-sector angular momentum toolkit"};
  app.require_subcommand(1);

  RunConfig spectrum_config;
  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "diagonalize L^2 per sector and check eigenvalues and multiplicities");
  add_common_options(spectrum, spectrum_config, o21::kEigenvalueTol);

  RunConfig algebra_config;
  CLI::App* algebra = app.add_subcommand(
      "verify-algebra", "check the operator identities on every sector up to n-max");
  add_common_options(algebra, algebra_config, o21::kIdentityTol);

  RunConfig csco_config;
  CLI::App* csco = app.add_subcommand(
      "csco", "jointly diagonalize the commuting chain and verify the labels");
  add_common_options(csco, csco_config, o21::kEigenvalueTol);

  RunConfig table_config;
  CLI::App* table = app.add_subcommand(
      "degeneracy-table", "tabulate level multiplicities for q <= --q, ell <= --n-max");
  add_common_options(table, table_config, o21::kEigenvalueTol);

  RunConfig classify_config;
  double phi_re = 0.0, phi_im = 0.0, e0_re = 0.0, e0_im = 0.0;
  double int_tol = o21::kIntegerTol;
  CLI::App* classify = app.add_subcommand(
      "classify", "classify an o(2,1) representation from its (Phi, E0) pair");
  classify->add_option("--phi", phi_re, "Re(Phi)");
  classify->add_option("--phi-im", phi_im, "Im(Phi)");
  classify->add_option("--e0", e0_re, "Re(E0)");
  classify->add_option("--e0-im", e0_im, "Im(E0)");
  classify->add_option("--int-tol", int_tol, "tolerance for integer tests")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  classify->add_option("--out", classify_config.out_path,
                       "write output to this path instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (spectrum->parsed()) {
      if (spectrum_config.q < 2) {
        std::cerr << "spectrum requires --q >= 2\n";
        return 2;
      }
      return run_spectrum(spectrum_config);
    }
    if (algebra->parsed()) {
      if (algebra_config.q < 1) {
        std::cerr << "verify-algebra requires --q >= 1\n";
        return 2;
      }
      if (algebra_config.n_max < 2) {
        std::cerr << "verify-algebra requires --n-max >= 2\n";
        return 2;
      }
      return run_verify_algebra(algebra_config);
    }
    if (csco->parsed()) {
      if (csco_config.q < 1) {
        std::cerr << "csco requires --q >= 1\n";
        return 2;
      }
      return run_csco(csco_config);
    }
    if (table->parsed()) {
      if (table_config.q < 2) {
        std::cerr << "degeneracy-table requires --q >= 2\n";
        return 2;
      }
      return run_degeneracy_table(table_config);
    }
    if (classify->parsed()) {
      o21::RepParams params{o21::Complex(phi_re, phi_im), o21::Complex(e0_re, e0_im)};
      o21::SeriesClassification result = o21::classify(params, int_tol);
      std::string text = o21::classification_to_json(params, result).dump(2) + "\n";
      if (classify_config.out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(classify_config.out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file");
        out << text;
      }
      return 0;
    }
  } catch (const o21::SectorCapError& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 2;
}
