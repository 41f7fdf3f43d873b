#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "o21/classify.hpp"
#include "o21/csco.hpp"

namespace o21 {

using Json = nlohmann::ordered_json;

// Sector form: {"q":, "n":, "basis": [[n_1..n_q], ...]} with the basis listed
// explicitly in storage order.
Json to_json(const Sector& s);
// Re-enumerates from (q,n) and checks that the stored basis matches exactly.
SectorPtr sector_from_json(const Json& j, std::size_t cap = kDefaultSectorCap);

// Operator form: {"domain":, "codomain":, "entries": [[row, col, re, im], ...]}
// with entries sorted by (row, col).
Json to_json(const LinearOperator& op);
LinearOperator operator_from_json(const Json& j, std::size_t cap = kDefaultSectorCap);

Json to_json(const IdentityReport& report);
Json to_json(const SpectrumReport& report);
Json to_json(const LabeledBasis& basis);
Json classification_to_json(const RepParams& p, const SeriesClassification& c);

std::string spectrum_csv(const std::vector<SpectrumReport>& reports);
std::string identity_csv(const IdentityReport& report);
std::string labels_csv(const std::vector<LabeledBasis>& bases);

struct DegeneracyRow {
  int q;
  int ell;
  std::uint64_t value;
};

std::vector<DegeneracyRow> degeneracy_table(int q_max, int ell_max);
Json degeneracy_table_json(int q_max, int ell_max);
std::string degeneracy_table_csv(int q_max, int ell_max);

}  // namespace o21
