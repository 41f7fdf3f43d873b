#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "o21/serialize.hpp"

using namespace o21;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string golden_path(const std::string& name) {
  const char* dir = std::getenv("O21_GOLDEN_DIR");
  REQUIRE(dir != nullptr);
  return std::string(dir) + "/" + name;
}

}  // namespace

TEST_CASE("sector serialization") {
  SectorPtr s = enumerate_sector(3, 2);
  Json j = to_json(*s);

  SUBCASE("matches the hand-derived form") {
    Json expected = Json::parse(R"({
      "q": 3, "n": 2,
      "basis": [[2,0,0],[1,1,0],[0,2,0],[1,0,1],[0,1,1],[0,0,2]]
    })");
    CHECK(j == expected);
  }
  SUBCASE("byte-stable against the golden file") {
    CHECK(j.dump(2) + "\n" == read_file(golden_path("sector_q3_n2.json")));
  }
  SUBCASE("round trip re-derives the identical index maps") {
    SectorPtr restored = sector_from_json(j);
    REQUIRE(restored->dim() == s->dim());
    for (std::size_t i = 0; i < s->dim(); ++i) {
      CHECK(restored->state(i) == s->state(i));
      CHECK(restored->index_of(s->state(i)) == i);
    }
  }
  SUBCASE("tampered basis order is rejected") {
    Json bad = j;
    std::swap(bad["basis"][0], bad["basis"][1]);
    CHECK_THROWS_AS(sector_from_json(bad), std::invalid_argument);
  }
}

TEST_CASE("operator serialization") {
  SectorPtr s = enumerate_sector(3, 2);
  LinearOperator a = annihilator(1, s);
  Json j = to_json(a);

  SUBCASE("entries are row-col sorted quadruples") {
    Json expected = Json::parse(R"([
      [0, 0, 1.4142135623730951, 0.0],
      [1, 1, 1.0, 0.0],
      [2, 3, 1.0, 0.0]
    ])");
    CHECK(j["entries"] == expected);
    CHECK(j["domain"]["n"] == 2);
    CHECK(j["codomain"]["n"] == 1);
  }
  SUBCASE("byte-stable against the golden file") {
    CHECK(j.dump(2) + "\n" == read_file(golden_path("annihilator_q3_n2_mode1.json")));
  }
  SUBCASE("round trip is entrywise exact") {
    LinearOperator restored = operator_from_json(j);
    CHECK(op_sub(restored, a).max_abs_entry() == 0.0);
    LinearOperator lsq = angular_momentum_sq(s);
    CHECK(op_sub(operator_from_json(to_json(lsq)), lsq).max_abs_entry() == 0.0);
  }
}

TEST_CASE("report serialization") {
  SUBCASE("spectrum schema") {
    Json j = to_json(sector_spectrum(3, 2));
    CHECK(j["q"] == 3);
    CHECK(j["n"] == 2);
    CHECK(j["pass"] == true);
    REQUIRE(j["lines"].size() == 2);
    CHECK(j["lines"][0]["ell"] == 2);
    CHECK(j["lines"][0]["eigenvalue"] == 6.0);
    CHECK(j["lines"][0]["multiplicity"] == 5);
    CHECK(j["lines"][0].contains("max_residual"));
  }
  SUBCASE("identity report schema") {
    Json j = to_json(verify_algebra(2, 4));
    CHECK(j["q"] == 2);
    CHECK(j["n_max"] == 4);
    CHECK(j["pass"] == true);
    bool found = false;
    for (const auto& check : j["identities"]) {
      if (check["name"] == "casimir_lowered") {
        found = true;
        CHECK(check["sectors"].size() == 5);
        CHECK(check["pass"] == true);
      }
    }
    CHECK(found);
  }
  SUBCASE("labeled basis schema") {
    CscoVerification v = verify_csco(3, 2);
    Json j = to_json(v.basis);
    CHECK(j["q"] == 3);
    CHECK(j["n"] == 2);
    CHECK(j["pass"] == true);
    REQUIRE(j["labels"].size() == 6);
    CHECK(j["labels"][0]["ells"] == Json::array({2, 2}));
    CHECK(j["labels"][0]["m"] == 2);
  }
  SUBCASE("classification schema") {
    RepParams p{Complex(-0.5, 1.0), Complex(0.0, 0.0)};
    Json j = classification_to_json(p, classify(p));
    CHECK(j["phi"] == Json::array({-0.5, 1.0}));
    CHECK(j["series"] == "D(Phi,E0)");
    CHECK(j["unitary"] == true);
    CHECK(j["reason"] == "principal");
    CHECK(j["j3_spectrum"]["direction"] == "two-sided");
  }
}

TEST_CASE("csv exports") {
  SUBCASE("spectrum rows") {
    SpectrumReport report = sector_spectrum(3, 2);
    std::ostringstream expected;
    expected << std::setprecision(17);
    expected << "q,n,ell,eigenvalue,multiplicity,max_residual\n";
    expected << "3,2,2,6,5," << report.lines[0].max_residual << "\n";
    expected << "3,2,0,0,1," << report.lines[1].max_residual << "\n";
    CHECK(spectrum_csv({report}) == expected.str());
  }
  SUBCASE("degeneracy table") {
    std::string csv = degeneracy_table_csv(4, 3);
    CHECK(csv ==
          "q,ell,degeneracy\n"
          "2,0,1\n2,1,2\n2,2,2\n2,3,2\n"
          "3,0,1\n3,1,3\n3,2,5\n3,3,7\n"
          "4,0,1\n4,1,4\n4,2,9\n4,3,16\n");
    Json j = degeneracy_table_json(4, 3);
    CHECK(j["rows"].size() == 12);
    CHECK(j["rows"][6]["degeneracy"] == 5);
  }
  SUBCASE("labels csv") {
    CscoVerification v = verify_csco(3, 1);
    REQUIRE(v.basis.vectors.size() == 3);
    std::ostringstream expected;
    expected << std::setprecision(17);
    expected << "q,n,ells,m,residual\n";
    expected << "3,1,1;1,1," << v.basis.vectors[0].residual << "\n";
    expected << "3,1,1;1,-1," << v.basis.vectors[1].residual << "\n";
    expected << "3,1,1;0,0," << v.basis.vectors[2].residual << "\n";
    CHECK(labels_csv({v.basis}) == expected.str());
  }
}
