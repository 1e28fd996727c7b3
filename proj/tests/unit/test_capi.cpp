#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

#include <json.hpp>

#include "commvar/commvar.h"

namespace {

struct Algebra {
  commvar_algebra* g = nullptr;
  Algebra(char t, int r) { REQUIRE(commvar_algebra_create(t, r, 0, &g) == COMMVAR_OK); }
  ~Algebra() { commvar_algebra_destroy(g); }
};

std::string take(char* s) {
  std::string out = s;
  commvar_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("info") {
  Algebra g('G', 2);
  commvar_info info;
  REQUIRE(commvar_algebra_info(g.g, &info) == COMMVAR_OK);
  CHECK(std::string(info.label) == "G2");
  CHECK(info.dim == 14);
  CHECK(info.rank == 2);
  CHECK(info.num_positive_roots == 6);
  CHECK(info.lacety == 3);
  CHECK(info.root_length_classes == 2);
}

TEST_CASE("invalid input is reported with a message") {
  commvar_algebra* g = nullptr;
  CHECK(commvar_algebra_create('D', 2, 0, &g) == COMMVAR_ERR_INVALID_ARGUMENT);
  CHECK(g == nullptr);
  CHECK(std::strlen(commvar_last_error()) > 0);
  CHECK(commvar_validate_type('E', 9) == COMMVAR_ERR_INVALID_ARGUMENT);
  CHECK(commvar_validate_type('E', 7) == COMMVAR_OK);
  CHECK(commvar_algebra_create('A', 2, 0, nullptr) == COMMVAR_ERR_INVALID_ARGUMENT);
  CHECK(commvar_algebra_info(nullptr, nullptr) == COMMVAR_ERR_INVALID_ARGUMENT);
  CHECK(std::string(commvar_status_string(COMMVAR_ERR_UNSUPPORTED)) == "unsupported");
  commvar_algebra_destroy(nullptr);
}

TEST_CASE("basis names and centralizer dimensions") {
  Algebra g('B', 2);
  char* name = nullptr;
  REQUIRE(commvar_basis_name(g.g, 0, &name) == COMMVAR_OK);
  CHECK(take(name) == "H1");
  CHECK(commvar_basis_name(g.g, 10, &name) == COMMVAR_ERR_INVALID_ARGUMENT);
  std::vector<long> coeffs(10, 0);
  int dim = 0;
  REQUIRE(commvar_centralizer_dim(g.g, coeffs.data(), coeffs.size(), &dim) == COMMVAR_OK);
  CHECK(dim == 10);
  coeffs[0] = 3;
  coeffs[1] = 5;
  REQUIRE(commvar_centralizer_dim(g.g, coeffs.data(), coeffs.size(), &dim) == COMMVAR_OK);
  CHECK(dim == 2);
  CHECK(commvar_centralizer_dim(g.g, coeffs.data(), 3, &dim) == COMMVAR_ERR_INVALID_ARGUMENT);
}

TEST_CASE("irregular codimension with ledger") {
  Algebra g('B', 2);
  int codim = 0;
  char* ledger = nullptr;
  REQUIRE(commvar_irr_codim(g.g, &codim, &ledger) == COMMVAR_OK);
  CHECK(codim == 3);
  const auto doc = nlohmann::json::parse(take(ledger));
  CHECK(doc["algebra"] == "B2");
  CHECK(doc["codim"] == 3);
  bool found = false;
  for (const auto& e : doc["ledger"])
    if (e["rep"] == "B2subreg") {
      found = true;
      CHECK(e["c"] == 3);
      CHECK(e["c_exact"] == true);
      CHECK(e["I"] == nlohmann::json::array({1, 2}));
    }
  CHECK(found);
  REQUIRE(commvar_irr_codim(g.g, &codim, nullptr) == COMMVAR_OK);
}

TEST_CASE("class ledger of one subset") {
  Algebra b3('B', 3);
  const int in_b2[] = {2, 3};
  char* ledger = nullptr;
  REQUIRE(commvar_class_ledger(b3.g, in_b2, 2, &ledger) == COMMVAR_OK);
  CHECK(nlohmann::json::parse(take(ledger))["ledger"].size() == 4);
  const int all[] = {1, 2, 3};
  CHECK(commvar_class_ledger(b3.g, all, 3, &ledger) == COMMVAR_ERR_UNSUPPORTED);
  CHECK(std::string(commvar_last_error()).find("B3") != std::string::npos);
  CHECK(ledger == nullptr);
  CHECK(commvar_class_ledger(b3.g, all, 0, &ledger) == COMMVAR_ERR_INVALID_ARGUMENT);
  const int bad[] = {4};
  CHECK(commvar_class_ledger(b3.g, bad, 1, &ledger) == COMMVAR_ERR_INVALID_ARGUMENT);
}

TEST_CASE("verification entry point") {
  commvar_verify_options opts{1, 0, 0, 0, 0};
  char* report = nullptr;
  int code = -1;
  CHECK(commvar_verify(&opts, &report, &code, nullptr) == COMMVAR_ERR_INVALID_ARGUMENT);
  CHECK(commvar_verify(nullptr, &report, &code, nullptr) == COMMVAR_ERR_INVALID_ARGUMENT);
}
