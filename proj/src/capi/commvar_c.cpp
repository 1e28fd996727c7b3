#include "commvar/commvar.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "commvar/decomp.hpp"
#include "commvar/verify.hpp"

struct commvar_algebra {
  std::unique_ptr<commvar::LieAlgebra> g;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
commvar_status guarded(F&& f) {
  last_error.clear();
  try {
    return f();
  } catch (const commvar::UnsupportedFactor& e) {
    last_error = e.what();
    return COMMVAR_ERR_UNSUPPORTED;
  } catch (const commvar::UndeterminedResult& e) {
    last_error = e.what();
    return COMMVAR_ERR_INCONCLUSIVE;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return COMMVAR_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return COMMVAR_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return COMMVAR_ERR_INTERNAL;
  }
}

commvar_status invalid(const char* msg) {
  last_error = msg;
  return COMMVAR_ERR_INVALID_ARGUMENT;
}

nlohmann::json ledger_entry(const commvar::DecompClassDescriptor& d) {
  nlohmann::json subset = nlohmann::json::array();
  for (int i : d.subset) subset.push_back(i + 1);
  nlohmann::json e{{"I", subset},
                   {"signature", d.signature},
                   {"rep", d.rep.label},
                   {"dim_tI", d.dim_tI},
                   {"dim_sIx", d.dim_sIx},
                   {"dim_class", d.dim_class},
                   {"irregular", d.irregular}};
  e["c"] = d.c_value ? nlohmann::json(*d.c_value) : nlohmann::json(nullptr);
  e["c_exact"] = d.c_exact;
  return e;
}

}  // namespace

extern "C" {

const char* commvar_last_error(void) { return last_error.c_str(); }

const char* commvar_status_string(commvar_status status) {
  switch (status) {
    case COMMVAR_OK: return "ok";
    case COMMVAR_ERR_INVALID_ARGUMENT: return "invalid argument";
    case COMMVAR_ERR_UNSUPPORTED: return "unsupported";
    case COMMVAR_ERR_INCONCLUSIVE: return "inconclusive";
    case COMMVAR_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void commvar_string_free(char* s) { std::free(s); }

commvar_status commvar_validate_type(char type, int rank) {
  return guarded([&] {
    const std::string why = commvar::validate_type(type, rank);
    if (!why.empty()) {
      last_error = why;
      return COMMVAR_ERR_INVALID_ARGUMENT;
    }
    return COMMVAR_OK;
  });
}

commvar_status commvar_algebra_create(char type, int rank, int tamper, commvar_algebra** out) {
  if (out == nullptr) return invalid("out is NULL");
  *out = nullptr;
  return guarded([&] {
    auto h = std::make_unique<commvar_algebra>();
    h->g = std::make_unique<commvar::LieAlgebra>(type, rank, commvar::BuildOptions{tamper != 0});
    *out = h.release();
    return COMMVAR_OK;
  });
}

void commvar_algebra_destroy(commvar_algebra* g) { delete g; }

commvar_status commvar_algebra_info(const commvar_algebra* g, commvar_info* out) {
  if (g == nullptr || out == nullptr) return invalid("NULL argument");
  return guarded([&] {
    const auto& rs = g->g->roots();
    std::memset(out, 0, sizeof(*out));
    std::strncpy(out->label, rs.label().c_str(), sizeof(out->label) - 1);
    out->dim = g->g->dim();
    out->rank = g->g->rank();
    out->num_positive_roots = rs.num_positive();
    out->lacety = rs.lacety();
    out->root_length_classes = rs.root_length_classes();
    return COMMVAR_OK;
  });
}

commvar_status commvar_basis_name(const commvar_algebra* g, int i, char** out) {
  if (g == nullptr || out == nullptr) return invalid("NULL argument");
  if (i < 0 || i >= g->g->dim()) return invalid("basis index out of range");
  return guarded([&] {
    *out = dup(g->g->basis_name(i));
    return COMMVAR_OK;
  });
}

commvar_status commvar_centralizer_dim(const commvar_algebra* g, const long* coeffs, size_t n, int* out) {
  if (g == nullptr || coeffs == nullptr || out == nullptr) return invalid("NULL argument");
  if (n != static_cast<size_t>(g->g->dim())) return invalid("coefficient count must equal dim g");
  return guarded([&] {
    commvar::RatVector v(n);
    for (size_t i = 0; i < n; ++i) v[i] = coeffs[i];
    *out = commvar::centralizer_dim(commvar::LieElement(g->g.get(), v));
    return COMMVAR_OK;
  });
}

commvar_status commvar_irr_codim(const commvar_algebra* g, int* codim, char** ledger_json) {
  if (g == nullptr || codim == nullptr) return invalid("NULL argument");
  if (ledger_json != nullptr) *ledger_json = nullptr;
  return guarded([&] {
    const auto res = commvar::commvar_irr_codim(*g->g);
    *codim = res.codim;
    if (ledger_json != nullptr) {
      nlohmann::json ledger = nlohmann::json::array();
      for (const auto& d : res.ledger) ledger.push_back(ledger_entry(d));
      nlohmann::json doc{{"algebra", g->g->roots().label()}, {"codim", res.codim}, {"reason", res.reason},
                         {"ledger", ledger}};
      *ledger_json = dup(doc.dump(2));
    }
    return COMMVAR_OK;
  });
}

commvar_status commvar_class_ledger(const commvar_algebra* g, const int* subset, size_t n, char** ledger_json) {
  if (g == nullptr || ledger_json == nullptr || (subset == nullptr && n > 0)) return invalid("NULL argument");
  *ledger_json = nullptr;
  return guarded([&] {
    std::vector<int> idx;
    for (size_t i = 0; i < n; ++i) idx.push_back(subset[i] - 1);
    if (idx.empty()) throw commvar::InvalidArgument("the subset I must be nonempty");
    const commvar::LeviData levi = commvar::levi_data(*g->g, idx);
    commvar::FactorCodimCache cache;
    nlohmann::json ledger = nlohmann::json::array();
    for (const auto& rep : commvar::direct_sum_reps(*g->g, levi.subsystem.factors))
      ledger.push_back(ledger_entry(commvar::class_descriptor(*g->g, levi, rep, cache)));
    nlohmann::json doc{{"algebra", g->g->roots().label()}, {"ledger", ledger}};
    *ledger_json = dup(doc.dump(2));
    return COMMVAR_OK;
  });
}

commvar_status commvar_verify(const commvar_verify_options* opts, char** report_json, int* exit_code,
                              char** first_failure) {
  if (opts == nullptr || report_json == nullptr || exit_code == nullptr) return invalid("NULL argument");
  *report_json = nullptr;
  if (first_failure != nullptr) *first_failure = nullptr;
  return guarded([&] {
    commvar::VerifyOptions vo;
    vo.fast = opts->fast != 0;
    vo.seed = opts->seed;
    vo.max_rank = opts->max_rank;
    vo.workers = opts->workers;
    vo.tamper = opts->tamper != 0;
    const auto results = commvar::run_verification(vo);
    *report_json = dup(commvar::report_json(results).dump(2));
    *exit_code = commvar::report_exit_code(results);
    if (first_failure != nullptr) {
      const auto* f = commvar::first_failure(results);
      *first_failure = dup(f != nullptr ? f->check_id : "");
    }
    return COMMVAR_OK;
  });
}

}  // extern "C"
