#include "relcat/relcat.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "../core/categorical.hpp"
#include "../core/classspec.hpp"
#include "../core/predicates.hpp"
#include "../core/textio.hpp"
#include "../core/verify.hpp"

using relcat::Errc;
using relcat::Error;

struct relcat_carrier {
  relcat::Carrier value;
};
struct relcat_relation {
  relcat::Relation value;
};
struct relcat_file {
  relcat::RelationFile value;
};

namespace {

thread_local std::string t_last_error;

relcat_status status_of(Errc code) {
  switch (code) {
    case Errc::zero_label: return RELCAT_E_ZERO_LABEL;
    case Errc::unit_label: return RELCAT_E_UNIT_LABEL;
    case Errc::pair_out_of_carrier: return RELCAT_E_PAIR_OUT_OF_CARRIER;
    case Errc::label_not_in_carrier: return RELCAT_E_LABEL_NOT_IN_CARRIER;
    case Errc::composition_mismatch: return RELCAT_E_COMPOSITION_MISMATCH;
    case Errc::subset_out_of_domain: return RELCAT_E_SUBSET_OUT_OF_DOMAIN;
    case Errc::oracle_too_large: return RELCAT_E_ORACLE_TOO_LARGE;
    case Errc::shape_mismatch: return RELCAT_E_SHAPE_MISMATCH;
    case Errc::commutativity_violated: return RELCAT_E_COMMUTATIVITY_VIOLATED;
    case Errc::different_sink: return RELCAT_E_DIFFERENT_SINK;
    case Errc::search_budget_exceeded: return RELCAT_E_SEARCH_BUDGET_EXCEEDED;
    case Errc::parse_error: return RELCAT_E_PARSE;
    case Errc::unknown_relation: return RELCAT_E_UNKNOWN_RELATION;
    case Errc::bad_class_name: return RELCAT_E_BAD_CLASS_NAME;
    case Errc::invalid_argument: return RELCAT_E_INVALID_ARGUMENT;
  }
  return RELCAT_E_INTERNAL;
}

// Runs `fn`, translating exceptions into status codes + the thread-local
// error message.
template <class F>
relcat_status guarded(F fn) {
  try {
    fn();
    return RELCAT_OK;
  } catch (const Error& e) {
    t_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return RELCAT_E_INTERNAL;
  } catch (...) {
    t_last_error = "unknown error";
    return RELCAT_E_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

relcat_status require(bool cond, const char* msg) {
  if (!cond) {
    t_last_error = msg;
    return RELCAT_E_INVALID_ARGUMENT;
  }
  return RELCAT_OK;
}

}  // namespace

extern "C" {

const char* relcat_status_name(relcat_status status) {
  switch (status) {
    case RELCAT_OK: return "OK";
    case RELCAT_E_ZERO_LABEL: return "ZeroLabel";
    case RELCAT_E_UNIT_LABEL: return "UnitLabel";
    case RELCAT_E_PAIR_OUT_OF_CARRIER: return "PairOutOfCarrier";
    case RELCAT_E_LABEL_NOT_IN_CARRIER: return "LabelNotInCarrier";
    case RELCAT_E_COMPOSITION_MISMATCH: return "CompositionMismatch";
    case RELCAT_E_SUBSET_OUT_OF_DOMAIN: return "SubsetOutOfDomain";
    case RELCAT_E_ORACLE_TOO_LARGE: return "OracleTooLarge";
    case RELCAT_E_SHAPE_MISMATCH: return "ShapeMismatch";
    case RELCAT_E_COMMUTATIVITY_VIOLATED: return "CommutativityViolated";
    case RELCAT_E_DIFFERENT_SINK: return "DifferentSink";
    case RELCAT_E_SEARCH_BUDGET_EXCEEDED: return "SearchBudgetExceeded";
    case RELCAT_E_PARSE: return "ParseError";
    case RELCAT_E_UNKNOWN_RELATION: return "UnknownRelation";
    case RELCAT_E_BAD_CLASS_NAME: return "BadClassName";
    case RELCAT_E_INVALID_ARGUMENT: return "InvalidArgument";
    case RELCAT_E_INTERNAL: return "InternalError";
  }
  return "UnknownStatus";
}

const char* relcat_last_error(void) { return t_last_error.c_str(); }

uint64_t relcat_default_budget(void) { return relcat::kDefaultBudget; }

void relcat_string_free(char* s) { std::free(s); }

relcat_status relcat_carrier_new(const int64_t* labels, size_t n, int strict,
                                 relcat_carrier** out) {
  if (auto st = require(out && (labels || n == 0), "null argument")) return st;
  return guarded([&] {
    *out = new relcat_carrier{
        relcat::Carrier(std::vector<relcat::Label>(labels, labels + n), strict != 0)};
  });
}

void relcat_carrier_free(relcat_carrier* c) { delete c; }

size_t relcat_carrier_size(const relcat_carrier* c) { return c ? c->value.size() : 0; }

relcat_status relcat_carrier_labels(const relcat_carrier* c, int64_t* buf, size_t bufn) {
  if (auto st = require(c && buf, "null argument")) return st;
  return guarded([&] {
    const auto& labels = c->value.labels();
    for (size_t i = 0; i < labels.size() && i < bufn; ++i) buf[i] = labels[i];
  });
}

relcat_status relcat_relation_new(const relcat_carrier* dom, const relcat_carrier* cod,
                                  const int64_t* pairs, size_t npairs,
                                  relcat_relation** out) {
  if (auto st = require(dom && cod && out && (pairs || npairs == 0), "null argument")) {
    return st;
  }
  return guarded([&] {
    std::vector<std::pair<relcat::Label, relcat::Label>> ps;
    ps.reserve(npairs);
    for (size_t i = 0; i < npairs; ++i) ps.emplace_back(pairs[2 * i], pairs[2 * i + 1]);
    *out = new relcat_relation{relcat::Relation(dom->value, cod->value, ps)};
  });
}

void relcat_relation_free(relcat_relation* r) { delete r; }

relcat_status relcat_identity(const relcat_carrier* c, relcat_relation** out) {
  if (auto st = require(c && out, "null argument")) return st;
  return guarded([&] { *out = new relcat_relation{relcat::Relation::identity(c->value)}; });
}

relcat_status relcat_constant(const relcat_carrier* c, int64_t label,
                              relcat_relation** out) {
  if (auto st = require(c && out, "null argument")) return st;
  return guarded(
      [&] { *out = new relcat_relation{relcat::Relation::constant(c->value, label)}; });
}

relcat_status relcat_compose(const relcat_relation* outer, const relcat_relation* inner,
                             relcat_relation** out) {
  if (auto st = require(outer && inner && out, "null argument")) return st;
  return guarded(
      [&] { *out = new relcat_relation{relcat::compose(outer->value, inner->value)}; });
}

relcat_status relcat_inverse(const relcat_relation* r, relcat_relation** out) {
  if (auto st = require(r && out, "null argument")) return st;
  return guarded([&] { *out = new relcat_relation{r->value.inverse()}; });
}

int relcat_relation_equal(const relcat_relation* a, const relcat_relation* b) {
  return a && b && a->value == b->value ? 1 : 0;
}

size_t relcat_relation_pair_count(const relcat_relation* r) {
  return r ? r->value.pair_count() : 0;
}

relcat_status relcat_classify(const relcat_relation* r, relcat_classification* out) {
  if (auto st = require(r && out, "null argument")) return st;
  return guarded([&] {
    relcat::PredicateReport rep = relcat::classify(r->value);
    out->correspondence = rep.correspondence;
    out->partial_function = rep.partial_function;
    out->injective = rep.injective;
    out->surjective = rep.surjective;
    out->function = rep.function;
    out->bijective = rep.bijective;
    out->section = rep.section;
    out->retraction = rep.retraction;
    out->mono = relcat::is_mono(r->value).fast_result;
    out->epi = relcat::is_epi(r->value).fast_result;
    out->iso = relcat::is_iso(r->value);
    out->extremal_epi = relcat::is_extremal_epi(r->value);
  });
}

namespace {

relcat_status copy_labels(const std::vector<relcat::Label>& labels, int64_t* buf,
                          size_t bufn, size_t* out_n) {
  *out_n = labels.size();
  for (size_t i = 0; i < labels.size() && i < bufn; ++i) buf[i] = labels[i];
  return RELCAT_OK;
}

}  // namespace

relcat_status relcat_image(const relcat_relation* r, int64_t* buf, size_t bufn,
                           size_t* out_n) {
  if (auto st = require(r && out_n && (buf || bufn == 0), "null argument")) return st;
  return guarded([&] { copy_labels(relcat::image(r->value), buf, bufn, out_n); });
}

relcat_status relcat_coimage(const relcat_relation* r, int64_t* buf, size_t bufn,
                             size_t* out_n) {
  if (auto st = require(r && out_n && (buf || bufn == 0), "null argument")) return st;
  return guarded([&] { copy_labels(relcat::coimage(r->value), buf, bufn, out_n); });
}

relcat_status relcat_image_of_subset(const relcat_relation* r, const int64_t* subset,
                                     size_t subset_n, int64_t* buf, size_t bufn,
                                     size_t* out_n) {
  if (auto st = require(r && out_n && (subset || subset_n == 0) && (buf || bufn == 0),
                        "null argument")) {
    return st;
  }
  return guarded([&] {
    std::vector<relcat::Label> labels(subset, subset + subset_n);
    copy_labels(relcat::image_of_subset(r->value, labels), buf, bufn, out_n);
  });
}

relcat_status relcat_is_mono(const relcat_relation* r, int* out) {
  if (auto st = require(r && out, "null argument")) return st;
  return guarded([&] { *out = relcat::is_mono(r->value).fast_result; });
}

relcat_status relcat_is_epi(const relcat_relation* r, int* out) {
  if (auto st = require(r && out, "null argument")) return st;
  return guarded([&] { *out = relcat::is_epi(r->value).fast_result; });
}

relcat_status relcat_mono_oracle(const relcat_relation* r, size_t cap, int* out) {
  if (auto st = require(r && out, "null argument")) return st;
  return guarded([&] { *out = *relcat::ftau_injective_oracle(r->value, cap).oracle_result; });
}

relcat_status relcat_epi_oracle(const relcat_relation* r, size_t cap, int* out) {
  if (auto st = require(r && out, "null argument")) return st;
  return guarded([&] { *out = *relcat::ftau_surjective_oracle(r->value, cap).oracle_result; });
}

relcat_status relcat_file_parse(const char* text, int strict, relcat_file** out) {
  if (auto st = require(text && out, "null argument")) return st;
  return guarded([&] { *out = new relcat_file{relcat::parse_file(text, strict != 0)}; });
}

relcat_status relcat_file_read(const char* path, int strict, relcat_file** out) {
  if (auto st = require(path && out, "null argument")) return st;
  return guarded([&] {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error(Errc::parse_error, std::string("cannot open '") + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    relcat::RelationFile parsed = relcat::parse_file(buf.str(), strict != 0);
    parsed.source = path;
    *out = new relcat_file{std::move(parsed)};
  });
}

void relcat_file_free(relcat_file* f) { delete f; }

size_t relcat_file_count(const relcat_file* f) { return f ? f->value.relations.size() : 0; }

relcat_status relcat_file_name(const relcat_file* f, size_t index, char** out) {
  if (auto st = require(f && out, "null argument")) return st;
  return guarded([&] {
    if (index >= f->value.relations.size()) {
      throw Error(Errc::invalid_argument, "relation index out of range");
    }
    *out = dup_string(f->value.relations[index].first);
  });
}

relcat_status relcat_file_get(const relcat_file* f, const char* name,
                              relcat_relation** out) {
  if (auto st = require(f && name && out, "null argument")) return st;
  return guarded([&] { *out = new relcat_relation{f->value.require(name)}; });
}

relcat_status relcat_file_serialize(const relcat_file* f, char** out) {
  if (auto st = require(f && out, "null argument")) return st;
  return guarded([&] { *out = dup_string(relcat::serialize_file(f->value)); });
}

relcat_status relcat_classify_report(const relcat_file* f, const char* name, int paranoid,
                                     char** out_text) {
  if (auto st = require(f && name && out_text, "null argument")) return st;
  return guarded([&] {
    *out_text = dup_string(
        relcat::classify_report(name, f->value.require(name), paranoid != 0));
  });
}

relcat_status relcat_compose_report(const relcat_file* f, const char* outer,
                                    const char* inner, char** out_text) {
  if (auto st = require(f && outer && inner && out_text, "null argument")) return st;
  return guarded([&] {
    relcat::Relation composite =
        relcat::compose(f->value.require(outer), f->value.require(inner));
    std::string name = std::string(outer) + "_after_" + inner;
    *out_text = dup_string(relcat::serialize_relation_block(name, composite));
  });
}

relcat_status relcat_factor_report(const relcat_file* f, const char* name, size_t mid_max,
                                   const char* e_class, const char* m_class, int paranoid,
                                   uint64_t budget, char** out_text) {
  if (auto st = require(f && name && e_class && m_class && out_text, "null argument")) {
    return st;
  }
  return guarded([&] {
    relcat::ClassSpec e = relcat::ClassSpec::parse(e_class);
    relcat::ClassSpec m = relcat::ClassSpec::parse(m_class);
    e.set_extremal_paranoid(paranoid != 0);
    m.set_extremal_paranoid(paranoid != 0);
    *out_text = dup_string(
        relcat::factor_report(name, f->value.require(name), mid_max, e, m, budget));
  });
}

relcat_status relcat_verify_report(const int64_t* pool, size_t pool_n, size_t size_max,
                                   size_t arity_max, const char* e_class,
                                   const char* m_class, const char* mode, int paranoid,
                                   uint64_t budget, char** out_text, int* any_fail) {
  if (auto st = require((pool || pool_n == 0) && e_class && m_class && mode && out_text &&
                            any_fail,
                        "null argument")) {
    return st;
  }
  return guarded([&] {
    relcat::ClassSpec e = relcat::ClassSpec::parse(e_class, arity_max);
    relcat::ClassSpec m = relcat::ClassSpec::parse(m_class, arity_max);
    e.set_extremal_paranoid(paranoid != 0);
    m.set_extremal_paranoid(paranoid != 0);
    std::vector<relcat::Label> labels(pool, pool + pool_n);
    std::string mode_str = mode;
    relcat::AxiomReport rep;
    if (mode_str == "axioms") {
      rep = relcat::verify_em_axioms(labels, size_max, arity_max, e, m, budget);
    } else if (mode_str == "necessary") {
      rep = relcat::verify_necessary_properties(labels, size_max, arity_max, e, m, budget);
    } else {
      throw Error(Errc::invalid_argument, "mode must be 'axioms' or 'necessary'");
    }
    *out_text = dup_string(rep.to_text());
    *any_fail = rep.any_fail();
  });
}

relcat_status relcat_oracle_report(const relcat_file* f, const char* name, size_t cap,
                                   char** out_text, int* agreement) {
  if (auto st = require(f && name && out_text && agreement, "null argument")) return st;
  return guarded([&] {
    relcat::OracleOutcome outcome = relcat::oracle_report(name, f->value.require(name), cap);
    *out_text = dup_string(outcome.text);
    *agreement = outcome.agreement;
  });
}

}  // extern "C"
