#include "lieschur/lieschur.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "lieschur/catalog.hpp"
#include "lieschur/classifier.hpp"
#include "lieschur/error.hpp"
#include "lieschur/lieconst.hpp"
#include "lieschur/multiplier.hpp"
#include "lieschur/verify.hpp"

struct lsc_algebra {
  lieschur::LieAlgebra algebra;
};

namespace {

using namespace lieschur;

thread_local std::string last_error;

lsc_status status_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax:
    case ErrorKind::InvalidArgument:
    case ErrorKind::Io:
    case ErrorKind::LengthMismatch:
    case ErrorKind::AmbientMismatch:
    case ErrorKind::SingularMatrix: return LSC_ERR_SYNTAX;
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::JacobiViolation:
    case ErrorKind::DuplicateBracket: return LSC_ERR_INVALID_ALGEBRA;
    case ErrorKind::NotAnIdeal:
    case ErrorKind::NotNilpotent:
    case ErrorKind::Abelian:
    case ErrorKind::NotCentral: return LSC_ERR_PRECONDITION;
    case ErrorKind::ComplexNotExact: return LSC_ERR_INTERNAL;
  }
  return LSC_ERR_INTERNAL;
}

template <typename Fn>
lsc_status guarded(Fn&& fn) {
  last_error.clear();
  try {
    return fn();
  } catch (const Error& e) {
    last_error = std::string(to_string(e.kind())) + ": " + e.what();
    return status_for(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown error";
  }
  return LSC_ERR_INTERNAL;
}

lsc_status require(const void* p, const char* what) {
  if (p) return LSC_OK;
  last_error = std::string("InvalidArgument: null ") + what;
  return LSC_ERR_SYNTAX;
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

lsc_algebra* wrap(LieAlgebra L) { return new lsc_algebra{std::move(L)}; }

Vector parse_row(const char* const* entries, std::size_t offset, std::size_t len) {
  Vector v;
  v.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    if (!entries[offset + i]) throw Error(ErrorKind::InvalidArgument, "null matrix entry");
    v.push_back(parse_rational(entries[offset + i]));
  }
  return v;
}

std::string classification_line(const ClassificationResult& r) {
  std::ostringstream os;
  os << "status=" << to_string(r.status);
  if (r.family) {
    os << " family=" << family_id(*r.family);
    for (std::size_t i = 0; i < r.params.size(); ++i) os << (i ? "," : " params=") << r.params[i];
  }
  os << " s=" << r.s_value << "\n" << r.witness.describe() << "\n";
  if (!r.notes.empty()) os << "notes=" << r.notes << "\n";
  return os.str();
}

}  // namespace

extern "C" {

const char* lsc_last_error(void) { return last_error.c_str(); }

void lsc_string_free(char* s) { std::free(s); }

lsc_status lsc_algebra_parse(const char* text, lsc_algebra** out) {
  if (auto st = require(text, "text"); st != LSC_OK) return st;
  if (auto st = require(out, "out"); st != LSC_OK) return st;
  return guarded([&] {
    *out = wrap(parse_lieconst(text));
    return LSC_OK;
  });
}

lsc_status lsc_algebra_catalog(const char* name, const long* params, size_t param_count, lsc_algebra** out) {
  if (auto st = require(name, "name"); st != LSC_OK) return st;
  if (auto st = require(out, "out"); st != LSC_OK) return st;
  if (param_count > 0)
    if (auto st = require(params, "params"); st != LSC_OK) return st;
  return guarded([&] {
    const auto family = family_from_id(name);
    if (!family) throw Error(ErrorKind::InvalidArgument, std::string("unknown catalog name '") + name + "'");
    *out = wrap(make_entry(*family, std::vector<long>(params, params + param_count)).algebra);
    return LSC_OK;
  });
}

lsc_status lsc_algebra_direct_sum(const lsc_algebra* a, const lsc_algebra* b, lsc_algebra** out) {
  if (auto st = require(a, "algebra"); st != LSC_OK) return st;
  if (auto st = require(b, "algebra"); st != LSC_OK) return st;
  if (auto st = require(out, "out"); st != LSC_OK) return st;
  return guarded([&] {
    *out = wrap(direct_sum(a->algebra, b->algebra));
    return LSC_OK;
  });
}

lsc_status lsc_algebra_change_basis(const lsc_algebra* a, const char* const* matrix, lsc_algebra** out) {
  if (auto st = require(a, "algebra"); st != LSC_OK) return st;
  if (auto st = require(matrix, "matrix"); st != LSC_OK) return st;
  if (auto st = require(out, "out"); st != LSC_OK) return st;
  return guarded([&] {
    const std::size_t n = a->algebra.dim();
    Matrix P(n, n, parse_row(matrix, 0, n * n));
    *out = wrap(change_of_basis(a->algebra, P));
    return LSC_OK;
  });
}

lsc_status lsc_algebra_quotient(const lsc_algebra* a, const char* const* vectors, size_t count, lsc_algebra** out) {
  if (auto st = require(a, "algebra"); st != LSC_OK) return st;
  if (count > 0)
    if (auto st = require(vectors, "vectors"); st != LSC_OK) return st;
  if (auto st = require(out, "out"); st != LSC_OK) return st;
  return guarded([&] {
    const std::size_t n = a->algebra.dim();
    std::vector<Vector> rows;
    for (std::size_t r = 0; r < count; ++r) rows.push_back(parse_row(vectors, r * n, n));
    *out = wrap(quotient(a->algebra, Subspace::span(n, rows)).algebra);
    return LSC_OK;
  });
}

void lsc_algebra_free(lsc_algebra* a) { delete a; }

size_t lsc_algebra_dim(const lsc_algebra* a) { return a ? a->algebra.dim() : 0; }

lsc_status lsc_algebra_render(const lsc_algebra* a, char** out) {
  if (auto st = require(a, "algebra"); st != LSC_OK) return st;
  if (auto st = require(out, "out"); st != LSC_OK) return st;
  return guarded([&] {
    *out = duplicate(render_lieconst(a->algebra));
    return LSC_OK;
  });
}

lsc_status lsc_fingerprint_compute(const lsc_algebra* a, lsc_fingerprint* out) {
  if (auto st = require(a, "algebra"); st != LSC_OK) return st;
  if (auto st = require(out, "out"); st != LSC_OK) return st;
  return guarded([&] {
    const Fingerprint fp = fingerprint(a->algebra);
    const MultiplierReport m = schur_multiplier_dim(a->algebra);
    lsc_fingerprint r{};
    r.n = fp.n;
    r.derived_dim = fp.derived_dim;
    r.center_dim = fp.center_dim;
    r.nilpotent = fp.nilpotent() ? 1 : 0;
    r.nilpotency_class = fp.nilpotency_class.value_or(0);
    r.lcs_len = fp.lcs_dims.size();
    for (std::size_t i = 0; i < fp.lcs_dims.size() && i < 64; ++i) r.lcs_dims[i] = fp.lcs_dims[i];
    r.rank_d2 = m.rank_d2;
    r.rank_d3 = m.rank_d3;
    r.dim_M = m.dim_M;
    r.t = m.t;
    r.s = m.s;
    *out = r;
    return LSC_OK;
  });
}

lsc_status lsc_classify(const lsc_algebra* a, lsc_classification* out) {
  if (auto st = require(a, "algebra"); st != LSC_OK) return st;
  if (auto st = require(out, "out"); st != LSC_OK) return st;
  return guarded([&] {
    const ClassificationResult c = classify(a->algebra);
    lsc_classification r{};
    r.status = static_cast<lsc_class_status>(c.status);
    if (c.family) {
      const auto id = family_id(*c.family);
      std::memcpy(r.family, id.data(), std::min(id.size(), sizeof(r.family) - 1));
    }
    r.param_count = std::min<std::size_t>(c.params.size(), 2);
    for (std::size_t i = 0; i < r.param_count; ++i) r.params[i] = c.params[i];
    r.s = c.s_value;
    *out = r;
    return LSC_OK;
  });
}

lsc_status lsc_report_info(const lsc_algebra* a, char** out) {
  if (auto st = require(a, "algebra"); st != LSC_OK) return st;
  if (auto st = require(out, "out"); st != LSC_OK) return st;
  return guarded([&] {
    const SeriesReport s = lower_central_series(a->algebra);
    std::ostringstream os;
    os << "n=" << a->algebra.dim() << " dimL2=" << s.derived_dim << " dimZ=" << s.center_dim << " class=";
    if (s.nilpotency_class) os << *s.nilpotency_class;
    else os << "none";
    os << " lcs=";
    for (std::size_t i = 0; i < s.lcs_dims.size(); ++i) os << (i ? "," : "") << s.lcs_dims[i];
    os << " nilpotent=" << (s.nilpotent() ? "yes" : "no") << "\n";
    *out = duplicate(os.str());
    return LSC_OK;
  });
}

lsc_status lsc_report_multiplier(const lsc_algebra* a, char** out) {
  if (auto st = require(a, "algebra"); st != LSC_OK) return st;
  if (auto st = require(out, "out"); st != LSC_OK) return st;
  return guarded([&] {
    const MultiplierReport m = schur_multiplier_dim(a->algebra);
    std::ostringstream os;
    os << "n=" << m.n << " rank_d2=" << m.rank_d2 << " rank_d3=" << m.rank_d3 << " dimM=" << m.dim_M
       << " t=" << m.t << " s=" << m.s << "\n";
    *out = duplicate(os.str());
    return LSC_OK;
  });
}

lsc_status lsc_report_classify(const lsc_algebra* a, char** out) {
  if (auto st = require(a, "algebra"); st != LSC_OK) return st;
  if (auto st = require(out, "out"); st != LSC_OK) return st;
  return guarded([&] {
    const ClassificationResult c = classify(a->algebra);
    *out = duplicate(classification_line(c));
    return c.status == ClassificationStatus::TheoremViolation ? LSC_SUITE_FAILED : LSC_OK;
  });
}

lsc_status lsc_verify(const lsc_verify_options* options, char** report) {
  if (auto st = require(options, "options"); st != LSC_OK) return st;
  if (auto st = require(options->suite, "suite"); st != LSC_OK) return st;
  if (auto st = require(report, "report"); st != LSC_OK) return st;
  return guarded([&] {
    const auto suite = suite_from_name(options->suite);
    if (!suite) throw Error(ErrorKind::InvalidArgument, std::string("unknown suite '") + options->suite + "'");
    PopulationOptions opts;
    opts.max_m = options->max_m;
    opts.max_k = options->max_k;
    opts.max_n = options->max_n;
    opts.seed = options->seed;
    const SuiteReport r = run_suite(*suite, opts);
    *report = duplicate(r.render());
    return r.passed() ? LSC_OK : LSC_SUITE_FAILED;
  });
}

}  // extern "C"
