#include "apurity/apurity.h"

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "core/error.hpp"
#include "core/operator_io.hpp"
#include "core/service.hpp"

struct ap_context {
  apurity::Service service;
  std::string last_error;
};

struct ap_result {
  apurity::Report report;
  std::map<int, std::string> rendered;
  std::map<std::string, std::string> fields;
};

namespace {

ap_status to_status(apurity::ErrorKind kind) { return static_cast<ap_status>(static_cast<int>(kind)); }

template <typename Fn>
ap_status guarded(ap_context* ctx, Fn&& fn) {
  if (!ctx) return AP_ERR_INVALID_ARGUMENT;
  ctx->last_error.clear();
  try {
    return fn();
  } catch (const apurity::Error& e) {
    ctx->last_error = e.what();
    return to_status(e.kind());
  } catch (const std::exception& e) {
    ctx->last_error = std::string("internal error: ") + e.what();
    return AP_ERR_INTERNAL;
  } catch (...) {
    ctx->last_error = "internal error";
    return AP_ERR_INTERNAL;
  }
}

template <typename Fn>
ap_status produce(ap_context* ctx, ap_result** out, Fn&& fn) {
  if (!out) {
    if (ctx) ctx->last_error = "result pointer is NULL";
    return AP_ERR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  return guarded(ctx, [&] {
    auto result = std::make_unique<ap_result>();
    result->report = fn();
    const bool ok = result->report.ok;
    *out = result.release();
    if (!ok) {
      ctx->last_error = "one or more checks failed";
      return AP_ERR_MISMATCH;
    }
    return AP_OK;
  });
}

std::optional<apurity::oracle::ContractionOperator> maybe_operator(const char* text) {
  if (!text) return std::nullopt;
  return apurity::oracle::parse_operator(text);
}

}  // namespace

extern "C" {

const char* ap_version(void) { return "0.1.0"; }

const char* ap_status_name(ap_status status) {
  switch (status) {
    case AP_OK: return "ok";
    case AP_ERR_MISMATCH: return "mismatch";
    case AP_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case AP_ERR_SIZE_CAP: return "size_cap_exceeded";
    case AP_ERR_NOT_STABILIZED: return "not_stabilized";
    case AP_ERR_IO: return "io_error";
    case AP_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

ap_status ap_context_create(ap_context** out) {
  if (!out) return AP_ERR_INVALID_ARGUMENT;
  try {
    *out = new ap_context{};
  } catch (...) {
    *out = nullptr;
    return AP_ERR_INTERNAL;
  }
  return AP_OK;
}

void ap_context_destroy(ap_context* ctx) { delete ctx; }

ap_status ap_context_set_seed(ap_context* ctx, uint64_t seed) {
  return guarded(ctx, [&] {
    ctx->service.set_seed(seed);
    return AP_OK;
  });
}

ap_status ap_context_set_size_cap(ap_context* ctx, uint64_t cap) {
  return guarded(ctx, [&] {
    ctx->service.set_size_cap(cap);
    return AP_OK;
  });
}

ap_status ap_context_set_exact_threshold(ap_context* ctx, uint64_t threshold) {
  return guarded(ctx, [&] {
    ctx->service.set_exact_threshold(static_cast<std::size_t>(threshold));
    return AP_OK;
  });
}

ap_status ap_context_set_cache(ap_context* ctx, const char* path) {
  return guarded(ctx, [&] {
    ctx->service.set_cache_path(path ? path : "");
    return AP_OK;
  });
}

const char* ap_context_last_error(const ap_context* ctx) { return ctx ? ctx->last_error.c_str() : "null context"; }

ap_status ap_bott(ap_context* ctx, int32_t n, int64_t d, ap_result** out) {
  return produce(ctx, out, [&] { return ctx->service.bott(n, d); });
}

ap_status ap_product(ap_context* ctx, int32_t n, int64_t a1, int64_t a2, ap_result** out) {
  return produce(ctx, out, [&] { return ctx->service.product(n, a1, a2); });
}

ap_status ap_decompose(ap_context* ctx, int32_t n, int64_t A, int64_t B, ap_result** out) {
  return produce(ctx, out, [&] { return ctx->service.decompose(n, A, B); });
}

ap_status ap_predict(ap_context* ctx, int32_t n, int32_t k, int64_t A, int64_t B, ap_result** out) {
  return produce(ctx, out, [&] { return ctx->service.predict(n, k, A, B); });
}

ap_status ap_oracle(ap_context* ctx, int32_t n, int32_t k, const char* operator_json, int64_t A, int64_t B,
                    ap_result** out) {
  return produce(ctx, out, [&] { return ctx->service.oracle(maybe_operator(operator_json), n, k, A, B); });
}

ap_status ap_series(ap_context* ctx, ap_engine engine, int32_t n, int32_t k, const char* operator_json, int64_t a1,
                    int64_t a2, int64_t m_lo, int64_t m_hi, ap_result** out) {
  return produce(ctx, out, [&] {
    if (engine == AP_ENGINE_REP) {
      apurity::require(operator_json == nullptr, "the rep engine only models the special-fiber operator");
      return ctx->service.series_rep(n, k, a1, a2, {m_lo, m_hi});
    }
    apurity::require(engine == AP_ENGINE_ORACLE, "unknown engine");
    return ctx->service.series_oracle(maybe_operator(operator_json), n, k, a1, a2, {m_lo, m_hi});
  });
}

ap_status ap_asymptotics(ap_context* ctx, int32_t n, int32_t k, int64_t a1, int64_t a2, ap_result** out) {
  return produce(ctx, out, [&] { return ctx->service.asymptotics_special_fiber(n, k, a1, a2); });
}

ap_status ap_asymptotics_product(ap_context* ctx, int32_t n, int64_t a1, int64_t a2, ap_result** out) {
  return produce(ctx, out, [&] { return ctx->service.asymptotics_product(n, a1, a2); });
}

ap_status ap_scan(ap_context* ctx, int32_t n, int32_t k, int64_t a1_lo, int64_t a1_hi, int64_t a2_lo, int64_t a2_hi,
                  ap_result** out) {
  return produce(ctx, out, [&] { return ctx->service.scan(n, k, {a1_lo, a1_hi}, {a2_lo, a2_hi}); });
}

ap_status ap_verify(ap_context* ctx, ap_suite suite, ap_result** out) {
  return produce(ctx, out, [&] {
    apurity::require(suite == AP_SUITE_SMALL || suite == AP_SUITE_FULL, "unknown suite");
    return ctx->service.verify(suite == AP_SUITE_SMALL ? apurity::VerifySuite::small : apurity::VerifySuite::full);
  });
}

const char* ap_result_text(ap_result* result, ap_format format) {
  if (!result) return nullptr;
  auto it = result->rendered.find(format);
  if (it == result->rendered.end()) {
    apurity::OutputFormat f = apurity::OutputFormat::json;
    if (format == AP_FORMAT_CSV) f = apurity::OutputFormat::csv;
    if (format == AP_FORMAT_TABLE) f = apurity::OutputFormat::table;
    it = result->rendered.emplace(format, result->report.render(f)).first;
  }
  return it->second.c_str();
}

const char* ap_result_field(ap_result* result, const char* key) {
  if (!result || !key) return nullptr;
  const auto& doc = result->report.doc;
  if (!doc.contains(key)) return nullptr;
  const auto& v = doc[key];
  std::string text;
  if (v.is_string()) {
    text = v.get<std::string>();
  } else if (v.is_primitive()) {
    text = v.dump();
  } else {
    return nullptr;
  }
  return result->fields.insert_or_assign(key, std::move(text)).first->second.c_str();
}

void ap_result_destroy(ap_result* result) { delete result; }

}  // extern "C"
