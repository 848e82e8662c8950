#include "aqs/aqs.h"

#include <exception>
#include <new>
#include <string>

#include "aqs/commands.hpp"
#include "aqs/config.hpp"
#include "aqs/error.hpp"

struct aqs_config {
  aqs::ConfigMap file;
  aqs::ConfigMap flags;
};

struct aqs_result {
  aqs::CommandResult value;
};

namespace {

thread_local std::string last_error;

aqs_status to_status(aqs::ErrorCode code) {
  using aqs::ErrorCode;
  switch (code) {
    case ErrorCode::LengthMismatch: return AQS_E_LENGTH_MISMATCH;
    case ErrorCode::DoubleMeasurement: return AQS_E_DOUBLE_MEASUREMENT;
    case ErrorCode::PositionOutOfRange: return AQS_E_POSITION_OUT_OF_RANGE;
    case ErrorCode::InvalidParams: return AQS_E_INVALID_PARAMS;
    case ErrorCode::ExpiredKey: return AQS_E_EXPIRED_KEY;
    case ErrorCode::InvalidScenario: return AQS_E_INVALID_SCENARIO;
    case ErrorCode::MalformedEvidence: return AQS_E_MALFORMED_EVIDENCE;
    case ErrorCode::MalformedTranscript: return AQS_E_MALFORMED_TRANSCRIPT;
    case ErrorCode::DivisionByZero: return AQS_E_DIVISION_BY_ZERO;
    case ErrorCode::AlreadyRegistered: return AQS_E_ALREADY_REGISTERED;
    case ErrorCode::MalformedCheck: return AQS_E_MALFORMED_CHECK;
    case ErrorCode::InsufficientFunds: return AQS_E_INSUFFICIENT_FUNDS;
    case ErrorCode::UnknownAccount: return AQS_E_UNKNOWN_ACCOUNT;
    case ErrorCode::InvalidConfig: return AQS_E_INVALID_CONFIG;
    case ErrorCode::Io: return AQS_E_IO;
  }
  return AQS_E_INTERNAL;
}

aqs_status fail(aqs_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename F>
aqs_status guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return AQS_OK;
  } catch (const aqs::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(AQS_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(AQS_E_INTERNAL, e.what());
  }
}

}  // namespace

extern "C" {

const char* aqs_version(void) { return "1.0.0"; }

const char* aqs_status_name(aqs_status status) {
  switch (status) {
    case AQS_OK: return "ok";
    case AQS_E_NULL_ARGUMENT: return "NullArgument";
    case AQS_E_INTERNAL: return "Internal";
    default: break;
  }
  if (status > AQS_OK && status <= AQS_E_IO) {
    static const aqs::ErrorCode codes[] = {
        aqs::ErrorCode::LengthMismatch,     aqs::ErrorCode::DoubleMeasurement,
        aqs::ErrorCode::PositionOutOfRange, aqs::ErrorCode::InvalidParams,
        aqs::ErrorCode::ExpiredKey,         aqs::ErrorCode::InvalidScenario,
        aqs::ErrorCode::MalformedEvidence,  aqs::ErrorCode::MalformedTranscript,
        aqs::ErrorCode::DivisionByZero,     aqs::ErrorCode::AlreadyRegistered,
        aqs::ErrorCode::MalformedCheck,     aqs::ErrorCode::InsufficientFunds,
        aqs::ErrorCode::UnknownAccount,     aqs::ErrorCode::InvalidConfig,
        aqs::ErrorCode::Io};
    // to_string returns views of string literals.
    return aqs::to_string(codes[status - 1]).data();
  }
  return "unknown";
}

const char* aqs_last_error(void) { return last_error.c_str(); }

aqs_status aqs_config_create(aqs_config** out) {
  if (!out) return fail(AQS_E_NULL_ARGUMENT, "out is null");
  return guarded([&] { *out = new aqs_config(); });
}

void aqs_config_destroy(aqs_config* config) { delete config; }

aqs_status aqs_config_load_file(aqs_config* config, const char* path) {
  if (!config || !path) return fail(AQS_E_NULL_ARGUMENT, "config or path is null");
  return guarded([&] {
    for (auto& [k, v] : aqs::read_config_file(path)) config->file[k] = v;
  });
}

aqs_status aqs_config_set(aqs_config* config, const char* key, const char* value) {
  if (!config || !key || !value) return fail(AQS_E_NULL_ARGUMENT, "null argument");
  return guarded([&] { config->flags[key] = value; });
}

aqs_status aqs_config_validate(const aqs_config* config) {
  if (!config) return fail(AQS_E_NULL_ARGUMENT, "config is null");
  return guarded([&] { (void)aqs::parse_config(config->file, config->flags); });
}

aqs_status aqs_run(const aqs_config* config, const char* command, aqs_result** out) {
  if (!config || !command || !out) return fail(AQS_E_NULL_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto parsed = aqs::parse_config(config->file, config->flags);
    auto value = aqs::run_command(command, parsed);
    *out = new aqs_result{std::move(value)};
  });
}

void aqs_result_destroy(aqs_result* result) { delete result; }

int aqs_result_exit_code(const aqs_result* result) {
  return result ? result->value.exit_code : aqs::exit_codes::kFailure;
}

const char* aqs_result_outcome(const aqs_result* result) {
  return result ? result->value.outcome.c_str() : "";
}

const char* aqs_result_transcript(const aqs_result* result) {
  return result ? result->value.transcript.c_str() : "";
}

const char* aqs_result_summary(const aqs_result* result) {
  return result ? result->value.summary.c_str() : "";
}

}  // extern "C"
