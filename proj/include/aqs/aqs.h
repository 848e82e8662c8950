/* C interface to the arbitrated quantum signature simulator. */
#ifndef AQS_AQS_H
#define AQS_AQS_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#  ifdef AQS_BUILDING
#    define AQS_API __declspec(dllexport)
#  else
#    define AQS_API __declspec(dllimport)
#  endif
#else
#  define AQS_API __attribute__((visibility("default")))
#endif

typedef enum aqs_status {
  AQS_OK = 0,
  AQS_E_LENGTH_MISMATCH = 1,
  AQS_E_DOUBLE_MEASUREMENT = 2,
  AQS_E_POSITION_OUT_OF_RANGE = 3,
  AQS_E_INVALID_PARAMS = 4,
  AQS_E_EXPIRED_KEY = 5,
  AQS_E_INVALID_SCENARIO = 6,
  AQS_E_MALFORMED_EVIDENCE = 7,
  AQS_E_MALFORMED_TRANSCRIPT = 8,
  AQS_E_DIVISION_BY_ZERO = 9,
  AQS_E_ALREADY_REGISTERED = 10,
  AQS_E_MALFORMED_CHECK = 11,
  AQS_E_INSUFFICIENT_FUNDS = 12,
  AQS_E_UNKNOWN_ACCOUNT = 13,
  AQS_E_INVALID_CONFIG = 14,
  AQS_E_IO = 15,
  AQS_E_NULL_ARGUMENT = 16,
  AQS_E_INTERNAL = 17
} aqs_status;

typedef struct aqs_config aqs_config;
typedef struct aqs_result aqs_result;

AQS_API const char* aqs_version(void);
AQS_API const char* aqs_status_name(aqs_status status);

/* Message of the last failed call on this thread; "" if none. */
AQS_API const char* aqs_last_error(void);

AQS_API aqs_status aqs_config_create(aqs_config** out);
AQS_API void aqs_config_destroy(aqs_config* config);

/* Settings from a file sit below settings from aqs_config_set. */
AQS_API aqs_status aqs_config_load_file(aqs_config* config, const char* path);
AQS_API aqs_status aqs_config_set(aqs_config* config, const char* key, const char* value);
AQS_API aqs_status aqs_config_validate(const aqs_config* config);

/* command: sign-recovery, sign-appendix, attack, efficiency, payment, dispute.
 * A protocol rejection is not an error: it is reported through the result's exit code. */
AQS_API aqs_status aqs_run(const aqs_config* config, const char* command, aqs_result** out);

AQS_API void aqs_result_destroy(aqs_result* result);
AQS_API int aqs_result_exit_code(const aqs_result* result);
AQS_API const char* aqs_result_outcome(const aqs_result* result);
AQS_API const char* aqs_result_transcript(const aqs_result* result);
AQS_API const char* aqs_result_summary(const aqs_result* result);

#ifdef __cplusplus
}
#endif

#endif
