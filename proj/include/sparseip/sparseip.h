// Copyright 2026 The sparseip Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the sparseip library. Documents cross the boundary as
 * NUL-terminated JSON strings owned by the library: release them with
 * sip_string_free. On failure a function returns a nonzero status and
 * sip_last_error() yields a JSON error document for the calling thread. */

#ifndef SPARSEIP_SPARSEIP_H_
#define SPARSEIP_SPARSEIP_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SIP_API __declspec(dllexport)
#else
#define SIP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sip_status {
  SIP_OK = 0,
  SIP_ERR_PARSE = 1,
  SIP_ERR_VALIDATION = 2,
  SIP_ERR_INPUT = 3,      /* bad argument or instance outside an algorithm's domain */
  SIP_ERR_INFEASIBLE = 4,
  SIP_ERR_UNBOUNDED = 5,
  SIP_ERR_BUDGET = 6,
  SIP_ERR_INTERNAL = 7,   /* a checked invariant failed */
} sip_status;

typedef struct sip_instance sip_instance;

typedef struct sip_random_params {
  uint64_t seed;
  const char* sense;  /* "cover" or "pack" */
  size_t n;
  size_t m;
  size_t k;
  const char* mode;   /* "row-sparse" or "col-sparse" */
  size_t denominator_bound;
  const char* d_mode; /* "unit", "small", "mixed" or "inf" */
  const char* max_entry; /* rational text, or NULL */
} sip_random_params;

SIP_API const char* sip_version(void);
SIP_API const char* sip_last_error(void);
SIP_API void sip_string_free(char* text);

/* Fills defaults: cover, n = m = 4, k = 2, row-sparse, denominators <= 5,
 * mixed d. */
SIP_API void sip_random_params_init(sip_random_params* params);

SIP_API sip_status sip_instance_parse(const char* text, sip_instance** out);
SIP_API sip_status sip_instance_serialize(const sip_instance* inst, char** out);
/* JSON {"valid": bool, "violations": [...]}. */
SIP_API sip_status sip_instance_validate(const sip_instance* inst, char** out);
SIP_API void sip_instance_free(sip_instance* inst);

/* algorithm: "cover-k", "pack-general", "pack-2cs", "pack-width" or "auto".
 * oracle_budget < 0 skips the exact comparison. *ratio_violated (optional)
 * is set to 1 when the oracle shows the ratio bound broken. */
SIP_API sip_status sip_solve(const sip_instance* inst, const char* algorithm,
                             int64_t oracle_budget, char** report,
                             int* ratio_violated);
SIP_API sip_status sip_oracle(const sip_instance* inst, uint64_t node_budget,
                              char** out);
/* *feasible (optional) receives the verdict. */
SIP_API sip_status sip_check(const char* instance_text,
                             const char* solution_text, char** out,
                             int* feasible);

SIP_API sip_status sip_gen_random(const sip_random_params* params,
                                  sip_instance** out);
SIP_API sip_status sip_gen_gap(const char* fixture, int64_t m,
                               sip_instance** out);
/* formula_text: one clause "i j k C" per line. */
SIP_API sip_status sip_gen_hardness(const char* formula_text, char** out);
SIP_API sip_status sip_certify_hardness(const char* formula_text,
                                        const int* assignment, size_t length,
                                        char** out);

/* One JSON line per instance, then a summary line. */
SIP_API sip_status sip_campaign(const sip_random_params* family, size_t count,
                                const char* algorithm, uint64_t oracle_budget,
                                char** out, size_t* violations);

#ifdef __cplusplus
}
#endif

#endif /* SPARSEIP_SPARSEIP_H_ */
