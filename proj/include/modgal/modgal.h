/*
   Copyright 2026 The modgal Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/* C interface to modgal: exact modular data, Galois orbits and the
   structure checks built on them. Strings returned through char** are
   owned by the caller and released with modgal_string_free. */

#ifndef MODGAL_MODGAL_H
#define MODGAL_MODGAL_H

#include <stddef.h>

#if defined(_WIN32)
#if defined(MODGAL_BUILDING_LIBRARY)
#define MODGAL_API __declspec(dllexport)
#else
#define MODGAL_API __declspec(dllimport)
#endif
#else
#define MODGAL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum modgal_status {
  MODGAL_OK = 0,
  MODGAL_E_INVALID_ARGUMENT = 1,
  MODGAL_E_CONDUCTOR_MISMATCH = 2,
  MODGAL_E_DIVISION_BY_ZERO = 3,
  MODGAL_E_NOT_A_UNIT = 4,
  MODGAL_E_NOT_REAL = 5,
  MODGAL_E_PARSE = 6,
  MODGAL_E_IO = 7,
  MODGAL_E_INVALID_DATA = 8,
  MODGAL_E_LIMIT_EXCEEDED = 9,
  MODGAL_E_INTERNAL = 10,
  MODGAL_E_NULL_ARGUMENT = 11,
  MODGAL_E_OUT_OF_MEMORY = 12
} modgal_status;

typedef struct modgal_data modgal_data;

MODGAL_API const char* modgal_version(void);
MODGAL_API const char* modgal_status_string(modgal_status status);
/* Message of the last failed call on this thread; empty when none. */
MODGAL_API const char* modgal_last_error(void);
MODGAL_API void modgal_string_free(char* s);

MODGAL_API modgal_status modgal_data_load(const char* path, modgal_data** out);
MODGAL_API modgal_status modgal_data_parse(const char* text, const char* source, modgal_data** out);
MODGAL_API modgal_status modgal_data_fixture(const char* name, modgal_data** out);
MODGAL_API modgal_status modgal_data_product(const modgal_data* a, const modgal_data* b, modgal_data** out);
/* group: invariant factors "2,30,30"; form: Gram exponents "a,b;c,d" or NULL. */
MODGAL_API modgal_status modgal_data_pointed(const char* group, const char* form, modgal_data** out);
MODGAL_API void modgal_data_free(modgal_data* data);

MODGAL_API modgal_status modgal_data_rank(const modgal_data* data, size_t* out);
MODGAL_API modgal_status modgal_data_conductor(const modgal_data* data, unsigned* out);
MODGAL_API modgal_status modgal_data_serialize(const modgal_data* data, char** out);
MODGAL_API modgal_status modgal_data_save(const modgal_data* data, const char* path);

/* Newline-separated "name<TAB>provenance" lines. */
MODGAL_API modgal_status modgal_fixture_list(char** out);

/* *passed is 1 when every validation check holds; *text itemizes issues. */
MODGAL_API modgal_status modgal_validate(const modgal_data* data, int* passed, char** text);
MODGAL_API modgal_status modgal_orbit_count(const modgal_data* data, size_t* out);

/* Full analysis; json != 0 selects the structured form. */
MODGAL_API modgal_status modgal_report(const modgal_data* data, const char* source, size_t max_rank, int json,
                                       int* passed, char** out);

MODGAL_API modgal_status modgal_cyclic_subgroup_count(const char* group, unsigned long long* out);
/* Builds C(A,q) (order at most max_order), computes its Galois orbits and
   compares them with the cyclic-subgroup count. */
MODGAL_API modgal_status modgal_pointed_orbits(const char* group, const char* form, size_t max_order,
                                               unsigned long long* orbit_count, int* agrees, char** text);

/* Encoded t-spectrum rows whose level divides `level`. */
MODGAL_API modgal_status modgal_tables_check(unsigned long level, int* passed, char** text);

#ifdef __cplusplus
}
#endif

#endif
