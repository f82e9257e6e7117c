// Copyright 2026 The efg2ludii Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EFG2LUDII_EFG2LUDII_H_
#define EFG2LUDII_EFG2LUDII_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(EFG2LUDII_BUILDING)
#define E2L_API __declspec(dllexport)
#else
#define E2L_API __declspec(dllimport)
#endif
#else
#define E2L_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum e2l_status {
  E2L_OK = 0,
  E2L_ERROR_PARSE = 1,     /* malformed input text */
  E2L_ERROR_INVALID = 2,   /* well-formed but not a valid game */
  E2L_ERROR_ARGUMENT = 3,  /* bad parameter or null pointer */
  E2L_ERROR_INTERNAL = 4,
} e2l_status;

/* An extensive-form game. */
typedef struct e2l_game e2l_game;

typedef struct e2l_generator_params {
  int max_nodes;
  int max_branching;
  double chance_rate;
  double merge_rate;
  int players; /* 0: random in 1..4 */
  int max_depth;
} e2l_generator_params;

/* Message of the last failed call on this thread; never NULL. */
E2L_API const char* e2l_last_error(void);

/* Strings returned through `char**` are owned by the caller. */
E2L_API void e2l_string_free(char* s);

E2L_API void e2l_generator_defaults(e2l_generator_params* params);

E2L_API e2l_status e2l_game_parse(const char* text, size_t len, e2l_game** out);
E2L_API e2l_status e2l_game_generate(const e2l_generator_params* params, uint64_t seed,
                                     e2l_game** out);
E2L_API void e2l_game_free(e2l_game* game);

E2L_API e2l_status e2l_game_serialize(const e2l_game* game, char** out);
E2L_API int e2l_game_num_players(const e2l_game* game);
E2L_API int e2l_game_num_states(const e2l_game* game);
/* `key=value` lines: counts, depth, information sets, board size. */
E2L_API e2l_status e2l_game_info(const e2l_game* game, char** out);

/* Makes player 1 move first when the root is another player's decision.
 * `transforms` (may be NULL) receives one line per applied transform, or an
 * empty string. */
E2L_API e2l_status e2l_game_normalize(const e2l_game* game, e2l_game** out, char** transforms);

/* Description text for a game whose root is a chance state or a decision of
 * player 1. */
E2L_API e2l_status e2l_compile(const e2l_game* game, const char* name, char** out);

/* Checks a description against the game. A description that is not in the
 * accepted subset is reported as a failed criterion, not as an error.
 * `report` gets `key=value` records, `summary` (may be NULL) readable text. */
E2L_API e2l_status e2l_verify(const e2l_game* game, const char* lud, size_t len, char** report,
                              char** summary, int* all_passed);

/* n seeded playouts with uniform choices. `records` gets the per-step
 * trajectory dump, `summary` (may be NULL) leaf counts and mean payoffs. */
E2L_API e2l_status e2l_simulate(const char* lud, size_t len, uint64_t n, uint64_t seed,
                                char** records, char** summary);

/* Compares leaf frequencies of n playouts with the exact distribution;
 * a leaf passes if |f - p| <= z sqrt(p (1 - p) / n). */
E2L_API e2l_status e2l_statistical_check(const e2l_game* game, const char* lud, size_t len,
                                         uint64_t n, uint64_t seed, double z, char** report,
                                         int* passed);

#ifdef __cplusplus
}
#endif

#endif /* EFG2LUDII_EFG2LUDII_H_ */
