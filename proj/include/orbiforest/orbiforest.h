// Copyright 2026 The orbiforest Authors
//
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

/* C interface to orbiforest. Handles are opaque; every call returns an
 * orbi_status and, on failure, leaves a message for orbi_last_error() in
 * the calling thread. Strings handed out by the library are released with
 * orbi_string_free(). */

#ifndef ORBIFOREST_ORBIFOREST_H
#define ORBIFOREST_ORBIFOREST_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ORBI_API __declspec(dllexport)
#else
#define ORBI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum orbi_status {
  ORBI_OK = 0,
  ORBI_INVALID_ARGUMENT = 1,
  ORBI_UNKNOWN_GENERATOR = 2,
  ORBI_CAP_EXCEEDED = 3,
  ORBI_DEGENERATE = 4,
  ORBI_INSUFFICIENT_DATA = 5,
  ORBI_CONFIG = 6,
  ORBI_IO = 7,
  ORBI_CHECK_FAILED = 8,
  ORBI_INTERNAL = 9
} orbi_status;

typedef enum orbi_builder { ORBI_BUILDER_LERW = 0, ORBI_BUILDER_STACKS = 1 } orbi_builder;

typedef struct orbi_ball orbi_ball;
typedef struct orbi_lab orbi_lab;

ORBI_API const char* orbi_version(void);
ORBI_API const char* orbi_status_name(orbi_status status);
/* Message of the last failed call on this thread; "" after a success. */
ORBI_API const char* orbi_last_error(void);
ORBI_API void orbi_string_free(char* s);

/* Balls. `config_json` uses the experiment config schema; only group,
 * generators, radius and caps.vertex_cap are read. */
ORBI_API orbi_status orbi_ball_create(const char* config_json, orbi_ball** out);
ORBI_API void orbi_ball_destroy(orbi_ball* ball);
ORBI_API size_t orbi_ball_vertex_count(const orbi_ball* ball);
ORBI_API size_t orbi_ball_edge_count(const orbi_ball* ball);
ORBI_API size_t orbi_ball_degree(const orbi_ball* ball);
ORBI_API int orbi_ball_radius(const orbi_ball* ball);
ORBI_API orbi_status orbi_ball_edge(const orbi_ball* ball, uint32_t edge, uint32_t* tail, uint32_t* head,
                                    uint32_t* generator);
ORBI_API orbi_status orbi_ball_is_boundary(const orbi_ball* ball, uint32_t vertex, int* boundary);
ORBI_API orbi_status orbi_ball_word_length(const orbi_ball* ball, uint32_t vertex, uint32_t* length);
/* Normal form of a vertex or of an arbitrary word, as a new string. */
ORBI_API orbi_status orbi_ball_vertex_label(const orbi_ball* ball, uint32_t vertex, char** label);
ORBI_API orbi_status orbi_normalize(const orbi_ball* ball, const char* word, char** normal_form);
/* Sets *inside to 0 when g.v leaves the ball. */
ORBI_API orbi_status orbi_left_translate(const orbi_ball* ball, const char* g, uint32_t vertex, uint32_t* image,
                                         int* inside);

/* Edge arrays have orbi_ball_edge_count() entries; vertex arrays have
 * orbi_ball_vertex_count() entries. */
ORBI_API orbi_status orbi_sample_labels(const orbi_ball* ball, uint64_t seed, double* labels);
ORBI_API orbi_status orbi_sample_bonds(const orbi_ball* ball, double p, uint64_t seed, uint8_t* open);
ORBI_API orbi_status orbi_clusters(const orbi_ball* ball, const uint8_t* open, uint32_t* cluster_of,
                                   size_t* cluster_count);
ORBI_API orbi_status orbi_wilson(const orbi_ball* ball, orbi_builder builder, uint64_t seed, uint8_t* forest,
                                 uint64_t* pops);
ORBI_API orbi_status orbi_msf(const orbi_ball* ball, const uint8_t* open, const double* labels, uint8_t* forest);

/* Experiments. */
ORBI_API orbi_status orbi_lab_create(const char* config_json, orbi_lab** out);
ORBI_API orbi_status orbi_lab_load(const char* path, orbi_lab** out);
ORBI_API void orbi_lab_destroy(orbi_lab* lab);
/* Dotted key, e.g. "percolation.p"; the value is JSON text or a bare string. */
ORBI_API orbi_status orbi_lab_override(orbi_lab* lab, const char* dotted_key, const char* value);
/* Effective configuration as canonical JSON. */
ORBI_API orbi_status orbi_lab_config(orbi_lab* lab, char** json);
/* Runs a subcommand and writes its artifacts. `out_dir` may be NULL or ""
 * to use the configured directory. The summary is JSON (may be NULL).
 * A failed check returns ORBI_CHECK_FAILED after writing artifacts. */
ORBI_API orbi_status orbi_lab_run(orbi_lab* lab, const char* subcommand, const char* out_dir, char** summary_json);

#ifdef __cplusplus
}
#endif

#endif /* ORBIFOREST_ORBIFOREST_H */
