// Copyright 2026 The kpath Authors.
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

// C interface to the kpath library. All strings are UTF-8 and owned by the
// caller unless noted. Functions are safe to call from several threads on
// distinct handles.

#ifndef KPATH_KPATH_H_
#define KPATH_KPATH_H_

#include <stddef.h>

#if defined(KPATH_BUILDING_LIBRARY)
#define KP_API __attribute__((visibility("default")))
#else
#define KP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kp_status {
  KP_OK = 0,
  KP_INVALID_ARGUMENT = 1,
  KP_IO = 2,
  KP_PARSE = 3,
  KP_BACKEND_TRANSPORT = 4,
  KP_BACKEND_PROTOCOL = 5,
  KP_MISSING_DATA = 6,
  KP_INTERNAL = 7,
} kp_status;

typedef struct kp_options kp_options;
typedef struct kp_graph kp_graph;

typedef struct kp_summary {
  size_t items;   // concept pairs, records or rows produced
  size_t linked;  // Direct or Multihop verdicts
  size_t failed;  // sentence pairs dropped after backend failures
} kp_summary;

KP_API const char *kp_version(void);

// Message of the last failed call on this thread; empty after success.
KP_API const char *kp_last_error(void);

// Option sets. Keys are the long CLI flag names with '-' or '_'.
KP_API kp_options *kp_options_new(void);
KP_API void kp_options_free(kp_options *options);
KP_API kp_status kp_options_set(kp_options *options, const char *key, const char *value);
// Returns the value for key or NULL. Valid until the option is changed.
KP_API const char *kp_options_get(const kp_options *options, const char *key);
// Reads `key = value` lines; loaded values replace existing ones.
KP_API kp_status kp_options_load(kp_options *options, const char *path);

// Runs a pipeline: "connect", "baseline", "evaluate", "stats",
// "random-class" or "kappa". `summary` may be NULL.
KP_API kp_status kp_run(const char *command, const kp_options *options, kp_summary *summary);

// Knowledge graph handles. `inventory` is "cn13", "baseline" or a file.
KP_API kp_status kp_graph_load(const char *path, const char *inventory, kp_graph **graph);
KP_API void kp_graph_free(kp_graph *graph);
KP_API size_t kp_graph_triple_count(const kp_graph *graph);
KP_API size_t kp_graph_concept_count(const kp_graph *graph);
// 1 when the triple is present, 0 when absent, -1 on bad arguments or a
// relation outside the graph's inventory.
KP_API int kp_graph_has_triple(const kp_graph *graph, const char *head, const char *relation,
                               const char *tail);

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  // KPATH_KPATH_H_
