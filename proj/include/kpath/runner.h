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

#ifndef KPATH_RUNNER_H_
#define KPATH_RUNNER_H_

#include <cstddef>
#include <map>
#include <string>

namespace kpath {

// Pipeline options as string key/value pairs. Keys use underscores, e.g.
// "graph", "sim_gate", "workers".
using Options = std::map<std::string, std::string>;

// `key = value` lines; '#' starts a comment.
Options LoadOptionsFile(const std::string &path);

struct RunSummary {
  size_t items = 0;   // concept pairs, records or rows produced
  size_t linked = 0;  // Direct or Multihop verdicts
  size_t failed = 0;  // pairs whose backend calls failed
};

// Each pipeline throws Error on configuration or input problems. Per-pair
// backend failures are reported through RunSummary::failed and written to
// "<out>.failures.jsonl".
RunSummary RunConnect(const Options &options);
RunSummary RunBaseline(const Options &options);
RunSummary RunEvaluate(const Options &options);
RunSummary RunStats(const Options &options);
RunSummary RunRandomClass(const Options &options);
RunSummary RunKappa(const Options &options);

}  // namespace kpath

#endif  // KPATH_RUNNER_H_
