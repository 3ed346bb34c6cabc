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

#ifndef KPATH_REMOTE_H_
#define KPATH_REMOTE_H_

#include <condition_variable>
#include <mutex>
#include <string>
#include <vector>

#include "kpath/backends.h"

namespace kpath {

struct RemoteConfig {
  std::string base_url;  // e.g. http://127.0.0.1:8080
  int timeout_ms = 10000;
  int max_retries = 2;
  int max_concurrent = 8;
};

// Client for the model service's JSON/HTTP protocol:
//
//   POST /classify {"head", "tail"} -> {"scores": {label: p, ...}}
//   POST /generate {"source", "relation", "inverted", "beam"}
//                  -> {"targets": [{"concept", "confidence"}, ...]}
//
// Each call is one blocking request, so a response is always bound to the
// request that produced it. At most max_concurrent requests are in flight;
// transport failures and 5xx replies are retried up to max_retries times,
// then surface as Error(kBackendTransport). Malformed replies raise
// Error(kBackendProtocol).
class RemoteBackend : public RelationClassifier, public TargetGenerator {
 public:
  RemoteBackend(RemoteConfig config, std::vector<std::string> labels);

  RelationDistribution Classify(const std::string &head, const std::string &tail) override;
  const std::vector<std::string> &labels() const override { return labels_; }

  std::vector<GeneratedTarget> Generate(const std::string &source, const Relation &relation,
                                        int beam) override;

  const RemoteConfig &config() const { return config_; }

 private:
  std::string Post(const std::string &path, const std::string &body);

  RemoteConfig config_;
  std::vector<std::string> labels_;

  std::mutex slots_mu_;
  std::condition_variable slots_cv_;
  int in_flight_ = 0;
};

}  // namespace kpath

#endif  // KPATH_REMOTE_H_
