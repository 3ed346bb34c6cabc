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

#include "kpath/remote.h"

#include <chrono>
#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "kpath/error.h"

namespace kpath {
namespace {

using nlohmann::json;

// Holds one of the backend's in-flight slots for its lifetime.
class SlotGuard {
 public:
  SlotGuard(std::mutex &mu, std::condition_variable &cv, int &in_flight, int limit)
      : mu_(mu), cv_(cv), in_flight_(in_flight) {
    std::unique_lock<std::mutex> lock(mu_);
    cv_.wait(lock, [&] { return in_flight_ < limit; });
    ++in_flight_;
  }
  ~SlotGuard() {
    {
      std::lock_guard<std::mutex> lock(mu_);
      --in_flight_;
    }
    cv_.notify_one();
  }
  SlotGuard(const SlotGuard &) = delete;
  SlotGuard &operator=(const SlotGuard &) = delete;

 private:
  std::mutex &mu_;
  std::condition_variable &cv_;
  int &in_flight_;
};

json ParseReply(const std::string &body, const std::string &path) {
  try {
    return json::parse(body);
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kBackendProtocol, path + ": malformed JSON reply: " + e.what());
  }
}

}  // namespace

RemoteBackend::RemoteBackend(RemoteConfig config, std::vector<std::string> labels)
    : config_(std::move(config)), labels_(std::move(labels)) {
  if (config_.base_url.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "remote backend requires a base URL");
  }
  if (config_.max_concurrent < 1) config_.max_concurrent = 1;
  if (config_.max_retries < 0) config_.max_retries = 0;
}

std::string RemoteBackend::Post(const std::string &path, const std::string &body) {
  SlotGuard slot(slots_mu_, slots_cv_, in_flight_, config_.max_concurrent);
  std::string last_error;
  for (int attempt = 0; attempt <= config_.max_retries; ++attempt) {
    if (attempt > 0) std::this_thread::sleep_for(std::chrono::milliseconds(25 * attempt));
    httplib::Client client(config_.base_url);
    const auto timeout = std::chrono::milliseconds(config_.timeout_ms);
    client.set_connection_timeout(timeout);
    client.set_read_timeout(timeout);
    client.set_write_timeout(timeout);
    auto res = client.Post(path, body, "application/json");
    if (!res) {
      last_error = httplib::to_string(res.error());
      continue;
    }
    if (res->status >= 500) {
      last_error = "HTTP " + std::to_string(res->status);
      continue;
    }
    if (res->status != 200) {
      throw Error(ErrorCode::kBackendProtocol,
                  path + ": HTTP " + std::to_string(res->status) + ": " + res->body);
    }
    return res->body;
  }
  throw Error(ErrorCode::kBackendTransport,
              config_.base_url + path + ": " + last_error + " after " +
                  std::to_string(config_.max_retries + 1) + " attempts");
}

RelationDistribution RemoteBackend::Classify(const std::string &head, const std::string &tail) {
  json request = {{"head", head}, {"tail", tail}};
  json reply = ParseReply(Post("/classify", request.dump()), "/classify");
  RelationDistribution dist;
  try {
    const json &scores = reply.at("scores");
    for (const auto &label : labels_) {
      if (!scores.contains(label)) {
        throw Error(ErrorCode::kBackendProtocol, "/classify: reply lacks label " + label);
      }
      double p = scores.at(label).get<double>();
      if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorCode::kBackendProtocol, "/classify: score outside [0, 1] for " + label);
      }
      dist.scores[label] = p;
    }
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kBackendProtocol, std::string("/classify: ") + e.what());
  }
  return dist;
}

std::vector<GeneratedTarget> RemoteBackend::Generate(const std::string &source,
                                                     const Relation &relation, int beam) {
  if (beam < 1) throw Error(ErrorCode::kInvalidArgument, "beam must be >= 1");
  json request = {{"source", source},
                  {"relation", relation.name},
                  {"inverted", relation.inverted},
                  {"beam", beam}};
  json reply = ParseReply(Post("/generate", request.dump()), "/generate");
  std::vector<GeneratedTarget> out;
  try {
    for (const auto &item : reply.at("targets")) {
      GeneratedTarget t;
      try {
        t.node = NormalizeConcept(item.at("concept").get<std::string>());
      } catch (const Error &) {
        continue;  // blank generation
      }
      if (t.node.normalized == source) continue;
      t.confidence = item.at("confidence").get<double>();
      t.rank = static_cast<int>(out.size()) + 1;
      out.push_back(std::move(t));
    }
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kBackendProtocol, std::string("/generate: ") + e.what());
  }
  ValidateTargets(out, source, beam);
  return out;
}

}  // namespace kpath
