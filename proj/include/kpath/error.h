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

#ifndef KPATH_ERROR_H_
#define KPATH_ERROR_H_

#include <stdexcept>
#include <string>

namespace kpath {

// Error categories shared by the core library and the C API status codes.
enum class ErrorCode {
  kInvalidArgument = 1,
  kIo = 2,
  kParse = 3,
  kBackendTransport = 4,
  kBackendProtocol = 5,
  kMissingData = 6,
  kInternal = 7,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

  // Transport failures may succeed on retry; everything else is final.
  bool retriable() const { return code_ == ErrorCode::kBackendTransport; }

 private:
  ErrorCode code_;
};

}  // namespace kpath

#endif  // KPATH_ERROR_H_
