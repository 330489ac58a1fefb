// Copyright 2026 The deltastn Authors
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

#ifndef DELTASTN_STN_ERROR_HPP_
#define DELTASTN_STN_ERROR_HPP_

#include <stdexcept>

namespace deltastn {

/// Misuse of the model query: the point is unknown or there is no model.
class StnError : public std::runtime_error {
 public:
  enum class Code { kUnknownTimePoint, kNoModel };

  explicit StnError(Code code)
      : std::runtime_error(code == Code::kUnknownTimePoint ? "unknown time point" : "no model"),
        code_(code) {}

  [[nodiscard]] Code code() const { return code_; }

 private:
  Code code_;
};

}  // namespace deltastn

#endif  // DELTASTN_STN_ERROR_HPP_
