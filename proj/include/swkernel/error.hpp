// include/swkernel/error.hpp
//
// Copyright 2026 swkernel authors
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

#ifndef SWKERNEL_ERROR_HPP_
#define SWKERNEL_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace swk {

// A caller broke an argument contract: bad sizes, out-of-range parameters,
// unknown identifiers, malformed documents.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Inputs are structurally fine but numerically unusable, e.g. a zero-norm
// mean-pooled vector fed into a cosine.
class DegenerateInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool condition, const std::string& message) {
  if (!condition) throw InvalidArgument(message);
}

}  // namespace detail
}  // namespace swk

#endif  // SWKERNEL_ERROR_HPP_
