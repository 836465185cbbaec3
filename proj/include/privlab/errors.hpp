// Copyright 2026 The privlab Authors
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


#ifndef PRIVLAB_ERRORS_HPP
#define PRIVLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace privlab {

// Input that violates a precondition (bad labels, dimensions, priors...) is
// reported with std::invalid_argument. NumericalError is reserved for a
// computed quantity that breaks an invariant the theory guarantees, e.g. a
// certified bound that the direct computation exceeds.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace privlab

#endif  // PRIVLAB_ERRORS_HPP
