// Copyright 2026 The qlinksim Authors
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

#ifndef QLINKSIM_ERRORS_HPP
#define QLINKSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qlinksim {

/// A density matrix violated its invariants by more than the allowed tolerance.
struct InvalidState : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Integration produced a state outside the physical set. `time` is the
/// simulation time (seconds) at which the breach was detected.
struct IntegrationFailure : std::runtime_error {
    IntegrationFailure(const std::string &what, double time)
        : std::runtime_error(what), time(time) {
    }
    double time;
};

}  // namespace qlinksim

#endif
