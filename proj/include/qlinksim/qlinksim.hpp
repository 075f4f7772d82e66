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

#ifndef QLINKSIM_QLINKSIM_HPP
#define QLINKSIM_QLINKSIM_HPP

#include "qlinksim/config.hpp"
#include "qlinksim/dynamics.hpp"
#include "qlinksim/errors.hpp"
#include "qlinksim/fidelity.hpp"
#include "qlinksim/metrics.hpp"
#include "qlinksim/network.hpp"
#include "qlinksim/oracle.hpp"
#include "qlinksim/protocols.hpp"
#include "qlinksim/qspace.hpp"
#include "qlinksim/runner.hpp"
#include "qlinksim/stirap_tuning.hpp"

#endif
