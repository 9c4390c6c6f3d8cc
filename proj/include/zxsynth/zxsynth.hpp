// Copyright 2026 The zxsynth Authors
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

/*!
  \file zxsynth.hpp
  \brief Everything except the JSON helpers, which need nlohmann/json.
*/

#pragma once

#include "arch.hpp"
#include "bench.hpp"
#include "circuit.hpp"
#include "generators.hpp"
#include "parity.hpp"
#include "phase.hpp"
#include "poly.hpp"
#include "region.hpp"
#include "rules.hpp"
#include "sim.hpp"
#include "simplify.hpp"
#include "synth.hpp"
