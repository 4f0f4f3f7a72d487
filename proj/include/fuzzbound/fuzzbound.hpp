/*
 * Copyright 2026 The fuzzbound Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Umbrella header. io.hpp is left out so the core stays free of the JSON
// dependency; include it explicitly when needed.
#pragma once

#include "fuzzbound/automata.hpp"
#include "fuzzbound/dbsim.hpp"
#include "fuzzbound/error.hpp"
#include "fuzzbound/fuzzy.hpp"
#include "fuzzbound/lattice.hpp"
#include "fuzzbound/logic.hpp"
#include "fuzzbound/oracle.hpp"
