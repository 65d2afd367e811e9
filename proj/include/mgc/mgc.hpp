// Copyright 2026 The mgc Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include "mgc/circuit.hpp"
#include "mgc/common.hpp"
#include "mgc/compress.hpp"
#include "mgc/expand.hpp"
#include "mgc/format.hpp"
#include "mgc/matchgate.hpp"
#include "mgc/mg_sim.hpp"
#include "mgc/oracle.hpp"
#include "mgc/random.hpp"
#include "mgc/standardize.hpp"
