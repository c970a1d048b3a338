// Copyright 2026 The labelsat Authors
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

#pragma once

#include "labelsat/bench.hpp"
#include "labelsat/cnf.hpp"
#include "labelsat/dataset.hpp"
#include "labelsat/dense.hpp"
#include "labelsat/dimacs.hpp"
#include "labelsat/distributions.hpp"
#include "labelsat/image.hpp"
#include "labelsat/mix.hpp"
#include "labelsat/oracle.hpp"
#include "labelsat/problem.hpp"
#include "labelsat/rng.hpp"
#include "labelsat/sat_gen.hpp"
#include "labelsat/unsat_gen.hpp"
