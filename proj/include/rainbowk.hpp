// Copyright 2026 The rainbowk Authors
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

#ifndef RAINBOWK_HPP_
#define RAINBOWK_HPP_

#include "rainbowk/coloring.hpp"
#include "rainbowk/errors.hpp"
#include "rainbowk/experiments.hpp"
#include "rainbowk/gnp.hpp"
#include "rainbowk/graph.hpp"
#include "rainbowk/growth.hpp"
#include "rainbowk/packing.hpp"
#include "rainbowk/paths.hpp"
#include "rainbowk/rainbow.hpp"
#include "rainbowk/random.hpp"
#include "rainbowk/random_coloring.hpp"
#include "rainbowk/structure.hpp"
#include "rainbowk/theory.hpp"

#endif  // RAINBOWK_HPP_
