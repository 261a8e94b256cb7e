// Copyright 2026 The errbridge Authors
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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "idl/ast.hpp"
#include "interp/value.hpp"

namespace errbridge::interp {

using ArgTuple = std::vector<Value>;

/// Deterministic argument tuples for `fn`: the cartesian product of small
/// boundary pools per parameter type (zero, ±1, extremes, ...), topped up with
/// seeded random tuples to at least `min_tuples` and truncated to
/// `max_tuples`. Functions without parameters yield `min_tuples` empty tuples.
std::vector<ArgTuple> argument_grid(const idl::FunctionDecl& fn, std::size_t min_tuples = 64,
                                    std::size_t max_tuples = 1024, std::uint64_t seed = 0x5eed);

}  // namespace errbridge::interp
