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

#include "interp/arg_grid.hpp"

#include <limits>
#include <random>

namespace errbridge::interp {

namespace {

std::vector<Value> pool(idl::ScalarType type) {
  using L = std::numeric_limits<std::int64_t>;
  switch (type) {
    case idl::ScalarType::Int64:
      return {Value::int64(0),  Value::int64(1),   Value::int64(-1),      Value::int64(2),
              Value::int64(-2), Value::int64(3),   Value::int64(4),       Value::int64(7),
              Value::int64(-7), Value::int64(100), Value::int64(L::max()), Value::int64(L::min())};
    case idl::ScalarType::Float64:
      return {Value::float64(0.0),  Value::float64(1.0),   Value::float64(-1.0),
              Value::float64(0.5),  Value::float64(2.5),   Value::float64(-3.75),
              Value::float64(1e10), Value::float64(-0.0)};
    case idl::ScalarType::Bool:
      return {Value::boolean(false), Value::boolean(true)};
    case idl::ScalarType::Unit:
      break;
  }
  return {Value::unit()};
}

Value random_value(idl::ScalarType type, std::mt19937_64& rng) {
  switch (type) {
    case idl::ScalarType::Int64:
      return Value::int64(std::uniform_int_distribution<std::int64_t>(-1000, 1000)(rng));
    case idl::ScalarType::Float64:
      return Value::float64(std::uniform_real_distribution<double>(-1000.0, 1000.0)(rng));
    case idl::ScalarType::Bool:
      return Value::boolean(rng() & 1u);
    case idl::ScalarType::Unit:
      break;
  }
  return Value::unit();
}

}  // namespace

std::vector<ArgTuple> argument_grid(const idl::FunctionDecl& fn, std::size_t min_tuples,
                                    std::size_t max_tuples, std::uint64_t seed) {
  std::vector<ArgTuple> grid;
  if (fn.params.empty()) return std::vector<ArgTuple>(min_tuples);

  std::vector<std::vector<Value>> pools;
  for (const auto& p : fn.params) pools.push_back(pool(p.type));

  // Odometer over the pools.
  std::vector<std::size_t> digit(pools.size(), 0);
  while (grid.size() < max_tuples) {
    ArgTuple tuple;
    for (std::size_t i = 0; i < pools.size(); ++i) tuple.push_back(pools[i][digit[i]]);
    grid.push_back(std::move(tuple));
    std::size_t i = 0;
    while (i < pools.size() && ++digit[i] == pools[i].size()) digit[i++] = 0;
    if (i == pools.size()) break;
  }

  std::mt19937_64 rng(seed);
  while (grid.size() < min_tuples) {
    ArgTuple tuple;
    for (const auto& p : fn.params) tuple.push_back(random_value(p.type, rng));
    grid.push_back(std::move(tuple));
  }
  return grid;
}

}  // namespace errbridge::interp
