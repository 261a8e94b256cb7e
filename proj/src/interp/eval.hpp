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

#include <span>
#include <string>
#include <variant>

#include "idl/ast.hpp"
#include "interp/type_id.hpp"
#include "interp/value.hpp"

namespace errbridge::interp {

/// A thrown error before it is boxed by the runtime.
struct ThrownError {
  TypeId type;
  int case_index = 0;
  std::string case_name;

  friend bool operator==(const ThrownError&, const ThrownError&) = default;
};

/// The body trapped (division by zero, overflow, bad arguments).
struct Trap {
  std::string message;

  friend bool operator==(const Trap&, const Trap&) = default;
};

/// Result of running a function body: exactly one of value, error or trap.
class Outcome {
 public:
  Outcome(Value v) : state_(v) {}
  Outcome(ThrownError e) : state_(std::move(e)) {}
  Outcome(Trap t) : state_(std::move(t)) {}

  bool has_value() const { return std::holds_alternative<Value>(state_); }
  bool has_error() const { return std::holds_alternative<ThrownError>(state_); }
  bool is_trap() const { return std::holds_alternative<Trap>(state_); }

  const Value& value() const { return std::get<Value>(state_); }
  const ThrownError& error() const { return std::get<ThrownError>(state_); }
  const Trap& trap() const { return std::get<Trap>(state_); }

  std::string to_string() const;

  friend bool operator==(const Outcome&, const Outcome&) = default;

 private:
  std::variant<Value, ThrownError, Trap> state_;
};

/// Runs `fn` of `module` with `args`. Arguments are checked against the
/// declared parameter types (mismatch traps). The first `throw` on the
/// executed path wins. Int64 arithmetic traps on overflow and on division by
/// zero; Float64 arithmetic follows IEEE-754.
Outcome eval_function(const idl::InterfaceModule& module, const idl::FunctionDecl& fn,
                      std::span<const Value> args);

}  // namespace errbridge::interp
