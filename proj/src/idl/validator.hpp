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

#include <string_view>
#include <variant>

#include "idl/ast.hpp"
#include "idl/diagnostic.hpp"

namespace errbridge::idl {

/// A module whose invariants hold and whose expressions all carry a type.
/// Only validate() produces one.
class ValidatedModule {
 public:
  const InterfaceModule& module() const { return module_; }
  const InterfaceModule* operator->() const { return &module_; }

  /// Warnings produced while validating (unreachable code, ...).
  const Diagnostics& warnings() const { return warnings_; }

  ValidatedModule(ValidatedModule&&) = default;
  ValidatedModule& operator=(ValidatedModule&&) = default;
  ValidatedModule clone() const { return ValidatedModule(idl::clone(module_), warnings_); }

 private:
  friend std::variant<ValidatedModule, Diagnostics> validate(InterfaceModule module);
  ValidatedModule(InterfaceModule module, Diagnostics warnings)
      : module_(std::move(module)), warnings_(std::move(warnings)) {}

  InterfaceModule module_;
  Diagnostics warnings_;
};

using ValidateResult = std::variant<ValidatedModule, Diagnostics>;

/// Resolves names, type-checks bodies and checks return paths. On failure the
/// diagnostics contain at least one error and may contain warnings.
ValidateResult validate(InterfaceModule module);

/// tokenize + parse + validate.
ValidateResult compile_source(std::string_view source);

}  // namespace errbridge::idl
