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

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

namespace errbridge::idl {

enum class Severity { Error, Warning };

// Stable diagnostic codes.
namespace code {
inline constexpr std::string_view kUnknownCharacter = "E0001";
inline constexpr std::string_view kSyntax = "E0002";
inline constexpr std::string_view kUnknownEnumOrCase = "E0003";
inline constexpr std::string_view kThrowInNonThrowing = "E0004";
inline constexpr std::string_view kTypeMismatch = "E0005";
inline constexpr std::string_view kMissingReturn = "E0006";
inline constexpr std::string_view kDuplicateName = "E0007";
inline constexpr std::string_view kUnknownName = "E0008";
inline constexpr std::string_view kUnreachable = "W0001";
}  // namespace code

struct Diagnostic {
  Severity severity = Severity::Error;
  int line = 1;
  int column = 1;
  std::string code;
  std::string message;
};

using Diagnostics = std::vector<Diagnostic>;

inline bool has_errors(const Diagnostics& diags) {
  return std::any_of(diags.begin(), diags.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

/// `file:line:col: code: message`
inline std::string format_diagnostic(std::string_view file, const Diagnostic& d) {
  std::string out(file);
  out += ':' + std::to_string(d.line) + ':' + std::to_string(d.column) + ": " + d.code +
         ": " + d.message;
  return out;
}

}  // namespace errbridge::idl
