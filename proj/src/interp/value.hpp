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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "errbridge/errbridge.h"
#include "idl/ast.hpp"

namespace errbridge {

/// A scalar crossing the dispatcher: tag plus payload.
class Value {
 public:
  Value() = default;

  static Value unit() { return Value(); }
  static Value int64(std::int64_t x) { return Value(idl::ScalarType::Int64, static_cast<std::uint64_t>(x)); }
  static Value float64(double x);
  static Value boolean(bool x) { return Value(idl::ScalarType::Bool, x ? 1u : 0u); }

  idl::ScalarType type() const { return type_; }
  std::int64_t as_int() const { return static_cast<std::int64_t>(bits_); }
  double as_float() const;
  bool as_bool() const { return bits_ != 0; }

  /// Raw payload; floats compare by bit pattern.
  std::uint64_t bits() const { return bits_; }

  friend bool operator==(const Value& a, const Value& b) {
    return a.type_ == b.type_ && a.bits_ == b.bits_;
  }

  eb_value to_abi() const;
  /// nullopt for an unknown tag byte.
  static std::optional<Value> from_abi(const eb_value& v);

  /// "2" for Float64 2.0, "-7", "true", "()".
  std::string to_string() const;

  /// Parses command-line text as a value of `type`.
  static std::optional<Value> parse(std::string_view text, idl::ScalarType type);

 private:
  Value(idl::ScalarType type, std::uint64_t bits) : type_(type), bits_(bits) {}

  idl::ScalarType type_ = idl::ScalarType::Unit;
  std::uint64_t bits_ = 0;
};

}  // namespace errbridge
