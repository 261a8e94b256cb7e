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

#include "interp/value.hpp"

#include <array>
#include <bit>
#include <charconv>
#include <cmath>

namespace errbridge {

Value Value::float64(double x) {
  return Value(idl::ScalarType::Float64, std::bit_cast<std::uint64_t>(x));
}

double Value::as_float() const { return std::bit_cast<double>(bits_); }

eb_value Value::to_abi() const {
  std::uint8_t tag = EB_TAG_UNIT;
  switch (type_) {
    case idl::ScalarType::Unit: tag = EB_TAG_UNIT; break;
    case idl::ScalarType::Int64: tag = EB_TAG_INT64; break;
    case idl::ScalarType::Float64: tag = EB_TAG_FLOAT64; break;
    case idl::ScalarType::Bool: tag = EB_TAG_BOOL; break;
  }
  return eb_value_encode_bits(tag, bits_);
}

std::optional<Value> Value::from_abi(const eb_value& v) {
  const std::uint64_t bits = eb_value_bits(v);
  switch (v.tag) {
    case EB_TAG_UNIT: return Value::unit();
    case EB_TAG_INT64: return Value(idl::ScalarType::Int64, bits);
    case EB_TAG_FLOAT64: return Value(idl::ScalarType::Float64, bits);
    case EB_TAG_BOOL: return Value::boolean(bits != 0);
    default: return std::nullopt;
  }
}

std::string Value::to_string() const {
  switch (type_) {
    case idl::ScalarType::Unit:
      return "()";
    case idl::ScalarType::Int64:
      return std::to_string(as_int());
    case idl::ScalarType::Bool:
      return as_bool() ? "true" : "false";
    case idl::ScalarType::Float64: {
      const double x = as_float();
      if (std::isnan(x)) return "nan";
      if (std::isinf(x)) return x < 0 ? "-inf" : "inf";
      std::array<char, 64> buf{};
      auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
      return std::string(buf.data(), end);
    }
  }
  return "?";
}

std::optional<Value> Value::parse(std::string_view text, idl::ScalarType type) {
  const char* first = text.data();
  const char* last = text.data() + text.size();
  switch (type) {
    case idl::ScalarType::Int64: {
      std::int64_t x = 0;
      auto [ptr, ec] = std::from_chars(first, last, x);
      if (ec != std::errc() || ptr != last) return std::nullopt;
      return Value::int64(x);
    }
    case idl::ScalarType::Float64: {
      double x = 0;
      auto [ptr, ec] = std::from_chars(first, last, x);
      if (ec != std::errc() || ptr != last) return std::nullopt;
      return Value::float64(x);
    }
    case idl::ScalarType::Bool:
      if (text == "true") return Value::boolean(true);
      if (text == "false") return Value::boolean(false);
      return std::nullopt;
    case idl::ScalarType::Unit:
      if (text == "()") return Value::unit();
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace errbridge
