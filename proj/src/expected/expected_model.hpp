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

// Reference semantics for the generated Swift::Optional / Swift::Expected.
//
// The differential tests hold generated-code behaviour against these types,
// so they stay deliberately plain: one storage cell, one discriminator, and a
// loud failure on every precondition violation.

#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include "errbridge/errbridge.h"
#include "interp/value.hpp"

namespace errbridge::model {

/// Thrown when a model precondition is violated (value() on an error,
/// get() on none, constructing from the null handle).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ExpectedModel {
 public:
  /// The single cell holding either the payload or the error handle.
  union Slot {
    eb_value payload;
    eb_error_handle error;
  };

  static ExpectedModel from_value(const Value& v) {
    ExpectedModel m;
    m.has_value_ = true;
    m.slot_.payload = v.to_abi();
    return m;
  }

  /// Adopts one reference of `handle`.
  static ExpectedModel from_error(eb_error_handle handle) {
    if (handle == EB_NULL_ERROR) {
      throw ContractViolation("Expected constructed from the null error handle");
    }
    ExpectedModel m;
    m.has_value_ = false;
    m.slot_.error = handle;
    return m;
  }

  ExpectedModel(const ExpectedModel& other) : slot_(other.slot_), has_value_(other.has_value_) {
    if (!has_value_) eb_error_retain(slot_.error);
  }

  ExpectedModel(ExpectedModel&& other) noexcept
      : slot_(other.slot_), has_value_(other.has_value_) {
    other.has_value_ = true;
    other.slot_.payload = eb_value_unit();
  }

  ExpectedModel& operator=(ExpectedModel other) noexcept {
    std::swap(slot_, other.slot_);
    std::swap(has_value_, other.has_value_);
    return *this;
  }

  ~ExpectedModel() {
    if (!has_value_) eb_error_release(slot_.error);
  }

  bool has_value() const noexcept { return has_value_; }

  Value value() const {
    if (!has_value_) throw ContractViolation("value() called on an Expected holding an error");
    // from_abi cannot fail: the payload was produced by Value::to_abi.
    return *Value::from_abi(slot_.payload);
  }

  /// Borrowed; the model keeps its reference.
  eb_error_handle error() const {
    if (has_value_) throw ContractViolation("error() called on an Expected holding a value");
    return slot_.error;
  }

  static constexpr std::size_t slot_bytes() { return sizeof(Slot); }
  static constexpr std::size_t discriminator_bytes() { return sizeof(bool); }

 private:
  ExpectedModel() { slot_.payload = eb_value_unit(); }

  Slot slot_;
  bool has_value_ = true;
};

// Payload and handle share one cell.
static_assert(ExpectedModel::slot_bytes() < sizeof(eb_value) + sizeof(eb_error_handle));
static_assert(ExpectedModel::slot_bytes() % alignof(eb_error_handle) == 0);

class OptionalModel {
 public:
  static OptionalModel some(const Value& v) { return OptionalModel(v); }
  static OptionalModel none() { return OptionalModel(); }

  bool is_some() const noexcept { return some_; }

  const Value& get() const {
    if (!some_) throw ContractViolation("get() called on an empty Optional");
    return value_;
  }

 private:
  OptionalModel() = default;
  explicit OptionalModel(const Value& v) : value_(v), some_(true) {}

  Value value_;
  bool some_ = false;
};

/// Typed result of a dynamic cast: some(Int64 case_index) on match.
inline OptionalModel cast_model(eb_error_handle handle, const eb_type_id& target) {
  const eb_cast_result r = eb_error_dyncast(handle, &target);
  if (!r.matched) return OptionalModel::none();
  return OptionalModel::some(Value::int64(r.case_index));
}

}  // namespace errbridge::model
