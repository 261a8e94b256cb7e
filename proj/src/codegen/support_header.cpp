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

#include <string>

#include "codegen/codegen.hpp"
#include "codegen/text.hpp"

namespace errbridge::codegen {

namespace {

// @GUARD@ and @PREFIX@ are substituted; everything else is emitted verbatim.
constexpr std::string_view kSupportTemplate = R"cpp(// Generated by errbridge. Do not edit.
//
// Error, Optional and Expected types shared by every generated module header.

#ifndef @GUARD@
#define @GUARD@

#include <new>

#include "errbridge/errbridge.h"

namespace Swift {

using Int = ::int64_t;
using Float = float;
using Bool = bool;

template <class T>
class Optional;

namespace _impl {

inline void raiseLastTrap() noexcept {
  char message[256];
  ::size_t length = ::eb_last_trap_message(message, sizeof(message) - 1);
  message[length < sizeof(message) - 1 ? length : sizeof(message) - 1] = '\0';
  ::eb_raise_trap(message);
}

}  // namespace _impl

/// Any error thrown by a bridged function. Owns one reference to the
/// runtime's error box: copies retain, destruction releases.
class Error {
 public:
  Error() noexcept : opaqueValue(EB_NULL_ERROR) {}

  /// Adopts the reference the runtime handed out with the handle.
  explicit Error(::eb_error_handle opaqueError) noexcept : opaqueValue(opaqueError) {}

  Error(const Error& other) noexcept : opaqueValue(::eb_error_retain(other.opaqueValue)) {}

  Error(Error&& other) noexcept : opaqueValue(other.opaqueValue) {
    other.opaqueValue = EB_NULL_ERROR;
  }

  Error& operator=(const Error& other) noexcept {
    if (this != &other) {
      ::eb_error_release(opaqueValue);
      opaqueValue = ::eb_error_retain(other.opaqueValue);
    }
    return *this;
  }

  Error& operator=(Error&& other) noexcept {
    if (this != &other) {
      ::eb_error_release(opaqueValue);
      opaqueValue = other.opaqueValue;
      other.opaqueValue = EB_NULL_ERROR;
    }
    return *this;
  }

  ~Error() { ::eb_error_release(opaqueValue); }

  /// Some(case) when the error is an E, none() otherwise.
  template <class E>
  Swift::Optional<E> as() const;

  /// Writes the case name; returns its full length.
  ::size_t message(char* buffer, ::size_t capacity) const noexcept {
    return ::eb_error_message(opaqueValue, buffer, capacity);
  }

  /// Prints the case name to standard output.
  void getMessage() const noexcept {
    char text[256];
    ::size_t length = message(text, sizeof(text) - 1);
    text[length < sizeof(text) - 1 ? length : sizeof(text) - 1] = '\0';
    ::eb_print_line(text);
  }

  ::eb_error_handle getOpaqueHandle() const noexcept { return opaqueValue; }

 private:
  ::eb_error_handle opaqueValue;
};

template <class T>
class Optional {
 public:
  static Optional some(const T& value) { return Optional(value); }
  static Optional none() noexcept { return Optional(); }

  Optional(const Optional& other) : hasValue(other.hasValue) {
    if (hasValue) new (buffer) T(*other.pointer());
  }

  Optional& operator=(const Optional& other) {
    if (this != &other) {
      reset();
      if (other.hasValue) {
        new (buffer) T(*other.pointer());
        hasValue = true;
      }
    }
    return *this;
  }

  ~Optional() { reset(); }

  bool isSome() const noexcept { return hasValue; }

  const T& get() const noexcept {
    if (!hasValue) ::eb_raise_trap("Swift::Optional::get() called on none");
    return *pointer();
  }

 private:
  Optional() noexcept : hasValue(false) {}
  explicit Optional(const T& value) : hasValue(true) { new (buffer) T(value); }

  void reset() noexcept {
    if (hasValue) {
      pointer()->~T();
      hasValue = false;
    }
  }

  const T* pointer() const noexcept {
    return std::launder(reinterpret_cast<const T*>(buffer));
  }
  T* pointer() noexcept { return std::launder(reinterpret_cast<T*>(buffer)); }

  alignas(T) unsigned char buffer[sizeof(T)];
  bool hasValue;
};

template <class E>
Swift::Optional<E> Error::as() const {
  const ::eb_cast_result cast = ::eb_error_dyncast(opaqueValue, &E::type_id);
  if (!cast.matched) return Swift::Optional<E>::none();
  return Swift::Optional<E>::some(E::fromCaseIndex(cast.case_index));
}

/// Either a T or a Swift::Error, never both, stored in one buffer.
template <class T>
class Expected {
 public:
  Expected(const T& value) : hasValue(true) { new (buffer) T(value); }

  Expected(const Swift::Error& error) noexcept : hasValue(false) {
    new (buffer) Swift::Error(error);
  }

  Expected(Swift::Error&& error) noexcept : hasValue(false) {
    new (buffer) Swift::Error(static_cast<Swift::Error&&>(error));
  }

  Expected(const Expected& other) : hasValue(other.hasValue) {
    if (hasValue) {
      new (buffer) T(*other.valuePointer());
    } else {
      new (buffer) Swift::Error(*other.errorPointer());
    }
  }

  Expected& operator=(const Expected& other) {
    if (this != &other) {
      destroy();
      hasValue = other.hasValue;
      if (hasValue) {
        new (buffer) T(*other.valuePointer());
      } else {
        new (buffer) Swift::Error(*other.errorPointer());
      }
    }
    return *this;
  }

  ~Expected() { destroy(); }

  bool has_value() const noexcept { return hasValue; }
  explicit operator bool() const noexcept { return hasValue; }

  const T& value() const noexcept {
    if (!hasValue) ::eb_raise_trap("Swift::Expected::value() called on an error");
    return *valuePointer();
  }

  const Swift::Error& error() const noexcept {
    if (hasValue) ::eb_raise_trap("Swift::Expected::error() called on a value");
    return *errorPointer();
  }

  const T& operator*() const noexcept { return value(); }
  const T* operator->() const noexcept { return &value(); }

 private:
  static constexpr ::size_t bufferSize =
      sizeof(T) > sizeof(Swift::Error) ? sizeof(T) : sizeof(Swift::Error);
  static constexpr ::size_t bufferAlign =
      alignof(T) > alignof(Swift::Error) ? alignof(T) : alignof(Swift::Error);

  void destroy() noexcept {
    if (hasValue) {
      valuePointer()->~T();
    } else {
      errorPointer()->~Error();
    }
  }

  const T* valuePointer() const noexcept {
    return std::launder(reinterpret_cast<const T*>(buffer));
  }
  T* valuePointer() noexcept { return std::launder(reinterpret_cast<T*>(buffer)); }
  const Swift::Error* errorPointer() const noexcept {
    return std::launder(reinterpret_cast<const Swift::Error*>(buffer));
  }
  Swift::Error* errorPointer() noexcept {
    return std::launder(reinterpret_cast<Swift::Error*>(buffer));
  }

  alignas(bufferAlign) unsigned char buffer[bufferSize];
  bool hasValue;
};

/// Result of a throwing function returning nothing.
template <>
class Expected<void> {
 public:
  Expected() noexcept : hasValue(true) {}
  Expected(const Swift::Error& error) noexcept : storedError(error), hasValue(false) {}
  Expected(Swift::Error&& error) noexcept
      : storedError(static_cast<Swift::Error&&>(error)), hasValue(false) {}

  bool has_value() const noexcept { return hasValue; }
  explicit operator bool() const noexcept { return hasValue; }

  void value() const noexcept {
    if (!hasValue) ::eb_raise_trap("Swift::Expected::value() called on an error");
  }

  const Swift::Error& error() const noexcept {
    if (hasValue) ::eb_raise_trap("Swift::Expected::error() called on a value");
    return storedError;
  }

 private:
  Swift::Error storedError;
  bool hasValue;
};

#ifdef __cpp_exceptions
template<class T>
using ThrowingResult = T;
#define @PREFIX@_RETURN_THUNK(T, v) v
#else
template<class T>
using ThrowingResult = Swift::Expected<T>;
#define @PREFIX@_RETURN_THUNK(T, v) Swift::Expected<T>(v)
#endif

}  // namespace Swift

#endif  // @GUARD@
)cpp";

}  // namespace

std::string emit_support_header(const GenOptions& options) {
  std::string text(kSupportTemplate);
  replace_all(text, "@GUARD@", header_guard(options.support_header_name));
  replace_all(text, "@PREFIX@", options.macro_prefix);
  return text;
}

}  // namespace errbridge::codegen
