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

// C ABI of the errbridge runtime.
//
// Error boxes are reference counted and live in a runtime-owned table; callers
// only ever see 64-bit handles. The null handle is 0. A handle returned by
// eb_invoke with EB_STATUS_THREW carries one reference owned by the caller.
//
// Values cross the boundary as a tag byte followed by an 8-byte little-endian
// payload. Use the eb_value_* helpers below instead of touching the bytes.

#ifndef ERRBRIDGE_ERRBRIDGE_H
#define ERRBRIDGE_ERRBRIDGE_H

#include <stddef.h>
#include <stdint.h>
#include <string.h>

#if defined _WIN32 || defined __CYGWIN__
#ifdef ERRBRIDGE_BUILDING_LIBRARY
#define EB_API __declspec(dllexport)
#else
#define EB_API __declspec(dllimport)
#endif
#else
#define EB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef uint64_t eb_error_handle;
#define EB_NULL_ERROR ((eb_error_handle)0)

enum {
  EB_STATUS_RETURNED = 0,
  EB_STATUS_THREW = 1,
  EB_STATUS_TRAP = 2
};

enum {
  EB_LOAD_MALFORMED = -1,
  EB_LOAD_CONFLICT = -2,
  EB_LOAD_NOT_FOUND = -3
};

enum {
  EB_TAG_UNIT = 0,
  EB_TAG_INT64 = 1,
  EB_TAG_FLOAT64 = 2,
  EB_TAG_BOOL = 3
};

typedef struct eb_value {
  uint8_t tag;
  uint8_t payload[8];
} eb_value;

/// Type identity of an error enum. `hash` is FNV-1a 64 of "module::enum";
/// equality is decided on the names, the hash only short-circuits mismatches.
typedef struct eb_type_id {
  const char* module_name;
  const char* enum_name;
  uint64_t hash;
} eb_type_id;

typedef struct eb_cast_result {
  int matched;
  int32_t case_index;
} eb_cast_result;

typedef void (*eb_trap_handler)(const char* message, void* user_data);

/// Registers a module from its canonical serialized form. Returns the module
/// id (>= 0) or one of EB_LOAD_*. Loading identical bytes twice returns the
/// same id.
EB_API int64_t eb_load_module(const char* bytes, size_t length);

/// Loads `<name>.ebm` from the directories listed in ERRBRIDGE_MODULE_PATH
/// (':'-separated; the current directory when unset). Returns the id of an
/// already-registered module of that name without touching the filesystem.
EB_API int64_t eb_load_module_named(const char* name);

/// Like eb_load_module_named, but raises a trap when the module cannot be
/// loaded. Used by generated headers on first call.
EB_API int64_t eb_require_module(const char* name);

/// Calls function `fn_index` of a loaded module.
///
/// `*out_error` must be EB_NULL_ERROR on entry. `out_error` may be NULL only
/// for functions that are not declared `throws`. Returns EB_STATUS_RETURNED
/// with `*out_ret` filled, EB_STATUS_THREW with a fresh handle (refcount 1)
/// in `*out_error`, or EB_STATUS_TRAP; the trap text is available from
/// eb_last_trap_message.
EB_API int eb_invoke(int64_t module_id, uint32_t fn_index, const eb_value* args,
                     size_t arg_count, eb_error_handle* out_error,
                     eb_value* out_ret);

EB_API eb_error_handle eb_error_retain(eb_error_handle handle);
EB_API void eb_error_release(eb_error_handle handle);

/// Borrows the handle; never changes a refcount.
EB_API eb_cast_result eb_error_dyncast(eb_error_handle handle,
                                       const eb_type_id* target);

/// Writes the case name (UTF-8, no terminator written when truncated) and
/// returns the full length in bytes.
EB_API size_t eb_error_message(eb_error_handle handle, char* buffer,
                               size_t capacity);

/// Writes "<module>::<enum>" of the box's type identity; same contract as
/// eb_error_message.
EB_API size_t eb_error_type_name(eb_error_handle handle, char* buffer,
                                 size_t capacity);

EB_API int64_t eb_live_errors(void);

// Debug accounting.
EB_API int64_t eb_error_refcount(eb_error_handle handle);
EB_API int64_t eb_total_error_allocations(void);
EB_API int64_t eb_trap_count(void);
EB_API eb_trap_handler eb_set_trap_handler(eb_trap_handler handler,
                                           void* user_data);
EB_API void eb_raise_trap(const char* message);
EB_API size_t eb_last_trap_message(char* buffer, size_t capacity);
EB_API size_t eb_last_load_error(char* buffer, size_t capacity);

/// Writes `text` followed by a newline to standard output.
EB_API void eb_print_line(const char* text);

static inline eb_value eb_value_encode_bits(uint8_t tag, uint64_t bits) {
  eb_value v;
  int i;
  v.tag = tag;
  for (i = 0; i < 8; ++i) {
    v.payload[i] = (uint8_t)(bits >> (8 * i));
  }
  return v;
}

static inline uint64_t eb_value_bits(eb_value v) {
  uint64_t bits = 0;
  int i;
  for (i = 0; i < 8; ++i) {
    bits |= (uint64_t)v.payload[i] << (8 * i);
  }
  return bits;
}

static inline eb_value eb_value_unit(void) {
  return eb_value_encode_bits(EB_TAG_UNIT, 0);
}

static inline eb_value eb_value_from_int(int64_t x) {
  return eb_value_encode_bits(EB_TAG_INT64, (uint64_t)x);
}

static inline eb_value eb_value_from_float(double x) {
  uint64_t bits;
  memcpy(&bits, &x, sizeof bits);
  return eb_value_encode_bits(EB_TAG_FLOAT64, bits);
}

static inline eb_value eb_value_from_bool(int x) {
  return eb_value_encode_bits(EB_TAG_BOOL, x ? 1u : 0u);
}

static inline int64_t eb_value_as_int(eb_value v) {
  return (int64_t)eb_value_bits(v);
}

static inline double eb_value_as_float(eb_value v) {
  uint64_t bits = eb_value_bits(v);
  double x;
  memcpy(&x, &bits, sizeof x);
  return x;
}

static inline int eb_value_as_bool(eb_value v) {
  return eb_value_bits(v) != 0;
}

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  // ERRBRIDGE_ERRBRIDGE_H
