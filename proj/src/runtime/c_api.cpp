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

// extern "C" surface over ErrorTable, Registry and the interpreter. Nothing
// here lets a C++ exception cross the boundary.

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <mutex>
#include <string>
#include <vector>

#include "errbridge/errbridge.h"
#include "interp/eval.hpp"
#include "runtime/error_table.hpp"
#include "runtime/registry.hpp"

namespace errbridge::runtime {
namespace {

void default_trap_handler(const char* message, void*) {
  std::fprintf(stderr, "errbridge: trap: %s\n", message);
  std::fflush(stderr);
  std::abort();
}

struct Runtime {
  ErrorTable errors;
  Registry registry;

  std::mutex trap_mutex;
  eb_trap_handler trap_handler = default_trap_handler;
  void* trap_user_data = nullptr;
  std::atomic<std::int64_t> trap_count{0};
};

Runtime& state() {
  static Runtime instance;
  return instance;
}

thread_local std::string last_trap_message;
thread_local std::string last_load_error;

size_t copy_out(const std::string& text, char* buffer, size_t capacity) {
  if (buffer != nullptr && capacity > 0) {
    std::memcpy(buffer, text.data(), std::min(capacity, text.size()));
    if (capacity > text.size()) buffer[text.size()] = '\0';
  }
  return text.size();
}

void raise_trap(const std::string& message) {
  Runtime& rt = state();
  last_trap_message = message;
  rt.trap_count.fetch_add(1, std::memory_order_relaxed);
  eb_trap_handler handler;
  void* user_data;
  {
    std::lock_guard lock(rt.trap_mutex);
    handler = rt.trap_handler;
    user_data = rt.trap_user_data;
  }
  handler(message.c_str(), user_data);
}

int invoke_trap(std::string message) {
  last_trap_message = std::move(message);
  return EB_STATUS_TRAP;
}

int64_t load_result(std::variant<std::int64_t, LoadError> result) {
  if (auto* id = std::get_if<std::int64_t>(&result)) return *id;
  auto& err = std::get<LoadError>(result);
  last_load_error = std::move(err.message);
  return err.code;
}

std::string module_search_path() {
  const char* env = std::getenv("ERRBRIDGE_MODULE_PATH");
  return env != nullptr ? env : "";
}

}  // namespace
}  // namespace errbridge::runtime

using errbridge::runtime::state;

extern "C" {

EB_API int64_t eb_load_module(const char* bytes, size_t length) {
  if (bytes == nullptr && length != 0) return EB_LOAD_MALFORMED;
  try {
    return errbridge::runtime::load_result(
        state().registry.load(std::string_view(bytes == nullptr ? "" : bytes, length)));
  } catch (const std::exception& e) {
    errbridge::runtime::last_load_error = e.what();
    return EB_LOAD_MALFORMED;
  }
}

EB_API int64_t eb_load_module_named(const char* name) {
  if (name == nullptr) return EB_LOAD_NOT_FOUND;
  try {
    return errbridge::runtime::load_result(
        state().registry.load_named(name, errbridge::runtime::module_search_path()));
  } catch (const std::exception& e) {
    errbridge::runtime::last_load_error = e.what();
    return EB_LOAD_MALFORMED;
  }
}

EB_API int64_t eb_require_module(const char* name) {
  const int64_t id = eb_load_module_named(name);
  if (id < 0) {
    errbridge::runtime::raise_trap("cannot load module '" + std::string(name ? name : "") +
                                   "': " + errbridge::runtime::last_load_error);
  }
  return id;
}

EB_API int eb_invoke(int64_t module_id, uint32_t fn_index, const eb_value* args,
                     size_t arg_count, eb_error_handle* out_error, eb_value* out_ret) {
  using namespace errbridge;
  try {
    const runtime::LoadedModule* loaded = state().registry.find(module_id);
    if (loaded == nullptr) {
      return runtime::invoke_trap("no module with id " + std::to_string(module_id));
    }
    const idl::InterfaceModule& module = loaded->module.module();
    if (fn_index >= module.functions.size()) {
      return runtime::invoke_trap("module '" + module.name + "' has no function #" +
                                  std::to_string(fn_index));
    }
    const idl::FunctionDecl& fn = module.functions[fn_index];
    if (out_error != nullptr && *out_error != EB_NULL_ERROR) {
      return runtime::invoke_trap("error slot for '" + fn.name + "' is not null on entry");
    }
    if (out_error == nullptr && fn.throws) {
      return runtime::invoke_trap("'" + fn.name + "' throws but no error slot was passed");
    }
    if (arg_count > 0 && args == nullptr) {
      return runtime::invoke_trap("null argument array for '" + fn.name + "'");
    }

    std::vector<Value> values;
    values.reserve(arg_count);
    for (size_t i = 0; i < arg_count; ++i) {
      auto v = Value::from_abi(args[i]);
      if (!v) {
        return runtime::invoke_trap("argument " + std::to_string(i) + " of '" + fn.name +
                                    "' has unknown tag " + std::to_string(args[i].tag));
      }
      values.push_back(*v);
    }

    const interp::Outcome outcome = interp::eval_function(module, fn, values);
    if (outcome.is_trap()) return runtime::invoke_trap(outcome.trap().message);
    if (outcome.has_error()) {
      const auto& thrown = outcome.error();
      *out_error = state().errors.create(
          runtime::ErrorBox{thrown.type, thrown.case_index, thrown.case_name});
      return EB_STATUS_THREW;
    }
    if (out_ret != nullptr) *out_ret = outcome.value().to_abi();
    return EB_STATUS_RETURNED;
  } catch (const std::exception& e) {
    return runtime::invoke_trap(std::string("internal error: ") + e.what());
  }
}

EB_API eb_error_handle eb_error_retain(eb_error_handle handle) {
  if (handle == EB_NULL_ERROR) return handle;
  if (!state().errors.retain(handle)) {
    errbridge::runtime::raise_trap("retain of dead error handle " + std::to_string(handle));
  }
  return handle;
}

EB_API void eb_error_release(eb_error_handle handle) {
  if (handle == EB_NULL_ERROR) return;
  if (!state().errors.release(handle)) {
    errbridge::runtime::raise_trap("release of dead error handle " + std::to_string(handle) +
                                   " (refcount would drop below zero)");
  }
}

EB_API eb_cast_result eb_error_dyncast(eb_error_handle handle, const eb_type_id* target) {
  eb_cast_result result{0, -1};
  if (handle == EB_NULL_ERROR || target == nullptr) return result;
  auto box = state().errors.inspect(handle);
  if (!box) {
    errbridge::runtime::raise_trap("dynamic cast of dead error handle " + std::to_string(handle));
    return result;
  }
  const errbridge::TypeId wanted{target->module_name ? target->module_name : "",
                                 target->enum_name ? target->enum_name : "", target->hash};
  if (box->type == wanted) {
    result.matched = 1;
    result.case_index = box->case_index;
  }
  return result;
}

EB_API size_t eb_error_message(eb_error_handle handle, char* buffer, size_t capacity) {
  if (handle == EB_NULL_ERROR) return 0;
  auto box = state().errors.inspect(handle);
  if (!box) {
    errbridge::runtime::raise_trap("message of dead error handle " + std::to_string(handle));
    return 0;
  }
  return errbridge::runtime::copy_out(box->message, buffer, capacity);
}

EB_API size_t eb_error_type_name(eb_error_handle handle, char* buffer, size_t capacity) {
  if (handle == EB_NULL_ERROR) return 0;
  auto box = state().errors.inspect(handle);
  if (!box) {
    errbridge::runtime::raise_trap("type name of dead error handle " + std::to_string(handle));
    return 0;
  }
  return errbridge::runtime::copy_out(box->type.qualified_name(), buffer, capacity);
}

EB_API int64_t eb_live_errors(void) { return state().errors.live(); }

EB_API int64_t eb_error_refcount(eb_error_handle handle) {
  return state().errors.refcount(handle);
}

EB_API int64_t eb_total_error_allocations(void) { return state().errors.total_allocations(); }

EB_API int64_t eb_trap_count(void) {
  return state().trap_count.load(std::memory_order_relaxed);
}

EB_API eb_trap_handler eb_set_trap_handler(eb_trap_handler handler, void* user_data) {
  auto& rt = state();
  std::lock_guard lock(rt.trap_mutex);
  eb_trap_handler previous = rt.trap_handler;
  rt.trap_handler = handler != nullptr ? handler : errbridge::runtime::default_trap_handler;
  rt.trap_user_data = user_data;
  return previous;
}

EB_API void eb_raise_trap(const char* message) {
  errbridge::runtime::raise_trap(message != nullptr ? message : "trap");
}

EB_API size_t eb_last_trap_message(char* buffer, size_t capacity) {
  return errbridge::runtime::copy_out(errbridge::runtime::last_trap_message, buffer, capacity);
}

EB_API size_t eb_last_load_error(char* buffer, size_t capacity) {
  return errbridge::runtime::copy_out(errbridge::runtime::last_load_error, buffer, capacity);
}

EB_API void eb_print_line(const char* text) {
  std::fputs(text != nullptr ? text : "", stdout);
  std::fputc('\n', stdout);
}

}  // extern "C"
