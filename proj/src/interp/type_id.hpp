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
#include <string>
#include <string_view>

namespace errbridge {

constexpr std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (char c : bytes) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 0x100000001b3ull;
  }
  return hash;
}

/// Identity of an error enum. Two ids are equal iff their names are equal;
/// the hash is a fast reject only.
struct TypeId {
  std::string module_name;
  std::string enum_name;
  std::uint64_t hash = 0;

  static TypeId of(std::string_view module_name, std::string_view enum_name) {
    std::string qualified = std::string(module_name) + "::" + std::string(enum_name);
    return TypeId{std::string(module_name), std::string(enum_name), fnv1a64(qualified)};
  }

  std::string qualified_name() const { return module_name + "::" + enum_name; }

  friend bool operator==(const TypeId& a, const TypeId& b) {
    return a.hash == b.hash && a.module_name == b.module_name && a.enum_name == b.enum_name;
  }
};

}  // namespace errbridge
