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


#include <cstdio>
#include <regex>

#include "codegen/codegen.hpp"
#include "idl/serialize.hpp"
#include "interp/type_id.hpp"
#include "oracles/frozen_values.hpp"
#include "support/helpers.hpp"
#include "support/structure.hpp"

using namespace errbridge::codegen;
using structure::contains;

namespace {

std::string header_of(const errbridge::idl::ValidatedModule& m, const GenOptions& o = {}) {
  auto result = emit_module_header(m, o);
  REQUIRE(std::holds_alternative<std::string>(result));
  return std::get<std::string>(result);
}

GenArtifacts generate_ok(const errbridge::idl::ValidatedModule& m, const GenOptions& o = {}) {
  auto result = generate(m, o);
  REQUIRE(std::holds_alternative<GenArtifacts>(result));
  return std::get<GenArtifacts>(std::move(result));
}

std::string gen_error(const errbridge::idl::ValidatedModule& m, const GenOptions& o = {}) {
  auto result = generate(m, o);
  REQUIRE(std::holds_alternative<GenError>(result));
  return std::get<GenError>(result).message;
}

}  // namespace

TEST_SUITE("support header") {
  TEST_CASE("mode gate with both aliases") {
    const std::string text = emit_support_header({});
    CHECK(structure::has_mode_gate(text));
    CHECK(contains(text, "using ThrowingResult = Swift::Expected<T>;"));
  }

  TEST_CASE("macro prefix") {
    GenOptions o;
    o.macro_prefix = "XY";
    const std::string text = emit_support_header(o);
    CHECK(structure::has_mode_gate(text, "XY"));
    CHECK_FALSE(contains(text, "EB_RETURN_THUNK"));
  }

  TEST_CASE("declares the Swift types") {
    const std::string text = emit_support_header({});
    for (const char* part : {"class Error", "class Optional", "class Expected", "class Expected<void>",
                             "Swift::Optional<E> Error::as() const", "void getMessage() const",
                             "bool isSome() const", "bool has_value() const",
                             "#include \"errbridge/errbridge.h\""}) {
      CHECK_MESSAGE(contains(text, part), part);
    }
  }

  TEST_CASE("deterministic") { CHECK(emit_support_header({}) == emit_support_header({})); }
}

TEST_SUITE("module header") {
  TEST_CASE("division thunk structure") {
    const std::string text = header_of(testing::load_fixture("division"));
    CHECK(structure::throwing_thunk_is_complete(text, "division", "float"));
    CHECK(contains(text, "inline Swift::ThrowingResult<float> division(Swift::Int a, Swift::Int b) {"));
    CHECK(contains(text, "return EB_RETURN_THUNK(float, returnValue);"));
    CHECK(contains(text, "namespace Functions {"));
    CHECK(contains(text, "#include \"errbridge_support.h\""));
  }

  TEST_CASE("structural probes reject damaged thunks") {
    const std::string text = header_of(testing::load_fixture("division"));
    auto without = [&](const std::string& cut) {
      std::string t = text;
      const auto at = t.find(cut);
      REQUIRE(at != std::string::npos);
      return t.erase(at, cut.size());
    };
    CHECK_FALSE(structure::throwing_thunk_is_complete(without("    throw (Swift::Error(opaqueError));\n"), "division", "float"));
    CHECK_FALSE(structure::throwing_thunk_is_complete(without("  if (opaqueError != EB_NULL_ERROR)\n"), "division", "float"));
    CHECK_FALSE(structure::throwing_thunk_is_complete(without("#else\n    return EB_RETURN_THUNK"), "division", "float"));
    CHECK_FALSE(structure::throwing_thunk_is_complete(text, "division", "double"));
    std::string support = emit_support_header({});
    support.erase(support.find("using ThrowingResult = T;"), 5);
    CHECK_FALSE(structure::has_mode_gate(support));
  }

  TEST_CASE("enum mirror") {
    const std::string text = header_of(testing::load_fixture("division"));
    CHECK(contains(text, "class DivByZero {"));
    CHECK(contains(text, "enum cases : int { divisorIsZero = 0, bothAreZero = 1 };"));
    char hash[32];
    std::snprintf(hash, sizeof hash, "0x%016llxull",
                  static_cast<unsigned long long>(frozen::kDivByZeroHash));
    CHECK(contains(text, std::string("{\"Functions\", \"DivByZero\", ") + hash + "}"));
    CHECK(contains(text, "friend constexpr bool operator==(DivByZero lhs, DivByZero rhs)"));
    CHECK(contains(text, "void getMessage() const noexcept"));
  }

  TEST_CASE("non-throwing function has no error slot and is noexcept") {
    auto m = testing::compile_ok("module M\nfunc id(x: Int) -> Int { return x }");
    const std::string text = header_of(m);
    CHECK(contains(text, "inline Swift::Int id(Swift::Int x) noexcept {"));
    CHECK_FALSE(contains(text, "opaqueError = EB_NULL_ERROR"));
    CHECK_FALSE(contains(text, "ThrowingResult"));
  }

  TEST_CASE("unit throwing thunk keeps both modes") {
    const std::string text = header_of(testing::load_fixture("unit_returns"));
    const std::string thunk = structure::thunk_text(text, "validate");
    REQUIRE_FALSE(thunk.empty());
    CHECK(structure::throwing_thunk_is_complete(text, "validate", "void"));
    CHECK(contains(thunk, "return Swift::Expected<void>();"));
  }

  TEST_CASE("empty module has only scaffolding") {
    auto m = testing::compile_ok("module Empty");
    const std::string text = header_of(m);
    CHECK(contains(text, "#include \"errbridge_support.h\""));
    CHECK(contains(text, "namespace Empty {"));
    CHECK_FALSE(contains(text, "_impl"));
    CHECK_FALSE(contains(text, "class "));
    CHECK_FALSE(contains(text, "inline "));
  }

  TEST_CASE("parameter and return type mapping") {
    const std::string text = header_of(testing::load_fixture("params_mixed"));
    CHECK(contains(text, "inline Swift::ThrowingResult<float> mix(Swift::Int level, float gain, bool muted) {"));
    CHECK(contains(text, "inline bool loud(float gain, bool boost) noexcept {"));
  }

  TEST_CASE("namespace option") {
    GenOptions o;
    o.namespace_name = "Bridged";
    auto m = testing::load_fixture("division");
    const std::string text = header_of(m, o);
    CHECK(contains(text, "namespace Bridged {"));
    CHECK(contains(text, "eb_require_module(\"Functions\")"));
    CHECK(contains(text, "{\"Functions\", \"DivByZero\""));
  }

  TEST_CASE("line comments option") {
    GenOptions o;
    o.emit_line_comments = true;
    const std::string text = header_of(testing::load_fixture("division"), o);
    CHECK(contains(text, "// line 9\n"));
    CHECK_FALSE(contains(header_of(testing::load_fixture("division")), "// line"));
  }

  TEST_CASE("function indices follow declaration order") {
    const std::string text = header_of(testing::load_fixture("no_throw"));
    CHECK(contains(text, "::eb_invoke(moduleId(), 0,"));
    CHECK(contains(text, "::eb_invoke(moduleId(), 3,"));
  }

  TEST_CASE("every fixture generates") {
    for (const auto& path : testing::fixture_files()) {
      CAPTURE(path.string());
      auto m = testing::compile_ok(testing::read_text(path));
      auto art = generate_ok(m);
      for (const auto& fn : m->functions) {
        if (fn.throws) {
          const char* type = fn.return_type == errbridge::idl::ScalarType::Int64 ? "Swift::Int"
                             : fn.return_type == errbridge::idl::ScalarType::Float64 ? "float"
                             : fn.return_type == errbridge::idl::ScalarType::Bool ? "bool"
                                                                                  : "void";
          CHECK_MESSAGE(structure::throwing_thunk_is_complete(art.module_header, fn.name, type),
                        fn.name);
        }
      }
    }
  }
}

TEST_SUITE("options and names") {
  TEST_CASE("invalid options") {
    auto m = testing::load_fixture("division");
    GenOptions o;
    o.namespace_name = "not valid";
    CHECK(contains(gen_error(m, o), "namespace"));
    o = {};
    o.namespace_name = "class";
    CHECK(contains(gen_error(m, o), "namespace"));
    o = {};
    o.macro_prefix = "1X";
    CHECK(contains(gen_error(m, o), "macro prefix"));
    o = {};
    o.support_header_name = "../x.h";
    CHECK(contains(gen_error(m, o), "support header"));
    o = {};
    o.support_header_name = "Functions.h";
    CHECK(contains(gen_error(m, o), "collides"));
  }

  TEST_CASE("reserved identifiers") {
    CHECK(is_reserved_identifier("class"));
    CHECK(is_reserved_identifier("xor"));
    CHECK(is_reserved_identifier("Swift"));
    CHECK(is_reserved_identifier("_impl"));
    CHECK_FALSE(is_reserved_identifier("division"));
    auto m = testing::compile_ok("module M\nfunc delete(a: Int) -> Int { return a }");
    CHECK(contains(gen_error(m), "delete"));
    auto p = testing::compile_ok("module M\nfunc f(new: Int) -> Int { return new }");
    CHECK(contains(gen_error(p), "new"));
    auto e = testing::compile_ok("module M\nenum E : Error { case default }");
    CHECK(contains(gen_error(e), "default"));
  }
}

TEST_SUITE("artifacts") {
  TEST_CASE("three files with matching hashes") {
    auto art = generate_ok(testing::load_fixture("division"));
    REQUIRE(art.manifest.size() == 3);
    CHECK(art.manifest[0].filename == "errbridge_support.h");
    CHECK(art.manifest[1].filename == "Functions.h");
    CHECK(art.manifest[2].filename == "Functions.ebm");
    CHECK(art.manifest[0].content_hash == errbridge::fnv1a64(art.support_header));
    CHECK(art.manifest[1].content_hash == errbridge::fnv1a64(art.module_header));
    CHECK(art.manifest[2].content_hash == errbridge::fnv1a64(art.registry_bytes));
    CHECK(std::regex_match(art.manifest[0].hash_hex(), std::regex("[0-9a-f]{16}")));
  }

  TEST_CASE("registry deserializes to the same module") {
    auto m = testing::load_fixture("division");
    auto art = generate_ok(m);
    auto back = errbridge::idl::deserialize_module(art.registry_bytes);
    REQUIRE(std::holds_alternative<errbridge::idl::ValidatedModule>(back));
    CHECK(errbridge::idl::structurally_equal(
        std::get<errbridge::idl::ValidatedModule>(back).module(), m.module()));
  }

  TEST_CASE("deterministic across runs") {
    auto m = testing::load_fixture("multi_enum");
    auto a = generate_ok(m);
    auto b = generate_ok(m);
    CHECK(a.support_header == b.support_header);
    CHECK(a.module_header == b.module_header);
    CHECK(a.registry_bytes == b.registry_bytes);
  }

  TEST_CASE("namespace changes the header but not the registry") {
    auto m = testing::load_fixture("division");
    GenOptions o;
    o.namespace_name = "Other";
    auto a = generate_ok(m);
    auto b = generate_ok(m, o);
    CHECK(a.module_header != b.module_header);
    CHECK(a.registry_bytes == b.registry_bytes);
    CHECK(a.support_header == b.support_header);
  }

  TEST_CASE("division matches the golden files") {
    auto art = generate_ok(testing::load_fixture("division"));
    const auto dir = testing::golden_dir() / "division";
    CHECK(art.support_header == testing::read_text(dir / "errbridge_support.h"));
    CHECK(art.module_header == testing::read_text(dir / "Functions.h"));
    CHECK(art.registry_bytes == testing::read_text(dir / "Functions.ebm"));
  }
}
