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

#include <cctype>
#include <cstdio>
#include <optional>
#include <sstream>

#include "codegen/codegen.hpp"
#include "codegen/text.hpp"
#include "interp/type_id.hpp"

namespace errbridge::codegen {

using idl::ScalarType;

namespace {

constexpr std::string_view kCxxKeywords[] = {
    "alignas", "alignof", "and", "and_eq", "asm", "auto", "bitand", "bitor", "bool", "break",
    "case", "catch", "char", "char8_t", "char16_t", "char32_t", "class", "compl", "concept",
    "const", "consteval", "constexpr", "constinit", "const_cast", "continue", "co_await",
    "co_return", "co_yield", "decltype", "default", "delete", "do", "double", "dynamic_cast",
    "else", "enum", "explicit", "export", "extern", "false", "float", "for", "friend", "goto",
    "if", "inline", "int", "long", "mutable", "namespace", "new", "noexcept", "not", "not_eq",
    "nullptr", "operator", "or", "or_eq", "private", "protected", "public", "register",
    "reinterpret_cast", "requires", "return", "short", "signed", "sizeof", "static",
    "static_assert", "static_cast", "struct", "switch", "template", "this", "thread_local",
    "throw", "true", "try", "typedef", "typeid", "typename", "union", "unsigned", "using",
    "virtual", "void", "volatile", "wchar_t", "while", "xor", "xor_eq", "final", "override",
    "import", "module", "NULL",
};

// Names the generated code itself defines or uses as locals.
constexpr std::string_view kGeneratedNames[] = {
    "Swift", "_impl", "type_id", "fromCaseIndex", "getCase", "caseIndex",
    "messageText", "getMessage", "cases", "opaqueError", "returnValue", "moduleId",
};

std::string cxx_type(ScalarType type) {
  switch (type) {
    case ScalarType::Int64: return "Swift::Int";
    case ScalarType::Float64: return "float";
    case ScalarType::Bool: return "bool";
    case ScalarType::Unit: return "void";
  }
  return "void";
}

std::string encode_arg(const idl::Param& p) {
  switch (p.type) {
    case ScalarType::Int64: return "::eb_value_from_int(" + p.name + ")";
    case ScalarType::Float64: return "::eb_value_from_float(" + p.name + ")";
    case ScalarType::Bool: return "::eb_value_from_bool(" + p.name + ")";
    case ScalarType::Unit: break;
  }
  return "::eb_value_unit()";
}

std::string decode_result(ScalarType type) {
  switch (type) {
    case ScalarType::Int64: return "::eb_value_as_int(_result)";
    case ScalarType::Float64: return "static_cast<float>(::eb_value_as_float(_result))";
    case ScalarType::Bool: return "::eb_value_as_bool(_result) != 0";
    case ScalarType::Unit: break;
  }
  return "";
}

std::string hex64(std::uint64_t value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "0x%016llxull", static_cast<unsigned long long>(value));
  return buf;
}

std::string param_list(const idl::FunctionDecl& fn) {
  std::string out;
  for (std::size_t i = 0; i < fn.params.size(); ++i) {
    if (i > 0) out += ", ";
    out += cxx_type(fn.params[i].type) + " " + fn.params[i].name;
  }
  return out;
}

std::string arg_names(const idl::FunctionDecl& fn) {
  std::string out;
  for (std::size_t i = 0; i < fn.params.size(); ++i) {
    if (i > 0) out += ", ";
    out += fn.params[i].name;
  }
  return out;
}

std::optional<GenError> check_names(const idl::InterfaceModule& m, const std::string& ns) {
  if (is_reserved_identifier(ns)) {
    return GenError{"namespace '" + ns + "' is reserved in generated C++"};
  }
  for (const auto& e : m.enums) {
    if (is_reserved_identifier(e.name)) {
      return GenError{"enum '" + e.name + "': name is reserved in generated C++"};
    }
    for (const auto& c : e.cases) {
      if (is_reserved_identifier(c) || c == e.name) {
        return GenError{"enum '" + e.name + "': case '" + c + "' is reserved in generated C++"};
      }
    }
  }
  for (const auto& fn : m.functions) {
    if (is_reserved_identifier(fn.name)) {
      return GenError{"function '" + fn.name + "': name is reserved in generated C++"};
    }
    for (const auto& p : fn.params) {
      if (p.type == ScalarType::Unit) {
        return GenError{"function '" + fn.name + "': unsupported parameter type Unit for '" +
                        p.name + "'"};
      }
      if (is_reserved_identifier(p.name) || p.name == fn.name) {
        return GenError{"function '" + fn.name + "': parameter '" + p.name +
                        "' is reserved in generated C++"};
      }
    }
  }
  return std::nullopt;
}

void emit_enum(std::ostringstream& out, const idl::InterfaceModule& m,
               const idl::ErrorEnumDecl& e) {
  const TypeId id = TypeId::of(m.name, e.name);
  out << "class " << e.name << " {\n"
      << " public:\n"
      << "  enum cases : int {";
  for (std::size_t i = 0; i < e.cases.size(); ++i) {
    out << (i == 0 ? " " : ", ") << e.cases[i] << " = " << i;
  }
  out << " };\n\n"
      << "  static constexpr ::eb_type_id type_id = {\"" << m.name << "\", \"" << e.name << "\", "
      << hex64(id.hash) << "};\n\n"
      << "  constexpr " << e.name << "(cases value) noexcept : _case(value) {}\n\n"
      << "  static constexpr " << e.name << " fromCaseIndex(int index) noexcept {\n"
      << "    return " << e.name << "(static_cast<cases>(index));\n"
      << "  }\n\n"
      << "  constexpr cases getCase() const noexcept { return _case; }\n"
      << "  constexpr int caseIndex() const noexcept { return static_cast<int>(_case); }\n\n"
      << "  const char* messageText() const noexcept {\n"
      << "    switch (_case) {\n";
  for (const auto& c : e.cases) {
    out << "      case " << c << ": return \"" << c << "\";\n";
  }
  out << "    }\n"
      << "    return \"\";\n"
      << "  }\n\n"
      << "  /// Prints the case name to standard output.\n"
      << "  void getMessage() const noexcept { ::eb_print_line(messageText()); }\n\n"
      << "  friend constexpr bool operator==(" << e.name << " lhs, " << e.name
      << " rhs) noexcept {\n"
      << "    return lhs._case == rhs._case;\n"
      << "  }\n"
      << "  friend constexpr bool operator!=(" << e.name << " lhs, " << e.name
      << " rhs) noexcept {\n"
      << "    return lhs._case != rhs._case;\n"
      << "  }\n\n"
      << " private:\n"
      << "  cases _case;\n"
      << "};\n\n";
}

void emit_call_wrapper(std::ostringstream& out, const idl::FunctionDecl& fn, std::size_t index) {
  std::string params = param_list(fn);
  if (fn.throws) params += std::string(params.empty() ? "" : ", ") + "::eb_error_handle* opaqueError";
  out << "inline " << cxx_type(fn.return_type) << " call_" << fn.name << "(" << params
      << ") noexcept {\n";
  if (!fn.params.empty()) {
    out << "  const ::eb_value _args[] = {";
    for (std::size_t i = 0; i < fn.params.size(); ++i) {
      out << (i == 0 ? "" : ", ") << encode_arg(fn.params[i]);
    }
    out << "};\n";
  }
  out << "  ::eb_value _result = ::eb_value_unit();\n"
      << "  if (::eb_invoke(moduleId(), " << index << ", "
      << (fn.params.empty() ? "nullptr" : "_args") << ", " << fn.params.size() << ", "
      << (fn.throws ? "opaqueError" : "nullptr") << ", &_result) == EB_STATUS_TRAP) {\n"
      << "    Swift::_impl::raiseLastTrap();\n"
      << "  }\n";
  if (fn.return_type == ScalarType::Unit) {
    out << "  (void)_result;\n";
  } else {
    out << "  return " << decode_result(fn.return_type) << ";\n";
  }
  out << "}\n\n";
}

void emit_thunk(std::ostringstream& out, const idl::FunctionDecl& fn, const GenOptions& options) {
  const std::string type = cxx_type(fn.return_type);
  const std::string thunk = options.macro_prefix + "_RETURN_THUNK";
  const bool unit = fn.return_type == ScalarType::Unit;
  if (options.emit_line_comments && fn.pos.line > 0) {
    out << "// line " << fn.pos.line << "\n";
  }

  if (!fn.throws) {
    out << "inline " << type << " " << fn.name << "(" << param_list(fn) << ") noexcept {\n"
        << "  " << (unit ? "" : "return ") << "_impl::call_" << fn.name << "(" << arg_names(fn)
        << ");\n"
        << "}\n\n";
    return;
  }

  std::string call_args = arg_names(fn);
  call_args += std::string(call_args.empty() ? "" : ", ") + "&opaqueError";
  out << "inline Swift::ThrowingResult<" << type << "> " << fn.name << "(" << param_list(fn)
      << ") {\n"
      << "  ::eb_error_handle opaqueError = EB_NULL_ERROR;\n";
  if (unit) {
    out << "  _impl::call_" << fn.name << "(" << call_args << ");\n";
  } else {
    out << "  auto returnValue = _impl::call_" << fn.name << "(" << call_args << ");\n";
  }
  out << "  if (opaqueError != EB_NULL_ERROR)\n"
      << "#ifdef __cpp_exceptions\n"
      << "    throw (Swift::Error(opaqueError));\n"
      << "#else\n"
      << "    return " << thunk << "(" << type << ", Swift::Error(opaqueError));\n"
      << "#endif\n\n";
  if (unit) {
    out << "#ifdef __cpp_exceptions\n"
        << "  return;\n"
        << "#else\n"
        << "  return Swift::Expected<void>();\n"
        << "#endif\n";
  } else {
    out << "  return " << thunk << "(" << type << ", returnValue);\n";
  }
  out << "}\n\n";
}

}  // namespace

bool is_reserved_identifier(std::string_view name) {
  for (auto kw : kCxxKeywords) {
    if (kw == name) return true;
  }
  for (auto n : kGeneratedNames) {
    if (n == name) return true;
  }
  // Reserved for the implementation by the C++ standard.
  if (name.size() >= 2 && name[0] == '_' && (std::isupper(static_cast<unsigned char>(name[1])) ||
                                              name[1] == '_')) {
    return true;
  }
  return name.find("__") != std::string_view::npos;
}

std::variant<std::string, GenError> emit_module_header(const idl::ValidatedModule& validated,
                                                       const GenOptions& options) {
  const idl::InterfaceModule& m = validated.module();
  const std::string ns = options.namespace_name.empty() ? m.name : options.namespace_name;
  if (auto err = check_names(m, ns)) return *err;

  const std::string guard = header_guard("ERRBRIDGE_MODULE_" + m.name + ".h");
  std::ostringstream out;
  out << "// Generated by errbridge from module '" << m.name << "'. Do not edit.\n\n"
      << "#ifndef " << guard << "\n"
      << "#define " << guard << "\n\n"
      << "#include \"" << options.support_header_name << "\"\n\n"
      << "namespace " << ns << " {\n\n";

  for (const auto& e : m.enums) emit_enum(out, m, e);

  if (!m.functions.empty()) {
    out << "namespace _impl {\n\n"
        << "inline ::int64_t moduleId() noexcept {\n"
        << "  static const ::int64_t id = ::eb_require_module(\"" << m.name << "\");\n"
        << "  return id;\n"
        << "}\n\n";
    for (std::size_t i = 0; i < m.functions.size(); ++i) {
      emit_call_wrapper(out, m.functions[i], i);
    }
    out << "}  // namespace _impl\n\n";
  }

  for (const auto& fn : m.functions) emit_thunk(out, fn, options);

  out << "}  // namespace " << ns << "\n\n"
      << "#endif  // " << guard << "\n";
  return out.str();
}

}  // namespace errbridge::codegen
