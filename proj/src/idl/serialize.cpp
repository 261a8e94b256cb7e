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

#include "idl/serialize.hpp"

#include <stdexcept>

#include "json.hpp"

namespace errbridge::idl {

using nlohmann::json;

namespace {

json expr_to_json(const Expr& expr) {
  return std::visit(
      [](const auto& n) -> json {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, IntLit>) {
          return {{"kind", "int"}, {"value", n.value}};
        } else if constexpr (std::is_same_v<T, FloatLit>) {
          return {{"kind", "float"}, {"value", n.value}};
        } else if constexpr (std::is_same_v<T, BoolLit>) {
          return {{"kind", "bool"}, {"value", n.value}};
        } else if constexpr (std::is_same_v<T, ParamRef>) {
          return {{"kind", "param"}, {"name", n.name}};
        } else if constexpr (std::is_same_v<T, Binary>) {
          return {{"kind", "binary"},
                  {"op", std::string(to_string(n.op))},
                  {"lhs", expr_to_json(*n.lhs)},
                  {"rhs", expr_to_json(*n.rhs)}};
        } else {
          return {{"kind", "float_cast"}, {"operand", expr_to_json(*n.operand)}};
        }
      },
      expr.node);
}

json block_to_json(const Block& block) {
  json out = json::array();
  for (const auto& stmt : block) {
    if (const auto* s = std::get_if<If>(&stmt.node)) {
      out.push_back({{"kind", "if"},
                     {"cond", expr_to_json(*s->cond)},
                     {"then", block_to_json(s->then_block)},
                     {"else", block_to_json(s->else_block)}});
    } else if (const auto* s = std::get_if<Return>(&stmt.node)) {
      out.push_back({{"kind", "return"}, {"value", s->value ? expr_to_json(*s->value) : json()}});
    } else {
      const auto& th = std::get<Throw>(stmt.node);
      out.push_back({{"kind", "throw"}, {"enum", th.enum_name}, {"case", th.case_name}});
    }
  }
  return out;
}

// Schema violations surface as this and become DeserializeError{0, ...}.
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw SchemaError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(where + ": missing field \"" + key + "\"");
  return *it;
}

std::string string_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_string()) throw SchemaError(where + "." + key + ": expected a string");
  return v.get<std::string>();
}

const json& array_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_array()) throw SchemaError(where + "." + key + ": expected an array");
  return v;
}

ScalarType type_field(const json& obj, const char* key, const std::string& where) {
  std::string name = string_field(obj, key, where);
  auto type = scalar_type_from_string(name);
  if (!type) throw SchemaError(where + "." + key + ": unknown type \"" + name + "\"");
  return *type;
}

ExprPtr expr_from_json(const json& j, const std::string& where) {
  auto e = std::make_unique<Expr>();
  const std::string kind = string_field(j, "kind", where);
  if (kind == "int") {
    const json& v = field(j, "value", where);
    if (!v.is_number_integer()) throw SchemaError(where + ".value: expected an integer");
    if (v.is_number_unsigned() && v.get<std::uint64_t>() > INT64_MAX) {
      throw SchemaError(where + ".value: out of range for Int64");
    }
    e->node = IntLit{v.get<std::int64_t>()};
  } else if (kind == "float") {
    const json& v = field(j, "value", where);
    if (!v.is_number()) throw SchemaError(where + ".value: expected a number");
    e->node = FloatLit{v.get<double>()};
  } else if (kind == "bool") {
    const json& v = field(j, "value", where);
    if (!v.is_boolean()) throw SchemaError(where + ".value: expected a boolean");
    e->node = BoolLit{v.get<bool>()};
  } else if (kind == "param") {
    e->node = ParamRef{string_field(j, "name", where)};
  } else if (kind == "binary") {
    std::string spelling = string_field(j, "op", where);
    auto op = binary_op_from_string(spelling);
    if (!op) throw SchemaError(where + ".op: unknown operator \"" + spelling + "\"");
    e->node = Binary{*op, expr_from_json(field(j, "lhs", where), where + ".lhs"),
                     expr_from_json(field(j, "rhs", where), where + ".rhs")};
  } else if (kind == "float_cast") {
    e->node = FloatCast{expr_from_json(field(j, "operand", where), where + ".operand")};
  } else {
    throw SchemaError(where + ".kind: unknown expression kind \"" + kind + "\"");
  }
  return e;
}

Block block_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected an array");
  Block block;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string here = where + "[" + std::to_string(i) + "]";
    const json& s = j[i];
    const std::string kind = string_field(s, "kind", here);
    Stmt stmt;
    if (kind == "if") {
      stmt.node = If{expr_from_json(field(s, "cond", here), here + ".cond"),
                     block_from_json(field(s, "then", here), here + ".then"),
                     block_from_json(field(s, "else", here), here + ".else")};
    } else if (kind == "return") {
      const json& v = field(s, "value", here);
      stmt.node = Return{v.is_null() ? nullptr : expr_from_json(v, here + ".value")};
    } else if (kind == "throw") {
      Throw th;
      th.enum_name = string_field(s, "enum", here);
      th.case_name = string_field(s, "case", here);
      stmt.node = std::move(th);
    } else {
      throw SchemaError(here + ".kind: unknown statement kind \"" + kind + "\"");
    }
    block.push_back(std::move(stmt));
  }
  return block;
}

InterfaceModule module_from_json(const json& j) {
  InterfaceModule m;
  m.name = string_field(j, "name", "module");
  const json& enums = array_field(j, "enums", "module");
  for (std::size_t i = 0; i < enums.size(); ++i) {
    const std::string here = "enums[" + std::to_string(i) + "]";
    ErrorEnumDecl e;
    e.name = string_field(enums[i], "name", here);
    for (const auto& c : array_field(enums[i], "cases", here)) {
      if (!c.is_string()) throw SchemaError(here + ".cases: expected strings");
      e.cases.push_back(c.get<std::string>());
    }
    m.enums.push_back(std::move(e));
  }
  const json& fns = array_field(j, "functions", "module");
  for (std::size_t i = 0; i < fns.size(); ++i) {
    const std::string here = "functions[" + std::to_string(i) + "]";
    const json& f = fns[i];
    FunctionDecl fn;
    fn.name = string_field(f, "name", here);
    const json& params = array_field(f, "params", here);
    for (std::size_t k = 0; k < params.size(); ++k) {
      const std::string where = here + ".params[" + std::to_string(k) + "]";
      fn.params.push_back(
          Param{string_field(params[k], "name", where), type_field(params[k], "type", where), {}});
    }
    fn.return_type = type_field(f, "returns", here);
    const json& throws = field(f, "throws", here);
    if (!throws.is_boolean()) throw SchemaError(here + ".throws: expected a boolean");
    fn.throws = throws.get<bool>();
    fn.body = block_from_json(field(f, "body", here), here + ".body");
    m.functions.push_back(std::move(fn));
  }
  return m;
}

}  // namespace

std::string serialize_module(const ValidatedModule& validated) {
  const InterfaceModule& m = validated.module();
  json enums = json::array();
  for (const auto& e : m.enums) enums.push_back({{"name", e.name}, {"cases", e.cases}});
  json fns = json::array();
  for (const auto& fn : m.functions) {
    json params = json::array();
    for (const auto& p : fn.params) {
      params.push_back({{"name", p.name}, {"type", std::string(to_string(p.type))}});
    }
    fns.push_back({{"name", fn.name},
                   {"params", std::move(params)},
                   {"returns", std::string(to_string(fn.return_type))},
                   {"throws", fn.throws},
                   {"body", block_to_json(fn.body)}});
  }
  json root = {{"name", m.name}, {"enums", std::move(enums)}, {"functions", std::move(fns)}};
  return root.dump(2) + "\n";
}

DeserializeResult deserialize_module(std::string_view bytes) {
  json root;
  try {
    root = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    return DeserializeError{e.byte, e.what()};
  }
  InterfaceModule module;
  try {
    module = module_from_json(root);
  } catch (const SchemaError& e) {
    return DeserializeError{0, e.what()};
  } catch (const json::exception& e) {
    return DeserializeError{0, e.what()};
  }
  auto validated = validate(std::move(module));
  if (auto* diags = std::get_if<Diagnostics>(&validated)) {
    std::string message = "module failed validation";
    for (const auto& d : *diags) {
      if (d.severity == Severity::Error) {
        message += "; " + d.code + ": " + d.message;
      }
    }
    return DeserializeError{0, message};
  }
  return std::move(std::get<ValidatedModule>(validated));
}

}  // namespace errbridge::idl
