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


#include "config.hpp"
#include "support/helpers.hpp"
#include "support/process.hpp"

namespace fs = std::filesystem;
using process::cli;
using process::quote;

namespace {

std::string fixture(const char* name) {
  return quote((testing::fixture_dir() / (std::string(name) + ".eb")).string());
}

fs::path write_source(const fs::path& dir, const std::string& name, const std::string& text) {
  const fs::path p = dir / name;
  std::ofstream(p) << text;
  return p;
}

std::vector<std::string> entries(const fs::path& dir) {
  std::vector<std::string> names;
  if (!fs::exists(dir)) return names;
  for (const auto& e : fs::directory_iterator(dir)) names.push_back(e.path().filename().string());
  std::sort(names.begin(), names.end());
  return names;
}

}  // namespace

TEST_SUITE("cli check") {
  TEST_CASE("valid module") {
    auto r = cli("check " + fixture("division"));
    CHECK(r.exit_code == 0);
    CHECK(r.err.empty());
  }

  TEST_CASE("semantic error prints one diagnostic line") {
    const auto dir = process::scratch_dir("check");
    const auto src = write_source(dir, "bad.eb",
                                  "module M\nenum E : Error { case a }\nfunc f() -> Int { throw E.a }\n");
    auto r = cli("check " + quote(src.string()));
    CHECK(r.exit_code == 1);
    CHECK(process::count_lines(r.err) == 1);
    CHECK(r.err == src.string() + ":3:19: E0004: 'throw' in function 'f' which is not declared 'throws'\n");
    CHECK(r.out.empty());
  }

  TEST_CASE("lexical error") {
    const auto dir = process::scratch_dir("check");
    const auto src = write_source(dir, "lex.eb", "func f() thr@ws");
    auto r = cli("check " + quote(src.string()));
    CHECK(r.exit_code == 1);
    CHECK(r.err.find(":1:13: E0001:") != std::string::npos);
  }

  TEST_CASE("missing file is an I/O error") {
    auto r = cli("check /nonexistent/none.eb");
    CHECK(r.exit_code == 2);
  }

  TEST_CASE("usage errors") {
    CHECK(cli("").exit_code == 2);
    CHECK(cli("frobnicate x.eb").exit_code == 2);
    CHECK(cli("check").exit_code == 2);
    CHECK(cli("--help").exit_code == 0);
  }
}

TEST_SUITE("cli gen") {
  TEST_CASE("writes three files and prints the manifest") {
    const auto out = process::scratch_dir("gen");
    auto r = cli("gen " + fixture("division") + " --out " + quote(out.string()));
    REQUIRE(r.exit_code == 0);
    CHECK(entries(out) == std::vector<std::string>{"Functions.ebm", "Functions.h", "errbridge_support.h"});
    CHECK(process::count_lines(r.out) == 3);
    CHECK(r.out.find("Functions.h") != std::string::npos);
  }

  TEST_CASE("re-running produces identical bytes") {
    const auto a = process::scratch_dir("gen");
    const auto b = process::scratch_dir("gen");
    REQUIRE(cli("gen " + fixture("multi_enum") + " --out " + quote(a.string())).exit_code == 0);
    REQUIRE(cli("gen " + fixture("multi_enum") + " --out " + quote(b.string())).exit_code == 0);
    REQUIRE(cli("gen " + fixture("multi_enum") + " --out " + quote(b.string())).exit_code == 0);
    for (const auto& name : entries(a)) {
      CHECK(process::slurp(a / name) == process::slurp(b / name));
    }
    CHECK(entries(a) == entries(b));
  }

  TEST_CASE("invalid module leaves no files") {
    const auto dir = process::scratch_dir("gen");
    const auto src = write_source(dir, "bad.eb", "module Bad\nfunc f() -> Int { return true }\n");
    const auto out = dir / "out";
    auto r = cli("gen " + quote(src.string()) + " --out " + quote(out.string()));
    CHECK(r.exit_code == 1);
    CHECK(entries(out).empty());
  }

  TEST_CASE("generation error leaves no files") {
    const auto dir = process::scratch_dir("gen");
    const auto src = write_source(dir, "kw.eb", "module K\nfunc delete() -> Int { return 1 }\n");
    const auto out = dir / "out";
    auto r = cli("gen " + quote(src.string()) + " --out " + quote(out.string()));
    CHECK(r.exit_code == 1);
    CHECK(entries(out).empty());
  }

  TEST_CASE("failure part-way through leaves nothing behind") {
    const auto out = process::scratch_dir("gen");
    // The registry cannot be renamed onto a non-empty directory.
    fs::create_directories(out / "Functions.ebm" / "occupied");
    auto r = cli("gen " + fixture("division") + " --out " + quote(out.string()));
    CHECK(r.exit_code == 2);
    CHECK(entries(out) == std::vector<std::string>{"Functions.ebm"});
    CHECK(fs::is_directory(out / "Functions.ebm"));
  }

  TEST_CASE("unwritable output directory") {
    const auto dir = process::scratch_dir("gen");
    std::ofstream(dir / "file") << "x";
    auto r = cli("gen " + fixture("division") + " --out " + quote((dir / "file" / "sub").string()));
    CHECK(r.exit_code == 2);
  }

  TEST_CASE("namespace flag") {
    const auto out = process::scratch_dir("gen");
    REQUIRE(cli("gen " + fixture("division") + " --namespace Lib --out " + quote(out.string())).exit_code == 0);
    CHECK(process::slurp(out / "Functions.h").find("namespace Lib {") != std::string::npos);
  }

  TEST_CASE("config file supplies defaults and flags win") {
    const auto dir = process::scratch_dir("cfg");
    std::ofstream(dir / "errbridge.toml") << "# settings\nnamespace = \"FromConfig\"\nout = \"generated\"\n";
    REQUIRE(cli("gen " + fixture("division"), dir.string()).exit_code == 0);
    CHECK(process::slurp(dir / "generated" / "Functions.h").find("namespace FromConfig {") !=
          std::string::npos);

    REQUIRE(cli("gen " + fixture("division") + " --namespace FromFlag", dir.string()).exit_code == 0);
    CHECK(process::slurp(dir / "generated" / "Functions.h").find("namespace FromFlag {") !=
          std::string::npos);
  }

  TEST_CASE("bad config file") {
    const auto dir = process::scratch_dir("cfg");
    std::ofstream(dir / "errbridge.toml") << "colour = \"blue\"\n";
    CHECK(cli("check " + fixture("division"), dir.string()).exit_code == 2);
  }
}

TEST_SUITE("cli run") {
  TEST_CASE("division outcomes") {
    auto both = cli("run " + fixture("division") + " division 0 0");
    CHECK(both.exit_code == 0);
    CHECK(both.out == "error: DivByZero.bothAreZero\nlive_errors: 0\n");

    auto good = cli("run " + fixture("division") + " division 4 2");
    CHECK(good.exit_code == 0);
    CHECK(good.out == "value: 2\nlive_errors: 0\n");

    auto divisor = cli("run " + fixture("division") + " division 1 0");
    CHECK(divisor.exit_code == 0);
    CHECK(divisor.out == "error: DivByZero.divisorIsZero\nlive_errors: 0\n");
  }

  TEST_CASE("negative arguments and other types") {
    CHECK(cli("run " + fixture("division") + " division -9 2").out == "value: -4\nlive_errors: 0\n");
    CHECK(cli("run " + fixture("params_mixed") + " mix 10 2.5 false").out ==
          "value: 25\nlive_errors: 0\n");
    CHECK(cli("run " + fixture("zero_arity") + " failVoid").out ==
          "error: Unavailable.always\nlive_errors: 0\n");
    CHECK(cli("run " + fixture("unit_returns") + " noop").out == "value: ()\nlive_errors: 0\n");
  }

  TEST_CASE("trap exits 3") {
    auto r = cli("run " + fixture("overflow") + " increment 9223372036854775807");
    CHECK(r.exit_code == 3);
    CHECK(r.err.find("trap: integer overflow") != std::string::npos);
    CHECK(cli("run " + fixture("arithmetic") + " quotient 1 0").exit_code == 3);
  }

  TEST_CASE("bad invocation is a semantic error") {
    CHECK(cli("run " + fixture("division") + " nosuch 1 2").exit_code == 1);
    CHECK(cli("run " + fixture("division") + " division 1").exit_code == 1);
    CHECK(cli("run " + fixture("division") + " division 1 x").exit_code == 1);
    CHECK(cli("run /nonexistent.eb division 1 2").exit_code == 2);
  }
}

TEST_SUITE("cli test") {
  TEST_CASE("no compiler: compile stages skipped") {
    const auto out = process::scratch_dir("test");
    auto r = cli("test " + fixture("division") + " --out " + quote(out.string()), {},
                 "-u CXX PATH=/nonexistent");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("differential: PASS") != std::string::npos);
    CHECK(r.out.find("compile-exceptions: SKIPPED") != std::string::npos);
    CHECK(r.out.find("compile-no-exceptions: SKIPPED") != std::string::npos);
    CHECK(r.err.find("warning:") != std::string::npos);
  }

  TEST_CASE("golden directory matches") {
    const auto out = process::scratch_dir("test");
    auto r = cli("test " + fixture("division") + " --out " + quote(out.string()) + " --golden " +
                 quote((testing::golden_dir() / "division").string()));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("golden: PASS") != std::string::npos);
  }

  TEST_CASE("corrupted golden fails") {
    const auto golden = process::scratch_dir("golden");
    for (const auto& e : fs::directory_iterator(testing::golden_dir() / "division")) {
      fs::copy_file(e.path(), golden / e.path().filename());
    }
    std::ofstream(golden / "Functions.h", std::ios::app) << "// tampered\n";
    const auto out = process::scratch_dir("test");
    auto r = cli("test " + fixture("division") + " --out " + quote(out.string()) + " --golden " +
                 quote(golden.string()));
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("golden: FAIL (Functions.h differs)") != std::string::npos);
  }

  TEST_CASE("invalid module fails at check") {
    const auto dir = process::scratch_dir("test");
    const auto src = write_source(dir, "bad.eb", "module M\nfunc f() -> Int { }\n");
    auto r = cli("test " + quote(src.string()) + " --out " + quote((dir / "out").string()));
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("check: FAIL") != std::string::npos);
  }
}

TEST_SUITE("config parsing") {
  using namespace errbridge::cli;

  TEST_CASE("flat keys, strings, booleans and comments") {
    auto parsed = parse_config("# c\nnamespace = \"N\" # trailing\nline_comments = true\n\nverbose=false\n");
    REQUIRE(std::holds_alternative<ConfigValues>(parsed));
    const auto& v = std::get<ConfigValues>(parsed);
    CHECK(v.at("namespace") == "N");
    CHECK(v.at("line_comments") == "true");
    CHECK(v.at("verbose") == "false");
  }

  TEST_CASE("malformed lines report their number") {
    auto parsed = parse_config("namespace = \"N\"\njust text\n");
    REQUIRE(std::holds_alternative<ConfigError>(parsed));
    CHECK(std::get<ConfigError>(parsed).line == 2);
    CHECK(std::holds_alternative<ConfigError>(parse_config("[table]\n")));
    CHECK(std::holds_alternative<ConfigError>(parse_config("a = \"open\n")));
  }

  TEST_CASE("command line wins over the file") {
    CliConfig config;
    config.gen.namespace_name = "Flag";
    ConfigValues values{{"namespace", "File"}, {"macro_prefix", "ZZ"}, {"module_path", "/m"}};
    CHECK_FALSE(apply_config(values, {"namespace"}, config).has_value());
    CHECK(config.gen.namespace_name == "Flag");
    CHECK(config.gen.macro_prefix == "ZZ");
    CHECK(config.module_path == "/m");
  }

  TEST_CASE("unknown keys and bad booleans") {
    CliConfig config;
    CHECK(apply_config({{"nope", "1"}}, {}, config).has_value());
    CHECK(apply_config({{"line_comments", "maybe"}}, {}, config).has_value());
  }
}
