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


#include "expected/expected_model.hpp"
#include "oracles/frozen_values.hpp"
#include "support/helpers.hpp"

using errbridge::Value;
using errbridge::model::cast_model;
using errbridge::model::ContractViolation;
using errbridge::model::ExpectedModel;
using errbridge::model::OptionalModel;

namespace {

const eb_type_id kDivByZero{"Functions", "DivByZero", frozen::kDivByZeroHash};

eb_error_handle make_divisor_is_zero() {
  static const std::int64_t id = testing::register_module(testing::load_fixture("division"));
  const eb_value args[] = {eb_value_from_int(1), eb_value_from_int(0)};
  eb_error_handle h = EB_NULL_ERROR;
  REQUIRE(eb_invoke(id, 0, args, 2, &h, nullptr) == EB_STATUS_THREW);
  return h;
}

}  // namespace

TEST_SUITE("expected model") {
  TEST_CASE("value construction") {
    auto two = ExpectedModel::from_value(Value::float64(2.0));
    CHECK(two.has_value());
    CHECK(two.value() == Value::float64(2.0));

    auto unit = ExpectedModel::from_value(Value::unit());
    CHECK(unit.has_value());
    CHECK(unit.value() == Value::unit());

    auto neg = ExpectedModel::from_value(Value::int64(-7));
    CHECK(neg.value() == Value::int64(-7));
  }

  TEST_CASE("error construction adopts the reference") {
    const std::int64_t base = eb_live_errors();
    {
      auto m = ExpectedModel::from_error(make_divisor_is_zero());
      CHECK_FALSE(m.has_value());
      CHECK(eb_live_errors() == base + 1);
      CHECK(eb_error_refcount(m.error()) == 1);
      auto cast = cast_model(m.error(), kDivByZero);
      REQUIRE(cast.is_some());
      CHECK(cast.get() == Value::int64(0));
    }
    // The model owned exactly one reference.
    CHECK(eb_live_errors() == base);
  }

  TEST_CASE("null handle is a contract violation") {
    CHECK_THROWS_AS(ExpectedModel::from_error(EB_NULL_ERROR), ContractViolation);
  }

  TEST_CASE("accessors enforce exclusivity") {
    auto v = ExpectedModel::from_value(Value::float64(2.0));
    CHECK_THROWS_AS((void)v.error(), ContractViolation);
    auto e = ExpectedModel::from_error(make_divisor_is_zero());
    CHECK_THROWS_AS((void)e.value(), ContractViolation);
    CHECK_NOTHROW((void)e.error());
  }

  TEST_CASE("copy retains, move transfers, assignment releases") {
    const std::int64_t base = eb_live_errors();
    auto a = ExpectedModel::from_error(make_divisor_is_zero());
    const eb_error_handle h = a.error();
    {
      ExpectedModel b = a;
      CHECK(eb_error_refcount(h) == 2);
      ExpectedModel c = std::move(b);
      CHECK(eb_error_refcount(h) == 2);
      CHECK(b.has_value());  // moved-from holds Unit
    }
    CHECK(eb_error_refcount(h) == 1);
    a = ExpectedModel::from_value(Value::int64(1));
    CHECK(eb_live_errors() == base);
    CHECK(a.has_value());
  }

  TEST_CASE("one storage cell") {
    CHECK(ExpectedModel::slot_bytes() < sizeof(eb_value) + sizeof(eb_error_handle));
    CHECK(ExpectedModel::discriminator_bytes() == 1);
  }
}

TEST_SUITE("optional model") {
  TEST_CASE("some and none") {
    auto one = OptionalModel::some(Value::int64(1));
    CHECK(one.is_some());
    CHECK(one.get() == Value::int64(1));
    auto none = OptionalModel::none();
    CHECK_FALSE(none.is_some());
    CHECK_THROWS_AS((void)none.get(), ContractViolation);
  }

  TEST_CASE("cast to an unrelated enum is none") {
    eb_error_handle h = make_divisor_is_zero();
    const eb_type_id other{"Functions", "OtherErr", 1};
    CHECK_FALSE(cast_model(h, other).is_some());
    eb_error_release(h);
  }

  TEST_CASE("no live errors remain") { CHECK(eb_live_errors() == 0); }
}
