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


// Catches the bridged error as an exception.

#include <cassert>
#include <cstdio>

#include "Functions.h"

void example() {
  try {
    auto result = Functions::division(0, 0);
    printf("result = %.1f\n", result);
  } catch (Swift::Error& e) {
    auto errorOpt = e.as<Functions::DivByZero>();
    assert(errorOpt.isSome());

    auto errorVal = errorOpt.get();
    assert(errorVal == Functions::DivByZero::bothAreZero);
    errorVal.getMessage();
  }

  try {
    float result = Functions::division(4, 2);
    printf("result = %.1f\n", result);
  } catch (Swift::Error& e) {
    auto errorOpt = e.as<Functions::DivByZero>();
    assert(errorOpt.isSome());

    auto errorVal = errorOpt.get();
    errorVal.getMessage();
  }
}

int main() {
  example();
  printf("live_errors: %lld\n", static_cast<long long>(eb_live_errors()));
  return eb_live_errors() == 0 ? 0 : 1;
}
