// Copyright 2026 The qcat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "qcat/css_code.hpp"

namespace qcat {

/// Three-qubit repetition code protecting against Z errors: stabilizers
/// X0X1, X1X2; logical X is a single X, logical Z is ZZZ.
inline CssCode make_z_repetition3() {
  BitMatrix hx = BitMatrix::from_strings({"110", "011"});
  BitMatrix hz(0, 3);
  return make_css(hx, hz, {BitVector::from_string("100")},
                  {BitVector::from_string("111")});
}

}  // namespace qcat
