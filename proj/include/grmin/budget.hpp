/*
   Copyright 2026 The grmin Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <stdexcept>

namespace grmin {

struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Enumeration caps for the exhaustive paths.  GRMIN_BUDGET=<N> in the
/// environment replaces both element-count caps (code length cap stays).
struct Budget {
    uint64_t code_size_cap = uint64_t(1) << 16;  // brute-force codeword oracle: |C|
    uint64_t code_len_cap = 64;                  // brute-force codeword oracle: k
    uint64_t enum_cap = uint64_t(1) << 24;       // dual / orthogonal enumeration: q^{nk}

    static Budget from_env();
};

}  // namespace grmin
