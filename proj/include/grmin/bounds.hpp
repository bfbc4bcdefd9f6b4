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

/**
 * @file bounds.hpp
 * @brief Length bounds for minimal codes: the closed-form lower bounds, the
 * exact two-dimensional minimum q^n + q^{n-1}, and the desk-scale exhaustive
 * search certifying it.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "grmin/codes.hpp"

namespace grmin {

/// Exact rational, reduced, positive denominator.
struct Rational {
    int64_t num = 0;
    int64_t den = 1;

    Rational() = default;
    Rational(int64_t n, int64_t d);
    Rational operator+(const Rational& o) const;
    bool operator<(const Rational& o) const;
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    /// Smallest integer k with k > this (strict) or k >= this (non-strict).
    int64_t first_admissible(bool strict) const;
    std::string to_string() const;
};

enum class BoundCase { m_ge_3, m2_n_ge3, m2_n2, m2_n1 };

struct LengthBound {
    Rational lower;       // exact value of the bound expression
    bool strict = false;  // k > lower when true, k >= lower otherwise
    BoundCase tag = BoundCase::m_ge_3;
};

/// Case-split lower bound on the length of an m-dimensional minimal code.
LengthBound length_lower_bound(const RingContext& ctx, size_t m);

bool satisfies_length_bound(const RingContext& ctx, size_t m, uint64_t k);

/// Exact minimum length of a two-dimensional minimal code: q^n + q^{n-1}.
uint64_t k2_exact(const RingContext& ctx);

struct K2SearchResult {
    bool found = false;
    size_t k = 0;  // smallest admitting length when found, else k_max
    std::optional<GeneratorMultiset> witness;
    uint64_t examined = 0;  // candidate multisets inspected
};

/// Exhaustive search over multisets of scaling-normalized root-word columns
/// in R^2, k = 2..k_max; returns the first length carrying a criterion-minimal
/// code together with the lexicographically least witness.
K2SearchResult exhaustive_k2_search(const RingContext& ctx, size_t k_max,
                                    const Budget& budget = {});

struct BoundReport {
    size_t m = 0;
    uint64_t p = 0;
    unsigned n = 0;
    unsigned ell = 0;
    LengthBound lower;
    uint64_t lambda0_length = 0;
    std::optional<uint64_t> k2;  // present when m == 2
};

BoundReport make_bound_report(const RingContext& ctx, size_t m);

}  // namespace grmin
