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

#include "grmin/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace grmin {

namespace {

int64_t ipow_checked(int64_t base, unsigned e) {
    int64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (r > INT64_MAX / base) throw std::overflow_error("bound arithmetic overflow");
        r *= base;
    }
    return r;
}

uint64_t upow(uint64_t base, unsigned e) {
    uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

Rational::Rational(int64_t n, int64_t d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) { num = -num; den = -den; }
    int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
}

bool Rational::operator<(const Rational& o) const {
    return num * o.den < o.num * den;
}

int64_t Rational::first_admissible(bool strict) const {
    // smallest integer k with k > num/den (strict) or k >= num/den
    int64_t q = num / den;
    int64_t r = num % den;
    if (r < 0) { q -= 1; r += den; }  // floor division
    if (strict) return q + 1;
    return r == 0 ? q : q + 1;
}

std::string Rational::to_string() const {
    std::ostringstream os;
    os << num;
    if (den != 1) os << '/' << den;
    return os.str();
}

LengthBound length_lower_bound(const RingContext& ctx, size_t m) {
    if (m < 2) throw std::invalid_argument("length bound defined for m >= 2");
    int64_t q = int64_t(ctx.q());
    unsigned n = ctx.n();
    LengthBound b;
    if (m >= 3) {
        b.tag = BoundCase::m_ge_3;
        b.strict = true;
        // (m-1) q^n + q^{n-m}, the last term possibly fractional
        Rational head(int64_t(m - 1) * ipow_checked(q, n), 1);
        Rational tail = (m > n) ? Rational(1, ipow_checked(q, unsigned(m) - n))
                                : Rational(ipow_checked(q, n - unsigned(m)), 1);
        b.lower = head + tail;
    } else if (n >= 3) {
        b.tag = BoundCase::m2_n_ge3;
        b.strict = true;
        b.lower = Rational(ipow_checked(q, n) + ipow_checked(q, n - 2) + 1, 1);
    } else if (n == 2) {
        b.tag = BoundCase::m2_n2;
        b.strict = false;
        b.lower = Rational(q * q + 2, 1);
    } else {
        b.tag = BoundCase::m2_n1;
        b.strict = false;
        b.lower = Rational(q + 1, 1);
    }
    return b;
}

bool satisfies_length_bound(const RingContext& ctx, size_t m, uint64_t k) {
    LengthBound b = length_lower_bound(ctx, m);
    return int64_t(k) >= b.lower.first_admissible(b.strict);
}

uint64_t k2_exact(const RingContext& ctx) {
    return upow(ctx.q(), ctx.n()) + upow(ctx.q(), ctx.n() - 1);
}

namespace {

// Scaling-normalized root-word columns of R^2: (1, y) for every y plus (d, 1)
// for d running over <p>.  Covers every root word up to unit scaling; sorted
// so that multiset enumeration is lexicographic on the column sequence.
std::vector<RingVector> normalized_column_types(const RingContext& ctx) {
    std::vector<RingVector> types;
    for (uint32_t y = 0; y < ctx.size(); ++y) {
        RingVector c(ctx, 2);
        c.set_idx(0, ctx.one());
        c.set_idx(1, y);
        types.push_back(std::move(c));
    }
    for (uint32_t d = 0; d < ctx.size(); ++d) {
        if (ctx.is_unit(d)) continue;
        RingVector c(ctx, 2);
        c.set_idx(0, d);
        c.set_idx(1, ctx.one());
        types.push_back(std::move(c));
    }
    std::sort(types.begin(), types.end());
    return types;
}

bool multiset_minimal(const RingContext& ctx, const std::vector<RingVector>& types,
                      const std::vector<size_t>& pick) {
    GeneratorMultiset gens(ctx, 2);
    for (size_t t : pick) gens.push_column(types[t]);
    if (gens.rank() != 2) return false;
    // criterion over the root words of R^2, aborting on the first failure
    for (uint32_t a = 0; a < ctx.size(); ++a) {
        for (uint32_t b = 0; b < ctx.size(); ++b) {
            if (!ctx.is_unit(a) && !ctx.is_unit(b)) continue;
            RingVector v(ctx, {a, b});
            if (!is_minimal_codeword_criterion(v, gens)) return false;
        }
    }
    return true;
}

}  // namespace

K2SearchResult exhaustive_k2_search(const RingContext& ctx, size_t k_max, const Budget& budget) {
    K2SearchResult res;
    std::vector<RingVector> types = normalized_column_types(ctx);
    std::vector<size_t> pick;

    // non-decreasing index tuples == multisets, visited in lexicographic order
    for (size_t k = 2; k <= k_max; ++k) {
        pick.assign(k, 0);
        bool done = false;
        while (!done) {
            if (++res.examined > budget.enum_cap)
                throw budget_error("k2 search budget exceeded");
            if (multiset_minimal(ctx, types, pick)) {
                GeneratorMultiset gens(ctx, 2);
                for (size_t t : pick) gens.push_column(types[t]);
                res.found = true;
                res.k = k;
                res.witness = std::move(gens);
                return res;
            }
            // next non-decreasing tuple
            size_t i = k;
            while (i-- > 0) {
                if (pick[i] + 1 < types.size()) {
                    ++pick[i];
                    for (size_t j = i + 1; j < k; ++j) pick[j] = pick[i];
                    break;
                }
                if (i == 0) done = true;
            }
        }
    }
    res.k = k_max;
    return res;
}

BoundReport make_bound_report(const RingContext& ctx, size_t m) {
    BoundReport rep;
    rep.m = m;
    rep.p = ctx.p();
    rep.n = ctx.n();
    rep.ell = ctx.ell();
    rep.lower = length_lower_bound(ctx, m);
    rep.lambda0_length =
        uint64_t(m) * (m - 1) / 2 * (upow(ctx.q(), ctx.n()) + upow(ctx.q(), ctx.n() - 1) - 2) +
        m;
    if (m == 2) rep.k2 = k2_exact(ctx);
    return rep;
}

}  // namespace grmin
