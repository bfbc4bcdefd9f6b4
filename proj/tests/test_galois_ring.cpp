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

#include <doctest.h>

#include <array>
#include <random>
#include <set>
#include <stdexcept>

#include "grmin/galois_ring.hpp"

using namespace grmin;

namespace {

uint64_t upow(uint64_t b, unsigned e) {
    uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

std::vector<uint32_t> sorted_indices(const std::vector<RingElement>& v) {
    std::vector<uint32_t> out;
    for (const auto& e : v) out.push_back(e.index());
    return out;
}

}  // namespace

TEST_CASE("construction and Teichmuller sets of the small rings") {
    RingContext z4(2, 2, 1);
    CHECK(z4.size() == 4);
    CHECK(sorted_indices(z4.enumerate(EnumKind::teichmuller)) == std::vector<uint32_t>{0, 1});

    RingContext z9(3, 2, 1);
    CHECK(sorted_indices(z9.enumerate(EnumKind::teichmuller)) == std::vector<uint32_t>{0, 1, 8});

    RingContext gr42(2, 2, 2, std::vector<uint64_t>{1, 1, 1});
    CHECK(gr42.size() == 16);
    CHECK(gr42.q() == 4);
    CHECK(gr42.enumerate(EnumKind::teichmuller).size() == 4);
    CHECK(gr42.descriptor() == "GR p=2 n=2 ell=2 h=1,1,1");

    // default modulus for GR(4,2) is the lift of x^2+x+1
    RingContext gr42d(2, 2, 2);
    CHECK(gr42d.modulus() == std::vector<uint64_t>{1, 1, 1});
}

TEST_CASE("construction rejects bad parameters") {
    CHECK_THROWS_AS(RingContext(4, 2, 1), std::invalid_argument);       // p not prime
    CHECK_THROWS_AS(RingContext(2, 0, 1), std::invalid_argument);       // n < 1
    CHECK_THROWS_AS(RingContext(2, 2, 2, std::vector<uint64_t>{1, 1, 2}),
                    std::invalid_argument);                              // not monic
    CHECK_THROWS_AS(RingContext(2, 2, 2, std::vector<uint64_t>{1, 0, 1}),
                    std::invalid_argument);                              // x^2+1 reducible mod 2
}

TEST_CASE("arithmetic examples") {
    RingContext z4(2, 2, 1);
    CHECK(arith(z4.from_int(3), z4.from_int(3), ArithOp::add) == z4.from_int(2));

    RingContext z9(3, 2, 1);
    CHECK(arith(z9.from_int(5), z9.from_int(2), ArithOp::mul) == z9.from_int(1));

    RingContext gr42(2, 2, 2, std::vector<uint64_t>{1, 1, 1});
    RingElement x = gr42.from_coeffs({0, 1});
    CHECK((x * x) == gr42.from_coeffs({3, 3}));

    RingContext other(2, 2, 1);
    CHECK_THROWS_AS(arith(z4.from_int(1), other.from_int(1), ArithOp::add),
                    std::invalid_argument);
}

TEST_CASE("inverses") {
    RingContext z9(3, 2, 1);
    CHECK(z9.from_int(5).inverse() == z9.from_int(2));
    CHECK(z9.from_int(1).inverse() == z9.from_int(1));
    CHECK_THROWS_AS(z9.from_int(3).inverse(), std::domain_error);

    RingContext z4(2, 2, 1);
    CHECK(z4.from_int(3).inverse() == z4.from_int(3));
}

TEST_CASE("valuation forms") {
    RingContext z8(2, 3, 1);
    ValuationForm f = z8.from_int(6).valuation();
    CHECK(f.r == 1);
    CHECK(f.unit_part == z8.from_int(3));

    ValuationForm z = z8.from_int(0).valuation();
    CHECK(z.r == 3);
    CHECK_FALSE(z.unit_part.has_value());

    RingContext z4(2, 2, 1);
    ValuationForm t = z4.from_int(2).valuation();
    CHECK(t.r == 1);
    CHECK(t.unit_part == z4.from_int(1));
}

TEST_CASE("Teichmuller decomposition") {
    RingContext z9(3, 2, 1);
    auto digits = z9.from_int(5).teichmuller_digits();
    REQUIRE(digits.size() == 2);
    CHECK(digits[0] == z9.from_int(8));
    CHECK(digits[1] == z9.from_int(8));

    RingContext z4(2, 2, 1);
    auto d3 = z4.from_int(3).teichmuller_digits();
    CHECK(d3[0] == z4.from_int(1));
    CHECK(d3[1] == z4.from_int(1));

    auto d0 = z4.from_int(0).teichmuller_digits();
    CHECK(d0[0] == z4.from_int(0));
    CHECK(d0[1] == z4.from_int(0));
}

TEST_CASE("element census matches the closed forms") {
    struct Params { uint64_t p; unsigned n, ell; };
    for (Params prm : {Params{2, 2, 1}, Params{2, 3, 1}, Params{3, 2, 1}, Params{2, 2, 2},
                       Params{5, 2, 1}}) {
        CAPTURE(prm.p);
        CAPTURE(prm.n);
        CAPTURE(prm.ell);
        RingContext R(prm.p, prm.n, prm.ell);
        uint64_t q = R.q();
        CHECK(R.enumerate(EnumKind::all).size() == upow(q, prm.n));
        CHECK(R.enumerate(EnumKind::units).size() == (q - 1) * upow(q, prm.n - 1));
        CHECK(R.enumerate(EnumKind::zero_divisors).size() == upow(q, prm.n - 1) - 1);
        for (unsigned r = 1; r + 1 <= prm.n; ++r)
            CHECK(R.enumerate(EnumKind::valuation_exactly, r).size() ==
                  (q - 1) * upow(q, prm.n - r - 1));
    }

    RingContext z4(2, 2, 1);
    CHECK(sorted_indices(z4.enumerate(EnumKind::units)) == std::vector<uint32_t>{1, 3});
    RingContext z9(3, 2, 1);
    CHECK(sorted_indices(z9.enumerate(EnumKind::valuation_exactly, 1)) ==
          std::vector<uint32_t>{3, 6});
    CHECK_THROWS_AS(z9.enumerate(EnumKind::valuation_exactly, 2), std::invalid_argument);
}

TEST_CASE("ring axioms hold exhaustively on small rings") {
    for (auto prm : std::vector<std::array<uint64_t, 3>>{
             {2, 2, 1}, {2, 3, 1}, {3, 2, 1}, {2, 2, 2}, {5, 2, 1}, {3, 2, 2}}) {
        RingContext R(prm[0], unsigned(prm[1]), unsigned(prm[2]));
        uint32_t s = R.size();
        REQUIRE(s <= 81);
        for (uint32_t a = 0; a < s; ++a) {
            CHECK(R.add(a, 0) == a);
            CHECK(R.mul(a, R.one()) == a);
            CHECK(R.add(a, R.neg(a)) == 0);
            for (uint32_t b = 0; b < s; ++b) {
                CHECK(R.add(a, b) == R.add(b, a));
                CHECK(R.mul(a, b) == R.mul(b, a));
            }
        }
        // associativity and distributivity on all triples
        for (uint32_t a = 0; a < s; ++a)
            for (uint32_t b = 0; b < s; ++b)
                for (uint32_t c = 0; c < s; ++c) {
                    CHECK(R.add(R.add(a, b), c) == R.add(a, R.add(b, c)));
                    CHECK(R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c)));
                    CHECK(R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c)));
                }
    }
}

TEST_CASE("ring axioms hold on random triples of a larger ring") {
    RingContext R(2, 2, 4);  // 256 elements, above the exhaustive tier
    std::mt19937 rng(7);
    std::uniform_int_distribution<uint32_t> dist(0, R.size() - 1);
    for (int it = 0; it < 2000; ++it) {
        uint32_t a = dist(rng), b = dist(rng), c = dist(rng);
        CHECK(R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c)));
        CHECK(R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c)));
        CHECK(R.add(a, b) == R.add(b, a));
    }
}

TEST_CASE("Teichmuller properties") {
    for (auto prm : std::vector<std::array<uint64_t, 3>>{{2, 2, 2}, {3, 2, 1}, {2, 3, 1},
                                                          {3, 2, 2}, {2, 2, 4}}) {
        RingContext R(prm[0], unsigned(prm[1]), unsigned(prm[2]));
        auto teich = R.enumerate(EnumKind::teichmuller);
        REQUIRE(teich.size() == R.q());
        std::set<uint32_t> residues;
        for (const auto& t : teich) {
            // t^q == t
            uint32_t tq = t.index();
            for (uint64_t e = 1; e < R.q(); ++e) tq = R.mul(tq, t.index());
            CHECK(tq == t.index());
            auto c = t.coeffs();
            for (auto& x : c) x %= R.p();
            residues.insert(R.encode(c));
        }
        CHECK(residues.size() == R.q());  // pairwise distinct mod p
        // closure of T \ {0} under multiplication
        std::set<uint32_t> nonzero;
        for (const auto& t : teich)
            if (!t.is_zero()) nonzero.insert(t.index());
        for (uint32_t a : nonzero)
            for (uint32_t b : nonzero) CHECK(nonzero.count(R.mul(a, b)) == 1);
    }
}

TEST_CASE("decompose-recompose is the identity (exhaustive to 256)") {
    for (auto prm : std::vector<std::array<uint64_t, 3>>{{2, 2, 1}, {3, 2, 1}, {2, 2, 2},
                                                          {2, 3, 1}, {5, 2, 1}, {2, 2, 4}}) {
        RingContext R(prm[0], unsigned(prm[1]), unsigned(prm[2]));
        REQUIRE(R.size() <= 256);
        for (uint32_t a = 0; a < R.size(); ++a) {
            auto digits = R.element(a).teichmuller_digits();
            uint32_t acc = 0;
            for (unsigned i = 0; i < R.n(); ++i)
                acc = R.add(acc, R.mul(R.p_power(i), digits[i].index()));
            CHECK(acc == a);
        }
    }
}

TEST_CASE("units are exactly the elements invertible and nonzero mod p") {
    for (auto prm : std::vector<std::array<uint64_t, 3>>{{2, 2, 1}, {3, 2, 1}, {2, 2, 2},
                                                          {2, 3, 1}, {5, 2, 1}}) {
        RingContext R(prm[0], unsigned(prm[1]), unsigned(prm[2]));
        for (uint32_t a = 0; a < R.size(); ++a) {
            auto c = R.decode(a);
            bool nonzero_mod_p = false;
            for (auto x : c) nonzero_mod_p |= (x % R.p()) != 0;
            CHECK(R.is_unit(a) == nonzero_mod_p);
            if (R.is_unit(a)) {
                CHECK(R.mul(a, R.inv(a)) == R.one());
            } else {
                CHECK_THROWS_AS((void)R.inv(a), std::domain_error);
            }
        }
    }
}

TEST_CASE("valuation is multiplicative with the min-n convention") {
    for (auto prm : std::vector<std::array<uint64_t, 3>>{{2, 2, 1}, {2, 3, 1}, {3, 2, 1},
                                                          {2, 2, 2}}) {
        RingContext R(prm[0], unsigned(prm[1]), unsigned(prm[2]));
        for (uint32_t a = 0; a < R.size(); ++a)
            for (uint32_t b = 0; b < R.size(); ++b)
                CHECK(R.val(R.mul(a, b)) == std::min(unsigned(R.val(a) + R.val(b)), R.n()));
    }
}

TEST_CASE("the ideal chain: valuation >= r is exactly p^r times the ring") {
    for (auto prm : std::vector<std::array<uint64_t, 3>>{{2, 3, 1}, {3, 2, 1}, {2, 2, 2}}) {
        RingContext R(prm[0], unsigned(prm[1]), unsigned(prm[2]));
        for (unsigned r = 0; r <= R.n(); ++r) {
            std::set<uint32_t> by_val, by_mult;
            for (uint32_t a = 0; a < R.size(); ++a) {
                if (R.val(a) >= r) by_val.insert(a);
                by_mult.insert(R.mul(R.p_power(r), a));
            }
            CHECK(by_val == by_mult);
            uint64_t expected = r >= R.n() ? 1 : upow(R.q(), R.n() - r);
            CHECK(by_val.size() == expected);
        }
    }
}

TEST_CASE("descriptor round-trip") {
    RingContext gr(2, 2, 2, std::vector<uint64_t>{1, 1, 1});
    RingContext back = RingContext::parse_descriptor(gr.descriptor());
    CHECK(back.p() == 2);
    CHECK(back.n() == 2);
    CHECK(back.ell() == 2);
    CHECK(back.modulus() == gr.modulus());

    RingContext z9(3, 2, 1);
    CHECK(z9.descriptor() == "GR p=3 n=2 ell=1");
    CHECK(RingContext::parse_descriptor(z9.descriptor()).size() == 9);
}
