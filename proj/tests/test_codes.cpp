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

#include <random>
#include <set>
#include <stdexcept>

#include "grmin/codes.hpp"
#include "grmin/constructions.hpp"

using namespace grmin;

namespace {

RingVector vec(const RingContext& R, std::vector<uint64_t> ints) {
    RingVector v(R, ints.size());
    for (size_t i = 0; i < ints.size(); ++i) v.set(i, R.from_int(ints[i]));
    return v;
}

GeneratorMultiset gens_of(const RingContext& R, std::vector<std::vector<uint64_t>> cols) {
    GeneratorMultiset g(R, cols.at(0).size());
    for (auto& c : cols) g.push_column(vec(R, c));
    return g;
}

GeneratorMultiset random_full_rank_multiset(const RingContext& R, size_t m, size_t k,
                                            std::mt19937& rng) {
    uint64_t total = 1;
    for (size_t i = 0; i < m; ++i) total *= R.size();
    std::uniform_int_distribution<uint64_t> nz(1, total - 1);
    while (true) {
        GeneratorMultiset g(R, m);
        for (size_t i = 0; i < k; ++i)
            g.push_column(RingVector::from_lex_index(R, m, nz(rng)));
        if (g.rank() == m) return g;
    }
}

}  // namespace

TEST_CASE("build_code validates rank and size") {
    RingContext z4(2, 2, 1);
    LinearCode full = build_code(gens_of(z4, {{1, 0}, {0, 1}}));
    CHECK(full.size() == 16);
    CHECK(full.k() == 2);

    LinearCode l0 = build_code(lambda0(z4, 2));
    CHECK(l0.k() == 6);
    CHECK(l0.size() == 16);

    CHECK_THROWS_AS(build_code(gens_of(z4, {{2, 0}, {0, 2}})), std::invalid_argument);
    CHECK_THROWS_AS(build_code(gens_of(z4, {{1, 0}})), std::invalid_argument);  // k < m
}

TEST_CASE("covering") {
    RingContext z4(2, 2, 1);
    LinearCode code = build_code(gens_of(z4, {{1, 0}, {0, 1}, {1, 1}}));
    Codeword a = code.encode(vec(z4, {1, 2}));   // (1, 2, 3)
    Codeword b = code.encode(vec(z4, {2, 0}));   // (2, 0, 2)
    CHECK(covers(a, b));
    CHECK_FALSE(covers(b, a));
    Codeword zero = code.encode(vec(z4, {0, 0}));
    CHECK(covers(a, zero));
    CHECK(covers(zero, zero));
}

TEST_CASE("brute-force codeword minimality: the one-dimensional shapes") {
    RingContext z9(3, 2, 1);
    // <(1,0,0,0)>: the codeword from message 3 covers the one from message 1
    // without being a scalar multiple of anything reaching it
    LinearCode c1 = build_code(gens_of(z9, {{1}, {0}, {0}, {0}}));
    CHECK_FALSE(is_minimal_codeword_bruteforce(c1, vec(z9, {3})));
    CHECK(is_minimal_codeword_bruteforce(c1, vec(z9, {1})));

    LinearCode c2 = build_code(gens_of(z9, {{1}, {3}}));
    CHECK(is_minimal_codeword_bruteforce(c2, vec(z9, {1})));
    MinimalityReport rep = is_minimal_code_bruteforce(c2);
    CHECK(rep.verdict);
    CHECK(rep.checked == 8);

    LinearCode c3 = build_code(gens_of(z9, {{1}, {1}}));
    MinimalityReport rep3 = is_minimal_code_bruteforce(c3);
    CHECK_FALSE(rep3.verdict);
    REQUIRE(!rep3.witnesses.empty());
    CHECK(rep3.witnesses[0].message == vec(z9, {3}));

    RingContext z4(2, 2, 1);
    LinearCode l0 = build_code(lambda0(z4, 2));
    CHECK(is_minimal_codeword_bruteforce(l0, vec(z4, {1, 0})));
    CHECK(is_minimal_code_bruteforce(l0).verdict);
}

TEST_CASE("budget guards") {
    RingContext z4(2, 2, 1);
    LinearCode code = build_code(gens_of(z4, {{1, 0}, {0, 1}}));
    Budget tiny;
    tiny.code_size_cap = 4;
    CHECK_THROWS_AS(is_minimal_code_bruteforce(code, tiny), budget_error);
    Budget tiny2;
    tiny2.enum_cap = 4;
    CHECK_THROWS_AS(dual_bruteforce(code, tiny2), budget_error);
}

TEST_CASE("orthogonal data behind the criterion") {
    RingContext z4(2, 2, 1);
    GeneratorMultiset l0 = lambda0(z4, 2);

    OrthogonalCheck oc = minimality_data(vec(z4, {1, 2}), l0);
    CHECK(oc.orthogonal_size == 4);
    CHECK(oc.annihilated_span.size == 4);

    OrthogonalCheck trivial = minimality_data(vec(z4, {1, 0}), gens_of(z4, {{1, 0}}));
    CHECK(trivial.orthogonal_size == 4);
    CHECK(trivial.annihilated_span.size == 1);

    OrthogonalCheck zd = minimality_data(vec(z4, {2, 2}), l0);
    CHECK(zd.orthogonal_size == 8);
    CHECK(zd.annihilated_span.size == 8);
}

TEST_CASE("criterion examples") {
    RingContext z4(2, 2, 1);
    CHECK(is_minimal_codeword_criterion(vec(z4, {1, 2}), lambda0(z4, 2)));
    CHECK_FALSE(is_minimal_codeword_criterion(vec(z4, {1, 1}),
                                              gens_of(z4, {{1, 0}, {0, 1}})));
    RingContext z9(3, 2, 1);
    CHECK(is_minimal_codeword_criterion(vec(z9, {1, 1}),
                                        gens_of(z9, {{1, 0}, {0, 1}, {1, 8}})));
}

TEST_CASE("criterion sweeps") {
    RingContext z4(2, 2, 1);
    LinearCode l03 = build_code(lambda0(z4, 3));
    MinimalityReport rep = is_minimal_code_criterion(l03, SweepScope::root_words_only);
    CHECK(rep.verdict);
    CHECK(rep.checked == 56);  // q^{nm} - q^{m(n-1)} = 64 - 8

    LinearCode plain = build_code(gens_of(z4, {{1, 0}, {0, 1}}));
    MinimalityReport bad = is_minimal_code_criterion(plain, SweepScope::all_nonzero);
    CHECK_FALSE(bad.verdict);
    REQUIRE(!bad.witnesses.empty());
    CHECK(bad.witnesses[0].message == vec(z4, {0, 2}));  // lexicographically least failure
    bool has11 = false;
    for (const auto& w : bad.witnesses) has11 |= (w.message == vec(z4, {1, 1}));
    CHECK(has11);

    RingContext z9(3, 2, 1);
    LinearCode l09 = build_code(lambda0(z9, 2));
    CHECK(is_minimal_code_criterion(l09, SweepScope::all_nonzero).verdict);
    CHECK(is_minimal_code_bruteforce(l09).verdict);

    CHECK_THROWS_AS(
        is_minimal_code_criterion(build_code(gens_of(z9, {{1}, {3}})),
                                  SweepScope::root_words_only),
        std::invalid_argument);
}

TEST_CASE("criterion sweep is thread-count independent") {
    RingContext z9(3, 2, 1);
    LinearCode code = build_code(gens_of(z9, {{1, 0}, {0, 1}, {1, 1}, {1, 3}}));
    MinimalityReport one = is_minimal_code_criterion(code, SweepScope::all_nonzero, 1);
    MinimalityReport four = is_minimal_code_criterion(code, SweepScope::all_nonzero, 4);
    CHECK(one.verdict == four.verdict);
    CHECK(one.checked == four.checked);
    REQUIRE(one.witnesses.size() == four.witnesses.size());
    for (size_t i = 0; i < one.witnesses.size(); ++i)
        CHECK(one.witnesses[i].message == four.witnesses[i].message);
}

TEST_CASE("oracle equivalence on random multisets") {
    std::mt19937 rng(2026);
    int multisets = 0;
    for (const char* d : {"GR p=2 n=2 ell=1", "GR p=3 n=2 ell=1"}) {
        RingContext R = RingContext::parse_descriptor(d);
        for (size_t m : {size_t(2), size_t(3)}) {
            for (int rep = 0; rep < 13; ++rep) {
                std::uniform_int_distribution<size_t> klen(m, 8);
                GeneratorMultiset g = random_full_rank_multiset(R, m, klen(rng), rng);
                LinearCode code = build_code(g);
                ++multisets;
                uint64_t total = code.size();
                bool all_c = true, all_b = true;
                for (uint64_t vi = 1; vi < total; ++vi) {
                    RingVector v = RingVector::from_lex_index(R, m, vi);
                    bool c = is_minimal_codeword_criterion(v, g);
                    bool b = is_minimal_codeword_bruteforce(code, v);
                    CHECK(c == b);
                    all_c &= c;
                    all_b &= b;
                }
                // full-code verdicts agree too, and the root-word reduction
                // matches the all-vector sweep for m >= 2
                MinimalityReport rc = is_minimal_code_criterion(code, SweepScope::all_nonzero);
                MinimalityReport rb = is_minimal_code_bruteforce(code);
                CHECK(rc.verdict == all_c);
                CHECK(rb.verdict == all_b);
                MinimalityReport rroot =
                    is_minimal_code_criterion(code, SweepScope::root_words_only);
                CHECK(rroot.verdict == rc.verdict);
            }
        }
    }
    CHECK(multisets >= 50);
}

TEST_CASE("oracle equivalence extends to the n = 3 and ell = 2 rings") {
    std::mt19937 rng(1851);
    for (const char* d : {"GR p=2 n=3 ell=1", "GR p=2 n=2 ell=2 h=1,1,1"}) {
        RingContext R = RingContext::parse_descriptor(d);
        for (int rep = 0; rep < 8; ++rep) {
            std::uniform_int_distribution<size_t> kk(2, 6);
            GeneratorMultiset g = random_full_rank_multiset(R, 2, kk(rng), rng);
            LinearCode code = build_code(g);
            for (uint64_t vi = 1; vi < code.size(); ++vi) {
                RingVector v = RingVector::from_lex_index(R, 2, vi);
                CHECK(is_minimal_codeword_criterion(v, g) ==
                      is_minimal_codeword_bruteforce(code, v));
            }
        }
    }
}

TEST_CASE("thread counts agree on a full-scale sweep") {
    RingContext z4(2, 2, 1);
    FunctionTable f = FunctionTable::canonical(FunctionFamily::thm46, z4, 4);
    LinearCode code = build_code(build_function_code(f));
    MinimalityReport r1 = is_minimal_code_criterion(code, SweepScope::all_nonzero, 1);
    MinimalityReport r4 = is_minimal_code_criterion(code, SweepScope::all_nonzero, 4);
    CHECK(r1.verdict == r4.verdict);
    CHECK(r1.checked == r4.checked);
    CHECK(r1.checked == 1023);
}

TEST_CASE("malformed GRCODE inputs are rejected") {
    CHECK_THROWS(grcode_read(""));
    CHECK_THROWS(grcode_read("GRCODE 1\n"));
    CHECK_THROWS(grcode_read("GRCODE 1\nGR p=2 n=2 ell=1\n"));
    CHECK_THROWS(grcode_read("GRCODE 1\nGR p=2 n=2 ell=1\nm=2 k=1\ncol: 1\n"));
    CHECK_THROWS(grcode_read("GRCODE 1\nGR p=2 n=2 ell=1\nm=2 k=1\ncol: 5|0\n"));  // coeff range
    CHECK_THROWS(grcode_read("GRCODE 1\nGR p=2 n=2 ell=1\nm=2 k=2\ncol: 1|0\n"));  // truncated
    CHECK_THROWS(grcode_read("GRCODE 1\nGR p=6 n=2 ell=1\nm=2 k=1\ncol: 1|0\n"));  // p not prime
    CHECK_THROWS(grcode_read("GRCODE 1\nGR p=2 n=2 ell=1\nm=0 k=0\n"));
}

TEST_CASE("onedim minimality") {
    RingContext z9(3, 2, 1);
    CHECK_FALSE(onedim_minimal(vec(z9, {1, 0, 0, 0})));
    CHECK(onedim_minimal(vec(z9, {1, 3})));
    RingContext z4(2, 2, 1);
    CHECK(onedim_minimal(vec(z4, {1, 2})));
    CHECK_FALSE(onedim_minimal(vec(z4, {1, 1})));
}

TEST_CASE("onedim criterion matches brute force exhaustively over Z9^3") {
    RingContext z9(3, 2, 1);
    size_t m = 3;
    uint64_t total = 9 * 9 * 9;
    for (uint64_t vi = 1; vi < total; ++vi) {
        RingVector v = RingVector::from_lex_index(z9, m, vi);
        GeneratorMultiset g(z9, 1);
        for (size_t i = 0; i < m; ++i) {
            RingVector col(z9, 1);
            col.set_idx(0, v.idx(i));
            g.push_column(col);
        }
        bool brute;
        if (g.rank() == 1) {
            brute = is_minimal_code_bruteforce(build_code(g)).verdict;
        } else {
            // no unit coordinate: encode by hand and apply the definition
            brute = true;
            for (uint32_t a = 1; a < z9.size() && brute; ++a) {
                RingVector ca(z9, m);
                bool zero = true;
                for (size_t i = 0; i < m; ++i) {
                    ca.set_idx(i, z9.mul(a, v.idx(i)));
                    zero &= ca.idx(i) == 0;
                }
                if (zero) continue;
                for (uint32_t b = 1; b < z9.size() && brute; ++b) {
                    RingVector cb(z9, m);
                    bool bzero = true, covered = true, multiple = false;
                    for (size_t i = 0; i < m; ++i) {
                        cb.set_idx(i, z9.mul(b, v.idx(i)));
                        bzero &= cb.idx(i) == 0;
                        if (cb.idx(i) != 0 && ca.idx(i) == 0) covered = false;
                    }
                    if (bzero || !covered) continue;
                    for (uint32_t s = 1; s < z9.size() && !multiple; ++s) {
                        bool eq = true;
                        for (size_t i = 0; i < m; ++i)
                            eq &= z9.mul(s, ca.idx(i)) == cb.idx(i);
                        multiple = eq;
                    }
                    brute &= multiple;
                }
            }
        }
        CHECK(onedim_minimal(v) == brute);
    }
}

TEST_CASE("purification") {
    RingContext z4(2, 2, 1);
    GeneratorMultiset l0 = lambda0(z4, 2);
    GeneratorMultiset extended = l0;
    extended.push_column(vec(z4, {2, 2}));
    GeneratorMultiset purified = purify(extended);
    CHECK(purified == l0);
    CHECK(purify(l0) == l0);
    CHECK_THROWS_AS(purify(gens_of(z4, {{2, 0}, {0, 2}, {1, 1}})), std::invalid_argument);

    // adding zero-divisor columns to a minimal code and purifying keeps it minimal
    GeneratorMultiset polluted = lambda0(z4, 3);
    polluted.push_column(vec(z4, {2, 0, 2}));
    polluted.push_column(vec(z4, {0, 2, 0}));
    GeneratorMultiset clean = purify(polluted);
    CHECK(is_minimal_code_criterion(build_code(clean), SweepScope::root_words_only).verdict);
}

TEST_CASE("dual enumeration and Frobenius identities") {
    RingContext z4(2, 2, 1);
    LinearCode c1 = build_code(gens_of(z4, {{1}, {0}}));  // <(1,0)> as a length-2 code
    DualSummary d1 = dual_bruteforce(c1);
    CHECK(d1.size == 4);
    CHECK(c1.size() * d1.size == d1.ambient);

    LinearCode full = build_code(gens_of(z4, {{1, 0}, {0, 1}}));
    CHECK(dual_bruteforce(full).size == 1);

    RingContext z9(3, 2, 1);
    LinearCode c9 = build_code(gens_of(z9, {{1}, {1}}));
    CHECK(dual_bruteforce(c9).size == 9);
}

TEST_CASE("Frobenius duality on random small codes") {
    std::mt19937 rng(99);
    int count = 0;
    for (const char* d : {"GR p=2 n=2 ell=1", "GR p=2 n=3 ell=1", "GR p=3 n=2 ell=1",
                          "GR p=2 n=2 ell=2 h=1,1,1"}) {
        RingContext R = RingContext::parse_descriptor(d);
        for (int it = 0; it < 26; ++it) {
            std::uniform_int_distribution<size_t> mm(1, 2);
            size_t m = mm(rng);
            std::uniform_int_distribution<size_t> kk(m, 4);
            size_t k = kk(rng);
            if (R.size() > 9 && k > 3) k = 3;  // keep q^{nk} enumerable in the budget
            GeneratorMultiset g = random_full_rank_multiset(R, m, k, rng);
            LinearCode code = build_code(g);
            DualSummary dual = dual_bruteforce(code);
            CHECK(code.size() * dual.size == dual.ambient);
            // (C^perp)^perp = C: enumerate everything orthogonal to the dual
            // generators and compare against the encoded codewords
            std::set<uint64_t> double_dual;
            for (uint64_t xi = 0; xi < dual.ambient; ++xi) {
                RingVector x = RingVector::from_lex_index(R, k, xi);
                bool ortho = true;
                for (size_t r = 0; r < dual.generators.matrix.rows() && ortho; ++r)
                    ortho = inner_product_idx(R, x.indices(),
                                              dual.generators.matrix.row_span(r)) == 0;
                if (ortho) double_dual.insert(xi);
            }
            std::set<uint64_t> codewords;
            for (uint64_t vi = 0; vi < code.size(); ++vi)
                codewords.insert(
                    code.encode(RingVector::from_lex_index(R, m, vi)).coords.lex_index());
            CHECK(double_dual == codewords);
            ++count;
        }
    }
    CHECK(count >= 100);
}

TEST_CASE("GRCODE round trip is byte exact") {
    RingContext gr(2, 2, 2, std::vector<uint64_t>{1, 1, 1});
    GeneratorMultiset gens = lambda0(gr, 2);
    std::string text = grcode_write(gens);
    GrcodeFile file = grcode_read(text);
    CHECK(file.code.m() == 2);
    CHECK(file.code.k() == 20);
    CHECK(grcode_write(file.code) == text);

    RingContext z4(2, 2, 1);
    std::string t2 = grcode_write(lambda0(z4, 2));
    CHECK(t2.rfind("GRCODE 1\nGR p=2 n=2 ell=1\nm=2 k=6\n", 0) == 0);
    CHECK(grcode_write(grcode_read(t2).code) == t2);

    CHECK_THROWS_AS(grcode_read("GRCODE 2\n"), std::runtime_error);
    CHECK_THROWS_AS(grcode_read(t2 + "junk\n"), std::runtime_error);
}
