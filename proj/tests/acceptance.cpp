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

// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "grmin/bounds.hpp"
#include "grmin/codes.hpp"
#include "grmin/constructions.hpp"

using namespace grmin;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void run_criterion(int number, const std::string& name, double limit_seconds,
                   const std::function<void(Outcome&)>& body) {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.pass = false;
        out.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (out.pass && secs > limit_seconds) {
        out.pass = false;
        out.detail = "time limit exceeded";
    }
    std::printf("%s  criterion %2d: %s (%.2fs%s%s)\n", out.pass ? "PASS" : "FAIL", number,
                name.c_str(), secs, out.detail.empty() ? "" : "; ",
                out.detail.c_str());
    std::fflush(stdout);
    if (!out.pass) ++failures;
}

void expect(Outcome& out, bool cond, const std::string& what) {
    if (!cond && out.pass) {
        out.pass = false;
        out.detail = what;
    }
}

uint64_t upow(uint64_t b, unsigned e) {
    uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

RingVector vec_of(const RingContext& R, std::vector<uint64_t> ints) {
    RingVector v(R, ints.size());
    for (size_t i = 0; i < ints.size(); ++i) v.set(i, R.from_int(ints[i]));
    return v;
}

GeneratorMultiset random_full_rank(const RingContext& R, size_t m, size_t k,
                                   std::mt19937& rng) {
    uint64_t total = 1;
    for (size_t i = 0; i < m; ++i) total *= R.size();
    std::uniform_int_distribution<uint64_t> nz(1, total - 1);
    while (true) {
        GeneratorMultiset g(R, m);
        for (size_t i = 0; i < k; ++i) g.push_column(RingVector::from_lex_index(R, m, nz(rng)));
        if (g.rank() == m) return g;
    }
}

// minimal codes produced by criteria 4-8, re-checked against the bounds in 11
struct ProducedCode {
    const RingContext* ring;
    size_t dimension;
    uint64_t length;
    std::string label;
};
std::vector<ProducedCode> produced;

}  // namespace

int main() {
    RingContext z4(2, 2, 1);
    RingContext z8(2, 3, 1);
    RingContext z9(3, 2, 1);
    RingContext gr42(2, 2, 2, std::vector<uint64_t>{1, 1, 1});
    RingContext z25(5, 2, 1);

    run_criterion(1, "ring census over the five parameter sets", 1.0, [&](Outcome& out) {
        const RingContext* rings[] = {&z4, &z8, &z9, &gr42, &z25};
        for (const RingContext* R : rings) {
            uint64_t q = R->q();
            unsigned n = R->n();
            expect(out, R->enumerate(EnumKind::units).size() == (q - 1) * upow(q, n - 1),
                   "unit census mismatch");
            expect(out,
                   R->enumerate(EnumKind::zero_divisors).size() == upow(q, n - 1) - 1,
                   "zero-divisor census mismatch");
            for (unsigned r = 1; r + 1 <= n; ++r)
                expect(out,
                       R->enumerate(EnumKind::valuation_exactly, r).size() ==
                           (q - 1) * upow(q, n - r - 1),
                       "valuation census mismatch");
        }
    });

    run_criterion(2, "Frobenius duality on 100+ random codes", 60.0, [&](Outcome& out) {
        std::mt19937 rng(20260810);
        const RingContext* rings[] = {&z4, &z8, &z9, &gr42};
        int count = 0;
        for (const RingContext* R : rings) {
            for (int it = 0; it < 26; ++it) {
                std::uniform_int_distribution<size_t> mm(1, 2);
                size_t m = mm(rng);
                std::uniform_int_distribution<size_t> kk(m, 4);
                size_t k = kk(rng);
                if (R->size() > 9 && k > 3) k = 3;
                LinearCode code = build_code(random_full_rank(*R, m, k, rng));
                DualSummary dual = dual_bruteforce(code);
                expect(out, code.size() * dual.size == dual.ambient,
                       "size product identity failed");
                // (C^perp)^perp == C by exhaustive double-orthogonality
                std::set<uint64_t> dd;
                for (uint64_t xi = 0; xi < dual.ambient; ++xi) {
                    RingVector x = RingVector::from_lex_index(*R, k, xi);
                    bool ortho = true;
                    for (size_t r = 0; r < dual.generators.matrix.rows() && ortho; ++r)
                        ortho = inner_product_idx(*R, x.indices(),
                                                  dual.generators.matrix.row_span(r)) == 0;
                    if (ortho) dd.insert(xi);
                }
                std::set<uint64_t> codewords;
                for (uint64_t vi = 0; vi < code.size(); ++vi)
                    codewords.insert(
                        code.encode(RingVector::from_lex_index(*R, m, vi)).coords.lex_index());
                expect(out, dd == codewords, "double dual differs from the code");
                ++count;
            }
        }
        expect(out, count >= 100, "fewer than 100 random codes");
    });

    run_criterion(3, "criterion vs brute-force on 50+ random multisets", 300.0,
                  [&](Outcome& out) {
        std::mt19937 rng(4242);
        const RingContext* rings[] = {&z4, &z9};
        int multisets = 0;
        for (const RingContext* R : rings) {
            for (size_t m : {size_t(2), size_t(3)}) {
                for (int rep = 0; rep < 13; ++rep) {
                    std::uniform_int_distribution<size_t> kk(m, 8);
                    GeneratorMultiset g = random_full_rank(*R, m, kk(rng), rng);
                    LinearCode code = build_code(g);
                    ++multisets;
                    for (uint64_t vi = 1; vi < code.size(); ++vi) {
                        RingVector v = RingVector::from_lex_index(*R, m, vi);
                        bool c = is_minimal_codeword_criterion(v, g);
                        bool b = is_minimal_codeword_bruteforce(code, v);
                        if (c != b) {
                            expect(out, false,
                                   "disagreement at message " + v.to_string());
                            return;
                        }
                    }
                }
            }
        }
        expect(out, multisets >= 50, "fewer than 50 multisets");
    });

    run_criterion(4, "lambda0 reproduction: lengths and minimality", 120.0,
                  [&](Outcome& out) {
        struct Case {
            const RingContext* R;
            size_t m;
            uint64_t len;
            bool brute;
        };
        Case cases[] = {{&z4, 2, 6, true}, {&z4, 3, 15, true}, {&z9, 2, 12, true},
                        {&gr42, 2, 20, false}};
        for (const Case& c : cases) {
            GeneratorMultiset g = lambda0(*c.R, c.m);
            expect(out, g.k() == c.len, "length mismatch");
            LinearCode code = build_code(g);
            MinimalityReport rep = is_minimal_code_criterion(code, SweepScope::all_nonzero);
            expect(out, rep.verdict, "criterion verdict false");
            if (c.brute)
                expect(out, is_minimal_code_bruteforce(code).verdict,
                       "brute-force verdict false");
            produced.push_back({c.R, c.m, g.k(), "lambda0"});
        }
    });

    run_criterion(5, "exhaustive k(2) search over Z4", 600.0, [&](Outcome& out) {
        K2SearchResult below = exhaustive_k2_search(z4, 5);
        expect(out, !below.found, "found a minimal [k,2] code with k <= 5");
        K2SearchResult at6 = exhaustive_k2_search(z4, 6);
        expect(out, at6.found && at6.k == 6, "no minimal code found at k = 6");
        expect(out, at6.k == k2_exact(z4), "search result differs from q^n + q^{n-1}");
        if (at6.found) {
            LinearCode code = build_code(*at6.witness);
            expect(out,
                   is_minimal_code_criterion(code, SweepScope::root_words_only).verdict,
                   "witness fails the criterion");
            produced.push_back({&z4, 2, 6, "k2 witness"});
        }
    });

    run_criterion(6, "thm46 instance: [255,5] over Z4, full criterion sweep", 120.0,
                  [&](Outcome& out) {
        FunctionTable f = FunctionTable::canonical(FunctionFamily::thm46, z4, 4);
        expect(out, check_function_conditions(f, ConditionSet::thm46).all_pass(),
               "conditions fail");
        GeneratorMultiset g = build_function_code(f);
        expect(out, g.k() == 255 && g.m() == 5, "parameters differ from [255,5]");
        LinearCode code = build_code(g);
        MinimalityReport rep = is_minimal_code_criterion(code, SweepScope::all_nonzero);
        expect(out, rep.checked == 1023, "expected 1023 nonzero messages");
        expect(out, rep.verdict, "criterion sweep failed");
        produced.push_back({&z4, 5, g.k(), "thm46"});
    });

    run_criterion(7, "thm43 instance: [4095,4] over GR(4,2), plus the [4032,4] variant",
                  900.0, [&](Outcome& out) {
        FunctionTable f = FunctionTable::canonical(FunctionFamily::thm43, gr42, 3);
        expect(out, check_function_conditions(f, ConditionSet::thm43).all_pass(),
               "conditions fail");
        GeneratorMultiset g = build_function_code(f);
        expect(out, g.k() == 4095 && g.m() == 4, "parameters differ from [4095,4]");
        LinearCode code = build_code(g);
        MinimalityReport rep = is_minimal_code_criterion(code, SweepScope::all_nonzero);
        expect(out, rep.checked == 65535, "expected 65535 nonzero messages");
        expect(out, rep.verdict, "criterion sweep failed");
        produced.push_back({&gr42, 4, g.k(), "thm43"});

        FunctionTable fr = FunctionTable::canonical(FunctionFamily::thm43, gr42, 3,
                                                    DomainMode::root_words_only);
        GeneratorMultiset gr = build_function_code(fr);
        expect(out, gr.k() == 4032 && gr.m() == 4, "restricted parameters differ from [4032,4]");
        LinearCode coder = build_code(gr);
        MinimalityReport repr = is_minimal_code_criterion(coder, SweepScope::all_nonzero);
        expect(out, repr.verdict, "restricted criterion sweep failed");
        produced.push_back({&gr42, 4, gr.k(), "thm43 restricted"});
    });

    run_criterion(8, "polynomial instance: [4095,7] over Z4, full criterion sweep", 600.0,
                  [&](Outcome& out) {
        MonomialPoly poly = MonomialPoly::parse(z4, 6, "x1*x2*x3 + x4*x5*x6");
        FunctionTable f = FunctionTable::canonical(FunctionFamily::poly, z4, 6,
                                                   DomainMode::all_nonzero, poly);
        expect(out, check_function_conditions(f, ConditionSet::poly).all_pass(),
               "structural checks fail");
        GeneratorMultiset g = build_function_code(f);
        expect(out, g.k() == 4095 && g.m() == 7, "parameters differ from [4095,7]");
        LinearCode code = build_code(g);
        MinimalityReport rep = is_minimal_code_criterion(code, SweepScope::all_nonzero);
        expect(out, rep.checked == 16383, "expected 16383 nonzero messages");
        expect(out, rep.verdict, "criterion sweep failed");
        produced.push_back({&z4, 7, g.k(), "poly"});
    });

    run_criterion(9, "basis-construction postcondition suite", 300.0, [&](Outcome& out) {
        auto check_vector = [&](const RingContext& R, const RingVector& v) {
            if (v.is_zero()) return;
            if (v.is_root_word()) {
                RingMatrix d1 = dot_one_basis(v);
                expect(out, mccoy_rank(d1) == v.size(), "dot-one basis rank");
                for (size_t i = 0; i < d1.rows(); ++i) {
                    expect(out, inner_product(v, d1.row(i)).index() == R.one(),
                           "dot-one product");
                    expect(out, d1.row(i).weight() >= 1 && d1.row(i).weight() <= 2,
                           "dot-one weight");
                }
                RingMatrix ob = orthogonal_small_weight_basis(v);
                expect(out, row_standard_form(ob).size == orthogonal_size(v),
                       "orthogonal basis span");
                for (unsigned r = 1; r + 1 <= R.n(); ++r) {
                    RingMatrix sf = scaled_dot_family(v, r);
                    uint32_t pr = R.p_power(r);
                    for (size_t i = 0; i < sf.rows(); ++i)
                        expect(out, inner_product(v, sf.row(i)).index() == pr,
                               "scaled-family dot");
                }
            } else {
                size_t zeros = v.size() - v.weight();
                if (zeros >= 2 && R.q() <= 3) return;
                RingMatrix fw = full_weight_basis_nonroot(v);
                expect(out, mccoy_rank(fw) == v.size(), "full-weight basis rank");
                for (size_t i = 0; i < fw.rows(); ++i) {
                    expect(out, fw.row(i).weight() == v.size(), "full-weight row weight");
                    expect(out, inner_product(v, fw.row(i)).index() == v.idx(i),
                           "full-weight dot");
                    if (v.idx(i) == 0 && v.size() >= 3)
                        expect(out, fw.row(i).unit_count() >= 2, "unit count");
                }
            }
        };
        // exhaustive on the small rings
        for (const RingContext* R : {&z4, &z9}) {
            for (size_t m : {size_t(2), size_t(3)}) {
                uint64_t total = 1;
                for (size_t i = 0; i < m; ++i) total *= R->size();
                for (uint64_t vi = 1; vi < total; ++vi)
                    check_vector(*R, RingVector::from_lex_index(*R, m, vi));
            }
        }
        // all-unit bases on the q > 3 rings
        for (const RingContext* R : {&gr42, &z25}) {
            for (size_t m : {size_t(2), size_t(3), size_t(4)}) {
                RingMatrix au = all_unit_basis(*R, m);
                expect(out, mccoy_rank(au) == m, "all-unit basis rank");
                for (size_t i = 0; i < m; ++i)
                    expect(out, au.row(i).unit_count() == m, "all-unit entries");
            }
        }
        // randomized draws on the larger rings
        std::mt19937 rng(31337);
        for (const RingContext* R : {&z8, &z25, &gr42}) {
            for (size_t m : {size_t(3), size_t(4)}) {
                uint64_t total = 1;
                for (size_t i = 0; i < m; ++i) total *= R->size();
                std::uniform_int_distribution<uint64_t> nz(1, total - 1);
                for (int draw = 0; draw < 220; ++draw)
                    check_vector(*R, RingVector::from_lex_index(*R, m, nz(rng)));
            }
        }
    });

    run_criterion(10, "one-dimensional criterion agrees with brute force over Z9^3", 60.0,
                  [&](Outcome& out) {
        size_t m = 3;
        uint64_t total = 9 * 9 * 9;
        uint64_t checked = 0;
        for (uint64_t vi = 1; vi < total; ++vi) {
            RingVector v = RingVector::from_lex_index(z9, m, vi);
            bool prediction = onedim_minimal(v);
            // literal definition on the cyclic code generated by v
            bool brute = true;
            for (uint32_t a = 1; a < z9.size() && brute; ++a) {
                bool azero = true;
                for (size_t i = 0; i < m; ++i) azero &= z9.mul(a, v.idx(i)) == 0;
                if (azero) continue;
                for (uint32_t b = 1; b < z9.size() && brute; ++b) {
                    bool bzero = true, covered = true;
                    for (size_t i = 0; i < m; ++i) {
                        uint32_t bi = z9.mul(b, v.idx(i));
                        bzero &= bi == 0;
                        if (bi != 0 && z9.mul(a, v.idx(i)) == 0) covered = false;
                    }
                    if (bzero || !covered) continue;
                    bool multiple = false;
                    for (uint32_t s = 1; s < z9.size() && !multiple; ++s) {
                        bool eq = true;
                        for (size_t i = 0; i < m; ++i)
                            eq &= z9.mul(s, z9.mul(a, v.idx(i))) == z9.mul(b, v.idx(i));
                        multiple = eq;
                    }
                    brute &= multiple;
                }
            }
            if (prediction != brute) {
                expect(out, false, "disagreement at v = " + v.to_string());
                return;
            }
            ++checked;
        }
        expect(out, checked == 728, "expected 728 nonzero vectors");
        // the non-minimal one-dimensional example in R^4
        expect(out, !onedim_minimal(vec_of(z9, {1, 0, 0, 0})),
               "(1,0,0,0) misclassified as minimal");
        LinearCode c = build_code([&] {
            GeneratorMultiset g(z9, 1);
            for (uint64_t x : {uint64_t(1), uint64_t(0), uint64_t(0), uint64_t(0)})
                g.push_column(vec_of(z9, {x}));
            return g;
        }());
        expect(out, !is_minimal_code_bruteforce(c).verdict,
               "the cyclic code over Z9 should not be minimal");
    });

    run_criterion(11, "length bounds hold for every code produced above", 1.0,
                  [&](Outcome& out) {
        expect(out, produced.size() >= 7, "missing produced codes");
        for (const ProducedCode& pc : produced)
            expect(out, satisfies_length_bound(*pc.ring, pc.dimension, pc.length),
                   pc.label + " violates its length bound");
    });

    if (failures == 0) std::printf("all acceptance criteria passed\n");
    else std::printf("%d acceptance criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
