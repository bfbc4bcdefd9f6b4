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

#include "grmin/codes.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <thread>
#include <unordered_set>

namespace grmin {

Budget Budget::from_env() {
    Budget b;
    if (const char* e = std::getenv("GRMIN_BUDGET")) {
        uint64_t v = std::strtoull(e, nullptr, 10);
        if (v > 0) {
            b.code_size_cap = v;
            b.enum_cap = v;
        }
    }
    return b;
}

// ---- GeneratorMultiset -------------------------------------------------------

void GeneratorMultiset::push_column(const RingVector& col) {
    if (col.size() != m_ || &col.context() != ctx_)
        throw std::invalid_argument("column shape or context mismatch");
    cols_.insert(cols_.end(), col.indices().begin(), col.indices().end());
}

RingVector GeneratorMultiset::column(size_t i) const {
    auto s = column_span(i);
    return RingVector(*ctx_, std::vector<uint32_t>(s.begin(), s.end()));
}

RingMatrix GeneratorMultiset::generator_matrix() const {
    RingMatrix g(*ctx_, m_, k());
    for (size_t i = 0; i < k(); ++i) {
        auto s = column_span(i);
        for (size_t r = 0; r < m_; ++r) g.set_idx(r, i, s[r]);
    }
    return g;
}

// ---- LinearCode --------------------------------------------------------------

namespace {

uint64_t pow_u64(uint64_t base, unsigned e) {
    uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (base != 0 && r > UINT64_MAX / base) throw std::overflow_error("size overflow");
        r *= base;
    }
    return r;
}

}  // namespace

LinearCode::LinearCode(GeneratorMultiset gens) : gens_(std::move(gens)) {
    if (gens_.k() < gens_.m())
        throw std::invalid_argument("need at least m generator columns");
    // rank via column insertion (cheap for long codes)
    SpanBuilder sb(gens_.context(), gens_.m());
    for (size_t i = 0; i < gens_.k() && sb.residue_rank() < gens_.m(); ++i)
        sb.insert(gens_.column_span(i));
    if (sb.residue_rank() != gens_.m())
        throw std::invalid_argument("generator multiset does not span dimension m");
    size_ = pow_u64(gens_.context().q(), gens_.context().n() * unsigned(gens_.m()));
}

LinearCode build_code(GeneratorMultiset gens) { return LinearCode(std::move(gens)); }

Codeword LinearCode::encode(const RingVector& message) const {
    if (message.size() != m() || &message.context() != &context())
        throw std::invalid_argument("message shape or context mismatch");
    RingVector coords(context(), k());
    for (size_t i = 0; i < k(); ++i)
        coords.set_idx(i, inner_product_idx(context(), message.indices(), gens_.column_span(i)));
    return Codeword{message, coords};
}

bool covers(const Codeword& a, const Codeword& b) {
    if (a.coords.size() != b.coords.size())
        throw std::invalid_argument("codewords from different codes");
    for (size_t i = 0; i < b.coords.size(); ++i)
        if (b.coords.idx(i) != 0 && a.coords.idx(i) == 0) return false;
    return true;
}

// ---- brute-force oracle -------------------------------------------------------

namespace {

void check_bruteforce_budget(const LinearCode& code, const Budget& budget) {
    if (code.size() > budget.code_size_cap || code.k() > budget.code_len_cap)
        throw budget_error("code exceeds brute-force oracle budget");
}

}  // namespace

bool is_minimal_codeword_bruteforce(const LinearCode& code, const RingVector& message,
                                    const Budget& budget) {
    if (message.is_zero()) throw std::invalid_argument("zero codeword is not checked");
    check_bruteforce_budget(code, budget);
    const RingContext& R = code.context();
    Codeword c = code.encode(message);

    // all distinct scalar multiples a * c(message), a != 0
    std::unordered_set<uint64_t> multiples;
    for (uint32_t a = 1; a < R.size(); ++a) {
        RingVector am(R, message.size());
        for (size_t i = 0; i < message.size(); ++i)
            am.set_idx(i, R.mul(a, message.idx(i)));
        multiples.insert(am.lex_index());
    }

    uint64_t total = code.size();
    for (uint64_t vi = 1; vi < total; ++vi) {
        RingVector v = RingVector::from_lex_index(R, code.m(), vi);
        Codeword d = code.encode(v);
        if (d.coords.is_zero()) continue;
        if (!covers(c, d)) continue;
        if (!multiples.count(v.lex_index())) return false;
    }
    return true;
}

MinimalityReport is_minimal_code_bruteforce(const LinearCode& code, const Budget& budget) {
    auto t0 = std::chrono::steady_clock::now();
    check_bruteforce_budget(code, budget);
    MinimalityReport rep;
    rep.method = CheckMethod::bruteforce;
    rep.verdict = true;
    const RingContext& R = code.context();
    uint64_t total = code.size();
    for (uint64_t vi = 1; vi < total; ++vi) {
        RingVector v = RingVector::from_lex_index(R, code.m(), vi);
        if (code.encode(v).coords.is_zero()) continue;  // cannot occur at full rank
        ++rep.checked;
        if (!is_minimal_codeword_bruteforce(code, v, budget)) {
            rep.verdict = false;
            if (rep.witnesses.size() < 16)
                rep.witnesses.push_back({v, "covered by a codeword that is not a scalar multiple"});
        }
    }
    rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - t0);
    return rep;
}

// ---- orthogonal-module criterion ----------------------------------------------

OrthogonalCheck minimality_data(const RingVector& v, const GeneratorMultiset& gens) {
    if (v.is_zero()) throw std::invalid_argument("criterion undefined for v = 0");
    OrthogonalCheck out;
    out.orthogonal_size = orthogonal_size(v);
    const RingContext& R = gens.context();
    RingMatrix annihilated(R, 0, gens.m());
    for (size_t i = 0; i < gens.k(); ++i) {
        if (inner_product_idx(R, v.indices(), gens.column_span(i)) == 0)
            annihilated.append_row(gens.column(i));
    }
    out.annihilated_span = annihilated.rows() == 0
                               ? row_standard_form(RingMatrix(R, 0, gens.m()))
                               : row_standard_form(annihilated);
    return out;
}

namespace {

struct CriterionOutcome {
    bool minimal;
    bool free_rank_m1;
};

CriterionOutcome criterion_once(const RingContext& R, const GeneratorMultiset& gens,
                                std::span<const uint32_t> v, unsigned target_log,
                                bool want_free_check) {
    SpanBuilder sb(R, gens.m());
    size_t k = gens.k();
    for (size_t i = 0; i < k; ++i) {
        if (inner_product_idx(R, v, gens.column_span(i)) != 0) continue;
        sb.insert(gens.column_span(i));
        if (sb.log_size() == target_log)
            return {true, !want_free_check || sb.is_free_of_rank(gens.m() - 1)};
    }
    bool minimal = sb.log_size() == target_log;
    return {minimal, !want_free_check || sb.is_free_of_rank(gens.m() - 1)};
}

unsigned target_log_for(const RingContext& R, std::span<const uint32_t> v, size_t m) {
    unsigned r = R.n();
    for (uint32_t x : v) r = std::min(r, R.val(x));
    return unsigned(R.n() * (m - 1)) + r;
}

}  // namespace

bool is_minimal_codeword_criterion(const RingVector& v, const GeneratorMultiset& gens) {
    if (v.is_zero()) throw std::invalid_argument("criterion undefined for v = 0");
    return criterion_once(gens.context(), gens, v.indices(),
                          target_log_for(gens.context(), v.indices(), gens.m()), false)
        .minimal;
}

MinimalityReport is_minimal_code_criterion(const LinearCode& code, SweepScope scope,
                                           unsigned threads) {
    auto t0 = std::chrono::steady_clock::now();
    const RingContext& R = code.context();
    const GeneratorMultiset& gens = code.generators();
    size_t m = code.m();
    if (scope == SweepScope::root_words_only && m < 2)
        throw std::invalid_argument(
            "root-word sweep needs dimension >= 2; use onedim_minimal for m = 1");

    uint64_t total = code.size();
    struct Chunk {
        std::vector<RingVector> witnesses;
        uint64_t checked = 0;
        std::exception_ptr error;
    };
    unsigned nthreads = std::max(1u, threads);
    std::vector<Chunk> chunks(nthreads);

    auto sweep_range = [&](unsigned t) {
        Chunk& ch = chunks[t];
        std::vector<uint32_t> v(m, 0);
        uint64_t lo = 1 + (total - 1) * t / nthreads;
        uint64_t hi = 1 + (total - 1) * (t + 1) / nthreads;
        for (uint64_t vi = lo; vi < hi; ++vi) {
            uint64_t x = vi;
            for (size_t i = m; i-- > 0;) {
                v[i] = uint32_t(x % R.size());
                x /= R.size();
            }
            if (scope == SweepScope::root_words_only) {
                bool root = false;
                for (uint32_t e : v) root |= R.is_unit(e);
                if (!root) continue;
            }
            ++ch.checked;
            bool free_check = scope == SweepScope::root_words_only;
            auto out = criterion_once(R, gens, v, target_log_for(R, v, m), free_check);
            if (!out.minimal) {
                ch.witnesses.push_back(RingVector(R, v));
            } else if (scope == SweepScope::root_words_only && !out.free_rank_m1) {
                // a fully spanned orthogonal module of a root word is free of
                // rank m-1; anything else is an internal inconsistency
                throw std::logic_error("criterion: spanned module not free of rank m-1");
            }
        }
    };

    auto worker = [&](unsigned t) {
        try {
            sweep_range(t);
        } catch (...) {
            chunks[t].error = std::current_exception();
        }
    };
    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    for (auto& ch : chunks)
        if (ch.error) std::rethrow_exception(ch.error);

    MinimalityReport rep;
    rep.method = CheckMethod::criterion;
    rep.verdict = true;
    for (auto& ch : chunks) {
        rep.checked += ch.checked;
        for (auto& w : ch.witnesses) {
            rep.verdict = false;
            if (rep.witnesses.size() < 16)
                rep.witnesses.push_back(
                    {w, "annihilated generator columns span a proper submodule of the orthogonal module"});
        }
    }
    rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - t0);
    return rep;
}

bool onedim_minimal(const RingVector& v) {
    if (v.is_zero()) throw std::invalid_argument("onedim_minimal undefined for v = 0");
    const RingContext& R = v.context();
    for (unsigned r = 1; r + 1 <= R.n(); ++r) {
        bool found = false;
        for (size_t i = 0; i < v.size() && !found; ++i) found = (R.val(v.idx(i)) == r);
        if (!found) return false;
    }
    return true;
}

GeneratorMultiset purify(const GeneratorMultiset& gens) {
    if (gens.m() < 2) throw std::invalid_argument("purify needs m >= 2");
    GeneratorMultiset out(gens.context(), gens.m());
    for (size_t i = 0; i < gens.k(); ++i) {
        RingVector col = gens.column(i);
        if (col.is_root_word()) out.push_column(col);
    }
    if (out.k() < out.m() || out.rank() != out.m())
        throw std::invalid_argument("purified multiset no longer spans dimension m");
    return out;
}

DualSummary dual_bruteforce(const LinearCode& code, const Budget& budget) {
    const RingContext& R = code.context();
    size_t k = code.k();
    uint64_t ambient = 1;
    for (size_t i = 0; i < k; ++i) {
        if (ambient > budget.enum_cap / R.size())
            throw budget_error("dual enumeration budget exceeded");
        ambient *= R.size();
    }
    // x in C^perp  <=>  G x^T = 0 (rows of G are the generators)
    RingMatrix g = code.generators().generator_matrix();
    RingMatrix members(R, 0, k);
    uint64_t count = 0;
    std::vector<uint32_t> x(k, 0);
    for (uint64_t it = 0; it < ambient; ++it) {
        uint64_t t = it;
        for (size_t i = k; i-- > 0;) {
            x[i] = uint32_t(t % R.size());
            t /= R.size();
        }
        bool ok = true;
        for (size_t r = 0; r < code.m() && ok; ++r)
            ok = inner_product_idx(R, g.row_span(r), x) == 0;
        if (ok) {
            ++count;
            members.append_row(RingVector(R, x));
        }
    }
    DualSummary out;
    out.size = count;
    out.ambient = ambient;
    out.generators = row_standard_form(members);
    return out;
}

// ---- GRCODE/1 ------------------------------------------------------------------

std::string grcode_write(const GeneratorMultiset& gens) {
    std::ostringstream os;
    os << "GRCODE 1\n";
    os << gens.context().descriptor() << "\n";
    os << "m=" << gens.m() << " k=" << gens.k() << "\n";
    for (size_t i = 0; i < gens.k(); ++i) os << "col: " << gens.column(i).to_string() << "\n";
    return os.str();
}

GrcodeFile grcode_read(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line != "GRCODE 1")
        throw std::runtime_error("GRCODE: bad magic line");
    if (!std::getline(is, line)) throw std::runtime_error("GRCODE: missing ring descriptor");
    RingContext::Spec spec = RingContext::parse_descriptor_spec(line);
    auto ring = std::make_unique<RingContext>(spec.p, spec.n, spec.ell, std::move(spec.h));
    if (!std::getline(is, line)) throw std::runtime_error("GRCODE: missing dimensions");
    size_t m = 0, k = 0;
    {
        std::istringstream ds(line);
        std::string tm, tk;
        ds >> tm >> tk;
        if (tm.rfind("m=", 0) != 0 || tk.rfind("k=", 0) != 0)
            throw std::runtime_error("GRCODE: bad dimension line");
        m = std::stoul(tm.substr(2));
        k = std::stoul(tk.substr(2));
    }
    if (m == 0 || k == 0) throw std::runtime_error("GRCODE: zero dimensions");
    GeneratorMultiset gens(*ring, m);
    for (size_t i = 0; i < k; ++i) {
        if (!std::getline(is, line)) throw std::runtime_error("GRCODE: truncated column list");
        if (line.rfind("col: ", 0) != 0) throw std::runtime_error("GRCODE: bad column line");
        std::string body = line.substr(5);
        RingVector col(*ring, m);
        size_t entry = 0;
        std::istringstream es(body);
        std::string piece;
        while (std::getline(es, piece, '|')) {
            if (entry >= m) throw std::runtime_error("GRCODE: too many entries in column");
            std::vector<uint64_t> coeffs;
            std::istringstream cs(piece);
            std::string num;
            while (std::getline(cs, num, ',')) coeffs.push_back(std::stoull(num));
            col.set(entry, ring->from_coeffs(coeffs));
            ++entry;
        }
        if (entry != m) throw std::runtime_error("GRCODE: too few entries in column");
        gens.push_column(col);
    }
    if (std::getline(is, line) && !line.empty())
        throw std::runtime_error("GRCODE: trailing content");
    return GrcodeFile{std::move(ring), std::move(gens)};
}

}  // namespace grmin
