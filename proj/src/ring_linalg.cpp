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

#include "grmin/ring_linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace grmin {

namespace {

void check_same_ctx(const RingVector& a, const RingVector& b) {
    if (&a.context() != &b.context())
        throw std::invalid_argument("vectors from mismatched contexts");
}

size_t first_unit_coord(const RingVector& v) {
    for (size_t i = 0; i < v.size(); ++i)
        if (v.context().is_unit(v.idx(i))) return i;
    throw std::invalid_argument("vector is not a root word");
}

uint64_t pow_u64(uint64_t base, unsigned e) {
    uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (base != 0 && r > UINT64_MAX / base) throw std::overflow_error("size overflow");
        r *= base;
    }
    return r;
}

}  // namespace

// ---- RingVector -------------------------------------------------------------

bool RingVector::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](uint32_t x) { return x == 0; });
}

bool RingVector::is_root_word() const {
    for (uint32_t x : e_)
        if (ctx_->is_unit(x)) return true;
    return false;
}

size_t RingVector::weight() const {
    size_t w = 0;
    for (uint32_t x : e_) w += (x != 0);
    return w;
}

size_t RingVector::unit_count() const {
    size_t w = 0;
    for (uint32_t x : e_) w += ctx_->is_unit(x);
    return w;
}

unsigned RingVector::min_valuation() const {
    unsigned r = ctx_->n();
    for (uint32_t x : e_) r = std::min(r, ctx_->val(x));
    return r;
}

uint64_t RingVector::lex_index() const {
    uint64_t idx = 0;
    for (uint32_t x : e_) idx = idx * ctx_->size() + x;
    return idx;
}

RingVector RingVector::from_lex_index(const RingContext& ctx, size_t m, uint64_t index) {
    RingVector v(ctx, m);
    for (size_t i = m; i-- > 0;) {
        v.e_[i] = uint32_t(index % ctx.size());
        index /= ctx.size();
    }
    return v;
}

RingVector RingVector::operator+(const RingVector& o) const {
    check_same_ctx(*this, o);
    if (size() != o.size()) throw std::invalid_argument("vector length mismatch");
    RingVector r(*ctx_, size());
    for (size_t i = 0; i < size(); ++i) r.e_[i] = ctx_->add(e_[i], o.e_[i]);
    return r;
}

RingVector RingVector::operator-(const RingVector& o) const {
    check_same_ctx(*this, o);
    if (size() != o.size()) throw std::invalid_argument("vector length mismatch");
    RingVector r(*ctx_, size());
    for (size_t i = 0; i < size(); ++i) r.e_[i] = ctx_->sub(e_[i], o.e_[i]);
    return r;
}

std::string RingVector::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < size(); ++i) {
        if (i) os << '|';
        os << at(i).to_string();
    }
    return os.str();
}

RingVector operator*(const RingElement& a, const RingVector& v) {
    const RingContext& ctx = v.context();
    if (&a.context() != &ctx) throw std::invalid_argument("scalar from mismatched context");
    RingVector r(ctx, v.size());
    for (size_t i = 0; i < v.size(); ++i) r.set_idx(i, ctx.mul(a.index(), v.idx(i)));
    return r;
}

RingVector unit_vector(const RingContext& ctx, size_t m, size_t i) {
    RingVector v(ctx, m);
    v.set_idx(i, ctx.one());
    return v;
}

RingElement inner_product(const RingVector& v, const RingVector& w) {
    check_same_ctx(v, w);
    if (v.size() != w.size()) throw std::invalid_argument("vector length mismatch");
    return v.context().element(
        inner_product_idx(v.context(), v.indices(), w.indices()));
}

uint32_t inner_product_idx(const RingContext& ctx, std::span<const uint32_t> v,
                           std::span<const uint32_t> w) {
    uint32_t acc = 0;
    for (size_t i = 0; i < v.size(); ++i) acc = ctx.add(acc, ctx.mul(v[i], w[i]));
    return acc;
}

// ---- RingMatrix -------------------------------------------------------------

RingMatrix RingMatrix::from_rows(const std::vector<RingVector>& rows) {
    if (rows.empty()) throw std::invalid_argument("from_rows: no rows");
    RingMatrix m(rows[0].context(), rows.size(), rows[0].size());
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_ || &rows[r].context() != m.ctx_)
            throw std::invalid_argument("from_rows: ragged rows or mixed contexts");
        for (size_t c = 0; c < m.cols_; ++c) m.set_idx(r, c, rows[r].idx(c));
    }
    return m;
}

RingVector RingMatrix::row(size_t r) const {
    std::vector<uint32_t> e(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
    return RingVector(*ctx_, std::move(e));
}

void RingMatrix::append_row(const RingVector& v) {
    if (rows_ == 0 && cols_ == 0) {
        ctx_ = &v.context();
        cols_ = v.size();
    }
    if (v.size() != cols_ || &v.context() != ctx_)
        throw std::invalid_argument("append_row: shape or context mismatch");
    a_.insert(a_.end(), v.indices().begin(), v.indices().end());
    ++rows_;
}

// ---- SpanBuilder ------------------------------------------------------------

SpanBuilder::SpanBuilder(const RingContext& ctx, size_t width)
    : ctx_(&ctx), width_(width) {}

void SpanBuilder::insert(std::span<const uint32_t> row) {
    if (row.size() != width_) throw std::invalid_argument("row width mismatch");
    std::vector<std::vector<uint32_t>> queue;
    queue.emplace_back(row.begin(), row.end());
    while (!queue.empty()) {
        std::vector<uint32_t> work = std::move(queue.back());
        queue.pop_back();
        reduce_one(std::move(work), queue);
    }
}

void SpanBuilder::reduce_one(std::vector<uint32_t> work,
                             std::vector<std::vector<uint32_t>>& queue) {
    const RingContext& R = *ctx_;
    const unsigned n = R.n();
    size_t c = 0;
    while (c < width_) {
        if (work[c] == 0) { ++c; continue; }
        // locate pivot at column c (pivots_ sorted by col, few entries)
        size_t pi = pivots_.size();
        size_t insert_at = pivots_.size();
        for (size_t i = 0; i < pivots_.size(); ++i) {
            if (pivots_[i].col == c) { pi = i; break; }
            if (pivots_[i].col > c) { insert_at = i; break; }
        }
        unsigned sv = R.val(work[c]);
        if (pi == pivots_.size()) {
            // new pivot: normalize so the pivot entry is exactly p^sv
            uint32_t ui = R.inv(R.unit_part(work[c]));
            for (size_t j = c; j < width_; ++j) work[j] = R.mul(ui, work[j]);
            log_size_ += n - sv;
            if (sv > 0) {
                std::vector<uint32_t> shadow(width_, 0);
                uint32_t pns = R.p_power(n - sv);
                bool nz = false;
                for (size_t j = c; j < width_; ++j) {
                    shadow[j] = R.mul(pns, work[j]);
                    nz |= shadow[j] != 0;
                }
                if (nz) queue.push_back(std::move(shadow));
            }
            pivots_.insert(pivots_.begin() + insert_at, Pivot{c, sv, std::move(work)});
            return;
        }
        Pivot& piv = pivots_[pi];
        if (sv >= piv.val) {
            uint32_t y = R.shift_down(work[c], piv.val);
            for (size_t j = c; j < width_; ++j)
                work[j] = R.sub(work[j], R.mul(y, piv.row[j]));
            ++c;
        } else {
            // work carries a strictly smaller valuation: it becomes the pivot
            uint32_t ui = R.inv(R.unit_part(work[c]));
            for (size_t j = c; j < width_; ++j) work[j] = R.mul(ui, work[j]);
            std::swap(piv.row, work);
            unsigned old = piv.val;
            piv.val = sv;
            log_size_ += old - sv;
            std::vector<uint32_t> shadow(width_, 0);
            uint32_t pns = R.p_power(n - sv);
            bool nz = false;
            for (size_t j = c; j < width_; ++j) {
                shadow[j] = R.mul(pns, piv.row[j]);
                nz |= shadow[j] != 0;
            }
            if (nz) queue.push_back(std::move(shadow));
            // the displaced row continues reduction from column c
        }
    }
}

uint64_t SpanBuilder::span_size() const { return pow_u64(ctx_->q(), log_size_); }

namespace {

// Rank over the residue field of a small family of rows, by plain Gaussian
// elimination on coefficient vectors reduced mod p.
size_t residue_rank_of_rows(const RingContext& R,
                            const std::vector<std::vector<uint32_t>>& input) {
    auto canon = [&](uint32_t a) {
        auto c = R.decode(a);
        for (auto& x : c) x %= R.p();
        return R.encode(c);
    };
    std::vector<std::vector<uint32_t>> rows;
    for (const auto& in : input) {
        std::vector<uint32_t> r(in.size());
        bool nz = false;
        for (size_t i = 0; i < in.size(); ++i) {
            r[i] = canon(in[i]);
            nz |= r[i] != 0;
        }
        if (nz) rows.push_back(std::move(r));
    }
    size_t rank = 0;
    size_t cols = rows.empty() ? 0 : rows[0].size();
    for (size_t col = 0; col < cols && rank < rows.size(); ++col) {
        size_t pivot = rows.size();
        for (size_t r = rank; r < rows.size(); ++r)
            if (rows[r][col] != 0) { pivot = r; break; }
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        uint32_t inv = canon(R.inv(rows[rank][col]));
        for (size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            uint32_t f = canon(R.mul(rows[r][col], inv));
            for (size_t c = col; c < cols; ++c)
                rows[r][c] = canon(R.sub(rows[r][c], R.mul(f, rows[rank][c])));
        }
        ++rank;
    }
    return rank;
}

}  // namespace

size_t SpanBuilder::residue_rank() const {
    // pivots of positive valuation can still carry unit entries right of
    // their pivot column, so every pivot row feeds the reduction
    std::vector<std::vector<uint32_t>> rows;
    for (const Pivot& p : pivots_) rows.push_back(p.row);
    return residue_rank_of_rows(*ctx_, rows);
}

bool SpanBuilder::is_free_of_rank(size_t r) const {
    return log_size_ == ctx_->n() * r && residue_rank() == r;
}

// ---- standard form / rank / comparison --------------------------------------

bool StandardForm::is_free_of_rank(size_t r) const {
    uint64_t target = 1;
    const RingContext& R = matrix.context();
    for (unsigned i = 0; i < R.n() * r; ++i) target *= R.q();
    return size == target && mccoy_rank(matrix) == r;
}

StandardForm row_standard_form(const RingMatrix& g) {
    SpanBuilder sb(g.context(), g.cols());
    for (size_t r = 0; r < g.rows(); ++r) sb.insert(g.row_span(r));
    StandardForm out;
    out.matrix = RingMatrix(g.context(), sb.pivot_count(), g.cols());
    for (size_t i = 0; i < sb.pivots().size(); ++i) {
        const auto& p = sb.pivots()[i];
        out.pivot_cols.push_back(p.col);
        out.pivot_vals.push_back(p.val);
        for (size_t c = 0; c < g.cols(); ++c) out.matrix.set_idx(i, c, p.row[c]);
    }
    out.size = sb.span_size();
    return out;
}

size_t mccoy_rank(const RingMatrix& g) {
    // rank is invariant under transposition; eliminate along the short side
    if (g.rows() <= g.cols()) {
        SpanBuilder sb(g.context(), g.cols());
        for (size_t r = 0; r < g.rows(); ++r) sb.insert(g.row_span(r));
        return sb.residue_rank();
    }
    SpanBuilder sb(g.context(), g.rows());
    std::vector<uint32_t> col(g.rows());
    for (size_t c = 0; c < g.cols(); ++c) {
        for (size_t r = 0; r < g.rows(); ++r) col[r] = g.idx(r, c);
        sb.insert(col);
    }
    return sb.residue_rank();
}

namespace {

uint64_t joint_span_size(const RingMatrix& base, const RingMatrix& extra) {
    SpanBuilder sb(base.context(), base.cols());
    for (size_t r = 0; r < base.rows(); ++r) sb.insert(base.row_span(r));
    for (size_t r = 0; r < extra.rows(); ++r) sb.insert(extra.row_span(r));
    return sb.span_size();
}

uint64_t span_size_of(const RingMatrix& m) {
    SpanBuilder sb(m.context(), m.cols());
    for (size_t r = 0; r < m.rows(); ++r) sb.insert(m.row_span(r));
    return sb.span_size();
}

}  // namespace

SubmoduleRelation submodule_compare(const RingMatrix& a, const RingMatrix& b) {
    if (&a.context() != &b.context() || a.cols() != b.cols())
        throw std::invalid_argument("submodule_compare: ambient modules differ");
    uint64_t sa = span_size_of(a);
    uint64_t sb = span_size_of(b);
    uint64_t sj = joint_span_size(a, b);
    bool a_in_b = (sj == sb);
    bool b_in_a = (sj == sa);
    if (a_in_b && b_in_a) return SubmoduleRelation::equal;
    if (a_in_b) return SubmoduleRelation::left_in_right;
    if (b_in_a) return SubmoduleRelation::right_in_left;
    return SubmoduleRelation::incomparable;
}

bool in_span(const RingMatrix& gens, const RingVector& x) {
    SpanBuilder sb(gens.context(), gens.cols());
    for (size_t r = 0; r < gens.rows(); ++r) sb.insert(gens.row_span(r));
    uint64_t before = sb.span_size();
    sb.insert(x);
    return sb.span_size() == before;
}

// ---- orthogonal modules -------------------------------------------------------

RingMatrix orthogonal_basis(const RingVector& v) {
    const RingContext& R = v.context();
    size_t m = v.size();
    size_t piv = first_unit_coord(v);
    uint32_t ui = R.inv(v.idx(piv));
    RingMatrix rows(R, m - 1, m);
    size_t r = 0;
    for (size_t j = 0; j < m; ++j) {
        if (j == piv) continue;
        rows.set_idx(r, piv, R.neg(R.mul(v.idx(j), ui)));
        rows.set_idx(r, j, R.one());
        ++r;
    }
    return rows;
}

RingMatrix orthogonal_generating_set(const RingVector& v) {
    const RingContext& R = v.context();
    size_t m = v.size();
    if (v.is_zero() || v.is_root_word())
        throw std::invalid_argument("expected a nonzero non-root vector");
    unsigned r = v.min_valuation();
    RingVector w(R, m);
    for (size_t i = 0; i < m; ++i) w.set_idx(i, R.shift_down(v.idx(i), r));
    size_t piv = first_unit_coord(w);
    uint32_t ui = R.inv(w.idx(piv));
    RingMatrix rows(R, m, m);
    size_t out = 0;
    for (size_t j = 0; j < m; ++j) {
        if (j == piv) continue;
        rows.set_idx(out, piv, R.neg(R.mul(w.idx(j), ui)));
        rows.set_idx(out, j, R.one());
        ++out;
    }
    rows.set_idx(out, piv, R.mul(R.p_power(R.n() - r), ui));
    return rows;
}

RingMatrix orthogonal_generating_set_alt(const RingVector& v) {
    const RingContext& R = v.context();
    size_t m = v.size();
    if (m < 2) throw std::invalid_argument("alt generating set needs m >= 2");
    if (v.is_zero() || v.is_root_word())
        throw std::invalid_argument("expected a nonzero non-root vector");
    unsigned r = v.min_valuation();
    RingVector w(R, m);
    for (size_t i = 0; i < m; ++i) w.set_idx(i, R.shift_down(v.idx(i), r));
    size_t piv = first_unit_coord(w);
    uint32_t ui = R.inv(w.idx(piv));
    uint32_t upp = 0;  // lex-least unit with residue != 1
    for (uint32_t x = 1; x < R.size(); ++x) {
        if (!R.is_unit(x)) continue;
        if (R.teichmuller_of(x) != R.teichmuller_of(R.one())) { upp = x; break; }
    }
    if (upp == 0) throw std::invalid_argument("no unit != 1 mod p exists (q = 2)");
    size_t j0 = (piv == 0) ? 1 : 0;
    RingMatrix rows(R, m, m);
    size_t out = 0;
    uint32_t pnr = R.p_power(R.n() - r);
    for (size_t j = 0; j < m; ++j) {
        if (j == piv) continue;
        rows.set_idx(out, piv, R.sub(R.mul(pnr, ui), R.mul(w.idx(j), ui)));
        rows.set_idx(out, j, R.one());
        ++out;
    }
    rows.set_idx(out, piv,
                 R.sub(R.mul(pnr, ui), R.mul(upp, R.mul(w.idx(j0), ui))));
    rows.set_idx(out, j0, upp);
    return rows;
}

RingMatrix orthogonal_bruteforce(const RingVector& v, uint64_t enum_cap) {
    const RingContext& R = v.context();
    size_t m = v.size();
    uint64_t total = 1;
    for (size_t i = 0; i < m; ++i) {
        if (total > enum_cap / R.size()) throw std::runtime_error("enumeration budget exceeded");
        total *= R.size();
    }
    RingMatrix out(R, 0, m);
    std::vector<uint32_t> x(m, 0);
    for (uint64_t it = 0; it < total; ++it) {
        uint64_t t = it;
        for (size_t i = m; i-- > 0;) {
            x[i] = uint32_t(t % R.size());
            t /= R.size();
        }
        if (inner_product_idx(R, v.indices(), x) == 0)
            out.append_row(RingVector(R, x));
    }
    return out;
}

unsigned orthogonal_log_size(const RingVector& v) {
    if (v.is_zero()) throw std::invalid_argument("orthogonal size undefined for v = 0");
    return unsigned(v.context().n() * (v.size() - 1)) + v.min_valuation();
}

uint64_t orthogonal_size(const RingVector& v) {
    return pow_u64(v.context().q(), orthogonal_log_size(v));
}

}  // namespace grmin
