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
 * @file codes.hpp
 * @brief Linear codes C(Lambda) over GR(p^n, ell): encoding, covering, the
 * brute-force minimality oracle, the orthogonal-module criterion, duals,
 * the one-dimensional criterion and purification.
 */

#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "grmin/budget.hpp"
#include "grmin/ring_linalg.hpp"

namespace grmin {

/// Ordered multiset of k generator columns alpha_i in GR(p^n, ell)^m.
class GeneratorMultiset {
  public:
    GeneratorMultiset() = default;
    GeneratorMultiset(const RingContext& ctx, size_t m)
        : ctx_(&ctx), m_(m) {}

    const RingContext& context() const { return *ctx_; }
    size_t m() const { return m_; }
    size_t k() const { return cols_.size() / (m_ ? m_ : 1); }
    void push_column(const RingVector& col);
    RingVector column(size_t i) const;
    std::span<const uint32_t> column_span(size_t i) const {
        return std::span<const uint32_t>(cols_).subspan(i * m_, m_);
    }
    const std::vector<uint32_t>& raw() const { return cols_; }

    /// Generator matrix G with the columns as its columns (m x k).
    RingMatrix generator_matrix() const;
    size_t rank() const { return mccoy_rank(generator_matrix()); }

    bool operator==(const GeneratorMultiset& o) const {
        return ctx_ == o.ctx_ && m_ == o.m_ && cols_ == o.cols_;
    }

  private:
    const RingContext* ctx_ = nullptr;
    size_t m_ = 0;
    std::vector<uint32_t> cols_;  // k * m, column-major blocks
};

struct Codeword {
    RingVector message;  // length m
    RingVector coords;   // length k
};

/// Validated code handle: k >= m and McCoy rank of the generator matrix = m,
/// so encoding is injective and |C| = q^{nm}.
class LinearCode {
  public:
    explicit LinearCode(GeneratorMultiset gens);

    const GeneratorMultiset& generators() const { return gens_; }
    const RingContext& context() const { return gens_.context(); }
    size_t m() const { return gens_.m(); }
    size_t k() const { return gens_.k(); }
    uint64_t size() const { return size_; }

    Codeword encode(const RingVector& message) const;

  private:
    GeneratorMultiset gens_;
    uint64_t size_ = 0;
};

LinearCode build_code(GeneratorMultiset gens);

/// Supp(b) subseteq Supp(a)?
bool covers(const Codeword& a, const Codeword& b);

enum class CheckMethod { bruteforce, criterion };
enum class SweepScope { root_words_only, all_nonzero };

struct MinimalityReport {
    bool verdict = false;
    CheckMethod method = CheckMethod::criterion;
    struct Witness {
        RingVector message;
        std::string reason;
    };
    std::vector<Witness> witnesses;  // first 16 failures, lexicographic
    uint64_t checked = 0;
    std::chrono::milliseconds elapsed{0};
};

/// Literal support-containment oracle for one codeword: every nonzero
/// codeword covered by c(message) is a scalar multiple of it (scalars range
/// over all nonzero ring elements).
bool is_minimal_codeword_bruteforce(const LinearCode& code, const RingVector& message,
                                    const Budget& budget = {});

MinimalityReport is_minimal_code_bruteforce(const LinearCode& code, const Budget& budget = {});

/// Orthogonal data behind the criterion: |v^perp| from the closed form and
/// the standard form of the span of the generator columns annihilated by v.
struct OrthogonalCheck {
    uint64_t orthogonal_size = 0;
    StandardForm annihilated_span;
};
OrthogonalCheck minimality_data(const RingVector& v, const GeneratorMultiset& gens);

/// c(v) minimal iff the annihilated-column span fills the whole orthogonal
/// module (containment is automatic, so sizes suffice).
bool is_minimal_codeword_criterion(const RingVector& v, const GeneratorMultiset& gens);

/// Criterion sweep over message vectors.  root_words_only requires m >= 2 and
/// additionally asserts the free-rank-(m-1) shape of each fully spanned
/// orthogonal module.  Deterministic output for any thread count.
MinimalityReport is_minimal_code_criterion(const LinearCode& code, SweepScope scope,
                                           unsigned threads = 1);

/// One-dimensional criterion: <v> is minimal iff for every r in [1, n-1]
/// some entry of v has valuation exactly r.
bool onedim_minimal(const RingVector& v);

/// Remove every non-root-word column; throws when the result loses rank m.
GeneratorMultiset purify(const GeneratorMultiset& gens);

struct DualSummary {
    uint64_t size = 0;
    StandardForm generators;   // standard form of the enumerated dual
    uint64_t ambient = 0;      // q^{nk}
};
/// Enumerates C^perp inside R^k.  Throws budget_error when q^{nk} exceeds cap.
DualSummary dual_bruteforce(const LinearCode& code, const Budget& budget = {});

// ---- GRCODE/1 file format ----------------------------------------------------

std::string grcode_write(const GeneratorMultiset& gens);

struct GrcodeFile {
    std::unique_ptr<RingContext> ring;
    GeneratorMultiset code;
};
GrcodeFile grcode_read(const std::string& text);

}  // namespace grmin
