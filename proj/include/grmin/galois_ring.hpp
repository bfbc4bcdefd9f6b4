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
 * @file galois_ring.hpp
 * @brief Exact arithmetic in the Galois ring GR(p^n, ell) = Z_{p^n}[x]/<h(x)>.
 *
 * Elements are coefficient vectors in the basis 1, x, ..., x^{ell-1} with
 * coefficients in [0, p^n).  Internally every element is addressed by a
 * mixed-radix index (c_0 is the most significant digit), so the natural index
 * order coincides with lexicographic order on coefficient vectors.  Small
 * rings additionally precompute dense operation tables; larger rings fall
 * back to on-the-fly polynomial arithmetic through the same primitives.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace grmin {

class RingContext;

/// Which element class to enumerate.
enum class EnumKind { all, units, zero_divisors, valuation_exactly, teichmuller };

struct ValuationForm;

/**
 * One element of a fixed RingContext.  Value type: a context pointer plus the
 * element's mixed-radix index.  The context must outlive every element
 * created from it.
 */
class RingElement {
  public:
    RingElement() = default;
    RingElement(const RingContext& ctx, uint32_t index) : ctx_(&ctx), idx_(index) {}

    const RingContext& context() const { return *ctx_; }
    uint32_t index() const { return idx_; }
    std::vector<uint64_t> coeffs() const;

    bool is_zero() const { return idx_ == 0; }
    bool is_unit() const;
    unsigned valuation_exponent() const;
    ValuationForm valuation() const;
    RingElement inverse() const;

    /// Digits c_0..c_{n-1} of the unique expansion a = sum c_i p^i with c_i Teichmuller.
    std::vector<RingElement> teichmuller_digits() const;

    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator*(const RingElement& o) const;
    RingElement operator-() const;

    bool operator==(const RingElement& o) const { return ctx_ == o.ctx_ && idx_ == o.idx_; }
    bool operator!=(const RingElement& o) const { return !(*this == o); }
    bool operator<(const RingElement& o) const { return idx_ < o.idx_; }

    std::string to_string() const;  // coefficient list, comma separated

  private:
    const RingContext* ctx_ = nullptr;
    uint32_t idx_ = 0;
};

/// a = p^r * unit_part with unit_part a unit; r == n and no unit part iff a == 0.
struct ValuationForm {
    unsigned r = 0;
    std::optional<RingElement> unit_part;
};

enum class ArithOp { add, sub, mul };

/**
 * The ambient ring GR(p^n, ell): parameters, defining polynomial, the
 * ordered Teichmuller set and (for small rings) dense operation tables.
 * Immutable after construction; safe to share across threads.
 */
class RingContext {
  public:
    /// Validates p prime, n >= 1, ell >= 1 and h (monic, basic irreducible).
    /// When h is absent: h = x for ell = 1, otherwise the lift of the
    /// lexicographically smallest monic irreducible of degree ell over F_p.
    RingContext(uint64_t p, unsigned n, unsigned ell,
                std::optional<std::vector<uint64_t>> h = std::nullopt);

    RingContext(const RingContext&) = delete;
    RingContext& operator=(const RingContext&) = delete;

    uint64_t p() const { return p_; }
    unsigned n() const { return n_; }
    unsigned ell() const { return ell_; }
    uint64_t q() const { return q_; }                  // residue field size p^ell
    uint64_t characteristic() const { return pn_; }    // p^n
    uint32_t size() const { return size_; }            // q^n = p^{n*ell}
    const std::vector<uint64_t>& modulus() const { return h_; }

    // ---- index-level arithmetic (hot path) ------------------------------
    uint32_t add(uint32_t a, uint32_t b) const {
        return add_.empty() ? add_slow(a, b) : add_[size_t(a) * size_ + b];
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return mul_.empty() ? mul_slow(a, b) : mul_[size_t(a) * size_ + b];
    }
    uint32_t neg(uint32_t a) const { return neg_.empty() ? neg_slow(a) : neg_[a]; }
    unsigned val(uint32_t a) const { return val_.empty() ? val_slow(a) : val_[a]; }
    bool is_unit(uint32_t a) const { return val(a) == 0; }
    /// Throws std::domain_error when a is not a unit.
    uint32_t inv(uint32_t a) const;
    /// Canonical u with a = p^{val(a)} * u (coefficients of u in [0, p^{n-r})).
    uint32_t unit_part(uint32_t a) const;
    /// Exact coefficient-wise division by p^s; requires val(a) >= s.
    uint32_t shift_down(uint32_t a, unsigned s) const;
    /// Index of the scalar p^e (zero when e >= n).
    uint32_t p_power(unsigned e) const { return e >= n_ ? 0 : ppow_[e]; }
    uint32_t one() const { return one_; }

    // ---- element conversions --------------------------------------------
    uint32_t encode(const std::vector<uint64_t>& coeffs) const;
    std::vector<uint64_t> decode(uint32_t idx) const;
    RingElement element(uint32_t idx) const { return RingElement(*this, idx); }
    RingElement from_coeffs(const std::vector<uint64_t>& coeffs) const;
    /// Scalar embedding of an integer (reduced mod p^n), as c_0.
    RingElement from_int(uint64_t v) const;
    RingElement zero() const { return element(0); }
    RingElement one_element() const { return element(one_); }

    // ---- structure --------------------------------------------------------
    /// Ordered Teichmuller set {0, 1, xi, xi^2, ..., xi^{q-2}}.
    const std::vector<uint32_t>& teichmuller() const { return teich_; }
    /// The Teichmuller representative congruent to a mod p.
    uint32_t teichmuller_of(uint32_t a) const;
    std::vector<RingElement> enumerate(EnumKind kind, unsigned r = 0) const;

    /// Header line `GR p=<p> n=<n> ell=<ell> h=<c0,...,1>` (h omitted for ell=1).
    std::string descriptor() const;
    struct Spec {
        uint64_t p;
        unsigned n;
        unsigned ell;
        std::optional<std::vector<uint64_t>> h;
    };
    static Spec parse_descriptor_spec(const std::string& line);
    static RingContext parse_descriptor(const std::string& line);

  private:
    uint32_t add_slow(uint32_t a, uint32_t b) const;
    uint32_t mul_slow(uint32_t a, uint32_t b) const;
    uint32_t neg_slow(uint32_t a) const;
    unsigned val_slow(uint32_t a) const;
    uint32_t inv_slow(uint32_t a) const;
    void build_teichmuller();
    void build_tables();

    uint64_t p_ = 0;
    unsigned n_ = 0;
    unsigned ell_ = 0;
    uint64_t q_ = 0;
    uint64_t pn_ = 0;
    uint32_t size_ = 0;
    uint32_t one_ = 0;
    std::vector<uint64_t> h_;       // degree ell, monic; h_[i] multiplies x^i, h_[ell] == 1
    std::vector<uint64_t> radix_;   // radix_[i] = pn^{ell-1-i}, weight of coefficient i
    std::vector<uint32_t> ppow_;    // index of p^e, e in [0, n)
    std::vector<uint32_t> teich_;
    // dense tables, built when size <= kTableCap
    std::vector<uint32_t> add_, mul_, neg_, inv_, teich_of_;
    std::vector<uint8_t> val_;
};

/// Spec-level construction entry point.
RingContext make_ring(uint64_t p, unsigned n, unsigned ell,
                      std::optional<std::vector<uint64_t>> h = std::nullopt);

/// Spec-level binary arithmetic entry point (contexts must match).
RingElement arith(const RingElement& a, const RingElement& b, ArithOp op);

}  // namespace grmin
