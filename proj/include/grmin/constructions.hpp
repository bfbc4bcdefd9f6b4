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
 * @file constructions.hpp
 * @brief Minimal-code constructions: the pairwise generator family lambda0,
 * the function-based codes (families thm43, thm46, poly), the adapted basis
 * constructions they rest on, the five-type message classifier and the
 * per-message witness search.
 */

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "grmin/codes.hpp"

namespace grmin {

// ---- basis constructions -------------------------------------------------------

/// Basis of R^m whose vectors have full weight and all-unit entries: columns
/// of a*I - J (J all ones).  Requires q > 3; a defaults to the lex-least
/// element with residue outside {0, 1, m mod p}.
RingMatrix all_unit_basis(const RingContext& ctx, size_t m,
                          std::optional<RingElement> a = std::nullopt);

/// Basis adapted to a root word v: weights in [1,2] and v . beta_i = 1.
RingMatrix dot_one_basis(const RingVector& v);

/// Full-weight basis adapted to a nonzero non-root v: v . beta_i = v_i.
/// Dispatches on the number of zero coordinates (0 / exactly 1 / >= 2); the
/// >= 2 branch needs q > 3.  Rows matching zero coordinates of v carry at
/// least two unit entries when m >= 3.
RingMatrix full_weight_basis_nonroot(const RingVector& v);

/// Basis of v^perp with weights in [1,2] (root word v).
RingMatrix orthogonal_small_weight_basis(const RingVector& v);

/// Family of m rows inside (p^{n-r} v)^perp with weights in [1,2] and
/// v . beta_i = p^r, for a root word v and 1 <= r <= n-1.
RingMatrix scaled_dot_family(const RingVector& v, unsigned r);

// ---- lambda0 ---------------------------------------------------------------------

/// Generator multiset {e_i} + {e_i + u e_j} + {e_i + d e_j} + {d e_i + e_j}
/// over i < j, units u, nonzero zero divisors d; length
/// m(m-1)/2 * (q^n + q^{n-1} - 2) + m.
GeneratorMultiset lambda0(const RingContext& ctx, size_t m);

// ---- function tables ---------------------------------------------------------------

enum class FunctionFamily { thm43, thm46, poly, table };
enum class DomainMode { all_nonzero, root_words_only };

/// Multivariate polynomial sum of unit-coefficient monomials.
struct MonomialPoly {
    struct Term {
        RingElement coeff;                // a unit
        std::vector<unsigned> exponents;  // length m
    };
    std::vector<Term> terms;

    std::vector<std::vector<size_t>> supports() const;
    /// Construction-theorem shape: t >= 2, unit coefficients, each monomial
    /// has a degree-1 variable, supports pairwise disjoint of size >= 3.
    void validate(size_t m) const;
    std::string to_string() const;
    static MonomialPoly parse(const RingContext& ctx, size_t m, const std::string& text);
};

/// A total map f : R^m \ {0} -> R (optionally restricted to root words),
/// either one of the named canonical rules or an explicit value table.
class FunctionTable {
  public:
    static FunctionTable canonical(FunctionFamily family, const RingContext& ctx, size_t m,
                                   DomainMode domain = DomainMode::all_nonzero,
                                   std::optional<MonomialPoly> poly = std::nullopt);
    static FunctionTable from_values(const RingContext& ctx, size_t m, DomainMode domain,
                                     std::vector<uint32_t> values_by_lex_index);

    const RingContext& context() const { return *ctx_; }
    size_t m() const { return m_; }
    FunctionFamily family() const { return family_; }
    DomainMode domain() const { return domain_; }
    const std::optional<MonomialPoly>& poly() const { return poly_; }

    bool in_domain(const RingVector& x) const;
    uint32_t value_idx(std::span<const uint32_t> x) const;
    RingElement operator()(const RingVector& x) const {
        return ctx_->element(value_idx(x.indices()));
    }

    /// Domain size: q^{nm} - 1, or the root-word count q^{nm} - q^{m(n-1)}.
    uint64_t domain_size() const;

  private:
    const RingContext* ctx_ = nullptr;
    size_t m_ = 0;
    FunctionFamily family_ = FunctionFamily::table;
    DomainMode domain_ = DomainMode::all_nonzero;
    std::optional<MonomialPoly> poly_;
    std::vector<uint32_t> values_;  // indexed by lex index; empty for rule-backed tables
};

/// Spec names for the parameter guards of each family.
void validate_family_parameters(FunctionFamily family, const RingContext& ctx, size_t m,
                                const std::optional<MonomialPoly>& poly);

// ---- condition checking ----------------------------------------------------------

enum class ConditionSet { thm43, thm43_no_cond2, thm46, poly };

struct ConditionReport {
    struct Entry {
        std::string name;
        bool pass = true;
        std::optional<RingVector> counterexample;
        std::string detail;
    };
    std::vector<Entry> entries;
    std::vector<std::string> notes;
    bool all_pass() const;
};

/// Exhaustive per-condition verification of f over its domain.
ConditionReport check_function_conditions(const FunctionTable& f, ConditionSet set);

// ---- the function code -------------------------------------------------------------

/// Columns (f(x), x) over the domain of f in lexicographic x order; asserts
/// McCoy rank m+1.  Length q^{nm}-1, or q^{nm}-q^{m(n-1)} when restricted.
GeneratorMultiset build_function_code(const FunctionTable& f);

// ---- root word classification and witnesses -----------------------------------------

/// The five shapes of a root word (first, rest) in R^{m+1}.
enum class MessageClass {
    unit_zero,      // first a unit, rest = 0
    unit_root,      // first a unit, rest a root word
    unit_nonroot,   // first a unit, rest nonzero and not a root word
    zero_root,      // first = 0, rest a root word
    zerodiv_root,   // first a nonzero zero divisor, rest a root word
};

MessageClass classify_message(const RingElement& first, const RingVector& rest);

/// Constructive minimality certificate for the message (first, rest): the m
/// evaluation points beta_i whose generator columns witness minimality, found
/// by the deterministic per-family recipes with a complete greedy fallback
/// scan over the whole domain.  A returned failure is definitive.
struct WitnessResult {
    bool found = false;
    RingMatrix rows;  // m rows of length m: the beta_i
    std::string note;
};

WitnessResult minimality_witness(const FunctionTable& f, const RingElement& first,
                                 const RingVector& rest);

/// Check a candidate witness family against the class-specific equations and
/// the required rank; used by tests and by minimality_witness itself.
bool verify_witness(const FunctionTable& f, const RingElement& first, const RingVector& rest,
                    const RingMatrix& rows);

}  // namespace grmin
