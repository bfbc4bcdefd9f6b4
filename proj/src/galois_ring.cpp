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

#include "grmin/galois_ring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace grmin {

namespace {

// Tables are only built for rings small enough that q^n * q^n stays cheap.
constexpr uint32_t kTableCap = 2048;
constexpr uint64_t kSizeCap = uint64_t(1) << 24;

bool is_prime(uint64_t p) {
    if (p < 2) return false;
    for (uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

uint64_t checked_pow(uint64_t base, unsigned e, uint64_t cap) {
    uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (r > cap / base) throw std::invalid_argument("ring size exceeds supported cap");
        r *= base;
    }
    return r;
}

// ---- dense polynomial arithmetic over Z_m (m = p^n or m = p) -------------

using Poly = std::vector<uint64_t>;  // poly[i] multiplies x^i

Poly poly_mod(const Poly& a, uint64_t m) {
    Poly r(a);
    for (auto& c : r) c %= m;
    return r;
}

unsigned poly_deg(const Poly& a) {
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != 0) return unsigned(i);
    return 0;  // zero polynomial treated as degree 0
}

bool poly_is_zero(const Poly& a) {
    return std::all_of(a.begin(), a.end(), [](uint64_t c) { return c == 0; });
}

// a * b mod (h, m) where h is monic of degree ell.
Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& h, unsigned ell, uint64_t m) {
    std::vector<uint64_t> prod(2 * ell, 0);
    for (unsigned i = 0; i < ell; ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; j < ell; ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % m;
    }
    for (unsigned d = 2 * ell - 1; d >= ell; --d) {
        uint64_t c = prod[d];
        if (c == 0) { if (d == ell) break; continue; }
        prod[d] = 0;
        for (unsigned j = 0; j < ell; ++j) {
            uint64_t t = (c * (m - h[j] % m)) % m;
            prod[d - ell + j] = (prod[d - ell + j] + t) % m;
        }
        if (d == ell) break;
    }
    prod.resize(ell);
    return prod;
}

uint64_t inv_mod_prime(uint64_t a, uint64_t p) {
    // extended Euclid on integers
    int64_t t = 0, newt = 1;
    int64_t r = int64_t(p), newr = int64_t(a % p);
    while (newr != 0) {
        int64_t qq = r / newr;
        std::swap(t -= qq * newt, newt);
        std::swap(r -= qq * newr, newr);
    }
    if (r != 1) throw std::domain_error("element not invertible mod p");
    return uint64_t((t % int64_t(p) + int64_t(p)) % int64_t(p));
}

// Division with remainder over F_p; b must be nonzero.
void poly_divmod_fp(const Poly& a, const Poly& b, uint64_t p, Poly& quot, Poly& rem) {
    rem = poly_mod(a, p);
    unsigned db = poly_deg(b);
    quot.assign(a.size(), 0);
    uint64_t lead_inv = inv_mod_prime(b[db], p);
    for (size_t i = rem.size(); i-- > 0;) {
        if (i < db || rem[i] == 0) continue;
        uint64_t c = (rem[i] * lead_inv) % p;
        quot[i - db] = c;
        for (unsigned j = 0; j <= db; ++j) {
            uint64_t s = (c * b[j]) % p;
            rem[i - db + j] = (rem[i - db + j] + p - s) % p;
        }
    }
}

// Inverse of a modulo (h, p) over F_p via extended Euclid; a nonzero mod (h, p).
// Every Bezout coefficient that gets used has degree < deg h; the final unused
// one may spill one degree higher, so scratch buffers are sized 2*deg h.
Poly poly_invmod_fp(const Poly& a, const Poly& h, uint64_t p) {
    const size_t w = 2 * h.size();
    Poly r0 = poly_mod(h, p), r1 = poly_mod(a, p);
    r0.resize(w, 0);
    r1.resize(w, 0);
    Poly s0(w, 0), s1(w, 0);
    s1[0] = 1;
    while (!poly_is_zero(r1)) {
        Poly q, rem;
        poly_divmod_fp(r0, r1, p, q, rem);
        Poly t(2 * w, 0);
        for (size_t i = 0; i < w; ++i) {
            if (q.size() <= i || q[i] == 0) continue;
            for (size_t j = 0; j < w; ++j)
                t[i + j] = (t[i + j] + q[i] * s1[j]) % p;
        }
        Poly s2(w, 0);
        for (size_t i = 0; i < w; ++i) s2[i] = (s0[i] + p - t[i]) % p;
        r0 = r1;
        r1 = rem;
        r1.resize(w, 0);
        s0 = s1;
        s1 = std::move(s2);
    }
    if (poly_deg(r0) != 0 || r0[0] == 0) throw std::domain_error("not invertible in F_q");
    uint64_t c = inv_mod_prime(r0[0], p);
    Poly out(h.size() - 1, 0);
    for (size_t i = 0; i + 1 < h.size(); ++i) out[i] = (s0[i] * c) % p;
    return out;
}

// Irreducibility over F_p by trial division with all monic polys of degree <= ell/2.
bool poly_irreducible_fp(const Poly& h, uint64_t p) {
    unsigned ell = poly_deg(h);
    if (ell == 0) return false;
    for (unsigned d = 1; 2 * d <= ell; ++d) {
        uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (uint64_t code = 0; code < count; ++code) {
            Poly div(d + 1, 0);
            div[d] = 1;
            uint64_t c = code;
            for (unsigned i = 0; i < d; ++i) { div[i] = c % p; c /= p; }
            Poly q, rem;
            poly_divmod_fp(h, div, p, q, rem);
            if (poly_is_zero(rem)) return false;
        }
    }
    return true;
}

Poly default_modulus(uint64_t p, unsigned ell) {
    if (ell == 1) return Poly{0, 1};  // h(x) = x
    // lexicographically smallest monic irreducible of degree ell over F_p,
    // comparing coefficient vectors (c_0, c_1, ..., c_{ell-1})
    std::vector<uint64_t> c(ell, 0);
    while (true) {
        Poly h(ell + 1, 0);
        h[ell] = 1;
        for (unsigned i = 0; i < ell; ++i) h[i] = c[i];
        if (poly_irreducible_fp(h, p)) return h;
        // increment c as a base-p counter with c_{ell-1} fastest
        unsigned i = ell;
        while (i-- > 0) {
            if (++c[i] < p) break;
            c[i] = 0;
            if (i == 0) throw std::logic_error("no irreducible polynomial found");
        }
    }
}

}  // namespace

// ---- RingContext -----------------------------------------------------------

RingContext::RingContext(uint64_t p, unsigned n, unsigned ell,
                         std::optional<std::vector<uint64_t>> h)
    : p_(p), n_(n), ell_(ell) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (ell < 1) throw std::invalid_argument("ell must be >= 1");
    pn_ = checked_pow(p, n, kSizeCap);
    q_ = checked_pow(p, ell, kSizeCap);
    uint64_t size = checked_pow(pn_, ell, kSizeCap);
    size_ = uint32_t(size);

    if (h) {
        h_ = *h;
        if (h_.size() != ell + 1u) throw std::invalid_argument("h must have degree ell");
        if (h_[ell] != 1) throw std::invalid_argument("h must be monic");
        for (auto c : h_)
            if (c >= pn_) throw std::invalid_argument("h coefficient out of range [0, p^n)");
        if (ell > 1 && !poly_irreducible_fp(poly_mod(h_, p), p))
            throw std::invalid_argument("h is reducible mod p");
    } else {
        h_ = default_modulus(p, ell);
    }

    radix_.assign(ell_, 1);
    for (unsigned i = ell_; i-- > 1;) radix_[i - 1] = radix_[i] * pn_;

    one_ = encode([&] {
        std::vector<uint64_t> c(ell_, 0);
        c[0] = 1;
        return c;
    }());

    ppow_.assign(n_, 0);
    uint64_t pe = 1;
    for (unsigned e = 0; e < n_; ++e) {
        std::vector<uint64_t> c(ell_, 0);
        c[0] = pe;
        ppow_[e] = encode(c);
        pe *= p_;
    }

    build_teichmuller();
    if (size_ <= kTableCap) build_tables();
}

uint32_t RingContext::encode(const std::vector<uint64_t>& coeffs) const {
    if (coeffs.size() != ell_) throw std::invalid_argument("coefficient count != ell");
    uint64_t idx = 0;
    for (unsigned i = 0; i < ell_; ++i) {
        if (coeffs[i] >= pn_) throw std::invalid_argument("coefficient out of range [0, p^n)");
        idx += coeffs[i] * radix_[i];
    }
    return uint32_t(idx);
}

std::vector<uint64_t> RingContext::decode(uint32_t idx) const {
    std::vector<uint64_t> c(ell_);
    uint64_t v = idx;
    for (unsigned i = 0; i < ell_; ++i) {
        c[i] = v / radix_[i];
        v %= radix_[i];
    }
    return c;
}

RingElement RingContext::from_coeffs(const std::vector<uint64_t>& coeffs) const {
    return element(encode(coeffs));
}

RingElement RingContext::from_int(uint64_t v) const {
    std::vector<uint64_t> c(ell_, 0);
    c[0] = v % pn_;
    return from_coeffs(c);
}

uint32_t RingContext::add_slow(uint32_t a, uint32_t b) const {
    auto ca = decode(a), cb = decode(b);
    for (unsigned i = 0; i < ell_; ++i) ca[i] = (ca[i] + cb[i]) % pn_;
    return encode(ca);
}

uint32_t RingContext::neg_slow(uint32_t a) const {
    auto c = decode(a);
    for (auto& x : c) x = (pn_ - x) % pn_;
    return encode(c);
}

uint32_t RingContext::mul_slow(uint32_t a, uint32_t b) const {
    return encode(poly_mulmod(decode(a), decode(b), h_, ell_, pn_));
}

unsigned RingContext::val_slow(uint32_t a) const {
    if (a == 0) return n_;
    auto c = decode(a);
    unsigned best = n_;
    for (auto x : c) {
        if (x == 0) continue;
        unsigned v = 0;
        while (x % p_ == 0) { x /= p_; ++v; }
        best = std::min(best, v);
    }
    return best;
}

uint32_t RingContext::unit_part(uint32_t a) const {
    unsigned r = val(a);
    if (r == 0) return a;
    if (r >= n_) throw std::domain_error("zero has no unit part");
    return shift_down(a, r);
}

uint32_t RingContext::shift_down(uint32_t a, unsigned s) const {
    if (s == 0) return a;
    auto c = decode(a);
    uint64_t ps = 1;
    for (unsigned i = 0; i < s; ++i) ps *= p_;
    for (auto& x : c) {
        if (x % ps != 0) throw std::logic_error("shift_down: valuation too small");
        x /= ps;
    }
    return encode(c);
}

uint32_t RingContext::inv_slow(uint32_t a) const {
    if (!is_unit(a)) throw std::domain_error("not a unit: element lies in <p>");
    // Hensel lift of the F_q inverse (extended Euclid over F_p), Newton steps
    Poly az = decode(a);
    Poly z0 = poly_invmod_fp(az, h_, p_);
    z0.resize(ell_, 0);
    uint32_t z = encode(z0);
    uint32_t two = add(one_, one_);
    for (unsigned it = 0; it <= n_ + 2; ++it) {
        uint32_t az_i = mul(a, z);
        if (az_i == one_) return z;
        z = mul(z, sub(two, az_i));
    }
    throw std::logic_error("inverse lift failed to converge");
}

uint32_t RingContext::inv(uint32_t a) const {
    if (!inv_.empty()) {
        uint32_t r = inv_[a];
        if (r == UINT32_MAX) throw std::domain_error("not a unit: element lies in <p>");
        return r;
    }
    return inv_slow(a);
}

uint32_t RingContext::teichmuller_of(uint32_t a) const {
    if (!teich_of_.empty()) return teich_of_[a];
    // canonical lift of the residue: coefficients mod p, then y -> y^q, n-1 times
    auto c = decode(a);
    for (auto& x : c) x %= p_;
    uint32_t y = encode(c);
    for (unsigned it = 0; it + 1 < n_; ++it) {
        uint32_t yq = y;
        for (uint64_t e = 1; e < q_; ++e) yq = mul(yq, y);
        y = yq;
    }
    return y;
}

void RingContext::build_teichmuller() {
    // fixed points of t -> t^q, one per residue class
    std::vector<uint32_t> reps;
    reps.reserve(q_);
    // enumerate residue classes: coefficient vectors over [0,p)
    std::vector<uint64_t> c(ell_, 0);
    while (true) {
        uint32_t y = encode(c);
        for (unsigned it = 0; it + 1 < n_; ++it) {
            uint32_t yq = y;
            for (uint64_t e = 1; e < q_; ++e) yq = mul_slow(yq, y);
            y = yq;
        }
        reps.push_back(y);
        unsigned i = ell_;
        bool done = true;
        while (i-- > 0) {
            if (++c[i] < p_) { done = false; break; }
            c[i] = 0;
        }
        if (done) break;
    }
    std::sort(reps.begin(), reps.end());
    // order as {0, 1, xi, xi^2, ...} with xi the lex-least generator of T\{0}
    teich_.clear();
    teich_.push_back(0);
    if (q_ == 2) {
        teich_.push_back(one_);
        return;
    }
    uint32_t xi = 0;
    for (uint32_t t : reps) {
        if (t == 0 || t == one_) continue;
        uint64_t ord = 1;
        uint32_t acc = t;
        while (acc != one_) { acc = mul_slow(acc, t); ++ord; }
        if (ord == q_ - 1) { xi = t; break; }
    }
    if (xi == 0 && q_ > 2) throw std::logic_error("no Teichmuller generator found");
    teich_.push_back(one_);
    uint32_t acc = xi;
    for (uint64_t e = 1; e + 1 < q_; ++e) {
        teich_.push_back(acc);
        acc = mul_slow(acc, xi);
    }
}

void RingContext::build_tables() {
    size_t s = size_;
    add_.resize(s * s);
    mul_.resize(s * s);
    neg_.resize(s);
    val_.resize(s);
    inv_.resize(s);
    teich_of_.resize(s);
    for (size_t a = 0; a < s; ++a) {
        neg_[a] = neg_slow(uint32_t(a));
        val_[a] = uint8_t(val_slow(uint32_t(a)));
        for (size_t b = 0; b < s; ++b) {
            add_[a * s + b] = add_slow(uint32_t(a), uint32_t(b));
            mul_[a * s + b] = mul_slow(uint32_t(a), uint32_t(b));
        }
    }
    for (size_t a = 0; a < s; ++a)
        inv_[a] = (val_[a] == 0) ? inv_slow(uint32_t(a)) : UINT32_MAX;
    for (size_t a = 0; a < s; ++a) {
        auto c = decode(uint32_t(a));
        for (auto& x : c) x %= p_;
        uint32_t y = encode(c);
        for (unsigned it = 0; it + 1 < n_; ++it) {
            uint32_t yq = y;
            for (uint64_t e = 1; e < q_; ++e) yq = mul_[size_t(yq) * s + y];
            y = yq;
        }
        teich_of_[a] = y;
    }
}

std::vector<RingElement> RingContext::enumerate(EnumKind kind, unsigned r) const {
    std::vector<RingElement> out;
    switch (kind) {
        case EnumKind::all:
            out.reserve(size_);
            for (uint32_t i = 0; i < size_; ++i) out.push_back(element(i));
            break;
        case EnumKind::units:
            for (uint32_t i = 0; i < size_; ++i)
                if (val(i) == 0) out.push_back(element(i));
            break;
        case EnumKind::zero_divisors:  // nonzero zero divisors
            for (uint32_t i = 1; i < size_; ++i)
                if (val(i) > 0) out.push_back(element(i));
            break;
        case EnumKind::valuation_exactly:
            if (r < 1 || r > n_ - 1)
                throw std::invalid_argument("valuation class r out of range [1, n-1]");
            for (uint32_t i = 0; i < size_; ++i)
                if (val(i) == r) out.push_back(element(i));
            break;
        case EnumKind::teichmuller:
            for (uint32_t t : teich_) out.push_back(element(t));
            break;
    }
    return out;
}

std::string RingContext::descriptor() const {
    std::ostringstream os;
    os << "GR p=" << p_ << " n=" << n_ << " ell=" << ell_;
    if (ell_ > 1) {
        os << " h=";
        for (unsigned i = 0; i <= ell_; ++i) {
            if (i) os << ',';
            os << h_[i];
        }
    }
    return os.str();
}

RingContext::Spec RingContext::parse_descriptor_spec(const std::string& line) {
    std::istringstream is(line);
    std::string tag;
    is >> tag;
    if (tag != "GR") throw std::runtime_error("bad ring descriptor: " + line);
    Spec spec{0, 0, 0, std::nullopt};
    std::string tok;
    while (is >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw std::runtime_error("bad ring token: " + tok);
        std::string key = tok.substr(0, eq), value = tok.substr(eq + 1);
        if (key == "p") spec.p = std::stoull(value);
        else if (key == "n") spec.n = unsigned(std::stoul(value));
        else if (key == "ell") spec.ell = unsigned(std::stoul(value));
        else if (key == "h") {
            std::vector<uint64_t> coeffs;
            std::istringstream cs(value);
            std::string num;
            while (std::getline(cs, num, ',')) coeffs.push_back(std::stoull(num));
            spec.h = std::move(coeffs);
        } else {
            throw std::runtime_error("bad ring key: " + key);
        }
    }
    if (spec.p == 0 || spec.n == 0 || spec.ell == 0)
        throw std::runtime_error("incomplete ring descriptor");
    return spec;
}

RingContext RingContext::parse_descriptor(const std::string& line) {
    Spec spec = parse_descriptor_spec(line);
    return RingContext(spec.p, spec.n, spec.ell, std::move(spec.h));
}

// ---- RingElement -----------------------------------------------------------

std::vector<uint64_t> RingElement::coeffs() const { return ctx_->decode(idx_); }
bool RingElement::is_unit() const { return ctx_->is_unit(idx_); }
unsigned RingElement::valuation_exponent() const { return ctx_->val(idx_); }

ValuationForm RingElement::valuation() const {
    ValuationForm f;
    f.r = ctx_->val(idx_);
    if (f.r < ctx_->n()) f.unit_part = ctx_->element(ctx_->unit_part(idx_));
    return f;
}

RingElement RingElement::inverse() const { return ctx_->element(ctx_->inv(idx_)); }

std::vector<RingElement> RingElement::teichmuller_digits() const {
    std::vector<RingElement> digits;
    digits.reserve(ctx_->n());
    uint32_t rest = idx_;
    for (unsigned i = 0; i < ctx_->n(); ++i) {
        uint32_t d = ctx_->teichmuller_of(rest);
        digits.push_back(ctx_->element(d));
        rest = ctx_->shift_down(ctx_->sub(rest, d), 1);
    }
    return digits;
}

namespace {
void check_same_ctx(const RingElement& a, const RingElement& b) {
    if (&a.context() != &b.context())
        throw std::invalid_argument("ring elements from mismatched contexts");
}
}  // namespace

RingElement RingElement::operator+(const RingElement& o) const {
    check_same_ctx(*this, o);
    return ctx_->element(ctx_->add(idx_, o.idx_));
}
RingElement RingElement::operator-(const RingElement& o) const {
    check_same_ctx(*this, o);
    return ctx_->element(ctx_->sub(idx_, o.idx_));
}
RingElement RingElement::operator*(const RingElement& o) const {
    check_same_ctx(*this, o);
    return ctx_->element(ctx_->mul(idx_, o.idx_));
}
RingElement RingElement::operator-() const { return ctx_->element(ctx_->neg(idx_)); }

std::string RingElement::to_string() const {
    auto c = coeffs();
    std::ostringstream os;
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) os << ',';
        os << c[i];
    }
    return os.str();
}

RingContext make_ring(uint64_t p, unsigned n, unsigned ell,
                      std::optional<std::vector<uint64_t>> h) {
    return RingContext(p, n, ell, std::move(h));
}

RingElement arith(const RingElement& a, const RingElement& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
    }
    throw std::invalid_argument("unknown arithmetic op");
}

}  // namespace grmin
