/*
 * Copyright 2026 The bsw authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <memory>
#include <unordered_map>
#include <vector>

#include "bsw/common.hpp"

namespace bsw {

/// F_{p^s} with exp/log tables over a fixed primitive modulus.
///
/// Elements are integers in [0, q): the base-p digit expansion of an element
/// gives its coordinates in the polynomial basis {1, x, ..., x^{s-1}} modulo
/// the field's primitive polynomial. The class x is always primitive (the
/// modulus is chosen as the first primitive polynomial in coefficient-counter
/// order), so exp_table[i] = x^i and results are identical across runs.
class FieldTable {
   public:
    int p = 0;  // prime characteristic
    int s = 0;  // extension degree over F_p
    int q = 0;  // p^s
    std::vector<int> modulus;    // monic primitive polynomial, ascending, size s+1
    std::vector<int> exp_table;  // size q-1, exp_table[i] = alpha^i
    std::vector<int> log_table;  // size q, log_table[0] = -1

    int alpha() const { return exp_table[1 % (q - 1)]; }

    int add(int a, int b) const {
        if (s == 1) return (a + b) % p;
        if (!add_tbl_.empty()) return add_tbl_[static_cast<size_t>(a) * q + b];
        return add_digits(a, b);
    }
    int neg(int a) const {
        if (s == 1) return (p - a) % p;
        return neg_digits(a);
    }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int mul(int a, int b) const {
        if (a == 0 || b == 0) return 0;
        int e = log_table[a] + log_table[b];
        if (e >= q - 1) e -= q - 1;
        return exp_table[e];
    }
    int inv(int a) const {
        if (a == 0) fail(errc::zero_element, "inverse of zero");
        return exp_table[(q - 1 - log_table[a]) % (q - 1)];
    }
    int pow(int a, i64 e) const {
        if (a == 0) {
            if (e == 0) return 1;
            if (e < 0) fail(errc::zero_element, "negative power of zero");
            return 0;
        }
        i64 m = q - 1;
        i64 le = (static_cast<i64>(log_table[a]) * (e % m)) % m;
        if (le < 0) le += m;
        return exp_table[le];
    }
    /// Element of multiplicative order d; requires d | q-1.
    int element_of_order(i64 d) const {
        if ((q - 1) % d != 0) fail(errc::internal_error, "order does not divide q-1");
        return exp_table[(q - 1) / d % (q - 1 == 0 ? 1 : q - 1)];
    }

    int add_digits(int a, int b) const;
    int neg_digits(int a) const;

    void build_add_table();

   private:
    std::vector<int> add_tbl_;  // q*q when q small enough to afford it
};

/// Builds F_{p^s}. The modulus is the primitive polynomial whose non-leading
/// coefficient counter (c_0 + c_1 p + ... ) is smallest, found by attempting
/// to generate the full multiplicative group with x.
FieldTable build_field(int p, int s, i64 cap = i64(1) << 20);

/// Embedding of F_q into F_Q (same characteristic, s_small | s_big), fixed by
/// the smallest-log root of the small field's modulus inside the big field.
class Subfield {
   public:
    const FieldTable* big = nullptr;
    const FieldTable* small = nullptr;
    int m = 0;  // [F_Q : F_q]

    static Subfield make(const FieldTable& big, const FieldTable& small);

    int to_big(int a) const { return to_big_[a]; }
    int to_small(int x) const;

    /// Tr_{Q/q}(x) as an element of the big field (lies in the subfield).
    int trace_in_big(int x) const;
    /// Tr_{Q/q}(x) mapped into the small field's encoding.
    int trace(int x) const { return to_small(trace_in_big(x)); }

   private:
    std::vector<int> to_big_;
    std::unordered_map<int, int> to_small_;
    std::vector<i64> frob_exps_;  // q^j mod (Q-1) for j < m
};

/// Process-wide cache of field tables and embeddings; tables are immutable
/// once built, so lookups after construction are safe from any thread.
class FieldCache {
   public:
    static FieldCache& global();

    const FieldTable& field(int p, int s);
    /// Field of size q = p^s given q (q must be a prime power).
    const FieldTable& field_of_size(i64 q);
    const Subfield& subfield(const FieldTable& big, const FieldTable& small);

    i64 cap() const { return cap_; }
    void set_cap(i64 c) { cap_ = c; }

   private:
    i64 cap_ = i64(1) << 20;
    std::unordered_map<u64, std::unique_ptr<FieldTable>> fields_;
    std::unordered_map<u64, std::unique_ptr<Subfield>> subfields_;
};

/// Splits q into (p, s); errors if q is not a prime power.
std::pair<int, int> prime_power_split(i64 q);

/// Dense polynomial over a FieldTable, coefficients ascending, no trailing
/// zeros (the zero polynomial has an empty coefficient vector).
struct Polynomial {
    const FieldTable* field = nullptr;
    std::vector<int> c;

    Polynomial() = default;
    Polynomial(const FieldTable& f, std::vector<int> coeffs);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool is_one() const { return c.size() == 1 && c[0] == 1; }
    bool is_monic() const { return !c.empty() && c.back() == 1; }
    int coeff(int i) const { return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : 0; }
    void normalize();

    bool operator==(const Polynomial& o) const { return c == o.c; }
};

Polynomial poly_zero(const FieldTable& f);
Polynomial poly_one(const FieldTable& f);
Polynomial poly_x(const FieldTable& f);
Polynomial xn_minus_1(const FieldTable& f, int n);

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_sub(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Polynomial poly_scale(const Polynomial& a, int c);
/// Quotient and remainder; divisor must be nonzero.
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b);
Polynomial poly_mod(const Polynomial& a, const Polynomial& b);
Polynomial poly_monic(const Polynomial& a);
Polynomial poly_gcd(Polynomial a, Polynomial b);
int poly_eval(const Polynomial& a, int x);
/// a^e mod f by square-and-multiply.
Polynomial poly_pow_mod(const Polynomial& a, u64 e, const Polynomial& f);
/// Reciprocal polynomial x^deg(f) f(1/x), normalized monic when f(0) != 0.
Polynomial poly_reciprocal(const Polynomial& a);

bool poly_is_irreducible(const Polynomial& f);

/// per(f): least t with f | x^t - 1. Requires f(0) != 0 and deg f >= 1.
i64 poly_order(const Polynomial& f);

struct CyclotomicCoset {
    i64 n = 0;
    i64 q = 0;
    i64 leader = 0;
    std::vector<i64> members;  // generation order: s, sq, sq^2, ... mod n
};

/// Full partition of Z_n into q-cyclotomic cosets, ordered by leader.
std::vector<CyclotomicCoset> cyclotomic_cosets(i64 n, i64 q);

struct CosetFactor {
    CyclotomicCoset coset;
    Polynomial f;  // minimal polynomial of zeta^leader over the base field
    i64 period;    // per(f) = n / gcd(n, leader)
};

/// Irreducible monic factors of x^n - 1 over the base field, one per
/// q-cyclotomic coset, ordered by coset leader. The splitting field is
/// realized in polynomial representation, so no table cap applies to it.
std::vector<CosetFactor> factor_xn_minus_1_detailed(const FieldTable& field, int n);
std::vector<Polynomial> factor_xn_minus_1(const FieldTable& field, int n);

/// Minimal polynomial over F_q (`small`) of an element of F_Q (`big`).
Polynomial minimal_polynomial(const FieldTable& big, int a, const FieldTable& small);

/// Tr_{Q/q} of a big-field element, returned in the small field's encoding.
int trace(const FieldTable& big, int a, const FieldTable& small);

}  // namespace bsw
