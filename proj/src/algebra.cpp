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

#include "bsw/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

namespace bsw {

int FieldTable::add_digits(int a, int b) const {
    int r = 0, pw = 1;
    for (int j = 0; j < s; ++j) {
        int v = (a % p + b % p) % p;
        r += v * pw;
        pw *= p;
        a /= p;
        b /= p;
    }
    return r;
}

int FieldTable::neg_digits(int a) const {
    int r = 0, pw = 1;
    for (int j = 0; j < s; ++j) {
        r += ((p - a % p) % p) * pw;
        pw *= p;
        a /= p;
    }
    return r;
}

void FieldTable::build_add_table() {
    if (q > 256 || s == 1) return;
    add_tbl_.resize(static_cast<size_t>(q) * q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) add_tbl_[static_cast<size_t>(a) * q + b] = add_digits(a, b);
}

FieldTable build_field(int p, int s, i64 cap) {
    if (p < 2 || !is_prime(static_cast<u64>(p))) fail(errc::non_prime, "characteristic must be prime");
    if (s < 1) fail(errc::parse_error, "extension degree must be positive");
    i64 q64 = 1;
    for (int i = 0; i < s; ++i) {
        q64 *= p;
        if (q64 > cap) fail(errc::cap_exceeded, "field size p^s exceeds the table cap");
    }
    const int q = static_cast<int>(q64);

    FieldTable f;
    f.p = p;
    f.s = s;
    f.q = q;

    i64 pw_top = 1;
    for (int i = 0; i < s - 1; ++i) pw_top *= p;

    // multiply by x modulo the candidate (monic, lower coefficients `cand`)
    std::vector<int> cand(s);
    auto mul_by_x = [&](int e) -> int {
        if (s == 1) return static_cast<int>((static_cast<i64>(e) * ((p - cand[0]) % p)) % p);
        int hi = static_cast<int>(e / pw_top);
        i64 t = (e % pw_top) * static_cast<i64>(p);
        if (hi == 0) return static_cast<int>(t);
        int r = 0, pw = 1;
        for (int j = 0; j < s; ++j) {
            i64 dj = (t % p - static_cast<i64>(hi) * cand[j]) % p;
            if (dj < 0) dj += p;
            r += static_cast<int>(dj) * pw;
            pw *= p;
            t /= p;
        }
        return r;
    };

    std::vector<int> exp;
    exp.reserve(q - 1);
    for (i64 m = 1; m < q; ++m) {
        if (m % p == 0) continue;  // constant term must be nonzero
        i64 t = m;
        for (int j = 0; j < s; ++j) {
            cand[j] = static_cast<int>(t % p);
            t /= p;
        }
        // x generates the full multiplicative group iff the first return to 1
        // happens at step exactly q-1; that also certifies irreducibility.
        exp.clear();
        exp.push_back(1);
        int v = 1;
        bool ok = true;
        for (int i = 1; i < q - 1; ++i) {
            v = mul_by_x(v);
            if (v == 1) {
                ok = false;
                break;
            }
            exp.push_back(v);
        }
        if (!ok || mul_by_x(v) != 1) continue;
        f.modulus.assign(cand.begin(), cand.end());
        f.modulus.push_back(1);
        f.exp_table = exp;
        f.log_table.assign(q, -1);
        for (int i = 0; i < q - 1; ++i) f.log_table[f.exp_table[i]] = i;
        f.build_add_table();
        return f;
    }
    fail(errc::internal_error, "no primitive polynomial found");
}

Subfield Subfield::make(const FieldTable& big, const FieldTable& small) {
    if (big.p != small.p || big.s % small.s != 0)
        fail(errc::not_a_subfield, "subfield sizes are incompatible");
    Subfield e;
    e.big = &big;
    e.small = &small;
    e.m = big.s / small.s;

    const int q = small.q;
    const i64 order = big.q - 1;
    const i64 step = order / (q - 1);

    // root of the small modulus among the subfield elements, smallest log first
    int y = -1;
    for (i64 i = 0; i < q - 1; ++i) {
        int x = big.exp_table[i * step % order];
        int v = 0;
        for (int j = small.s; j >= 0; --j) v = big.add(big.mul(v, x), small.modulus[j]);
        if (v == 0) {
            y = x;
            break;
        }
    }
    if (y < 0) fail(errc::internal_error, "small-field modulus has no root in the big field");

    e.to_big_.assign(q, 0);
    for (int a = 0; a < q; ++a) {
        int v = 0, t = a, pw = 1;
        (void)pw;
        // evaluate the digit polynomial of a at y
        std::vector<int> digits(small.s);
        for (int j = 0; j < small.s; ++j) {
            digits[j] = t % small.p;
            t /= small.p;
        }
        for (int j = small.s - 1; j >= 0; --j) v = big.add(big.mul(v, y), digits[j]);
        e.to_big_[a] = v;
        e.to_small_.emplace(v, a);
    }
    if (static_cast<int>(e.to_small_.size()) != q) fail(errc::internal_error, "subfield embedding not injective");

    e.frob_exps_.resize(e.m);
    for (int j = 0; j < e.m; ++j) e.frob_exps_[j] = powmod_u64(static_cast<u64>(q), static_cast<u64>(j), static_cast<u64>(order));
    return e;
}

int Subfield::to_small(int x) const {
    auto it = to_small_.find(x);
    if (it == to_small_.end()) fail(errc::not_a_subfield, "element does not lie in the subfield");
    return it->second;
}

int Subfield::trace_in_big(int x) const {
    if (x == 0) return 0;
    const i64 order = big->q - 1;
    const i64 lx = big->log_table[x];
    int t = 0;
    for (int j = 0; j < m; ++j) t = big->add(t, big->exp_table[static_cast<size_t>(lx * frob_exps_[j] % order)]);
    return t;
}

FieldCache& FieldCache::global() {
    static FieldCache c;
    return c;
}

namespace {
std::mutex g_cache_mutex;
}

const FieldTable& FieldCache::field(int p, int s) {
    std::lock_guard<std::mutex> lk(g_cache_mutex);
    u64 key = static_cast<u64>(p) * 64 + static_cast<u64>(s);
    auto it = fields_.find(key);
    if (it == fields_.end()) {
        auto ft = std::make_unique<FieldTable>(build_field(p, s, cap_));
        it = fields_.emplace(key, std::move(ft)).first;
    }
    return *it->second;
}

const FieldTable& FieldCache::field_of_size(i64 q) {
    auto [p, s] = prime_power_split(q);
    return field(p, s);
}

const Subfield& FieldCache::subfield(const FieldTable& big, const FieldTable& small) {
    std::lock_guard<std::mutex> lk(g_cache_mutex);
    u64 key = (static_cast<u64>(big.p) << 24) | (static_cast<u64>(big.s) << 12) | static_cast<u64>(small.s);
    auto it = subfields_.find(key);
    if (it == subfields_.end()) {
        auto sf = std::make_unique<Subfield>(Subfield::make(big, small));
        it = subfields_.emplace(key, std::move(sf)).first;
    }
    return *it->second;
}

std::pair<int, int> prime_power_split(i64 q) {
    if (q < 2) fail(errc::parse_error, "field size must be at least 2");
    auto fac = factorize(static_cast<u64>(q));
    if (fac.size() != 1) fail(errc::non_prime, "field size must be a prime power");
    return {static_cast<int>(fac[0].first), fac[0].second};
}

Polynomial::Polynomial(const FieldTable& f, std::vector<int> coeffs) : field(&f), c(std::move(coeffs)) { normalize(); }

void Polynomial::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Polynomial poly_zero(const FieldTable& f) { return Polynomial(f, {}); }
Polynomial poly_one(const FieldTable& f) { return Polynomial(f, {1}); }
Polynomial poly_x(const FieldTable& f) { return Polynomial(f, {0, 1}); }

Polynomial xn_minus_1(const FieldTable& f, int n) {
    std::vector<int> c(n + 1, 0);
    c[0] = f.neg(1);
    c[n] = 1;
    return Polynomial(f, std::move(c));
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
    const FieldTable& f = *a.field;
    std::vector<int> c(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = f.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return Polynomial(f, std::move(c));
}

Polynomial poly_sub(const Polynomial& a, const Polynomial& b) {
    const FieldTable& f = *a.field;
    std::vector<int> c(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = f.sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return Polynomial(f, std::move(c));
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
    const FieldTable& f = *a.field;
    if (a.is_zero() || b.is_zero()) return poly_zero(f);
    std::vector<int> c(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) {
            if (b.c[j] == 0) continue;
            c[i + j] = f.add(c[i + j], f.mul(a.c[i], b.c[j]));
        }
    }
    return Polynomial(f, std::move(c));
}

Polynomial poly_scale(const Polynomial& a, int k) {
    const FieldTable& f = *a.field;
    std::vector<int> c(a.c.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = f.mul(a.c[i], k);
    return Polynomial(f, std::move(c));
}

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b) {
    const FieldTable& f = *a.field;
    if (b.is_zero()) fail(errc::internal_error, "polynomial division by zero");
    if (a.degree() < b.degree()) return {poly_zero(f), a};
    std::vector<int> rem = a.c;
    std::vector<int> quo(a.degree() - b.degree() + 1, 0);
    const int inv_lead = f.inv(b.c.back());
    for (int i = a.degree(); i >= b.degree(); --i) {
        int coef = rem[i];
        if (coef == 0) continue;
        int qc = f.mul(coef, inv_lead);
        quo[i - b.degree()] = qc;
        for (int j = 0; j <= b.degree(); ++j)
            rem[i - b.degree() + j] = f.sub(rem[i - b.degree() + j], f.mul(qc, b.c[j]));
    }
    return {Polynomial(f, std::move(quo)), Polynomial(f, std::move(rem))};
}

Polynomial poly_mod(const Polynomial& a, const Polynomial& b) { return poly_divmod(a, b).second; }

Polynomial poly_monic(const Polynomial& a) {
    if (a.is_zero() || a.is_monic()) return a;
    return poly_scale(a, a.field->inv(a.c.back()));
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a);
}

int poly_eval(const Polynomial& a, int x) {
    const FieldTable& f = *a.field;
    int v = 0;
    for (int i = a.degree(); i >= 0; --i) v = f.add(f.mul(v, x), a.c[i]);
    return v;
}

Polynomial poly_pow_mod(const Polynomial& a, u64 e, const Polynomial& f) {
    Polynomial base = poly_mod(a, f);
    Polynomial r = poly_one(*a.field);
    while (e) {
        if (e & 1) r = poly_mod(poly_mul(r, base), f);
        base = poly_mod(poly_mul(base, base), f);
        e >>= 1;
    }
    return r;
}

Polynomial poly_reciprocal(const Polynomial& a) {
    std::vector<int> c(a.c.rbegin(), a.c.rend());
    Polynomial r(*a.field, std::move(c));
    return poly_monic(r);
}

bool poly_is_irreducible(const Polynomial& f0) {
    const FieldTable& fl = *f0.field;
    Polynomial f = poly_monic(f0);
    const int d = f.degree();
    if (d <= 0) return false;
    if (d == 1) return true;
    // Frobenius tower: h_j = x^{q^j} mod f
    Polynomial x = poly_x(fl);
    Polynomial h = x;
    std::vector<int> checkpoints;
    for (auto [r, e] : factorize(static_cast<u64>(d))) {
        (void)e;
        checkpoints.push_back(d / static_cast<int>(r));
    }
    for (int j = 1; j <= d; ++j) {
        h = poly_pow_mod(h, static_cast<u64>(fl.q), f);
        if (std::find(checkpoints.begin(), checkpoints.end(), j) != checkpoints.end()) {
            Polynomial g = poly_gcd(poly_sub(h, x), f);
            if (!g.is_one()) return false;
        }
        if (j == d && !(poly_sub(h, x).is_zero())) return false;
    }
    return true;
}

i64 poly_order(const Polynomial& f0) {
    if (f0.degree() < 1) fail(errc::zero_constant_term, "order needs a nonconstant polynomial");
    if (f0.coeff(0) == 0) fail(errc::zero_constant_term, "order undefined when x divides f");
    const FieldTable& fl = *f0.field;
    Polynomial f = poly_monic(f0);
    const int d = f.degree();

    if (poly_is_irreducible(f) && d * std::log2(static_cast<double>(fl.q)) < 62.5) {
        u64 group = static_cast<u64>(checked_pow(fl.q, d)) - 1;
        u64 t = group;
        Polynomial x = poly_x(fl);
        for (auto [r, e] : factorize(group)) {
            (void)e;
            while (t % r == 0 && poly_pow_mod(x, t / r, f).is_one()) t /= r;
        }
        return static_cast<i64>(t);
    }

    // reducible (or oversized) input: walk successive powers of x
    const i64 limit = i64(1) << 24;
    Polynomial g = poly_mod(poly_x(fl), f);
    for (i64 t = 1; t <= limit; ++t) {
        if (g.is_one()) return t;
        g = poly_mod(poly_mul(g, poly_x(fl)), f);
    }
    fail(errc::cap_exceeded, "polynomial order exceeds search limit");
}

std::vector<CyclotomicCoset> cyclotomic_cosets(i64 n, i64 q) {
    if (n < 1) fail(errc::parse_error, "modulus must be positive");
    if (n == 1) return {CyclotomicCoset{1, q, 0, {0}}};
    if (std::gcd(n, q) != 1) fail(errc::not_coprime, "gcd(n, q) must be 1");
    const i64 qm = q % n;
    std::vector<char> seen(n, 0);
    std::vector<CyclotomicCoset> out;
    for (i64 s = 0; s < n; ++s) {
        if (seen[s]) continue;
        CyclotomicCoset cs{n, q, s, {}};
        i64 v = s;
        do {
            cs.members.push_back(v);
            seen[v] = 1;
            v = v * qm % n;
        } while (v != s);
        out.push_back(std::move(cs));
    }
    return out;
}

namespace {

/// Splitting-field arithmetic in polynomial representation over a FieldTable;
/// no exp/log tables, so the extension degree is bounded only by time.
struct Ext {
    const FieldTable* base;
    int deg;
    std::vector<int> mod;  // monic ascending, size deg+1
    using El = std::vector<int>;

    El zero() const { return El(deg, 0); }
    El one() const {
        El e(deg, 0);
        e[0] = 1;
        return e;
    }
    El embed(int c) const {
        El e(deg, 0);
        e[0] = c;
        return e;
    }
    bool is_one(const El& a) const {
        if (a[0] != 1) return false;
        for (int i = 1; i < deg; ++i)
            if (a[i]) return false;
        return true;
    }
    bool is_base(const El& a) const {
        for (int i = 1; i < deg; ++i)
            if (a[i]) return false;
        return true;
    }
    El add(const El& a, const El& b) const {
        El r(deg);
        for (int i = 0; i < deg; ++i) r[i] = base->add(a[i], b[i]);
        return r;
    }
    El sub(const El& a, const El& b) const {
        El r(deg);
        for (int i = 0; i < deg; ++i) r[i] = base->sub(a[i], b[i]);
        return r;
    }
    El mul(const El& a, const El& b) const {
        std::vector<int> t(2 * deg - 1, 0);
        for (int i = 0; i < deg; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j < deg; ++j) {
                if (b[j] == 0) continue;
                t[i + j] = base->add(t[i + j], base->mul(a[i], b[j]));
            }
        }
        for (int i = 2 * deg - 2; i >= deg; --i) {
            int c = t[i];
            if (c == 0) continue;
            t[i] = 0;
            for (int j = 0; j < deg; ++j) t[i - deg + j] = base->sub(t[i - deg + j], base->mul(c, mod[j]));
        }
        return El(t.begin(), t.begin() + deg);
    }
    El pow(El a, u64 e) const {
        El r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    El from_counter(u64 c) const {
        El e(deg, 0);
        for (int i = 0; i < deg && c; ++i) {
            e[i] = static_cast<int>(c % base->q);
            c /= base->q;
        }
        return e;
    }
};

Polynomial find_irreducible(const FieldTable& f, int d) {
    if (d < 2) fail(errc::internal_error, "extension modulus search needs degree >= 2");
    for (u64 m = 1;; ++m) {
        if (m % f.q == 0) continue;
        std::vector<int> c(d + 1, 0);
        u64 t = m;
        for (int j = 0; j < d && t; ++j) {
            c[j] = static_cast<int>(t % f.q);
            t /= f.q;
        }
        if (t) fail(errc::internal_error, "no irreducible polynomial found");
        c[d] = 1;
        Polynomial cand(f, std::move(c));
        if (poly_is_irreducible(cand)) return cand;
    }
}

}  // namespace

std::vector<CosetFactor> factor_xn_minus_1_detailed(const FieldTable& field, int n) {
    if (n < 1) fail(errc::parse_error, "length must be positive");
    if (n == 1) {
        CosetFactor cf;
        cf.coset = CyclotomicCoset{1, field.q, 0, {0}};
        cf.f = Polynomial(field, {field.neg(1), 1});
        cf.period = 1;
        return {cf};
    }
    if (std::gcd(static_cast<i64>(n), static_cast<i64>(field.q)) != 1)
        fail(errc::not_coprime, "gcd(n, q) must be 1 to factor x^n - 1");

    auto cosets = cyclotomic_cosets(n, field.q);
    const i64 m0 = static_cast<i64>(ord_mod(static_cast<u64>(field.q), static_cast<u64>(n)));
    std::vector<CosetFactor> out;

    if (m0 == 1) {
        // all n-th roots of unity already live in the base field
        const int zeta = field.exp_table[(field.q - 1) / n % (field.q - 1)];
        for (auto& cs : cosets) {
            CosetFactor cf;
            cf.coset = cs;
            cf.f = Polynomial(field, {field.neg(field.pow(zeta, cs.leader)), 1});
            cf.period = n / std::gcd(static_cast<i64>(n), cs.leader);
            out.push_back(std::move(cf));
        }
    } else {
        if (m0 * std::log2(static_cast<double>(field.q)) > 62.5)
            fail(errc::cap_exceeded, "splitting field order exceeds 64 bits");
        Ext ext{&field, static_cast<int>(m0), find_irreducible(field, static_cast<int>(m0)).c};
        const u64 group = static_cast<u64>(checked_pow(field.q, static_cast<int>(m0))) - 1;
        if (group % static_cast<u64>(n) != 0) fail(errc::internal_error, "splitting field misses the roots of unity");

        // deterministic search for an element of multiplicative order exactly n
        auto nfac = factorize(static_cast<u64>(n));
        Ext::El zeta;
        for (u64 c = 2;; ++c) {
            Ext::El z = ext.from_counter(c);
            Ext::El w = ext.pow(z, group / static_cast<u64>(n));
            if (ext.is_one(w)) continue;
            bool full = true;
            for (auto [r, e] : nfac) {
                (void)e;
                if (ext.is_one(ext.pow(w, static_cast<u64>(n) / r))) {
                    full = false;
                    break;
                }
            }
            if (full) {
                zeta = w;
                break;
            }
        }

        for (auto& cs : cosets) {
            // minimal polynomial: product of (X - zeta^e) over the coset
            std::vector<Ext::El> poly{ext.one()};
            for (i64 e : cs.members) {
                Ext::El root = ext.pow(zeta, static_cast<u64>(e));
                std::vector<Ext::El> next(poly.size() + 1, ext.zero());
                for (size_t i = 0; i < poly.size(); ++i) {
                    next[i + 1] = ext.add(next[i + 1], poly[i]);
                    next[i] = ext.sub(next[i], ext.mul(root, poly[i]));
                }
                poly = std::move(next);
            }
            std::vector<int> c(poly.size());
            for (size_t i = 0; i < poly.size(); ++i) {
                if (!ext.is_base(poly[i])) fail(errc::internal_error, "minimal polynomial escaped the base field");
                c[i] = poly[i][0];
            }
            CosetFactor cf;
            cf.coset = cs;
            cf.f = Polynomial(field, std::move(c));
            cf.period = n / std::gcd(static_cast<i64>(n), cs.leader);
            out.push_back(std::move(cf));
        }
    }

    Polynomial prod = poly_one(field);
    for (auto& cf : out) prod = poly_mul(prod, cf.f);
    if (!(prod == xn_minus_1(field, n))) fail(errc::internal_error, "factor product does not reproduce x^n - 1");
    return out;
}

std::vector<Polynomial> factor_xn_minus_1(const FieldTable& field, int n) {
    std::vector<Polynomial> out;
    for (auto& cf : factor_xn_minus_1_detailed(field, n)) out.push_back(cf.f);
    return out;
}

Polynomial minimal_polynomial(const FieldTable& big, int a, const FieldTable& small) {
    Subfield emb = Subfield::make(big, small);
    if (a == 0) return poly_x(small);
    std::vector<int> conjugates;
    int e = a;
    do {
        conjugates.push_back(e);
        e = big.pow(e, small.q);
    } while (e != a);

    std::vector<int> poly{1};  // over the big field, ascending
    for (int root : conjugates) {
        std::vector<int> next(poly.size() + 1, 0);
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = big.add(next[i + 1], poly[i]);
            next[i] = big.sub(next[i], big.mul(root, poly[i]));
        }
        poly = std::move(next);
    }
    std::vector<int> c(poly.size());
    for (size_t i = 0; i < poly.size(); ++i) c[i] = emb.to_small(poly[i]);
    return Polynomial(small, std::move(c));
}

int trace(const FieldTable& big, int a, const FieldTable& small) {
    Subfield emb = Subfield::make(big, small);
    return emb.trace(a);
}

}  // namespace bsw
