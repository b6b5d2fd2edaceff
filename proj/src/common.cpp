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

#include "bsw/common.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace bsw {

const char* errc_name(errc c) {
    switch (c) {
        case errc::non_prime: return "NonPrime";
        case errc::cap_exceeded: return "CapExceeded";
        case errc::not_coprime: return "NotCoprime";
        case errc::not_a_subfield: return "NotASubfield";
        case errc::zero_constant_term: return "ZeroConstantTerm";
        case errc::b_out_of_range: return "BOutOfRange";
        case errc::inconsistent_distribution: return "InconsistentDistribution";
        case errc::odd_length: return "OddLength";
        case errc::not_a_divisor: return "NotADivisor";
        case errc::invalid_leader: return "InvalidLeader";
        case errc::delta_out_of_range: return "DeltaOutOfRange";
        case errc::k_out_of_range: return "KOutOfRange";
        case errc::rank_deficient: return "RankDeficient";
        case errc::not_irreducible: return "NotIrreducible";
        case errc::not_two_zero: return "NotTwoZero";
        case errc::not_prime_length: return "NotPrimeLength";
        case errc::regime_unsupported: return "RegimeUnsupported";
        case errc::not_applicable: return "NotApplicable";
        case errc::golomb_unavailable: return "GolombUnavailable";
        case errc::numeric_residual: return "NumericResidual";
        case errc::zero_element: return "ZeroElement";
        case errc::parse_error: return "ParseError";
        case errc::internal_error: return "InternalError";
    }
    return "UnknownError";
}

namespace {

bool miller_rabin(u64 n, u64 a) {
    if (a % n == 0) return true;
    u64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) d >>= 1, ++r;
    u64 x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < r; ++i) {
        x = mulmod_u64(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

u64 pollard_brent(u64 n) {
    if (n % 2 == 0) return 2;
    u64 x = 2, y = 2, c = 1, d = 1;
    auto f = [&](u64 v) { return (mulmod_u64(v, v, n) + c) % n; };
    while (true) {
        x = 2, y = 2, d = 1;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            u64 diff = x > y ? x - y : y - x;
            d = std::gcd(diff, n);
        }
        if (d != n) return d;
        ++c;
    }
}

void factor_rec(u64 n, std::map<u64, int>& acc) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++acc[n];
        return;
    }
    u64 d = pollard_brent(n);
    factor_rec(d, acc);
    factor_rec(n / d, acc);
}

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (!miller_rabin(n, a)) return false;
    return true;
}

std::vector<std::pair<u64, int>> factorize(u64 n) {
    if (n == 0) fail(errc::internal_error, "factorize(0)");
    std::map<u64, int> acc;
    for (u64 d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        while (n % d == 0) n /= d, ++acc[d];
    }
    factor_rec(n, acc);
    return {acc.begin(), acc.end()};
}

std::vector<u64> divisors_of(u64 n) {
    std::vector<u64> out{1};
    for (auto [p, e] : factorize(n)) {
        size_t sz = out.size();
        u64 pe = 1;
        for (int i = 0; i < e; ++i) {
            pe *= p;
            for (size_t j = 0; j < sz; ++j) out.push_back(out[j] * pe);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int mobius(u64 n) {
    if (n == 0) fail(errc::internal_error, "mobius(0)");
    int sign = 1;
    for (auto [p, e] : factorize(n)) {
        (void)p;
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

u64 totient(u64 n) {
    u64 r = n;
    for (auto [p, e] : factorize(n)) {
        (void)e;
        r -= r / p;
    }
    return r;
}

u64 ord_mod(u64 a, u64 n) {
    if (n == 1) return 1;
    a %= n;
    if (std::gcd(a, n) != 1) fail(errc::not_coprime, "ord_mod requires gcd(a,n)=1");
    u64 t = totient(n);
    u64 ord = t;
    for (auto [p, e] : factorize(t)) {
        (void)e;
        while (ord % p == 0 && powmod_u64(a, ord / p, n) == 1) ord /= p;
    }
    return ord;
}

i64 checked_pow(i64 base, int e) {
    i64 r = 1;
    for (int i = 0; i < e; ++i) {
        if (base != 0 && r > std::numeric_limits<i64>::max() / base)
            fail(errc::cap_exceeded, "integer power overflows 64 bits");
        r *= base;
    }
    return r;
}

u64 mulmod_u64(u64 a, u64 b, u64 m) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m); }

u64 powmod_u64(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace bsw
