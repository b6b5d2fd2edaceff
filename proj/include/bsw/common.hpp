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

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace bsw {

using i64 = std::int64_t;
using u64 = std::uint64_t;

enum class errc {
    non_prime,
    cap_exceeded,
    not_coprime,
    not_a_subfield,
    zero_constant_term,
    b_out_of_range,
    inconsistent_distribution,
    odd_length,
    not_a_divisor,
    invalid_leader,
    delta_out_of_range,
    k_out_of_range,
    rank_deficient,
    not_irreducible,
    not_two_zero,
    not_prime_length,
    regime_unsupported,
    not_applicable,
    golomb_unavailable,
    numeric_residual,
    zero_element,
    parse_error,
    internal_error,
};

const char* errc_name(errc c);

/// All library failures carry an errc so callers (and the CLI exit-code
/// mapping) can dispatch without string matching.
class error : public std::runtime_error {
   public:
    error(errc c, const std::string& msg) : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}
    errc code() const noexcept { return code_; }

   private:
    errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw error(c, msg); }

bool is_prime(u64 n);

/// Prime factorization by trial division; inputs are bounded by the field
/// caps (≈ 2^44 worst case for splitting-field group orders).
std::vector<std::pair<u64, int>> factorize(u64 n);

/// Divisors of n in ascending order.
std::vector<u64> divisors_of(u64 n);

int mobius(u64 n);
u64 totient(u64 n);

/// Multiplicative order of a modulo n; requires gcd(a, n) = 1.
u64 ord_mod(u64 a, u64 n);

/// base^e with overflow detection.
i64 checked_pow(i64 base, int e);

inline i64 lcm_i64(i64 a, i64 b) { return a / std::gcd(a, b) * b; }

inline i64 ceil_div(i64 a, i64 b) { return (a + b - 1) / b; }

u64 mulmod_u64(u64 a, u64 b, u64 m);
u64 powmod_u64(u64 a, u64 e, u64 m);

}  // namespace bsw
