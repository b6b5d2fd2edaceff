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

#include "bsw/algebra.hpp"

namespace bsw {

struct Word {
    const FieldTable* field = nullptr;
    std::vector<int> v;

    Word() = default;
    Word(const FieldTable& f, std::vector<int> entries) : field(&f), v(std::move(entries)) {}
    int n() const { return static_cast<int>(v.size()); }
    bool is_zero() const {
        for (int e : v)
            if (e) return false;
        return true;
    }
    bool operator==(const Word& o) const { return v == o.v; }
};

/// Counts of maximal cyclic zero runs: psi[i] runs of exactly i zeros,
/// each delimited by nonzero entries on the circular word.
struct RunDistribution {
    int n = 0;
    bool all_zero = false;
    std::vector<i64> psi;  // index 0..n, psi[0] unused

    i64 total_zeros() const {
        i64 t = 0;
        for (int i = 1; i < static_cast<int>(psi.size()); ++i) t += i * psi[i];
        return t;
    }
};

RunDistribution run_distribution(const Word& x);
RunDistribution run_distribution(const std::vector<int>& v);

/// Cyclic b-windows: entry i is (x_i, ..., x_{i+b-1}) with indices mod n.
std::vector<std::vector<int>> pi_b(const Word& x, int b);

/// n minus the number of cyclic all-zero windows of length b, evaluated
/// window by window (the oracle path; no run distribution involved).
int b_weight_direct(const Word& x, int b);
int b_weight_direct(const std::vector<int>& v, int b);

/// n - sum_{i=b}^{n-1} (i-b+1) psi[i]; 0 for the all-zero word.
int b_weight_from_runs(const RunDistribution& rd, int b, int n);

/// All of w_1..w_n at once from one run distribution (suffix sums).
std::vector<int> all_b_weights(const RunDistribution& rd);

/// Least t | n with x_{i+t} = x_i cyclically.
int vector_period(const Word& x);
int vector_period(const std::vector<int>& v);

/// Number of indices i < n with (x_i, x_{n+i}) != (0,0); length must be 2n.
int symplectic_weight(const Word& x);

/// Largest zero-run length; 0 when there is no zero coordinate, n for the
/// all-zero word (flagged via RunDistribution::all_zero).
int max_zero_run(const Word& x);

/// Packs each cyclic b-window into F_{q^b} along the basis 1, w, ..., w^{b-1};
/// Hamming weight of the result equals w_b(x).
Word phi_pack(const Word& x, int b, FieldCache& cache = FieldCache::global());

/// Folds a length-2n word into F_{q^2}^n via x_i + w' x_{n+i}; Hamming weight
/// of the result equals the symplectic weight.
Word phi_prime(const Word& x, FieldCache& cache = FieldCache::global());

Word scale_word(const Word& x, int c);
Word rotate_word(const Word& x, int r);

}  // namespace bsw
