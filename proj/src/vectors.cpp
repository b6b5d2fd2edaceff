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

#include "bsw/vectors.hpp"

namespace bsw {

RunDistribution run_distribution(const std::vector<int>& v) {
    RunDistribution rd;
    rd.n = static_cast<int>(v.size());
    rd.psi.assign(rd.n + 1, 0);
    int first = -1;
    for (int i = 0; i < rd.n; ++i) {
        if (v[i]) {
            first = i;
            break;
        }
    }
    if (first < 0) {
        rd.all_zero = true;
        return rd;
    }
    // walk one full cycle starting just after the first nonzero entry; every
    // zero run encountered is closed by a nonzero delimiter (cyclically)
    int run = 0;
    for (int step = 1; step <= rd.n; ++step) {
        int i = (first + step) % rd.n;
        if (v[i]) {
            if (run > 0) ++rd.psi[run];
            run = 0;
        } else {
            ++run;
        }
    }
    return rd;
}

RunDistribution run_distribution(const Word& x) { return run_distribution(x.v); }

std::vector<std::vector<int>> pi_b(const Word& x, int b) {
    const int n = x.n();
    if (b < 1 || b > n) fail(errc::b_out_of_range, "need 1 <= b <= n");
    std::vector<std::vector<int>> out(n);
    for (int i = 0; i < n; ++i) {
        out[i].resize(b);
        for (int j = 0; j < b; ++j) out[i][j] = x.v[(i + j) % n];
    }
    return out;
}

int b_weight_direct(const std::vector<int>& v, int b) {
    const int n = static_cast<int>(v.size());
    if (b < 1 || b > n) fail(errc::b_out_of_range, "need 1 <= b <= n");
    int zero_windows = 0;
    for (int i = 0; i < n; ++i) {
        bool all = true;
        for (int j = 0; j < b; ++j) {
            if (v[(i + j) % n]) {
                all = false;
                break;
            }
        }
        if (all) ++zero_windows;
    }
    return n - zero_windows;
}

int b_weight_direct(const Word& x, int b) { return b_weight_direct(x.v, b); }

int b_weight_from_runs(const RunDistribution& rd, int b, int n) {
    if (rd.n != n) fail(errc::inconsistent_distribution, "distribution length mismatch");
    if (b < 1 || b > n) fail(errc::b_out_of_range, "need 1 <= b <= n");
    if (rd.all_zero) return 0;
    if (rd.total_zeros() > n) fail(errc::inconsistent_distribution, "zero runs exceed the length");
    i64 s = 0;
    for (int i = b; i <= n - 1; ++i) s += static_cast<i64>(i - b + 1) * rd.psi[i];
    return static_cast<int>(n - s);
}

std::vector<int> all_b_weights(const RunDistribution& rd) {
    const int n = rd.n;
    std::vector<int> w(n + 1, 0);
    if (rd.all_zero) return w;
    // S_b = sum_{i>=b} (i-b+1) psi_i satisfies S_b = S_{b+1} + T_b with
    // T_b = sum_{i>=b} psi_i, so one suffix pass yields every b.
    i64 S = 0, T = 0;
    for (int b = n; b >= 1; --b) {
        if (b <= n - 1) T += rd.psi[b];
        w[b] = static_cast<int>(n - S - T);
        S += T;
    }
    return w;
}

int vector_period(const std::vector<int>& v) {
    const int n = static_cast<int>(v.size());
    for (u64 t : divisors_of(static_cast<u64>(n))) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) ok = v[(i + t) % n] == v[i];
        if (ok) return static_cast<int>(t);
    }
    return n;
}

int vector_period(const Word& x) { return vector_period(x.v); }

int symplectic_weight(const Word& x) {
    const int len = x.n();
    if (len % 2) fail(errc::odd_length, "symplectic weight needs an even length");
    const int n = len / 2;
    int w = 0;
    for (int i = 0; i < n; ++i)
        if (x.v[i] || x.v[n + i]) ++w;
    return w;
}

int max_zero_run(const Word& x) {
    RunDistribution rd = run_distribution(x);
    if (rd.all_zero) return rd.n;
    for (int i = rd.n; i >= 1; --i)
        if (rd.psi[i]) return i;
    return 0;
}

Word phi_pack(const Word& x, int b, FieldCache& cache) {
    const FieldTable& f = *x.field;
    const int n = x.n();
    if (b < 1 || b > n) fail(errc::b_out_of_range, "need 1 <= b <= n");
    const FieldTable& ext = cache.field(f.p, f.s * b);
    const Subfield& emb = cache.subfield(ext, cache.field(f.p, f.s));
    const int omega = ext.alpha();
    Word out(ext, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        int acc = 0;
        for (int j = b - 1; j >= 0; --j) acc = ext.add(ext.mul(acc, omega), emb.to_big(x.v[(i + j) % n]));
        out.v[i] = acc;
    }
    return out;
}

Word phi_prime(const Word& x, FieldCache& cache) {
    const FieldTable& f = *x.field;
    const int len = x.n();
    if (len % 2) fail(errc::odd_length, "phi' needs an even length");
    const int n = len / 2;
    const FieldTable& ext = cache.field(f.p, f.s * 2);
    const Subfield& emb = cache.subfield(ext, cache.field(f.p, f.s));
    const int omega = ext.alpha();
    Word out(ext, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        out.v[i] = ext.add(emb.to_big(x.v[i]), ext.mul(omega, emb.to_big(x.v[n + i])));
    return out;
}

Word scale_word(const Word& x, int c) {
    Word out(*x.field, std::vector<int>(x.v.size()));
    for (size_t i = 0; i < x.v.size(); ++i) out.v[i] = x.field->mul(x.v[i], c);
    return out;
}

Word rotate_word(const Word& x, int r) {
    const int n = x.n();
    r = ((r % n) + n) % n;
    Word out(*x.field, std::vector<int>(n));
    for (int i = 0; i < n; ++i) out.v[(i + r) % n] = x.v[i];
    return out;
}

}  // namespace bsw
