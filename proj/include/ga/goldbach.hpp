#pragma once

#include <cstdint>
#include <vector>

#include "ga/arith.hpp"

namespace ga {

// ---- representation tables ----

enum class RMethod { direct, fft };

// values[n] = R_k(n) = sum over h_1+...+h_k = n of Lambda(h_1)...Lambda(h_k),
// for n <= n_max.  values[n] = 0 for n < 2k, and values[n] >= 0 throughout
// (the fft path clamps its sub-epsilon negative noise to zero).
struct RTable {
    std::uint64_t n_max = 0;
    int k = 2;
    RMethod method = RMethod::direct;
    std::vector<double> values;  // index 0..n_max
};

// Exact O(n) pair sum R(n) = sum_{h<n} Lambda(h) Lambda(n-h), compensated.
double r2_direct(std::uint64_t n, const LambdaTable& table);

// Builds the full table.
//   direct: k=2 walks ordered prime-power pairs; k>=3 runs the k-1 fold
//           convolution level by level over the prime-power support.
//   fft:    one real-input transform of Lambda, k-th power pointwise, inverse
//           transform, truncated to n <= n_max.  The per-entry rounding
//           estimate eps * log2(L) * psi(n_max)^k / L is gated at 1e-4;
//           beyond the gate the call refuses (std::runtime_error) and the
//           caller should split the range or use the direct path.
RTable r_table(std::uint64_t n_max, int k, const LambdaTable& table, RMethod method);

// Estimated per-entry fft rounding error for a k-fold convolution up to
// n_max (used by the precision gate above; exposed for tests).
double fft_error_estimate(std::uint64_t n_max, int k, const LambdaTable& table);
inline constexpr double kFftErrorBudget = 1e-4;

// sum_{n<=N} R(n) via the O(N) pairing sum_{h<N} Lambda(h) psi(N-h); avoids
// materializing an RTable for cumulative-only runs.
double sum_R(std::uint64_t N, const LambdaTable& table);

// sum_{n<=N} R_k(n) for 2 <= k <= 6 by the iterated prefix method:
//   P_1(m) = psi(m),  P_j(m) = sum_{h<m} Lambda(h) P_{j-1}(m-h),
// so P_k(N) accumulates the k-fold count in O(k * N * pp(N)) where pp counts
// prime powers.  Independent of the fft path by construction (cross-checked
// in tests).
double sum_Rk(std::uint64_t N, int k, const LambdaTable& table);

// sum_{n<=y} [R(n) - (2 psi(n) - n)] e^{-n/N}, the exponentially weighted
// discrepancy.  Requires 2 <= y <= N <= r.n_max.
double weighted_discrepancy(std::uint64_t y, std::uint64_t N,
                            const RTable& r, const LambdaTable& table);

// Inclusive short-interval sum values[N] + ... + values[N+H], 2 <= H <= N.
double short_interval_sum(std::uint64_t N, std::uint64_t H, const RTable& r);

}  // namespace ga
