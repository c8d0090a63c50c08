#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ga {

// ---- von Mangoldt table ----

// Sieved von Mangoldt values Lambda(n) (natural logs) together with the
// Chebyshev prefix sums psi(n) = sum_{m<=n} Lambda(m).
//
// Invariants:
//   lambda[0] = lambda[1] = 0; lambda[n] > 0 exactly when n is a prime power
//   psi_prefix is non-decreasing and psi_prefix[n] - psi_prefix[n-1] equals
//   lambda[n] up to one rounding of the running sum (the accumulation itself
//   is compensated, so the global error stays below 1e-10 absolute for
//   n_max <= 1e8)
//
// Memory: ~16 bytes per integer (two double arrays).
struct LambdaTable {
    std::uint64_t n_max = 0;
    std::vector<double> lambda;      // index 0..n_max
    std::vector<double> psi_prefix;  // index 0..n_max

    bool in_range(double x) const { return x <= static_cast<double>(n_max); }
};

// Builds the table in O(n_max log log n_max): one Eratosthenes pass for the
// primes, then every prime power p^j <= n_max gets lambda = log p.
LambdaTable sieve_lambda(std::uint64_t n_max);

// psi(x) = psi_prefix[floor(x)]; 0 for x < 2.  Throws std::out_of_range when
// floor(x) > n_max.
double psi(double x, const LambdaTable& table);

// Jump-averaged Chebyshev function: psi(t) - Lambda(t)/2 at integer t,
// psi(t) elsewhere.
double psi0(double t, const LambdaTable& table);

// Iterated integral psi_j(t) = (1/j!) sum_{n<=t} (t-n)^j Lambda(n), evaluated
// directly in O(t) with compensated accumulation.  j = 0 reduces to psi.
// Rejects j > 20 or j*log(t) beyond the double exponent budget.
double psi_iterated(int j, double t, const LambdaTable& table);

// Goldbach singular series.  0 for odd k; for even k the truncated twin-prime
// product 2 * prod_{2<p<=cutoff} (1 - 1/(p-1)^2) times the finite correction
// prod_{p|k, p>2} (p-1)/(p-2).  The product tail beyond the cutoff P
// contributes relative error < 1/P.  The cutoff-dependent constant is
// memoized, so per-k calls cost only the trial division of k.
double singular_series(std::uint64_t k, std::uint64_t prime_cutoff = 10'000'000);

// ---- binary cache ----
//
// Format: magic "LMB1", n_max as 8-byte little-endian, then lambda[1..n_max]
// as little-endian IEEE doubles.  psi_prefix is recomputed on load (cheaper
// than storing it and immune to prefix/value skew).

void write_lambda_cache(const LambdaTable& table, const std::string& path);
LambdaTable read_lambda_cache(const std::string& path);

}  // namespace ga
