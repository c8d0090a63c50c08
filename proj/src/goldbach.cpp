#include "ga/goldbach.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstring>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>

#include "ga/summation.hpp"

namespace ga {

namespace {

std::vector<std::uint32_t> prime_power_support(const LambdaTable& table, std::uint64_t up_to) {
    std::vector<std::uint32_t> pp;
    for (std::uint64_t m = 2; m <= up_to; ++m)
        if (table.lambda[m] > 0.0) pp.push_back(static_cast<std::uint32_t>(m));
    return pp;
}

std::uint64_t next_pow2(std::uint64_t v) {
    std::uint64_t L = 1;
    while (L < v) L <<= 1;
    return L;
}

// fftw's planner mutates global state; serialize plan create/destroy
std::mutex& fftw_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

// ---- direct evaluation ----

double r2_direct(std::uint64_t n, const LambdaTable& table) {
    if (n < 2 || n > table.n_max) throw std::out_of_range("r2_direct: n outside table range");
    Neumaier acc;
    for (std::uint64_t h = 1; h < n; ++h) {
        const double lh = table.lambda[h];
        if (lh > 0.0) acc.add(lh * table.lambda[n - h]);
    }
    return acc.value();
}

// ---- table builders ----

double fft_error_estimate(std::uint64_t n_max, int k, const LambdaTable& table) {
    if (n_max > table.n_max) throw std::out_of_range("fft_error_estimate: n_max beyond table");
    if (k < 2) throw std::invalid_argument("fft_error_estimate: k >= 2 required");
    const double L = static_cast<double>(next_pow2(static_cast<std::uint64_t>(k) * n_max + 1));
    const double p = table.psi_prefix[n_max];
    return std::numeric_limits<double>::epsilon() * std::log2(L) * std::pow(p, k) / L;
}

namespace {

RTable r_table_direct(std::uint64_t n_max, int k, const LambdaTable& table) {
    RTable r;
    r.n_max = n_max;
    r.k = k;
    r.method = RMethod::direct;
    r.values.assign(n_max + 1, 0.0);

    const std::vector<std::uint32_t> pp = prime_power_support(table, n_max);

    // level 2 over ordered pairs; each entry gathers few terms, so plain
    // adds in fixed ascending order are enough
    for (std::uint32_t a : pp) {
        if (a + 2 > n_max) break;
        const double la = table.lambda[a];
        for (std::uint32_t b : pp) {
            const std::uint64_t n = static_cast<std::uint64_t>(a) + b;
            if (n > n_max) break;
            r.values[n] += la * table.lambda[b];
        }
    }

    std::vector<double> cur;
    for (int level = 3; level <= k; ++level) {
        cur.swap(r.values);
        r.values.assign(n_max + 1, 0.0);
        for (std::uint32_t a : pp) {
            const double la = table.lambda[a];
            for (std::uint64_t m = 1; m + a <= n_max; ++m)
                r.values[m + a] += la * cur[m];
        }
    }
    return r;
}

RTable r_table_fft(std::uint64_t n_max, int k, const LambdaTable& table) {
    const double est = fft_error_estimate(n_max, k, table);
    if (est > kFftErrorBudget)
        throw std::runtime_error("r_table: fft rounding estimate " + std::to_string(est) +
                                 " exceeds budget " + std::to_string(kFftErrorBudget) +
                                 "; use the direct method or split the range");

    const std::uint64_t L = next_pow2(static_cast<std::uint64_t>(k) * n_max + 1);
    double* in = fftw_alloc_real(L);
    fftw_complex* freq = fftw_alloc_complex(L / 2 + 1);
    if (!in || !freq) {
        fftw_free(in);
        fftw_free(freq);
        throw std::runtime_error("r_table: fft buffer allocation failed");
    }

    fftw_plan fwd, bwd;
    {
        std::lock_guard<std::mutex> lock(fftw_mutex());
        fwd = fftw_plan_dft_r2c_1d(static_cast<int>(L), in, freq, FFTW_ESTIMATE);
        bwd = fftw_plan_dft_c2r_1d(static_cast<int>(L), freq, in, FFTW_ESTIMATE);
    }

    std::memset(in, 0, sizeof(double) * L);
    for (std::uint64_t m = 2; m <= n_max; ++m) in[m] = table.lambda[m];
    fftw_execute(fwd);

    for (std::uint64_t i = 0; i < L / 2 + 1; ++i) {
        const std::complex<double> c(freq[i][0], freq[i][1]);
        std::complex<double> p = c;
        for (int j = 1; j < k; ++j) p *= c;
        freq[i][0] = p.real();
        freq[i][1] = p.imag();
    }
    fftw_execute(bwd);

    RTable r;
    r.n_max = n_max;
    r.k = k;
    r.method = RMethod::fft;
    r.values.resize(n_max + 1);
    const double inv = 1.0 / static_cast<double>(L);
    for (std::uint64_t n = 0; n <= n_max; ++n)
        r.values[n] = std::max(0.0, in[n] * inv);  // clamp sub-eps negative noise

    {
        std::lock_guard<std::mutex> lock(fftw_mutex());
        fftw_destroy_plan(fwd);
        fftw_destroy_plan(bwd);
    }
    fftw_free(in);
    fftw_free(freq);
    return r;
}

}  // namespace

RTable r_table(std::uint64_t n_max, int k, const LambdaTable& table, RMethod method) {
    if (n_max < 4 || n_max > table.n_max)
        throw std::out_of_range("r_table: n_max outside table range");
    if (k < 2 || k > 8) throw std::invalid_argument("r_table: k out of supported band");
    return method == RMethod::direct ? r_table_direct(n_max, k, table)
                                     : r_table_fft(n_max, k, table);
}

// ---- cumulative sums ----

double sum_R(std::uint64_t N, const LambdaTable& table) {
    if (N < 2 || N > table.n_max) throw std::out_of_range("sum_R: N outside table range");
    Neumaier acc;
    for (std::uint64_t h = 2; h < N; ++h) {
        const double lh = table.lambda[h];
        if (lh > 0.0) acc.add(lh * table.psi_prefix[N - h]);
    }
    return acc.value();
}

double sum_Rk(std::uint64_t N, int k, const LambdaTable& table) {
    if (N < 2 || N > table.n_max) throw std::out_of_range("sum_Rk: N outside table range");
    if (k < 2 || k > 6) throw std::invalid_argument("sum_Rk: k out of supported band");

    const std::vector<std::uint32_t> pp = prime_power_support(table, N);

    // Q_1(m) = psi(m); Q_j(m) = sum_h Lambda(h) Q_{j-1}(m-h); answer Q_k(N)
    std::vector<double> cur(table.psi_prefix.begin(), table.psi_prefix.begin() + N + 1);
    std::vector<double> next(N + 1);
    for (int level = 2; level <= k; ++level) {
        std::fill(next.begin(), next.end(), 0.0);
        for (std::uint32_t h : pp) {
            const double lh = table.lambda[h];
            for (std::uint64_t m = 1; m + h <= N; ++m) next[m + h] += lh * cur[m];
        }
        cur.swap(next);
    }
    return cur[N];
}

// ---- weighted and windowed sums ----

double weighted_discrepancy(std::uint64_t y, std::uint64_t N,
                            const RTable& r, const LambdaTable& table) {
    if (r.k != 2) throw std::invalid_argument("weighted_discrepancy: needs a k=2 table");
    if (y < 2 || y > N) throw std::invalid_argument("weighted_discrepancy: requires 2 <= y <= N");
    if (N > r.n_max || y > table.n_max)
        throw std::out_of_range("weighted_discrepancy: tables too short");

    const double invN = 1.0 / static_cast<double>(N);
    Neumaier acc;
    for (std::uint64_t n = 1; n <= y; ++n) {
        const double expected = 2.0 * table.psi_prefix[n] - static_cast<double>(n);
        acc.add((r.values[n] - expected) * std::exp(-static_cast<double>(n) * invN));
    }
    return acc.value();
}

double short_interval_sum(std::uint64_t N, std::uint64_t H, const RTable& r) {
    if (H < 2 || H > N) throw std::invalid_argument("short_interval_sum: requires 2 <= H <= N");
    if (N + H > r.n_max) throw std::out_of_range("short_interval_sum: table too short");
    Neumaier acc;
    for (std::uint64_t n = N; n <= N + H; ++n) acc.add(r.values[n]);
    return acc.value();
}

}  // namespace ga
