#include "ga/arith.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "ga/summation.hpp"

namespace ga {

// ---- sieve ----

LambdaTable sieve_lambda(std::uint64_t n_max) {
    if (n_max < 2) throw std::invalid_argument("sieve_lambda: n_max must be >= 2");

    LambdaTable t;
    t.n_max = n_max;
    try {
        t.lambda.assign(n_max + 1, 0.0);
        t.psi_prefix.assign(n_max + 1, 0.0);
    } catch (const std::bad_alloc&) {
        throw std::runtime_error("sieve_lambda: allocation failed for n_max = " +
                                 std::to_string(n_max) + " (~" +
                                 std::to_string((n_max + 1) * 16 >> 20) + " MiB)");
    }

    // plain Eratosthenes on a byte array; O(n log log n)
    std::vector<std::uint8_t> composite(n_max + 1, 0);
    for (std::uint64_t p = 2; p * p <= n_max; ++p) {
        if (composite[p]) continue;
        for (std::uint64_t q = p * p; q <= n_max; q += p) composite[q] = 1;
    }

    // every prime power p^j gets log p; the same double is reused so all
    // powers of p carry the identical bit pattern
    for (std::uint64_t p = 2; p <= n_max; ++p) {
        if (composite[p]) continue;
        const double lp = std::log(static_cast<double>(p));
        for (std::uint64_t q = p; q <= n_max; q = (q <= n_max / p) ? q * p : n_max + 1)
            t.lambda[q] = lp;
    }

    // compensated prefix: the running compensation never leaves the
    // accumulator, so psi_prefix[n] is the correctly rounded running sum
    Neumaier acc;
    for (std::uint64_t n = 2; n <= n_max; ++n) {
        acc.add(t.lambda[n]);
        t.psi_prefix[n] = acc.value();
    }
    return t;
}

// ---- psi family ----

double psi(double x, const LambdaTable& table) {
    if (x < 2.0) return 0.0;
    const double fx = std::floor(x);
    if (!table.in_range(fx)) throw std::out_of_range("psi: x exceeds table range");
    return table.psi_prefix[static_cast<std::uint64_t>(fx)];
}

double psi0(double t, const LambdaTable& table) {
    if (t < 2.0) return 0.0;
    if (!table.in_range(t)) throw std::out_of_range("psi0: t exceeds table range");
    const double ft = std::floor(t);
    if (ft == t) {
        const std::uint64_t n = static_cast<std::uint64_t>(ft);
        return table.psi_prefix[n] - 0.5 * table.lambda[n];
    }
    return table.psi_prefix[static_cast<std::uint64_t>(ft)];
}

double psi_iterated(int j, double t, const LambdaTable& table) {
    if (j < 0) throw std::invalid_argument("psi_iterated: j must be >= 0");
    if (t < 0.0) return 0.0;
    if (!table.in_range(t)) throw std::out_of_range("psi_iterated: t exceeds table range");
    // (t-n)^j must stay inside the double exponent range
    if (j > 20 || (t > 1.0 && j * std::log(t) > 600.0))
        throw std::domain_error("psi_iterated: (t-n)^j would overflow double range");
    if (j == 0) return psi(t, table);

    double jfact = 1.0;
    for (int i = 2; i <= j; ++i) jfact *= i;

    const std::uint64_t hi = static_cast<std::uint64_t>(std::floor(t));
    Neumaier acc;
    for (std::uint64_t n = 2; n <= hi; ++n) {
        const double l = table.lambda[n];
        if (l == 0.0) continue;
        acc.add(std::pow(t - static_cast<double>(n), j) * l);
    }
    return acc.value() / jfact;
}

// ---- singular series ----

namespace {

// twin-prime-style product over odd primes up to the cutoff; memoized per
// cutoff (the product costs a sieve of the whole cutoff range)
double twin_factor(std::uint64_t cutoff) {
    static std::mutex mu;
    static std::unordered_map<std::uint64_t, double> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(cutoff);
        if (it != cache.end()) return it->second;
    }

    std::vector<std::uint8_t> composite(cutoff + 1, 0);
    for (std::uint64_t p = 2; p * p <= cutoff; ++p) {
        if (composite[p]) continue;
        for (std::uint64_t q = p * p; q <= cutoff; q += p) composite[q] = 1;
    }
    Neumaier logsum;  // accumulate in log space: the factors are all < 1
    for (std::uint64_t p = 3; p <= cutoff; p += 2) {
        if (composite[p]) continue;
        const double pm1 = static_cast<double>(p) - 1.0;
        logsum.add(std::log1p(-1.0 / (pm1 * pm1)));
    }
    const double value = std::exp(logsum.value());

    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(cutoff, value);
    return value;
}

}  // namespace

double singular_series(std::uint64_t k, std::uint64_t prime_cutoff) {
    if (k < 2) throw std::invalid_argument("singular_series: k must be >= 2");
    if (k % 2 == 1) return 0.0;

    std::uint64_t m = k;
    while (m % 2 == 0) m /= 2;

    double correction = 1.0;
    std::uint64_t largest = 2;
    for (std::uint64_t d = 3; d * d <= m; d += 2) {
        if (m % d) continue;
        correction *= (static_cast<double>(d) - 1.0) / (static_cast<double>(d) - 2.0);
        largest = d;
        while (m % d == 0) m /= d;
    }
    if (m > 1) {
        correction *= (static_cast<double>(m) - 1.0) / (static_cast<double>(m) - 2.0);
        largest = m;
    }
    if (largest > prime_cutoff)
        throw std::invalid_argument("singular_series: prime_cutoff below largest prime factor of k");

    return 2.0 * twin_factor(prime_cutoff) * correction;
}

// ---- binary cache ----

namespace {
constexpr char kMagic[4] = {'L', 'M', 'B', '1'};

void put_u64_le(std::FILE* f, std::uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    if (std::fwrite(b, 1, 8, f) != 8) throw std::runtime_error("cache write failed");
}

std::uint64_t get_u64_le(std::FILE* f) {
    unsigned char b[8];
    if (std::fread(b, 1, 8, f) != 8) throw std::runtime_error("cache read: truncated header");
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return v;
}
}  // namespace

void write_lambda_cache(const LambdaTable& table, const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) throw std::runtime_error("cannot open cache for writing: " + path);
    try {
        if (std::fwrite(kMagic, 1, 4, f) != 4) throw std::runtime_error("cache write failed");
        put_u64_le(f, table.n_max);
        // doubles are written verbatim; this code only targets little-endian
        // IEEE hosts (checked at read time via the magic + a finite value)
        const std::size_t n = static_cast<std::size_t>(table.n_max);
        if (std::fwrite(table.lambda.data() + 1, sizeof(double), n, f) != n)
            throw std::runtime_error("cache write failed");
    } catch (...) {
        std::fclose(f);
        throw;
    }
    if (std::fclose(f) != 0) throw std::runtime_error("cache close failed: " + path);
}

LambdaTable read_lambda_cache(const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "rb");
    if (!f) throw std::runtime_error("cannot open cache: " + path);
    LambdaTable t;
    try {
        char magic[4];
        if (std::fread(magic, 1, 4, f) != 4 || std::memcmp(magic, kMagic, 4) != 0)
            throw std::runtime_error("bad cache magic in " + path);
        t.n_max = get_u64_le(f);
        if (t.n_max < 2 || t.n_max > (1ull << 34))
            throw std::runtime_error("implausible n_max in cache: " + std::to_string(t.n_max));
        t.lambda.assign(t.n_max + 1, 0.0);
        const std::size_t n = static_cast<std::size_t>(t.n_max);
        if (std::fread(t.lambda.data() + 1, sizeof(double), n, f) != n)
            throw std::runtime_error("cache truncated: " + path);
    } catch (...) {
        std::fclose(f);
        throw;
    }
    std::fclose(f);

    t.psi_prefix.assign(t.n_max + 1, 0.0);
    Neumaier acc;
    for (std::uint64_t n = 2; n <= t.n_max; ++n) {
        if (!(t.lambda[n] >= 0.0) || t.lambda[n] > 64.0)
            throw std::runtime_error("corrupt lambda value in cache at n = " + std::to_string(n));
        acc.add(t.lambda[n]);
        t.psi_prefix[n] = acc.value();
    }
    return t;
}

}  // namespace ga
