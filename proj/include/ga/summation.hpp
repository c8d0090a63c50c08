#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace ga {

// ---- compensated accumulation ----

// Neumaier's variant of Kahan summation: the compensation also captures the
// case |term| > |sum|, so accumulation order does not have to be magnitude
// sorted.  Error after n adds is O(eps) relative, not O(n*eps).
struct Neumaier {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }

    void add(const Neumaier& other) {
        add(other.sum);
        comp += other.comp;
    }

    double value() const { return sum + comp; }
};

// Complex accumulator built from two real compensated channels.
struct NeumaierC {
    Neumaier re, im;

    void add(std::complex<double> z) {
        re.add(z.real());
        im.add(z.imag());
    }

    void add(const NeumaierC& o) {
        re.add(o.re);
        im.add(o.im);
    }

    std::complex<double> value() const { return {re.value(), im.value()}; }
};

// Compensated sum of a contiguous range, ascending index order (the fixed
// order is what makes parallel reductions bit-stable: chunks are summed
// independently and merged left to right).
inline double compensated_sum(const double* x, std::size_t n) {
    Neumaier acc;
    for (std::size_t i = 0; i < n; ++i) acc.add(x[i]);
    return acc.value();
}

inline double compensated_sum(const std::vector<double>& x) {
    return compensated_sum(x.data(), x.size());
}

}  // namespace ga
