#include "ga/calibration.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ga {

std::uint64_t fnv1a64(const void* data, std::size_t len) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 14695981039346656037ull;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

double Calibration::get(const std::string& name) const {
    const auto it = values.find(name);
    if (it == values.end()) throw std::out_of_range("calibration constant missing: " + name);
    return it->second;
}

double Calibration::get_or(const std::string& name, double fallback) const {
    const auto it = values.find(name);
    return it == values.end() ? fallback : it->second;
}

namespace {

Calibration parse_calibration(const std::string& text, const std::string& origin) {
    Calibration c;
    c.file_hash = fnv1a64(text.data(), text.size());

    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;

        const std::size_t eq = line.find('=', start);
        if (eq == std::string::npos)
            throw std::runtime_error(origin + ":" + std::to_string(lineno) +
                                     ": expected `name = value`");
        std::string name = line.substr(start, eq - start);
        name.erase(name.find_last_not_of(" \t") + 1);
        if (name.empty())
            throw std::runtime_error(origin + ":" + std::to_string(lineno) + ": empty name");

        const char* vbegin = line.c_str() + eq + 1;
        char* vend = nullptr;
        const double value = std::strtod(vbegin, &vend);
        if (vend == vbegin)
            throw std::runtime_error(origin + ":" + std::to_string(lineno) + ": bad value");
        while (*vend == ' ' || *vend == '\t' || *vend == '\r') ++vend;
        if (*vend != '\0')
            throw std::runtime_error(origin + ":" + std::to_string(lineno) +
                                     ": trailing garbage after value");
        if (!c.values.emplace(name, value).second)
            throw std::runtime_error(origin + ":" + std::to_string(lineno) +
                                     ": duplicate constant " + name);
    }
    return c;
}

// byte-for-byte copy of data/calibration.cfg; a test pins the two together
constexpr char kBuiltinText[] =
    "# frozen gate constants for the verification suite\n"
    "# (measured once on the recorded calibration run, then rounded up for headroom)\n"
    "\n"
    "# theorem-level normalized discrepancy gates\n"
    "thm1_normalized_max = 1\n"
    "thm2_normalized_max = 1\n"
    "thm3_normalized_max = 1\n"
    "thm4_normalized_max = 1\n"
    "delta_growth_coeff = 1\n"
    "delta_growth_exp = 1.3\n"
    "ablation_min_normalized = 1\n"
    "tail_flag_fraction = 0.1\n"
    "stima_banale_factor = 2\n"
    "\n"
    "# explicit-formula and zero-sum gates\n"
    "sumint_normalized_max = 2\n"
    "c0_fit_abs_max = 0.002\n"
    "psi0_jump_tol = 0.05\n"
    "\n"
    "# circle-method lemma gates\n"
    "residue_gap_max = 5\n"
    "i1_gap_max = 1\n"
    "meansq_band_factor = 2\n"
    "parseval_rel_max = 1e-6\n"
    "lp_ratio_max = 2\n"
    "pointwise_ratio_max = 2\n"
    "i2_rel_gap_max = 1e-8\n"
    "i3_ratio_max = 0.05\n"
    "circle_identity_rel_max = 1e-7\n"
    "\n"
    "# quadrature self-checks\n"
    "quad_identity_rel = 1e-6\n"
    "fourier_orth_abs = 1e-10\n"
    "\n"
    "# convolution and sieve cross-checks\n"
    "fft_direct_max_abs = 1e-6\n"
    "hl_band_lo = 0.8\n"
    "hl_band_hi = 1.2\n"
    "\n"
    "# counterexample reproduction\n"
    "remark_value_tol = 1000\n"
    "remark_ratio_lo = 0.05\n"
    "remark_ratio_hi = 0.15\n";

}  // namespace

Calibration load_calibration(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open calibration file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_calibration(buf.str(), path);
}

const Calibration& builtin_calibration() {
    static const Calibration c = parse_calibration(kBuiltinText, "<builtin>");
    return c;
}

}  // namespace ga
