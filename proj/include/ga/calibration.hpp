#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace ga {

// ---- frozen gate constants ----

// Every "<= C" acceptance constant lives here rather than scattered through
// the code: the values were frozen once from a recorded calibration run
// (measured, then doubled or rounded up for headroom) and are loaded from a
// flat `name = value` file so they stay auditable.
struct Calibration {
    std::map<std::string, double> values;
    std::uint64_t file_hash = 0;  // FNV-1a over the raw file bytes

    double get(const std::string& name) const;  // throws std::out_of_range if absent
    double get_or(const std::string& name, double fallback) const;
};

// Parses `name = value` lines; '#' comments and blank lines ignored.
Calibration load_calibration(const std::string& path);

// The compiled-in copy of the shipped constants file (used when no file is
// given; data/calibration.cfg carries the same values and a test pins the
// two against each other).
const Calibration& builtin_calibration();

std::uint64_t fnv1a64(const void* data, std::size_t len);

}  // namespace ga
