#pragma once

// Shared test fixtures.  The sieve and the zero table are expensive enough
// that every suite building its own would dominate the runtime; statics
// keep construction one-time and ordering-independent.

#include <cstdlib>
#include <filesystem>
#include <string>

#include "ga/goldbach.hpp"
#include "ga/summation.hpp"
#include "ga/zeros.hpp"

#ifndef GA_DATA_DIR
#define GA_DATA_DIR "data"
#endif

namespace fixtures {

inline std::string data_dir() {
    if (const char* e = std::getenv("GOLDBACH_DATA"); e && *e) return e;
    return GA_DATA_DIR;
}

// n_max 101000: covers every unit-test table need, including exp-sum
// truncations up to 9*10^4 and the even-n band scan around 10^5.
inline const ga::LambdaTable& table_100k() {
    static const ga::LambdaTable t = ga::sieve_lambda(101'000);
    return t;
}

inline const ga::ZeroTable& zeros_100k() {
    static const ga::ZeroTable z =
        ga::load_zeros(data_dir() + "/zeros_100k.txt");
    return z;
}

// scratch path unique per test-process
inline std::string tmp_path(const std::string& leaf) {
    namespace fs = std::filesystem;
    return (fs::temp_directory_path() / leaf).string();
}

}  // namespace fixtures
