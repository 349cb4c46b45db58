#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dp {

using Int = boost::multiprecision::cpp_int;

// Input data fails a documented precondition or schema.
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& m) : std::runtime_error(m) {}
};

// An internal cross-check failed; indicates a bug, not bad input.
struct consistency_error : std::runtime_error {
    explicit consistency_error(const std::string& m) : std::runtime_error(m) {}
};

// Requested computation exceeds the configured size limits.
struct limit_error : std::runtime_error {
    explicit limit_error(const std::string& m) : std::runtime_error(m) {}
};

/* Exact binomial coefficient. Supported up to n = 64, where C(64,32)
   still fits in a signed 64-bit integer; larger n is rejected. */
inline std::int64_t binomial(int n, int k) {
    if (n < 0) throw validation_error("binomial: negative n");
    if (n > 64) throw limit_error("binomial: n > 64 unsupported");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::int64_t r = 1;
    for (int j = 1; j <= k; ++j) {
        // exact at every step: r * (n-k+j) is divisible by j
        Int t = Int(r) * (n - k + j) / j;
        r = t.convert_to<std::int64_t>();
    }
    return r;
}

}  // namespace dp
