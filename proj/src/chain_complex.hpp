#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace dp {

/* Bounded chain complex of finitely generated free Z-modules
   C_l -> ... -> C_1 -> C_0. differentials[k-1] is d_k : C_k -> C_{k-1}
   with shape ranks[k-1] x ranks[k]. */
struct ChainComplex {
    std::vector<std::int64_t> ranks;
    std::vector<IntMatrix> differentials;

    ChainComplex() = default;
    ChainComplex(std::vector<std::int64_t> r, std::vector<IntMatrix> d);

    int length() const { return static_cast<int>(ranks.size()) - 1; }
    std::int64_t rank(int degree) const {
        return (degree >= 0 && degree <= length()) ? ranks[degree] : 0;
    }
    // d_k as a matrix; zero-shaped outside 1..length().
    IntMatrix differential(int k) const;

    // Shape checks plus d o d = 0; throws validation_error.
    void validate() const;

    // Degrees above the last non-zero rank dropped.
    ChainComplex trimmed() const;
};

ChainComplex complex_from_json(const std::string& text);
std::string complex_to_json(const ChainComplex& c);

}  // namespace dp
