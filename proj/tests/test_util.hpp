#pragma once

#include <random>
#include <vector>

#include "chain_complex.hpp"
#include "matrix.hpp"
#include "smith.hpp"

namespace dptest {

inline dp::IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols,
                                   int max_abs) {
    std::uniform_int_distribution<int> dist(-max_abs, max_abs);
    dp::IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = dist(rng);
    return m;
}

/* Random bounded complex with d o d = 0: d_1 is free, each later d_k
   factors through a kernel basis of the previous differential. */
inline dp::ChainComplex random_complex(std::mt19937& rng, int max_length,
                                       std::int64_t max_rank, int max_abs) {
    std::uniform_int_distribution<int> len_dist(0, max_length);
    std::uniform_int_distribution<std::int64_t> rank_dist(0, max_rank);
    int length = len_dist(rng);
    std::vector<std::int64_t> ranks;
    for (int k = 0; k <= length; ++k) ranks.push_back(rank_dist(rng));

    dp::ChainComplex c;
    c.ranks = ranks;
    for (int k = 1; k <= length; ++k) {
        auto rows = static_cast<std::size_t>(ranks[static_cast<std::size_t>(k - 1)]);
        auto cols = static_cast<std::size_t>(ranks[static_cast<std::size_t>(k)]);
        if (k == 1) {
            c.differentials.push_back(random_matrix(rng, rows, cols, max_abs));
            continue;
        }
        dp::IntMatrix kernel = dp::kernel_basis(c.differentials.back());
        dp::IntMatrix coeff = random_matrix(rng, kernel.cols(), cols, 1);
        c.differentials.push_back(kernel * coeff);
    }
    c.validate();
    return c;
}

}  // namespace dptest
