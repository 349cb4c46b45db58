#pragma once

#include <string>
#include <vector>

namespace dp {

enum class Cell { empty, cross, cross_star };

/* The (n,k) membership table: rows = surjections in order, columns
   i = 0..n; cross marks S^{n,k}_i, the star marks S~^{n,k}_i. */
std::vector<std::vector<Cell>> table_grid(int n, int k);

// Aligned text rendering: ordinal, partition, x / x* cells.
std::string table_text(int n, int k);

}  // namespace dp
