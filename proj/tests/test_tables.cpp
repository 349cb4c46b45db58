#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "doctest.h"
#include "partitions.hpp"
#include "tables.hpp"

using namespace dp;

namespace {

std::vector<std::string> grid_chars(int n, int k) {
    auto grid = table_grid(n, k);
    std::vector<std::string> out;
    for (const auto& row : grid) {
        std::string s;
        for (Cell c : row)
            s += c == Cell::cross_star ? 's' : c == Cell::cross ? 'x' : '.';
        out.push_back(s);
    }
    return out;
}

}  // namespace

TEST_CASE("membership tables for small (n,k)") {
    using G = std::vector<std::string>;
    CHECK(grid_chars(1, 1) == G{"ss"});
    CHECK(grid_chars(2, 1) == G{"s.x", ".xs"});
    CHECK(grid_chars(2, 2) == G{"sss"});
    CHECK(grid_chars(3, 1) == G{"s..x", ".x.x", "..xs"});
    CHECK(grid_chars(3, 2) == G{"ss.x", "s.xs", ".xss"});
    CHECK(grid_chars(4, 1) == G{"s...x", ".x..x", "..x.x", "...xs"});
    CHECK(grid_chars(4, 2) == G{"ss..x", "s.x.x", "s..xs", ".xs.x", ".x.xs", "..xss"});
    CHECK(grid_chars(5, 1) == G{"s....x", ".x...x", "..x..x", "...x.x", "....xs"});
    CHECK(grid_chars(5, 2) == G{"ss...x", "s.x..x", "s..x.x", "s...xs", ".xs..x", ".x.x.x",
                                ".x..xs", "..xs.x", "..x.xs", "...xss"});
}

TEST_CASE("grid cells agree with the ordinal sets") {
    for (int n = 1; n <= 7; ++n)
        for (int k = 1; k <= n; ++k) {
            auto grid = table_grid(n, k);
            REQUIRE(static_cast<std::int64_t>(grid.size()) == binomial(n, k));
            for (int i = 0; i <= n; ++i) {
                auto s = s_set(n, k, i);
                auto st = s_tilde_set(n, k, i);
                for (std::size_t r = 0; r < grid.size(); ++r) {
                    bool in_s = std::find(s.begin(), s.end(),
                                          static_cast<std::int64_t>(r) + 1) != s.end();
                    bool in_st = std::find(st.begin(), st.end(),
                                           static_cast<std::int64_t>(r) + 1) != st.end();
                    Cell want = in_st ? Cell::cross_star : in_s ? Cell::cross : Cell::empty;
                    CHECK(grid[r][static_cast<std::size_t>(i)] == want);
                    // every starred cell is also a plain membership cell
                    if (in_st) CHECK(in_s);
                }
            }
        }
}

TEST_CASE("text rendering carries the ordinals and partitions") {
    std::string t = table_text(4, 2);
    CHECK(t.find("(n,k) = (4,2)") != std::string::npos);
    CHECK(t.find("4  (2,1,2)") != std::string::npos);
    CHECK(t.find("i=0") != std::string::npos);
    CHECK(t.find("i=4") != std::string::npos);
    CHECK(t.find("×*") != std::string::npos);
}
