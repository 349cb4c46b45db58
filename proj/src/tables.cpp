#include "tables.hpp"

#include <algorithm>
#include <sstream>

#include "partitions.hpp"

namespace dp {

std::vector<std::vector<Cell>> table_grid(int n, int k) {
    auto sur = enumerate_surjections(n, k);
    std::vector<std::vector<Cell>> grid(sur.size(), std::vector<Cell>(n + 1, Cell::empty));
    for (int i = 0; i <= n; ++i) {
        for (auto m : s_set(n, k, i)) grid[m - 1][i] = Cell::cross;
        for (auto m : s_tilde_set(n, k, i)) grid[m - 1][i] = Cell::cross_star;
    }
    return grid;
}

std::string table_text(int n, int k) {
    auto sur = enumerate_surjections(n, k);
    auto grid = table_grid(n, k);

    std::vector<std::string> labels(sur.size());
    std::size_t label_w = 0;
    for (std::size_t r = 0; r < sur.size(); ++r) {
        labels[r] = std::to_string(r + 1) + "  " + sur[r].str();
        label_w = std::max(label_w, labels[r].size());
    }

    std::ostringstream os;
    os << "(n,k) = (" << n << "," << k << ")\n";
    os << std::string(label_w, ' ');
    for (int i = 0; i <= n; ++i) {
        std::string h = "i=" + std::to_string(i);
        os << "  " << h << std::string(h.size() < 4 ? 4 - h.size() : 0, ' ');
    }
    os << '\n';
    for (std::size_t r = 0; r < sur.size(); ++r) {
        os << labels[r] << std::string(label_w - labels[r].size(), ' ');
        for (int i = 0; i <= n; ++i) {
            const char* c = grid[r][i] == Cell::cross        ? "×"
                            : grid[r][i] == Cell::cross_star ? "×*"
                                                             : "";
            // the multiplication sign is one column wide but two bytes
            std::string pad(grid[r][i] == Cell::empty        ? 4
                            : grid[r][i] == Cell::cross_star ? 2
                                                             : 3,
                            ' ');
            os << "  " << c << pad;
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace dp
