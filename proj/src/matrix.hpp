#pragma once

#include <cstddef>
#include <vector>

#include "ints.hpp"

namespace dp {

/* Dense integer matrix, row-major, arbitrary-precision entries.
   Columns index the source basis, rows the target basis. */
class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    bool is_zero() const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix scaled(const Int& s) const;
    IntMatrix transposed() const;

    // Submatrix picking the given rows/columns, in the given order.
    IntMatrix slice(const std::vector<std::size_t>& row_idx,
                    const std::vector<std::size_t>& col_idx) const;

    // Horizontal concatenation [this | o]; row counts must agree.
    IntMatrix hconcat(const IntMatrix& o) const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);

  private:
    std::size_t rows_, cols_;
    std::vector<Int> data_;
};

}  // namespace dp
