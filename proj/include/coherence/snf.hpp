#pragma once

#include <cstddef>
#include <vector>

#include "coherence/bigint.hpp"

namespace coherence::linalg {

// Dense integer matrix, row major, arbitrary-precision entries.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    IntMatrix multiply(const IntMatrix& other) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

enum class Execution { Serial, Parallel };

struct SmithResult {
    // Nonzero diagonal entries d_1 | d_2 | ... of the Smith normal form.
    std::vector<Int> divisors;
    std::size_t rank() const { return divisors.size(); }
};

// Smith normal form by elementary row/column operations with smallest-pivot
// selection. The serial and parallel paths perform identical arithmetic in
// the same order; Parallel only distributes independent row/column updates
// across OpenMP threads, so results are bit-identical.
SmithResult smith_normal_form(IntMatrix a, Execution exec = Execution::Parallel);

}  // namespace coherence::linalg
