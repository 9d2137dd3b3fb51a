#include "coherence/snf.hpp"

#include <algorithm>
#include <cstdlib>

namespace coherence::linalg {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
    return m;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Int& v) { return v == 0; });
}

IntMatrix IntMatrix::multiply(const IntMatrix& other) const {
    IntMatrix out(rows_, other.cols());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(r, k);
            if (a == 0) continue;
            for (std::size_t c = 0; c < other.cols(); ++c) out.at(r, c) += a * other.at(k, c);
        }
    return out;
}

namespace {

Int abs_value(const Int& v) { return v < 0 ? Int(-v) : v; }

// Smallest-magnitude nonzero entry of the trailing submatrix.
bool find_pivot(const IntMatrix& a, std::size_t s, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    Int best;
    for (std::size_t r = s; r < a.rows(); ++r)
        for (std::size_t c = s; c < a.cols(); ++c) {
            const Int& v = a.at(r, c);
            if (v == 0) continue;
            Int av = abs_value(v);
            if (!found || av < best) {
                found = true;
                best = av;
                pr = r;
                pc = c;
            }
        }
    return found;
}

void swap_rows(IntMatrix& a, std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(r1, c), a.at(r2, c));
}

void swap_cols(IntMatrix& a, std::size_t c1, std::size_t c2) {
    if (c1 == c2) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a.at(r, c1), a.at(r, c2));
}

// Subtracts quotient multiples of the pivot row from every lower row. The
// updates are independent across rows, so the parallel path does the same
// arithmetic as the serial one and the outcome is bit-identical.
void reduce_column(IntMatrix& a, std::size_t s, Execution exec) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::size_t r = s + 1; r < rows; ++r) {
            if (a.at(r, s) == 0) continue;
            Int q = a.at(r, s) / a.at(s, s);
            if (q == 0) continue;
            for (std::size_t c = s; c < cols; ++c) a.at(r, c) -= q * a.at(s, c);
        }
    } else {
        for (std::size_t r = s + 1; r < rows; ++r) {
            if (a.at(r, s) == 0) continue;
            Int q = a.at(r, s) / a.at(s, s);
            if (q == 0) continue;
            for (std::size_t c = s; c < cols; ++c) a.at(r, c) -= q * a.at(s, c);
        }
    }
}

void reduce_row(IntMatrix& a, std::size_t s, Execution exec) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::size_t c = s + 1; c < cols; ++c) {
            if (a.at(s, c) == 0) continue;
            Int q = a.at(s, c) / a.at(s, s);
            if (q == 0) continue;
            for (std::size_t r = s; r < rows; ++r) a.at(r, c) -= q * a.at(r, s);
        }
    } else {
        for (std::size_t c = s + 1; c < cols; ++c) {
            if (a.at(s, c) == 0) continue;
            Int q = a.at(s, c) / a.at(s, s);
            if (q == 0) continue;
            for (std::size_t r = s; r < rows; ++r) a.at(r, c) -= q * a.at(r, s);
        }
    }
}

bool pivot_is_lone(const IntMatrix& a, std::size_t s) {
    for (std::size_t r = s + 1; r < a.rows(); ++r)
        if (a.at(r, s) != 0) return false;
    for (std::size_t c = s + 1; c < a.cols(); ++c)
        if (a.at(s, c) != 0) return false;
    return true;
}

bool find_nondivisible(const IntMatrix& a, std::size_t s, std::size_t& r_out) {
    for (std::size_t r = s + 1; r < a.rows(); ++r)
        for (std::size_t c = s + 1; c < a.cols(); ++c)
            if (a.at(r, c) % a.at(s, s) != 0) {
                r_out = r;
                return true;
            }
    return false;
}

}  // namespace

SmithResult smith_normal_form(IntMatrix a, Execution exec) {
    SmithResult result;
    const std::size_t nmin = std::min(a.rows(), a.cols());
    for (std::size_t s = 0; s < nmin; ++s) {
        std::size_t pr = s, pc = s;
        if (!find_pivot(a, s, pr, pc)) break;
        swap_rows(a, s, pr);
        swap_cols(a, s, pc);
        while (true) {
            reduce_column(a, s, exec);
            reduce_row(a, s, exec);
            if (!pivot_is_lone(a, s)) {
                // Remainders are smaller than the old pivot, so the minimum
                // strictly drops and the loop terminates.
                find_pivot(a, s, pr, pc);
                swap_rows(a, s, pr);
                swap_cols(a, s, pc);
                continue;
            }
            std::size_t bad_row = 0;
            if (find_nondivisible(a, s, bad_row)) {
                // Fold the offending row into the pivot row; the next round
                // leaves a remainder below the pivot and shrinks it.
                for (std::size_t c = s; c < a.cols(); ++c) a.at(s, c) += a.at(bad_row, c);
                continue;
            }
            break;
        }
        if (a.at(s, s) < 0) a.at(s, s) = -a.at(s, s);
        result.divisors.push_back(a.at(s, s));
    }
    return result;
}

}  // namespace coherence::linalg
