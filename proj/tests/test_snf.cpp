#include "coherence/snf.hpp"

#include <random>

#include "doctest.h"

using namespace coherence;
using linalg::Execution;
using linalg::IntMatrix;

TEST_CASE("smith normal form of small matrices") {
    auto diag23 = IntMatrix::from_rows({{2, 0}, {0, 3}});
    auto r = linalg::smith_normal_form(diag23);
    REQUIRE(r.divisors.size() == 2);
    CHECK(r.divisors[0] == 1);
    CHECK(r.divisors[1] == 6);

    // Divisors determined by gcds of minors: d1 = 2, d1*d2 = 4.
    auto rect = IntMatrix::from_rows({{4, 6, 10}, {2, 2, 6}});
    auto r2 = linalg::smith_normal_form(rect);
    REQUIRE(r2.divisors.size() == 2);
    CHECK(r2.divisors[0] == 2);
    CHECK(r2.divisors[1] == 2);

    auto zero = IntMatrix(3, 2);
    CHECK(linalg::smith_normal_form(zero).rank() == 0);

    // d1 = gcd of entries = 2, gcd of 2x2 minors = 4, |det| = 624.
    auto m = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
    auto r3 = linalg::smith_normal_form(m);
    REQUIRE(r3.divisors.size() == 3);
    CHECK(r3.divisors[0] == 2);
    CHECK(r3.divisors[1] == 2);
    CHECK(r3.divisors[2] == 156);
}

TEST_CASE("divisor chain and parallel/serial agreement on random matrices") {
    std::mt19937 rng(20260810);
    std::uniform_int_distribution<int> dim(1, 12);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int trial = 0; trial < 60; ++trial) {
        IntMatrix m(static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)));
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = entry(rng);
        auto serial = linalg::smith_normal_form(m, Execution::Serial);
        auto parallel = linalg::smith_normal_form(m, Execution::Parallel);
        REQUIRE(serial.divisors == parallel.divisors);
        for (std::size_t i = 0; i + 1 < serial.divisors.size(); ++i) {
            CHECK(serial.divisors[i] > 0);
            CHECK(serial.divisors[i + 1] % serial.divisors[i] == 0);
        }
    }
}

TEST_CASE("rank matches a fraction-free elimination oracle") {
    auto rational_rank = [](IntMatrix m) {
        std::size_t rank = 0;
        for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
            std::size_t pivot = rank;
            while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
            if (pivot == m.rows()) continue;
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(rank, c), m.at(pivot, c));
            for (std::size_t r = rank + 1; r < m.rows(); ++r) {
                if (m.at(r, col) == 0) continue;
                Int a = m.at(rank, col), b = m.at(r, col);
                for (std::size_t c = 0; c < m.cols(); ++c)
                    m.at(r, c) = m.at(r, c) * a - m.at(rank, c) * b;
            }
            ++rank;
        }
        return rank;
    };

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int trial = 0; trial < 40; ++trial) {
        IntMatrix m(6, 8);
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = entry(rng);
        CHECK(linalg::smith_normal_form(m).rank() == rational_rank(m));
    }
}
