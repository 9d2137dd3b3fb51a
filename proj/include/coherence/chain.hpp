#pragma once

#include <map>
#include <vector>

#include "coherence/errors.hpp"
#include "coherence/snf.hpp"

namespace coherence::linalg {

struct HomologySummary {
    std::size_t rank = 0;
    std::vector<Int> torsion;  // elementary divisors > 1 of the cycle quotient
};

// A bounded chain complex of finitely generated free Z-modules. boundary[k]
// is the map C_k -> C_{k-1} (as a matrix with dim C_{k-1} rows and dim C_k
// columns); boundary[0] is ignored and treated as zero.
class ChainComplexOverZ {
public:
    ChainComplexOverZ(std::vector<std::size_t> ranks, std::vector<IntMatrix> boundaries);

    std::size_t top_degree() const { return ranks_.empty() ? 0 : ranks_.size() - 1; }
    std::size_t rank(std::size_t k) const { return k < ranks_.size() ? ranks_[k] : 0; }
    const IntMatrix& boundary(std::size_t k) const;

    // Exact check that consecutive boundaries compose to zero.
    bool boundaries_compose_to_zero() const;

    std::map<std::size_t, HomologySummary> homology(Execution exec = Execution::Parallel) const;

private:
    std::vector<std::size_t> ranks_;
    std::vector<IntMatrix> boundaries_;
};

}  // namespace coherence::linalg
