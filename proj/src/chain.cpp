#include "coherence/chain.hpp"

namespace coherence::linalg {

ChainComplexOverZ::ChainComplexOverZ(std::vector<std::size_t> ranks,
                                     std::vector<IntMatrix> boundaries)
    : ranks_(std::move(ranks)), boundaries_(std::move(boundaries)) {
    if (boundaries_.size() != ranks_.size())
        throw InvariantError("one boundary matrix per chain degree expected");
    for (std::size_t k = 1; k < ranks_.size(); ++k) {
        if (boundaries_[k].rows() != ranks_[k - 1] || boundaries_[k].cols() != ranks_[k])
            throw InvariantError("boundary " + std::to_string(k) + " has wrong shape");
    }
}

const IntMatrix& ChainComplexOverZ::boundary(std::size_t k) const {
    if (k >= boundaries_.size()) throw InvariantError("no boundary in degree " + std::to_string(k));
    return boundaries_[k];
}

bool ChainComplexOverZ::boundaries_compose_to_zero() const {
    for (std::size_t k = 2; k < boundaries_.size(); ++k)
        if (!boundaries_[k - 1].multiply(boundaries_[k]).is_zero()) return false;
    return true;
}

std::map<std::size_t, HomologySummary> ChainComplexOverZ::homology(Execution exec) const {
    std::vector<SmithResult> snf(ranks_.size() + 1);
    for (std::size_t k = 1; k < ranks_.size(); ++k) snf[k] = smith_normal_form(boundaries_[k], exec);

    std::map<std::size_t, HomologySummary> out;
    for (std::size_t k = 0; k < ranks_.size(); ++k) {
        HomologySummary h;
        std::size_t rank_in = k + 1 < ranks_.size() ? snf[k + 1].rank() : 0;
        std::size_t rank_out = k >= 1 ? snf[k].rank() : 0;
        h.rank = ranks_[k] - rank_out - rank_in;
        if (k + 1 < ranks_.size())
            for (const Int& d : snf[k + 1].divisors)
                if (d > 1) h.torsion.push_back(d);
        out[k] = std::move(h);
    }
    return out;
}

}  // namespace coherence::linalg
