#pragma once

#include <optional>
#include <string>

#include "coherence/bigint.hpp"
#include "coherence/errors.hpp"

namespace coherence::dl {

// Availability of one operation Q^i on a class of the given degree under an
// n-stage structure. Lower-indexed operations Q_j exist for j <= n - p; the
// upper indexing is related by the piecewise regrading below.
struct Availability {
    enum class Status { Available, ZeroByInstability, NotProvidedByStage };
    Status status = Status::ZeroByInstability;
    std::optional<Int> lower_index;
    std::optional<Int> target_degree;
};

// n - p, the largest usable skeletal index. Requires n_stage > p.
Int max_lower_index(const Int& p, const Int& n_stage);

// Regrading Q^i -> Q_j without consulting any stage:
//   p = 2:  zero if i < |x|, else j = i - |x|;
//   p odd:  zero if 2i < |x|, else j = (2i - |x|)(p - 1).
Availability regrade(const Int& p, const Int& i, const Int& class_degree);

// Full availability check against an n-stage structure.
Availability availability(const Int& p, const Int& n_stage, const Int& i,
                          const Int& class_degree);

struct UpperOpsWindow {
    std::optional<Int> max_upper_index;  // empty when no operation survives
    std::string constraint;              // e.g. "2i-|x| <= 1" or "i-|x| <= 2"
};

// Largest upper index i with Q^i available (nonzero and within the stage),
// plus the symbolic window constraint on i.
UpperOpsWindow available_upper_ops(const Int& p, const Int& n_stage, const Int& class_degree);

// Degree of Q^i(x): |x| + 2i(p-1) at odd primes, |x| + i at p = 2.
// Raises InstabilityZero when the regrading zero clause applies.
Int target_degree(const Int& p, const Int& i, const Int& class_degree);

}  // namespace coherence::dl
