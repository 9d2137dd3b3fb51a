#include "coherence/dyerlashof.hpp"

#include <sstream>

namespace coherence::dl {

namespace {

void require_degree(const Int& class_degree) {
    if (class_degree < 0) throw InvalidGenerator("class degree must be non-negative");
}

}  // namespace

Int max_lower_index(const Int& p, const Int& n_stage) {
    if (n_stage <= p)
        throw StageTooLow("an n-stage structure provides operations only for n > p; got n = " +
                          n_stage.str() + ", p = " + p.str());
    return n_stage - p;
}

Availability regrade(const Int& p, const Int& i, const Int& class_degree) {
    require_degree(class_degree);
    Availability a;
    if (p == 2) {
        if (i < class_degree) return a;  // zero by instability
        a.status = Availability::Status::Available;
        a.lower_index = i - class_degree;
        a.target_degree = class_degree + i;
    } else {
        if (2 * i < class_degree) return a;
        a.status = Availability::Status::Available;
        a.lower_index = (2 * i - class_degree) * (p - 1);
        a.target_degree = class_degree + 2 * i * (p - 1);
    }
    return a;
}

Availability availability(const Int& p, const Int& n_stage, const Int& i,
                          const Int& class_degree) {
    Int limit = max_lower_index(p, n_stage);
    Availability a = regrade(p, i, class_degree);
    if (a.status == Availability::Status::Available && *a.lower_index > limit)
        return {Availability::Status::NotProvidedByStage, a.lower_index, std::nullopt};
    return a;
}

UpperOpsWindow available_upper_ops(const Int& p, const Int& n_stage, const Int& class_degree) {
    require_degree(class_degree);
    Int limit = max_lower_index(p, n_stage);
    UpperOpsWindow w;
    std::ostringstream constraint;
    if (p == 2) {
        // i - |x| ranges over 0..limit.
        w.max_upper_index = class_degree + limit;
        constraint << "i-|x| <= " << limit.str();
    } else {
        Int m = limit / (p - 1);  // 2i - |x| <= m
        constraint << "2i-|x| <= " << m.str();
        Int i_max = (class_degree + m) / 2;
        if (2 * i_max >= class_degree) w.max_upper_index = i_max;
        // Otherwise |x| is odd and the window [0, m] holds no integer of the
        // right parity, so every candidate operation is zero or out of range.
    }
    w.constraint = constraint.str();
    return w;
}

Int target_degree(const Int& p, const Int& i, const Int& class_degree) {
    require_degree(class_degree);
    Availability a = regrade(p, i, class_degree);
    if (a.status != Availability::Status::Available)
        throw InstabilityZero("Q^" + i.str() + " vanishes on degree " + class_degree.str() +
                              (p == 2 ? " (i < |x|)" : " (2i < |x|)"));
    return *a.target_degree;
}

}  // namespace coherence::dl
