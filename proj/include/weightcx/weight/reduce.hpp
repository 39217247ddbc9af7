#pragma once

#include "weightcx/weight/complex.hpp"

#include <map>
#include <utility>
#include <vector>

namespace weightcx::weight {

/// One Gaussian cancellation: the block of d_degree from summand `source`
/// of C_degree to summand `target` of C_{degree−1} was scalar · id_object.
/// Summand indices refer to the complex as it stood before this step.
struct Cancellation {
    int degree = 0;
    std::size_t source = 0;
    std::size_t target = 0;
    std::size_t object = 0;
    linalg::Rat scalar;

    friend bool operator==(const Cancellation&, const Cancellation&) = default;
};

struct ReductionResult {
    MotiveComplex reduced;
    std::vector<Cancellation> log;
    std::map<int, std::size_t> homology_before;
    std::map<int, std::size_t> homology_after;

    bool preserved() const { return homology_before == homology_after; }
};

/// Cancels one pair. Throws WeightError unless the block at (target, source)
/// of d_degree is scalar · id between plain terms.
MotiveComplex cancel(const PresentedQCategory& cat, const MotiveComplex& c, const Cancellation& step);

/// Cancels pairs until no block of a differential between plain terms is an
/// invertible multiple of an identity; scans degrees and summands in order.
std::pair<MotiveComplex, std::vector<Cancellation>> cancel_all(const PresentedQCategory& cat, const MotiveComplex& c);

/// cancel_all with homology measured under `r` before and after.
ReductionResult reduce(const PresentedQCategory& cat, const MotiveComplex& c, const Realization& r);

/// Applies a cancellation log in order.
MotiveComplex replay(const PresentedQCategory& cat, const MotiveComplex& c, const std::vector<Cancellation>& log);

/// Every term has an empty carrier.
bool is_zero_complex(const MotiveComplex& c);

} // namespace weightcx::weight
