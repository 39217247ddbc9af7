#pragma once

#include "weightcx/motives/additive.hpp"

#include <map>
#include <string>
#include <vector>

namespace weightcx::motives {

/// A formal signed sum of Karoubi objects with its realized ranks. Equality
/// in K₀ is only observed through the realized integers.
struct K0Class {
    struct Term {
        int sign = 1;
        KaroubiObject object;
    };
    std::vector<Term> terms;
    /// Realization name ↦ Σ sign · rank(realized idempotent).
    std::map<std::string, long> realized_rank;
};

K0Class k0_class(const PresentedQCategory& cat, const KaroubiObject& k, const std::vector<Realization>& realizations);

K0Class operator+(const K0Class& a, const K0Class& b);
K0Class operator-(const K0Class& a);
K0Class operator-(const K0Class& a, const K0Class& b);

} // namespace weightcx::motives
