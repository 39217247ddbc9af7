#include "weightcx/weight/reduce.hpp"

#include <optional>
#include <tuple>

namespace weightcx::weight {

using linalg::Rat;

namespace {

/// λ when h = λ·id_a with λ ≠ 0.
std::optional<Rat> identity_multiple(const PresentedQCategory& cat, const motives::HomElement& h)
{
    if (h.source != h.target || h.is_zero())
        return std::nullopt;
    const motives::HomElement id = cat.identity(h.source);
    std::optional<Rat> scalar;
    for (std::size_t k = 0; k < h.coeffs.size(); ++k) {
        if (sgn(id.coeffs[k]) != 0)
            scalar = h.coeffs[k] / id.coeffs[k];
    }
    if (!scalar || !(*scalar * id == h))
        return std::nullopt;
    return scalar;
}

AdditiveObject without(const AdditiveObject& a, std::size_t k)
{
    AdditiveObject out = a;
    out.summands.erase(out.summands.begin() + static_cast<std::ptrdiff_t>(k));
    return out;
}

std::size_t reindex(std::size_t i, std::size_t removed) { return i > removed ? i - 1 : i; }

} // namespace

MotiveComplex cancel(const PresentedQCategory& cat, const MotiveComplex& c, const Cancellation& step)
{
    const int n = step.degree;
    if (n <= c.lo || n > c.hi())
        throw WeightError("cancel: no differential d_" + std::to_string(n));
    const KaroubiObject src = c.term(n);
    const KaroubiObject tgt = c.term(n - 1);
    if (!motives::is_plain(cat, src) || !motives::is_plain(cat, tgt))
        throw WeightError("cancel: terms in degrees " + std::to_string(n) + ", " + std::to_string(n - 1) +
                          " are not plain");
    const MotiveMorphism dn = c.differential(n);
    if (step.source >= src.carrier.size() || step.target >= tgt.carrier.size())
        throw WeightError("cancel: summand index out of range");
    const auto lambda = identity_multiple(cat, dn.at(cat, step.target, step.source));
    if (!lambda || *lambda != step.scalar || src.carrier.summands[step.source] != step.object)
        throw WeightError("cancel: block (" + std::to_string(step.target) + ", " + std::to_string(step.source) +
                          ") of d_" + std::to_string(n) + " is not the recorded multiple of an identity");

    const AdditiveObject new_src = without(src.carrier, step.source);
    const AdditiveObject new_tgt = without(tgt.carrier, step.target);
    MotiveComplex out;
    out.lo = c.lo;
    for (int m = c.lo; m <= c.hi(); ++m) {
        if (m == n)
            out.terms.push_back(motives::plain(cat, new_src));
        else if (m == n - 1)
            out.terms.push_back(motives::plain(cat, new_tgt));
        else
            out.terms.push_back(c.term(m));
    }
    for (int m = c.lo + 1; m <= c.hi(); ++m) {
        const MotiveMorphism d = c.differential(m);
        MotiveMorphism nd{out.term(m).carrier, out.term(m - 1).carrier, {}};
        if (m == n) {
            // δ − γ φ⁻¹ β
            const Rat inv = 1 / *lambda;
            for (const auto& [ij, h] : d.blocks)
                if (ij.first != step.target && ij.second != step.source)
                    nd.set(reindex(ij.first, step.target), reindex(ij.second, step.source), h);
            for (const auto& [gij, gamma] : d.blocks) {
                if (gij.second != step.source || gij.first == step.target)
                    continue;
                for (const auto& [bij, beta] : d.blocks) {
                    if (bij.first != step.target || bij.second == step.source)
                        continue;
                    const std::size_t i = reindex(gij.first, step.target);
                    const std::size_t j = reindex(bij.second, step.source);
                    nd.set(i, j, nd.at(cat, i, j) - inv * cat.compose(gamma, beta));
                }
            }
        } else if (m == n + 1) {
            for (const auto& [ij, h] : d.blocks)
                if (ij.first != step.source)
                    nd.set(reindex(ij.first, step.source), ij.second, h);
        } else if (m == n - 1) {
            for (const auto& [ij, h] : d.blocks)
                if (ij.second != step.target)
                    nd.set(ij.first, reindex(ij.second, step.target), h);
        } else {
            nd = d;
        }
        out.d.push_back(std::move(nd));
    }
    return out;
}

namespace {

std::optional<Cancellation> find_cancellation(const PresentedQCategory& cat, const MotiveComplex& c)
{
    for (int n = c.lo + 1; n <= c.hi(); ++n) {
        const KaroubiObject src = c.term(n);
        const KaroubiObject tgt = c.term(n - 1);
        if (!motives::is_plain(cat, src) || !motives::is_plain(cat, tgt))
            continue;
        const MotiveMorphism d = c.differential(n);
        // Blocks are keyed (target, source); scan by source summand first.
        std::optional<Cancellation> best;
        for (const auto& [ij, h] : d.blocks) {
            const auto lambda = identity_multiple(cat, h);
            if (!lambda)
                continue;
            Cancellation cand{n, ij.second, ij.first, h.source, *lambda};
            if (!best || std::pair(cand.source, cand.target) < std::pair(best->source, best->target))
                best = cand;
        }
        if (best)
            return best;
    }
    return std::nullopt;
}

} // namespace

std::pair<MotiveComplex, std::vector<Cancellation>> cancel_all(const PresentedQCategory& cat, const MotiveComplex& c)
{
    std::pair<MotiveComplex, std::vector<Cancellation>> out{c, {}};
    while (auto step = find_cancellation(cat, out.first)) {
        out.first = cancel(cat, out.first, *step);
        out.second.push_back(*step);
    }
    return out;
}

ReductionResult reduce(const PresentedQCategory& cat, const MotiveComplex& c, const Realization& r)
{
    if (auto issues = validate(cat, c); !issues.empty())
        throw WeightError("reduce: invalid complex (" + issues.front() + ")");
    ReductionResult result;
    result.homology_before = linalg::homology_dims(realize_complex(cat, r, c));
    std::tie(result.reduced, result.log) = cancel_all(cat, c);
    result.homology_after = linalg::homology_dims(realize_complex(cat, r, result.reduced));
    return result;
}

MotiveComplex replay(const PresentedQCategory& cat, const MotiveComplex& c, const std::vector<Cancellation>& log)
{
    MotiveComplex out = c;
    for (const auto& step : log)
        out = cancel(cat, out, step);
    return out;
}

bool is_zero_complex(const MotiveComplex& c)
{
    for (const auto& t : c.terms)
        if (!t.carrier.summands.empty())
            return false;
    return true;
}

} // namespace weightcx::weight
