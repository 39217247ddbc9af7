#include "weightcx/weight/universal.hpp"

#include <algorithm>

namespace weightcx::weight {

bool UniversalReport::ok() const
{
    for (const auto& [name, degrees] : realizations)
        for (const auto& d : degrees)
            if (!d.iso)
                return false;
    return true;
}

ChainMap cone_comparison(const PresentedQCategory& cat, const MotiveSquare& sq)
{
    for (const auto* m : {&sq.g, &sq.f, &sq.a, &sq.b})
        if (auto issues = validate(cat, *m); !issues.empty())
            throw WeightError("universal: invalid map in square (" + issues.front() + ")");
    if (!(sq.g.source.components == sq.a.source.components) || !(sq.g.target.components == sq.b.source.components) ||
        !(sq.f.source.components == sq.a.target.components) || !(sq.f.target.components == sq.b.target.components))
        throw WeightError("universal: square maps do not share corners");
    for (std::size_t n = 0; n < sq.g.components.size(); ++n)
        if (!(motives::compose(cat, sq.b.components[n], sq.g.components[n]) ==
              motives::compose(cat, sq.f.components[n], sq.a.components[n])))
            throw WeightError("universal: square does not commute in degree " + std::to_string(n));

    const MotiveComplex cg = cone(cat, gamma_map(cat, sq.g));
    const MotiveComplex cf = cone(cat, gamma_map(cat, sq.f));
    ChainMap out{cg, cf, {}};
    for (int n = cg.lo; n <= cg.hi(); ++n) {
        const auto bn = n <= sq.b.source.level() ? sq.b.components[static_cast<std::size_t>(n)]
                                                  : MotiveMorphism{};
        const auto an = n - 1 >= 0 && n - 1 <= sq.a.source.level() ? sq.a.components[static_cast<std::size_t>(n - 1)]
                                                                   : MotiveMorphism{};
        MotiveMorphism m = motives::direct_sum(cat, bn, an);
        m.source = cg.term(n).carrier;
        m.target = cf.term(n).carrier;
        if (!m.is_zero())
            out.components[n] = std::move(m);
    }
    if (auto defects = chain_map_defects(cat, out); !defects.empty())
        throw WeightError("universal: induced cone map is not a chain map (" + defects.front() + ")");
    return out;
}

UniversalReport verify_universal_equivalence(const PresentedQCategory& cat, const MotiveSquare& square,
                                             const std::vector<Realization>& realizations, int level)
{
    const ChainMap phi = cone_comparison(cat, square);
    UniversalReport report;
    report.level = level < 0 ? square.g.source.level() : level;
    for (const auto& r : realizations) {
        const linalg::QComplex s = realize_complex(cat, r, phi.source);
        const linalg::QComplex t = realize_complex(cat, r, phi.target);
        const auto m = realize_chain_map(cat, r, phi);
        const auto hs = linalg::homology_dims(s);
        const auto ht = linalg::homology_dims(t);
        auto& degrees = report.realizations[r.name()];
        for (int n = 0; n < report.level; ++n) {
            UniversalReport::Degree d;
            d.degree = n;
            d.source_homology = hs.count(n) ? hs.at(n) : 0;
            d.target_homology = ht.count(n) ? ht.at(n) : 0;
            d.induced_rank = linalg::induced_homology_rank(s, t, m, n);
            d.iso = d.source_homology == d.target_homology && d.induced_rank == d.source_homology;
            degrees.push_back(d);
        }
    }
    return report;
}

} // namespace weightcx::weight
