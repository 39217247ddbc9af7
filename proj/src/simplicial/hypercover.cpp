#include "weightcx/simplicial/hypercover.hpp"

#include "weightcx/simplicial/coskeleton.hpp"

#include <algorithm>
#include <random>

namespace weightcx::simplicial {

std::string MorphismClass::name() const
{
    switch (kind_) {
    case Kind::surjective:
        return "surjective";
    case Kind::bijective:
        return "bijective";
    case Kind::fibers_of_size:
        return "fibers-of-size-" + std::to_string(*sizes_.begin());
    case Kind::fiber_sizes: {
        std::string s = "fiber-sizes{";
        bool first = true;
        for (auto d : sizes_) {
            s += (first ? "" : ",") + std::to_string(d);
            first = false;
        }
        return s + "}";
    }
    }
    return {};
}

bool MorphismClass::contains(const FiniteSetMap& f) const
{
    switch (kind_) {
    case Kind::surjective:
        return f.surjective();
    case Kind::bijective:
        return f.bijective();
    case Kind::fibers_of_size:
    case Kind::fiber_sizes: {
        const auto sizes = f.fiber_sizes();
        return std::all_of(sizes.begin(), sizes.end(), [&](std::size_t s) { return sizes_.count(s) > 0; });
    }
    }
    return false;
}

FiniteSetMap base_change(const FiniteSetMap& f, const FiniteSetMap& g)
{
    FiniteSetMap out;
    out.target = g.source;
    for (std::size_t x = 0; x < f.source.size(); ++x)
        for (std::size_t z = 0; z < g.source.size(); ++z)
            if (f(x) == g(z)) {
                out.source.add("(" + f.source.id(x) + "," + g.source.id(z) + ")");
                out.assignment.push_back(z);
            }
    return out;
}

namespace {

FiniteSet numbered(std::size_t n, const std::string& prefix)
{
    FiniteSet s;
    for (std::size_t i = 0; i < n; ++i)
        s.add(prefix + std::to_string(i));
    return s;
}

/// A random map into a set of size m whose fiber sizes are drawn from the
/// allowed table when one is given (so that members of P are sampled).
FiniteSetMap sample_member(const MorphismClass& p, std::size_t m, std::mt19937_64& rng, const std::string& prefix)
{
    std::vector<std::size_t> fiber(m);
    std::vector<std::size_t> options;
    switch (p.kind()) {
    case MorphismClass::Kind::surjective:
        options = {1, 2};
        break;
    case MorphismClass::Kind::bijective:
        options = {1};
        break;
    default:
        options.assign(p.sizes().begin(), p.sizes().end());
        break;
    }
    for (auto& s : fiber)
        s = options[rng() % options.size()];
    FiniteSetMap f;
    f.target = numbered(m, prefix + "t");
    std::size_t n = 0;
    for (std::size_t y = 0; y < m; ++y)
        for (std::size_t k = 0; k < fiber[y]; ++k) {
            f.source.add(prefix + "s" + std::to_string(n++));
            f.assignment.push_back(y);
        }
    return f;
}

} // namespace

ClassAxiomReport check_class_axioms(const MorphismClass& p, std::uint64_t seed, int samples)
{
    ClassAxiomReport report;
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < samples; ++trial) {
        const std::size_t m = 1 + rng() % 3;
        // Bijections: a random permutation.
        FiniteSetMap perm;
        perm.source = numbered(m, "a");
        perm.target = numbered(m, "b");
        perm.assignment.resize(m);
        for (std::size_t i = 0; i < m; ++i)
            perm.assignment[i] = i;
        std::shuffle(perm.assignment.begin(), perm.assignment.end(), rng);
        if (report.contains_bijections && !p.contains(perm)) {
            report.contains_bijections = false;
            if (report.counterexample.empty())
                report.counterexample = "bijection of size " + std::to_string(m) + " not in class";
        }
        // Composition of two members.
        const FiniteSetMap g = sample_member(p, m, rng, "g");
        const FiniteSetMap f = sample_member(p, g.source.size(), rng, "f");
        FiniteSetMap f_into_g{f.source, g.source, f.assignment};
        if (report.closed_under_composition && !p.contains(compose(g, f_into_g))) {
            report.closed_under_composition = false;
            if (report.counterexample.empty())
                report.counterexample = "composite of two members not in class";
        }
        // Base change of a member along an arbitrary map.
        FiniteSetMap z;
        const std::size_t zs = 1 + rng() % 4;
        z.source = numbered(zs, "z");
        z.target = g.target;
        for (std::size_t i = 0; i < zs; ++i)
            z.assignment.push_back(rng() % m);
        if (report.closed_under_base_change && !p.contains(base_change(g, z))) {
            report.closed_under_base_change = false;
            if (report.counterexample.empty())
                report.counterexample = "base change of a member not in class";
        }
    }
    return report;
}

bool HypercoverReport::ok() const
{
    return std::all_of(degrees.begin(), degrees.end(), [](const Degree& d) { return d.in_class; });
}

int HypercoverReport::first_failure() const
{
    for (const auto& d : degrees)
        if (!d.in_class)
            return d.degree;
    return -1;
}

FiniteSetMap comparison_map(const SimplicialMap& f, int n)
{
    if (n == 0)
        return f.degree(0);
    const RelativeCoskeleton rc(f, n - 1, n);
    FiniteSetMap out;
    out.source = f.source.cells(n);
    out.target = rc.set().cells(n);
    for (std::size_t c = 0; c < f.source.size(n); ++c)
        out.assignment.push_back(rc.unit(f, n, c));
    return out;
}

HypercoverReport is_hypercover(const SimplicialMap& f, const MorphismClass& p, int up_to)
{
    if (f.level() < up_to || f.source.level() < up_to || f.target.level() < up_to)
        throw SimplicialError("is_hypercover: map not defined up to level " + std::to_string(up_to));
    HypercoverReport report;
    report.predicate = p.name();
    for (int n = 0; n <= up_to; ++n) {
        const FiniteSetMap m = comparison_map(f, n);
        report.degrees.push_back({n, p.contains(m), m.source.size(), m.target.size(), m.fiber_sizes()});
    }
    return report;
}

} // namespace weightcx::simplicial
