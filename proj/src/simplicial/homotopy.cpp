#include "weightcx/simplicial/homotopy.hpp"

#include "weightcx/simplicial/coskeleton.hpp"

namespace weightcx::simplicial {

namespace {

/// Index of the constant map [p] → [1] with value i among cells of Δ[1]_p.
std::size_t constant_cell(const TruncatedSimplicialSet& interval, int p, int i)
{
    return interval.cells(p).index(std::string(static_cast<std::size_t>(p) + 1, static_cast<char>('0' + i)));
}

SimplicialMap as_simplicial(const FiniteSetMap& f)
{
    return SimplicialMap{constant(f.source, 0), constant(f.target, 0), {f.assignment}};
}

} // namespace

SimplicialMap restrict_to_end(const Homotopy& h, int i)
{
    const TruncatedSimplicialSet interval = standard_simplex(1, h.source.level());
    SimplicialMap out{h.source, h.target, {}};
    for (int p = 0; p <= h.source.level(); ++p) {
        out.components.emplace_back();
        const std::size_t width = interval.size(p);
        const std::size_t at = constant_cell(interval, p, i);
        for (std::size_t c = 0; c < h.source.size(p); ++c)
            out.components.back().push_back(h.map(p, c * width + at));
    }
    return out;
}

HomotopyCheck check_homotopy(const Homotopy& h)
{
    HomotopyCheck check;
    check.map_report = validate(h.map);
    if (!check.map_report.ok())
        return check;
    check.end0_ok = restrict_to_end(h, 0).components == h.end0.components;
    check.end1_ok = restrict_to_end(h, 1).components == h.end1.components;
    return check;
}

Homotopy build_homotopy_cosk0(const FiniteSetMap& f0, const FiniteSetMap& f1, int level)
{
    if (!(f0.source == f1.source) || !(f0.target == f1.target))
        throw SimplicialError("build_homotopy_cosk0: maps have different source or target");
    const Coskeleton source(constant(f0.source, 0), 0, level);
    const Coskeleton target(constant(f0.target, 0), 0, level);
    const TruncatedSimplicialSet interval = standard_simplex(1, level);
    const FiniteSetMap* ends[2] = {&f0, &f1};

    Homotopy h;
    h.source = source.set();
    h.target = target.set();
    h.map = SimplicialMap{product(h.source, interval), h.target, {}};
    for (int p = 0; p <= level; ++p) {
        h.map.components.emplace_back();
        for (std::size_t c = 0; c < h.source.size(p); ++c) {
            const Family& xs = source.family(p, c);
            for (const auto& phi : all_monotone(p, 1)) {
                Family ys;
                for (int i = 0; i <= p; ++i)
                    ys.push_back((*ends[phi(i)])(xs[static_cast<std::size_t>(i)]));
                h.map.components.back().push_back(*target.find(p, ys));
            }
        }
    }
    h.end0 = cosk_map(as_simplicial(f0), 0, level);
    h.end1 = cosk_map(as_simplicial(f1), 0, level);
    return h;
}

Homotopy build_homotopy_coskn(const SimplicialMap& f0, const SimplicialMap& f1, const SimplicialMap& x_to_s,
                              const SimplicialMap& y_to_s, int n, int level)
{
    if (f0.level() < n || f1.level() < n)
        throw SimplicialError("build_homotopy_coskn: maps not defined up to degree n");
    for (int k = 0; k < n; ++k)
        if (f0.components[static_cast<std::size_t>(k)] != f1.components[static_cast<std::size_t>(k)])
            throw SimplicialError("build_homotopy_coskn: maps disagree in degree " + std::to_string(k));
    for (const SimplicialMap* f : {&f0, &f1})
        for (int k = 0; k <= n; ++k)
            for (std::size_t c = 0; c < f->source.size(k); ++c)
                if (y_to_s(k, (*f)(k, c)) != x_to_s(k, c))
                    throw SimplicialError("build_homotopy_coskn: maps do not lie over the base");

    const RelativeCoskeleton source(x_to_s, n, level);
    const RelativeCoskeleton target(y_to_s, n, level);
    const TruncatedSimplicialSet interval = standard_simplex(1, level);

    Homotopy h;
    h.source = source.set();
    h.target = target.set();
    h.map = SimplicialMap{product(h.source, interval), h.target, {}};
    for (int p = 0; p <= level; ++p) {
        h.map.components.emplace_back();
        const SkeletonShape& shape = source.source_coskeleton().shape(p);
        for (std::size_t c = 0; c < h.source.size(p); ++c) {
            const Family& fam = source.family(p, c);
            for (const auto& phi : all_monotone(p, 1)) {
                Family image;
                for (std::size_t t = 0; t < shape.size(); ++t) {
                    const int k = shape.dim(t);
                    const Monotone psi = compose(phi, shape.simplex(t));
                    const bool use_f1 = k == n && psi.is_constant() && psi(0) == 1;
                    image.push_back((use_f1 ? f1 : f0)(k, fam[t]));
                }
                auto at = target.find(p, image, source.base_cell(p, c));
                if (!at)
                    throw SimplicialError("build_homotopy_coskn: image family missing from target");
                h.map.components.back().push_back(*at);
            }
        }
    }
    h.end0 = relative_cosk_map(f0, source, target);
    h.end1 = relative_cosk_map(f1, source, target);
    return h;
}

} // namespace weightcx::simplicial
