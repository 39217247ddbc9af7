#include "weightcx/descent/cech.hpp"

#include <algorithm>

namespace weightcx::descent {

TruncatedSimplicialSet cech_nerve(const FiniteSetMap& p, int level)
{
    if (auto defect = p.defect(); !defect.empty())
        throw DescentError("cech_nerve: " + defect);
    TruncatedSimplicialSet x(level);
    const auto fibers = p.fibers();
    std::vector<std::size_t> rank_in_fiber(p.source.size());
    for (const auto& fiber : fibers)
        for (std::size_t k = 0; k < fiber.size(); ++k)
            rank_in_fiber[fiber[k]] = k;

    // Degree n lists (t, b) for t in degree n−1 and b in the fiber of t, in
    // that order, which is lexicographic. start[n][t] is the index of (t, b₀).
    const auto levels = static_cast<std::size_t>(level) + 1;
    std::vector<std::vector<std::vector<std::size_t>>> tuples(levels);
    std::vector<std::vector<std::size_t>> start(levels);
    for (std::size_t a = 0; a < p.source.size(); ++a)
        tuples[0].push_back({a});
    for (std::size_t n = 1; n < levels; ++n)
        for (const auto& t : tuples[n - 1]) {
            start[n].push_back(tuples[n].size());
            for (auto b : fibers[p(t.front())]) {
                auto u = t;
                u.push_back(b);
                tuples[n].push_back(std::move(u));
            }
        }
    auto index_of = [&](const std::vector<std::size_t>& t) {
        std::size_t i = t[0];
        for (std::size_t n = 1; n < t.size(); ++n)
            i = start[n][i] + rank_in_fiber[t[n]];
        return i;
    };

    for (std::size_t n = 0; n < levels; ++n)
        for (const auto& t : tuples[n]) {
            std::string id;
            if (n == 0) {
                id = p.source.id(t[0]);
            } else {
                id = "(";
                for (std::size_t i = 0; i < t.size(); ++i)
                    id += (i ? "," : "") + p.source.id(t[i]);
                id += ")";
            }
            x.add_cell(static_cast<int>(n), std::move(id));
        }
    for (int n = 0; n <= level; ++n)
        for (std::size_t c = 0; c < x.size(n); ++c) {
            const auto& t = tuples[static_cast<std::size_t>(n)][c];
            for (int i = 0; n > 0 && i <= n; ++i) {
                auto u = t;
                u.erase(u.begin() + i);
                x.set_face(n, i, c, index_of(u));
            }
            for (int i = 0; n < level && i <= n; ++i) {
                auto u = t;
                u.insert(u.begin() + i, t[static_cast<std::size_t>(i)]);
                x.set_degeneracy(n, i, c, index_of(u));
            }
        }
    return x;
}

namespace {

QComplex linearize_valid(const TruncatedSimplicialSet& x, const std::optional<FiniteSetMap>& augmentation)
{
    std::vector<std::size_t> dims;
    std::vector<linalg::SparseQMatrix> d;
    if (augmentation) {
        if (augmentation->source.size() != x.size(0) || !augmentation->defect().empty())
            throw DescentError("linearize: augmentation does not start at degree 0");
        dims.push_back(augmentation->target.size());
        d.emplace_back(0, augmentation->target.size());
        linalg::SparseQMatrix e(augmentation->target.size(), x.size(0));
        for (std::size_t c = 0; c < x.size(0); ++c)
            e.add((*augmentation)(c), c, 1);
        dims.push_back(x.size(0));
        d.push_back(std::move(e));
    } else {
        dims.push_back(x.size(0));
        d.emplace_back(0, x.size(0));
    }
    for (int n = 1; n <= x.level(); ++n) {
        linalg::SparseQMatrix m(x.size(n - 1), x.size(n));
        for (std::size_t c = 0; c < x.size(n); ++c)
            for (int i = 0; i <= n; ++i)
                m.add(x.face(n, i, c), c, i % 2 == 0 ? 1 : -1);
        dims.push_back(x.size(n));
        d.push_back(std::move(m));
    }
    return QComplex(augmentation ? -1 : 0, std::move(dims), std::move(d));
}

} // namespace

QComplex linearize(const TruncatedSimplicialSet& x, const std::optional<FiniteSetMap>& augmentation)
{
    if (auto report = simplicial::validate(x); !report.ok())
        throw DescentError("linearize: invalid simplicial data (" + report.violations.front().identity + ")");
    return linearize_valid(x, augmentation);
}

linalg::ChainMapMatrices linearize_map(const SimplicialMap& f)
{
    linalg::ChainMapMatrices out;
    for (int n = 0; n <= f.level(); ++n) {
        QMatrix m(f.target.size(n), f.source.size(n));
        for (std::size_t c = 0; c < f.source.size(n); ++c)
            m(f(n, c), c) = 1;
        out.emplace(n, std::move(m));
    }
    return out;
}

AugmentedCechComplex augmented_cech(const FiniteSetMap& p, int level)
{
    AugmentedCechComplex out{p, level, cech_nerve(p, level), {}};
    // The nerve is simplicial by construction.
    out.complex = linearize_valid(out.nerve, p);
    return out;
}

std::size_t constant_fiber_size(const FiniteSetMap& p)
{
    const auto sizes = p.fiber_sizes();
    if (sizes.empty())
        throw DescentError("contracting homotopy: empty base");
    for (auto s : sizes)
        if (s != sizes.front() || s == 0)
            throw DescentError("contracting homotopy: fibers are not all of one nonzero size");
    return sizes.front();
}

std::map<int, linalg::SparseQMatrix> contracting_homotopy(const FiniteSetMap& p, int level)
{
    const std::size_t d = constant_fiber_size(p);
    const auto fibers = p.fibers();
    std::map<int, linalg::SparseQMatrix> h;

    linalg::SparseQMatrix h0(p.source.size(), p.target.size());
    for (std::size_t y = 0; y < p.target.size(); ++y)
        for (auto x : fibers[y])
            h0.add(x, y, linalg::Rat(1, d));
    h.emplace(-1, std::move(h0));

    // h_n is the transfer of the last face. Tuples are in lexicographic
    // order, so the extensions (t, x) of the t-th tuple are the cells
    // t·d, …, t·d + d − 1 of the next degree.
    std::size_t size = p.source.size();
    for (int n = 0; n < level; ++n, size *= d) {
        const linalg::Rat coeff(n % 2 == 0 ? -1 : 1, d);
        linalg::SparseQMatrix m(size * d, size);
        for (std::size_t t = 0; t < size; ++t)
            for (std::size_t k = 0; k < d; ++k)
                m.add(t * d + k, t, coeff);
        h.emplace(n, std::move(m));
    }
    return h;
}

AcyclicityReport verify_cech_acyclic(const FiniteSetMap& p, int level)
{
    AcyclicityReport report;
    report.level = level;
    report.surjective = p.surjective();
    report.homology = linalg::homology_dims(augmented_cech(p, level).complex);
    report.acyclic = std::all_of(report.homology.begin(), report.homology.end(),
                                 [&](const auto& kv) { return kv.first >= level || kv.second == 0; });
    return report;
}

TotalComplexes total_complex(const SimplicialMap& f)
{
    const int level = f.source.level();
    if (f.target.level() != level || f.level() != level)
        throw DescentError("total_complex: level mismatch");
    return {linearize(f.source), linearize(f.target), linearize_map(f)};
}

bool DescentReport::iso_below_level() const
{
    return std::all_of(degrees.begin(), degrees.end(), [](const Degree& d) { return d.iso; });
}

DescentReport verify_descent(const SimplicialMap& f, int level)
{
    if (f.level() < level || f.source.level() < level || f.target.level() < level)
        throw DescentError("verify_descent: map not defined up to level " + std::to_string(level));
    const SimplicialMap g = simplicial::sk(f, level);
    DescentReport report;
    report.level = level;
    report.hypercover = simplicial::is_hypercover(g, simplicial::MorphismClass::surjective(), level);
    const TotalComplexes tot = total_complex(g);
    const auto hs = linalg::homology_dims(tot.source);
    const auto ht = linalg::homology_dims(tot.target);
    for (int n = 0; n < level; ++n) {
        DescentReport::Degree d;
        d.degree = n;
        d.source_homology = hs.at(n);
        d.target_homology = ht.at(n);
        d.induced_rank = linalg::induced_homology_rank(tot.source, tot.target, tot.map, n);
        d.iso = d.source_homology == d.target_homology && d.induced_rank == d.source_homology;
        report.degrees.push_back(d);
    }
    return report;
}

} // namespace weightcx::descent
