#include "weightcx/weight/complex.hpp"

#include <algorithm>
#include <optional>

namespace weightcx::weight {

using linalg::QMatrix;
using linalg::Rat;

namespace {

KaroubiObject zero_object() { return {AdditiveObject{}, MotiveMorphism{}}; }

/// Places `part` into `into` with block offsets (row, col).
void place(MotiveMorphism& into, const MotiveMorphism& part, std::size_t row, std::size_t col)
{
    for (const auto& [ij, h] : part.blocks)
        into.set(row + ij.first, col + ij.second, h);
}

struct Frame {
    bool plain = true;
    QMatrix basis;   // realized dim × rank
    QMatrix inverse; // rank × realized dim
};

Frame frame(const PresentedQCategory& cat, const Realization& r, const KaroubiObject& k)
{
    Frame f;
    f.plain = motives::is_plain(cat, k);
    if (!f.plain) {
        f.basis = linalg::column_space_basis(motives::realize(cat, r, k.idempotent));
        f.inverse = f.basis.cols() == 0 ? QMatrix(0, f.basis.rows()) : linalg::left_inverse(f.basis);
    }
    return f;
}

std::size_t frame_dim(const Realization& r, const KaroubiObject& k, const Frame& f)
{
    return f.plain ? motives::realized_dim(r, k.carrier) : f.basis.cols();
}

/// L_target · M · B_source in the frames' bases.
linalg::SparseQMatrix restrict_to_frames(const linalg::SparseQMatrix& m, const Frame& target, const Frame& source)
{
    if (target.plain && source.plain)
        return m;
    QMatrix dense = m.to_dense();
    if (!source.plain)
        dense = dense * source.basis;
    if (!target.plain)
        dense = target.inverse * dense;
    return linalg::SparseQMatrix::from_dense(dense);
}

} // namespace

KaroubiObject MotiveComplex::term(int n) const
{
    if (n < lo || n > hi())
        return zero_object();
    return terms[static_cast<std::size_t>(n - lo)];
}

MotiveMorphism MotiveComplex::differential(int n) const
{
    if (n <= lo || n > hi())
        return MotiveMorphism{term(n).carrier, term(n - 1).carrier, {}};
    return d[static_cast<std::size_t>(n - lo - 1)];
}

MotiveComplex plain_complex(const PresentedQCategory& cat, int lo, const std::vector<AdditiveObject>& terms,
                            std::vector<MotiveMorphism> d)
{
    MotiveComplex c;
    c.lo = lo;
    for (const auto& t : terms)
        c.terms.push_back(motives::plain(cat, t));
    c.d = std::move(d);
    return c;
}

std::vector<std::string> validate(const PresentedQCategory& cat, const MotiveComplex& c)
{
    std::vector<std::string> issues;
    const std::size_t expected = c.terms.empty() ? 0 : c.terms.size() - 1;
    if (c.d.size() != expected) {
        issues.push_back("expected " + std::to_string(expected) + " differentials, got " + std::to_string(c.d.size()));
        return issues;
    }
    for (int n = c.lo; n <= c.hi(); ++n) {
        const auto& k = c.terms[static_cast<std::size_t>(n - c.lo)];
        if (!(k.idempotent.source == k.carrier) || !(k.idempotent.target == k.carrier) ||
            !motives::well_typed(cat, k.idempotent))
            issues.push_back("term " + std::to_string(n) + ": idempotent is not an endomorphism of its carrier");
        else if (!(motives::compose(cat, k.idempotent, k.idempotent) == k.idempotent))
            issues.push_back("term " + std::to_string(n) + ": e∘e ≠ e");
    }
    if (!issues.empty())
        return issues;
    for (int n = c.lo + 1; n <= c.hi(); ++n) {
        const MotiveMorphism& dn = c.d[static_cast<std::size_t>(n - c.lo - 1)];
        const auto& src = c.term(n);
        const auto& tgt = c.term(n - 1);
        if (!(dn.source == src.carrier) || !(dn.target == tgt.carrier) || !motives::well_typed(cat, dn)) {
            issues.push_back("d_" + std::to_string(n) + " is mistyped");
            continue;
        }
        if (!(motives::compose(cat, tgt.idempotent, motives::compose(cat, dn, src.idempotent)) == dn))
            issues.push_back("d_" + std::to_string(n) + " is not a map of Karoubi objects");
    }
    if (!issues.empty())
        return issues;
    for (int n = c.lo + 2; n <= c.hi(); ++n)
        if (!motives::compose(cat, c.differential(n - 1), c.differential(n)).is_zero())
            issues.push_back("d_" + std::to_string(n - 1) + "∘d_" + std::to_string(n) + " ≠ 0");
    return issues;
}

MotiveMorphism ChainMap::component(int n) const
{
    auto it = components.find(n);
    if (it != components.end())
        return it->second;
    return MotiveMorphism{source.term(n).carrier, target.term(n).carrier, {}};
}

ChainMap identity_chain_map(const PresentedQCategory&, const MotiveComplex& c)
{
    ChainMap f{c, c, {}};
    for (int n = c.lo; n <= c.hi(); ++n)
        f.components[n] = c.term(n).idempotent;
    return f;
}

std::vector<std::string> chain_map_defects(const PresentedQCategory& cat, const ChainMap& f)
{
    std::vector<std::string> issues;
    const int lo = std::min(f.source.lo, f.target.lo);
    const int hi = std::max(f.source.hi(), f.target.hi());
    for (const auto& [n, m] : f.components)
        if (!(m.source == f.source.term(n).carrier) || !(m.target == f.target.term(n).carrier) ||
            !motives::well_typed(cat, m))
            issues.push_back("component " + std::to_string(n) + " is mistyped");
    if (!issues.empty())
        return issues;
    for (int n = lo; n <= hi; ++n) {
        const MotiveMorphism fn = f.component(n);
        if (!(motives::compose(cat, f.target.term(n).idempotent, motives::compose(cat, fn, f.source.term(n).idempotent)) ==
              fn))
            issues.push_back("component " + std::to_string(n) + " is not a map of Karoubi objects");
    }
    for (int n = lo; n <= hi + 1; ++n) {
        const MotiveMorphism lhs = motives::compose(cat, f.target.differential(n), f.component(n));
        const MotiveMorphism rhs = motives::compose(cat, f.component(n - 1), f.source.differential(n));
        if (!(lhs == rhs))
            issues.push_back("d∘f ≠ f∘d in degree " + std::to_string(n));
    }
    return issues;
}

ChainMap compose(const PresentedQCategory& cat, const ChainMap& g, const ChainMap& f)
{
    ChainMap out{f.source, g.target, {}};
    const int lo = std::max(f.source.lo, g.target.lo);
    const int hi = std::min(f.source.hi(), g.target.hi());
    for (int n = lo; n <= hi; ++n) {
        MotiveMorphism c = motives::compose(cat, g.component(n), f.component(n));
        if (!c.is_zero())
            out.components[n] = std::move(c);
    }
    return out;
}

MotiveComplex shift(const PresentedQCategory&, const MotiveComplex& c, int k)
{
    MotiveComplex s = c;
    s.lo = c.lo + k;
    if (k % 2 != 0)
        for (auto& d : s.d)
            d = Rat(-1) * d;
    return s;
}

MotiveComplex cone(const PresentedQCategory& cat, const ChainMap& f)
{
    if (auto defects = chain_map_defects(cat, f); !defects.empty())
        throw WeightError("cone: not a chain map (" + defects.front() + ")");
    const MotiveComplex& x = f.source;
    const MotiveComplex& y = f.target;
    if (x.empty() && y.empty())
        return {};
    std::optional<int> lo, hi;
    auto widen = [&](int a, int b) {
        lo = lo ? std::min(*lo, a) : a;
        hi = hi ? std::max(*hi, b) : b;
    };
    if (!y.empty())
        widen(y.lo, y.hi());
    if (!x.empty())
        widen(x.lo + 1, x.hi() + 1);

    MotiveComplex c;
    c.lo = *lo;
    for (int n = *lo; n <= *hi; ++n) {
        const KaroubiObject yn = y.term(n);
        const KaroubiObject xn = x.term(n - 1);
        c.terms.push_back({motives::direct_sum(yn.carrier, xn.carrier),
                           motives::direct_sum(cat, yn.idempotent, xn.idempotent)});
    }
    for (int n = *lo + 1; n <= *hi; ++n) {
        const KaroubiObject& src = c.terms[static_cast<std::size_t>(n - *lo)];
        const KaroubiObject& tgt = c.terms[static_cast<std::size_t>(n - 1 - *lo)];
        MotiveMorphism dn{src.carrier, tgt.carrier, {}};
        const std::size_t y_rows = y.term(n - 1).carrier.size();
        const std::size_t y_cols = y.term(n).carrier.size();
        place(dn, y.differential(n), 0, 0);
        place(dn, f.component(n - 1), 0, y_cols);
        place(dn, Rat(-1) * x.differential(n - 1), y_rows, y_cols);
        c.d.push_back(std::move(dn));
    }
    return c;
}

Triangle triangle(const PresentedQCategory& cat, const ChainMap& f)
{
    Triangle tri;
    tri.t = f.source;
    tri.x = f.target;
    tri.u = cone(cat, f);
    tri.t_shifted = shift(cat, tri.t, 1);
    tri.f = f;
    tri.g = ChainMap{tri.x, tri.u, {}};
    tri.h = ChainMap{tri.u, tri.t_shifted, {}};
    for (int n = tri.u.lo; n <= tri.u.hi(); ++n) {
        const KaroubiObject un = tri.u.term(n);
        const KaroubiObject xn = tri.x.term(n);
        const KaroubiObject tn1 = tri.t.term(n - 1);
        MotiveMorphism incl{xn.carrier, un.carrier, {}};
        place(incl, xn.idempotent, 0, 0);
        if (!incl.is_zero())
            tri.g.components[n] = std::move(incl);
        MotiveMorphism proj{un.carrier, tn1.carrier, {}};
        place(proj, tn1.idempotent, 0, xn.carrier.size());
        if (!proj.is_zero())
            tri.h.components[n] = std::move(proj);
        // U_n → X[1]_{n+1} = X_n, (x, t) ↦ x.
        MotiveMorphism fh{un.carrier, xn.carrier, {}};
        place(fh, xn.idempotent, 0, 0);
        if (!fh.is_zero())
            tri.fh_homotopy[n] = std::move(fh);
    }
    for (int n = tri.t.lo; n <= tri.t.hi(); ++n) {
        // T_n → U_{n+1} = X_{n+1} ⊕ T_n, t ↦ (0, t).
        const KaroubiObject tn = tri.t.term(n);
        const KaroubiObject u1 = tri.u.term(n + 1);
        MotiveMorphism s{tn.carrier, u1.carrier, {}};
        place(s, tn.idempotent, tri.x.term(n + 1).carrier.size(), 0);
        if (!s.is_zero())
            tri.gf_homotopy[n] = std::move(s);
    }
    return tri;
}

namespace {

MotiveMorphism homotopy_at(const std::map<int, MotiveMorphism>& s, const MotiveComplex& from, const MotiveComplex& to,
                           int n)
{
    auto it = s.find(n);
    if (it != s.end())
        return it->second;
    return MotiveMorphism{from.term(n).carrier, to.term(n + 1).carrier, {}};
}

/// Checks φ = d_to∘s_n + s_{n−1}∘d_from in every degree.
bool is_null_homotopy(const PresentedQCategory& cat, const ChainMap& phi, const std::map<int, MotiveMorphism>& s)
{
    const int lo = std::min(phi.source.lo, phi.target.lo) - 1;
    const int hi = std::max(phi.source.hi(), phi.target.hi()) + 1;
    for (int n = lo; n <= hi; ++n) {
        const MotiveMorphism lhs =
            motives::compose(cat, phi.target.differential(n + 1), homotopy_at(s, phi.source, phi.target, n)) +
            motives::compose(cat, homotopy_at(s, phi.source, phi.target, n - 1), phi.source.differential(n));
        if (!(lhs == phi.component(n)))
            return false;
    }
    return true;
}

/// f[1] : T[1] → X[1].
ChainMap shifted(const PresentedQCategory& cat, const ChainMap& f)
{
    ChainMap out{shift(cat, f.source, 1), shift(cat, f.target, 1), {}};
    for (const auto& [n, m] : f.components)
        out.components[n + 1] = m;
    return out;
}

bool vanishes_on_homology(const PresentedQCategory& cat, const Realization& r, const ChainMap& phi)
{
    const linalg::QComplex s = realize_complex(cat, r, phi.source);
    const linalg::QComplex t = realize_complex(cat, r, phi.target);
    const auto m = realize_chain_map(cat, r, phi);
    for (int n = s.lo(); n <= s.hi(); ++n)
        if (linalg::induced_homology_rank(s, t, m, n) != 0)
            return false;
    return true;
}

} // namespace

bool TriangleReport::ok() const
{
    auto all = [](const std::map<std::string, bool>& m) {
        return std::all_of(m.begin(), m.end(), [](const auto& kv) { return kv.second; });
    };
    return maps_are_chain_maps && formal_null_homotopies && all(homology_composites_vanish) && all(euler_additive);
}

TriangleReport check_triangle(const PresentedQCategory& cat, const Triangle& tri,
                              const std::vector<Realization>& realizations)
{
    TriangleReport report;
    report.maps_are_chain_maps = chain_map_defects(cat, tri.f).empty() && chain_map_defects(cat, tri.g).empty() &&
                                 chain_map_defects(cat, tri.h).empty();
    const ChainMap gf = compose(cat, tri.g, tri.f);
    const ChainMap hg = compose(cat, tri.h, tri.g);
    const ChainMap fh = compose(cat, shifted(cat, tri.f), tri.h);
    bool hg_zero = true;
    for (const auto& [n, m] : hg.components)
        hg_zero = hg_zero && m.is_zero();
    report.formal_null_homotopies =
        is_null_homotopy(cat, gf, tri.gf_homotopy) && hg_zero && is_null_homotopy(cat, fh, tri.fh_homotopy);
    for (const auto& r : realizations) {
        report.homology_composites_vanish[r.name()] = vanishes_on_homology(cat, r, gf) &&
                                                      vanishes_on_homology(cat, r, hg) &&
                                                      vanishes_on_homology(cat, r, fh);
        const auto chi_x = euler_char(cat, tri.x, {r}).realized_rank.at(r.name());
        const auto chi_t = euler_char(cat, tri.t, {r}).realized_rank.at(r.name());
        const auto chi_u = euler_char(cat, tri.u, {r}).realized_rank.at(r.name());
        report.euler_additive[r.name()] = chi_x == chi_t + chi_u;
    }
    return report;
}

linalg::QComplex realize_complex(const PresentedQCategory& cat, const Realization& r, const MotiveComplex& c)
{
    if (c.empty())
        return {};
    std::vector<Frame> frames;
    std::vector<std::size_t> dims;
    for (const auto& k : c.terms) {
        frames.push_back(frame(cat, r, k));
        dims.push_back(frame_dim(r, k, frames.back()));
    }
    std::vector<linalg::SparseQMatrix> d;
    d.emplace_back(0, dims[0]);
    for (std::size_t k = 1; k < c.terms.size(); ++k)
        d.push_back(restrict_to_frames(motives::realize_sparse(cat, r, c.d[k - 1]), frames[k - 1], frames[k]));
    return linalg::QComplex(c.lo, std::move(dims), std::move(d));
}

linalg::ChainMapMatrices realize_chain_map(const PresentedQCategory& cat, const Realization& r, const ChainMap& f)
{
    linalg::ChainMapMatrices out;
    const int lo = std::max(f.source.lo, f.target.lo);
    const int hi = std::min(f.source.hi(), f.target.hi());
    for (int n = lo; n <= hi; ++n) {
        const Frame s = frame(cat, r, f.source.term(n));
        const Frame t = frame(cat, r, f.target.term(n));
        out[n] = restrict_to_frames(motives::realize_sparse(cat, r, f.component(n)), t, s).to_dense();
    }
    return out;
}

motives::K0Class euler_char(const PresentedQCategory& cat, const MotiveComplex& c,
                            const std::vector<Realization>& realizations)
{
    motives::K0Class k;
    for (const auto& r : realizations)
        k.realized_rank[r.name()] = 0;
    for (int n = c.lo; n <= c.hi(); ++n) {
        const KaroubiObject& t = c.terms[static_cast<std::size_t>(n - c.lo)];
        if (t.carrier.summands.empty())
            continue;
        const int sign = n % 2 == 0 ? 1 : -1;
        k.terms.push_back({sign, t});
        for (const auto& r : realizations)
            k.realized_rank[r.name()] += sign * static_cast<long>(motives::realized_rank(cat, r, t));
    }
    return k;
}

MotiveComplex concentrated(const KaroubiObject& k) { return MotiveComplex{0, {k}, {}}; }

} // namespace weightcx::weight
