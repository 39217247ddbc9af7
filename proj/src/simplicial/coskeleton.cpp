#include "weightcx/simplicial/coskeleton.hpp"

#include "weightcx/simplicial/decomposition.hpp"

namespace weightcx::simplicial {

SkeletonShape::SkeletonShape(int p, int n) : p_(p), n_(n)
{
    for (int k = 0; k <= std::min(n, p); ++k)
        for (auto& theta : all_injective(k, p)) {
            index_[theta] = simplices_.size();
            simplices_.push_back(std::move(theta));
        }
}

namespace {

/// For each degree k ≤ n, cells grouped by their face tuple.
using FaceIndex = std::vector<std::map<std::vector<std::size_t>, std::vector<std::size_t>>>;

FaceIndex build_face_index(const TruncatedSimplicialSet& x, int n)
{
    FaceIndex index(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= n; ++k)
        for (std::size_t c = 0; c < x.size(k); ++c) {
            std::vector<std::size_t> key;
            for (int i = 0; i <= k; ++i)
                key.push_back(x.face(k, i, c));
            index[static_cast<std::size_t>(k)][key].push_back(c);
        }
    return index;
}

struct Backtracker {
    const TruncatedSimplicialSet& x;
    const SkeletonShape& shape;
    const FaceIndex& faces;
    std::vector<std::vector<std::size_t>> face_slots; // per simplex: shape indices of its faces
    Family current;
    std::vector<Family> out;

    void run(std::size_t at)
    {
        if (at == shape.size()) {
            out.push_back(current);
            return;
        }
        const int k = shape.dim(at);
        if (k == 0) {
            for (std::size_t v = 0; v < x.size(0); ++v) {
                current[at] = v;
                run(at + 1);
            }
            return;
        }
        std::vector<std::size_t> key;
        for (auto slot : face_slots[at])
            key.push_back(current[slot]);
        auto hit = faces[static_cast<std::size_t>(k)].find(key);
        if (hit == faces[static_cast<std::size_t>(k)].end())
            return;
        for (auto c : hit->second) {
            current[at] = c;
            run(at + 1);
        }
    }
};

std::string family_id(const TruncatedSimplicialSet& x, const SkeletonShape& shape, const Family& f)
{
    std::string id = "(";
    bool first = true;
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (shape.dim(i) != shape.n())
            continue;
        if (!first)
            id += ",";
        id += x.id(shape.dim(i), f[i]);
        first = false;
    }
    return id + ")";
}

} // namespace

std::vector<Family> enumerate_families(const TruncatedSimplicialSet& x, int n, int p)
{
    if (n > x.level())
        throw SimplicialError("enumerate_families: n exceeds level");
    const SkeletonShape shape(p, n);
    const FaceIndex faces = build_face_index(x, n);
    Backtracker bt{x, shape, faces, {}, Family(shape.size()), {}};
    for (std::size_t i = 0; i < shape.size(); ++i) {
        bt.face_slots.emplace_back();
        const int k = shape.dim(i);
        for (int j = 0; k > 0 && j <= k; ++j)
            bt.face_slots.back().push_back(shape.index(compose(shape.simplex(i), coface(k, j))));
    }
    bt.run(0);
    return std::move(bt.out);
}

Family unit_family(const TruncatedSimplicialSet& x, const SkeletonShape& shape, std::size_t c)
{
    Family f;
    f.reserve(shape.size());
    for (std::size_t i = 0; i < shape.size(); ++i)
        f.push_back(x.apply(shape.simplex(i), c));
    return f;
}

Family pull_family(const TruncatedSimplicialSet& x, const SkeletonShape& from, const SkeletonShape& to,
                   const Monotone& mu, const Family& family)
{
    Family out;
    out.reserve(to.size());
    for (std::size_t i = 0; i < to.size(); ++i) {
        const EpiMono em = factor(compose(mu, to.simplex(i)));
        out.push_back(x.apply(em.epi, family[from.index(em.mono)]));
    }
    return out;
}

Family restrict_family(const SkeletonShape& from, const SkeletonShape& to, const Family& family)
{
    Family out;
    for (std::size_t i = 0; i < to.size(); ++i)
        out.push_back(family[from.index(to.simplex(i))]);
    return out;
}

Family push_family(const SimplicialMap& f, const SkeletonShape& shape, const Family& family)
{
    Family out;
    out.reserve(family.size());
    for (std::size_t i = 0; i < shape.size(); ++i)
        out.push_back(f(shape.dim(i), family[i]));
    return out;
}

Coskeleton::Coskeleton(const TruncatedSimplicialSet& x, int n, int level) : n_(n)
{
    if (n < 0 || n > x.level())
        throw SimplicialError("cosk: n = " + std::to_string(n) + " outside 0.." + std::to_string(x.level()));
    if (level < n)
        throw SimplicialError("cosk: target level below n");
    x_ = sk(x, n);
    if (auto report = validate(x_); !report.ok())
        throw SimplicialError("cosk: input is not a valid simplicial set (" + report.violations.front().identity +
                              " at degree " + std::to_string(report.violations.front().degree) + ")");
    set_ = TruncatedSimplicialSet(level);
    families_.resize(static_cast<std::size_t>(level) + 1);
    lookup_.resize(static_cast<std::size_t>(level) + 1);
    for (int p = 0; p <= level; ++p) {
        shapes_.emplace_back(p, n);
        auto& fams = families_[static_cast<std::size_t>(p)];
        if (p <= n) {
            for (std::size_t c = 0; c < x_.size(p); ++c)
                fams.push_back(unit_family(x_, shapes_.back(), c));
        } else {
            fams = enumerate_families(x_, n, p);
        }
        for (std::size_t c = 0; c < fams.size(); ++c) {
            set_.add_cell(p, p <= n ? x_.id(p, c) : family_id(x_, shapes_.back(), fams[c]));
            lookup_[static_cast<std::size_t>(p)].emplace(fams[c], c);
        }
    }
    for (int p = 0; p <= level; ++p)
        for (std::size_t c = 0; c < set_.size(p); ++c) {
            const Family& fam = family(p, c);
            auto resolve = [&](int q, const Monotone& mu) {
                auto at = find(q, pull_family(x_, shape(p), shape(q), mu, fam));
                if (!at)
                    throw SimplicialError("cosk: face of a family is not a family (invalid input)");
                return *at;
            };
            if (p >= 1)
                for (int i = 0; i <= p; ++i)
                    set_.set_face(p, i, c, resolve(p - 1, coface(p, i)));
            if (p < level)
                for (int i = 0; i <= p; ++i)
                    set_.set_degeneracy(p, i, c, resolve(p + 1, codegeneracy(p, i)));
        }
}

std::optional<std::size_t> Coskeleton::find(int p, const Family& family) const
{
    const auto& table = lookup_.at(static_cast<std::size_t>(p));
    auto it = table.find(family);
    if (it == table.end())
        return std::nullopt;
    return it->second;
}

std::size_t Coskeleton::unit(const TruncatedSimplicialSet& x, int p, std::size_t c) const
{
    auto at = find(p, unit_family(x, shape(p), c));
    if (!at)
        throw SimplicialError("cosk unit: cell has no family (input differs from the coskeleton base)");
    return *at;
}

TruncatedSimplicialSet cosk(const TruncatedSimplicialSet& x, int n, int level)
{
    return Coskeleton(x, n, level).set();
}

SimplicialMap cosk_map(const SimplicialMap& f, int n, int level)
{
    const Coskeleton source(f.source, n, level);
    const Coskeleton target(f.target, n, level);
    const SimplicialMap fn = sk(f, n);
    SimplicialMap g{source.set(), target.set(), {}};
    for (int p = 0; p <= level; ++p) {
        g.components.emplace_back();
        for (std::size_t c = 0; c < source.set().size(p); ++c)
            g.components.back().push_back(*target.find(p, push_family(fn, source.shape(p), source.family(p, c))));
    }
    return g;
}

RelativeCoskeleton::RelativeCoskeleton(const SimplicialMap& f, int n, int level)
    : source_(f.source, n, level)
{
    if (f.level() < n)
        throw SimplicialError("relative cosk: map not defined up to degree n");
    if (auto report = validate(sk(f, n)); !report.ok())
        throw SimplicialError("relative cosk: map is not simplicial (" + report.violations.front().identity + ")");
    base_ = f.target.level() >= level ? sk(f.target, level) : extend_by_degeneracies(f.target, level);
    const Coskeleton base_cosk(base_, n, level);
    const SimplicialMap fn = sk(f, n);

    set_ = TruncatedSimplicialSet(level);
    cells_.resize(static_cast<std::size_t>(level) + 1);
    lookup_.resize(static_cast<std::size_t>(level) + 1);
    projection_ = SimplicialMap{{}, base_, {}};
    for (int p = 0; p <= level; ++p) {
        const SkeletonShape& shape = source_.shape(p);
        std::map<Family, std::vector<std::size_t>> base_by_family;
        for (std::size_t y = 0; y < base_.size(p); ++y)
            base_by_family[unit_family(base_, shape, y)].push_back(y);
        auto& cells = cells_[static_cast<std::size_t>(p)];
        projection_.components.emplace_back();
        for (std::size_t c = 0; c < source_.set().size(p); ++c) {
            const Family& fam = source_.family(p, c);
            auto hit = base_by_family.find(push_family(fn, shape, fam));
            if (hit == base_by_family.end())
                continue;
            for (auto y : hit->second) {
                const std::string id =
                    p <= n ? source_.set().id(p, c) : source_.set().id(p, c) + "@" + base_.id(p, y);
                lookup_[static_cast<std::size_t>(p)][{fam, y}] = set_.add_cell(p, id);
                cells.emplace_back(fam, y);
                projection_.components.back().push_back(y);
            }
        }
    }
    for (int p = 0; p <= level; ++p)
        for (std::size_t c = 0; c < set_.size(p); ++c) {
            const auto& [fam, y] = cells_[static_cast<std::size_t>(p)][c];
            auto resolve = [&](int q, const Monotone& mu, std::size_t y_image) {
                const Family pulled = pull_family(source_.base(), source_.shape(p), source_.shape(q), mu, fam);
                return *find(q, pulled, y_image);
            };
            if (p >= 1)
                for (int i = 0; i <= p; ++i)
                    set_.set_face(p, i, c, resolve(p - 1, coface(p, i), base_.face(p, i, y)));
            if (p < level)
                for (int i = 0; i <= p; ++i)
                    set_.set_degeneracy(p, i, c, resolve(p + 1, codegeneracy(p, i), base_.degeneracy(p, i, y)));
        }
    projection_.source = set_;
}

std::optional<std::size_t> RelativeCoskeleton::find(int p, const Family& family, std::size_t base_cell) const
{
    const auto& table = lookup_.at(static_cast<std::size_t>(p));
    auto it = table.find({family, base_cell});
    if (it == table.end())
        return std::nullopt;
    return it->second;
}

std::size_t RelativeCoskeleton::unit(const SimplicialMap& f, int p, std::size_t c) const
{
    auto at = find(p, unit_family(f.source, source_.shape(p), c), f(p, c));
    if (!at)
        throw SimplicialError("relative cosk unit: no matching cell");
    return *at;
}

SimplicialMap relative_cosk_map(const SimplicialMap& f, const RelativeCoskeleton& source,
                                const RelativeCoskeleton& target)
{
    const int level = source.set().level();
    const SimplicialMap fn = sk(f, source.n());
    SimplicialMap g{source.set(), target.set(), {}};
    for (int p = 0; p <= level; ++p) {
        g.components.emplace_back();
        const SkeletonShape& shape = source.source_coskeleton().shape(p);
        for (std::size_t c = 0; c < source.set().size(p); ++c) {
            auto at = target.find(p, push_family(fn, shape, source.family(p, c)), source.base_cell(p, c));
            if (!at)
                throw SimplicialError("relative cosk map: maps are not over a common base");
            g.components.back().push_back(*at);
        }
    }
    return g;
}

} // namespace weightcx::simplicial
