#include "weightcx/simplicial/decomposition.hpp"

#include <map>

namespace weightcx::simplicial {

NormalForm decompose_cell(const TruncatedSimplicialSet& x, int k, std::size_t c)
{
    // c = s_i(d_i c) exactly when c is in the image of s_i.
    for (int i = 0; i < k; ++i) {
        const std::size_t below = x.face(k, i, c);
        if (x.degeneracy(k - 1, i, below) != c)
            continue;
        const NormalForm inner = decompose_cell(x, k - 1, below);
        return {compose(inner.surjection, codegeneracy(k - 1, i)), inner.cell};
    }
    return {identity_map(k), c};
}

bool is_degenerate(const TruncatedSimplicialSet& x, int k, std::size_t c)
{
    return !decompose_cell(x, k, c).nondegenerate();
}

std::vector<std::size_t> nondegenerate_cells(const TruncatedSimplicialSet& x, int k)
{
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < x.size(k); ++c)
        if (!is_degenerate(x, k, c))
            out.push_back(c);
    return out;
}

Decomposition nondegenerate_decomposition(const TruncatedSimplicialSet& x, int k)
{
    if (k < 0 || k > x.level())
        throw SimplicialError("nondegenerate_decomposition: degree out of range");
    Decomposition out;
    out.degree = k;
    std::map<Monotone, std::size_t> block_of;
    for (int l = k; l >= 0; --l)
        for (const auto& alpha : all_surjective(k, l)) {
            block_of[alpha] = out.blocks.size();
            out.blocks.push_back({alpha, {}});
        }
    std::vector<int> hits(x.size(k), 0);
    for (int l = k; l >= 0; --l) {
        const auto nd = nondegenerate_cells(x, l);
        for (const auto& alpha : all_surjective(k, l)) {
            auto& block = out.blocks[block_of.at(alpha)];
            for (auto y : nd) {
                const std::size_t cell = x.apply(alpha, y);
                block.cells.emplace_back(y, cell);
                ++hits[cell];
            }
        }
    }
    for (auto h : hits)
        if (h != 1)
            out.is_partition = false;
    return out;
}

FiniteSimplicialSet nondegenerate_presentation(const TruncatedSimplicialSet& x)
{
    FiniteSimplicialSet a;
    std::vector<std::map<std::size_t, std::size_t>> nd_index;
    for (int n = 0; n <= x.level(); ++n) {
        nd_index.emplace_back();
        for (auto y : nondegenerate_cells(x, n)) {
            std::vector<NormalForm> faces;
            for (int i = 0; n > 0 && i <= n; ++i) {
                const NormalForm f = decompose_cell(x, n - 1, x.face(n, i, y));
                faces.push_back({f.surjection, nd_index[static_cast<std::size_t>(f.base_dim())].at(f.cell)});
            }
            nd_index.back()[y] = a.add_cell(n, x.id(n, y), std::move(faces));
        }
    }
    return a;
}

namespace {

class DegeneracyExtension {
public:
    DegeneracyExtension(const TruncatedSimplicialSet& x, int level) : x_(x), out_(level)
    {
        const int base = x.level();
        for (int p = 0; p <= std::min(base, level); ++p)
            for (std::size_t c = 0; c < x.size(p); ++c)
                out_.add_cell(p, x.id(p, c));
        for (int p = base + 1; p <= level; ++p) {
            index_.emplace_back();
            cells_.emplace_back();
            for (int l = base; l >= 0; --l) {
                const auto nd = nondegenerate_cells(x, l);
                for (const auto& alpha : all_surjective(p, l))
                    for (auto y : nd) {
                        const NormalForm cell{alpha, y};
                        const std::string id = degenerate_id(alpha, x.id(l, y));
                        index_.back()[cell] = out_.add_cell(p, id);
                        cells_.back().push_back(cell);
                    }
            }
        }
        for (int p = 0; p <= level; ++p)
            for (std::size_t c = 0; c < out_.size(p); ++c) {
                const NormalForm nf = normal_form(p, c);
                if (p >= 1)
                    for (int i = 0; i <= p; ++i)
                        out_.set_face(p, i, c, resolve(compose(nf.surjection, coface(p, i)), nf.cell));
                if (p < level)
                    for (int i = 0; i <= p; ++i)
                        out_.set_degeneracy(p, i, c, resolve(compose(nf.surjection, codegeneracy(p, i)), nf.cell));
            }
    }

    const TruncatedSimplicialSet& result() const { return out_; }

    NormalForm normal_form(int p, std::size_t c) const
    {
        if (p <= x_.level())
            return decompose_cell(x_, p, c);
        return cells_.at(static_cast<std::size_t>(p - x_.level() - 1)).at(c);
    }

    /// The cell γ*(y) for any monotone γ : [q] → [ℓ] and nondegenerate y ∈ X_ℓ.
    std::size_t resolve(const Monotone& gamma, std::size_t y) const
    {
        const EpiMono em = factor(gamma);
        const std::size_t z = x_.apply(em.mono, y);
        const int q = gamma.source();
        if (q <= x_.level())
            return x_.apply(em.epi, z);
        const NormalForm inner = decompose_cell(x_, em.mono.source(), z);
        const NormalForm cell{compose(inner.surjection, em.epi), inner.cell};
        return index_[static_cast<std::size_t>(q - x_.level() - 1)].at(cell);
    }

private:
    static std::string degenerate_id(const Monotone& alpha, const std::string& base)
    {
        const auto js = degeneracy_indices(alpha);
        std::string s;
        for (auto it = js.rbegin(); it != js.rend(); ++it)
            s += "s" + std::to_string(*it);
        return s + "(" + base + ")";
    }

    TruncatedSimplicialSet x_;
    TruncatedSimplicialSet out_;
    std::vector<std::map<NormalForm, std::size_t>> index_;
    std::vector<std::vector<NormalForm>> cells_;
};

} // namespace

TruncatedSimplicialSet extend_by_degeneracies(const TruncatedSimplicialSet& x, int level)
{
    if (level <= x.level())
        return sk(x, level);
    return DegeneracyExtension(x, level).result();
}

SimplicialMap extend_by_degeneracies(const SimplicialMap& f, int level)
{
    if (level <= f.level())
        return sk(f, level);
    const DegeneracyExtension src(sk(f.source, f.level()), level);
    const DegeneracyExtension tgt(sk(f.target, f.level()), level);
    SimplicialMap g{src.result(), tgt.result(), {}};
    for (int p = 0; p <= level; ++p) {
        g.components.emplace_back();
        for (std::size_t c = 0; c < g.source.size(p); ++c) {
            if (p <= f.level()) {
                g.components.back().push_back(f(p, c));
                continue;
            }
            const NormalForm nf = src.normal_form(p, c);
            const std::size_t image = f(nf.base_dim(), nf.cell);
            const NormalForm tnf = decompose_cell(f.target, nf.base_dim(), image);
            g.components.back().push_back(tgt.resolve(compose(tnf.surjection, nf.surjection), tnf.cell));
        }
    }
    return g;
}

} // namespace weightcx::simplicial
