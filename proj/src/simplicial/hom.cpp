#include "weightcx/simplicial/hom.hpp"

#include <map>

namespace weightcx::simplicial {

namespace {

struct HomSearch {
    const FiniteSimplicialSet& a;
    const TruncatedSimplicialSet& x;
    std::vector<std::map<std::vector<std::size_t>, std::vector<std::size_t>>> by_faces;
    std::vector<std::pair<int, std::size_t>> order;
    HomElement current;
    std::vector<HomElement> out;

    void run(std::size_t at)
    {
        if (at == order.size()) {
            out.push_back(current);
            return;
        }
        const auto [dim, c] = order[at];
        auto& slot = current[static_cast<std::size_t>(dim)][c];
        if (dim == 0) {
            for (std::size_t v = 0; v < x.size(0); ++v) {
                slot = v;
                run(at + 1);
            }
            return;
        }
        std::vector<std::size_t> key;
        for (int i = 0; i <= dim; ++i)
            key.push_back(hom_image(x, current, a.face(dim, i, c)));
        const auto& table = by_faces[static_cast<std::size_t>(dim)];
        auto hit = table.find(key);
        if (hit == table.end())
            return;
        for (auto cell : hit->second) {
            slot = cell;
            run(at + 1);
        }
    }
};

} // namespace

std::vector<HomElement> hom_delta(const FiniteSimplicialSet& a, const TruncatedSimplicialSet& x)
{
    const int top = a.generation_level();
    if (top > x.level())
        throw SimplicialError("hom_delta: generation level " + std::to_string(top) + " exceeds level " +
                              std::to_string(x.level()));
    HomSearch search{a, x, {}, {}, {}, {}};
    search.by_faces.resize(static_cast<std::size_t>(std::max(top, 0)) + 1);
    for (int k = 1; k <= top; ++k)
        for (std::size_t c = 0; c < x.size(k); ++c) {
            std::vector<std::size_t> key;
            for (int i = 0; i <= k; ++i)
                key.push_back(x.face(k, i, c));
            search.by_faces[static_cast<std::size_t>(k)][key].push_back(c);
        }
    for (int k = 0; k <= top; ++k) {
        search.current.emplace_back(a.count(k), kUnset);
        for (std::size_t c = 0; c < a.count(k); ++c)
            search.order.emplace_back(k, c);
    }
    search.run(0);
    return std::move(search.out);
}

std::size_t hom_image(const TruncatedSimplicialSet& x, const HomElement& h, const NormalForm& cell)
{
    const std::size_t base = h.at(static_cast<std::size_t>(cell.base_dim())).at(cell.cell);
    return cell.nondegenerate() ? base : x.apply(cell.surjection, base);
}

HomElement precompose(const FiniteSimplicialSet& c, const FiniteSimplicialSet& a, const FiniteSimplicialMap& g,
                      const TruncatedSimplicialSet& x, const HomElement& h)
{
    HomElement out;
    for (int k = 0; k <= c.generation_level(); ++k) {
        out.emplace_back();
        for (std::size_t w = 0; w < c.count(k); ++w)
            out.back().push_back(hom_image(x, h, apply(c, a, g, nondegenerate(k, w))));
    }
    return out;
}

FiniteSimplicialSet skeleton(const FiniteSimplicialSet& a, int n)
{
    FiniteSimplicialSet out;
    for (int k = 0; k <= std::min(n, a.generation_level()); ++k)
        for (std::size_t c = 0; c < a.count(k); ++c) {
            std::vector<NormalForm> faces;
            for (int i = 0; k > 0 && i <= k; ++i)
                faces.push_back(a.face(k, i, c));
            out.add_cell(k, a.id(k, c), std::move(faces));
        }
    return out;
}

} // namespace weightcx::simplicial
