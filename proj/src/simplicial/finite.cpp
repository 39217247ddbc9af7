#include "weightcx/simplicial/finite.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <set>

namespace weightcx::simplicial {

std::size_t FiniteSimplicialSet::add_cell(int dim, std::string id, std::vector<NormalForm> faces)
{
    if (dim < 0)
        throw SimplicialError("negative cell dimension");
    for (int d = 0; d <= generation_level(); ++d)
        for (const auto& existing : ids_[static_cast<std::size_t>(d)])
            if (existing == id)
                throw SimplicialError("duplicate nondegenerate cell id '" + id + "'");
    if (dim == 0 && !faces.empty())
        throw SimplicialError("vertex '" + id + "' cannot have faces");
    if (dim > 0 && faces.size() != static_cast<std::size_t>(dim) + 1)
        throw SimplicialError("cell '" + id + "' needs " + std::to_string(dim + 1) + " faces");
    for (const auto& f : faces) {
        if (f.dim() != dim - 1 || !f.surjection.is_surjective() || f.base_dim() > dim - 1 ||
            f.cell >= count(f.base_dim()))
            throw SimplicialError("cell '" + id + "' has a malformed face");
    }
    while (generation_level() < dim) {
        ids_.emplace_back();
        faces_.emplace_back();
    }
    ids_[static_cast<std::size_t>(dim)].push_back(std::move(id));
    faces_[static_cast<std::size_t>(dim)].push_back(std::move(faces));
    return ids_[static_cast<std::size_t>(dim)].size() - 1;
}

std::size_t FiniteSimplicialSet::count(int dim) const
{
    if (dim < 0 || dim > generation_level())
        return 0;
    return ids_[static_cast<std::size_t>(dim)].size();
}

std::size_t FiniteSimplicialSet::total_cells() const
{
    std::size_t n = 0;
    for (const auto& v : ids_)
        n += v.size();
    return n;
}

std::size_t FiniteSimplicialSet::index(int dim, const std::string& id) const
{
    for (std::size_t c = 0; c < count(dim); ++c)
        if (ids_[static_cast<std::size_t>(dim)][c] == id)
            return c;
    throw SimplicialError("no nondegenerate " + std::to_string(dim) + "-cell '" + id + "'");
}

const NormalForm& FiniteSimplicialSet::face(int dim, int i, std::size_t c) const
{
    return faces_.at(static_cast<std::size_t>(dim)).at(c).at(static_cast<std::size_t>(i));
}

namespace {

NormalForm pull_injective(const FiniteSimplicialSet& a, const Monotone& mono, std::size_t cell)
{
    // mono = δ^j ∘ mono' for j outside the image, so mono*(y) = mono'*(d_j y).
    std::vector<bool> hit(static_cast<std::size_t>(mono.target) + 1, false);
    for (auto v : mono.values)
        hit[static_cast<std::size_t>(v)] = true;
    for (int j = mono.target; j >= 0; --j) {
        if (hit[static_cast<std::size_t>(j)])
            continue;
        Monotone rest{{}, mono.target - 1};
        for (auto v : mono.values)
            rest.values.push_back(v < j ? v : v - 1);
        return a.act(rest, a.face(mono.target, j, cell));
    }
    return nondegenerate(mono.target, cell);
}

} // namespace

NormalForm FiniteSimplicialSet::act(const Monotone& mu, const NormalForm& cell) const
{
    // μ*(α*y) = (α∘μ)*y and α∘μ = ι∘σ gives σ*(ι*y).
    const EpiMono em = factor(compose(cell.surjection, mu));
    const NormalForm inner = pull_injective(*this, em.mono, cell.cell);
    return NormalForm{compose(inner.surjection, em.epi), inner.cell};
}

std::vector<NormalForm> FiniteSimplicialSet::cells_in_degree(int k) const
{
    std::vector<NormalForm> out;
    for (int l = std::min(k, generation_level()); l >= 0; --l)
        for (const auto& alpha : all_surjective(k, l))
            for (std::size_t y = 0; y < count(l); ++y)
                out.push_back({alpha, y});
    return out;
}

std::string FiniteSimplicialSet::cell_id(const NormalForm& cell) const
{
    const std::string& base = id(cell.base_dim(), cell.cell);
    const auto js = degeneracy_indices(cell.surjection);
    if (js.empty())
        return base;
    std::string s;
    for (auto it = js.rbegin(); it != js.rend(); ++it)
        s += "s" + std::to_string(*it);
    return s + "(" + base + ")";
}

NormalForm FiniteSimplicialSet::parse_cell_id(const std::string& text) const
{
    for (int d = 0; d <= generation_level(); ++d)
        for (std::size_t c = 0; c < count(d); ++c)
            if (id(d, c) == text)
                return nondegenerate(d, c);
    static const std::regex pattern(R"(^((?:s\d+)+)\((.*)\)$)");
    std::smatch m;
    if (!std::regex_match(text, m, pattern))
        throw SimplicialError("unknown cell '" + text + "'");
    const std::string word = m[1];
    const std::string base = m[2];
    std::vector<int> js; // as written: j_r first
    static const std::regex token(R"(s(\d+))");
    for (auto it = std::sregex_iterator(word.begin(), word.end(), token); it != std::sregex_iterator(); ++it)
        js.push_back(std::stoi((*it)[1]));
    for (std::size_t i = 1; i < js.size(); ++i)
        if (js[i] >= js[i - 1])
            throw SimplicialError("degeneracy word in '" + text + "' must have strictly decreasing indices");
    for (int d = 0; d <= generation_level(); ++d)
        for (std::size_t c = 0; c < count(d); ++c)
            if (id(d, c) == base) {
                const int k = d + static_cast<int>(js.size());
                if (js.front() >= k)
                    throw SimplicialError("degeneracy index out of range in '" + text + "'");
                Monotone alpha{{}, d};
                for (int i = 0; i <= k; ++i) {
                    int below = 0;
                    for (int j : js)
                        if (j < i)
                            ++below;
                    alpha.values.push_back(i - below);
                }
                return {alpha, c};
            }
    throw SimplicialError("unknown base cell in '" + text + "'");
}

TruncatedSimplicialSet FiniteSimplicialSet::materialize(int level) const
{
    TruncatedSimplicialSet x(level);
    std::vector<std::map<NormalForm, std::size_t>> index(static_cast<std::size_t>(level) + 1);
    std::vector<std::vector<NormalForm>> cells;
    for (int k = 0; k <= level; ++k) {
        cells.push_back(cells_in_degree(k));
        for (const auto& c : cells.back())
            index[static_cast<std::size_t>(k)][c] = x.add_cell(k, cell_id(c));
    }
    for (int k = 0; k <= level; ++k)
        for (std::size_t c = 0; c < cells[static_cast<std::size_t>(k)].size(); ++c) {
            const NormalForm& cell = cells[static_cast<std::size_t>(k)][c];
            if (k >= 1)
                for (int i = 0; i <= k; ++i)
                    x.set_face(k, i, c, index[static_cast<std::size_t>(k - 1)].at(act(coface(k, i), cell)));
            if (k < level)
                for (int i = 0; i <= k; ++i)
                    x.set_degeneracy(k, i, c,
                                     index[static_cast<std::size_t>(k + 1)].at(act(codegeneracy(k, i), cell)));
        }
    return x;
}

ValidationReport validate(const FiniteSimplicialSet& a)
{
    ValidationReport report;
    for (int n = 2; n <= a.generation_level(); ++n)
        for (std::size_t y = 0; y < a.count(n); ++y)
            for (int j = 1; j <= n; ++j)
                for (int i = 0; i < j; ++i) {
                    const NormalForm lhs = a.act(coface(n - 1, i), a.face(n, j, y));
                    const NormalForm rhs = a.act(coface(n - 1, j - 1), a.face(n, i, y));
                    if (!(lhs == rhs))
                        report.violations.push_back({"d" + std::to_string(i) + " d" + std::to_string(j) + " = d" +
                                                         std::to_string(j - 1) + " d" + std::to_string(i),
                                                     n, a.id(n, y)});
                }
    return report;
}

FiniteSimplicialSet standard_simplex_finite(int k) { return simplex_skeleton(k, k); }

FiniteSimplicialSet simplex_skeleton(int p, int n)
{
    FiniteSimplicialSet a;
    std::vector<std::vector<Monotone>> faces_of;
    for (int m = 0; m <= std::min(n, p); ++m) {
        faces_of.push_back(all_injective(m, p));
        for (const auto& theta : faces_of.back()) {
            std::vector<NormalForm> faces;
            if (m > 0)
                for (int i = 0; i <= m; ++i) {
                    const Monotone f = compose(theta, coface(m, i));
                    const auto& lower = faces_of[static_cast<std::size_t>(m - 1)];
                    const auto at = static_cast<std::size_t>(std::find(lower.begin(), lower.end(), f) - lower.begin());
                    faces.push_back(nondegenerate(m - 1, at));
                }
            a.add_cell(m, theta.str(), std::move(faces));
        }
    }
    return a;
}

NormalForm apply(const FiniteSimplicialSet& source, const FiniteSimplicialSet& target, const FiniteSimplicialMap& f,
                 const NormalForm& cell)
{
    (void)source;
    return target.act(cell.surjection, f(cell.base_dim(), cell.cell));
}

ValidationReport validate(const FiniteSimplicialSet& source, const FiniteSimplicialSet& target,
                          const FiniteSimplicialMap& f)
{
    ValidationReport report;
    for (int n = 0; n <= source.generation_level(); ++n) {
        if (f.images.size() <= static_cast<std::size_t>(n) || f.images[static_cast<std::size_t>(n)].size() != source.count(n)) {
            report.violations.push_back({"image table size", n, ""});
            return report;
        }
        for (std::size_t y = 0; y < source.count(n); ++y) {
            const NormalForm& img = f(n, y);
            if (img.dim() != n || img.cell >= target.count(img.base_dim()))
                report.violations.push_back({"image out of range", n, source.id(n, y)});
        }
    }
    if (!report.ok())
        return report;
    for (int n = 1; n <= source.generation_level(); ++n)
        for (std::size_t y = 0; y < source.count(n); ++y)
            for (int i = 0; i <= n; ++i)
                if (!(apply(source, target, f, source.face(n, i, y)) == target.act(coface(n, i), f(n, y))))
                    report.violations.push_back({"f d" + std::to_string(i) + " = d" + std::to_string(i) + " f", n,
                                                 source.id(n, y)});
    return report;
}

bool is_monomorphism(const FiniteSimplicialMap& f)
{
    for (const auto& level : f.images) {
        std::set<std::size_t> seen;
        for (const auto& img : level)
            if (!img.nondegenerate() || !seen.insert(img.cell).second)
                return false;
    }
    return true;
}

Pushout pushout_along_mono(const FiniteSimplicialSet& c, const FiniteSimplicialSet& a, const FiniteSimplicialSet& b,
                           const FiniteSimplicialMap& c_to_a, const FiniteSimplicialMap& c_to_b)
{
    if (!is_monomorphism(c_to_a))
        throw SimplicialError("pushout_along_mono: C → A is not a monomorphism");
    Pushout out;
    std::set<std::string> used;
    for (int n = 0; n <= b.generation_level(); ++n)
        for (std::size_t y = 0; y < b.count(n); ++y) {
            std::vector<NormalForm> faces;
            for (int i = 0; n > 0 && i <= n; ++i)
                faces.push_back(b.face(n, i, y));
            out.object.add_cell(n, b.id(n, y), std::move(faces));
            used.insert(b.id(n, y));
        }
    out.from_b.images.resize(static_cast<std::size_t>(b.generation_level()) + 1);
    for (int n = 0; n <= b.generation_level(); ++n)
        for (std::size_t y = 0; y < b.count(n); ++y)
            out.from_b.images[static_cast<std::size_t>(n)].push_back(nondegenerate(n, y));

    // A-cell → C-cell for cells in the image of C.
    std::vector<std::map<std::size_t, std::size_t>> from_c(static_cast<std::size_t>(a.generation_level()) + 1);
    for (int n = 0; n <= c.generation_level(); ++n)
        for (std::size_t w = 0; w < c.count(n); ++w)
            from_c[static_cast<std::size_t>(n)][c_to_a(n, w).cell] = w;

    out.from_a.images.resize(static_cast<std::size_t>(a.generation_level()) + 1);
    for (int n = 0; n <= a.generation_level(); ++n)
        for (std::size_t y = 0; y < a.count(n); ++y) {
            auto& images = out.from_a.images[static_cast<std::size_t>(n)];
            auto hit = from_c[static_cast<std::size_t>(n)].find(y);
            if (hit != from_c[static_cast<std::size_t>(n)].end()) {
                images.push_back(c_to_b(n, hit->second));
                continue;
            }
            std::vector<NormalForm> faces;
            for (int i = 0; n > 0 && i <= n; ++i) {
                const NormalForm& f = a.face(n, i, y);
                faces.push_back(out.object.act(f.surjection, out.from_a(f.base_dim(), f.cell)));
            }
            std::string id = a.id(n, y);
            while (used.count(id))
                id += "'";
            used.insert(id);
            images.push_back(nondegenerate(n, out.object.add_cell(n, id, std::move(faces))));
        }
    return out;
}

} // namespace weightcx::simplicial
