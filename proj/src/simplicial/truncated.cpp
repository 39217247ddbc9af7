#include "weightcx/simplicial/truncated.hpp"

#include <functional>

namespace weightcx::simplicial {

TruncatedSimplicialSet::TruncatedSimplicialSet(int level)
{
    if (level < 0)
        throw SimplicialError("truncation level must be ≥ 0");
    const auto count = static_cast<std::size_t>(level) + 1;
    cells_.resize(count);
    faces_.resize(count);
    degeneracies_.resize(count);
    for (std::size_t n = 0; n < count; ++n) {
        if (n >= 1)
            faces_[n].resize(n + 1);
        if (n + 1 < count)
            degeneracies_[n].resize(n + 1);
    }
}

std::vector<std::size_t> TruncatedSimplicialSet::sizes() const
{
    std::vector<std::size_t> s;
    for (const auto& c : cells_)
        s.push_back(c.size());
    return s;
}

std::size_t TruncatedSimplicialSet::add_cell(int n, std::string id)
{
    auto& level_cells = cells_.at(static_cast<std::size_t>(n));
    const std::size_t at = level_cells.add(std::move(id));
    for (auto& table : faces_[static_cast<std::size_t>(n)])
        table.push_back(kUnset);
    for (auto& table : degeneracies_[static_cast<std::size_t>(n)])
        table.push_back(kUnset);
    return at;
}

std::size_t TruncatedSimplicialSet::face(int n, int i, std::size_t c) const
{
    return faces_.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(i)).at(c);
}

std::size_t TruncatedSimplicialSet::degeneracy(int n, int i, std::size_t c) const
{
    return degeneracies_.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(i)).at(c);
}

void TruncatedSimplicialSet::set_face(int n, int i, std::size_t c, std::size_t value)
{
    faces_.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(i)).at(c) = value;
}

void TruncatedSimplicialSet::set_degeneracy(int n, int i, std::size_t c, std::size_t value)
{
    degeneracies_.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(i)).at(c) = value;
}

namespace {

std::size_t apply_surjection(const TruncatedSimplicialSet& x, const Monotone& epi, std::size_t c)
{
    // epi = epi' ∘ σ^i, so X(epi) = s_i ∘ X(epi').
    for (int i = epi.source() - 1; i >= 0; --i) {
        if (epi(i) != epi(i + 1))
            continue;
        Monotone rest{{}, epi.target};
        for (int j = 0; j <= epi.source(); ++j)
            if (j != i + 1)
                rest.values.push_back(epi(j));
        return x.degeneracy(rest.source(), i, apply_surjection(x, rest, c));
    }
    return c;
}

std::size_t apply_injection(const TruncatedSimplicialSet& x, const Monotone& mono, std::size_t c)
{
    // mono = δ^j ∘ mono' for any j outside the image, so X(mono) = X(mono') ∘ d_j.
    std::vector<bool> hit(static_cast<std::size_t>(mono.target) + 1, false);
    for (auto v : mono.values)
        hit[static_cast<std::size_t>(v)] = true;
    for (int j = mono.target; j >= 0; --j) {
        if (hit[static_cast<std::size_t>(j)])
            continue;
        Monotone rest{{}, mono.target - 1};
        for (auto v : mono.values)
            rest.values.push_back(v < j ? v : v - 1);
        return apply_injection(x, rest, x.face(mono.target, j, c));
    }
    return c;
}

} // namespace

std::size_t TruncatedSimplicialSet::apply(const Monotone& theta, std::size_t c) const
{
    const EpiMono em = factor(theta);
    return apply_surjection(*this, em.epi, apply_injection(*this, em.mono, c));
}

namespace {

class Checker {
public:
    explicit Checker(const TruncatedSimplicialSet& x) : x_(x) {}

    void fail(std::string identity, int degree, std::size_t cell)
    {
        report.violations.push_back({std::move(identity), degree, x_.id(degree, cell)});
    }

    ValidationReport report;

private:
    const TruncatedSimplicialSet& x_;
};

std::string idx(const char* op, int i) { return std::string(op) + std::to_string(i); }

} // namespace

ValidationReport validate(const TruncatedSimplicialSet& x)
{
    Checker check(x);
    const int top = x.level();
    if (top < 0)
        return check.report;
    for (int n = 1; n <= top; ++n)
        for (int i = 0; i <= n; ++i)
            for (std::size_t c = 0; c < x.size(n); ++c) {
                const auto v = x.face(n, i, c);
                if (v == kUnset || v >= x.size(n - 1))
                    check.fail(idx("missing or out-of-range d", i), n, c);
            }
    for (int n = 0; n < top; ++n)
        for (int i = 0; i <= n; ++i)
            for (std::size_t c = 0; c < x.size(n); ++c) {
                const auto v = x.degeneracy(n, i, c);
                if (v == kUnset || v >= x.size(n + 1))
                    check.fail(idx("missing or out-of-range s", i), n, c);
            }
    if (!check.report.ok())
        return check.report;

    for (int n = 2; n <= top; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                for (std::size_t c = 0; c < x.size(n); ++c)
                    if (x.face(n - 1, i, x.face(n, j, c)) != x.face(n - 1, j - 1, x.face(n, i, c)))
                        check.fail(idx("d", i) + idx(" d", j) + " = " + idx("d", j - 1) + idx(" d", i), n, c);

    for (int n = 0; n + 2 <= top; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                for (std::size_t c = 0; c < x.size(n); ++c)
                    if (x.degeneracy(n + 1, i, x.degeneracy(n, j, c)) !=
                        x.degeneracy(n + 1, j + 1, x.degeneracy(n, i, c)))
                        check.fail(idx("s", i) + idx(" s", j) + " = " + idx("s", j + 1) + idx(" s", i), n, c);

    for (int n = 0; n + 1 <= top; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i)
                for (std::size_t c = 0; c < x.size(n); ++c) {
                    const std::size_t lhs = x.face(n + 1, i, x.degeneracy(n, j, c));
                    std::size_t rhs;
                    std::string law = idx("d", i) + idx(" s", j) + " = ";
                    if (i < j) {
                        rhs = x.degeneracy(n - 1, j - 1, x.face(n, i, c));
                        law += idx("s", j - 1) + idx(" d", i);
                    } else if (i == j || i == j + 1) {
                        rhs = c;
                        law += "id";
                    } else {
                        rhs = x.degeneracy(n - 1, j, x.face(n, i - 1, c));
                        law += idx("s", j) + idx(" d", i - 1);
                    }
                    if (lhs != rhs)
                        check.fail(law, n, c);
                }
    return check.report;
}

TruncatedSimplicialSet sk(const TruncatedSimplicialSet& x, int n)
{
    if (n > x.level())
        throw SimplicialError("sk: n = " + std::to_string(n) + " exceeds level " + std::to_string(x.level()));
    if (n < 0)
        throw SimplicialError("sk: negative degree");
    TruncatedSimplicialSet out(n);
    for (int p = 0; p <= n; ++p)
        for (std::size_t c = 0; c < x.size(p); ++c)
            out.add_cell(p, x.id(p, c));
    for (int p = 0; p <= n; ++p)
        for (std::size_t c = 0; c < x.size(p); ++c) {
            if (p >= 1)
                for (int i = 0; i <= p; ++i)
                    out.set_face(p, i, c, x.face(p, i, c));
            if (p < n)
                for (int i = 0; i <= p; ++i)
                    out.set_degeneracy(p, i, c, x.degeneracy(p, i, c));
        }
    return out;
}

namespace {

/// Fills faces/degeneracies from index-level callbacks.
template <class Face, class Degen>
void fill_tables(TruncatedSimplicialSet& x, Face&& face, Degen&& degen)
{
    for (int p = 0; p <= x.level(); ++p)
        for (std::size_t c = 0; c < x.size(p); ++c) {
            if (p >= 1)
                for (int i = 0; i <= p; ++i)
                    x.set_face(p, i, c, face(p, i, c));
            if (p < x.level())
                for (int i = 0; i <= p; ++i)
                    x.set_degeneracy(p, i, c, degen(p, i, c));
        }
}

} // namespace

TruncatedSimplicialSet standard_simplex(int k, int level)
{
    if (k > 9)
        throw SimplicialError("standard_simplex: k > 9 is not supported by the digit-string ids");
    TruncatedSimplicialSet x(level);
    std::vector<std::vector<Monotone>> maps;
    for (int p = 0; p <= level; ++p) {
        maps.push_back(all_monotone(p, k));
        for (const auto& m : maps.back())
            x.add_cell(p, m.str());
    }
    auto lookup = [&](int p, const Monotone& m) { return x.cells(p).index(m.str()); };
    fill_tables(
        x, [&](int p, int i, std::size_t c) { return lookup(p - 1, compose(maps[p][c], coface(p, i))); },
        [&](int p, int i, std::size_t c) { return lookup(p + 1, compose(maps[p][c], codegeneracy(p, i))); });
    return x;
}

TruncatedSimplicialSet constant(const FiniteSet& s, int level)
{
    TruncatedSimplicialSet x(level);
    for (int p = 0; p <= level; ++p)
        for (const auto& id : s.ids())
            x.add_cell(p, id);
    fill_tables(
        x, [](int, int, std::size_t c) { return c; }, [](int, int, std::size_t c) { return c; });
    return x;
}

TruncatedSimplicialSet product(const TruncatedSimplicialSet& a, const TruncatedSimplicialSet& b)
{
    if (a.level() != b.level())
        throw SimplicialError("product: level mismatch");
    TruncatedSimplicialSet x(a.level());
    for (int p = 0; p <= a.level(); ++p)
        for (std::size_t i = 0; i < a.size(p); ++i)
            for (std::size_t j = 0; j < b.size(p); ++j)
                x.add_cell(p, "(" + a.id(p, i) + "," + b.id(p, j) + ")");
    auto pair_index = [&](int p, std::size_t i, std::size_t j) { return i * b.size(p) + j; };
    fill_tables(
        x,
        [&](int p, int k, std::size_t c) {
            const std::size_t i = c / b.size(p), j = c % b.size(p);
            return pair_index(p - 1, a.face(p, k, i), b.face(p, k, j));
        },
        [&](int p, int k, std::size_t c) {
            const std::size_t i = c / b.size(p), j = c % b.size(p);
            return pair_index(p + 1, a.degeneracy(p, k, i), b.degeneracy(p, k, j));
        });
    return x;
}

TruncatedSimplicialSet disjoint_union(const TruncatedSimplicialSet& a, const TruncatedSimplicialSet& b)
{
    if (a.level() != b.level())
        throw SimplicialError("disjoint_union: level mismatch");
    TruncatedSimplicialSet x(a.level());
    for (int p = 0; p <= a.level(); ++p) {
        for (std::size_t i = 0; i < a.size(p); ++i)
            x.add_cell(p, "L:" + a.id(p, i));
        for (std::size_t j = 0; j < b.size(p); ++j)
            x.add_cell(p, "R:" + b.id(p, j));
    }
    fill_tables(
        x,
        [&](int p, int k, std::size_t c) {
            return c < a.size(p) ? a.face(p, k, c) : a.size(p - 1) + b.face(p, k, c - a.size(p));
        },
        [&](int p, int k, std::size_t c) {
            return c < a.size(p) ? a.degeneracy(p, k, c) : a.size(p + 1) + b.degeneracy(p, k, c - a.size(p));
        });
    return x;
}

FiniteSetMap SimplicialMap::degree(int n) const
{
    return FiniteSetMap{source.cells(n), target.cells(n), components.at(static_cast<std::size_t>(n))};
}

SimplicialMap SimplicialMap::identity(const TruncatedSimplicialSet& x)
{
    SimplicialMap f{x, x, {}};
    for (int p = 0; p <= x.level(); ++p) {
        f.components.emplace_back();
        for (std::size_t c = 0; c < x.size(p); ++c)
            f.components.back().push_back(c);
    }
    return f;
}

ValidationReport validate(const SimplicialMap& f)
{
    ValidationReport report;
    auto fail = [&](std::string law, int n, std::size_t c) {
        report.violations.push_back({std::move(law), n, f.source.id(n, c)});
    };
    if (f.level() < 0 || f.level() > f.source.level() || f.level() > f.target.level()) {
        report.violations.push_back({"component levels exceed source or target", f.level(), ""});
        return report;
    }
    for (int n = 0; n <= f.level(); ++n) {
        const auto& comp = f.components[static_cast<std::size_t>(n)];
        if (comp.size() != f.source.size(n)) {
            report.violations.push_back({"component table size", n, ""});
            return report;
        }
        for (std::size_t c = 0; c < comp.size(); ++c)
            if (comp[c] >= f.target.size(n))
                fail("image out of range", n, c);
    }
    if (!report.ok())
        return report;
    for (int n = 0; n <= f.level(); ++n)
        for (std::size_t c = 0; c < f.source.size(n); ++c) {
            if (n >= 1)
                for (int i = 0; i <= n; ++i)
                    if (f(n - 1, f.source.face(n, i, c)) != f.target.face(n, i, f(n, c)))
                        fail("f d" + std::to_string(i) + " = d" + std::to_string(i) + " f", n, c);
            if (n < f.level())
                for (int i = 0; i <= n; ++i)
                    if (f(n + 1, f.source.degeneracy(n, i, c)) != f.target.degeneracy(n, i, f(n, c)))
                        fail("f s" + std::to_string(i) + " = s" + std::to_string(i) + " f", n, c);
        }
    return report;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f)
{
    const int level = std::min(f.level(), g.level());
    SimplicialMap h{f.source, g.target, {}};
    for (int n = 0; n <= level; ++n) {
        h.components.emplace_back();
        for (auto y : f.components[static_cast<std::size_t>(n)])
            h.components.back().push_back(g(n, y));
    }
    return h;
}

SimplicialMap sk(const SimplicialMap& f, int n)
{
    SimplicialMap g{sk(f.source, n), sk(f.target, n), {}};
    g.components.assign(f.components.begin(), f.components.begin() + n + 1);
    return g;
}

SimplicialMap to_point(const TruncatedSimplicialSet& x)
{
    SimplicialMap f{x, constant(FiniteSet({"*"}), x.level()), {}};
    for (int n = 0; n <= x.level(); ++n)
        f.components.emplace_back(x.size(n), 0);
    return f;
}

} // namespace weightcx::simplicial
