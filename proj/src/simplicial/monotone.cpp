#include "weightcx/simplicial/monotone.hpp"

#include <stdexcept>

namespace weightcx::simplicial {

bool Monotone::is_injective() const
{
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] == values[i - 1])
            return false;
    return true;
}

bool Monotone::is_surjective() const
{
    if (values.empty() || values.front() != 0 || values.back() != target)
        return false;
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] - values[i - 1] > 1)
            return false;
    return true;
}

bool Monotone::is_identity() const { return source() == target && is_injective(); }

bool Monotone::is_constant() const
{
    for (auto v : values)
        if (v != values.front())
            return false;
    return true;
}

std::string Monotone::str() const
{
    std::string s;
    for (auto v : values)
        s += std::to_string(v);
    return s;
}

Monotone identity_map(int n)
{
    Monotone m{{}, n};
    for (int i = 0; i <= n; ++i)
        m.values.push_back(i);
    return m;
}

Monotone coface(int n, int i)
{
    Monotone m{{}, n};
    for (int k = 0; k < n; ++k)
        m.values.push_back(k < i ? k : k + 1);
    return m;
}

Monotone codegeneracy(int n, int i)
{
    Monotone m{{}, n};
    for (int k = 0; k <= n + 1; ++k)
        m.values.push_back(k <= i ? k : k - 1);
    return m;
}

Monotone compose(const Monotone& a, const Monotone& b)
{
    if (b.target != a.source())
        throw std::invalid_argument("composing non-composable simplex maps");
    Monotone c{{}, a.target};
    for (auto v : b.values)
        c.values.push_back(a(v));
    return c;
}

EpiMono factor(const Monotone& theta)
{
    EpiMono out;
    int k = -1;
    for (std::size_t i = 0; i < theta.values.size(); ++i) {
        if (i == 0 || theta.values[i] != theta.values[i - 1]) {
            ++k;
            out.mono.values.push_back(theta.values[i]);
        }
        out.epi.values.push_back(k);
    }
    out.epi.target = k;
    out.mono.target = theta.target;
    return out;
}

namespace {

void monotone_rec(int m, int n, int lo, bool strict, Monotone& cur, std::vector<Monotone>& out)
{
    if (cur.source() == m) {
        out.push_back(cur);
        return;
    }
    for (int v = lo; v <= n; ++v) {
        cur.values.push_back(v);
        monotone_rec(m, n, strict ? v + 1 : v, strict, cur, out);
        cur.values.pop_back();
    }
}

} // namespace

std::vector<Monotone> all_monotone(int m, int n)
{
    std::vector<Monotone> out;
    Monotone cur{{}, n};
    monotone_rec(m, n, 0, false, cur, out);
    return out;
}

std::vector<Monotone> all_injective(int m, int n)
{
    std::vector<Monotone> out;
    if (m > n)
        return out;
    Monotone cur{{}, n};
    monotone_rec(m, n, 0, true, cur, out);
    return out;
}

std::vector<Monotone> all_surjective(int m, int n)
{
    std::vector<Monotone> out;
    for (auto& t : all_monotone(m, n))
        if (t.is_surjective())
            out.push_back(std::move(t));
    return out;
}

std::vector<int> degeneracy_indices(const Monotone& surjection)
{
    std::vector<int> js;
    for (std::size_t j = 0; j + 1 < surjection.values.size(); ++j)
        if (surjection.values[j] == surjection.values[j + 1])
            js.push_back(static_cast<int>(j));
    return js;
}

} // namespace weightcx::simplicial
