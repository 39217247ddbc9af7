#include "weightcx/motives/k0.hpp"

namespace weightcx::motives {

K0Class k0_class(const PresentedQCategory& cat, const KaroubiObject& k, const std::vector<Realization>& realizations)
{
    K0Class c;
    c.terms.push_back({1, k});
    for (const auto& r : realizations)
        c.realized_rank[r.name()] = static_cast<long>(realized_rank(cat, r, k));
    return c;
}

K0Class operator+(const K0Class& a, const K0Class& b)
{
    K0Class s = a;
    s.terms.insert(s.terms.end(), b.terms.begin(), b.terms.end());
    for (const auto& [name, r] : b.realized_rank)
        s.realized_rank[name] += r;
    return s;
}

K0Class operator-(const K0Class& a)
{
    K0Class n = a;
    for (auto& t : n.terms)
        t.sign = -t.sign;
    for (auto& [name, r] : n.realized_rank)
        r = -r;
    return n;
}

K0Class operator-(const K0Class& a, const K0Class& b) { return a + (-b); }

} // namespace weightcx::motives
