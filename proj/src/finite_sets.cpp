#include "weightcx/finite_sets.hpp"

#include <stdexcept>

namespace weightcx {

FiniteSet::FiniteSet(std::vector<std::string> ids)
{
    for (auto& id : ids)
        add(std::move(id));
}

std::optional<std::size_t> FiniteSet::find(std::string_view id) const
{
    auto it = index_.find(id);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::size_t FiniteSet::index(std::string_view id) const
{
    auto found = find(id);
    if (!found)
        throw std::out_of_range("unknown element '" + std::string(id) + "'");
    return *found;
}

std::size_t FiniteSet::add(std::string id)
{
    if (index_.count(id))
        throw std::invalid_argument("duplicate element '" + id + "'");
    const std::size_t at = ids_.size();
    index_.emplace(id, at);
    ids_.push_back(std::move(id));
    return at;
}

FiniteSetMap FiniteSetMap::from_pairs(FiniteSet source, FiniteSet target,
                                      const std::vector<std::pair<std::string, std::string>>& pairs)
{
    FiniteSetMap f{std::move(source), std::move(target), {}};
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    f.assignment.assign(f.source.size(), unset);
    for (const auto& [from, to] : pairs) {
        const std::size_t i = f.source.index(from);
        if (f.assignment[i] != unset)
            throw std::invalid_argument("element '" + from + "' assigned twice");
        f.assignment[i] = f.target.index(to);
    }
    for (std::size_t i = 0; i < f.assignment.size(); ++i)
        if (f.assignment[i] == unset)
            throw std::invalid_argument("element '" + f.source.id(i) + "' has no image");
    return f;
}

FiniteSetMap FiniteSetMap::identity(const FiniteSet& s)
{
    FiniteSetMap f{s, s, {}};
    for (std::size_t i = 0; i < s.size(); ++i)
        f.assignment.push_back(i);
    return f;
}

std::string FiniteSetMap::defect() const
{
    if (assignment.size() != source.size())
        return "assignment covers " + std::to_string(assignment.size()) + " of " + std::to_string(source.size()) +
               " source elements";
    for (std::size_t i = 0; i < assignment.size(); ++i)
        if (assignment[i] >= target.size())
            return "image of '" + source.id(i) + "' is out of range";
    return {};
}

bool FiniteSetMap::surjective() const
{
    for (auto n : fiber_sizes())
        if (n == 0)
            return false;
    return true;
}

bool FiniteSetMap::injective() const
{
    for (auto n : fiber_sizes())
        if (n > 1)
            return false;
    return true;
}

std::vector<std::size_t> FiniteSetMap::fiber_sizes() const
{
    std::vector<std::size_t> sizes(target.size(), 0);
    for (auto y : assignment)
        ++sizes.at(y);
    return sizes;
}

std::vector<std::vector<std::size_t>> FiniteSetMap::fibers() const
{
    std::vector<std::vector<std::size_t>> out(target.size());
    for (std::size_t x = 0; x < assignment.size(); ++x)
        out.at(assignment[x]).push_back(x);
    return out;
}

FiniteSetMap compose(const FiniteSetMap& g, const FiniteSetMap& f)
{
    if (f.target.size() != g.source.size())
        throw std::invalid_argument("composition of non-composable set maps");
    FiniteSetMap h{f.source, g.target, {}};
    h.assignment.reserve(f.assignment.size());
    for (auto y : f.assignment)
        h.assignment.push_back(g.assignment.at(y));
    return h;
}

} // namespace weightcx
