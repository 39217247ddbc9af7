#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace weightcx {

/// Ordered finite set of opaque string ids.
class FiniteSet {
public:
    FiniteSet() = default;
    explicit FiniteSet(std::vector<std::string> ids);

    std::size_t size() const { return ids_.size(); }
    const std::string& id(std::size_t i) const { return ids_.at(i); }
    const std::vector<std::string>& ids() const { return ids_; }
    std::optional<std::size_t> find(std::string_view id) const;
    std::size_t index(std::string_view id) const; // throws std::out_of_range

    std::size_t add(std::string id); // throws on duplicates

    friend bool operator==(const FiniteSet&, const FiniteSet&) = default;

private:
    std::vector<std::string> ids_;
    std::map<std::string, std::size_t, std::less<>> index_;
};

/// Total function between finite sets, stored as an index table.
struct FiniteSetMap {
    FiniteSet source;
    FiniteSet target;
    std::vector<std::size_t> assignment;

    /// Builds from (source id → target id) pairs; every source id must appear.
    static FiniteSetMap from_pairs(FiniteSet source, FiniteSet target,
                                   const std::vector<std::pair<std::string, std::string>>& pairs);
    static FiniteSetMap identity(const FiniteSet& s);

    std::size_t operator()(std::size_t x) const { return assignment.at(x); }

    /// Empty string when well formed; otherwise a description of the defect.
    std::string defect() const;

    bool surjective() const;
    bool injective() const;
    bool bijective() const { return surjective() && injective(); }
    std::vector<std::size_t> fiber_sizes() const;
    std::vector<std::vector<std::size_t>> fibers() const;
};

/// g ∘ f.
FiniteSetMap compose(const FiniteSetMap& g, const FiniteSetMap& f);

} // namespace weightcx
