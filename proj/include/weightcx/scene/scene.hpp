#pragma once

#include "weightcx/motives/group.hpp"
#include "weightcx/simplicial/finite.hpp"
#include "weightcx/simplicial/truncated.hpp"
#include "weightcx/weight/simplicial_motive.hpp"
#include "weightcx/weight/universal.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace weightcx::scene {

using Json = nlohmann::ordered_json;

/// A document error. `line` and `column` are 1-based and set only for
/// syntax errors.
class SceneError : public std::runtime_error {
public:
    explicit SceneError(const std::string& what, int line = 0, int column = 0)
        : std::runtime_error(what), line(line), column(column)
    {
    }
    int line;
    int column;
};

struct Options {
    /// Replaces every "level" field in the document.
    std::optional<int> level;
    /// Keeps only this realization.
    std::optional<std::string> realization;
};

/// A value tied to the category it lives over.
template <class T>
struct Bound {
    std::string category;
    T value;
};

/// A parsed scene document. Entities are built on first use and cached;
/// resolve_all() builds and validates every one of them.
class Scene {
public:
    /// Throws SceneError with line and column on malformed JSON, and on a
    /// missing or unknown version tag.
    static Scene parse(const std::string& text, Options options = {});

    /// Builds every entity; throws SceneError naming the first failure.
    void resolve_all();

    const Json& tasks() const { return tasks_; }
    const Options& options() const { return options_; }

    const FiniteSet& set(const std::string& name);
    const FiniteSetMap& map(const std::string& name);
    const simplicial::TruncatedSimplicialSet& simplicial_set(const std::string& name);
    const simplicial::SimplicialMap& simplicial_map(const std::string& name);
    const simplicial::FiniteSimplicialSet& finite_simplicial_set(const std::string& name);
    const motives::PresentedQCategory& category(const std::string& name);
    const Bound<motives::Realization>& realization(const std::string& name);
    /// Realizations over `category`, after the --realization filter, in
    /// document order.
    std::vector<motives::Realization> realizations(const std::string& category);
    const motives::FiniteGroup& group(const std::string& name);
    const Bound<motives::GroupAction>& action(const std::string& name);
    const Bound<weight::SimplicialMotive>& simplicial_motive(const std::string& name);
    const Bound<weight::SimplicialMotiveMap>& simplicial_motive_map(const std::string& name);
    const Bound<weight::MotiveComplex>& complex(const std::string& name);
    const Bound<weight::ChainMap>& chain_map(const std::string& name);
    const Bound<weight::MotiveSquare>& square(const std::string& name);

    /// The section holding `name`, searched in schema order; empty if none.
    std::string section_of(const std::string& name) const;

    /// A "level" field, honoring the override.
    int level(const Json& j, const std::string& path) const;

    /// Parses a morphism between additive objects: "identity", "zero", or
    /// a list of rows whose entries are 0, a basis name, or {name: rational}.
    motives::MotiveMorphism morphism(const motives::PresentedQCategory& cat, const Json& j,
                                     const motives::AdditiveObject& source, const motives::AdditiveObject& target,
                                     const std::string& path) const;
    motives::AdditiveObject object(const motives::PresentedQCategory& cat, const Json& j,
                                   const std::string& path) const;

private:
    Scene() = default;

    const Json& entry(const std::string& section, const std::string& name) const;
    /// Marks `key` as under construction; throws on a reference cycle.
    struct Guard {
        Scene& scene;
        std::string key;
        Guard(Scene& s, std::string k);
        ~Guard();
    };

    Json doc_;
    Json tasks_;
    Options options_;
    std::set<std::string> building_;

    std::map<std::string, FiniteSet> sets_;
    std::map<std::string, FiniteSetMap> maps_;
    std::map<std::string, simplicial::TruncatedSimplicialSet> simplicial_sets_;
    std::map<std::string, simplicial::SimplicialMap> simplicial_maps_;
    std::map<std::string, simplicial::FiniteSimplicialSet> finite_sets_;
    std::map<std::string, motives::PresentedQCategory> categories_;
    std::map<std::string, Bound<motives::Realization>> realizations_;
    std::map<std::string, motives::FiniteGroup> groups_;
    std::map<std::string, Bound<motives::GroupAction>> actions_;
    std::map<std::string, Bound<weight::SimplicialMotive>> motives_;
    std::map<std::string, Bound<weight::SimplicialMotiveMap>> motive_maps_;
    std::map<std::string, Bound<weight::MotiveComplex>> complexes_;
    std::map<std::string, Bound<weight::ChainMap>> chain_maps_;
    std::map<std::string, Bound<weight::MotiveSquare>> squares_;
};

/// Section names in the order they are resolved and searched.
const std::vector<std::string>& sections();

/// The version tag every document must carry.
inline constexpr const char* kVersion = "weightcx/1";

} // namespace weightcx::scene
