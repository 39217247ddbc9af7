#include "weightcx/scene/scene.hpp"

#include "weightcx/descent/cech.hpp"
#include "weightcx/simplicial/coskeleton.hpp"

#include <algorithm>

namespace weightcx::scene {

using linalg::Rat;
using motives::AdditiveObject;
using motives::MotiveMorphism;
using motives::PresentedQCategory;

const std::vector<std::string>& sections()
{
    static const std::vector<std::string> names{
        "sets",       "maps",          "simplicial_sets",   "finite_simplicial_sets", "simplicial_maps",
        "categories", "realizations",  "groups",            "actions",                "simplicial_motives",
        "simplicial_motive_maps",      "complexes",         "chain_maps",             "squares"};
    return names;
}

namespace {

std::pair<int, int> line_column(const std::string& text, std::size_t byte)
{
    int line = 1, column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

const Json& field(const Json& j, const std::string& key, const std::string& path)
{
    if (!j.is_object() || !j.contains(key))
        throw SceneError(path + ": missing field '" + key + "'");
    return j.at(key);
}

std::string text(const Json& j, const std::string& path)
{
    if (!j.is_string())
        throw SceneError(path + ": expected a string");
    return j.get<std::string>();
}

int integer(const Json& j, const std::string& path)
{
    if (!j.is_number_integer())
        throw SceneError(path + ": expected an integer");
    return j.get<int>();
}

std::size_t count(const Json& j, const std::string& path)
{
    const int v = integer(j, path);
    if (v < 0)
        throw SceneError(path + ": expected a nonnegative integer");
    return static_cast<std::size_t>(v);
}

const Json& array(const Json& j, const std::string& path)
{
    if (!j.is_array())
        throw SceneError(path + ": expected an array");
    return j;
}

std::vector<std::string> strings(const Json& j, const std::string& path)
{
    std::vector<std::string> out;
    std::size_t k = 0;
    for (const auto& e : array(j, path))
        out.push_back(text(e, path + "[" + std::to_string(k++) + "]"));
    return out;
}

Rat rational(const Json& j, const std::string& path)
{
    try {
        if (j.is_number_integer())
            return Rat(j.get<long>());
        if (j.is_string())
            return linalg::parse_rat(j.get<std::string>());
    } catch (const std::exception& e) {
        throw SceneError(path + ": " + e.what());
    }
    throw SceneError(path + ": expected an integer or a \"p/q\" string");
}

/// Runs `build`, rewrapping library errors with the entity path.
template <class F>
auto wrap(const std::string& path, F&& build)
{
    try {
        return build();
    } catch (const SceneError&) {
        throw;
    } catch (const std::exception& e) {
        throw SceneError(path + ": " + e.what());
    }
}

template <class T, class F>
const T& cached(std::map<std::string, T>& cache, const std::string& name, F&& build)
{
    auto it = cache.find(name);
    if (it != cache.end())
        return it->second;
    T value = build();
    return cache.emplace(name, std::move(value)).first->second;
}

} // namespace

Scene::Guard::Guard(Scene& s, std::string k) : scene(s), key(std::move(k))
{
    if (!scene.building_.insert(key).second)
        throw SceneError(key + ": reference cycle");
}

Scene::Guard::~Guard() { scene.building_.erase(key); }

Scene Scene::parse(const std::string& source, Options options)
{
    Scene s;
    s.options_ = std::move(options);
    try {
        s.doc_ = Json::parse(source);
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, column] = line_column(source, e.byte == 0 ? 0 : e.byte - 1);
        std::string message = e.what();
        if (auto at = message.find("]: "); at != std::string::npos)
            message = message.substr(at + 3);
        throw SceneError("parse error at line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                             message,
                         line, column);
    }
    if (!s.doc_.is_object())
        throw SceneError("document: expected a JSON object");
    if (!s.doc_.contains("version") || s.doc_["version"] != kVersion)
        throw SceneError(std::string("document: version must be \"") + kVersion + "\"");
    for (const auto& [key, value] : s.doc_.items()) {
        if (key == "version" || key == "tasks")
            continue;
        if (std::find(sections().begin(), sections().end(), key) == sections().end())
            throw SceneError("document: unknown section '" + key + "'");
        if (!value.is_object())
            throw SceneError(key + ": expected an object of named entities");
    }
    s.tasks_ = s.doc_.contains("tasks") ? s.doc_["tasks"] : Json::array();
    if (!s.tasks_.is_array())
        throw SceneError("tasks: expected an array");
    std::set<std::string> names;
    for (const auto& section : sections())
        if (s.doc_.contains(section))
            for (const auto& [name, value] : s.doc_[section].items())
                if (!names.insert(name).second)
                    throw SceneError(section + "." + name + ": entity name used twice");
    if (s.options_.realization && !s.doc_.contains("realizations"))
        throw SceneError("--realization: the document defines no realizations");
    if (s.options_.realization && !s.doc_["realizations"].contains(*s.options_.realization))
        throw SceneError("--realization: unknown realization '" + *s.options_.realization + "'");
    return s;
}

void Scene::resolve_all()
{
    for (const auto& section : sections()) {
        if (!doc_.contains(section))
            continue;
        for (const auto& [name, value] : doc_[section].items()) {
            if (section == "sets")
                set(name);
            else if (section == "maps")
                map(name);
            else if (section == "simplicial_sets")
                simplicial_set(name);
            else if (section == "finite_simplicial_sets")
                finite_simplicial_set(name);
            else if (section == "simplicial_maps")
                simplicial_map(name);
            else if (section == "categories")
                category(name);
            else if (section == "realizations")
                realization(name);
            else if (section == "groups")
                group(name);
            else if (section == "actions")
                action(name);
            else if (section == "simplicial_motives")
                simplicial_motive(name);
            else if (section == "simplicial_motive_maps")
                simplicial_motive_map(name);
            else if (section == "complexes")
                complex(name);
            else if (section == "chain_maps")
                chain_map(name);
            else if (section == "squares")
                square(name);
        }
    }
}

std::string Scene::section_of(const std::string& name) const
{
    for (const auto& section : sections())
        if (doc_.contains(section) && doc_[section].contains(name))
            return section;
    return {};
}

const Json& Scene::entry(const std::string& section, const std::string& name) const
{
    if (!doc_.contains(section) || !doc_[section].contains(name)) {
        const std::string other = section_of(name);
        throw SceneError(section + ": unknown entity '" + name + "'" +
                         (other.empty() ? "" : " (it is defined in " + other + ")"));
    }
    return doc_[section][name];
}

int Scene::level(const Json& j, const std::string& path) const
{
    if (options_.level)
        return *options_.level;
    return integer(field(j, "level", path), path + ".level");
}

AdditiveObject Scene::object(const PresentedQCategory& cat, const Json& j, const std::string& path) const
{
    AdditiveObject a;
    std::size_t k = 0;
    for (const auto& name : strings(j, path))
        a.summands.push_back(wrap(path + "[" + std::to_string(k++) + "]", [&] { return cat.object(name); }));
    return a;
}

MotiveMorphism Scene::morphism(const PresentedQCategory& cat, const Json& j, const AdditiveObject& source,
                               const AdditiveObject& target, const std::string& path) const
{
    if (j.is_string()) {
        const std::string kind = j.get<std::string>();
        if (kind == "zero")
            return motives::zero_morphism(cat, source, target);
        if (kind == "identity") {
            if (!(source == target))
                throw SceneError(path + ": identity between different objects");
            return motives::identity_morphism(cat, source);
        }
        throw SceneError(path + ": expected \"identity\", \"zero\" or a list of rows");
    }
    const Json& rows = array(j, path);
    if (rows.size() != target.size())
        throw SceneError(path + ": expected " + std::to_string(target.size()) + " rows, got " +
                         std::to_string(rows.size()));
    MotiveMorphism m{source, target, {}};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::string row_path = path + "[" + std::to_string(i) + "]";
        const Json& row = array(rows[i], row_path);
        if (row.size() != source.size())
            throw SceneError(row_path + ": expected " + std::to_string(source.size()) + " entries, got " +
                             std::to_string(row.size()));
        for (std::size_t c = 0; c < row.size(); ++c) {
            const std::string at = row_path + "[" + std::to_string(c) + "]";
            const std::size_t a = source.summands[c];
            const std::size_t b = target.summands[i];
            motives::HomElement h = cat.zero(a, b);
            auto add = [&](const std::string& name, const Rat& coeff) {
                const std::size_t basis =
                    wrap(at, [&] { return static_cast<const PresentedQCategory&>(cat).morphism(name); });
                const auto& mor = cat.morphism(basis);
                if (mor.source != a || mor.target != b)
                    throw SceneError(at + ": '" + name + "' is not a morphism " + cat.object_name(a) + " → " +
                                     cat.object_name(b));
                h = h + coeff * cat.basis(basis);
            };
            const Json& e = row[c];
            if (e.is_number_integer() && e.get<long>() == 0) {
            } else if (e.is_string()) {
                add(e.get<std::string>(), Rat(1));
            } else if (e.is_object()) {
                for (const auto& [name, coeff] : e.items())
                    add(name, rational(coeff, at + "." + name));
            } else {
                throw SceneError(at + ": expected 0, a basis name, or {name: coefficient}");
            }
            m.set(i, c, std::move(h));
        }
    }
    return m;
}

const FiniteSet& Scene::set(const std::string& name)
{
    return cached(sets_, name, [&] {
        const std::string path = "sets." + name;
        return wrap(path, [&] { return FiniteSet(strings(entry("sets", name), path)); });
    });
}

const FiniteSetMap& Scene::map(const std::string& name)
{
    return cached(maps_, name, [&] {
        const std::string path = "maps." + name;
        Guard guard(*this, path);
        const Json& j = entry("maps", name);
        const FiniteSet& source = set(text(field(j, "source", path), path + ".source"));
        const FiniteSet& target = set(text(field(j, "target", path), path + ".target"));
        const Json& assign = field(j, "assign", path);
        if (!assign.is_object())
            throw SceneError(path + ".assign: expected an object");
        std::vector<std::pair<std::string, std::string>> pairs;
        for (const auto& [x, y] : assign.items())
            pairs.emplace_back(x, text(y, path + ".assign." + x));
        return wrap(path, [&] { return FiniteSetMap::from_pairs(source, target, pairs); });
    });
}

namespace {

simplicial::TruncatedSimplicialSet explicit_simplicial_set(const Json& j, const std::string& path)
{
    const Json& cells = array(field(j, "cells", path), path + ".cells");
    if (cells.empty())
        throw SceneError(path + ".cells: needs at least degree 0");
    const int level = static_cast<int>(cells.size()) - 1;
    simplicial::TruncatedSimplicialSet x(level);
    for (int n = 0; n <= level; ++n) {
        const std::string dpath = path + ".cells[" + std::to_string(n) + "]";
        for (std::size_t c = 0; c < array(cells[static_cast<std::size_t>(n)], dpath).size(); ++c) {
            const std::string cpath = dpath + "[" + std::to_string(c) + "]";
            const Json& cell = cells[static_cast<std::size_t>(n)][c];
            wrap(cpath, [&] { return x.add_cell(n, text(field(cell, "id", cpath), cpath + ".id")); });
        }
    }
    auto lookup = [&](int n, const Json& id, const std::string& at) {
        const std::string s = text(id, at);
        auto found = x.cells(n).find(s);
        if (!found)
            throw SceneError(at + ": no cell '" + s + "' in degree " + std::to_string(n));
        return *found;
    };
    for (int n = 0; n <= level; ++n)
        for (std::size_t c = 0; c < x.size(n); ++c) {
            const std::string cpath = path + ".cells[" + std::to_string(n) + "][" + std::to_string(c) + "]";
            const Json& cell = cells[static_cast<std::size_t>(n)][c];
            if (n > 0) {
                const Json& faces = array(field(cell, "faces", cpath), cpath + ".faces");
                if (faces.size() != static_cast<std::size_t>(n + 1))
                    throw SceneError(cpath + ".faces: expected " + std::to_string(n + 1) + " entries");
                for (int i = 0; i <= n; ++i)
                    x.set_face(n, i, c, lookup(n - 1, faces[static_cast<std::size_t>(i)], cpath + ".faces"));
            }
            if (n < level) {
                const Json& degs = array(field(cell, "degeneracies", cpath), cpath + ".degeneracies");
                if (degs.size() != static_cast<std::size_t>(n + 1))
                    throw SceneError(cpath + ".degeneracies: expected " + std::to_string(n + 1) + " entries");
                for (int i = 0; i <= n; ++i)
                    x.set_degeneracy(n, i, c,
                                     lookup(n + 1, degs[static_cast<std::size_t>(i)], cpath + ".degeneracies"));
            }
        }
    return x;
}

std::string first_violation(const simplicial::ValidationReport& r)
{
    const auto& v = r.violations.front();
    return v.identity + " fails in degree " + std::to_string(v.degree) + (v.cell.empty() ? "" : " at " + v.cell);
}

} // namespace

const simplicial::TruncatedSimplicialSet& Scene::simplicial_set(const std::string& name)
{
    return cached(simplicial_sets_, name, [&] {
        const std::string path = "simplicial_sets." + name;
        Guard guard(*this, path);
        const Json& j = entry("simplicial_sets", name);
        simplicial::TruncatedSimplicialSet x = wrap(path, [&]() -> simplicial::TruncatedSimplicialSet {
            if (j.contains("cells"))
                return explicit_simplicial_set(j, path);
            if (j.contains("simplex"))
                return simplicial::standard_simplex(integer(j["simplex"], path + ".simplex"), level(j, path));
            if (j.contains("point"))
                return simplicial::constant(FiniteSet({"*"}), level(j, path));
            if (j.contains("constant"))
                return simplicial::constant(set(text(j["constant"], path + ".constant")), level(j, path));
            if (j.contains("nerve"))
                return descent::cech_nerve(map(text(j["nerve"], path + ".nerve")), level(j, path));
            if (j.contains("finite"))
                return finite_simplicial_set(text(j["finite"], path + ".finite")).materialize(level(j, path));
            if (j.contains("cosk"))
                return simplicial::cosk(simplicial_set(text(j["cosk"], path + ".cosk")),
                                        integer(field(j, "n", path), path + ".n"), level(j, path));
            if (j.contains("product")) {
                const auto parts = strings(j["product"], path + ".product");
                if (parts.size() != 2)
                    throw SceneError(path + ".product: expected two names");
                return simplicial::product(simplicial_set(parts[0]), simplicial_set(parts[1]));
            }
            throw SceneError(path + ": expected one of cells, simplex, point, constant, nerve, finite, cosk, product");
        });
        if (auto report = simplicial::validate(x); !report.ok())
            throw SceneError(path + ": " + first_violation(report));
        return x;
    });
}

const simplicial::FiniteSimplicialSet& Scene::finite_simplicial_set(const std::string& name)
{
    return cached(finite_sets_, name, [&] {
        const std::string path = "finite_simplicial_sets." + name;
        const Json& j = entry("finite_simplicial_sets", name);
        simplicial::FiniteSimplicialSet a = wrap(path, [&]() -> simplicial::FiniteSimplicialSet {
            if (j.contains("simplex"))
                return simplicial::standard_simplex_finite(integer(j["simplex"], path + ".simplex"));
            if (j.contains("simplex_skeleton")) {
                const Json& pn = array(j["simplex_skeleton"], path + ".simplex_skeleton");
                if (pn.size() != 2)
                    throw SceneError(path + ".simplex_skeleton: expected [p, n]");
                return simplicial::simplex_skeleton(integer(pn[0], path), integer(pn[1], path));
            }
            simplicial::FiniteSimplicialSet out;
            const Json& cells = array(field(j, "cells", path), path + ".cells");
            for (std::size_t k = 0; k < cells.size(); ++k) {
                const std::string cpath = path + ".cells[" + std::to_string(k) + "]";
                const int dim = integer(field(cells[k], "dim", cpath), cpath + ".dim");
                std::vector<simplicial::NormalForm> faces;
                if (dim > 0)
                    for (const auto& f : strings(field(cells[k], "faces", cpath), cpath + ".faces"))
                        faces.push_back(wrap(cpath, [&] { return out.parse_cell_id(f); }));
                wrap(cpath, [&] {
                    return out.add_cell(dim, text(field(cells[k], "id", cpath), cpath + ".id"), std::move(faces));
                });
            }
            return out;
        });
        if (auto report = simplicial::validate(a); !report.ok())
            throw SceneError(path + ": " + first_violation(report));
        return a;
    });
}

const simplicial::SimplicialMap& Scene::simplicial_map(const std::string& name)
{
    return cached(simplicial_maps_, name, [&] {
        const std::string path = "simplicial_maps." + name;
        Guard guard(*this, path);
        const Json& j = entry("simplicial_maps", name);
        simplicial::SimplicialMap f = wrap(path, [&]() -> simplicial::SimplicialMap {
            if (j.contains("to_point"))
                return simplicial::to_point(simplicial_set(text(j["to_point"], path + ".to_point")));
            if (j.contains("identity"))
                return simplicial::SimplicialMap::identity(simplicial_set(text(j["identity"], path + ".identity")));
            if (j.contains("augmentation")) {
                // Čech nerve of p over the constant simplicial set on its target.
                const FiniteSetMap& p = map(text(j["augmentation"], path + ".augmentation"));
                const int n = level(j, path);
                simplicial::SimplicialMap g{descent::cech_nerve(p, n), simplicial::constant(p.target, n), {}};
                for (int d = 0; d <= n; ++d) {
                    g.components.emplace_back();
                    for (std::size_t c = 0; c < g.source.size(d); ++c)
                        g.components.back().push_back(p(g.source.apply(simplicial::Monotone{{0}, d}, c)));
                }
                return g;
            }
            if (j.contains("compose")) {
                const auto parts = strings(j["compose"], path + ".compose");
                if (parts.size() != 2)
                    throw SceneError(path + ".compose: expected [g, f] for g ∘ f");
                return simplicial::compose(simplicial_map(parts[0]), simplicial_map(parts[1]));
            }
            const auto& source = simplicial_set(text(field(j, "source", path), path + ".source"));
            const auto& target = simplicial_set(text(field(j, "target", path), path + ".target"));
            const Json& comps = array(field(j, "components", path), path + ".components");
            if (comps.size() != static_cast<std::size_t>(source.level() + 1) || target.level() != source.level())
                throw SceneError(path + ": source, target and components must share one level");
            simplicial::SimplicialMap g{source, target, {}};
            for (int n = 0; n <= source.level(); ++n) {
                const std::string dpath = path + ".components[" + std::to_string(n) + "]";
                const Json& table = comps[static_cast<std::size_t>(n)];
                if (!table.is_object())
                    throw SceneError(dpath + ": expected an object of cell ids");
                g.components.emplace_back(source.size(n), simplicial::kUnset);
                for (const auto& [from, to] : table.items()) {
                    auto s = source.cells(n).find(from);
                    auto t = target.cells(n).find(text(to, dpath + "." + from));
                    if (!s || !t)
                        throw SceneError(dpath + "." + from + ": unknown cell");
                    g.components.back()[*s] = *t;
                }
                for (std::size_t c = 0; c < source.size(n); ++c)
                    if (g.components.back()[c] == simplicial::kUnset)
                        throw SceneError(dpath + ": no image for cell '" + source.id(n, c) + "'");
            }
            return g;
        });
        if (auto report = simplicial::validate(f); !report.ok())
            throw SceneError(path + ": " + first_violation(report));
        return f;
    });
}

const PresentedQCategory& Scene::category(const std::string& name)
{
    return cached(categories_, name, [&] {
        const std::string path = "categories." + name;
        Guard guard(*this, path);
        const Json& j = entry("categories", name);
        return wrap(path, [&]() -> PresentedQCategory {
            if (j.contains("group_algebra"))
                return motives::group_algebra(group(text(j["group_algebra"], path + ".group_algebra")),
                                              j.contains("object") ? text(j["object"], path + ".object") : "P");
            const auto objects = strings(field(j, "objects", path), path + ".objects");
            std::vector<PresentedQCategory::Morphism> morphisms;
            const Json& ms = array(field(j, "morphisms", path), path + ".morphisms");
            for (std::size_t k = 0; k < ms.size(); ++k) {
                const std::string mpath = path + ".morphisms[" + std::to_string(k) + "]";
                auto obj = [&](const char* key) {
                    const std::string o = text(field(ms[k], key, mpath), mpath + "." + key);
                    auto it = std::find(objects.begin(), objects.end(), o);
                    if (it == objects.end())
                        throw SceneError(mpath + "." + key + ": unknown object '" + o + "'");
                    return static_cast<std::size_t>(it - objects.begin());
                };
                morphisms.push_back({text(field(ms[k], "name", mpath), mpath + ".name"), obj("source"), obj("target")});
            }
            std::map<std::string, std::string> identities;
            const Json& ids = field(j, "identities", path);
            if (!ids.is_object())
                throw SceneError(path + ".identities: expected an object");
            for (const auto& [o, m] : ids.items())
                identities[o] = text(m, path + ".identities." + o);
            PresentedQCategory::Table table;
            const Json& comp = array(field(j, "compose", path), path + ".compose");
            for (std::size_t k = 0; k < comp.size(); ++k) {
                const std::string cpath = path + ".compose[" + std::to_string(k) + "]";
                const std::string left = text(field(comp[k], "left", cpath), cpath + ".left");
                const std::string right = text(field(comp[k], "right", cpath), cpath + ".right");
                const Json& result = field(comp[k], "result", cpath);
                if (!result.is_object())
                    throw SceneError(cpath + ".result: expected {basis name: coefficient}");
                std::vector<std::pair<std::string, Rat>> terms;
                for (const auto& [b, coeff] : result.items())
                    terms.emplace_back(b, rational(coeff, cpath + ".result." + b));
                if (!table.emplace(std::pair(left, right), std::move(terms)).second)
                    throw SceneError(cpath + ": product " + left + "∘" + right + " listed twice");
            }
            return PresentedQCategory(objects, std::move(morphisms), identities, table);
        });
    });
}

const Bound<motives::Realization>& Scene::realization(const std::string& name)
{
    return cached(realizations_, name, [&] {
        const std::string path = "realizations." + name;
        Guard guard(*this, path);
        const Json& j = entry("realizations", name);
        const std::string cat_name = text(field(j, "category", path), path + ".category");
        const PresentedQCategory& cat = category(cat_name);
        return wrap(path, [&]() -> Bound<motives::Realization> {
            if (j.contains("permutation")) {
                const Json& cj = entry("categories", cat_name);
                if (!cj.contains("group_algebra"))
                    throw SceneError(path + ".permutation: category must be a group_algebra");
                const auto& g = group(cj["group_algebra"].get<std::string>());
                const Json& perm = field(j, "permutation", path);
                std::vector<std::vector<std::size_t>> images(g.order());
                for (std::size_t h = 0; h < g.order(); ++h) {
                    const std::string ppath = path + ".permutation." + g.name(h);
                    for (const auto& v : array(field(perm, g.name(h), path + ".permutation"), ppath))
                        images[h].push_back(count(v, ppath));
                }
                return {cat_name, motives::permutation_realization(cat, g, name, images)};
            }
            std::vector<std::size_t> dims;
            const Json& dj = field(j, "dims", path);
            for (std::size_t a = 0; a < cat.object_count(); ++a)
                dims.push_back(count(field(dj, cat.object_name(a), path + ".dims"), path + ".dims." + cat.object_name(a)));
            std::vector<linalg::QMatrix> mats;
            const Json& mj = field(j, "matrices", path);
            for (std::size_t m = 0; m < cat.morphism_count(); ++m) {
                const auto& mor = cat.morphism(m);
                const std::string mpath = path + ".matrices." + mor.name;
                const Json& rows = array(field(mj, mor.name, path + ".matrices"), mpath);
                std::vector<std::vector<Rat>> entries;
                for (std::size_t r = 0; r < rows.size(); ++r) {
                    entries.emplace_back();
                    for (const auto& e : array(rows[r], mpath))
                        entries.back().push_back(rational(e, mpath + "[" + std::to_string(r) + "]"));
                }
                const std::size_t rows_expected = dims[mor.target];
                const std::size_t cols = dims[mor.source];
                if (entries.size() != rows_expected)
                    throw SceneError(mpath + ": expected " + std::to_string(rows_expected) + " rows");
                mats.push_back(linalg::QMatrix::from_rows(entries, cols));
            }
            return {cat_name, motives::Realization(cat, name, std::move(dims), std::move(mats))};
        });
    });
}

std::vector<motives::Realization> Scene::realizations(const std::string& category_name)
{
    std::vector<motives::Realization> out;
    if (!doc_.contains("realizations"))
        return out;
    for (const auto& [name, value] : doc_["realizations"].items()) {
        if (options_.realization && name != *options_.realization)
            continue;
        const auto& r = realization(name);
        if (r.category == category_name)
            out.push_back(r.value);
    }
    return out;
}

const motives::FiniteGroup& Scene::group(const std::string& name)
{
    return cached(groups_, name, [&] {
        const std::string path = "groups." + name;
        const Json& j = entry("groups", name);
        return wrap(path, [&]() -> motives::FiniteGroup {
            if (j.contains("cyclic"))
                return motives::FiniteGroup::cyclic(count(j["cyclic"], path + ".cyclic"));
            if (j.contains("symmetric")) {
                if (integer(j["symmetric"], path + ".symmetric") != 3)
                    throw SceneError(path + ".symmetric: only S3 is built in");
                return motives::FiniteGroup::symmetric3();
            }
            const auto elements = strings(field(j, "elements", path), path + ".elements");
            const Json& rows = array(field(j, "table", path), path + ".table");
            std::vector<std::vector<std::size_t>> table;
            for (std::size_t r = 0; r < rows.size(); ++r) {
                table.emplace_back();
                for (const auto& e : strings(rows[r], path + ".table[" + std::to_string(r) + "]")) {
                    auto it = std::find(elements.begin(), elements.end(), e);
                    if (it == elements.end())
                        throw SceneError(path + ".table: unknown element '" + e + "'");
                    table.back().push_back(static_cast<std::size_t>(it - elements.begin()));
                }
            }
            return motives::FiniteGroup(elements, std::move(table));
        });
    });
}

const Bound<motives::GroupAction>& Scene::action(const std::string& name)
{
    return cached(actions_, name, [&] {
        const std::string path = "actions." + name;
        Guard guard(*this, path);
        const Json& j = entry("actions", name);
        const std::string cat_name = text(field(j, "category", path), path + ".category");
        const PresentedQCategory& cat = category(cat_name);
        return wrap(path, [&]() -> Bound<motives::GroupAction> {
            const auto& g = group(text(field(j, "group", path), path + ".group"));
            motives::GroupAction a{g, {}, {}};
            if (j.contains("regular")) {
                a = motives::regular_action(cat, g);
            } else {
                a.object = object(cat, field(j, "object", path), path + ".object");
                const Json& act = field(j, "act", path);
                for (std::size_t h = 0; h < g.order(); ++h)
                    a.act.push_back(morphism(cat, field(act, g.name(h), path + ".act"), a.object, a.object,
                                             path + ".act." + g.name(h)));
            }
            motives::validate_action(cat, a);
            return {cat_name, std::move(a)};
        });
    });
}

const Bound<weight::SimplicialMotive>& Scene::simplicial_motive(const std::string& name)
{
    return cached(motives_, name, [&] {
        const std::string path = "simplicial_motives." + name;
        Guard guard(*this, path);
        const Json& j = entry("simplicial_motives", name);
        return wrap(path, [&]() -> Bound<weight::SimplicialMotive> {
            if (j.contains("bar")) {
                const auto& a = action(text(j["bar"], path + ".bar"));
                weight::BarFace face = weight::BarFace::inverse;
                if (j.contains("face")) {
                    const std::string f = text(j["face"], path + ".face");
                    if (f == "direct")
                        face = weight::BarFace::direct;
                    else if (f != "inverse")
                        throw SceneError(path + ".face: expected \"inverse\" or \"direct\"");
                }
                const auto& cat = category(a.category);
                auto x = weight::bar_object(cat, a.value, level(j, path), face);
                if (auto issues = weight::validate(cat, x); !issues.empty())
                    throw SceneError(path + ": " + issues.front());
                return {a.category, std::move(x)};
            }
            const std::string cat_name = text(field(j, "category", path), path + ".category");
            const PresentedQCategory& cat = category(cat_name);
            weight::SimplicialMotive x;
            if (j.contains("constant")) {
                x = weight::constant_motive(cat, object(cat, j["constant"], path + ".constant"), level(j, path));
            } else {
                const Json& comps = array(field(j, "components", path), path + ".components");
                for (std::size_t n = 0; n < comps.size(); ++n)
                    x.components.push_back(object(cat, comps[n], path + ".components[" + std::to_string(n) + "]"));
                const Json& faces = array(field(j, "faces", path), path + ".faces");
                const Json& degs = array(field(j, "degeneracies", path), path + ".degeneracies");
                if (faces.size() != comps.size() || degs.size() != comps.size())
                    throw SceneError(path + ": faces and degeneracies need one list per degree");
                for (std::size_t n = 0; n < comps.size(); ++n) {
                    x.faces.emplace_back();
                    const std::string fpath = path + ".faces[" + std::to_string(n) + "]";
                    const Json& fs = array(faces[n], fpath);
                    for (std::size_t i = 0; i < fs.size(); ++i) {
                        if (n == 0)
                            throw SceneError(fpath + ": degree 0 has no faces");
                        x.faces.back().push_back(morphism(cat, fs[i], x.components[n], x.components[n - 1],
                                                          fpath + "[" + std::to_string(i) + "]"));
                    }
                    x.degeneracies.emplace_back();
                    const std::string spath = path + ".degeneracies[" + std::to_string(n) + "]";
                    const Json& ss = array(degs[n], spath);
                    for (std::size_t i = 0; i < ss.size(); ++i) {
                        if (n + 1 >= comps.size())
                            throw SceneError(spath + ": the top degree has no degeneracies");
                        x.degeneracies.back().push_back(morphism(cat, ss[i], x.components[n], x.components[n + 1],
                                                                 spath + "[" + std::to_string(i) + "]"));
                    }
                }
            }
            if (auto issues = weight::validate(cat, x); !issues.empty())
                throw SceneError(path + ": " + issues.front());
            return {cat_name, std::move(x)};
        });
    });
}

const Bound<weight::SimplicialMotiveMap>& Scene::simplicial_motive_map(const std::string& name)
{
    return cached(motive_maps_, name, [&] {
        const std::string path = "simplicial_motive_maps." + name;
        Guard guard(*this, path);
        const Json& j = entry("simplicial_motive_maps", name);
        return wrap(path, [&]() -> Bound<weight::SimplicialMotiveMap> {
            if (j.contains("identity")) {
                const auto& x = simplicial_motive(text(j["identity"], path + ".identity"));
                weight::SimplicialMotiveMap f{x.value, x.value, {}};
                for (const auto& c : x.value.components)
                    f.components.push_back(motives::identity_morphism(category(x.category), c));
                return {x.category, std::move(f)};
            }
            const auto& s = simplicial_motive(text(field(j, "source", path), path + ".source"));
            const auto& t = simplicial_motive(text(field(j, "target", path), path + ".target"));
            if (s.category != t.category)
                throw SceneError(path + ": source and target live over different categories");
            const auto& cat = category(s.category);
            weight::SimplicialMotiveMap f{s.value, t.value, {}};
            const Json& comps = array(field(j, "components", path), path + ".components");
            if (comps.size() != s.value.components.size() || t.value.components.size() != s.value.components.size())
                throw SceneError(path + ": source, target and components must share one level");
            for (std::size_t n = 0; n < comps.size(); ++n)
                f.components.push_back(morphism(cat, comps[n], s.value.components[n], t.value.components[n],
                                                path + ".components[" + std::to_string(n) + "]"));
            if (auto issues = weight::validate(cat, f); !issues.empty())
                throw SceneError(path + ": " + issues.front());
            return {s.category, std::move(f)};
        });
    });
}

const Bound<weight::MotiveComplex>& Scene::complex(const std::string& name)
{
    return cached(complexes_, name, [&] {
        const std::string path = "complexes." + name;
        Guard guard(*this, path);
        const Json& j = entry("complexes", name);
        Bound<weight::MotiveComplex> out = wrap(path, [&]() -> Bound<weight::MotiveComplex> {
            if (j.contains("gamma")) {
                const auto& x = simplicial_motive(text(j["gamma"], path + ".gamma"));
                return {x.category, weight::gamma(category(x.category), x.value)};
            }
            if (j.contains("cone")) {
                const auto& f = chain_map(text(j["cone"], path + ".cone"));
                return {f.category, weight::cone(category(f.category), f.value)};
            }
            if (j.contains("shift")) {
                const auto& c = complex(text(j["shift"], path + ".shift"));
                return {c.category,
                        weight::shift(category(c.category), c.value, integer(field(j, "by", path), path + ".by"))};
            }
            if (j.contains("bar_quotient")) {
                const auto& a = action(text(j["bar_quotient"], path + ".bar_quotient"));
                return {a.category, weight::bar_quotient(category(a.category), a.value, level(j, path))};
            }
            if (j.contains("invariants")) {
                const auto& a = action(text(j["invariants"], path + ".invariants"));
                return {a.category, weight::concentrated(weight::invariants_motive(category(a.category), a.value))};
            }
            const std::string cat_name = text(field(j, "category", path), path + ".category");
            const PresentedQCategory& cat = category(cat_name);
            weight::MotiveComplex c;
            c.lo = j.contains("lo") ? integer(j["lo"], path + ".lo") : 0;
            const Json& terms = array(field(j, "terms", path), path + ".terms");
            for (std::size_t k = 0; k < terms.size(); ++k) {
                const std::string tpath = path + ".terms[" + std::to_string(k) + "]";
                if (terms[k].is_array()) {
                    c.terms.push_back(motives::plain(cat, object(cat, terms[k], tpath)));
                } else {
                    AdditiveObject carrier = object(cat, field(terms[k], "carrier", tpath), tpath + ".carrier");
                    MotiveMorphism e = terms[k].contains("idempotent")
                                           ? morphism(cat, terms[k]["idempotent"], carrier, carrier,
                                                      tpath + ".idempotent")
                                           : motives::identity_morphism(cat, carrier);
                    c.terms.push_back(motives::karoubi(cat, std::move(carrier), std::move(e)));
                }
            }
            const Json& ds = j.contains("differentials") ? array(j["differentials"], path + ".differentials")
                                                          : Json::array();
            if (ds.size() + 1 != c.terms.size() && !(c.terms.empty() && ds.empty()))
                throw SceneError(path + ".differentials: expected " +
                                 std::to_string(c.terms.empty() ? 0 : c.terms.size() - 1) + " entries");
            for (std::size_t k = 0; k < ds.size(); ++k)
                c.d.push_back(morphism(cat, ds[k], c.terms[k + 1].carrier, c.terms[k].carrier,
                                       path + ".differentials[" + std::to_string(k) + "]"));
            return {cat_name, std::move(c)};
        });
        if (auto issues = weight::validate(category(out.category), out.value); !issues.empty())
            throw SceneError(path + ": " + issues.front());
        return out;
    });
}

const Bound<weight::ChainMap>& Scene::chain_map(const std::string& name)
{
    return cached(chain_maps_, name, [&] {
        const std::string path = "chain_maps." + name;
        Guard guard(*this, path);
        const Json& j = entry("chain_maps", name);
        Bound<weight::ChainMap> out = wrap(path, [&]() -> Bound<weight::ChainMap> {
            if (j.contains("identity")) {
                const auto& c = complex(text(j["identity"], path + ".identity"));
                return {c.category, weight::identity_chain_map(category(c.category), c.value)};
            }
            if (j.contains("gamma")) {
                const auto& f = simplicial_motive_map(text(j["gamma"], path + ".gamma"));
                return {f.category, weight::gamma_map(category(f.category), f.value)};
            }
            const auto& s = complex(text(field(j, "source", path), path + ".source"));
            const auto& t = complex(text(field(j, "target", path), path + ".target"));
            if (s.category != t.category)
                throw SceneError(path + ": source and target live over different categories");
            const auto& cat = category(s.category);
            weight::ChainMap f{s.value, t.value, {}};
            if (j.contains("components")) {
                const Json& comps = j["components"];
                if (!comps.is_object())
                    throw SceneError(path + ".components: expected {degree: morphism}");
                for (const auto& [deg, m] : comps.items()) {
                    int n = 0;
                    try {
                        std::size_t used = 0;
                        n = std::stoi(deg, &used);
                        if (used != deg.size())
                            throw std::invalid_argument(deg);
                    } catch (const std::exception&) {
                        throw SceneError(path + ".components: '" + deg + "' is not a degree");
                    }
                    f.components[n] = morphism(cat, m, s.value.term(n).carrier, t.value.term(n).carrier,
                                               path + ".components." + deg);
                }
            }
            return {s.category, std::move(f)};
        });
        if (auto defects = weight::chain_map_defects(category(out.category), out.value); !defects.empty())
            throw SceneError(path + ": " + defects.front());
        return out;
    });
}

const Bound<weight::MotiveSquare>& Scene::square(const std::string& name)
{
    return cached(squares_, name, [&] {
        const std::string path = "squares." + name;
        Guard guard(*this, path);
        const Json& j = entry("squares", name);
        auto side = [&](const char* key) -> const Bound<weight::SimplicialMotiveMap>& {
            return simplicial_motive_map(text(field(j, key, path), path + "." + key));
        };
        const auto& top = side("top");
        const auto& bottom = side("bottom");
        const auto& left = side("left");
        const auto& right = side("right");
        for (const auto* m : {&bottom, &left, &right})
            if (m->category != top.category)
                throw SceneError(path + ": maps live over different categories");
        weight::MotiveSquare sq{top.value, bottom.value, left.value, right.value};
        wrap(path, [&] { return weight::cone_comparison(category(top.category), sq); });
        return Bound<weight::MotiveSquare>{top.category, std::move(sq)};
    });
}

} // namespace weightcx::scene
