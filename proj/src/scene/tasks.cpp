#include "weightcx/scene/tasks.hpp"

#include "weightcx/descent/cech.hpp"
#include "weightcx/simplicial/coskeleton.hpp"
#include "weightcx/simplicial/hom.hpp"
#include "weightcx/simplicial/homotopy.hpp"
#include "weightcx/simplicial/hypercover.hpp"
#include "weightcx/weight/reduce.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <tuple>

namespace weightcx::scene {

using linalg::Rat;

std::string to_string(Status s)
{
    switch (s) {
    case Status::pass:
        return "pass";
    case Status::fail:
        return "fail";
    case Status::error:
        break;
    }
    return "error";
}

namespace {

struct Outcome {
    bool verdict = true;
    Json payload = Json::object();
};

using Op = std::function<Outcome(Scene&, const Json&, const std::string&)>;

std::string str(const Json& task, const char* key, const std::string& path)
{
    if (!task.contains(key) || !task[key].is_string())
        throw SceneError(path + ": expected string field '" + key + "'");
    return task[key].get<std::string>();
}

int num(const Json& task, const char* key, const std::string& path)
{
    if (!task.contains(key) || !task[key].is_number_integer())
        throw SceneError(path + ": expected integer field '" + key + "'");
    return task[key].get<int>();
}

Json homology_json(const std::map<int, std::size_t>& h)
{
    Json dims = Json::array();
    for (const auto& [n, d] : h)
        dims.push_back(d);
    return {{"lo", h.empty() ? 0 : h.begin()->first}, {"dims", dims}};
}

Json degree_map(const std::map<int, std::size_t>& h)
{
    Json out = Json::object();
    for (const auto& [n, d] : h)
        out[std::to_string(n)] = d;
    return out;
}

std::size_t at_degree(const std::map<int, std::size_t>& h, int n)
{
    auto it = h.find(n);
    return it == h.end() ? 0 : it->second;
}

Json names(const motives::PresentedQCategory& cat, const motives::AdditiveObject& a)
{
    Json out = Json::array();
    for (auto s : a.summands)
        out.push_back(cat.object_name(s));
    return out;
}

Json term_sizes(const weight::MotiveComplex& c)
{
    Json out = Json::array();
    for (const auto& t : c.terms)
        out.push_back(t.carrier.size());
    return out;
}

simplicial::MorphismClass predicate(const Json& task, const std::string& path)
{
    if (!task.contains("predicate"))
        return simplicial::MorphismClass::surjective();
    const Json& p = task["predicate"];
    if (p == "surjective")
        return simplicial::MorphismClass::surjective();
    if (p == "bijective")
        return simplicial::MorphismClass::bijective();
    if (p.is_object() && p.contains("fibers_of_size") && p["fibers_of_size"].is_number_unsigned())
        return simplicial::MorphismClass::fibers_of_size(p["fibers_of_size"].get<std::size_t>());
    if (p.is_object() && p.contains("fiber_sizes") && p["fiber_sizes"].is_array()) {
        std::set<std::size_t> allowed;
        for (const auto& v : p["fiber_sizes"]) {
            if (!v.is_number_unsigned())
                throw SceneError(path + ".predicate.fiber_sizes: expected nonnegative integers");
            allowed.insert(v.get<std::size_t>());
        }
        return simplicial::MorphismClass::fiber_sizes(std::move(allowed));
    }
    throw SceneError(path + ".predicate: expected \"surjective\", \"bijective\", {\"fibers_of_size\": d} or "
                            "{\"fiber_sizes\": [...]}");
}

Json hypercover_json(const simplicial::HypercoverReport& r)
{
    Json degrees = Json::array();
    for (const auto& d : r.degrees)
        degrees.push_back({{"degree", d.degree},
                           {"in_class", d.in_class},
                           {"source_size", d.source_size},
                           {"target_size", d.target_size},
                           {"fiber_sizes", d.fiber_sizes}});
    return {{"predicate", r.predicate}, {"ok", r.ok()}, {"first_failure", r.first_failure()}, {"degrees", degrees}};
}

Outcome op_validate(Scene& s, const Json& task, const std::string& path)
{
    const std::string name = str(task, "entity", path);
    const std::string section = s.section_of(name);
    Outcome out;
    out.payload["section"] = section;
    if (section == "sets") {
        out.payload["size"] = s.set(name).size();
    } else if (section == "maps") {
        const auto& f = s.map(name);
        out.payload["surjective"] = f.surjective();
        out.payload["injective"] = f.injective();
        out.payload["fiber_sizes"] = f.fiber_sizes();
    } else if (section == "simplicial_sets") {
        out.payload["sizes"] = s.simplicial_set(name).sizes();
    } else if (section == "finite_simplicial_sets") {
        const auto& a = s.finite_simplicial_set(name);
        Json counts = Json::array();
        for (int k = 0; k <= a.generation_level(); ++k)
            counts.push_back(a.count(k));
        out.payload["nondegenerate"] = counts;
    } else if (section == "simplicial_maps") {
        out.payload["level"] = s.simplicial_map(name).level();
    } else if (section == "categories") {
        const auto& c = s.category(name);
        out.payload["objects"] = c.object_count();
        out.payload["morphisms"] = c.morphism_count();
    } else if (section == "realizations") {
        out.payload["category"] = s.realization(name).category;
    } else if (section == "groups") {
        out.payload["order"] = s.group(name).order();
    } else if (section == "actions") {
        out.payload["order"] = s.action(name).value.group.order();
    } else if (section == "simplicial_motives") {
        out.payload["level"] = s.simplicial_motive(name).value.level();
    } else if (section == "simplicial_motive_maps") {
        out.payload["level"] = s.simplicial_motive_map(name).value.source.level();
    } else if (section == "complexes") {
        const auto& c = s.complex(name).value;
        out.payload["lo"] = c.lo;
        out.payload["terms"] = term_sizes(c);
    } else if (section == "chain_maps") {
        out.payload["components"] = s.chain_map(name).value.components.size();
    } else if (section == "squares") {
        s.square(name);
    } else {
        throw SceneError(path + ".entity: unknown entity '" + name + "'");
    }
    out.payload["valid"] = true;
    return out;
}

Outcome op_sk(Scene& s, const Json& task, const std::string& path)
{
    const auto& x = s.simplicial_set(str(task, "set", path));
    Outcome out;
    out.payload["sizes"] = simplicial::sk(x, num(task, "n", path)).sizes();
    return out;
}

Outcome op_cosk(Scene& s, const Json& task, const std::string& path)
{
    const auto& x = s.simplicial_set(str(task, "set", path));
    const auto c = simplicial::cosk(x, num(task, "n", path), s.level(task, path));
    Outcome out;
    out.verdict = simplicial::validate(c).ok();
    out.payload["sizes"] = c.sizes();
    out.payload["valid"] = out.verdict;
    return out;
}

Outcome op_hom_delta(Scene& s, const Json& task, const std::string& path)
{
    const auto& a = s.finite_simplicial_set(str(task, "source", path));
    const auto& x = s.simplicial_set(str(task, "target", path));
    const auto homs = simplicial::hom_delta(a, x);
    Outcome out;
    out.payload["count"] = homs.size();
    if (task.value("list", false)) {
        Json list = Json::array();
        for (const auto& h : homs) {
            Json images = Json::object();
            for (int k = 0; k <= a.generation_level(); ++k)
                for (std::size_t c = 0; c < a.count(k); ++c)
                    images[a.id(k, c)] = x.id(k, h[static_cast<std::size_t>(k)][c]);
            list.push_back(images);
        }
        out.payload["homs"] = list;
    }
    return out;
}

Outcome op_check_hypercover(Scene& s, const Json& task, const std::string& path)
{
    const auto& f = s.simplicial_map(str(task, "map", path));
    const auto report = simplicial::is_hypercover(f, predicate(task, path), s.level(task, path));
    return {report.ok(), hypercover_json(report)};
}

Outcome op_homotopy(Scene& s, const Json& task, const std::string& path)
{
    const std::string kind = task.value("kind", std::string("cosk0"));
    simplicial::Homotopy h;
    if (kind == "cosk0") {
        h = simplicial::build_homotopy_cosk0(s.map(str(task, "f0", path)), s.map(str(task, "f1", path)),
                                             s.level(task, path));
    } else if (kind == "coskn") {
        h = simplicial::build_homotopy_coskn(
            s.simplicial_map(str(task, "f0", path)), s.simplicial_map(str(task, "f1", path)),
            s.simplicial_map(str(task, "over_source", path)), s.simplicial_map(str(task, "over_target", path)),
            num(task, "n", path), s.level(task, path));
    } else {
        throw SceneError(path + ".kind: expected \"cosk0\" or \"coskn\"");
    }
    const auto check = simplicial::check_homotopy(h);
    Outcome out;
    out.verdict = check.ok();
    out.payload["source_sizes"] = h.source.sizes();
    out.payload["target_sizes"] = h.target.sizes();
    out.payload["simplicial"] = check.map_report.ok();
    out.payload["end0"] = check.end0_ok;
    out.payload["end1"] = check.end1_ok;
    return out;
}

Outcome op_cech(Scene& s, const Json& task, const std::string& path)
{
    const auto& p = s.map(str(task, "map", path));
    const int level = s.level(task, path);
    const auto nerve = descent::cech_nerve(p, level);
    const auto report = descent::verify_cech_acyclic(p, level);
    Outcome out;
    out.verdict = report.acyclic;
    out.payload["nerve_sizes"] = nerve.sizes();
    out.payload["surjective"] = report.surjective;
    out.payload["homology"] = degree_map(report.homology);
    out.payload["acyclic"] = report.acyclic;
    return out;
}

Outcome op_contracting_homotopy(Scene& s, const Json& task, const std::string& path)
{
    const auto& p = s.map(str(task, "map", path));
    const int level = s.level(task, path);
    const auto cech = descent::augmented_cech(p, level);
    const auto h = descent::contracting_homotopy(p, level);
    const auto report = linalg::verify_contracting_homotopy(cech.complex, h, -1, level - 1);
    Outcome out;
    out.verdict = report.ok;
    out.payload["fiber_size"] = descent::constant_fiber_size(p);
    out.payload["checked_degrees"] = {-1, level - 1};
    out.payload["failed_degrees"] = report.failed_degrees;
    return out;
}

Outcome op_descent(Scene& s, const Json& task, const std::string& path)
{
    const auto& f = s.simplicial_map(str(task, "map", path));
    const auto report = descent::verify_descent(f, s.level(task, path));
    Json degrees = Json::array();
    for (const auto& d : report.degrees)
        degrees.push_back({{"degree", d.degree},
                           {"source_homology", d.source_homology},
                           {"target_homology", d.target_homology},
                           {"induced_rank", d.induced_rank},
                           {"iso", d.iso}});
    Outcome out;
    out.verdict = report.ok();
    out.payload["hypercover"] = hypercover_json(report.hypercover);
    out.payload["degrees"] = degrees;
    out.payload["iso_below_level"] = report.iso_below_level();
    return out;
}

Json realized_homology(const motives::PresentedQCategory& cat, const std::vector<motives::Realization>& rs,
                       const weight::MotiveComplex& c)
{
    Json out = Json::object();
    for (const auto& r : rs)
        out[r.name()] = homology_json(linalg::homology_dims(weight::realize_complex(cat, r, c)));
    return out;
}

Outcome op_gamma(Scene& s, const Json& task, const std::string& path)
{
    const auto& x = s.simplicial_motive(str(task, "motive", path));
    const auto& cat = s.category(x.category);
    const auto c = weight::gamma(cat, x.value);
    Outcome out;
    out.payload["terms"] = term_sizes(c);
    out.payload["homology"] = realized_homology(cat, s.realizations(x.category), c);
    return out;
}

Outcome op_cone(Scene& s, const Json& task, const std::string& path)
{
    const auto& f = s.chain_map(str(task, "map", path));
    const auto& cat = s.category(f.category);
    const auto c = weight::cone(cat, f.value);
    Outcome out;
    out.payload["lo"] = c.lo;
    out.payload["terms"] = term_sizes(c);
    Json homology = Json::object();
    Json euler = Json::object();
    for (const auto& r : s.realizations(f.category)) {
        const auto hc = linalg::homology_dims(weight::realize_complex(cat, r, c));
        const auto hy = linalg::homology_dims(weight::realize_complex(cat, r, f.value.target));
        const auto hx = linalg::homology_dims(weight::realize_complex(cat, r, f.value.source));
        for (const auto& [n, d] : hc)
            if (d > at_degree(hy, n) + at_degree(hx, n - 1))
                out.verdict = false;
        const long cc = weight::euler_char(cat, c, {r}).realized_rank.at(r.name());
        const long cy = weight::euler_char(cat, f.value.target, {r}).realized_rank.at(r.name());
        const long cx = weight::euler_char(cat, f.value.source, {r}).realized_rank.at(r.name());
        if (cc != cy - cx)
            out.verdict = false;
        homology[r.name()] = homology_json(hc);
        euler[r.name()] = {{"cone", cc}, {"target", cy}, {"source", cx}};
    }
    out.payload["homology"] = homology;
    out.payload["euler"] = euler;
    return out;
}

Outcome op_triangle(Scene& s, const Json& task, const std::string& path)
{
    const auto& f = s.chain_map(str(task, "map", path));
    const auto& cat = s.category(f.category);
    const auto rs = s.realizations(f.category);
    const auto tri = weight::triangle(cat, f.value);
    const auto report = weight::check_triangle(cat, tri, rs);
    Json euler = Json::object();
    for (const auto& r : rs)
        euler[r.name()] = {{"x", weight::euler_char(cat, tri.x, {r}).realized_rank.at(r.name())},
                           {"t", weight::euler_char(cat, tri.t, {r}).realized_rank.at(r.name())},
                           {"u", weight::euler_char(cat, tri.u, {r}).realized_rank.at(r.name())}};
    Outcome out;
    out.verdict = report.ok();
    out.payload["maps_are_chain_maps"] = report.maps_are_chain_maps;
    out.payload["formal_null_homotopies"] = report.formal_null_homotopies;
    out.payload["homology_composites_vanish"] = report.homology_composites_vanish;
    out.payload["euler_additive"] = report.euler_additive;
    out.payload["euler"] = euler;
    return out;
}

Outcome op_bar_quotient(Scene& s, const Json& task, const std::string& path)
{
    const auto& a = s.action(str(task, "action", path));
    const auto& cat = s.category(a.category);
    const int level = s.level(task, path);
    const auto c = weight::bar_quotient(cat, a.value, level);
    const auto inv = weight::invariants_motive(cat, a.value);
    Outcome out;
    Json homology = Json::object();
    Json top = Json::object();
    Json rank = Json::object();
    for (const auto& r : s.realizations(a.category)) {
        const auto h = linalg::homology_dims(weight::realize_complex(cat, r, c));
        const std::size_t k = motives::realized_rank(cat, r, inv);
        Json below = Json::array();
        for (int n = 0; n < level; ++n) {
            below.push_back(at_degree(h, n));
            if (at_degree(h, n) != (n == 0 ? k : 0))
                out.verdict = false;
        }
        if (level == 0 && at_degree(h, 0) != k)
            out.verdict = false;
        homology[r.name()] = below;
        top[r.name()] = at_degree(h, level);
        rank[r.name()] = k;
    }
    out.payload["terms"] = term_sizes(c);
    out.payload["homology"] = homology;
    out.payload["top_degree"] = top;
    out.payload["invariant_rank"] = rank;
    return out;
}

Outcome op_invariants(Scene& s, const Json& task, const std::string& path)
{
    const auto& a = s.action(str(task, "action", path));
    const auto& cat = s.category(a.category);
    const auto inv = weight::invariants_motive(cat, a.value);
    Outcome out;
    Json rank = Json::object();
    Json chi = Json::object();
    for (const auto& r : s.realizations(a.category)) {
        const std::size_t k = motives::realized_rank(cat, r, inv);
        const Rat avg = motives::character_average(cat, r, a.value);
        if (avg != Rat(static_cast<long>(k)))
            out.verdict = false;
        rank[r.name()] = k;
        chi[r.name()] = linalg::to_string(avg);
    }
    out.payload["rank"] = rank;
    out.payload["character_average"] = chi;
    return out;
}

Outcome op_euler(Scene& s, const Json& task, const std::string& path)
{
    const auto& c = s.complex(str(task, "complex", path));
    const auto& cat = s.category(c.category);
    const auto k = weight::euler_char(cat, c.value, s.realizations(c.category));
    Json terms = Json::array();
    int degree = c.value.lo;
    for (const auto& t : c.value.terms) {
        if (!t.carrier.summands.empty())
            terms.push_back({{"degree", degree},
                             {"sign", degree % 2 == 0 ? 1 : -1},
                             {"carrier", names(cat, t.carrier)},
                             {"plain", motives::is_plain(cat, t)}});
        ++degree;
    }
    Outcome out;
    out.payload["terms"] = terms;
    out.payload["ranks"] = k.realized_rank;
    return out;
}

Outcome op_reduce(Scene& s, const Json& task, const std::string& path)
{
    const auto& c = s.complex(str(task, "complex", path));
    const auto& cat = s.category(c.category);
    const auto rs = s.realizations(c.category);
    Outcome out;
    Json homology = Json::object();
    std::optional<weight::ReductionResult> first;
    for (const auto& r : rs) {
        auto result = weight::reduce(cat, c.value, r);
        if (!result.preserved())
            out.verdict = false;
        homology[r.name()] = {{"before", degree_map(result.homology_before)},
                              {"after", degree_map(result.homology_after)}};
        if (!first)
            first = std::move(result);
    }
    if (!first) {
        // Without a realization the abstract reduction is still reported.
        first = weight::ReductionResult{};
        std::tie(first->reduced, first->log) = weight::cancel_all(cat, c.value);
    }
    Json log = Json::array();
    for (const auto& step : first->log)
        log.push_back({{"degree", step.degree},
                       {"source", step.source},
                       {"target", step.target},
                       {"object", cat.object_name(step.object)},
                       {"scalar", linalg::to_string(step.scalar)}});
    const bool replays = weight::replay(cat, c.value, first->log) == first->reduced;
    out.verdict = out.verdict && replays;
    out.payload["cancellations"] = log;
    out.payload["terms_before"] = term_sizes(c.value);
    out.payload["terms_after"] = term_sizes(first->reduced);
    out.payload["zero_complex"] = weight::is_zero_complex(first->reduced);
    out.payload["replays"] = replays;
    out.payload["homology"] = homology;
    return out;
}

Outcome op_universal(Scene& s, const Json& task, const std::string& path)
{
    const auto& sq = s.square(str(task, "square", path));
    const auto& cat = s.category(sq.category);
    const int level = task.contains("level") || s.options().level ? s.level(task, path) : -1;
    const auto report = weight::verify_universal_equivalence(cat, sq.value, s.realizations(sq.category), level);
    Json per = Json::object();
    for (const auto& [name, degrees] : report.realizations) {
        Json list = Json::array();
        for (const auto& d : degrees)
            list.push_back({{"degree", d.degree},
                            {"source_homology", d.source_homology},
                            {"target_homology", d.target_homology},
                            {"induced_rank", d.induced_rank},
                            {"iso", d.iso}});
        per[name] = list;
    }
    Outcome out;
    out.verdict = report.ok();
    out.payload["level"] = report.level;
    out.payload["degrees"] = per;
    return out;
}

const std::vector<std::pair<std::string, Op>>& registry()
{
    static const std::vector<std::pair<std::string, Op>> ops{
        {"validate", op_validate},
        {"sk", op_sk},
        {"cosk", op_cosk},
        {"hom-delta", op_hom_delta},
        {"check-hypercover", op_check_hypercover},
        {"homotopy", op_homotopy},
        {"cech", op_cech},
        {"cech-acyclicity", op_cech},
        {"contracting-homotopy", op_contracting_homotopy},
        {"descent-check", op_descent},
        {"gamma", op_gamma},
        {"cone", op_cone},
        {"triangle", op_triangle},
        {"bar-quotient", op_bar_quotient},
        {"invariants", op_invariants},
        {"euler", op_euler},
        {"reduce", op_reduce},
        {"universal-equivalence", op_universal},
    };
    return ops;
}

const Op* find_op(const std::string& name)
{
    for (const auto& [n, op] : registry())
        if (n == name)
            return &op;
    return nullptr;
}

std::string task_name(const Json& task, std::size_t index)
{
    if (task.contains("name") && task["name"].is_string())
        return task["name"].get<std::string>();
    return "task" + std::to_string(index);
}

} // namespace

const std::vector<std::string>& task_ops()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [n, op] : registry())
            out.push_back(n);
        return out;
    }();
    return names;
}

void check_tasks(const Scene& scene)
{
    std::set<std::string> seen;
    for (std::size_t k = 0; k < scene.tasks().size(); ++k) {
        const Json& task = scene.tasks()[k];
        const std::string path = "tasks[" + std::to_string(k) + "]";
        if (!task.is_object())
            throw SceneError(path + ": expected an object");
        if (task.contains("name") && !task["name"].is_string())
            throw SceneError(path + ".name: expected a string");
        if (!task.contains("op") || !task["op"].is_string())
            throw SceneError(path + ": missing op");
        if (!find_op(task["op"].get<std::string>()))
            throw SceneError(path + ".op: unknown task '" + task["op"].get<std::string>() + "'");
        if (task.contains("expect") && !task["expect"].is_object())
            throw SceneError(path + ".expect: expected an object");
        if (!seen.insert(task_name(task, k)).second)
            throw SceneError(path + ": task name '" + task_name(task, k) + "' used twice");
    }
}

TaskResult run_task(Scene& scene, const Json& task)
{
    std::size_t index = 0;
    for (; index < scene.tasks().size(); ++index)
        if (&scene.tasks()[index] == &task)
            break;
    TaskResult result;
    result.task = task_name(task, index);
    result.op = task.value("op", std::string());
    const std::string path = "tasks." + result.task;
    const auto start = std::chrono::steady_clock::now();
    try {
        const Op* op = find_op(result.op);
        if (!op)
            throw SceneError(path + ".op: unknown task '" + result.op + "'");
        Outcome outcome = (*op)(scene, task, path);
        result.status = outcome.verdict ? Status::pass : Status::fail;
        result.payload = std::move(outcome.payload);
        if (task.contains("expect")) {
            Json unmet = Json::array();
            for (const auto& [key, value] : task["expect"].items())
                if (!result.payload.contains(key) || result.payload[key] != value)
                    unmet.push_back(key);
            if (!unmet.empty()) {
                result.status = Status::fail;
                result.payload["unmet_expectations"] = unmet;
            }
        }
    } catch (const std::exception& e) {
        result.status = Status::error;
        result.payload = {{"error", e.what()}};
    }
    result.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
}

Json to_json(const TaskResult& r)
{
    return {{"task", r.task},
            {"op", r.op},
            {"status", to_string(r.status)},
            {"payload", r.payload},
            {"wall_ms", static_cast<long>(r.wall_ms * 1000) / 1000.0}};
}

} // namespace weightcx::scene
