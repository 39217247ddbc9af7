#include "weightcx/scene/tasks.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using weightcx::scene::Json;

int document_error(std::ostream& out, const weightcx::scene::SceneError& e)
{
    Json line{{"status", "error"}, {"error", e.what()}};
    if (e.line > 0) {
        line["line"] = e.line;
        line["column"] = e.column;
    }
    out << line.dump() << '\n';
    std::cerr << "weightcx: " << e.what() << '\n';
    return 2;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Run a weightcx scene document and print one JSON report per task."};
    std::string document;
    std::optional<int> level;
    std::optional<std::string> realization;
    std::string output;
    bool list_tasks = false;
    app.add_option("document", document, "Scene document (JSON)");
    app.add_option("--level", level, "Override every truncation level in the document");
    app.add_option("--realization", realization, "Use only this realization");
    app.add_option("--output", output, "Write the report here instead of stdout");
    app.add_flag("--list-tasks", list_tasks, "Print task names without running them");
    CLI11_PARSE(app, argc, argv);

    std::ofstream file;
    if (!output.empty()) {
        file.open(output);
        if (!file) {
            std::cerr << "weightcx: cannot write " << output << '\n';
            return 2;
        }
    }
    std::ostream& out = output.empty() ? std::cout : file;

    if (document.empty()) {
        if (!list_tasks) {
            std::cerr << app.help();
            return 2;
        }
        for (const auto& op : weightcx::scene::task_ops())
            out << op << '\n';
        return 0;
    }

    std::ifstream in(document);
    if (!in) {
        std::cerr << "weightcx: cannot read " << document << '\n';
        return 2;
    }
    std::stringstream text;
    text << in.rdbuf();

    try {
        auto scene = weightcx::scene::Scene::parse(text.str(), {level, realization});
        weightcx::scene::check_tasks(scene);
        if (list_tasks) {
            std::size_t k = 0;
            for (const auto& task : scene.tasks()) {
                out << task.value("name", "task" + std::to_string(k)) << '\t' << task["op"].get<std::string>()
                    << '\n';
                ++k;
            }
            return 0;
        }
        scene.resolve_all();
        int code = 0;
        for (const auto& task : scene.tasks()) {
            const auto result = weightcx::scene::run_task(scene, task);
            out << weightcx::scene::to_json(result).dump() << '\n';
            if (result.status == weightcx::scene::Status::error)
                code = 2;
            else if (result.status == weightcx::scene::Status::fail && code == 0)
                code = 1;
        }
        return code;
    } catch (const weightcx::scene::SceneError& e) {
        return document_error(out, e);
    }
}
