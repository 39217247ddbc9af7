#pragma once

#include "weightcx/scene/scene.hpp"

#include <string>
#include <vector>

namespace weightcx::scene {

enum class Status { pass, fail, error };

std::string to_string(Status s);

struct TaskResult {
    std::string task;
    std::string op;
    Status status = Status::error;
    Json payload = Json::object();
    double wall_ms = 0;
};

/// Every recognized op, in documentation order.
const std::vector<std::string>& task_ops();

/// Runs one task. Library exceptions become status "error" with the message
/// in payload.error. When the task carries "expect", each listed payload
/// field must match for a pass.
TaskResult run_task(Scene& scene, const Json& task);

/// {task, op, status, payload, wall_ms}.
Json to_json(const TaskResult& r);

/// Checks task names and ops before anything runs. Throws SceneError.
void check_tasks(const Scene& scene);

} // namespace weightcx::scene
