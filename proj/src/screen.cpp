#include "mnet/screen.hpp"

namespace mnet {

const char* screen_kind_name(ScreenRow::Kind kind) {
    switch (kind) {
    case ScreenRow::Kind::RuleEssential: return "essential";
    case ScreenRow::Kind::SolutionExcludable: return "excludable";
    case ScreenRow::Kind::Checkpoint: return "checkpoint";
    }
    return "?";
}

namespace {

struct Task {
    ScreenRow::Kind kind;
    std::string subject;
    RuleGroup group;    // RuleEssential
    int metabolite;     // SolutionExcludable / Checkpoint
};

std::vector<Task> make_tasks(const LtsGraph& g, int target) {
    if (g.net.initial.test(target))
        throw AnalysisError(AnalysisError::Kind::TargetInSolution,
                            g.net.universe.name(target) + " is in the initial solution");

    std::vector<Task> tasks;
    for (auto& [base, group] : reaction_groups(g.net))
        tasks.push_back({ScreenRow::Kind::RuleEssential, base, group, -1});
    g.net.initial.for_each([&](int b) {
        tasks.push_back({ScreenRow::Kind::SolutionExcludable, g.net.universe.name(b), {}, b});
    });
    for (int m = 0; m < g.net.universe.size(); ++m) {
        if (m == target) continue;
        tasks.push_back({ScreenRow::Kind::Checkpoint, g.net.universe.name(m), {}, m});
    }
    return tasks;
}

ScreenRow run_task(const LtsGraph& g, int target, const Task& task) {
    switch (task.kind) {
    case ScreenRow::Kind::RuleEssential: {
        bool holds = essential(g, task.group, target).holds;
        return {task.kind, task.subject, holds};
    }
    case ScreenRow::Kind::SolutionExcludable: {
        Bitset start = g.net.initial;
        start.reset(task.metabolite);
        return {task.kind, task.subject, g.net.derivable_from(start, target)};
    }
    case ScreenRow::Kind::Checkpoint: {
        bool holds = checkpoint(g, task.metabolite, target).holds;
        return {task.kind, task.subject, holds};
    }
    }
    return {task.kind, task.subject, false};
}

}  // namespace

std::vector<ScreenRow> run_screen_serial(const LtsGraph& g, int target) {
    std::vector<Task> tasks = make_tasks(g, target);
    std::vector<ScreenRow> rows(tasks.size());
    for (size_t i = 0; i < tasks.size(); ++i) rows[i] = run_task(g, target, tasks[i]);
    return rows;
}

std::vector<ScreenRow> run_screen_parallel(const LtsGraph& g, int target) {
    std::vector<Task> tasks = make_tasks(g, target);
    std::vector<ScreenRow> rows(tasks.size());
#ifdef MNET_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (size_t i = 0; i < tasks.size(); ++i) rows[i] = run_task(g, target, tasks[i]);
    return rows;
}

std::vector<ScreenRow> run_screen(const LtsGraph& g, int target, bool parallel) {
    return parallel ? run_screen_parallel(g, target) : run_screen_serial(g, target);
}

}  // namespace mnet
