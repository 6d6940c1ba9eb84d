#pragma once

#include "mnet/properties.hpp"

namespace mnet {

// One verdict of the what-if sweep for a target metabolite: essentiality of
// each reaction, exclusion of each initial-solution member, checkpoint
// status of each other metabolite.
struct ScreenRow {
    enum class Kind { RuleEssential, SolutionExcludable, Checkpoint };

    Kind kind;
    std::string subject;
    bool holds;

    bool operator==(const ScreenRow&) const = default;
};

const char* screen_kind_name(ScreenRow::Kind kind);

// Reference implementation: one reachability check after the other.
std::vector<ScreenRow> run_screen_serial(const LtsGraph& g, int target);

// Same sweep with the independent checks fanned out across OpenMP threads.
// Row order and contents are identical to the serial run.
std::vector<ScreenRow> run_screen_parallel(const LtsGraph& g, int target);

std::vector<ScreenRow> run_screen(const LtsGraph& g, int target, bool parallel);

}  // namespace mnet
