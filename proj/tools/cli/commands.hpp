#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "spec_gen.hpp"
#include "sweep.hpp"

namespace hamc::cli {

// Exit code contract, stable across releases.
constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitInternal = 4;
constexpr int kExitInvalidPlan = 5;
constexpr int kExitBudget = 6;
constexpr int kExitUnsatisfiable = 7;

int cmd_compute(const std::string& spec_path, std::ostream& out, std::ostream& err);

/// Writes the plan JSON to out_path, or to out when out_path is empty.
int cmd_construct(const std::string& spec_path, const std::string& out_path,
                  std::ostream& out, std::ostream& err);

int cmd_verify(const std::string& graph_path, const std::string& plan_path,
               std::ostream& out, std::ostream& err);

struct OracleCmdOptions {
    std::string spec_path;   // exactly one of spec_path/graph_path is set
    std::string graph_path;
    int budget = 8;
    int threads = 1;
    bool path_target = false;
};

int cmd_oracle(const OracleCmdOptions& options, std::ostream& out, std::ostream& err);

int cmd_compare(const SweepOptions& options, const std::string& out_path,
                std::ostream& out, std::ostream& err);

struct GenCmdOptions {
    std::uint64_t seed = 1;
    GenRanges ranges;
    std::string constraint = "any";
    std::string out_path;
};

int cmd_gen(const GenCmdOptions& options, std::ostream& out, std::ostream& err);

}  // namespace hamc::cli
