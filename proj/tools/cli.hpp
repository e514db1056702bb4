#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mgw::cli {

enum ExitCode : int { exit_ok = 0, exit_failure = 1, exit_config = 2 };

struct RunConfig {
    std::optional<int> n;
    std::optional<int> a;  // defaults to n
    std::optional<int> d_max;
    std::optional<int> u_order;  // defaults to d_max
    std::vector<std::pair<int, int>> insertions;  // (a_j, b_j): tau_{a_j} H^{b_j}
    std::optional<std::string> alpha;
    std::vector<std::string> suites;
    std::string format = "json";
    std::optional<std::string> cache_dir;
    int threads = 1;
    int n_min = 5;
    bool mutate = false;
};

// args excludes the program name; output goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mgw::cli
