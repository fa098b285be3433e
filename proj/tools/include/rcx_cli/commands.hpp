#pragma once

#include <optional>
#include <string>

#include "rcx/arrow.hpp"

namespace rcx::cli {

// Exit statuses shared by every subcommand:
//   0 computed (either verdict), 1 verification mismatch,
//   2 usage/parse error, 3 timeout.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitTimeout = 3;

struct GlobalOptions {
    int threads = 1;
    double timeout_seconds = 0.0;
    bool deterministic = false;
    bool porcelain = false;
    bool no_hints = false;
    bool no_orbit_symmetry = false;
    bool no_color_swap = false;
    bool no_deferred_checks = false;
    int edge_cap = 30;

    SearchOptions to_search_options() const;
};

int cmd_arrows(const GlobalOptions& g, const std::string& host, const std::string& red,
               const std::string& blue, const std::string& witness_path);
int cmd_ramsey(const GlobalOptions& g, const std::string& red, const std::string& blue,
               int max_r, bool fast, const std::string& emit_dir);
int cmd_critical(const GlobalOptions& g, const std::string& cls, const std::string& red,
                 const std::string& blue, const std::string& emit_dir);
int cmd_star_critical(const GlobalOptions& g, const std::string& red, const std::string& blue,
                      const std::string& emit_dir);
int cmd_params(const GlobalOptions& g, const std::string& graph);
int cmd_construct(const GlobalOptions& g, const std::string& family, int m, int n,
                  const std::string& out_path);
int cmd_check_cert(const GlobalOptions& g, const std::string& path);
int cmd_verify_paper(const GlobalOptions& g, const std::string& tier);

}  // namespace rcx::cli
