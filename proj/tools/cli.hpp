#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "aaa/fit.hpp"

namespace aaa::cli {

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kUsageError = 2,
    kInputError = 3,
};

/// Fit flags as given on the command line; unset members keep the base config.
struct FitFlags {
    std::optional<double> tol;
    std::optional<std::size_t> mmax;
    bool no_cleanup = false;
    std::optional<double> cleanup_tol;
    bool symmetric = false;
    std::optional<std::string> scale;
    bool diag_cond = false;

    FitConfig apply(FitConfig base) const;
};

struct FitCommand {
    std::string samples_path;
    std::string out_dir = ".";
    FitFlags flags;
};

struct EvalCommand {
    std::string model_path;
    std::optional<std::string> points_path;
    std::vector<std::string> inline_points;
};

struct DemoCommand {
    std::string name;
    std::string out_dir = ".";
    std::uint64_t seed = 1;
    FitFlags flags;
};

int cmd_fit(const FitCommand& cmd, std::ostream& out, std::ostream& err);
int cmd_eval(const EvalCommand& cmd, std::ostream& out, std::ostream& err);
int cmd_demo(const DemoCommand& cmd, std::ostream& out, std::ostream& err);
int cmd_list(std::ostream& out);

/// Parses argv and dispatches; never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace aaa::cli
