#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "aaa/fit.hpp"

namespace aaa {

inline constexpr int kModelFormatVersion = 1;

struct ModelMetadata {
    FitConfig config;
    std::size_t steps = 0;
    bool converged = false;
    double max_error = 0.0;
    double scale = 0.0;
};

/// Everything a saved fit carries. See docs/model-format.md for the syntax.
struct ModelFile {
    int version = kModelFormatVersion;
    BarycentricRational approximant;
    std::vector<PoleInfo> poles;
    std::vector<Complex> zeros;
    ModelMetadata metadata;
    FitTrace trace;
    std::optional<CleanupReport> cleanup;
};

ModelFile make_model(const FitResult& result, const FitConfig& config);

/// Doubles are written with 17 significant digits, so reading back yields
/// bit-identical values.
void write_model(std::ostream& out, const ModelFile& model);

/// Throws ParseError (with line number) on malformed input or an unknown version.
ModelFile read_model(std::istream& in);

void save_model(const std::string& path, const ModelFile& model);
ModelFile load_model(const std::string& path);

}  // namespace aaa
