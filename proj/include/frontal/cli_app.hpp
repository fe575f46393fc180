#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "frontal/curves.hpp"
#include "frontal/surface.hpp"

namespace frontal::cli {

using Json = nlohmann::ordered_json;

struct ConfigError : Error {
    using Error::Error;
};

struct TraceRequest {
    FieldKind field = FieldKind::Asymptotic1;
    std::vector<Vec2> seeds;
    double step = 1e-3;
    int steps = 2000;
    double chart_halfwidth = 0.5;
};

struct SmoothableRequest {
    Vec2 point = Vec2::Zero();
    double epsilon = 0.1;
};

struct Requests {
    bool mesh = false;
    bool fields = false;
    bool singular = false;
    std::vector<Vec2> classify_points;
    std::optional<std::string> extendability_mode;  // "auto" | "analytic" | "numeric"
    std::vector<TraceRequest> traces;
    std::vector<SmoothableRequest> smoothable;
};

struct LoadedConfig {
    Json echo;
    FrontalSurface surface;
    int grid_u = 33;
    int grid_v = 33;
    std::string out_dir = ".";  // overridden by --out
    Requests requests;
};

// Parses, validates and builds the configured generator. Throws
// ConfigError / SyntaxError / PreconditionFailed on invalid input.
LoadedConfig load_config(const std::string& path);

FrontalSurface build_generator(const Json& g);

// Exit codes: 0 success, 1 failed verify identities, 2 validation error,
// 3 numeric failure.
int cmd_run(const std::string& config_path, const std::string& out_dir);
int cmd_verify(const std::string& config_path);
int cmd_eval(const std::string& text, double u, double v, int order);

int main_entry(int argc, char** argv);

}  // namespace frontal::cli
