#include "frontal/cli_app.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "frontal/classify.hpp"
#include "frontal/extend.hpp"
#include "frontal/mesh_obj.hpp"
#include "frontal/singular_set.hpp"
#include "frontal/smoothable.hpp"
#include "frontal/verify.hpp"

namespace frontal::cli {

namespace {

constexpr const char* kVersion = "frontal-lab 0.1.0";

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

int guarded(const std::string& context, const std::function<int()>& body) {
    try {
        return body();
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << " [" << context << "]\n";
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << " [" << context << "]\n";
        return 2;
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << " [" << context << "]\n";
        return 2;
    } catch (const PreconditionFailed& e) {
        std::cerr << "error: " << e.what() << " [" << context << "]\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "numeric failure: " << e.what() << " [" << context << "]\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << " [" << context << "]\n";
        return 3;
    }
}

Json classify_block(const FrontalSurface& s, const std::vector<Vec2>& points) {
    Json arr = Json::array();
    for (const Vec2& p : points) {
        const SingularityReport r = classify_singularity(s, p.x(), p.y());
        Json row;
        row["point"] = {r.u, r.v};
        row["front_type"] = front_type_name(r.front_type);
        row["rank"] = r.rank;
        row["is_singular"] = r.is_singular;
        row["lambda"] = r.lambda;
        row["H_rel"] = r.H_rel;
        row["K_rel"] = r.K_rel;
        arr.push_back(std::move(row));
    }
    return arr;
}

Json extendability_block(const FrontalSurface& s, const std::string& mode, int grid) {
    ExtendMode m;
    if (mode == "analytic")
        m = ExtendMode::Analytic;
    else if (mode == "numeric")
        m = ExtendMode::Numeric;
    else
        m = s.has_b_field() ? ExtendMode::Analytic : ExtendMode::Numeric;

    const ExtendabilityReport rep = extendability_test(s, m, std::max(grid, 17));
    Json block;
    block["mode"] = m == ExtendMode::Analytic ? "analytic" : "numeric";
    block["extendable"] = rep.extendable;
    if (m == ExtendMode::Analytic) {
        block["max_residual"] = rep.max_analytic_residual;
    } else {
        block["singular_points_tested"] = rep.singular_points_tested;
        Json evidence = Json::array();
        for (const RayEvidence& ev : rep.evidence) {
            Json e;
            e["singular_point"] = {ev.singular_point.x(), ev.singular_point.y()};
            e["angle"] = ev.angle;
            e["entry"] = {ev.row, ev.col};
            e["stable"] = ev.stable;
            e["bounded"] = ev.bounded;
            e["ratios"] = ev.ratios;
            evidence.push_back(std::move(e));
        }
        block["evidence"] = std::move(evidence);
    }
    return block;
}

struct TraceArtifacts {
    Json summaries = Json::array();
    std::vector<Json> curve_lines;
};

TraceArtifacts run_traces(const FrontalSurface& s, const std::vector<TraceRequest>& requests) {
    TraceArtifacts out;
    for (const TraceRequest& req : requests) {
        const bool asymptotic =
            req.field == FieldKind::Asymptotic1 || req.field == FieldKind::Asymptotic2;
        for (const Vec2& seed : req.seeds) {
            FieldPair pair;
            if (asymptotic) {
                pair = s.kind == GeneratorKind::ExtendableKWave
                           ? asymptotic_fields_front_k(s)
                           : asymptotic_fields(s, seed, req.chart_halfwidth);
            } else {
                pair = curvature_line_fields(s, seed, req.chart_halfwidth);
            }
            const DirectionField& field =
                (req.field == FieldKind::Asymptotic1 || req.field == FieldKind::CurvatureLine1)
                    ? pair.first
                    : pair.second;

            // The field constructions are chart-local; trace inside the chart.
            const TracedCurve curve = trace_flow(field, seed, req.step, req.steps, field.chart);

            Json record;
            record["field"] = field_kind_name(req.field);
            record["branch"] = field.provenance;
            record["seed"] = {seed.x(), seed.y()};
            record["termination"] = termination_name(curve.reason);
            Json verts = Json::array();
            for (const auto& v : curve.vertices) verts.push_back({v.t, v.u, v.v});
            record["vertices"] = std::move(verts);

            Json summary;
            summary["field"] = field_kind_name(req.field);
            summary["seed"] = {seed.x(), seed.y()};
            summary["termination"] = termination_name(curve.reason);
            summary["n_vertices"] = curve.vertices.size();

            if (asymptotic) {
                const ResidualReport r = g_asymptotic_residual(s, curve, field.dir);
                record["residual_g_asymptotic"] = {{"max", r.max_abs},
                                                   {"per_vertex", r.per_vertex}};
                summary["max_g_asymptotic_residual"] = r.max_abs;
            } else {
                const ResidualReport rl = line_of_curvature_residual(s, curve, field.dir);
                const ResidualReport rg = gaussian_line_residual(s, curve, field);
                record["residual_line_of_curvature"] = {{"max", rl.max_abs},
                                                        {"per_vertex", rl.per_vertex}};
                record["residual_gaussian_line"] = {{"max", rg.max_abs},
                                                    {"per_vertex", rg.per_vertex}};
                summary["max_line_of_curvature_residual"] = rl.max_abs;
                summary["max_gaussian_line_residual"] = rg.max_abs;
            }
            out.curve_lines.push_back(std::move(record));
            out.summaries.push_back(std::move(summary));
        }
    }
    return out;
}

}  // namespace

int cmd_run(const std::string& config_path, const std::string& out_dir) {
    return guarded(config_path, [&]() {
        const LoadedConfig cfg = load_config(config_path);
        const FrontalSurface& s = cfg.surface;
        const std::string dir = out_dir.empty() ? cfg.out_dir : out_dir;
        std::filesystem::create_directories(dir);
        auto path = [&dir](const char* name) {
            return (std::filesystem::path(dir) / name).string();
        };

        Json report;
        report["version"] = kVersion;
        report["config"] = cfg.echo;
        report["surface"] = {{"kind", generator_kind_name(s.kind)},
                             {"provenance", s.provenance},
                             {"domain",
                              {{"u", {s.domain.u0, s.domain.u1}},
                               {"v", {s.domain.v0, s.domain.v1}}}}};
        Json outputs;

        if (cfg.requests.mesh) {
            const ObjCounts counts = write_obj(s, cfg.grid_u, cfg.grid_v, path("surface.obj"));
            outputs["mesh"] = {{"file", "surface.obj"},
                               {"vertices", counts.vertices},
                               {"faces", counts.faces}};
        }

        if (cfg.requests.fields) {
            std::ofstream csv(path("fields.csv"));
            csv << "u,v,lambda,K_rel,H_rel,k1_rel,k2_rel,K,H\n";
            int rows = 0;
            for (int i = 0; i < cfg.grid_u; ++i) {
                const double u = s.domain.u0 + (s.domain.u1 - s.domain.u0) * i / (cfg.grid_u - 1);
                for (int k = 0; k < cfg.grid_v; ++k) {
                    const double v =
                        s.domain.v0 + (s.domain.v1 - s.domain.v0) * k / (cfg.grid_v - 1);
                    const InvariantFrame f = invariant_frame(s, u, v);
                    csv << fmt17(u) << ',' << fmt17(v) << ',' << fmt17(f.lambda) << ','
                        << fmt17(f.K_rel) << ',' << fmt17(f.H_rel) << ',' << fmt17(f.k1) << ','
                        << fmt17(f.k2) << ',';
                    const auto classical = classical_curvatures(f);
                    if (!f.is_singular() && classical)
                        csv << fmt17(classical->K) << ',' << fmt17(classical->H) << '\n';
                    else
                        csv << ",\n";
                    ++rows;
                }
            }
            outputs["fields"] = {{"file", "fields.csv"}, {"rows", rows}};
        }

        if (cfg.requests.singular) {
            const auto polylines = singular_set(s, cfg.grid_u, cfg.grid_v);
            std::ofstream csv(path("singular.csv"));
            csv << "polyline,u,v\n";
            int points = 0;
            for (std::size_t id = 0; id < polylines.size(); ++id)
                for (const Vec2& p : polylines[id]) {
                    csv << id << ',' << fmt17(p.x()) << ',' << fmt17(p.y()) << '\n';
                    ++points;
                }
            outputs["singular_set"] = {{"file", "singular.csv"},
                                       {"polylines", polylines.size()},
                                       {"points", points}};
        }

        if (!cfg.requests.classify_points.empty())
            outputs["classify"] = classify_block(s, cfg.requests.classify_points);

        if (cfg.requests.extendability_mode)
            outputs["extendability"] =
                extendability_block(s, *cfg.requests.extendability_mode,
                                    std::min(cfg.grid_u, cfg.grid_v));

        if (!cfg.requests.smoothable.empty()) {
            Json arr = Json::array();
            for (const SmoothableRequest& req : cfg.requests.smoothable) {
                const SmoothabilityReport r = parallelly_smoothable(s, req.point, req.epsilon);
                Json row;
                row["point"] = {req.point.x(), req.point.y()};
                row["epsilon"] = req.epsilon;
                row["smoothable"] = r.smoothable;
                row["side"] = r.side;
                arr.push_back(std::move(row));
            }
            outputs["smoothable"] = std::move(arr);
        }

        if (!cfg.requests.traces.empty()) {
            TraceArtifacts art = run_traces(s, cfg.requests.traces);
            std::ofstream jsonl(path("curves.jsonl"));
            for (const Json& line : art.curve_lines) jsonl << line.dump() << '\n';
            outputs["traces"] = std::move(art.summaries);
            outputs["traces_file"] = "curves.jsonl";
        }

        report["outputs"] = std::move(outputs);
        std::ofstream out(path("report.json"));
        out << report.dump(2) << '\n';
        return 0;
    });
}

int cmd_verify(const std::string& config_path) {
    return guarded(config_path, [&]() {
        const LoadedConfig cfg = load_config(config_path);
        const std::vector<VerifyEntry> entries =
            verify_surface(cfg.surface, std::min({cfg.grid_u, cfg.grid_v, 33}));
        bool all_pass = true;
        for (const VerifyEntry& e : entries) {
            std::cout << (e.pass ? "PASS " : "FAIL ") << e.name << "  max_residual=" << fmt17(e.max_residual)
                      << "  tolerance=" << fmt17(e.tolerance) << '\n';
            all_pass = all_pass && e.pass;
        }
        return all_pass ? 0 : 1;
    });
}

int cmd_eval(const std::string& text, double u, double v, int order) {
    return guarded("eval", [&]() {
        const Expr e = Expr::parse(text);
        const Jet2 j = e.eval(Jet2::seed_u(u, order), Jet2::seed_v(v, order));
        std::cout << "expr   = " << e.str() << '\n';
        std::cout << "value  = " << fmt17(j.f) << '\n';
        std::cout << "d/du   = " << fmt17(j.fu) << '\n';
        std::cout << "d/dv   = " << fmt17(j.fv) << '\n';
        if (order == 2) {
            std::cout << "d2/duu = " << fmt17(j.fuu) << '\n';
            std::cout << "d2/duv = " << fmt17(j.fuv) << '\n';
            std::cout << "d2/dvv = " << fmt17(j.fvv) << '\n';
        }
        return 0;
    });
}

int main_entry(int argc, char** argv) {
    CLI::App app{"frontal-lab: frontal surfaces, relative curvature, and curve tracing"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::string expr_text;
    std::string at_text = "0,0";
    int order = 2;
    int exit_code = 0;

    CLI::App* run = app.add_subcommand("run", "build the configured surface and write outputs");
    run->add_option("config", config_path, "JSON config file")->required();
    run->add_option("--out", out_dir, "output directory (default: config out_dir or .)");
    run->callback([&]() { exit_code = cmd_run(config_path, out_dir); });

    CLI::App* verify = app.add_subcommand("verify", "run the invariant identity suites");
    verify->add_option("config", config_path, "JSON config file")->required();
    verify->callback([&]() { exit_code = cmd_verify(config_path); });

    CLI::App* eval = app.add_subcommand("eval", "evaluate an expression with derivatives");
    eval->add_option("expr", expr_text, "expression in u, v")->required();
    eval->add_option("--at", at_text, "evaluation point 'u,v'")->required();
    eval->add_option("--order", order, "jet order (1 or 2)")->check(CLI::Range(1, 2));
    eval->callback([&]() {
        double u = 0.0, v = 0.0;
        if (std::sscanf(at_text.c_str(), "%lf,%lf", &u, &v) != 2) {
            std::cerr << "error: --at expects 'u,v'\n";
            exit_code = 2;
            return;
        }
        exit_code = cmd_eval(expr_text, u, v, order);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return exit_code;
}

}  // namespace frontal::cli
