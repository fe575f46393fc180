#include <fstream>

#include "frontal/cli_app.hpp"
#include "frontal/generators.hpp"

namespace frontal::cli {

namespace {

std::string require_string(const Json& obj, const char* key, const char* where) {
    if (!obj.contains(key) || !obj.at(key).is_string())
        throw ConfigError(std::string(where) + " needs string field '" + key + "'");
    return obj.at(key).get<std::string>();
}

double require_number(const Json& obj, const char* key, const char* where) {
    if (!obj.contains(key) || !obj.at(key).is_number())
        throw ConfigError(std::string(where) + " needs numeric field '" + key + "'");
    return obj.at(key).get<double>();
}

Expr parse_param(const Json& params, const char* key, const std::string& kind) {
    if (!params.contains(key))
        throw ConfigError("generator '" + kind + "' needs parameter '" + key + "'");
    if (!params.at(key).is_string())
        throw ConfigError("generator parameter '" + std::string(key) + "' must be an expression string");
    return Expr::parse(params.at(key).get<std::string>());
}

ScalarField field2(const Json& params, const char* key, const std::string& kind) {
    return field_from_expr(parse_param(params, key, kind));
}

ScalarField1 field1(const Json& params, const char* key, const std::string& kind) {
    return field1_from_expr(parse_param(params, key, kind));
}

Rect parse_domain(const Json& g) {
    Rect d;
    if (!g.contains("domain")) return d;
    const Json& dom = g.at("domain");
    auto side = [&](const char* key, double& lo, double& hi) {
        if (!dom.contains(key) || !dom.at(key).is_array() || dom.at(key).size() != 2)
            throw ConfigError(std::string("domain '") + key + "' must be [lo, hi]");
        lo = dom.at(key).at(0).get<double>();
        hi = dom.at(key).at(1).get<double>();
        if (!(lo < hi)) throw ConfigError(std::string("domain '") + key + "' must have lo < hi");
    };
    side("u", d.u0, d.u1);
    side("v", d.v0, d.v1);
    return d;
}

Vec2 parse_point(const Json& p, const char* where) {
    if (!p.is_array() || p.size() != 2 || !p.at(0).is_number() || !p.at(1).is_number())
        throw ConfigError(std::string(where) + " must be a [u, v] pair");
    return Vec2(p.at(0).get<double>(), p.at(1).get<double>());
}

}  // namespace

FrontalSurface build_generator(const Json& g) {
    if (!g.is_object()) throw ConfigError("'generator' must be an object");
    const std::string kind = require_string(g, "kind", "generator");
    const Rect domain = parse_domain(g);
    const Json params = g.contains("params") ? g.at("params") : Json::object();
    const Json constants = g.contains("constants") ? g.at("constants") : Json::object();

    FrontalSurface s;
    if (kind == "extendable-normal") {
        s = gen_extendable_normal(field2(params, "b", kind), field2(params, "h", kind),
                                  field1(params, "l", kind), field1(params, "r", kind), domain);
    } else if (kind == "rank1-front") {
        s = gen_rank1_front(field2(params, "lambda", kind), field1(params, "f1", kind),
                            field1(params, "f2", kind), domain);
    } else if (kind == "rank1-from-h") {
        s = gen_rank1_from_h(field2(params, "h", kind), domain);
    } else if (kind == "vanishing-K") {
        s = gen_vanishing_k(field1(params, "r1", kind), field1(params, "r2", kind),
                            require_number(constants, "c1", "vanishing-K constants"),
                            require_number(constants, "c2", "vanishing-K constants"), domain);
    } else if (kind == "extendable-K-wave") {
        s = gen_extendable_k_wave(require_number(constants, "c", "wave constants"),
                                  field1(params, "h1", kind), field1(params, "h2", kind), domain);
    } else if (kind == "extendable-K-laplace") {
        s = gen_extendable_k_laplace(require_number(constants, "c", "laplace constants"),
                                     field2(params, "F", kind), domain);
    } else if (kind == "rank0-front") {
        s = gen_rank0_front(field2(params, "h", kind), domain);
    } else if (kind == "false-singularity") {
        if (!g.contains("immersion")) throw ConfigError("false-singularity needs 'immersion'");
        const Json& imm = g.at("immersion");
        const std::string type = require_string(imm, "type", "immersion");
        ImmersionKind ik;
        ScalarField phi;
        if (type == "graph") {
            ik = ImmersionKind::Graph;
            if (!imm.contains("phi")) throw ConfigError("graph immersion needs 'phi'");
            phi = field_from_expr(Expr::parse(imm.at("phi").get<std::string>()));
        } else if (type == "sphere") {
            ik = ImmersionKind::Sphere;
        } else {
            throw ConfigError("immersion type must be 'graph' or 'sphere'");
        }
        if (!g.contains("map") || !g.at("map").is_array() || g.at("map").size() != 2)
            throw ConfigError("false-singularity needs 'map': [expr, expr]");
        const ScalarField m1 = field_from_expr(Expr::parse(g.at("map").at(0).get<std::string>()));
        const ScalarField m2 = field_from_expr(Expr::parse(g.at("map").at(1).get<std::string>()));
        s = gen_false_singularity(ik, phi, m1, m2, domain);
    } else if (kind == "rank1-normalized") {
        if (!g.contains("base")) throw ConfigError("rank1-normalized needs 'base' generator");
        s = rank1_to_nonvanishing(build_generator(g.at("base")));
    } else {
        throw ConfigError("unknown generator kind '" + kind + "'");
    }

    if (g.contains("params")) s.provenance += " params=" + g.at("params").dump();
    if (g.contains("constants")) s.provenance += " constants=" + g.at("constants").dump();
    if (g.contains("map")) s.provenance += " map=" + g.at("map").dump();

    if (g.contains("omega_override")) {
        const Json& ov = g.at("omega_override");
        if (!ov.is_array() || ov.size() != 6)
            throw ConfigError("'omega_override' must list 6 expression strings (row-major 3x2)");
        std::array<Expr, 6> entries;
        for (std::size_t i = 0; i < 6; ++i) entries[i] = Expr::parse(ov.at(i).get<std::string>());
        s = with_omega_override(s, entries);
    }
    return s;
}

LoadedConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in.is_open()) throw ConfigError("cannot open config file " + path);
    Json root;
    try {
        root = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what() + " (" + path + ")");
    }

    LoadedConfig cfg;
    cfg.echo = root;
    if (!root.contains("generator")) throw ConfigError("config needs a 'generator' object");
    cfg.surface = build_generator(root.at("generator"));

    if (root.contains("grid")) {
        const Json& grid = root.at("grid");
        if (!grid.is_array() || grid.size() != 2)
            throw ConfigError("'grid' must be [n, m]");
        cfg.grid_u = grid.at(0).get<int>();
        cfg.grid_v = grid.at(1).get<int>();
        if (cfg.grid_u < 2 || cfg.grid_v < 2) throw ConfigError("'grid' entries must be >= 2");
    }

    if (root.contains("out_dir")) {
        if (!root.at("out_dir").is_string()) throw ConfigError("'out_dir' must be a string");
        cfg.out_dir = root.at("out_dir").get<std::string>();
    }

    const Rect& dom = cfg.surface.domain;
    auto check_inside = [&dom](const Vec2& p, const std::string& what) {
        if (!dom.contains(p.x(), p.y()))
            throw ConfigError(what + " (" + std::to_string(p.x()) + ", " + std::to_string(p.y()) +
                              ") lies outside the domain");
    };

    if (root.contains("outputs")) {
        if (!root.at("outputs").is_array()) throw ConfigError("'outputs' must be an array");
        for (const Json& req : root.at("outputs")) {
            const std::string type = require_string(req, "type", "output request");
            if (type == "mesh") {
                cfg.requests.mesh = true;
            } else if (type == "fields") {
                cfg.requests.fields = true;
            } else if (type == "singular-set") {
                if (cfg.grid_u < 16 || cfg.grid_v < 16)
                    throw ConfigError("singular-set extraction needs grid >= 16x16");
                cfg.requests.singular = true;
            } else if (type == "classify") {
                if (req.contains("points"))
                    for (const Json& p : req.at("points")) {
                        const Vec2 q = parse_point(p, "classify point");
                        check_inside(q, "classify point");
                        cfg.requests.classify_points.push_back(q);
                    }
                else if (req.contains("point")) {
                    const Vec2 q = parse_point(req.at("point"), "classify point");
                    check_inside(q, "classify point");
                    cfg.requests.classify_points.push_back(q);
                } else {
                    throw ConfigError("classify request needs 'point' or 'points'");
                }
            } else if (type == "extendability") {
                std::string mode = "auto";
                if (req.contains("mode")) mode = req.at("mode").get<std::string>();
                if (mode != "auto" && mode != "analytic" && mode != "numeric")
                    throw ConfigError("extendability mode must be auto, analytic or numeric");
                cfg.requests.extendability_mode = mode;
            } else if (type == "trace") {
                TraceRequest t;
                const std::string field = require_string(req, "field", "trace request");
                if (field == "asymptotic-1")
                    t.field = FieldKind::Asymptotic1;
                else if (field == "asymptotic-2")
                    t.field = FieldKind::Asymptotic2;
                else if (field == "curvature-line-1")
                    t.field = FieldKind::CurvatureLine1;
                else if (field == "curvature-line-2")
                    t.field = FieldKind::CurvatureLine2;
                else
                    throw ConfigError("unknown trace field '" + field + "'");
                if (!req.contains("seeds") || !req.at("seeds").is_array() ||
                    req.at("seeds").empty())
                    throw ConfigError("trace request needs non-empty 'seeds'");
                for (const Json& p : req.at("seeds")) {
                    const Vec2 q = parse_point(p, "trace seed");
                    check_inside(q, "trace seed");
                    t.seeds.push_back(q);
                }
                if (req.contains("step")) t.step = req.at("step").get<double>();
                if (req.contains("steps")) t.steps = req.at("steps").get<int>();
                if (req.contains("chart_halfwidth"))
                    t.chart_halfwidth = req.at("chart_halfwidth").get<double>();
                if (!(t.step > 0.0) || t.steps < 1)
                    throw ConfigError("trace request needs step > 0 and steps >= 1");
                cfg.requests.traces.push_back(std::move(t));
            } else if (type == "smoothable") {
                SmoothableRequest sm;
                if (!req.contains("point")) throw ConfigError("smoothable request needs 'point'");
                sm.point = parse_point(req.at("point"), "smoothable point");
                check_inside(sm.point, "smoothable point");
                if (req.contains("epsilon")) sm.epsilon = req.at("epsilon").get<double>();
                if (!(sm.epsilon > 0.0)) throw ConfigError("smoothable epsilon must be > 0");
                cfg.requests.smoothable.push_back(sm);
            } else {
                throw ConfigError("unknown output type '" + type + "'");
            }
        }
    }
    return cfg;
}

}  // namespace frontal::cli
