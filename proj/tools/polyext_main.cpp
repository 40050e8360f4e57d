// polyext: exact geometry of polyhedral normed spaces and their extreme
// contractions. Every command reads spaces/operators as JSON (or by built-in
// name), prints one JSON report to stdout, and reserves stderr for the
// optional human summary.

#include <polyext/analysis.hpp>
#include <polyext/errors.hpp>
#include <polyext/json_io.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace polyext;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitRefused = 3;
constexpr int kExitInternal = 4;

struct Options {
    std::string domain;
    std::string codomain;
    std::string space;
    std::string point;
    std::string op;
    std::size_t n = 3;
    std::size_t cap = kDefaultDimensionCap;
    double budget_seconds = 60.0;
    bool verbose = false;
    std::string out;
};

std::size_t initial_cap() {
    if (const char* env = std::getenv("POLYEXT_CAP")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return kDefaultDimensionCap;
}

Json parse_json_text(const std::string& text) {
    return Json::parse(text); // parse_error carries the byte position
}

bool looks_like_named_space(const std::string& s) {
    return s == "hexagon" || s == "octagon" || s.rfind("linf", 0) == 0 ||
           s.rfind("l1", 0) == 0;
}

std::size_t parse_builtin_dim(const std::string& digits, const std::string& name) {
    char* end = nullptr;
    const long v = std::strtol(digits.c_str(), &end, 10);
    if (!end || *end != '\0' || v < 1) {
        throw ValidationError("unknown built-in space '" + name + "'");
    }
    return static_cast<std::size_t>(v);
}

// A space argument is a built-in name, inline JSON, or a file path.
PolyhedralSpace resolve_space(const std::string& arg, std::size_t cap) {
    if (arg.empty()) throw ValidationError("missing space argument");
    if (looks_like_named_space(arg)) {
        if (arg == "hexagon") return hexagon_space();
        if (arg == "octagon") return octagon_space();
        if (arg.rfind("linf", 0) == 0) return linf_space(parse_builtin_dim(arg.substr(4), arg));
        return l1_space(parse_builtin_dim(arg.substr(2), arg));
    }
    if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) {
        return space_from_json(parse_json_text(arg), cap);
    }
    std::ifstream in(arg);
    if (!in) throw ValidationError("cannot open space file '" + arg + "'");
    Json j;
    in >> j;
    return space_from_json(j, cap);
}

Operator resolve_operator(const std::string& arg, std::size_t cap) {
    if (arg.empty()) throw ValidationError("missing operator argument");
    if (!arg.empty() && arg[0] == '{') {
        return operator_from_json(parse_json_text(arg), cap);
    }
    std::ifstream in(arg);
    if (!in) throw ValidationError("cannot open operator file '" + arg + "'");
    Json j;
    in >> j;
    return operator_from_json(j, cap);
}

QVector resolve_point(const std::string& arg) {
    if (arg.empty()) throw ValidationError("missing point argument");
    return vector_from_json(parse_json_text(arg));
}

void emit(const Options& opt, Json report) {
    if (!opt.out.empty()) {
        std::ofstream out(opt.out);
        if (!out) throw ValidationError("cannot write to '" + opt.out + "'");
        out << report.dump(2) << "\n";
    } else {
        std::cout << report.dump(2) << "\n";
    }
}

void summary(const Options& opt, const std::string& line) {
    if (opt.verbose) std::cerr << line << "\n";
}

Budget budget_of(const Options& opt) {
    if (opt.budget_seconds <= 0) return Budget{};
    return Budget{opt.budget_seconds};
}

int run_space_validate(const Options& opt) {
    const PolyhedralSpace s = resolve_space(opt.space, opt.cap);
    Json report{{"inputs_echo", Json{{"space", space_json(s)}}},
                {"space", space_json(s)},
                {"facets", hrep_json(s.facets)},
                {"vertex_count", s.ball.vertices.size()}};
    summary(opt, "valid space of dimension " + std::to_string(s.dim) + " with " +
                     std::to_string(s.ball.vertices.size()) + " vertices");
    emit(opt, report);
    return kExitOk;
}

int run_space_dual(const Options& opt) {
    const PolyhedralSpace s = resolve_space(opt.space, opt.cap);
    const PolyhedralSpace d = dual_space(s);
    Json report{{"inputs_echo", Json{{"space", space_json(s)}}}, {"dual", space_json(d)}};
    summary(opt, "dual ball has " + std::to_string(d.ball.vertices.size()) + " vertices");
    emit(opt, report);
    return kExitOk;
}

int run_point_smoothness(const Options& opt) {
    const PolyhedralSpace s = resolve_space(opt.space, opt.cap);
    const QVector x = resolve_point(opt.point);
    const std::size_t order = smoothness_order(s, x);
    const SupportFace face = ext_J(s, x);
    Json functionals = Json::array();
    for (const auto& f : face.functionals) functionals.push_back(vector_json(f));
    Json report{{"inputs_echo", Json{{"space", space_json(s)}, {"point", vector_json(x)}}},
                {"order", order},
                {"functionals", std::move(functionals)},
                {"extreme_point", is_extreme_point(s, x)}};
    summary(opt, "point is " + std::to_string(order) + "-smooth");
    emit(opt, report);
    return kExitOk;
}

int run_op_norm(const Options& opt) {
    const Operator t = resolve_operator(opt.op, opt.cap);
    const Rational n = op_norm(t);
    Json report{{"inputs_echo", Json{{"op", operator_json(t)}}}, {"norm", to_string(n)}};
    summary(opt, "operator norm " + to_string(n));
    emit(opt, report);
    return kExitOk;
}

int run_op_extreme(const Options& opt) {
    const Operator t = resolve_operator(opt.op, opt.cap);
    const Rational n = op_norm(t);
    const bool extreme = is_extreme_contraction(t);
    Json report{{"inputs_echo", Json{{"op", operator_json(t)}}},
                {"norm", to_string(n)},
                {"extreme", extreme}};
    report["support"] = (n == 1) ? support_json(support(t)) : Json(nullptr);
    summary(opt, extreme ? "extreme contraction" : "not an extreme contraction");
    emit(opt, report);
    return kExitOk;
}

int run_op_classify(const Options& opt) {
    const Operator t = resolve_operator(opt.op, opt.cap);
    const Case2D tag = classify_2d(t);
    Json report{{"inputs_echo", Json{{"op", operator_json(t)}}},
                {"case", to_string(tag)},
                {"norm", to_string(op_norm(t))}};
    if (tag != Case2D::NotExtreme) report["support"] = support_json(support(t));
    summary(opt, "case " + to_string(tag));
    emit(opt, report);
    return kExitOk;
}

int run_op_image(const Options& opt) {
    const Operator t = resolve_operator(opt.op, opt.cap);
    const VRep image = image_extreme_points(t);
    Json report{{"inputs_echo", Json{{"op", operator_json(t)}}},
                {"image_extreme_points", vrep_json(image)},
                {"count", image.vertices.size()},
                {"rank_two_all_attaining", rank_two_all_attaining(t)}};
    summary(opt, "image has " + std::to_string(image.vertices.size()) + " extreme points");
    emit(opt, report);
    return kExitOk;
}

int run_enumerate(const Options& opt) {
    const PolyhedralSpace x = resolve_space(opt.domain, opt.cap);
    const PolyhedralSpace y = resolve_space(opt.codomain, opt.cap);
    const ContractionCensus census =
        enumerate_extreme_contractions(x, y, opt.cap, budget_of(opt));
    Json report = census_json(census);
    report["inputs_echo"] =
        Json{{"domain", space_json(x)}, {"codomain", space_json(y)}};
    summary(opt, std::to_string(census.count) + " extreme contractions");
    emit(opt, report);
    return kExitOk;
}

int run_weaklp(const Options& opt) {
    const PolyhedralSpace x = resolve_space(opt.domain, opt.cap);
    const PolyhedralSpace y = resolve_space(opt.codomain, opt.cap);
    const WeakLPVerdict verdict = check_weak_lp(x, y, opt.cap, budget_of(opt));
    Json report = weak_lp_json(verdict);
    report["inputs_echo"] =
        Json{{"domain", space_json(x)}, {"codomain", space_json(y)}};
    summary(opt, verdict.status == WeakLPStatus::Holds    ? "weak L-P holds"
                 : verdict.status == WeakLPStatus::Fails ? "weak L-P fails"
                                                         : "inconclusive (budget)");
    emit(opt, report);
    return kExitOk;
}

int run_lp(const Options& opt) {
    const PolyhedralSpace x = resolve_space(opt.domain, opt.cap);
    const PolyhedralSpace y = resolve_space(opt.codomain, opt.cap);
    const LPVerdict verdict = check_lp(x, y, opt.cap, budget_of(opt));
    Json report = lp_json(verdict);
    report["inputs_echo"] =
        Json{{"domain", space_json(x)}, {"codomain", space_json(y)}};
    summary(opt, verdict.holds ? "L-P holds" : "L-P fails");
    emit(opt, report);
    return kExitOk;
}

int run_census_hexagon(const Options& opt) {
    const ContractionCensus census = hexagon_census();
    std::size_t iso = 0;
    for (const auto& t : census.contractions) {
        if (is_isometry(t)) ++iso;
    }
    Json report = census_json(census);
    report["inputs_echo"] = Json{{"domain", "hexagon"}, {"codomain", "hexagon"}};
    report["isometries"] = iso;
    report["non_isometries"] = census.count - iso;
    summary(opt, std::to_string(census.count) + " extreme contractions, " +
                     std::to_string(iso) + " isometries");
    emit(opt, report);
    return kExitOk;
}

int run_construct_26(const Options& opt) {
    const PolyhedralSpace x = resolve_space(opt.space, opt.cap);
    const Operator witness = weak_lp_witness_linf2(x, opt.cap);
    Json report{{"inputs_echo", Json{{"space", space_json(x)}}},
                {"operator", operator_json(witness)},
                {"verified",
                 Json{{"extreme", true}, {"maps_no_vertex_to_vertex", true}}}};
    summary(opt, "witness operator constructed");
    emit(opt, report);
    return kExitOk;
}

int run_construct_28(const Options& opt) {
    const PolyhedralSpace x = resolve_space(opt.space, opt.cap);
    const ConstructedCodomain built = weak_lp_failing_codomain(x, opt.n, opt.cap);
    const WeakLPVerdict verdict = check_weak_lp(x, built.space, opt.cap, budget_of(opt));
    if (verdict.status != WeakLPStatus::Fails) {
        throw InternalInconsistencyError(
            "constructed codomain does not defeat the weak intersection property");
    }
    Json report{{"inputs_echo", Json{{"space", space_json(x)}, {"n", opt.n}}},
                {"space", space_json(built.space)},
                {"certificate", operator_json(built.certificate)},
                {"vertex_count", built.space.ball.vertices.size()},
                {"weaklp", weak_lp_json(verdict)}};
    summary(opt, "codomain with " + std::to_string(built.space.ball.vertices.size()) +
                     " vertices constructed");
    emit(opt, report);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact geometry of polyhedral normed spaces and extreme contractions"};
    app.require_subcommand(1);

    Options opt;
    opt.cap = initial_cap();

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--cap", opt.cap, "dimension cap for conversions");
        cmd->add_option("--budget-seconds", opt.budget_seconds,
                        "time budget for enumerations (0 = unlimited)");
        cmd->add_flag("--verbose", opt.verbose, "human summary on stderr");
        cmd->add_option("--out", opt.out, "write the JSON report to a file");
    };
    auto add_space = [&](CLI::App* cmd) {
        cmd->add_option("--space", opt.space, "space: name, JSON, or file")->required();
    };
    auto add_pair = [&](CLI::App* cmd) {
        cmd->add_option("--domain", opt.domain, "domain space")->required();
        cmd->add_option("--codomain", opt.codomain, "codomain space")->required();
    };
    auto add_op = [&](CLI::App* cmd) {
        cmd->add_option("--op", opt.op, "operator: JSON or file")->required();
    };

    int (*handler)(const Options&) = nullptr;
    auto bind = [&](CLI::App* cmd, int (*fn)(const Options&)) {
        cmd->callback([&handler, fn]() { handler = fn; });
        add_common(cmd);
        return cmd;
    };

    add_space(bind(app.add_subcommand("space-validate", "canonicalize and echo a space"),
                   run_space_validate));
    add_space(bind(app.add_subcommand("space-dual", "polar dual of a space"), run_space_dual));
    {
        CLI::App* cmd = bind(app.add_subcommand("point-smoothness",
                                                "order of smoothness of a unit vector"),
                             run_point_smoothness);
        add_space(cmd);
        cmd->add_option("--point", opt.point, "point as a JSON array")->required();
    }
    add_op(bind(app.add_subcommand("op-norm", "exact operator norm"), run_op_norm));
    add_op(bind(app.add_subcommand("op-extreme", "extreme contraction test"), run_op_extreme));
    add_op(bind(app.add_subcommand("op-classify", "2D extreme contraction case"),
                run_op_classify));
    add_op(bind(app.add_subcommand("op-image", "extreme points of the ball image"),
                run_op_image));
    add_pair(bind(app.add_subcommand("enumerate", "all extreme contractions of a pair"),
                  run_enumerate));
    add_pair(bind(app.add_subcommand("weaklp", "weak L-P property of a pair"), run_weaklp));
    add_pair(bind(app.add_subcommand("lp", "L-P property of a pair"), run_lp));
    bind(app.add_subcommand("census-hexagon", "hexagon census with structure checks"),
         run_census_hexagon);
    add_space(bind(app.add_subcommand("construct-26",
                                      "extreme contraction to the sup-norm plane "
                                      "that avoids all vertices"),
                   run_construct_26));
    {
        CLI::App* cmd = bind(app.add_subcommand("construct-28",
                                                "codomain with 2n vertices defeating "
                                                "the weak L-P property"),
                             run_construct_28);
        add_space(cmd);
        cmd->add_option("--n", opt.n, "half the codomain vertex count (>= 3)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        return handler(opt);
    } catch (const Json::parse_error& e) {
        std::cout << Json{{"error", e.what()}, {"code", kExitValidation}}.dump(2) << "\n";
        return kExitValidation;
    } catch (const ValidationError& e) {
        std::cout << Json{{"error", e.what()}, {"code", kExitValidation}}.dump(2) << "\n";
        return kExitValidation;
    } catch (const CapExceededError& e) {
        std::cout << Json{{"error", e.what()}, {"code", kExitRefused}}.dump(2) << "\n";
        return kExitRefused;
    } catch (const BudgetExceededError& e) {
        std::cout << Json{{"error", e.what()}, {"code", kExitRefused}}.dump(2) << "\n";
        return kExitRefused;
    } catch (const InternalInconsistencyError& e) {
        std::cout << Json{{"error", e.what()}, {"code", kExitInternal}}.dump(2) << "\n";
        return kExitInternal;
    }
}
