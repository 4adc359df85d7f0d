//
//  cli.hpp
//  ladder
//
//  Command implementations behind tools/ladder_cli.cpp. Each run_* writes a
//  document to the configured destination and returns the process exit code.
//
//  Exit codes: 0 solved (any number of solutions), 2 invalid input,
//  3 output failure.
//

#ifndef ladder_cli_hpp
#define ladder_cli_hpp

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ladder/conic.hpp"
#include "ladder/solver.hpp"
#include "ladder/svg.hpp"
#include "ladder/triangle.hpp"
#include "ladder/verify.hpp"

namespace ladder::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitOutputFailure = 3;

enum class Command { solve, critical, inscribe };
enum class Format { text, json };

struct CliConfig {
    Command command = Command::solve;
    std::optional<double> c, d, cross, s;
    std::optional<double> u, v, w, t;
    std::optional<std::string> output_path;
    std::optional<std::string> svg_path;
    bool check = false;
    double tolerance = 1e-9;
    Format format = Format::text;
};

using Document = nlohmann::ordered_json;

/// Rounds to 12 significant digits so the serialized document is stable.
inline double round12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    const double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;
}

inline Document point_doc(Point p) { return {{"x", round12(p.x)}, {"y", round12(p.y)}}; }

inline Document solution_doc(const LadderSolution& s) {
    return {{"t", round12(s.t)},
            {"w", round12(s.w)},
            {"u", round12(s.u)},
            {"v", round12(s.v)},
            {"tangency", point_doc(s.tangency)},
            {"height", round12(s.height)},
            {"multiplicity", s.multiplicity}};
}

inline Document report_doc(const VerificationReport& r) {
    return {{"length_residual", round12(r.length_residual)},
            {"tangency_residual", round12(r.tangency_residual)},
            {"on_conic_residual", round12(r.on_conic_residual)},
            {"on_line_residual", round12(r.on_line_residual)},
            {"passed", r.passed}};
}

/// Parses a solution object written by solution_doc.
inline LadderSolution solution_from_doc(const Document& doc) {
    LadderSolution s;
    s.t = doc.at("t").get<double>();
    s.w = doc.at("w").get<double>();
    s.u = doc.at("u").get<double>();
    s.v = doc.at("v").get<double>();
    s.tangency = {doc.at("tangency").at("x").get<double>(), doc.at("tangency").at("y").get<double>()};
    s.height = doc.at("height").get<double>();
    s.multiplicity = doc.at("multiplicity").get<int>();
    return s;
}

namespace detail {

inline void render_text(const Document& doc, std::ostream& os, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (doc.is_object()) {
        for (const auto& [key, value] : doc.items()) {
            if (value.is_structured() && !value.empty()) {
                os << pad << key << ":\n";
                render_text(value, os, indent + 2);
            } else {
                os << pad << key << ": " << value.dump() << '\n';
            }
        }
    } else if (doc.is_array()) {
        std::size_t i = 0;
        for (const auto& value : doc) {
            os << pad << "[" << ++i << "]\n";
            render_text(value, os, indent + 2);
        }
    } else {
        os << pad << doc.dump() << '\n';
    }
}

inline std::string render(const Document& doc, Format format) {
    if (format == Format::json)
        return doc.dump(2) + "\n";
    std::ostringstream os;
    render_text(doc, os, 0);
    return os.str();
}

inline int publish(const Document& doc, const CliConfig& config, std::ostream& out,
                   std::ostream& err) {
    const std::string text = render(doc, config.format);
    if (!config.output_path) {
        out << text;
        return kExitOk;
    }
    std::ofstream file(*config.output_path, std::ios::binary);
    file << text;
    file.flush();
    if (!file) {
        err << "error: cannot write " << *config.output_path << '\n';
        return kExitOutputFailure;
    }
    return kExitOk;
}

inline double require(const std::optional<double>& value, const char* flag) {
    if (!value)
        throw std::invalid_argument(std::string("missing required flag ") + flag);
    if (!std::isfinite(*value))
        throw std::invalid_argument(std::string(flag) + " must be finite");
    return *value;
}

inline TangentEllipse ellipse_from(const CliConfig& config) {
    return TangentEllipse(require(config.c, "--c"), require(config.d, "--d"),
                          require(config.cross, "--cross"));
}

inline Document ellipse_input_doc(const TangentEllipse& e) {
    return {{"c", round12(e.c())}, {"d", round12(e.d())}, {"cross", round12(e.cross())}};
}

} // namespace detail

inline Document solve_document(const LadderProblem& problem, const std::vector<LadderSolution>& sols,
                               const CriticalInfo& crit, const ReducedForm& r, bool check,
                               double tolerance) {
    Document input = detail::ellipse_input_doc(problem.ellipse());
    input["s"] = round12(problem.s());

    Document doc;
    doc["command"] = "solve";
    doc["input"] = std::move(input);
    doc["j"] = round12(r.j);
    doc["t0"] = round12(crit.t0);
    doc["s0"] = round12(crit.s0);
    doc["s0_squared"] = round12(crit.s0 * crit.s0);
    doc["count"] = sols.size();
    if (check)
        doc["tolerance"] = round12(tolerance);
    Document list = Document::array();
    for (const LadderSolution& s : sols) {
        Document entry = solution_doc(s);
        if (check)
            entry["check"] = report_doc(verify_solution(problem.ellipse(), problem.s(), s, tolerance));
        list.push_back(std::move(entry));
    }
    doc["solutions"] = std::move(list);
    return doc;
}

inline int run_solve(const CliConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const LadderProblem problem(detail::ellipse_from(config), detail::require(config.s, "--s"));
        if (!(config.tolerance > 0.0))
            throw std::invalid_argument("--tolerance must be positive");
        const ReducedForm r = reduce(problem.ellipse());
        const CriticalInfo crit = critical_point(r);
        const std::vector<LadderSolution> sols = solve(problem, crit);

        if (config.svg_path) {
            try {
                emit_svg(problem.ellipse(), sols, *config.svg_path);
            } catch (const OutputError& ex) {
                err << "error: " << ex.what() << '\n';
                return kExitOutputFailure;
            }
        }
        return detail::publish(
            solve_document(problem, sols, crit, r, config.check, config.tolerance), config, out,
            err);
    } catch (const std::invalid_argument& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitInvalidInput;
    }
}

inline int run_critical(const CliConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const TangentEllipse e = detail::ellipse_from(config);
        const ReducedForm r = reduce(e);
        const CriticalInfo crit = critical_point(r);

        Document doc;
        doc["command"] = "critical";
        doc["input"] = detail::ellipse_input_doc(e);
        doc["j"] = round12(r.j);
        doc["t0"] = round12(crit.t0);
        doc["s0"] = round12(crit.s0);
        doc["s0_squared"] = round12(crit.s0 * crit.s0);
        if (e.cross() == 0.0 && e.d() == e.c()) {
            const double closed = circle_s0(e.c());
            doc["circle"] = {{"closed_form_s0", round12(closed)},
                             {"residual", round12(std::abs(crit.s0 - closed) / e.c())}};
        }
        return detail::publish(doc, config, out, err);
    } catch (const std::invalid_argument& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitInvalidInput;
    }
}

inline int run_inscribe(const CliConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const InscriptionParams p(
            TriangleLegs(detail::require(config.u, "--u"), detail::require(config.v, "--v")),
            detail::require(config.w, "--w"), detail::require(config.t, "--t"));
        const ConicCoeffs k = inscribed_conic(p);
        const Tangencies touch = tangency_points(p);

        Document doc;
        doc["command"] = "inscribe";
        doc["input"] = {{"u", round12(p.u())}, {"v", round12(p.v())}, {"w", round12(p.w())},
                        {"t", round12(p.t())}};
        doc["conic"] = {{"a", round12(k.a)},   {"b", round12(k.b)},   {"cxy", round12(k.cxy)},
                        {"dx", round12(k.dx)}, {"ey", round12(k.ey)}, {"f", round12(k.f)}};
        doc["nondegenerate_ellipse"] = is_nondegenerate_ellipse(k);
        doc["center"] = point_doc(center_from_params(p));
        doc["tangencies"] = {{"t1", point_doc(touch.t1)},
                             {"t2", point_doc(touch.t2)},
                             {"t3", point_doc(touch.t3)}};
        return detail::publish(doc, config, out, err);
    } catch (const std::invalid_argument& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitInvalidInput;
    }
}

inline int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
    switch (config.command) {
    case Command::solve:
        return run_solve(config, out, err);
    case Command::critical:
        return run_critical(config, out, err);
    case Command::inscribe:
        return run_inscribe(config, out, err);
    }
    return kExitInvalidInput;
}

} // namespace ladder::cli

#endif /* ladder_cli_hpp */
