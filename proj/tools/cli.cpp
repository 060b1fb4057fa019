#include "cli.hpp"

#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rcpoly/dedekind.hpp"
#include "rcpoly/geometry.hpp"
#include "rcpoly/sweep.hpp"

namespace rcpoly::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;

std::vector<RationalPoint> parse_vertices(const std::string& text) {
    std::vector<RationalPoint> points;
    std::stringstream ss(text);
    std::string pair;
    while (std::getline(ss, pair, ';')) {
        const auto comma = pair.find(',');
        if (comma == std::string::npos)
            throw ParseError("vertex '" + pair + "' is not of the form x,y");
        points.push_back({Rational::parse(pair.substr(0, comma)),
                          Rational::parse(pair.substr(comma + 1))});
    }
    if (points.empty())
        throw ParseError("empty vertex list");
    return points;
}

ConvexRationalPolygon parse_polygon(const std::string& text) {
    std::vector<RationalPoint> points = parse_vertices(text);
    try {
        return ConvexRationalPolygon(points);
    } catch (const InvalidPolygonError&) {
        // Accept clockwise input by reversing it.
        std::reverse(points.begin(), points.end());
        return ConvexRationalPolygon(std::move(points));
    }
}

RightTriangleParams parse_triangle_params(const std::string& text) {
    std::stringstream ss(text);
    std::string item;
    std::vector<Int> vals;
    while (std::getline(ss, item, ','))
        vals.emplace_back(item, 10);
    if (vals.size() != 8)
        throw ParseError("--params expects 8 comma-separated integers e,f,g,h,a,b,c,d");
    // input order: e, f, g, h, a, b, c, d
    return RightTriangleParams(vals[4], vals[5], vals[6], vals[7], vals[0], vals[1], vals[2],
                               vals[3]);
}

nlohmann::json report_to_json(const VerificationReport& rep) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [key, value] : rep.params) params[key] = value;
    nlohmann::json j{{"identity", std::string(to_string(rep.id))},
                     {"params", std::move(params)},
                     {"holds", rep.holds},
                     {"lhs", rep.lhs},
                     {"rhs", rep.rhs},
                     {"notes", rep.notes}};
    j["diff"] = rep.diff ? nlohmann::json(*rep.diff) : nlohmann::json(nullptr);
    return j;
}

std::string format_params(const VerificationReport& rep) {
    std::string s;
    for (const auto& [key, value] : rep.params) {
        if (!s.empty()) s += " ";
        s += key + "=" + value;
    }
    return s;
}

struct VerifyArgs {
    std::string identity;
    long max = -1;
    long cases = -1;
    std::uint64_t seed = 0;
    int jobs = 1;
};

int run_verify(const VerifyArgs& args, const std::string& format, std::ostream& out) {
    std::vector<IdentityId> ids;
    if (args.identity == "all") {
        for (int i = 0; i <= static_cast<int>(IdentityId::oracle); ++i)
            ids.push_back(static_cast<IdentityId>(i));
    } else {
        const auto id = parse_identity(args.identity);
        if (!id)
            throw ParseError("unknown identity '" + args.identity + "'");
        ids.push_back(*id);
    }

    SweepOptions options;
    options.max_bound = args.max;
    options.cases = args.cases;
    options.seed = args.seed;
    options.jobs = args.jobs;

    bool all_hold = true;
    nlohmann::json json_reports = nlohmann::json::array();
    for (const IdentityId id : ids) {
        const std::vector<VerificationReport> reports = sweep(id, options);
        std::size_t held = 0;
        for (const VerificationReport& rep : reports) {
            if (rep.holds) {
                ++held;
            } else if (format == "text") {
                out << "FAIL " << to_string(rep.id) << " " << format_params(rep)
                    << " lhs=" << rep.lhs << " rhs=" << rep.rhs;
                if (rep.diff) out << " diff=" << *rep.diff;
                out << "\n";
            }
            if (format == "json") json_reports.push_back(report_to_json(rep));
        }
        all_hold = all_hold && held == reports.size();
        if (format == "text")
            out << to_string(id) << ": " << held << "/" << reports.size() << " hold\n";
    }
    if (format == "json") out << json_reports.dump() << "\n";
    return all_hold ? kExitOk : kExitCounterexample;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Dedekind sums, Rademacher-Carlitz polynomials and integer-point "
                 "transforms of rational polygons"};
    app.name("rcpoly");

    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    struct {
        std::string a, b, s = "0", t = "0", x = "0", y = "0";
    } rc_args, carlitz_args, dedekind_args, rademacher_args, rademacher_xy_args;

    CLI::App* rc_cmd = app.add_subcommand("rc", "Rademacher-Carlitz polynomial of (a x + t)/b");
    rc_cmd->add_option("--a", rc_args.a, "slope numerator")->required();
    rc_cmd->add_option("--b", rc_args.b, "positive denominator")->required();
    rc_cmd->add_option("--s", rc_args.s, "summation offset (rational)");
    rc_cmd->add_option("--t", rc_args.t, "shift (rational)");

    CLI::App* carlitz_cmd = app.add_subcommand("carlitz", "Dedekind-Carlitz polynomial c(u,v,a,b)");
    carlitz_cmd->add_option("--a", carlitz_args.a)->required();
    carlitz_cmd->add_option("--b", carlitz_args.b)->required();

    CLI::App* dedekind_cmd = app.add_subcommand("dedekind", "Dedekind sum s(a,b)");
    dedekind_cmd->add_option("--a", dedekind_args.a)->required();
    dedekind_cmd->add_option("--b", dedekind_args.b)->required();

    CLI::App* rademacher_cmd =
        app.add_subcommand("rademacher", "Dedekind-Rademacher sum r_t(a,b)");
    rademacher_cmd->add_option("--a", rademacher_args.a)->required();
    rademacher_cmd->add_option("--b", rademacher_args.b)->required();
    rademacher_cmd->add_option("--t", rademacher_args.t, "shift (rational)");

    CLI::App* rademacher_xy_cmd =
        app.add_subcommand("rademacher-xy", "Rademacher two-parameter sum d(a,b;x,y)");
    rademacher_xy_cmd->add_option("--a", rademacher_xy_args.a)->required();
    rademacher_xy_cmd->add_option("--b", rademacher_xy_args.b)->required();
    rademacher_xy_cmd->add_option("--x", rademacher_xy_args.x, "rational");
    rademacher_xy_cmd->add_option("--y", rademacher_xy_args.y, "rational");

    std::string ipt_vertices, ipt_params;
    bool ipt_expand = false;
    CLI::App* ipt_cmd = app.add_subcommand("ipt", "Integer-point transforms");
    ipt_cmd->require_subcommand(1);
    CLI::App* ipt_polygon = ipt_cmd->add_subcommand("polygon", "Transform of a convex polygon");
    ipt_polygon->add_option("--vertices", ipt_vertices, "semicolon-separated x,y pairs")
        ->required();
    ipt_polygon->add_flag("--expand", ipt_expand, "include expanded polynomial and count");
    CLI::App* ipt_triangle =
        ipt_cmd->add_subcommand("triangle-right", "Closed form for an axis-aligned right triangle");
    ipt_triangle->add_option("--params", ipt_params, "e,f,g,h,a,b,c,d (positive integers)")
        ->required();
    ipt_triangle->add_flag("--expand", ipt_expand, "include expanded polynomial and count");

    std::string count_vertices;
    CLI::App* count_cmd = app.add_subcommand("count", "Lattice-point count of a convex polygon");
    count_cmd->add_option("--vertices", count_vertices)->required();

    VerifyArgs verify_args;
    CLI::App* verify_cmd = app.add_subcommand("verify", "Verify an identity over its grid");
    verify_cmd->add_option("identity", verify_args.identity,
                           "carlitz|thm1|thm2|thm3|dedekind|rademacher|lemma4a|lemma4b|conic|"
                           "oracle|all")
        ->required();
    verify_cmd->add_option("--max", verify_args.max, "grid bound override");
    verify_cmd->add_option("--cases", verify_args.cases, "random case count override");
    verify_cmd->add_option("--seed", verify_args.seed, "random seed");
    verify_cmd->add_option("--jobs", verify_args.jobs, "worker threads")
        ->check(CLI::PositiveNumber);

    app.require_subcommand(0, 1);
    // Let the global --format appear after a subcommand as well.
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
        sub->fallthrough();
        for (CLI::App* nested : sub->get_subcommands([](const CLI::App*) { return true; }))
            nested->fallthrough();
    }

    std::vector<const char*> argv;
    argv.push_back("rcpoly");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (rc_cmd->parsed()) {
            const LinearMapQ f(Int(rc_args.a, 10), Int(rc_args.b, 10),
                               Rational::parse(rc_args.t));
            const LaurentPoly2 p = rc(Rational::parse(rc_args.s), f);
            out << (format == "json" ? p.to_json() : p.to_text()) << "\n";
        } else if (carlitz_cmd->parsed()) {
            const LaurentPoly2 p =
                dedekind_carlitz(Int(carlitz_args.a, 10), Int(carlitz_args.b, 10));
            out << (format == "json" ? p.to_json() : p.to_text()) << "\n";
        } else if (dedekind_cmd->parsed()) {
            const Rational v = dedekind_sum(Int(dedekind_args.a, 10), Int(dedekind_args.b, 10));
            out << (format == "json" ? nlohmann::json{{"value", v.str()}}.dump() : v.str())
                << "\n";
        } else if (rademacher_cmd->parsed()) {
            const Rational v =
                dedekind_rademacher(Rational::parse(rademacher_args.t),
                                    Int(rademacher_args.a, 10), Int(rademacher_args.b, 10));
            out << (format == "json" ? nlohmann::json{{"value", v.str()}}.dump() : v.str())
                << "\n";
        } else if (rademacher_xy_cmd->parsed()) {
            const Rational v = rademacher_xy(
                Int(rademacher_xy_args.a, 10), Int(rademacher_xy_args.b, 10),
                Rational::parse(rademacher_xy_args.x), Rational::parse(rademacher_xy_args.y));
            out << (format == "json" ? nlohmann::json{{"value", v.str()}}.dump() : v.str())
                << "\n";
        } else if (ipt_cmd->parsed()) {
            const RationalGF gf = ipt_polygon->parsed()
                                      ? polygon_ipt(parse_polygon(ipt_vertices))
                                      : triangle_ipt_thm2(parse_triangle_params(ipt_params));
            if (format == "json") {
                nlohmann::json j{{"gf", nlohmann::json::parse(gf.to_json())}};
                if (ipt_expand) {
                    const LaurentPoly2 p = gf_as_polynomial(gf);
                    j["polynomial"] = nlohmann::json::parse(p.to_json());
                    j["count"] = p.eval(Rational(1), Rational(1)).str();
                }
                out << j.dump() << "\n";
            } else {
                out << gf.to_text() << "\n";
                if (ipt_expand) {
                    const LaurentPoly2 p = gf_as_polynomial(gf);
                    out << "polynomial: " << p.to_text("x", "y") << "\n";
                    out << "count: " << p.eval(Rational(1), Rational(1)).str() << "\n";
                }
            }
        } else if (count_cmd->parsed()) {
            const LaurentPoly2 p = gf_as_polynomial(polygon_ipt(parse_polygon(count_vertices)));
            const Rational n = p.eval(Rational(1), Rational(1));
            out << (format == "json" ? nlohmann::json{{"count", n.str()}}.dump() : n.str())
                << "\n";
        } else if (verify_cmd->parsed()) {
            return run_verify(verify_args, format, out);
        } else {
            out << app.help();
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace rcpoly::cli
