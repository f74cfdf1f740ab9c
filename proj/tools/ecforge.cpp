// ecforge: build the curve families, reproduce the worked examples, reduce
// quartic models and compute regulator certificates.
//
// exit codes: 0 success, 1 internal failure, 2 bad input or a degeneracy
// guard, 3 an expectation mismatch in `repro`.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "ecforge/errors.hpp"
#include "ecforge/repro.hpp"
#include "ecforge/torsion.hpp"

using namespace ecforge;

namespace {

std::vector<Rational> parse_params(const std::string& csv) {
    std::vector<Rational> out;
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            out.push_back(parse_rational(cur));
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(parse_rational(cur));
    return out;
}

FamilyInstance forge(FamilyId family, const std::vector<Rational>& p, bool special_h,
                     const std::array<int, 3>& roles) {
    switch (family) {
        case FamilyId::A: {
            if (p.size() != 8) throw Error("family A takes a0,a1,a2,a3,b0,b1,b2,b3");
            Sec2Solution sol;
            sol.a0 = p[0];
            sol.a = {p[1], p[2], p[3]};
            sol.b0 = p[4];
            sol.b = {p[5], p[6], p[7]};
            return build_family_A(sol);
        }
        case FamilyId::B: {
            if (p.size() != 10) throw Error("family B takes a0,a1..a4,b0,b1..b4");
            Sec2Solution sol;
            sol.a0 = p[0];
            sol.a = {p[1], p[2], p[3], p[4]};
            sol.b0 = p[5];
            sol.b = {p[6], p[7], p[8], p[9]};
            return build_family_B(sol);
        }
        case FamilyId::C:
            if (p.size() != 6) throw Error("family C takes p1,p2,q1,q2,r1,r2");
            return build_family_C(te2_chains(p[0], p[1], p[2], p[3], p[4], p[5]));
        case FamilyId::D:
            if (p.size() != 1) throw Error("family D takes the single parameter p");
            return build_family_D(quads_from_triples(sumsprod_param(p[0])), roles);
        case FamilyId::E:
            if (p.size() == 8)
                return build_family_E(fam3_sol1(p[0], p[1], p[2], p[3], p[4], p[5], p[6], p[7]));
            if (p.size() == 7)
                return build_family_E(fam3_sol2(p[0], p[1], {p[2], p[3], p[4], p[5], p[6]}));
            throw Error("family E takes m,n,p,q,r,s,u,v (solution 1) or m,n,p1..p5 (solution 2)");
        case FamilyId::F: {
            if (special_h) {
                if (p.size() != 6) throw Error("family F with --special-h takes p,q,r,u,v,w");
                auto [h1, h2] = fam4_special_h(p[0], p[1], p[2], p[3], p[4], p[5]);
                return build_family_F(fam4_sol(p[0], p[1], p[2], p[3], p[4], p[5], h1, h2));
            }
            if (p.size() != 8) throw Error("family F takes p,q,r,u,v,w,h1,h2");
            return build_family_F(fam4_sol(p[0], p[1], p[2], p[3], p[4], p[5], p[6], p[7]));
        }
        case FamilyId::G:
            if (p.size() != 7) throw Error("family G takes p1,p2,q1,q2,u1,u2,v");
            return build_family_G(fam5_sol(p[0], p[1], p[2], p[3], p[4], p[5], p[6]));
    }
    throw Error("unreachable");
}

void emit(const Json& report, const std::string& format, const std::string& out_path) {
    std::string text = format == "json" ? report.dump(2) + "\n" : render_text(report);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream os(out_path);
        os << text;
    }
}

Json load_json(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw Error("cannot open " + path);
    return Json::parse(is);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"families of elliptic curves from symmetric diophantine systems"};
    app.require_subcommand(1);

    std::string format = "text", out_path;
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", out_path, "write the report to a file instead of stdout");

    // forge
    auto* forge_cmd = app.add_subcommand("forge", "build one family instance");
    std::string family_str, params_str, roles_str = "abc";
    bool special_h = false, with_heights = false;
    int doublings = 6;
    double tol = 0.01;
    forge_cmd->add_option("--family", family_str, "family letter A..G")->required();
    forge_cmd->add_option("--params", params_str, "comma-separated rationals (num/den)")
        ->required();
    forge_cmd->add_flag("--special-h", special_h,
                        "family F: derive h1,h2 killing the constant term");
    forge_cmd->add_option("--roles", roles_str, "family D: permutation of abc");
    forge_cmd->add_flag("--heights", with_heights, "also compute the independence report");
    forge_cmd->add_option("--doublings", doublings, "doubling steps for canonical heights");

    // repro
    auto* repro_cmd = app.add_subcommand("repro", "reproduce the built-in worked examples");
    std::string repro_id;
    bool repro_all = false;
    repro_cmd->add_option("id", repro_id, "entry id, e.g. C-1");
    repro_cmd->add_flag("--all", repro_all, "run every registry entry");
    repro_cmd->add_option("--doublings", doublings, "doubling steps for canonical heights");
    repro_cmd->add_option("--tol", tol, "override the default regulator tolerance")
        ->check(CLI::PositiveNumber);

    // heights
    auto* heights_cmd =
        app.add_subcommand("heights", "independence report for a curve and points");
    std::string curve_file, points_file;
    heights_cmd->add_option("curve", curve_file, "JSON file {\"a\":[a1,a2,a3,a4,a6]}")->required();
    heights_cmd->add_option("points", points_file, "JSON file [{\"x\":..,\"y\":..},...]")
        ->required();
    heights_cmd->add_option("--doublings", doublings, "doubling steps for canonical heights");

    // reduce
    auto* reduce_cmd = app.add_subcommand("reduce", "reduce a quartic model to Weierstrass form");
    std::string quartic_str, point_str;
    reduce_cmd->add_option("--quartic", quartic_str, "c4,c3,c2,c1,c0")->required();
    reduce_cmd->add_option("--point", point_str, "rational base point x,y on the quartic");

    bool serial = false;
    app.add_flag("--serial", serial, "disable the OpenMP height kernels");

    CLI11_PARSE(app, argc, argv);
    const GramMode mode = serial ? GramMode::Serial : GramMode::Parallel;

    try {
        if (*forge_cmd) {
            std::array<int, 3> roles{};
            if (roles_str.size() != 3) throw Error("--roles needs a permutation of abc");
            for (int i = 0; i < 3; ++i) roles[i] = roles_str[i] - 'a';
            FamilyInstance inst = forge(family_from_letter(family_str.at(0)),
                                        parse_params(params_str), special_h, roles);
            Json report = to_json(inst);
            report["verification"] = to_json(verify_identity(inst));
            if (with_heights) {
                std::vector<CurvePoint> pts;
                for (const auto& p : inst.points) pts.push_back(p.pt);
                report["independence"] =
                    to_json(gram_regulator(inst.weierstrass, pts, doublings, mode));
            }
            emit(report, format, out_path);
            return 0;
        }
        if (*repro_cmd) {
            std::vector<const ReproEntry*> todo;
            if (repro_all) {
                for (const auto& e : repro_registry()) todo.push_back(&e);
            } else if (!repro_id.empty()) {
                todo.push_back(&repro_entry(repro_id));
            } else {
                throw Error("repro needs an id or --all");
            }
            bool all_pass = true;
            Json reports = Json::array();
            for (const auto* e : todo) {
                ReproResult r = run_repro(*e, doublings, mode);
                all_pass = all_pass && r.pass;
                if (format == "json") {
                    r.report["pass"] = r.pass;
                    r.report["seconds"] = r.seconds;
                    reports.push_back(r.report);
                } else {
                    std::cout << (r.pass ? "PASS " : "FAIL ") << e->id << "  (" << e->params_text
                              << ", " << std::to_string(r.seconds).substr(0, 6) << "s)\n";
                    for (const auto& line : r.lines) std::cout << line << "\n";
                }
            }
            if (format == "json") emit(reports, format, out_path);
            return all_pass ? 0 : 3;
        }
        if (*heights_cmd) {
            WeierstrassCurve curve = curve_from_json(load_json(curve_file));
            std::vector<CurvePoint> pts;
            for (const auto& j : load_json(points_file)) pts.push_back(point_from_json(j));
            for (const auto& p : pts)
                if (!curve.contains(p))
                    throw DegeneracyError("point " + p.str() + " is not on the curve");
            auto rep = gram_regulator(curve, pts, doublings, mode);
            rep.torsion_bound = torsion_bound(integral_model(curve), 8);
            emit(to_json(rep), format, out_path);
            return 0;
        }
        if (*reduce_cmd) {
            auto cs = parse_params(quartic_str);
            if (cs.size() != 5) throw Error("--quartic needs c4,c3,c2,c1,c0");
            QuarticModel q(UniPoly({cs[4], cs[3], cs[2], cs[1], cs[0]}));
            CurvePoint base = CurvePoint::at_infinity();
            if (!point_str.empty()) {
                auto xy = parse_params(point_str);
                if (xy.size() != 2) throw Error("--point needs x,y");
                base = CurvePoint(xy[0], xy[1]);
                if (!q.contains(base)) throw DegeneracyError("point is not on the quartic");
            }
            Reduction red = quartic_to_weierstrass(q, base);
            Json report{{"quartic", to_json(q.phi())}, {"curve", to_json(red.curve)}};
            if (!base.infinity) {
                try {
                    report["base_image"] = to_json(red.map.apply(base));
                } catch (const UndefinedMap&) {
                    report["base_image"] = "infinity";
                }
            }
            emit(report, format, out_path);
            return 0;
        }
    } catch (const DegeneracyError& err) {
        std::cerr << "degenerate input: " << err.what() << "\n";
        return 2;
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return 1;
    }
    return 1;
}
