// tetratrig command-line tool. Every command prints one JSON document.
// Exit codes: 0 ok, 1 verification failure, 2 bad input, 3 non-generic, 4 numeric failure.

#include <iostream>
#include <numbers>
#include <optional>

#include "CLI11.hpp"
#include "json_io.hpp"
#include "tetratrig/correspond.hpp"

using namespace tetratrig;
using io::Json;

namespace {

enum Exit { kOk = 0, kVerifyFail = 1, kBadInput = 2, kNonGeneric = 3, kNumeric = 4 };

int exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::NotRealizable:
        case ErrorKind::NearDegenerate:
        case ErrorKind::NotInLattice:
        case ErrorKind::NotARoot:
        case ErrorKind::VectorNotInDomain:
        case ErrorKind::NotInComplement:
        case ErrorKind::NotInFPerp:
            return kBadInput;
        case ErrorKind::NonGeneric:
        case ErrorKind::ZeroPoleCollision:
        case ErrorKind::DegenerateQuadratic:
        case ErrorKind::NotInModuli:
            return kNonGeneric;
        default:
            return kNumeric;
    }
}

struct Options {
    RunConfig cfg;
    std::string json_in;
    std::string out = "-";
    std::string geometry = "hyperbolic";
    std::vector<double> lengths;
};

Json config_json(const RunConfig& c) {
    return Json{{"tolerance", c.tolerance}, {"seed", c.seed}, {"trials", c.trials}};
}

MetricSpec metric_input(const Options& o) {
    if (!o.json_in.empty()) {
        if (!o.lengths.empty()) throw io::BadInput("give either --json or --lengths, not both");
        return io::metric_from_json(io::read_json(o.json_in));
    }
    if (o.lengths.size() != 6) throw io::BadInput("need --json or six --lengths");
    Json j{{"geometry", o.geometry}, {"lengths", Json::object()}};
    const char* keys[6] = {"12", "13", "14", "23", "24", "34"};
    for (int k = 0; k < 6; ++k) j["lengths"][keys[k]] = o.lengths[k];
    return io::metric_from_json(j);
}

// Runs one stage; errors are rethrown with the stage name prefixed.
template <typename F>
auto stage(const char* name, F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        throw Error(e.kind(), std::string(name) + " stage: " + e.what());
    }
}

int cmd_solve(const Options& o) {
    MetricSpec spec = metric_input(o);
    stage("metric", [&] {
        validate_metric(spec);
        return 0;
    });
    Solution sol = stage("solve", [&] { return solve_angles(spec); });
    io::write_output(Json{{"metric", io::to_json(spec)}, {"solution", io::to_json(sol)}}, o.out);
    return kOk;
}

int cmd_verify(const Options& o, const std::string& suite) {
    std::vector<std::string> names;
    if (suite == "all")
        names = suite_names();
    else
        names = {suite};
    for (const auto& n : names)
        if (std::find(suite_names().begin(), suite_names().end(), n) == suite_names().end())
            throw io::BadInput("unknown suite: " + n);
    Json reports = Json::array();
    bool pass = true;
    for (const auto& n : names) {
        SuiteReport r = run_suite(n, o.cfg);
        pass = pass && r.pass;
        reports.push_back(io::to_json(r));
    }
    io::write_output(Json{{"config", config_json(o.cfg)}, {"pass", pass}, {"reports", reports}}, o.out);
    return pass ? kOk : kVerifyFail;
}

int cmd_regge(const Options& o, const std::vector<double>& x, const std::string& kind, bool check) {
    if (x.size() != 6) throw io::BadInput("regge needs six values");
    std::array<double, 6> in;
    std::copy(x.begin(), x.end(), in.begin());
    ReggeKind k = kind == "angles" ? ReggeKind::Angles : ReggeKind::Lengths;
    auto outv = regge_transform(in, k);
    Json j{{"kind", kind}, {"input", in}, {"output", outv}};
    int code = kOk;
    if (check) {
        if (k != ReggeKind::Lengths) throw io::BadInput("--check applies to lengths");
        MetricSpec s = metric_input(Options{o.cfg, "", "-", o.geometry, x});
        MetricSpec r = s;
        r.lengths = outv;
        stage("input metric", [&] {
            validate_metric(s);
            return 0;
        });
        stage("transformed metric", [&] {
            validate_metric(r);
            return 0;
        });
        auto expect = regge_transform(metric_angles_oracle(s), ReggeKind::Angles);
        auto got = metric_angles_oracle(r);
        double res = 0.0;
        for (int i = 0; i < 6; ++i)
            res = std::max(res, std::abs(std::remainder(got[i] - expect[i], 2 * std::numbers::pi)));
        constexpr double kTol = 1e-8;
        j["check"] = Json{{"angles", got}, {"expected", expect}, {"residual", res}, {"pass", res < kTol}};
        if (res >= kTol) code = kVerifyFail;
    }
    io::write_output(j, o.out);
    return code;
}

int cmd_lattice(const Options& o, const std::vector<std::string>& args) {
    if (args.empty()) throw io::BadInput("lattice needs a query");
    const std::string& q = args[0];
    Json j{{"query", q}};
    if (q == "roots") {
        Json a = Json::array();
        for (const auto& r : roots()) a.push_back(io::to_json(r));
        j["count"] = roots().size();
        j["roots"] = a;
    } else if (q == "planes") {
        Json a = Json::array();
        for (const auto& p : affine_planes()) {
            Json row = Json::array();
            for (int s : p) row.push_back(aff_name(s));
            a.push_back(row);
        }
        j["count"] = affine_planes().size();
        j["planes"] = a;
    } else if (q == "weyl-order") {
        j["group"] = "W(D6)";
        j["order"] = WeylD6::instance().order();
    } else if (q == "reflect") {
        if (args.size() != 3) throw io::BadInput("usage: lattice reflect <root> <vector>");
        LatticeVec r = io::parse_lattice_vec(args[1]), v = io::parse_lattice_vec(args[2]);
        if (!is_root(r)) throw io::BadInput("not a root: " + args[1]);
        LatticeVec img = reflect(r, v);
        j["root"] = io::to_json(r);
        j["vector"] = io::to_json(v);
        j["image"] = io::to_json(img);
        j["image_str"] = img.str();
    } else if (q == "project") {
        if (args.size() != 2) throw io::BadInput("usage: lattice project <class>");
        PicClass c = io::parse_pic_class(args[1]);
        j["class"] = io::to_json(c);
        j["image"] = io::to_json(project_mod_f(c));
    } else {
        throw io::BadInput("unknown lattice query: " + q);
    }
    io::write_output(j, o.out);
    return kOk;
}

Json int_matrix(const std::vector<std::vector<long long>>& m) { return Json(m); }

int cmd_surface(const Options& o, const std::string& report) {
    Json j{{"report", report}};
    bool ok = true;
    if (report == "pairing") {
        auto rt = rt_gram(), pic = pic_gram();
        auto srt = signature(rt), spic = signature(pic);
        Json rtn = Json::array(), picn = Json::array();
        for (int k = 0; k < 14; ++k) rtn.push_back(rt_basis_name(k));
        for (int k = 0; k < 10; ++k) picn.push_back(pic_basis_name(k));
        j["blowup_basis"] = rtn;
        j["blowup_gram"] = int_matrix(rt);
        j["blowup_signature"] = {srt.first, srt.second};
        j["picard_basis"] = picn;
        j["picard_gram"] = int_matrix(pic);
        j["picard_signature"] = {spic.first, spic.second};
        j["canonical"] = io::to_json(canonical_class());
        FiberComponents f = fiber_component_classes();
        j["fiber_components"] = Json{{"F11", io::to_json(f.F11)},
                                     {"F12", io::to_json(f.F12)},
                                     {"F21", io::to_json(f.F21)},
                                     {"F22", io::to_json(f.F22)}};
        ok = spic == std::pair{1, 9} && srt == std::pair{1, 13};
    } else if (report == "marking") {
        MarkingIso m = marking_iso_fig4();
        Json nodes = Json::array();
        std::vector<std::vector<long long>> gp(8, std::vector<long long>(8)), ge = gp;
        int mismatches = 0;
        for (int a = 0; a < 8; ++a) {
            nodes.push_back(Json{{"label", m.nodes[a].label}, {"class", io::to_json(m.nodes[a].pic)},
                                 {"e8", io::to_json(m.nodes[a].e8)}});
            for (int b = 0; b < 8; ++b) {
                gp[a][b] = pic_pairing(m.nodes[a].pic, m.nodes[b].pic);
                ge[a][b] = inner(m.nodes[a].e8, m.nodes[b].e8);
                mismatches += gp[a][b] != ge[a][b];
            }
        }
        j["nodes"] = nodes;
        j["picard_gram"] = int_matrix(gp);
        j["e8_gram"] = int_matrix(ge);
        j["mismatches"] = mismatches;
        ok = mismatches == 0;
    } else if (report == "identities") {
        Section34Report r = verify_section34_identities();
        Json items = Json::array();
        for (const auto& it : r.items)
            items.push_back(Json{{"name", it.name}, {"lhs", io::to_json(it.lhs)}, {"rhs", io::to_json(it.rhs)},
                                 {"ok", it.ok}});
        Json b1 = Json::array(), b2 = Json::array();
        for (int k = 0; k < 8; ++k) {
            b1.push_back(r.assignment.b1[k].str());
            b2.push_back(r.assignment.b2[k].str());
        }
        j["bundle"] = r.assignment.B.str();
        j["assignment"] = Json{{"meets_F11", b1}, {"meets_F21", b2}};
        j["orderings_found"] = r.assignments_found;
        j["reference_compatible"] = r.fig4_compatible;
        j["cycle_rows_fixed_by_D"] = r.cycle_rows_fixed_by_D;
        j["dictionary_ok"] = r.dictionary_ok;
        j["items"] = items;
        j["all_ok"] = r.all_ok;
        ok = r.all_ok;
    } else if (report == "2B") {
        Json a = Json::array();
        for (auto [name, B] : {std::pair<const char*, PicClass>{"l", PicClass::l()}, {"r", PicClass::r()}}) {
            auto found = search_2B(B);
            Json sols = Json::array();
            for (const auto& comps : found) {
                Json s = Json::array();
                for (const auto& c : comps) s.push_back(c.str());
                sols.push_back(s);
            }
            a.push_back(Json{{"B", name}, {"solutions", sols}, {"unique", found.size() == 1}});
            ok = ok && found.size() == 1;
        }
        j["searches"] = a;
    } else {
        throw io::BadInput("unknown surface report: " + report);
    }
    j["pass"] = ok;
    io::write_output(j, o.out);
    return ok ? kOk : kVerifyFail;
}

int cmd_reconstruct(const Options& o) {
    MetricSpec spec = metric_input(o);
    stage("metric", [&] {
        validate_metric(spec);
        return 0;
    });
    MarkedTetra T = stage("marking", [&] { return from_metric(spec); });
    CharacterHom L = length_function(T);
    Reconstruction r = stage("reconstruct", [&] { return reconstruct_from_L(L, T.orientation); });
    double res = round_trip_residual(r.T, L);
    constexpr double kTol = 1e-8;
    Json half = Json::array();
    for (int k = 0; k < 6; ++k) half.push_back(io::to_json(L.base[edge_aff(k)]));
    io::write_output(Json{{"metric", io::to_json(spec)},
                          {"half_values", half},
                          {"det_L", io::to_json(det_L(L))},
                          {"convention", r.convention == QuadricSign::Symmetric ? "all-plus" : "verbatim"},
                          {"verbatim_residual", r.verbatim_residual},
                          {"all_plus_residual", r.symmetric_residual},
                          {"round_trip_residual", res},
                          {"pass", res < kTol},
                          {"tetrahedron", io::to_json(r.T)}},
                     o.out);
    return res < kTol ? kOk : kVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Projective tetrahedra, Cho-Kim functions and the E8 lattice"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--tol", o.cfg.tolerance, "default projective tolerance")->check(CLI::PositiveNumber);
    app.add_option("--seed", o.cfg.seed, "random seed");
    app.add_option("--trials", o.cfg.trials, "trials per geometry")->check(CLI::Range(1, 1000000));
    app.add_option("--jobs", o.cfg.jobs, "worker threads")->check(CLI::Range(1, 256));
    app.add_option("--json", o.json_in, "input JSON file, '-' for stdin");
    app.add_option("--out", o.out, "output file, '-' for stdout");

    auto* solve = app.add_subcommand("solve", "dihedral angles from edge lengths");
    auto* recon = app.add_subcommand("reconstruct", "rebuild the tetrahedron from its length function");
    for (auto* sc : {solve, recon}) {
        sc->add_option("--geometry", o.geometry, "spherical or hyperbolic")
            ->check(CLI::IsMember({"spherical", "hyperbolic"}));
        sc->add_option("--lengths", o.lengths, "lengths 12 13 14 23 24 34")->expected(6);
    }

    std::string suite;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::vector<std::string> choices{"all"};
    choices.insert(choices.end(), suite_names().begin(), suite_names().end());
    verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(choices));

    std::vector<double> regge_in;
    std::string regge_kind = "lengths";
    bool regge_check = false;
    auto* regge = app.add_subcommand("regge", "Regge transform of six values");
    regge->add_option("values", regge_in, "values at 12 13 14 23 24 34")->expected(6)->required();
    regge->add_option("--kind", regge_kind, "lengths or angles")->check(CLI::IsMember({"lengths", "angles"}));
    regge->add_flag("--check", regge_check, "verify the angle formulas on the metric tetrahedra");
    regge->add_option("--geometry", o.geometry, "geometry for --check")
        ->check(CLI::IsMember({"spherical", "hyperbolic"}));

    std::vector<std::string> lattice_args;
    auto* lattice = app.add_subcommand("lattice", "lattice queries: roots, planes, weyl-order, reflect, project");
    lattice->add_option("query", lattice_args, "query and its arguments")->required();

    std::string report;
    auto* surface = app.add_subcommand("surface", "Picard lattice reports: pairing, marking, identities, 2B");
    surface->add_option("report", report, "report name")
        ->required()
        ->check(CLI::IsMember({"pairing", "marking", "identities", "2B"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadInput;
    }

    try {
        if (*solve) return cmd_solve(o);
        if (*recon) return cmd_reconstruct(o);
        if (*verify) return cmd_verify(o, suite);
        if (*regge) return cmd_regge(o, regge_in, regge_kind, regge_check);
        if (*lattice) return cmd_lattice(o, lattice_args);
        if (*surface) return cmd_surface(o, report);
    } catch (const io::BadInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNumeric;
    }
    return kOk;
}
