#include "CLI11.hpp"
#include <fstream>
#include <iostream>

#include "setlat/examples.hpp"
#include "setlat/io.hpp"
#include "setlat/scalarization.hpp"
#include "setlat/solutions.hpp"

using namespace setlat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitMath = 2;  // a verified mathematical claim failed

Vec parse_vector_arg(const std::string& s) {
    std::vector<double> vals;
    std::string item;
    std::stringstream ss(s);
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        double v = std::stod(item, &pos);
        if (pos != item.size()) throw IoError("NUMBER_FORMAT", "bad vector component '" + item + "'");
        vals.push_back(v);
    }
    if (vals.empty()) throw IoError("NUMBER_FORMAT", "empty vector argument");
    Vec v(static_cast<int>(vals.size()));
    for (size_t i = 0; i < vals.size(); ++i) v(static_cast<int>(i)) = vals[i];
    return v;
}

std::vector<Vec> parse_point_list(const std::string& s) {
    std::vector<Vec> out;
    std::string item;
    std::stringstream ss(s);
    while (std::getline(ss, item, ';'))
        if (!item.empty()) out.push_back(parse_vector_arg(item));
    return out;
}

// "y1,y2|z1,z2;..." -> dual pairs
std::vector<DualPair> parse_pair_list(const std::string& s) {
    std::vector<DualPair> out;
    std::string item;
    std::stringstream ss(s);
    while (std::getline(ss, item, ';')) {
        if (item.empty()) continue;
        auto bar = item.find('|');
        if (bar == std::string::npos)
            throw IoError("NUMBER_FORMAT", "dual pair must look like y1,y2|z1,z2");
        out.push_back({parse_vector_arg(item.substr(0, bar)), parse_vector_arg(item.substr(bar + 1))});
    }
    return out;
}

std::vector<double> parse_grid(const std::string& s) {
    double a, b, step;
    if (std::sscanf(s.c_str(), "%lf:%lf:%lf", &a, &b, &step) != 3 || step <= 0)
        throw IoError("NUMBER_FORMAT", "grid must be a:b:step with step > 0");
    std::vector<double> g;
    for (double t = a; t <= b + 1e-12; t += step) g.push_back(t);
    return g;
}

void write_out(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw IoError("IO_ERROR", "cannot write '" + out_path + "'");
    f << text;
}

ProblemDocument example_doc(const std::string& name) {
    if (name == "running" ) {
        return ProblemDocument{examples::running_instance(), "", Json::object()};
    }
    if (name == "psep") {
        PSepProblem ps = examples::psep_fixture();
        return ProblemDocument{std::move(ps.inst), "", Json::object()};
    }
    if (name == "paper-sec3") {
        // parametric objective plus an always-feasible trivial constraint
        PolyCone D = orthant(1);
        Mat G = Mat::Zero(1, 1);
        SetValuedMap g = SetValuedMap::affine(
            Polyhedron::whole_space(1), {{G, Vec::Zero(1), upper_close({Vec::Zero(1)}, {}, D)}},
            D);
        return ProblemDocument{make_instance(examples::sec3_objective(), std::move(g)), "sec3",
                               Json::object()};
    }
    throw IoError("SCHEMA_VIOLATION", "unknown example '" + name + "' (running, psep, paper-sec3)");
}

int run_verify(const ProblemDocument& doc, double tol) {
    const ProblemInstance& inst = doc.inst;
    // round trip must reproduce the canonical forms bit for bit
    ProblemDocument reparsed = parse_problem_text(emit_problem(doc));
    if (emit_problem(reparsed) != emit_problem(doc)) {
        std::cerr << "verify: document round trip is not stable\n";
        return kExitMath;
    }
    if (!inst.f.is_affine()) {
        std::cout << "verify: parametric objective, document checks passed\n";
        return kExitOk;
    }
    std::vector<Vec> xs = feasible_vertices(inst);
    for (const auto& x : xs)
        if (!feasible(inst, x)) {
            std::cerr << "verify: feasible-region vertex fails the feasibility test\n";
            return kExitMath;
        }
    StrongDualityResult res = solve_strong(inst);
    if (res.report.slater && !res.report.certified) {
        std::cerr << "verify: strong duality not certified: " << res.report.note << "\n";
        return kExitMath;
    }
    std::vector<DualPair> pairs;
    for (const auto& e : res.delta.entries) pairs.push_back(e.pair);
    if (!pairs.empty()) {
        WeakDualityReport w = weak_duality_check(inst, xs, pairs);
        if (!w.pass) {
            std::cerr << "verify: weak duality violated: " << w.witness << "\n";
            return kExitMath;
        }
        for (const auto& x : xs) {
            UpperSet rec = reconstruct_primal(inst, x, pairs);
            if (!contains(rec, inst.f.value(x), tol)) {
                std::cerr << "verify: primal reconstruction lost part of f(x)\n";
                return kExitMath;
            }
        }
    }
    std::cout << "verify: all checks passed (" << xs.size() << " vertices, " << pairs.size()
              << " dual pairs)\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polyhedral set-valued convex duality toolkit"};
    app.require_subcommand(1);

    std::string file, out_path, zstar_s, ystar_s, grid_s = "0:1:0.25", xbar_s, vbar_s, name;
    double tol = kDualTol;

    auto add_common = [&](CLI::App* sub, bool needs_file) {
        if (needs_file) sub->add_option("file", file, "problem document")->required();
        sub->add_option("--out", out_path, "write the result document here");
        sub->add_option("--tol", tol, "comparison tolerance");
    };

    CLI::App* solve = app.add_subcommand("solve", "primal/dual values, Delta, certificates");
    add_common(solve, true);
    CLI::App* dual = app.add_subcommand("dual", "evaluate the dual objective at a pair");
    add_common(dual, true);
    dual->add_option("--ystar", ystar_s, "y* components a,b,...")->required();
    dual->add_option("--zstar", zstar_s, "z* components a,b,...")->required();
    CLI::App* scal = app.add_subcommand("scalarize", "phi tables along a grid");
    add_common(scal, true);
    scal->add_option("--zstar", zstar_s, "z* components a,b,...")->required();
    scal->add_option("--grid", grid_s, "argument grid a:b:step (1-d problems)");
    CLI::App* saddle = app.add_subcommand("saddle", "saddle-point verdict for candidate sets");
    add_common(saddle, true);
    saddle->add_option("--xbar", xbar_s, "candidate primal set v1;v2;...");
    saddle->add_option("--vbar", vbar_s, "candidate dual set y|z;y|z;...");
    CLI::App* example = app.add_subcommand("example", "write a built-in fixture document");
    example->add_option("name", name, "running | psep | paper-sec3")->required();
    example->add_option("--out", out_path, "write the document here");
    example->add_option("--grid", grid_s, "grid recorded in the document options");
    CLI::App* verify = app.add_subcommand("verify", "run the property battery on a document");
    add_common(verify, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (example->parsed()) {
            ProblemDocument doc = example_doc(name);
            doc.options["grid"] = grid_s;
            write_out(out_path, emit_problem(doc));
            return kExitOk;
        }
        ProblemDocument doc = parse_problem(file);
        if (solve->parsed()) {
            StrongDualityResult res = solve_strong(doc.inst);
            write_out(out_path, strong_result_json(res).dump(2) + "\n");
            bool internal_failure = res.report.slater && !res.report.certified;
            return internal_failure ? kExitMath : kExitOk;
        }
        if (dual->parsed()) {
            DualPair pair{parse_vector_arg(ystar_s), parse_vector_arg(zstar_s)};
            UpperSet h = dual_objective(doc.inst, pair);
            write_out(out_path, upper_set_json(h).dump(2) + "\n");
            return kExitOk;
        }
        if (scal->parsed()) {
            Vec zs = parse_vector_arg(zstar_s);
            if (doc.inst.n() != 1)
                throw IoError("SCHEMA_VIOLATION", "scalarize grids require a 1-d argument");
            Json rows = Json::array();
            for (double t : parse_grid(grid_s)) {
                Vec x = Vec::Constant(1, t);
                Json r;
                r["x"] = format_number(t);
                r["phi"] = phi(doc.inst.f, zs, x).str();
                rows.push_back(r);
            }
            Json out;
            out["zstar"] = Json::array();
            for (int i = 0; i < zs.size(); ++i) out["zstar"].push_back(format_number(zs(i)));
            out["table"] = rows;
            write_out(out_path, out.dump(2) + "\n");
            return kExitOk;
        }
        if (saddle->parsed()) {
            if (!doc.inst.f.is_affine()) {
                // parametric objective: grid solution check instead of the
                // Lagrangian machinery
                if (doc.inst.n() != 1)
                    throw IoError("SCHEMA_VIOLATION", "grid solution checks require a 1-d argument");
                std::string grid = doc.options.is_object() && doc.options.contains("grid")
                                       ? doc.options["grid"].get<std::string>()
                                       : grid_s;
                std::vector<Vec> universe;
                for (double t : parse_grid(grid)) universe.push_back(Vec::Constant(1, t));
                std::vector<Vec> xbar;
                if (!xbar_s.empty()) {
                    xbar = parse_point_list(xbar_s);
                } else {
                    for (const auto& x : universe)
                        if (is_minimizer(doc.inst.f, x, universe)) xbar.push_back(x);
                }
                SolutionKind k = check_solution(doc.inst.f, xbar, universe);
                Json out;
                out["grid"] = grid;
                out["candidates"] = Json::array();
                for (const auto& x : xbar) out["candidates"].push_back(format_number(x(0)));
                out["kind"] = k == SolutionKind::FULL_SOLUTION ? "FULL_SOLUTION"
                              : k == SolutionKind::SOLUTION    ? "SOLUTION"
                                                               : "NOT_SOLUTION";
                write_out(out_path, out.dump(2) + "\n");
                return k == SolutionKind::NOT_SOLUTION ? kExitMath : kExitOk;
            }
            SaddleUniverses u;
            u.xs = feasible_vertices(doc.inst);
            StrongDualityResult res = solve_strong(doc.inst);
            for (const auto& e : res.delta.entries) u.ws.push_back(e.pair);
            std::vector<Vec> xbar;
            if (!xbar_s.empty()) {
                xbar = parse_point_list(xbar_s);
            } else {
                // default candidate: vertices whose p-value is grid-minimal
                LagrFn l = [&doc](const Vec& x, const DualPair& w) {
                    return lagrangian(doc.inst, x, w);
                };
                std::vector<UpperSet> pvals;
                for (const auto& x : u.xs)
                    pvals.push_back(upper_ext(l, {x}, u.ws, doc.inst.C()));
                for (size_t i = 0; i < u.xs.size(); ++i) {
                    bool dominated = false;
                    for (size_t k = 0; k < u.xs.size(); ++k)
                        if (k != i && contains(pvals[k], pvals[i]) && !contains(pvals[i], pvals[k]))
                            dominated = true;
                    if (!dominated) xbar.push_back(u.xs[i]);
                }
            }
            std::vector<DualPair> vbar = vbar_s.empty() ? u.ws : parse_pair_list(vbar_s);
            if (u.ws.empty())
                throw IoError("SCHEMA_VIOLATION",
                              "no dual pairs available (empty Delta and no --vbar)");
            SaddleVerdict v = saddle_check(doc.inst, xbar, vbar, u);
            write_out(out_path, saddle_verdict_json(v).dump(2) + "\n");
            return kExitOk;
        }
        if (verify->parsed()) return run_verify(doc, tol);
    } catch (const IoError& ex) {
        std::cerr << "error [" << ex.code << "] " << ex.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error [INVALID_INPUT] " << ex.what() << "\n";
        return kExitInput;
    } catch (const std::exception& ex) {
        std::cerr << "error [ASSERTION] " << ex.what() << "\n";
        return kExitMath;
    }
    return kExitInput;
}
