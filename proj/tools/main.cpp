#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coralarm/arm.hpp"
#include "coralarm/enumeration.hpp"
#include "coralarm/errors.hpp"
#include "coralarm/genfun.hpp"
#include "coralarm/pip.hpp"
#include "coralarm/planner.hpp"
#include "coralarm/render.hpp"
#include "coralarm/tableau.hpp"

namespace {

using namespace coralarm;

long long state_cap(long long flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("CORALARM_MAX_STATES")) return std::atoll(env);
    return 1'000'000;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw IoError("cannot write " + path);
    return file;
}

std::string join_moves(const std::vector<Move>& moves) {
    std::string out;
    for (size_t i = 0; i < moves.size(); ++i) out += (i ? " " : "") + moves[i].to_string();
    return out;
}

int run_distance(int width, const std::string& from, const std::string& to,
                 const std::string& format) {
    ArmState a = parse_state(from, width), b = parse_state(to, width);
    long long edge = distance_edge(a, b);
    long long cube = static_cast<long long>(normal_cube_path(a, b).size());
    if (format == "json")
        std::cout << "{\"edge\": " << edge << ", \"cube\": " << cube << "}\n";
    else
        std::cout << "edge " << edge << "\ncube " << cube << "\n";
    return 0;
}

int run_plan(int width, const std::string& from, const std::string& to, const std::string& metric,
             const std::string& format) {
    ArmState a = parse_state(from, width), b = parse_state(to, width);
    std::vector<std::vector<Move>> steps;
    if (metric == "cube") {
        steps = normal_cube_path(a, b);
    } else {
        for (const Move& mv : geodesic_edge(a, b)) steps.push_back({mv});
    }
    if (format == "json") {
        std::cout << "{\"metric\": \"" << metric << "\", \"steps\": [";
        for (size_t i = 0; i < steps.size(); ++i) {
            std::cout << (i ? ", " : "") << "[";
            for (size_t j = 0; j < steps[i].size(); ++j)
                std::cout << (j ? ", " : "") << "\"" << steps[i][j].to_string() << "\"";
            std::cout << "]";
        }
        std::cout << "]}\n";
    } else {
        ArmState cur = a;
        std::cout << render_state(cur) << "\n";
        for (const auto& step : steps) {
            for (const Move& mv : step) cur = apply_move(cur, mv);
            std::cout << join_moves(step) << " -> " << render_state(cur) << "\n";
        }
        std::cout << steps.size() << " steps\n";
    }
    return 0;
}

int run_diameter(int width, int length, bool verify_bfs, long long cap) {
    long long d = diameter(width, length);
    if (!verify_bfs) {
        std::cout << d << "\n";
        return 0;
    }
    int bfs = all_pairs_diameter(enumerate_states(width, length, cap));
    if (bfs != d) {
        std::cerr << "formula gives " << d << " but breadth-first search gives " << bfs << "\n";
        return 1;
    }
    std::cout << d << " verified\n";
    return 0;
}

int run_fvector(int width, int length, long long cap, const std::string& format) {
    CubeComplex x = enumerate_cubes(enumerate_states(width, length, cap));
    std::vector<long long> fv = x.fvector();
    if (format == "json") {
        std::cout << "{\"fvector\": [";
        for (size_t i = 0; i < fv.size(); ++i) std::cout << (i ? ", " : "") << fv[i];
        std::cout << "], \"chi\": " << euler_characteristic(fv) << "}\n";
    } else {
        for (size_t i = 0; i < fv.size(); ++i) std::cout << (i ? "," : "") << fv[i];
        std::cout << " chi=" << euler_characteristic(fv) << "\n";
    }
    return 0;
}

int run_euler(int width, int length, long long cap) {
    CubeComplex x = enumerate_cubes(enumerate_states(width, length, cap));
    std::cout << euler_characteristic(x.fvector()) << "\n";
    return 0;
}

int run_series(int order, const std::string& format, const std::string& out_path) {
    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    auto rows = series_coeffs(gf_cubes(), order);
    if (format == "csv") {
        os << "n,d,count\n";
        for (size_t n = 0; n < rows.size(); ++n)
            for (size_t d = 0; d < rows[n].size(); ++d) os << n << "," << d << "," << rows[n][d] << "\n";
    } else if (format == "json") {
        os << "[";
        for (size_t n = 0; n < rows.size(); ++n) {
            os << (n ? ", " : "") << "[";
            for (size_t d = 0; d < rows[n].size(); ++d) os << (d ? ", " : "") << rows[n][d];
            os << "]";
        }
        os << "]\n";
    } else {
        for (size_t n = 0; n < rows.size(); ++n) {
            Poly2 row;
            for (size_t d = 0; d < rows[n].size(); ++d)
                row = row + Poly2::term(rows[n][d], 0, static_cast<int>(d));
            os << "x^" << n << ": " << row.to_string() << "\n";
        }
    }
    return 0;
}

int run_pip(int width, int length, const std::string& format, const std::string& out_path) {
    CoralPip cp = build_coral_pip(width, length);
    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    if (format == "json") write_json(os, cp.pip());
    else write_dot(os, cp.pip());
    return 0;
}

int run_animate(int width, const std::string& from, const std::string& to,
                const std::string& metric, const std::string& out_dir) {
    ArmState a = parse_state(from, width), b = parse_state(to, width);
    std::vector<std::vector<Move>> steps;
    if (metric == "cube") {
        steps = normal_cube_path(a, b);
    } else {
        for (const Move& mv : geodesic_edge(a, b)) steps.push_back({mv});
    }
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    auto frame_path = [&](size_t i) {
        std::ostringstream name;
        name << out_dir << "/frame_" << std::setw(4) << std::setfill('0') << i << ".svg";
        return name.str();
    };
    auto write_frame = [&](size_t i, const ArmState& s) {
        std::ofstream f(frame_path(i));
        if (!f) throw IoError("cannot write " + frame_path(i));
        write_svg(f, s, render_state(s));
    };
    std::ofstream summary(out_dir + "/summary.txt");
    if (!summary) throw IoError("cannot write " + out_dir + "/summary.txt");
    ArmState cur = a;
    write_frame(0, cur);
    summary << "frame_0000 " << render_state(cur) << "\n";
    for (size_t i = 0; i < steps.size(); ++i) {
        for (const Move& mv : steps[i]) cur = apply_move(cur, mv);
        write_frame(i + 1, cur);
        summary << "frame_" << std::setw(4) << std::setfill('0') << i + 1 << " "
                << render_state(cur) << "  after " << join_moves(steps[i]) << "\n";
    }
    std::cout << steps.size() + 1 << " frames written to " << out_dir << "\n";
    return 0;
}

int run_verify(const std::string& suite, long long cap) {
    int failures = 0;
    auto check = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
    };
    bool full = suite == "full";

    // bijection round-trips and jump-join identity
    {
        bool ok = true;
        int maxn = full ? 8 : 6;
        for (int m = 1; m <= 3 && ok; ++m)
            for (int n = 1; n <= maxn && ok; ++n) {
                TransitionGraph g = enumerate_states(m, n, cap);
                CoralPip cp = build_coral_pip(m, n);
                for (const auto& key : g.states) {
                    ArmState s = parse_state(key, m);
                    CoralTableau t = state_to_tableau(s);
                    if (!(tableau_to_state(t, m, n) == s)) { ok = false; break; }
                    if (!(ideal_to_tableau(tableau_to_ideal(t, cp), cp) == t)) { ok = false; break; }
                }
            }
        check("state/tableau/ideal round-trips", ok);
    }

    // distance formula against breadth-first search
    {
        bool ok = true;
        std::vector<std::pair<int, int>> cases = {{1, 7}, {2, 6}, {3, 5}};
        if (full) cases = {{1, 8}, {2, 8}, {3, 6}};
        for (auto [m, n] : cases) {
            TransitionGraph g = enumerate_states(m, n, cap);
            for (int u = 0; u < static_cast<int>(g.states.size()) && ok; ++u) {
                auto dist = bfs_distances(g, u);
                ArmState su = parse_state(g.states[static_cast<size_t>(u)], m);
                for (int v = 0; v < static_cast<int>(g.states.size()); ++v)
                    if (distance_edge(su, parse_state(g.states[static_cast<size_t>(v)], m)) !=
                        dist[static_cast<size_t>(v)]) { ok = false; break; }
            }
            if (!ok) break;
        }
        check("closed-form distance = breadth-first search", ok);
    }

    // PIP reconstruction from the brute-force complex
    {
        bool ok = true;
        int maxn = full ? 7 : 5;
        for (int n = 1; n <= maxn && ok; ++n)
            ok = !coral_pip_mismatch(enumerate_cubes(enumerate_states(2, n, cap)), 2, n).has_value();
        check("poset reconstruction from the cube complex", ok);
    }

    // f-vectors against the series and Euler characteristic
    {
        bool ok = true;
        int maxn = full ? 10 : 8;
        auto rows = series_coeffs(gf_cubes(), maxn);
        for (int n = 1; n <= maxn && ok; ++n) {
            auto fv = enumerate_cubes(enumerate_states(2, n, cap)).fvector();
            if (euler_characteristic(fv) != 1) ok = false;
            for (size_t d = 0; d < std::max(fv.size(), rows[static_cast<size_t>(n)].size()); ++d) {
                BigInt want = d < rows[static_cast<size_t>(n)].size() ? rows[static_cast<size_t>(n)][d] : 0;
                long long got = d < fv.size() ? fv[d] : 0;
                if (want != got) { ok = false; break; }
            }
        }
        check("f-vectors match the series; Euler characteristic 1", ok);
    }

    // diameter formula against breadth-first search
    {
        bool ok = true;
        for (int m = 1; m <= 3 && ok; ++m)
            for (int n = 1; n <= (full ? 8 : 6) && ok; ++n)
                ok = diameter(m, n) == all_pairs_diameter(enumerate_states(m, n, cap));
        check("closed-form diameter = breadth-first search", ok);
    }

    if (failures) std::cerr << failures << " verification suite(s) failed\n";
    return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Motion planning for a robotic arm in a rectangular tunnel"};
    app.require_subcommand(1);

    int width = 2, length = 0, order = 12;
    std::string from, to, metric = "edge", format = "text", out_path, suite = "small";
    long long max_states = 0;
    bool verify_bfs = false;

    auto add_space = [&](CLI::App* cmd, bool need_length) {
        cmd->add_option("--width", width, "tunnel width m")->required();
        auto* opt = cmd->add_option("--length", length, "arm length n");
        if (need_length) opt->required();
    };
    auto add_pair = [&](CLI::App* cmd) {
        cmd->add_option("--width", width, "tunnel width m")->required();
        cmd->add_option("--from", from, "start state, e.g. uurddr")->required();
        cmd->add_option("--to", to, "target state")->required();
    };

    auto* c_distance = app.add_subcommand("distance", "edge- and cube-metric distance");
    add_pair(c_distance);
    c_distance->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* c_plan = app.add_subcommand("plan", "optimal move plan between two states");
    add_pair(c_plan);
    c_plan->add_option("--metric", metric)->check(CLI::IsMember({"edge", "cube"}));
    c_plan->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* c_diameter = app.add_subcommand("diameter", "diameter of the transition graph");
    add_space(c_diameter, true);
    c_diameter->add_flag("--verify-bfs", verify_bfs, "cross-check by breadth-first search");
    c_diameter->add_option("--max-states", max_states, "state enumeration cap");

    auto* c_fvector = app.add_subcommand("fvector", "cubes per dimension of the configuration space");
    add_space(c_fvector, true);
    c_fvector->add_option("--max-states", max_states);
    c_fvector->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* c_euler = app.add_subcommand("euler", "Euler characteristic by enumeration");
    add_space(c_euler, true);
    c_euler->add_option("--max-states", max_states);

    auto* c_series = app.add_subcommand("series", "cube-count generating function coefficients (width 2)");
    c_series->add_option("--order", order, "highest power of x");
    c_series->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));
    c_series->add_option("--out", out_path, "output file (default stdout)");

    auto* c_pip = app.add_subcommand("pip", "the poset with inconsistent pairs behind the space");
    add_space(c_pip, true);
    c_pip->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));
    c_pip->add_option("--out", out_path, "output file (default stdout)");

    auto* c_verify = app.add_subcommand("verify", "run the oracle cross-checks");
    c_verify->add_option("--suite", suite)->check(CLI::IsMember({"small", "full"}));
    c_verify->add_option("--max-states", max_states);

    auto* c_animate = app.add_subcommand("animate", "render a plan as SVG frames");
    add_pair(c_animate);
    c_animate->add_option("--metric", metric)->check(CLI::IsMember({"edge", "cube"}));
    c_animate->add_option("--out", out_path, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        long long cap = state_cap(max_states);
        if (*c_distance) return run_distance(width, from, to, format);
        if (*c_plan) return run_plan(width, from, to, metric, format);
        if (*c_diameter) return run_diameter(width, length, verify_bfs, cap);
        if (*c_fvector) return run_fvector(width, length, cap, format);
        if (*c_euler) return run_euler(width, length, cap);
        if (*c_series) return run_series(order, format, out_path);
        if (*c_pip) return run_pip(width, length, format == "text" ? "dot" : format, out_path);
        if (*c_verify) return run_verify(suite, cap);
        if (*c_animate) return run_animate(width, from, to, metric, out_path);
    } catch (const coralarm::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
