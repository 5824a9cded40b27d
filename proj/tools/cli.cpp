// Copyright 2026 The spto-games Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "spto/builtins.hpp"
#include "spto/classical.hpp"
#include "spto/json_io.hpp"
#include "spto/quantum_strategy.hpp"

namespace spto::cli {

namespace {

bool verbose_logging() {
    const char* v = std::getenv("SPTO_LOG");
    return v != nullptr && std::string(v) != "" && std::string(v) != "0";
}

uint64_t mix_seed(uint64_t seed, uint64_t stream) {
    // splitmix64 step keyed by the stream id
    uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

struct OutputSink {
    std::ostream& fallback;
    std::string path;
    std::ofstream file;

    explicit OutputSink(std::ostream& fb) : fallback(fb) {}
    std::ostream& stream() {
        if (path.empty()) return fallback;
        if (!file.is_open()) {
            file.open(path);
            if (!file) throw ValidationError("cannot open output file: " + path);
        }
        return file;
    }
};

std::string fraction_string(int num, int den) {
    return std::to_string(num) + "/" + std::to_string(den);
}

json corner_table_json(const CornerTable& t) {
    return json{{"a", t.a}, {"b", t.b}, {"c", t.c}, {"d", t.d}, {"e", t.e}};
}

std::array<int, 3> parse_corners(const std::string& text) {
    std::array<int, 3> corners{};
    std::stringstream ss(text);
    std::string part;
    int i = 0;
    while (std::getline(ss, part, ',') && i < 3)
        corners[static_cast<std::size_t>(i++)] = std::stoi(part);
    if (i != 3) throw ValidationError("corners must be three comma-separated indices");
    return corners;
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int v = std::stoi(text);
        return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

void emit(OutputSink& sink, const std::string& text) { sink.stream() << text; }

// ---- play ---------------------------------------------------------------

int cmd_play(const std::string& strategy, int n, const std::string& corners_text,
             const std::string& instance_path, int rounds, int sites, uint64_t seed, int jobs,
             const std::string& format, const std::string& trace_path, OutputSink& sink) {
    json report;
    report["command"] = "play";
    report["strategy"] = strategy;
    report["seed"] = seed;

    if (strategy == "classical-best") {
        const DeterministicSearchResult res = best_deterministic_triangle(jobs);
        report["max_win"] = fraction_string(res.max_wins, 8);
        report["max_win_value"] = res.max_win;
        report["evaluations"] = res.evaluations;
        report["maximizer_count"] = res.maximizer_count;
        report["witness"] = json{{"player0", corner_table_json(res.witness.tables[0])},
                                 {"player1", corner_table_json(res.witness.tables[1])},
                                 {"player2", corner_table_json(res.witness.tables[2])}};
        if (format == "csv") {
            emit(sink, "strategy,max_win,evaluations\n");
            std::ostringstream row;
            row << strategy << "," << res.max_win << "," << res.evaluations << "\n";
            emit(sink, row.str());
        } else {
            emit(sink, report.dump(2) + "\n");
        }
        return 0;
    }

    GameInstance base;
    if (!instance_path.empty()) {
        base = game_instance_from_json(load_json_file(instance_path));
    } else {
        std::array<int, 3> corners{0, n / 3, 2 * n / 3};
        if (!corners_text.empty()) corners = parse_corners(corners_text);
        if (n == 3) corners = {0, 1, 2};
        base = GameInstance::with_corner_inputs(n, corners, {0, 0, 0});
    }

    json per_input = json::array();
    double overall_wins = 0, overall_rounds = 0;

    if (strategy == "quantum-cluster") {
        const ContextPair ctx = build_contexts(
            BlockOperators::cluster(), z2xz2_element("z"), z2xz2_element("x"));
        const auto family = input_family(base);
        std::ofstream trace_file;
        if (!trace_path.empty()) {
            trace_file.open(trace_path);
            if (!trace_file) throw ValidationError("cannot open trace file: " + trace_path);
        }
        for (std::size_t i = 0; i < family.size(); ++i) {
            int wins = 0;
            for (int r = 0; r < rounds; ++r) {
                const uint64_t round_seed = mix_seed(seed, i * static_cast<uint64_t>(rounds) +
                                                               static_cast<uint64_t>(r));
                std::vector<RoundTraceEntry> trace;
                const Transcript tr = play_round(family[i], ctx, round_seed,
                                                 trace_file.is_open() ? &trace : nullptr);
                if (check_win(family[i], tr).win) ++wins;
                for (const RoundTraceEntry& t : trace) {
                    const auto cx = family[i].corner_inputs();
                    trace_file << json{{"x", {cx[0], cx[1], cx[2]}},
                                       {"round", r},
                                       {"player", t.player},
                                       {"slot", t.slot},
                                       {"op", t.op},
                                       {"outcome", t.outcome}}
                                      .dump()
                               << "\n";
                }
            }
            const auto cx = family[i].corner_inputs();
            per_input.push_back(json{{"x", {cx[0], cx[1], cx[2]}},
                                     {"rounds", rounds},
                                     {"wins", wins},
                                     {"win_rate", static_cast<double>(wins) / rounds}});
            overall_wins += wins;
            overall_rounds += rounds;
        }
    } else if (strategy == "classical-nonlocal") {
        const auto family = input_family(base);
        for (const GameInstance& member : family) {
            const bool win = check_win(member, nonlocal_perfect_strategy(member)).win;
            const auto cx = member.corner_inputs();
            per_input.push_back(json{{"x", {cx[0], cx[1], cx[2]}},
                                     {"rounds", 1},
                                     {"wins", win ? 1 : 0},
                                     {"win_rate", win ? 1.0 : 0.0}});
            overall_wins += win ? 1 : 0;
            overall_rounds += 1;
        }
    } else if (strategy == "aklt-analytic") {
        const BuiltinState aklt = builtin_state("aklt");
        double s_min = 1.0;
        for (const char* label : {"z", "x", "y"}) {
            const int N = sites;
            const double s = string_order(aklt.tensor, aklt.sym, aklt.bounds,
                                          z2xz2_element(label), 0, N - 2, N);
            s_min = std::min(s_min, s);
        }
        const double bound = win_probability_bound(s_min);
        report["sites"] = sites;
        report["string_order_min"] = s_min;
        report["win_rate"] = bound;
        if (format == "csv") {
            emit(sink, "strategy,sites,string_order_min,win_rate\n");
            std::ostringstream row;
            row.precision(12);
            row << strategy << "," << sites << "," << s_min << "," << bound << "\n";
            emit(sink, row.str());
        } else {
            emit(sink, report.dump(2) + "\n");
        }
        return 0;
    } else {
        throw ValidationError("unknown strategy: " + strategy +
                              " (use quantum-cluster, classical-best, classical-nonlocal or "
                              "aklt-analytic)");
    }

    report["n"] = base.n;
    report["corners"] = base.corners;
    report["per_input"] = per_input;
    report["win_rate"] = overall_rounds > 0 ? overall_wins / overall_rounds : 0.0;
    if (format == "csv") {
        emit(sink, "strategy,x,rounds,wins,win_rate\n");
        for (const auto& row : per_input) {
            std::ostringstream line;
            line << strategy << "," << row["x"][0].get<int>() << row["x"][1].get<int>()
                 << row["x"][2].get<int>() << "," << row["rounds"].get<int>() << ","
                 << row["wins"].get<int>() << "," << row["win_rate"].get<double>() << "\n";
            emit(sink, line.str());
        }
    } else {
        emit(sink, report.dump(2) + "\n");
    }
    return 0;
}

// ---- order --------------------------------------------------------------

int cmd_order(const std::string& tensor_name, const std::string& symmetry_path,
              const std::string& g_label, const std::string& h_label,
              const std::string& range_text, const std::string& report_filter,
              const std::string& format, OutputSink& sink, std::ostream& err) {
    MPSTensor tensor;
    SymmetryData sym;
    BoundaryOperatorPair bounds;
    if (tensor_name == "aklt" || tensor_name == "cluster_fixed_point") {
        const BuiltinState st = builtin_state(tensor_name);
        tensor = st.tensor;
        sym = st.sym;
        bounds = st.bounds;
    } else {
        tensor = mps_tensor_from_json(load_json_file(tensor_name));
        if (symmetry_path.empty())
            throw ValidationError("user tensors need --symmetry with u(g) and V(g) data");
        sym = symmetry_from_json(load_json_file(symmetry_path));
        const double resid = sym.push_through_residual(tensor);
        if (resid > 1e-10) {
            err << "push-through validation failed: residual " << resid << "\n";
            throw ValidationError("tensor fails push-through validation");
        }
        tensor = normalized(tensor);
        // the sweep evaluates the fixed-point protocol on the generic state,
        // so the boundary operators come from the phase's fixed point: pick
        // the operator set matching the on-site dimension, or construct them
        // directly when the tensor itself is a fixed point
        if (tensor.d == 3) {
            bounds = builtin_state("aklt").bounds;
        } else if (tensor.d == 4) {
            bounds = builtin_state("cluster_fixed_point").bounds;
        } else {
            bool built = false;
            for (int l = 1; l <= 4 && !built; ++l) {
                try {
                    bounds = boundary_operators(tensor, l, sym);
                    built = true;
                } catch (const ValidationError&) {
                }
            }
            if (!built)
                throw ValidationError(
                    "no fixed-point boundary operators available for this on-site dimension");
            // a user tensor may run its bond contraction in either direction;
            // the constructed pair's labels follow that choice, so orient them
            // by which assignment actually terminates the string on this state
            GroupElement g0 = GroupElement::from_index(sym.group, 1);
            const int n_probe = 2 * bounds.support + 2;
            const double forward =
                std::abs(string_order(tensor, sym, bounds, g0, 0, bounds.support + 1, n_probe));
            BoundaryOperatorPair swapped = bounds;
            std::swap(swapped.VL, swapped.VR);
            const double mirrored =
                std::abs(string_order(tensor, sym, swapped, g0, 0, bounds.support + 1, n_probe));
            if (mirrored > forward + 1e-9) bounds = std::move(swapped);
        }
    }

    const GroupElement g = z2xz2_element(g_label);
    const GroupElement h = z2xz2_element(h_label);
    const auto [n_lo, n_hi] = parse_range(range_text);
    const int l = bounds.support;
    if (n_lo < 2 * l + 1) throw ValidationError("chain too short for the boundary blocks");

    const TransferSpectrum spec = transfer_spectrum(tensor);
    const double xi = correlation_length(tensor);

    json rows = json::array();
    for (int N = n_lo; N <= n_hi; ++N) {
        const int j = 0, k = N - l;
        const double s = string_order(tensor, sym, bounds, g, j, k, N);
        const cplx t = twisted_string_order(tensor, sym, bounds, g, h, j, k, N);
        rows.push_back(json{{"N", N},
                            {"S", s},
                            {"T_re", t.real()},
                            {"T_im", t.imag()},
                            {"xi", xi},
                            {"win_bound", win_probability_bound(std::min(1.0, s))}});
    }

    json report;
    report["command"] = "order";
    report["tensor"] = tensor_name;
    report["g"] = g_label;
    report["h"] = h_label;
    report["lambda2_abs"] = std::abs(spec.lambda2) / std::abs(spec.lambda1);
    report["xi"] = xi;
    if (report_filter == "all") {
        report["rows"] = rows;
    } else if (report_filter == "xi") {
        // length-independent quantities only
    } else {
        json trimmed = json::array();
        for (const auto& row : rows)
            trimmed.push_back(json{{"N", row["N"]}, {report_filter, row[report_filter]}});
        report["rows"] = trimmed;
    }

    if (format == "csv") {
        emit(sink, "N,S,T_re,T_im,xi,win_bound\n");
        for (const auto& row : rows) {
            std::ostringstream line;
            line.precision(12);
            line << row["N"].get<int>() << "," << row["S"].get<double>() << ","
                 << row["T_re"].get<double>() << "," << row["T_im"].get<double>() << ","
                 << row["xi"].get<double>() << "," << row["win_bound"].get<double>() << "\n";
            emit(sink, line.str());
        }
    } else {
        emit(sink, report.dump(2) + "\n");
    }
    return 0;
}

// ---- separate -----------------------------------------------------------

int cmd_separate(const std::string& circuit_path, int N, uint64_t budget, int stride,
                 const std::string& family_of, uint64_t seed, const std::string& format,
                 OutputSink& sink) {
    const BooleanCircuit circuit = circuit_from_json(load_json_file(circuit_path));
    const ConeStats cones = cone_statistics(circuit);

    std::vector<GridInstance> stream;
    if (!family_of.empty()) {
        // restrict the search to the 8-input family of one instance (a .json
        // object or the first line of a gen-instances .jsonl stream)
        std::ifstream in(family_of);
        if (!in) throw ValidationError("cannot open file: " + family_of);
        std::string line;
        std::getline(in, line);
        const GridInstance geom = grid_instance_from_json(json::parse(line));
        for (unsigned bits = 0; bits < 8; ++bits) {
            GridInstance probe = geom;
            probe.x = {static_cast<uint8_t>((bits >> 2) & 1u),
                       static_cast<uint8_t>((bits >> 1) & 1u),
                       static_cast<uint8_t>(bits & 1u)};
            stream.push_back(probe);
        }
    } else {
        HardInstanceConfig cfg;
        cfg.N = N;
        cfg.budget = budget;
        cfg.seed = seed;
        cfg.corner_stride = stride;
        stream = generate_hard_instances(cfg);
    }

    const auto witness = find_failing_instance(circuit, stream, seed);

    json report;
    report["command"] = "separate";
    report["circuit"] = circuit_path;
    report["N"] = N;
    report["budget"] = budget;
    report["instances_in_stream"] = stream.size();
    report["cone_stats"] = json{{"max_backward_cone", cones.max_backward_cone},
                                {"bound_K_pow_D", cones.bound},
                                {"within_bound", cones.within_bound}};
    if (witness) {
        report["witness_found"] = true;
        report["instances_checked"] = witness->instances_checked;
        report["witness"] = json{{"instance", to_json(witness->instance)},
                                 {"losing_x", witness->losing_x},
                                 {"transcript", to_json(witness->transcript)}};
        json violated = json::array();
        for (Condition c : witness->verdict.violated) violated.push_back(condition_name(c));
        report["witness"]["violated"] = violated;
    } else {
        report["witness_found"] = false;
        // distinguish "conditions never held" from "held but never lost"
        bool any_hold = false;
        for (const GridInstance& inst : stream)
            if (check_failure(circuit, inst).holds) {
                any_hold = true;
                break;
            }
        report["reason"] = any_hold ? "no losing input found on qualifying instances"
                                    : "light cones intersect on every candidate";
    }

    if (format == "csv") {
        emit(sink, "found,instances_checked,max_backward_cone,bound\n");
        std::ostringstream line;
        line << (witness ? 1 : 0) << "," << (witness ? witness->instances_checked : 0) << ","
             << cones.max_backward_cone << "," << cones.bound << "\n";
        emit(sink, line.str());
    } else {
        emit(sink, report.dump(2) + "\n");
    }
    return 0;
}

// ---- gen-instances --------------------------------------------------------

int cmd_gen_instances(int N, uint64_t budget, int stride, int paths, uint64_t seed,
                      const std::string& format, OutputSink& sink) {
    HardInstanceConfig cfg;
    cfg.N = N;
    cfg.budget = budget;
    cfg.seed = seed;
    cfg.corner_stride = stride;
    cfg.path_choices = paths;
    HardInstanceStats stats;
    const auto stream = generate_hard_instances(cfg, &stats);
    if (format == "csv") {
        emit(sink, "N,alpha,beta,gamma,xa,xb,xg,cycle\n");
        for (const GridInstance& inst : stream) {
            std::ostringstream line;
            line << inst.N << "," << inst.corners[0] << "," << inst.corners[1] << ","
                 << inst.corners[2] << "," << int(inst.x[0]) << "," << int(inst.x[1]) << ","
                 << int(inst.x[2]) << ",";
            for (std::size_t i = 0; i < inst.cycle.size(); ++i)
                line << (i ? ";" : "") << inst.cycle[i];
            line << "\n";
            emit(sink, line.str());
        }
    } else {
        for (const GridInstance& inst : stream) emit(sink, to_json(inst).dump() + "\n");
    }
    if (verbose_logging())
        std::cerr << "gen-instances: " << stats.emitted << " instances from " << stats.geometries
                  << " geometries (" << stats.skipped_triples << " skipped)\n";
    return 0;
}

// ---- gen-circuit ----------------------------------------------------------

int cmd_gen_circuit(const std::string& kind, int N, int K, int D, uint64_t seed,
                    const std::string& instance_path, OutputSink& sink) {
    BooleanCircuit circuit;
    if (kind == "local-shallow") {
        circuit = make_local_shallow_circuit(N);
    } else if (kind == "perfect-nonlocal") {
        GridInstance inst;
        if (!instance_path.empty()) {
            inst = grid_instance_from_json(load_json_file(instance_path));
        } else {
            HardInstanceConfig cfg;
            cfg.N = N;
            cfg.budget = 1;
            const auto stream = generate_hard_instances(cfg);
            if (stream.empty()) throw ValidationError("no instance available to wire");
            inst = stream.front();
        }
        circuit = make_perfect_nonlocal_circuit(inst);
    } else if (kind == "random") {
        circuit = make_random_layered_circuit(N, K, D, seed);
    } else if (kind == "tree") {
        circuit = make_tree_circuit(K, D);
    } else {
        throw ValidationError(
            "unknown circuit kind (use local-shallow, perfect-nonlocal, random or tree)");
    }
    emit(sink, to_json(circuit).dump() + "\n");
    return 0;
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(OutputSink& sink) {
    int failures = 0;
    auto check = [&](const std::string& name, bool ok) {
        emit(sink, std::string(ok ? "ok   " : "FAIL ") + name + "\n");
        if (!ok) ++failures;
    };

    {
        const CocycleTable table = CocycleTable::pauli_z2xz2();
        check("group: builtin Pauli cocycle satisfies the 2-cocycle condition",
              verify_cocycle(table).ok);
        bool twist_ok = true;
        const GroupDescriptor G = GroupDescriptor::z2xz2();
        for (std::size_t gi = 0; gi < 4; ++gi)
            for (std::size_t hi = 0; hi < 4; ++hi) {
                const auto g = GroupElement::from_index(G, gi);
                const auto h = GroupElement::from_index(G, hi);
                const int a = g.components()[0], b = g.components()[1];
                const int c = h.components()[0], d = h.components()[1];
                const cplx expect = ((a * d + b * c) % 2) ? cplx{-1, 0} : cplx{1, 0};
                if (std::abs(twist_phase(table, g, h) - expect) > 1e-12) twist_ok = false;
            }
        check("group: twist table equals (-1)^(ad+bc)", twist_ok);
    }
    {
        const GameInstance inst = GameInstance::with_corner_inputs(3, {0, 1, 2}, {0, 0, 0});
        const auto five = condition_operators(inst, BlockOperators::cluster(),
                                              z2xz2_element("z"), z2xz2_element("x"));
        StabilizerTableau st = StabilizerTableau::cluster_ring(6);
        const bool signs = st.expectation(five[0]) == 1 && st.expectation(five[1]) == 1 &&
                           st.expectation(five[2]) == -1 && st.expectation(five[3]) == -1 &&
                           st.expectation(five[4]) == -1;
        check("stabilizer: five condition operators carry signs +,+,-,-,-", signs);

        const ContextPair ctx =
            build_contexts(BlockOperators::cluster(), z2xz2_element("z"), z2xz2_element("x"));
        bool wins = true;
        for (const GameInstance& member : input_family(inst))
            for (uint64_t s = 0; s < 50; ++s)
                wins = wins && check_win(member, play_round(member, ctx, s)).win;
        check("stabilizer: 400 quantum rounds all win (n = 3)", wins);
    }
    {
        const DeterministicSearchResult res = best_deterministic_triangle();
        check("classical: exhaustive deterministic bound is exactly 7/8",
              res.max_wins == 7 && res.maximizer_count == 512);
        const AffineSearchResult aff = best_edge_restricted_affine(6, {0, 2, 4});
        check("classical: restricted affine model tops out at 7/8",
              aff.max_wins == 7 && !aff.perfect_possible);
    }
    {
        const BuiltinState aklt = builtin_state("aklt");
        check("mps: AKLT push-through residual < 1e-10",
              aklt.sym.push_through_residual(aklt.tensor) < 1e-10);
        const double xi = correlation_length(aklt.tensor);
        check("mps: AKLT correlation length equals 1/ln 3",
              std::abs(xi - 1.0 / std::log(3.0)) < 1e-12);
        const double c_plus = std::sqrt(2.0 / 3) + 2.0 / 3;
        const double c_minus = std::sqrt(2.0 / 3) - 2.0 / 3;
        const int N = 8;
        const double closed = 4.0 / 9 * c_plus * c_plus +
                              4.0 / 9 * c_minus * c_minus * std::pow(-1.0 / 3.0, N - 4);
        const double norm = 1.0 + 3.0 * std::pow(-1.0 / 3.0, N);
        const double s = string_order(aklt.tensor, aklt.sym, aklt.bounds, z2xz2_element("z"), 0,
                                      N - 2, N);
        check("mps: AKLT string order matches the closed form (N = 8)",
              std::abs(s * norm - closed) < 1e-12);
        const GroupElement g = z2xz2_element("z"), h = z2xz2_element("x");
        const cplx t = twisted_string_order(aklt.tensor, aklt.sym, aklt.bounds, g, h, 0, N - 2, N);
        check("mps: twisted/plain ratio equals the twist phase", std::abs(t + s) < 1e-10);
        const auto ops = string_order_ops(aklt.sym, aklt.bounds, g, 0, 4, 6);
        check("mps: chain agrees with the dense oracle",
              std::abs(expectation_chain(aklt.tensor, 6, ops) -
                       dense_expectation(aklt.tensor, 6, ops)) < 1e-10);
    }
    {
        const BooleanCircuit tree = make_tree_circuit(2, 3);
        const ConeStats st = cone_statistics(tree);
        check("lightcone: K-ary tree saturates the K^D bound",
              st.within_bound && st.max_backward_cone == 8);
        const BooleanCircuit rnd = make_random_layered_circuit(5, 3, 3, 7);
        bool transpose_ok = true;
        for (int x = 0; x < 25 && transpose_ok; ++x)
            for (int y : forward_cone(rnd, x)) {
                const auto back = backward_cone(rnd, y);
                if (std::find(back.begin(), back.end(), x) == back.end()) transpose_ok = false;
            }
        check("lightcone: forward/backward cones are transpose-consistent", transpose_ok);
    }

    emit(sink, failures == 0 ? "all checks passed\n"
                             : std::to_string(failures) + " check(s) failed\n");
    return failures == 0 ? 0 : 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"triangle-game and SPTO string-order toolkit"};
    app.require_subcommand(1);
    // free the short -h: the order subcommand uses --h for the twist element
    app.set_help_flag("--help", "print help");

    uint64_t seed = 0;
    std::string format = "json";
    int jobs = 1;
    std::string out_path;
    app.add_option("--seed", seed, "deterministic seed for all randomness");
    app.add_option("--format", format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--jobs", jobs, "parallel worker count")->check(CLI::PositiveNumber);
    app.add_option("--out", out_path, "write the report to this file");

    // play
    auto* play = app.add_subcommand("play", "play the triangle game with a chosen strategy");
    play->fallthrough();
    std::string strategy = "quantum-cluster";
    int n = 3, rounds = 100, sites = 100;
    std::string corners_text;
    play->add_option("--strategy", strategy,
                     "quantum-cluster | classical-best | classical-nonlocal | aklt-analytic");
    play->add_option("--n", n, "player count");
    play->add_option("--corners", corners_text, "comma-separated corner indices");
    std::string instance_path;
    play->add_option("--instance", instance_path, "game instance JSON file");
    play->add_option("--rounds", rounds, "stabilizer rounds per input")->check(CLI::PositiveNumber);
    play->add_option("--sites", sites, "chain length for aklt-analytic");
    std::string trace_path;
    play->add_option("--trace", trace_path, "write a per-round (operator, outcome) JSONL log");

    // order
    auto* order = app.add_subcommand("order", "string order parameter sweeps");
    order->set_help_flag("--help", "print help");
    order->fallthrough();
    std::string tensor_name = "aklt", symmetry_path, g_label = "z", h_label = "x",
                range_text = "6..12";
    order->add_option("--tensor", tensor_name, "aklt | cluster_fixed_point | tensor JSON path");
    order->add_option("--symmetry", symmetry_path, "symmetry JSON for user tensors");
    order->add_option("--g", g_label, "group element for the string (e, x, y, z)");
    order->add_option("--h", h_label, "group element for the twist insertion");
    order->add_option("--N", range_text, "chain length or range lo..hi");
    std::string report_filter = "all";
    order->add_option("--report", report_filter, "all | S | T_re | xi | win_bound")
        ->check(CLI::IsMember({"all", "S", "T_re", "T_im", "xi", "win_bound"}));

    // separate
    auto* separate = app.add_subcommand("separate", "search for a shallow-circuit failure witness");
    std::string circuit_path;
    int grid_n = 27, stride = 0;
    uint64_t budget = 10000;
    separate->fallthrough();
    separate->add_option("--circuit", circuit_path, "circuit JSON path")->required();
    separate->add_option("--N", grid_n, "grid side");
    separate->add_option("--budget", budget, "instance budget");
    separate->add_option("--stride", stride, "corner enumeration stride (0 = box side)");
    std::string family_of;
    separate->add_option("--family-of", family_of,
                         "search only the 8-input family of this grid instance JSON");

    // gen-instances
    auto* gen = app.add_subcommand("gen-instances", "emit hard-instance stream as JSON lines");
    int gen_n = 27, gen_stride = 0, gen_paths = 1;
    uint64_t gen_budget = 100;
    gen->fallthrough();
    gen->add_option("--N", gen_n, "grid side");
    gen->add_option("--budget", gen_budget, "max instances");
    gen->add_option("--stride", gen_stride, "corner enumeration stride (0 = box side)");
    gen->add_option("--paths", gen_paths, "path routing variants per corner triple");

    // gen-circuit
    auto* genc = app.add_subcommand("gen-circuit", "emit a reference circuit as JSON");
    genc->fallthrough();
    std::string circuit_kind = "local-shallow", wire_instance_path;
    int genc_n = 27, genc_k = 2, genc_d = 2;
    genc->add_option("--kind", circuit_kind,
                     "local-shallow | perfect-nonlocal | random | tree");
    genc->add_option("--N", genc_n, "grid side");
    genc->add_option("--K", genc_k, "fan-in bound (random/tree)");
    genc->add_option("--D", genc_d, "depth (random/tree)");
    genc->add_option("--instance", wire_instance_path,
                     "grid instance JSON to wire (perfect-nonlocal)");

    // verify
    app.add_subcommand("verify", "run the cross-module invariant battery")->fallthrough();

    std::vector<std::string> argv_like = args;
    std::reverse(argv_like.begin(), argv_like.end());
    try {
        app.parse(argv_like);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "argument error: " << e.what() << "\n";
        return 1;
    }

    OutputSink sink(out);
    sink.path = out_path;

    try {
        if (app.got_subcommand("play"))
            return cmd_play(strategy, n, corners_text, instance_path, rounds, sites, seed,
                            jobs, format, trace_path, sink);
        if (app.got_subcommand("order"))
            return cmd_order(tensor_name, symmetry_path, g_label, h_label, range_text,
                             report_filter, format, sink, err);
        if (app.got_subcommand("separate"))
            return cmd_separate(circuit_path, grid_n, budget, stride, family_of, seed, format,
                                sink);
        if (app.got_subcommand("gen-instances"))
            return cmd_gen_instances(gen_n, gen_budget, gen_stride, gen_paths, seed, format, sink);
        if (app.got_subcommand("gen-circuit"))
            return cmd_gen_circuit(circuit_kind, genc_n, genc_k, genc_d, seed,
                                   wire_instance_path, sink);
        if (app.got_subcommand("verify")) return cmd_verify(sink);
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand given\n";
    return 1;
}

}  // namespace spto::cli
