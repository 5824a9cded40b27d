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
//
// End-to-end acceptance suite: one line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "spto/builtins.hpp"
#include "spto/classical.hpp"
#include "spto/json_io.hpp"
#include "spto/quantum_strategy.hpp"

using namespace spto;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << number << ": " << name;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << "\n";
    if (!pass) ++g_failures;
}

const double kCPlus2 = std::pow(std::sqrt(2.0 / 3) + 2.0 / 3, 2);

double closed_form_s(int N) {
    const double c_minus = std::sqrt(2.0 / 3) - 2.0 / 3;
    return 4.0 / 9 * kCPlus2 + 4.0 / 9 * c_minus * c_minus * std::pow(-1.0 / 3.0, N - 4);
}
double chain_norm(int N) { return 1.0 + 3.0 * std::pow(-1.0 / 3.0, N); }

// 1. classical bound by exhaustive search, < 5 s single-threaded
void criterion_1() {
    const auto start = std::chrono::steady_clock::now();
    const DeterministicSearchResult res = best_deterministic_triangle(1);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream detail;
    detail << "max " << res.max_wins << "/8, " << res.evaluations << " evaluations, "
           << res.maximizer_count << " maximizers, " << secs << " s";
    const GameInstance base = GameInstance::with_corner_inputs(3, {0, 1, 2}, {0, 0, 0});
    const bool pass = res.max_wins == 7 && res.evaluations == 32768u * 8u && secs < 5.0 &&
                      res.witness.wins_over_family(base) == 7;
    report(1, "exhaustive deterministic bound is exactly 7/8", pass, detail.str());
}

// 2. quantum perfection over 1000 seeded rounds per input, n in {3, 10, 25}
void criterion_2() {
    const ContextPair ctx =
        build_contexts(BlockOperators::cluster(), z2xz2_element("z"), z2xz2_element("x"));
    uint64_t wins = 0, total = 0;
    for (int n : {3, 10, 25}) {
        const GameInstance base =
            GameInstance::with_corner_inputs(n, {0, n / 3, 2 * n / 3}, {0, 0, 0});
        for (const GameInstance& member : input_family(base)) {
            for (uint64_t r = 0; r < 1000; ++r) {
                const uint64_t seed = 1000003ull * (total + 1) + r;
                if (check_win(member, play_round(member, ctx, seed)).win) ++wins;
                ++total;
            }
        }
    }
    std::ostringstream detail;
    detail << wins << "/" << total << " rounds won";
    report(2, "stabilizer strategy wins every round on n = 3, 10, 25", wins == total,
           detail.str());
}

// 3. AKLT string order vs the closed form, and the analytic win rate
void criterion_3() {
    const BuiltinState aklt = builtin_state("aklt");
    const GroupElement z = z2xz2_element("z");
    bool match = true;
    double worst = 0;
    for (int N = 6; N <= 20; ++N) {
        const double s = string_order(aklt.tensor, aklt.sym, aklt.bounds, z, 0, N - 2, N);
        // the SM closed form omits the Tr(E^N) normalization; the module
        // normalizes, so compare s * Tr(E^N) against that form
        const double resid = std::abs(s * chain_norm(N) - closed_form_s(N));
        worst = std::max(worst, resid);
        if (resid > 1e-12) match = false;
    }

    const double s_inf = 4.0 / 9 * kCPlus2;
    const double s_far = string_order(aklt.tensor, aklt.sym, aklt.bounds, z, 0, 38, 40);
    const bool limit_ok = std::abs(s_far - s_inf) < 1e-12;

    // cmd_play aklt-analytic --sites 100
    std::ostringstream out, err;
    const int code = spto::cli::run(
        {"play", "--strategy", "aklt-analytic", "--sites", "100"}, out, err);
    bool cli_ok = code == 0;
    double reported = 0;
    if (cli_ok) {
        const json j = json::parse(out.str());
        reported = j["win_rate"].get<double>();
        const double expect = 13.0 / 16 + kCPlus2 / 12;
        cli_ok = std::abs(reported - expect) < 1e-9 && std::abs(reported - 0.996) < 5e-4;
    }
    std::ostringstream detail;
    detail << "worst closed-form residual " << worst << ", limit " << s_inf << ", analytic rate "
           << reported;
    report(3, "AKLT string order matches the closed form; analytic rate = 0.996",
           match && limit_ok && cli_ok, detail.str());
}

// 4. transfer spectra and fixed-point idempotence
void criterion_4() {
    const BuiltinState aklt = builtin_state("aklt");
    const Eigen::MatrixXcd E = identity_transfer(aklt.tensor);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(E);
    std::vector<double> mods;
    for (Eigen::Index i = 0; i < 4; ++i) mods.push_back(std::abs(es.eigenvalues()(i)));
    std::sort(mods.begin(), mods.end(), std::greater<double>());
    bool spectra = std::abs(mods[0] - 1.0) < 1e-12;
    for (int i = 1; i < 4; ++i)
        spectra = spectra && std::abs(mods[static_cast<std::size_t>(i)] - 1.0 / 3) < 1e-12;
    // eigenvalue moduli are {1, 1/3, 1/3, 1/3}; the subleading sign is -1/3,
    // consistent with the closed form's (-1/3)^(N-4)
    const TransferSpectrum spec = transfer_spectrum(aklt.tensor);
    spectra = spectra && std::abs(spec.lambda2 - cplx{-1.0 / 3, 0}) < 1e-12;

    const double xi = correlation_length(aklt.tensor);
    const bool xi_ok = std::abs(xi - 1.0 / std::log(3.0)) < 1e-12;

    const Eigen::MatrixXcd fix = fixed_point_transfer(aklt.tensor);
    const bool idem = (fix * fix - fix).cwiseAbs().maxCoeff() < 1e-12;

    std::ostringstream detail;
    detail << "|lambda| = {" << mods[0] << ", " << mods[1] << ", " << mods[2] << ", " << mods[3]
           << "}, xi = " << xi;
    report(4, "AKLT transfer spectrum, xi = 1/ln 3, idempotent fixed point",
           spectra && xi_ok && idem, detail.str());
}

// 5. boundary-operator algebra for both builtins
void criterion_5() {
    bool pass = true;
    std::string note;
    for (const char* name : {"aklt", "cluster_fixed_point"}) {
        const BuiltinState st = builtin_state(name);
        const auto& B = st.bounds;
        const GroupDescriptor G = GroupDescriptor::z2xz2();
        const Eigen::MatrixXcd& P = B.range_projector;

        std::array<std::array<cplx, 4>, 4> w{};
        for (std::size_t gi = 0; gi < 4 && pass; ++gi)
            for (std::size_t hi = 0; hi < 4; ++hi) {
                const std::size_t ki =
                    multiply(GroupElement::from_index(G, gi), GroupElement::from_index(G, hi))
                        .index();
                const Eigen::MatrixXcd prod = B.VR[gi] * B.VR[hi];
                const cplx lambda = (B.VR[ki].adjoint() * prod).trace() / B.VR[ki].squaredNorm();
                w[gi][hi] = snap_unit_phase(lambda);
                if ((prod - lambda * B.VR[ki]).cwiseAbs().maxCoeff() > 1e-10) pass = false;
            }
        // the V^L conjugate-cocycle relation in the argument order each
        // builtin realizes (the two operator sets use opposite orders)
        bool literal = true, proof = true;
        for (std::size_t gi = 0; gi < 4; ++gi)
            for (std::size_t hi = 0; hi < 4; ++hi) {
                const std::size_t ki =
                    multiply(GroupElement::from_index(G, gi), GroupElement::from_index(G, hi))
                        .index();
                const Eigen::MatrixXcd prod = B.VL[gi] * B.VL[hi];
                if ((prod - std::conj(w[gi][hi]) * B.VL[ki]).cwiseAbs().maxCoeff() > 1e-10)
                    literal = false;
                if ((prod - std::conj(w[hi][gi]) * B.VL[ki]).cwiseAbs().maxCoeff() > 1e-10)
                    proof = false;
            }
        if (!literal && !proof) pass = false;
        for (std::size_t gi = 0; gi < 4; ++gi) {
            for (std::size_t hi = 0; hi < 4; ++hi)
                if ((B.VR[gi] * B.VL[hi] - B.VL[hi] * B.VR[gi]).cwiseAbs().maxCoeff() > 1e-10)
                    pass = false;
            // V^R(g)V^L(g) = w(g,g) u(g) with the extracted cocycle's
            // diagonal (w(g,g) = 1 except on the cluster's y element)
            const Eigen::MatrixXcd ug = kron_power(st.sym.u[gi], B.support);
            if ((B.VR[gi] * B.VL[gi] - w[gi][gi] * (ug * P)).cwiseAbs().maxCoeff() > 1e-10)
                pass = false;
        }
    }

    // the cluster boundary pair, exactly as Pauli strings
    const BuiltinState cfp = builtin_state("cluster_fixed_point");
    const BlockOperators pauli_ops = BlockOperators::cluster();
    for (std::size_t gi = 0; gi < 4; ++gi) {
        if ((cfp.bounds.VR[gi] - pauli_ops.VR[gi].to_matrix()).cwiseAbs().maxCoeff() > 1e-14)
            pass = false;
        if ((cfp.bounds.VL[gi] - pauli_ops.VL[gi].to_matrix()).cwiseAbs().maxCoeff() > 1e-14)
            pass = false;
    }

    // AKLT spin-observable form vs Cartesian matrices
    const BuiltinState aklt = builtin_state("aklt");
    for (std::size_t gi = 1; gi < 4; ++gi) {
        const int mu = gi == 1 ? 2 : (gi == 2 ? 0 : 1);
        if ((aklt_spin_form_boundary(mu, true) - aklt.bounds.VL[gi]).cwiseAbs().maxCoeff() > 1e-12)
            pass = false;
        if ((aklt_spin_form_boundary(mu, false) - aklt.bounds.VR[gi]).cwiseAbs().maxCoeff() >
            1e-12)
            pass = false;
    }
    report(5, "boundary operator algebra; cluster Pauli and AKLT spin forms", pass);
}

// 6. oracle equivalence: chain vs dense contraction on randomized placements
void criterion_6() {
    std::mt19937_64 rng(0xACCE55);
    const BuiltinState aklt = builtin_state("aklt");
    const BuiltinState cfp = builtin_state("cluster_fixed_point");
    int checked = 0;
    double worst = 0;
    auto compare = [&](const MPSTensor& A, int N, const std::vector<ChainOp>& ops) {
        const cplx a = expectation_chain(A, N, ops);
        const cplx b = dense_expectation(A, N, ops);
        worst = std::max(worst, std::abs(a - b));
        ++checked;
    };

    // string and twisted-string assemblies at random endpoints
    for (int trial = 0; trial < 20; ++trial) {
        const int N = 6 + static_cast<int>(rng() % 3);
        const int j = static_cast<int>(rng() % 2);
        const int k = j + 2 + static_cast<int>(rng() % static_cast<uint64_t>(N - j - 3));
        const GroupElement g = GroupElement::from_index(GroupDescriptor::z2xz2(), 1 + rng() % 3);
        const GroupElement h = GroupElement::from_index(GroupDescriptor::z2xz2(), 1 + rng() % 3);
        compare(aklt.tensor, N, string_order_ops(aklt.sym, aklt.bounds, g, j, k, N));
        compare(aklt.tensor, N, twisted_string_order_ops(aklt.sym, aklt.bounds, g, h, j, k, N));
    }
    for (int trial = 0; trial < 6; ++trial) {
        const int N = 4 + static_cast<int>(rng() % 3);
        const int j = 0, k = 1 + static_cast<int>(rng() % static_cast<uint64_t>(N - 1));
        const GroupElement g = GroupElement::from_index(GroupDescriptor::z2xz2(), 1 + rng() % 3);
        const GroupElement h = GroupElement::from_index(GroupDescriptor::z2xz2(), 1 + rng() % 3);
        compare(cfp.tensor, N, string_order_ops(cfp.sym, cfp.bounds, g, j, k, N));
        compare(cfp.tensor, N, twisted_string_order_ops(cfp.sym, cfp.bounds, g, h, j, k, N));
    }
    // random single-site operators
    for (int trial = 0; trial < 20; ++trial) {
        const bool use_aklt = (trial % 2) == 0;
        const MPSTensor& A = use_aklt ? aklt.tensor : cfp.tensor;
        const int N = use_aklt ? 8 : 6;
        Eigen::MatrixXcd op(A.d, A.d);
        for (int r = 0; r < A.d; ++r)
            for (int c = 0; c < A.d; ++c)
                op(r, c) = cplx{std::uniform_real_distribution<double>(-1, 1)(rng),
                                std::uniform_real_distribution<double>(-1, 1)(rng)};
        compare(A, N, {ChainOp{static_cast<int>(rng() % static_cast<uint64_t>(N)), 1, op}});
    }

    std::ostringstream detail;
    detail << checked << " placements, worst deviation " << worst;
    report(6, "transfer-matrix expectations equal dense contraction to 1e-10",
           checked >= 50 && worst < 1e-10, detail.str());
}

// 7. twist phases and the <T>/<S> ratio on AKLT
void criterion_7() {
    const GroupDescriptor G = GroupDescriptor::z2xz2();
    const CocycleTable table = CocycleTable::pauli_z2xz2();
    bool twist_ok = true;
    for (std::size_t gi = 0; gi < 4; ++gi)
        for (std::size_t hi = 0; hi < 4; ++hi) {
            const GroupElement g = GroupElement::from_index(G, gi);
            const GroupElement h = GroupElement::from_index(G, hi);
            const int a = g.components()[0], b = g.components()[1];
            const int c = h.components()[0], d = h.components()[1];
            const cplx expect = ((a * d + b * c) % 2) ? cplx{-1, 0} : cplx{1, 0};
            if (std::abs(twist_phase(table, g, h) - expect) > 1e-15) twist_ok = false;
        }

    const BuiltinState aklt = builtin_state("aklt");
    bool ratio_ok = true;
    double worst = 0;
    for (std::size_t gi = 1; gi < 4; ++gi) {
        for (std::size_t hi = 0; hi < 4; ++hi) {
            const GroupElement g = GroupElement::from_index(G, gi);
            const GroupElement h = GroupElement::from_index(G, hi);
            const int N = 10, j = 0, k = 6;
            const double s = string_order(aklt.tensor, aklt.sym, aklt.bounds, g, j, k, N);
            const cplx t = twisted_string_order(aklt.tensor, aklt.sym, aklt.bounds, g, h, j, k, N);
            const cplx omega = twist_phase(aklt.sym.cocycle, g, h);
            const double dev = std::abs(t / s - omega);
            worst = std::max(worst, dev);
            if (dev > 1e-10) ratio_ok = false;
        }
    }
    std::ostringstream detail;
    detail << "worst ratio deviation " << worst;
    report(7, "twist table equals (-1)^(ad+bc); <T>/<S> equals the twist on AKLT",
           twist_ok && ratio_ok, detail.str());
}

// 8. light cones on 100 random layered circuits
void criterion_8() {
    std::mt19937_64 seeds(0xC0DE);
    int circuits = 0, tight = 0;
    bool bound_ok = true, transpose_ok = true;
    for (int K : {2, 3}) {
        for (int D = 1; D <= 5; ++D) {
            for (int rep = 0; rep < 9; ++rep) {
                const BooleanCircuit c = make_random_layered_circuit(5, K, D, seeds());
                const ConeStats st = cone_statistics(c);
                if (!st.within_bound) bound_ok = false;
                if (st.max_backward_cone == st.bound) ++tight;
                ++circuits;
            }
            // one exactly-tight tree per (K, D) completes the family
            const BooleanCircuit t = make_tree_circuit(K, D);
            const ConeStats st = cone_statistics(t);
            if (!st.within_bound) bound_ok = false;
            if (st.max_backward_cone == st.bound) ++tight;
            ++circuits;
        }
    }
    // exact transpose consistency on a sample of the circuits
    for (uint64_t s = 0; s < 6; ++s) {
        const BooleanCircuit c = make_random_layered_circuit(5, 2 + static_cast<int>(s % 2),
                                                             1 + static_cast<int>(s % 5), 977 + s);
        std::set<std::pair<int, int>> fwd, bwd;
        for (int x = 0; x < 25; ++x)
            for (int y : forward_cone(c, x)) fwd.insert({x, y});
        for (int y : c.output_wires_sorted())
            for (int x : backward_cone(c, y))
                if (x < 25) bwd.insert({x, y});
        if (fwd != bwd) transpose_ok = false;
    }
    std::ostringstream detail;
    detail << circuits << " circuits, " << tight << " tight";
    report(8, "backward cones bounded by K^D with tight cases; cones transpose-consistent",
           circuits == 100 && bound_ok && tight >= 1 && transpose_ok, detail.str());
}

// 9. separation witness on the N = 27 grid
void criterion_9() {
    HardInstanceConfig cfg;
    cfg.N = 27;
    cfg.budget = 10000;
    cfg.corner_stride = 17;
    const auto stream = generate_hard_instances(cfg);

    const BooleanCircuit local = make_local_shallow_circuit(27);
    const auto witness = find_failing_instance(local, stream);
    bool pass = witness.has_value() && witness->instances_checked <= 10000;
    int losses = 0;
    if (pass) {
        // exhaustive evaluation over the witness geometry's 8 inputs
        for (unsigned bits = 0; bits < 8; ++bits) {
            GridInstance probe = witness->instance;
            probe.x = {static_cast<uint8_t>((bits >> 2) & 1u),
                       static_cast<uint8_t>((bits >> 1) & 1u), static_cast<uint8_t>(bits & 1u)};
            const Transcript tr = run_circuit_on_instance(local, probe);
            if (!check_win(probe.to_game_instance(), tr).win) ++losses;
        }
        pass = losses >= 1;
    }

    // the perfect nonlocal circuit on its wired family: no witness
    bool perfect_ok = false;
    if (!stream.empty()) {
        std::vector<GridInstance> family;
        for (unsigned bits = 0; bits < 8; ++bits) {
            GridInstance probe = stream.front();
            probe.x = {static_cast<uint8_t>((bits >> 2) & 1u),
                       static_cast<uint8_t>((bits >> 1) & 1u), static_cast<uint8_t>(bits & 1u)};
            family.push_back(probe);
        }
        const BooleanCircuit perfect = make_perfect_nonlocal_circuit(stream.front());
        perfect_ok = !find_failing_instance(perfect, family).has_value();
    }

    std::ostringstream detail;
    if (witness)
        detail << "witness after " << witness->instances_checked << " instances, " << losses
               << " losing inputs";
    report(9, "shallow local circuit fails on a hard instance; perfect circuit yields none",
           pass && perfect_ok, detail.str());
}

// 10. isometry from the AKLT fixed point to the cluster chain
void criterion_10() {
    const BuiltinState aklt = builtin_state("aklt");
    bool pass = aklt.isometry.has_value() && aklt.fixed_tensor.has_value();
    double worst = 0;
    if (pass) {
        const Eigen::MatrixXcd& Pi = *aklt.isometry;
        for (int N = 2; N <= 4; ++N) {
            Eigen::VectorXcd psi9 = dense_state(*aklt.fixed_tensor, N, 1u << 22);
            Eigen::MatrixXcd PiN = Eigen::MatrixXcd::Identity(1, 1);
            for (int s = 0; s < N; ++s) {
                Eigen::MatrixXcd next(PiN.rows() * 4, PiN.cols() * 9);
                for (Eigen::Index i = 0; i < PiN.rows(); ++i)
                    for (Eigen::Index j = 0; j < PiN.cols(); ++j)
                        next.block(i * 4, j * 9, 4, 9) = PiN(i, j) * Pi;
                PiN = std::move(next);
            }
            Eigen::VectorXcd mapped = PiN * psi9;
            mapped.normalize();
            const double overlap = std::abs(cluster_ring_dense(2 * N).dot(mapped));
            worst = std::max(worst, 1.0 - overlap);
            if (overlap < 1.0 - 1e-10) pass = false;
        }
    }
    std::ostringstream detail;
    detail << "worst overlap defect " << worst;
    report(10, "isometry maps the blocked fixed point onto the cluster state", pass,
           detail.str());
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (g_failures == 0) {
        std::cout << "acceptance: all 10 criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << g_failures << " criterion(s) failed\n";
    return 1;
}
