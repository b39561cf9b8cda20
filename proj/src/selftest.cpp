// selftest.cpp — the bundled identity checks behind `negfont check`.

#include <cmath>
#include <functional>
#include <sstream>

#include "negfont/catalog.hpp"
#include "negfont/fonts.hpp"
#include "negfont/invariants.hpp"
#include "negfont/lu.hpp"
#include "negfont/report.hpp"
#include "negfont/rng.hpp"
#include "negfont/transpose.hpp"

namespace negfont {

namespace {

struct Suite {
    std::string name;
    bool passed = true;
    std::string detail;
};

cdouble global_phase_between(const PureState& a, const PureState& b) {
    // <a|b> has unit modulus iff the states agree up to a phase
    cdouble ov{};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        ov += std::conj(a.amplitude(static_cast<std::uint32_t>(i))) *
              b.amplitude(static_cast<std::uint32_t>(i));
    }
    return ov;
}

} // namespace

SelftestResult run_selftest_with_catalog(
    std::uint64_t seed, int samples,
    const std::vector<std::pair<std::string, PureState>>& catalog) {
    std::vector<Suite> suites;
    auto run = [&](const std::string& name, const std::function<void(Suite&)>& body) {
        Suite s;
        s.name = name;
        try {
            body(s);
        } catch (const std::exception& e) {
            s.passed = false;
            s.detail = std::string("exception: ") + e.what();
        }
        suites.push_back(std::move(s));
    };
    auto fmt = [](double v) { return format_real(v, 3); };

    run("catalog normalization", [&](Suite& s) {
        for (const auto& [name, state] : catalog) {
            if (!state.is_normalized(1e-10)) {
                s.passed = false;
                s.detail = "preset '" + name + "' is not normalized";
                return;
            }
        }
        s.detail = std::to_string(catalog.size()) + " states";
    });

    run("table1 reproduction", [&](Suite& s) {
        const TableResult t = render_table1();
        s.passed = t.mismatches == 0;
        s.detail = std::to_string(t.mismatches) + " of 56 cells deviate";
    });

    run("table2 reproduction", [&](Suite& s) {
        const TableResult t = render_table2();
        // One permanent deviation is documented: the hs I6 reference cell is
        // not reachable from the font expansion (computed value -1/108).
        s.passed = t.mismatches == 1 && t.mismatch_cells[0] == "hs:I6_A2A3";
        if (s.passed) {
            const cdouble i6hs = i6_a2a3(preset("hs"));
            s.detail = "55 of 56 cells match; known deviation hs:I6, computed " +
                       format_complex(i6hs, 6) + " (= -1/108)";
        } else {
            s.detail = std::to_string(t.mismatches) + " unexpected deviation(s)";
        }
    });

    run("negativity triple equality", [&](Suite& s) {
        if (samples <= 0) {
            s.detail = "skipped (samples=0)";
            return;
        }
        double worst_fs = 0.0, worst_se = 0.0;
        for (int i = 0; i < samples; ++i) {
            const PureState st = random_state(4, seed, 1000 + i);
            for (int p = 1; p <= 4; ++p) {
                const double fonts = negativity_sq_from_fonts(st, p);
                const double ng = negativity(st, p).value;
                const double ent = reduced_qubit_linear_entropy(st, p);
                worst_fs = std::max(worst_fs, std::abs(fonts - ng * ng));
                worst_se = std::max(worst_se, std::abs(ng * ng - ent));
            }
        }
        s.passed = worst_fs < 1e-9 && worst_se < 1e-10;
        s.detail = "max |fonts-spectral| " + fmt(worst_fs) + ", max |spectral-entropy| " +
                   fmt(worst_se);
    });

    run("k-way decomposition", [&](Suite& s) {
        if (samples <= 0) {
            s.detail = "skipped (samples=0)";
            return;
        }
        double worst = 0.0;
        const int per = std::max(1, samples / 10);
        for (int n = 3; n <= 5; ++n) {
            for (int i = 0; i < per; ++i) {
                const PureState st = random_state(n, seed, 2000 + 16 * n + i);
                for (int p = 1; p <= n; ++p) {
                    worst = std::max(worst, check_pt_decomposition(st, p));
                }
            }
        }
        s.passed = worst < 1e-12;
        s.detail = "max residual " + fmt(worst) + " (N=3,4,5)";
    });

    run("t4sq pair-mean identity", [&](Suite& s) {
        if (samples <= 0) {
            s.detail = "skipped (samples=0)";
            return;
        }
        double worst = 0.0;
        for (int i = 0; i < samples; ++i) {
            const PureState st = random_state(4, seed, 3000 + i);
            const cdouble t = t4(st);
            const cdouble mean = (j4(st, 1, 2) + j4(st, 1, 3) + j4(st, 1, 4)) / 3.0;
            worst = std::max(worst, std::abs(t * t - mean));
        }
        s.passed = worst < 1e-10;
        s.detail = "max |T4^2 - mean(J4)| " + fmt(worst);
    });

    run("pair-triple decomposition", [&](Suite& s) {
        if (samples <= 0) {
            s.detail = "skipped (samples=0)";
            return;
        }
        double worst = 0.0;
        for (int i = 0; i < samples; ++i) {
            const PureState st = random_state(4, seed, 4000 + i);
            for (int q = 2; q <= 4; ++q) {
                const cdouble j = j4(st, 1, q);
                int others[2], k = 0;
                for (int u = 2; u <= 4; ++u) {
                    if (u != q) others[k++] = u;
                }
                for (int c = 0; c < 2; ++c) {
                    const TripleInvariantSet tr =
                        triple_invariants(st, q, others[c], others[1 - c]);
                    worst = std::max(worst, std::abs(j - (tr.i4 + tr.p3)));
                    const cdouble recomb =
                        2.0 * (tr.i3_slice0 + tr.i3_slice1 - tr.i3_overall);
                    worst = std::max(worst, std::abs(tr.p3 - recomb));
                }
            }
        }
        s.passed = worst < 1e-10;
        s.detail = "max residual " + fmt(worst) + " (both fixed-qubit choices)";
    });

    run("font transformation equations", [&](Suite& s) {
        if (samples <= 0) {
            s.detail = "skipped (samples=0)";
            return;
        }
        double worst = 0.0;
        for (int i = 0; i < samples; ++i) {
            Rng rng(seed, 5000 + i);
            const PureState st = random_state(4, seed, 5500 + i);
            const int p = 1 + static_cast<int>(rng.next() % 4);
            int q = 1 + static_cast<int>(rng.next() % 4);
            while (q == p) q = 1 + static_cast<int>(rng.next() % 4);
            std::vector<std::pair<int, int>> rest;
            for (int u = 1; u <= 4; ++u) {
                if (u != p && u != q) {
                    rest.emplace_back(u, static_cast<int>(rng.next() % 2));
                }
            }
            const cdouble x = rng.complex_normal();
            worst = std::max(worst, predict_font_transform(st, p, q, rest, x).max_error());
        }
        s.passed = worst < 1e-10;
        s.detail = "max prediction error " + fmt(worst);
    });

    run("pair invariants under U(x)", [&](Suite& s) {
        if (samples <= 0) {
            s.detail = "skipped (samples=0)";
            return;
        }
        double worst = 0.0;
        for (int i = 0; i < samples; ++i) {
            Rng rng(seed, 6000 + i);
            const PureState st = random_state(4, seed, 6500 + i);
            const int p = 1 + static_cast<int>(rng.next() % 4);
            int q = 1 + static_cast<int>(rng.next() % 4);
            while (q == p) q = 1 + static_cast<int>(rng.next() % 4);
            std::vector<std::pair<int, int>> rest;
            for (int u = 1; u <= 4; ++u) {
                if (u != p && u != q) {
                    rest.emplace_back(u, static_cast<int>(rng.next() % 2));
                }
            }
            const PairInvariantSet ref = pair_invariants_mtip(st, p, q, rest);
            const cdouble x = rng.complex_normal();
            for (int side : {p, q}) {
                const PureState moved = apply_single_qubit_unitary(st, side, u_from_x(x));
                const PairInvariantSet got = pair_invariants_mtip(moved, p, q, rest);
                worst = std::max({worst, std::abs(got.m - ref.m), std::abs(got.t - ref.t),
                                  std::abs(got.i - ref.i), std::abs(got.p - ref.p)});
            }
        }
        s.passed = worst < 1e-10;
        s.detail = "max drift " + fmt(worst);
    });

    run("invariance sweeps", [&](Suite& s) {
        if (samples <= 0) {
            s.detail = "skipped (samples=0)";
            return;
        }
        const int sweep_n = std::min(samples, 20);
        double worst = 0.0;
        std::vector<PureState> states;
        for (const char* nm : {"ghz", "chi", "hs", "c1", "phi"}) states.push_back(preset(nm));
        states.push_back(random_state(4, seed, 7000));
        states.push_back(random_state(4, seed, 7001));
        int k = 0;
        for (const auto& st : states) {
            ++k;
            for (const char* q : {"t4", "j4_12", "j4_13", "j4_14", "i6"}) {
                worst = std::max(worst, invariance_sweep(st, q, sweep_n,
                                                         seed + 13 * k, UnitaryGroup::su2));
            }
            for (const char* q : {"tau4", "beta4", "delta4_avg", "negsq_1", "negsq_3"}) {
                worst = std::max(worst, invariance_sweep(st, q, sweep_n,
                                                         seed + 17 * k, UnitaryGroup::u2));
            }
        }
        s.passed = worst < 1e-8;
        s.detail = "max deviation " + fmt(worst) + " over " + std::to_string(sweep_n) +
                   " product unitaries per quantity";
    });

    run("chi canonicalization", [&](Suite& s) {
        const CanonicalizeResult res = canonicalize_chi(preset("chi"));
        const cdouble ov = global_phase_between(preset("chi_c"), res.state);
        const double j12 = std::abs(j4(res.state, 1, 2) - cdouble{-0.25, 0.0});
        const double j13 = std::abs(j4(res.state, 1, 3) - cdouble{-0.25, 0.0});
        const double j14 = std::abs(j4(res.state, 1, 4) - cdouble{0.5, 0.0});
        s.passed = res.fourway_mass < 1e-12 && std::abs(std::abs(ov) - 1.0) < 1e-9 &&
                   j12 < 1e-10 && j13 < 1e-10 && j14 < 1e-10;
        s.detail = "four-way mass " + fmt(res.fourway_mass) + ", |overlap with chi_c| " +
                   format_real(std::abs(ov), 12);
    });

    run("b-family closed forms", [&](Suite& s) {
        if (samples <= 0) {
            s.detail = "skipped (samples=0)";
            return;
        }
        double worst = 0.0;
        for (int i = 0; i < samples; ++i) {
            Rng rng(seed, 8000 + i);
            cdouble a = rng.complex_normal(), b = rng.complex_normal();
            cdouble c = rng.complex_normal(), d = rng.complex_normal();
            const double nrm = std::sqrt(std::norm(a) + std::norm(b) + std::norm(c) +
                                         std::norm(d));
            a /= nrm; b /= nrm; c /= nrm; d /= nrm;
            const PureState st = preset_b(a, b, c, d);
            const cdouble ad = a * d, bc = b * c;
            worst = std::max(
                {worst, std::abs(tau4(st) - 4.0 * std::norm(ad + bc)),
                 std::abs(j4(st, 1, 2) - ((ad + bc) * (ad + bc) + 8.0 * a * b * c * d)),
                 std::abs(j4(st, 1, 3) - (ad - bc) * (ad - bc)),
                 std::abs(j4(st, 1, 4) - (ad - bc) * (ad - bc))});
        }
        // product sub-case ad = bc
        const PureState prod = preset_b(0.6, 0.3, 0.4, 0.2);
        worst = std::max({worst, std::abs(j4(prod, 1, 3)), std::abs(j4(prod, 1, 4))});
        s.passed = worst < 1e-10;
        s.detail = "max residual " + fmt(worst);
    });

    run("sextic reading report", [&](Suite& s) {
        std::ostringstream detail;
        const PureState hs = preset("hs");
        detail << "printed reading on hs " << format_complex(i6_a2a3_printed(hs), 6)
               << ", index-consistent " << format_complex(i6_a2a3(hs), 6);
        if (samples > 0) {
            const PureState probe = random_state(4, seed, 9000);
            const double dev_printed =
                invariance_sweep(probe, "i6_printed", std::min(samples, 20), seed + 41,
                                 UnitaryGroup::su2);
            const double dev_fixed = invariance_sweep(probe, "i6", std::min(samples, 20),
                                                      seed + 41, UnitaryGroup::su2);
            detail << "; sweep deviation printed " << fmt(dev_printed) << ", fixed "
                   << fmt(dev_fixed);
            s.passed = dev_fixed < 1e-8 && dev_printed > 1e-4;
        }
        s.detail = detail.str();
    });

    SelftestResult out;
    std::ostringstream text;
    text << "negfont self-test (seed " << seed << ", samples " << samples << ")\n";
    for (const auto& s : suites) {
        text << (s.passed ? "[ok]   " : "[FAIL] ") << s.name;
        if (!s.detail.empty()) text << "  -- " << s.detail;
        text << "\n";
        if (!s.passed) ++out.failures;
    }
    text << (out.failures == 0 ? "self-test: PASS"
                               : "self-test: FAIL (" + std::to_string(out.failures) +
                                     " suite(s))")
         << "\n";
    out.text = text.str();
    return out;
}

SelftestResult run_selftest(std::uint64_t seed, int samples) {
    std::vector<std::pair<std::string, PureState>> catalog;
    for (const auto& name : preset_names()) {
        if (name == "b(a,b,c,d)") {
            catalog.emplace_back("b(1,1,1,1)", preset("b(1,1,1,1)"));
            continue;
        }
        catalog.emplace_back(name, preset(name));
    }
    return run_selftest_with_catalog(seed, samples, catalog);
}

} // namespace negfont
