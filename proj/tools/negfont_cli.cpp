// negfont_cli.cpp — command-line front end; talks to the library purely
// through the C interface in negfont.h.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "negfont.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

struct StateDeleter {
    void operator()(nf_state* s) const { nf_state_free(s); }
};
using StatePtr = std::unique_ptr<nf_state, StateDeleter>;

struct StringDeleter {
    void operator()(char* s) const { nf_string_free(s); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

[[noreturn]] void fail_usage(const std::string& message) {
    std::fprintf(stderr, "negfont: %s\n", message.c_str());
    std::exit(kExitUsage);
}

void check_status(nf_status status) {
    if (status != NF_OK) {
        fail_usage(std::string(nf_status_name(status)) + ": " + nf_last_error());
    }
}

StatePtr open_state(const std::string& preset, const std::string& file,
                    const std::string& fallback_preset = "") {
    nf_state* raw = nullptr;
    if (!preset.empty() && !file.empty()) {
        fail_usage("--preset and --file are mutually exclusive");
    }
    if (!file.empty()) {
        check_status(nf_state_from_file(file.c_str(), &raw));
    } else if (!preset.empty()) {
        check_status(nf_state_preset(preset.c_str(), &raw));
    } else if (!fallback_preset.empty()) {
        check_status(nf_state_preset(fallback_preset.c_str(), &raw));
    } else {
        fail_usage("one of --preset or --file is required");
    }
    return StatePtr(raw);
}

std::string state_label(const std::string& preset, const std::string& file,
                        const std::string& fallback) {
    if (!file.empty()) return file;
    if (!preset.empty()) return preset;
    return fallback;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"negativity fonts, partial-transpose negativities and "
                 "four-qubit invariants"};
    app.require_subcommand(1);

    std::string preset, file, format = "pretty";
    std::string quantity, group = "su2", method = "spectral";
    int qubit = 1, kway = 0, samples = 100;
    double min_abs = 1e-12;
    std::uint64_t seed = 20120521;

    auto add_state_opts = [&](CLI::App* cmd) {
        cmd->add_option("--preset", preset, "preset state name, e.g. ghz or b(1,0,0,1)");
        cmd->add_option("--file", file, "state file (lines 'BITS RE IM')");
    };

    auto* rep = app.add_subcommand("report", "invariant report for one state");
    add_state_opts(rep);
    rep->add_option("--format", format, "pretty|tsv|json")->capture_default_str();

    auto* t1 = app.add_subcommand("table1", "degree-2/4 invariants for the preset catalog");
    auto* t2 = app.add_subcommand("table2", "sextic and three-qubit invariants for the catalog");

    auto* fonts = app.add_subcommand("fonts", "list negativity fonts of one qubit");
    add_state_opts(fonts);
    fonts->add_option("--qubit", qubit, "transposed qubit (1-based)")->capture_default_str();
    fonts->add_option("--k", kway, "only K-way fonts (0 = all)")->capture_default_str();
    fonts->add_option("--min-abs", min_abs, "threshold on |det|")->capture_default_str();

    auto* neg = app.add_subcommand("negativity", "global or K-way negativity of one qubit");
    add_state_opts(neg);
    neg->add_option("--qubit", qubit, "qubit (1-based)")->capture_default_str();
    neg->add_option("--k", kway, "K-way transpose (0 = global)")->capture_default_str();
    neg->add_option("--method", method, "spectral|fonts|entropy")->capture_default_str();

    auto* check = app.add_subcommand("check", "run the bundled self-test");
    check->add_option("--seed", seed, "random seed")->capture_default_str();
    check->add_option("--samples", samples, "random samples per suite")->capture_default_str();

    auto* inv = app.add_subcommand("invariance", "randomized invariance sweep");
    add_state_opts(inv);
    inv->add_option("--quantity", quantity, "invariant name (see --list)")->required(false);
    inv->add_flag("--list", "list valid quantity names");
    inv->add_option("--group", group, "su2|u2")->capture_default_str();
    inv->add_option("--samples", samples, "product unitaries to apply")->capture_default_str();
    inv->add_option("--seed", seed, "random seed")->capture_default_str();

    auto* canon = app.add_subcommand("canonicalize-chi",
                                     "remove the four-way fonts of a chi-like state");
    canon->add_option("--file", file, "state file (defaults to the chi preset)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (rep->parsed()) {
        StatePtr state = open_state(preset, file);
        char* text = nullptr;
        check_status(nf_report(state.get(), state_label(preset, file, "state").c_str(),
                               format.c_str(), &text));
        StringPtr guard(text);
        std::fputs(text, stdout);
        return kExitOk;
    }

    if (t1->parsed() || t2->parsed()) {
        char* text = nullptr;
        int mismatches = 0;
        check_status(t1->parsed() ? nf_render_table1(&text, &mismatches)
                                  : nf_render_table2(&text, &mismatches));
        StringPtr guard(text);
        std::fputs(text, stdout);
        return kExitOk;
    }

    if (fonts->parsed()) {
        StatePtr state = open_state(preset, file);
        nf_font_record* records = nullptr;
        size_t count = 0;
        check_status(nf_enumerate_fonts(state.get(), qubit, min_abs, &records, &count));
        std::printf("qubit\tK\tleft\tright\tdet_re\tdet_im\tabs\tlabel\n");
        for (size_t i = 0; i < count; ++i) {
            const nf_font_record& r = records[i];
            if (kway != 0 && r.k_value != kway) continue;
            const double mag = std::sqrt(r.det_re * r.det_re + r.det_im * r.det_im);
            std::printf("A%d\t%d\t%s\t%s\t%.12g\t%.12g\t%.12g\t%s\n", r.transposed_qubit,
                        r.k_value, r.left_index, r.right_index, r.det_re, r.det_im, mag,
                        r.label);
        }
        nf_fonts_free(records);
        return kExitOk;
    }

    if (neg->parsed()) {
        StatePtr state = open_state(preset, file);
        double value = 0.0;
        check_status(nf_negativity(state.get(), qubit, kway, method.c_str(), &value));
        if (kway == 0) {
            std::printf("N_G(A%d) = %.12g  [method %s]\n", qubit, value, method.c_str());
        } else {
            std::printf("N_%d(A%d) = %.12g\n", kway, qubit, value);
        }
        return kExitOk;
    }

    if (check->parsed()) {
        char* text = nullptr;
        int failures = 0;
        check_status(nf_selftest(seed, samples, &text, &failures));
        StringPtr guard(text);
        std::fputs(text, stdout);
        return failures == 0 ? kExitOk : kExitCheckFailure;
    }

    if (inv->parsed()) {
        StatePtr state = open_state(preset, file, "ghz");
        if (inv->count("--list") > 0) {
            char* names = nullptr;
            check_status(nf_sweep_quantities(state.get(), &names));
            StringPtr guard(names);
            std::fputs(names, stdout);
            return kExitOk;
        }
        if (quantity.empty()) fail_usage("--quantity is required (or use --list)");
        double dev = 0.0;
        check_status(nf_invariance_sweep(state.get(), quantity.c_str(), group.c_str(),
                                         samples, seed, &dev));
        std::printf("%s: max deviation %.3e over %d %s product unitaries\n",
                    quantity.c_str(), dev, samples, group.c_str());
        return kExitOk;
    }

    if (canon->parsed()) {
        StatePtr state = open_state(preset, file, "chi");
        nf_state* out = nullptr;
        char* applied = nullptr;
        check_status(nf_canonicalize_chi(state.get(), &out, &applied));
        StatePtr out_guard(out);
        StringPtr applied_guard(applied);
        char* text = nullptr;
        check_status(nf_state_serialize(out, &text));
        StringPtr text_guard(text);
        std::printf("canonical state:\n%s", text);
        std::printf("applied unitaries:\n%s\n", applied);
        return kExitOk;
    }

    return kExitUsage;
}
