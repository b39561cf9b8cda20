// c_api.cpp — extern "C" surface over the core library. Opaque handles own
// PureState values; exceptions are mapped to status codes and a thread-local
// message.

#include "negfont.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <new>
#include <string>

#include "json.hpp"
#include "negfont/catalog.hpp"
#include "negfont/fonts.hpp"
#include "negfont/invariants.hpp"
#include "negfont/lu.hpp"
#include "negfont/report.hpp"
#include "negfont/rng.hpp"
#include "negfont/transpose.hpp"

struct nf_state {
    negfont::PureState value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
nf_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return NF_OK;
    } catch (const negfont::Error& e) {
        g_last_error = e.what();
        return static_cast<nf_status>(static_cast<int>(e.code()));
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return NF_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return NF_ERR_INTERNAL;
    }
}

nf_status require(bool ok, const char* message) {
    if (ok) return NF_OK;
    g_last_error = message;
    return NF_ERR_INVALID_ARGUMENT;
}

} // namespace

extern "C" {

const char* nf_version(void) { return "0.1.0"; }

const char* nf_status_name(int status) {
    return negfont::errc_name(static_cast<negfont::Errc>(status));
}

const char* nf_last_error(void) { return g_last_error.c_str(); }

nf_status nf_state_from_text(const char* text, nf_state** out) {
    if (nf_status s = require(text && out, "null argument")) return s;
    return guarded([&] { *out = new nf_state{negfont::parse_state_text(text)}; });
}

nf_status nf_state_from_file(const char* path, nf_state** out) {
    if (nf_status s = require(path && out, "null argument")) return s;
    return guarded([&] { *out = new nf_state{negfont::load_state_file(path)}; });
}

nf_status nf_state_preset(const char* name, nf_state** out) {
    if (nf_status s = require(name && out, "null argument")) return s;
    return guarded([&] { *out = new nf_state{negfont::preset(name)}; });
}

nf_status nf_state_random(int n_qubits, uint64_t seed, uint64_t stream,
                          nf_state** out) {
    if (nf_status s = require(out != nullptr, "null argument")) return s;
    return guarded([&] {
        *out = new nf_state{negfont::random_state(n_qubits, seed, stream)};
    });
}

void nf_state_free(nf_state* state) { delete state; }

int nf_state_qubits(const nf_state* state) {
    return state ? state->value.qubits() : 0;
}

nf_status nf_state_serialize(const nf_state* state, char** out_text) {
    if (nf_status s = require(state && out_text, "null argument")) return s;
    return guarded([&] {
        *out_text = dup_string(negfont::serialize_state_text(state->value));
    });
}

nf_status nf_state_amplitude(const nf_state* state, const char* bits, double* re,
                             double* im) {
    if (nf_status s = require(state && bits && re && im, "null argument")) return s;
    return guarded([&] {
        const negfont::cdouble a = state->value.amplitude(bits);
        *re = a.real();
        *im = a.imag();
    });
}

nf_status nf_enumerate_fonts(const nf_state* state, int p, double min_abs,
                             nf_font_record** out_records, size_t* out_count) {
    if (nf_status s = require(state && out_records && out_count, "null argument")) {
        return s;
    }
    return guarded([&] {
        const auto fonts = negfont::enumerate_fonts(state->value, p, min_abs);
        auto* records = new nf_font_record[fonts.size() ? fonts.size() : 1]();
        for (std::size_t i = 0; i < fonts.size(); ++i) {
            const auto& f = fonts[i];
            records[i].transposed_qubit = f.transposed_qubit;
            records[i].k_value = f.k_value;
            std::snprintf(records[i].left_index, sizeof records[i].left_index, "%s",
                          f.left_index.c_str());
            std::snprintf(records[i].right_index, sizeof records[i].right_index, "%s",
                          f.right_index.c_str());
            records[i].det_re = f.det.real();
            records[i].det_im = f.det.imag();
            std::snprintf(records[i].label, sizeof records[i].label, "%s",
                          negfont::font_label(f, state->value.qubits()).c_str());
        }
        *out_records = records;
        *out_count = fonts.size();
    });
}

void nf_fonts_free(nf_font_record* records) { delete[] records; }

nf_status nf_negativity(const nf_state* state, int p, int k, const char* method,
                        double* out_value) {
    if (nf_status s = require(state && out_value, "null argument")) return s;
    const std::string m = method ? method : "spectral";
    return guarded([&] {
        if (m == "spectral") {
            *out_value = k == 0 ? negfont::negativity(state->value, p).value
                                : negfont::negativity_kway(state->value, p, k).value;
            return;
        }
        if (k != 0) {
            throw negfont::Error(negfont::Errc::bad_params,
                                 "k-way negativity needs method=spectral");
        }
        if (m == "fonts") {
            *out_value = std::sqrt(negfont::negativity_sq_from_fonts(state->value, p));
        } else if (m == "entropy") {
            *out_value =
                std::sqrt(std::max(0.0, negfont::reduced_qubit_linear_entropy(state->value, p)));
        } else {
            throw negfont::Error(negfont::Errc::bad_params,
                                 "method must be spectral, fonts or entropy");
        }
    });
}

nf_status nf_negativity_sq_fonts(const nf_state* state, int p, double* out_value) {
    if (nf_status s = require(state && out_value, "null argument")) return s;
    return guarded([&] {
        *out_value = negfont::negativity_sq_from_fonts(state->value, p);
    });
}

nf_status nf_linear_entropy(const nf_state* state, int p, double* out_value) {
    if (nf_status s = require(state && out_value, "null argument")) return s;
    return guarded([&] {
        *out_value = negfont::reduced_qubit_linear_entropy(state->value, p);
    });
}

nf_status nf_pt_decomposition_residual(const nf_state* state, int p,
                                       double* out_residual) {
    if (nf_status s = require(state && out_residual, "null argument")) return s;
    return guarded([&] {
        *out_residual = negfont::check_pt_decomposition(state->value, p);
    });
}

nf_status nf_report(const nf_state* state, const char* state_name,
                    const char* format, char** out_text) {
    if (nf_status s = require(state && out_text, "null argument")) return s;
    return guarded([&] {
        const negfont::ReportFormat fmt =
            negfont::parse_report_format(format ? format : "pretty");
        *out_text = dup_string(
            negfont::render_report(state->value, state_name ? state_name : "state", fmt));
    });
}

nf_status nf_render_table1(char** out_text, int* out_mismatches) {
    if (nf_status s = require(out_text != nullptr, "null argument")) return s;
    return guarded([&] {
        const negfont::TableResult t = negfont::render_table1();
        *out_text = dup_string(t.text);
        if (out_mismatches) *out_mismatches = t.mismatches;
    });
}

nf_status nf_render_table2(char** out_text, int* out_mismatches) {
    if (nf_status s = require(out_text != nullptr, "null argument")) return s;
    return guarded([&] {
        const negfont::TableResult t = negfont::render_table2();
        *out_text = dup_string(t.text);
        if (out_mismatches) *out_mismatches = t.mismatches;
    });
}

nf_status nf_invariance_sweep(const nf_state* state, const char* quantity,
                              const char* group, int samples, uint64_t seed,
                              double* out_max_deviation) {
    if (nf_status s = require(state && quantity && out_max_deviation, "null argument")) {
        return s;
    }
    return guarded([&] {
        const std::string g = group ? group : "su2";
        negfont::UnitaryGroup ug;
        if (g == "su2") {
            ug = negfont::UnitaryGroup::su2;
        } else if (g == "u2") {
            ug = negfont::UnitaryGroup::u2;
        } else {
            throw negfont::Error(negfont::Errc::bad_params, "group must be su2 or u2");
        }
        *out_max_deviation =
            negfont::invariance_sweep(state->value, quantity, samples, seed, ug);
    });
}

nf_status nf_sweep_quantities(const nf_state* state, char** out_text) {
    if (nf_status s = require(state && out_text, "null argument")) return s;
    return guarded([&] {
        std::string all;
        for (const auto& name : negfont::sweep_quantities(state->value.qubits())) {
            all += name;
            all += '\n';
        }
        *out_text = dup_string(all);
    });
}

nf_status nf_canonicalize_chi(const nf_state* state, nf_state** out_state,
                              char** out_applied_json) {
    if (nf_status s = require(state && out_state, "null argument")) return s;
    return guarded([&] {
        const negfont::CanonicalizeResult res = negfont::canonicalize_chi(state->value);
        if (out_applied_json) {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto& [qubit, u] : res.applied) {
                nlohmann::ordered_json ju;
                ju["qubit"] = qubit;
                nlohmann::ordered_json rows = nlohmann::ordered_json::array();
                for (int r = 0; r < 2; ++r) {
                    nlohmann::ordered_json row = nlohmann::ordered_json::array();
                    for (int c = 0; c < 2; ++c) {
                        row.push_back({{"re", u.at(r, c).real()}, {"im", u.at(r, c).imag()}});
                    }
                    rows.push_back(row);
                }
                ju["matrix"] = rows;
                arr.push_back(ju);
            }
            *out_applied_json = dup_string(arr.dump(2));
        }
        *out_state = new nf_state{res.state};
    });
}

nf_status nf_selftest(uint64_t seed, int samples, char** out_text,
                      int* out_failures) {
    if (nf_status s = require(out_text && out_failures, "null argument")) return s;
    return guarded([&] {
        const negfont::SelftestResult res = negfont::run_selftest(seed, samples);
        *out_text = dup_string(res.text);
        *out_failures = res.failures;
    });
}

void nf_string_free(char* text) { delete[] text; }

} // extern "C"
