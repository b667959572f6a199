#include "z4sd.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "core/bounds.hpp"
#include "core/catalog.hpp"
#include "core/checks.hpp"
#include "core/constructions.hpp"
#include "core/enumerate.hpp"
#include "core/errors.hpp"
#include "core/gf2code.hpp"
#include "core/z4code.hpp"

using namespace z4sd;

struct z4sd_z4code {
    Z4Code code;
};
struct z4sd_bincode {
    BinaryCode code;
};

namespace {

thread_local std::string g_last_error;

z4sd_status record_error(z4sd_status st, const char* what) {
    g_last_error = what ? what : "unknown error";
    return st;
}

// Runs the body, translating exceptions to statuses.
template <class Fn>
z4sd_status guarded(Fn&& fn) {
    try {
        fn();
        return Z4SD_OK;
    } catch (const ArgumentError& e) {
        return record_error(Z4SD_ERROR_ARGUMENT, e.what());
    } catch (const PreconditionError& e) {
        return record_error(Z4SD_ERROR_PRECONDITION, e.what());
    } catch (const TooLargeError& e) {
        return record_error(Z4SD_ERROR_TOO_LARGE, e.what());
    } catch (const ParseError& e) {
        return record_error(Z4SD_ERROR_PARSE, e.what());
    } catch (const IoError& e) {
        return record_error(Z4SD_ERROR_IO, e.what());
    } catch (const std::bad_alloc&) {
        return record_error(Z4SD_ERROR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return record_error(Z4SD_ERROR_INTERNAL, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

z4sd_status require(bool ok, const char* what) {
    return ok ? Z4SD_OK : record_error(Z4SD_ERROR_ARGUMENT, what);
}

std::vector<uint8_t> digits_from_cstr(const char* s) {
    if (!s) throw ArgumentError("null digit string");
    std::vector<uint8_t> d;
    for (const char* p = s; *p; ++p) {
        if (*p < '0' || *p > '3') throw ArgumentError("digit string must use 0-3");
        d.push_back(static_cast<uint8_t>(*p - '0'));
    }
    if (d.empty()) throw ArgumentError("empty digit string");
    return d;
}

void fill_profile(const WeightProfile& p, z4sd_weight_profile* out) {
    out->d_hamming = p.d_hamming;
    out->d_lee = p.d_lee;
    out->d_euclidean = p.d_euclidean;
    out->count_hamming = p.count_hamming;
    out->count_lee = p.count_lee;
    out->count_euclidean = p.count_euclidean;
    out->exact = p.exact ? 1 : 0;
}

} // namespace

extern "C" {

const char* z4sd_version(void) { return "1.0.0"; }

const char* z4sd_status_name(z4sd_status status) {
    switch (status) {
        case Z4SD_OK: return "ok";
        case Z4SD_ERROR_ARGUMENT: return "argument";
        case Z4SD_ERROR_PRECONDITION: return "precondition";
        case Z4SD_ERROR_TOO_LARGE: return "too-large";
        case Z4SD_ERROR_PARSE: return "parse";
        case Z4SD_ERROR_IO: return "io";
        case Z4SD_ERROR_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* z4sd_last_error(void) { return g_last_error.c_str(); }

void z4sd_string_free(char* s) { ::free(s); }
void z4sd_z4code_free(z4sd_z4code* code) { delete code; }
void z4sd_bincode_free(z4sd_bincode* code) { delete code; }

/* ---- Z4 codes ---- */

z4sd_status z4sd_z4code_parse(const char* text, z4sd_z4code** out) {
    if (auto st = require(text && out, "z4code_parse: null argument")) return st;
    return guarded([&] { *out = new z4sd_z4code{Z4Code::parse(text)}; });
}

z4sd_status z4sd_z4code_read(const char* path, z4sd_z4code** out) {
    if (auto st = require(path && out, "z4code_read: null argument")) return st;
    return guarded([&] { *out = new z4sd_z4code{Z4Code::read_file(path)}; });
}

z4sd_status z4sd_z4code_format(const z4sd_z4code* code, char** out) {
    if (auto st = require(code && out, "z4code_format: null argument")) return st;
    return guarded([&] { *out = dup_string(code->code.format()); });
}

z4sd_status z4sd_z4code_write(const z4sd_z4code* code, const char* path) {
    if (auto st = require(code && path, "z4code_write: null argument")) return st;
    return guarded([&] { code->code.write_file(path); });
}

uint32_t z4sd_z4code_length(const z4sd_z4code* code) { return code ? code->code.length() : 0; }
uint32_t z4sd_z4code_k1(const z4sd_z4code* code) { return code ? code->code.k1() : 0; }
uint32_t z4sd_z4code_k2(const z4sd_z4code* code) { return code ? code->code.k2() : 0; }

int z4sd_z4code_is_self_dual(const z4sd_z4code* code) {
    return code && code->code.is_self_dual() ? 1 : 0;
}

int z4sd_z4code_equal(const z4sd_z4code* a, const z4sd_z4code* b) {
    if (!a || !b) return 0;
    try {
        return a->code.same_row_space(b->code) ? 1 : 0;
    } catch (...) {
        return 0;
    }
}

z4sd_status z4sd_z4code_dual(const z4sd_z4code* code, z4sd_z4code** out) {
    if (auto st = require(code && out, "z4code_dual: null argument")) return st;
    return guarded([&] { *out = new z4sd_z4code{code->code.dual()}; });
}

z4sd_status z4sd_z4code_residue(const z4sd_z4code* code, z4sd_bincode** out) {
    if (auto st = require(code && out, "z4code_residue: null argument")) return st;
    return guarded([&] { *out = new z4sd_bincode{code->code.residue()}; });
}

z4sd_status z4sd_z4code_torsion(const z4sd_z4code* code, z4sd_bincode** out) {
    if (auto st = require(code && out, "z4code_torsion: null argument")) return st;
    return guarded([&] { *out = new z4sd_bincode{code->code.torsion()}; });
}

z4sd_status z4sd_z4code_type(const z4sd_z4code* code, uint32_t threads, int* out) {
    if (auto st = require(code && out, "z4code_type: null argument")) return st;
    return guarded([&] { *out = type_of(code->code, threads) == Z4Type::II ? 2 : 1; });
}

z4sd_status z4sd_gray_map(const char* digits, char** out) {
    if (auto st = require(digits && out, "gray_map: null argument")) return st;
    return guarded([&] {
        Z4Word w = Z4Word::from_string(digits);
        *out = dup_string(w.gray_image().to_string());
    });
}

/* ---- constructions ---- */

z4sd_status z4sd_construct_bordered_double_circulant(const char* first_row, uint32_t alpha,
                                                     uint32_t beta, uint32_t gamma,
                                                     z4sd_z4code** out) {
    if (auto st = require(first_row && out, "construct_bdc: null argument")) return st;
    return guarded([&] {
        if (alpha > 3 || beta > 3 || gamma > 3)
            throw ArgumentError("border entries must be in 0..3");
        auto row = digits_from_cstr(first_row);
        *out = new z4sd_z4code{bordered_double_circulant(
            row, BorderSpec{static_cast<uint8_t>(alpha), static_cast<uint8_t>(beta),
                            static_cast<uint8_t>(gamma)})};
    });
}

z4sd_status z4sd_construct_four_negacirculant(const char* row_a, const char* row_b,
                                              z4sd_z4code** out) {
    if (auto st = require(row_a && row_b && out, "construct_fnc: null argument")) return st;
    return guarded([&] {
        auto a = digits_from_cstr(row_a);
        auto b = digits_from_cstr(row_b);
        *out = new z4sd_z4code{four_negacirculant(a, b)};
    });
}

/* ---- weight search ---- */

z4sd_status z4sd_enumerate_weights(const z4sd_z4code* code, uint32_t threads,
                                   z4sd_weight_profile* out) {
    if (auto st = require(code && out, "enumerate_weights: null argument")) return st;
    return guarded([&] { fill_profile(enumerate_weights(code->code, threads), out); });
}

z4sd_status z4sd_bounded_search(const z4sd_z4code* code, uint64_t budget, uint64_t seed,
                                z4sd_weight_profile* out, char** lee_witness,
                                char** euclidean_witness) {
    if (auto st = require(code && out, "bounded_search: null argument")) return st;
    return guarded([&] {
        BoundedSearchResult r = bounded_search(code->code, budget, seed);
        fill_profile(r.profile, out);
        if (lee_witness)
            *lee_witness = r.profile.d_lee == WeightProfile::kUnknown
                               ? nullptr
                               : dup_string(r.lee_witness.to_string());
        if (euclidean_witness)
            *euclidean_witness = r.profile.d_euclidean == WeightProfile::kUnknown
                                     ? nullptr
                                     : dup_string(r.euclidean_witness.to_string());
    });
}

z4sd_status z4sd_census(const z4sd_z4code* code, uint32_t lee_target, uint32_t threads,
                        char** out) {
    if (auto st = require(code && out, "census: null argument")) return st;
    return guarded([&] {
        auto census = lee_split_census(code->code, lee_target, threads);
        std::string s;
        for (const auto& [split, count] : census)
            s += std::to_string(split.first) + " " + std::to_string(split.second) + " " +
                 std::to_string(count) + "\n";
        *out = dup_string(s);
    });
}

z4sd_status z4sd_support_invariant_of(const z4sd_z4code* code, uint32_t t, uint32_t k,
                                      uint32_t threads, z4sd_support_invariant* out) {
    if (auto st = require(code && out, "support_invariant: null argument")) return st;
    return guarded([&] {
        SInvariant si = s_invariant(code->code, t, k, threads);
        out->t = si.t;
        out->k = si.k;
        out->max = si.max;
        out->min = si.min;
        out->cardinality = si.cardinality;
    });
}

z4sd_status z4sd_distinguish(const z4sd_z4code* const* codes, size_t count, uint32_t t,
                             uint32_t k_max, uint32_t threads, uint32_t* group_ids,
                             uint32_t* group_count) {
    if (auto st = require(codes && group_ids && group_count && count > 0,
                          "distinguish: null argument"))
        return st;
    return guarded([&] {
        std::vector<const Z4Code*> ptrs;
        ptrs.reserve(count);
        for (size_t i = 0; i < count; ++i) {
            if (!codes[i]) throw ArgumentError("distinguish: null code");
            ptrs.push_back(&codes[i]->code);
        }
        uint32_t groups = 0;
        std::vector<uint32_t> assign = distinguish(ptrs, t, k_max, &groups, threads);
        for (size_t i = 0; i < count; ++i) group_ids[i] = assign[i];
        *group_count = groups;
    });
}

/* ---- binary codes ---- */

z4sd_status z4sd_bincode_parse(const char* text, z4sd_bincode** out) {
    if (auto st = require(text && out, "bincode_parse: null argument")) return st;
    return guarded([&] { *out = new z4sd_bincode{BinaryCode::parse(text)}; });
}

z4sd_status z4sd_bincode_read(const char* path, z4sd_bincode** out) {
    if (auto st = require(path && out, "bincode_read: null argument")) return st;
    return guarded([&] { *out = new z4sd_bincode{BinaryCode::read_file(path)}; });
}

z4sd_status z4sd_bincode_format(const z4sd_bincode* code, char** out) {
    if (auto st = require(code && out, "bincode_format: null argument")) return st;
    return guarded([&] { *out = dup_string(code->code.format()); });
}

z4sd_status z4sd_bincode_write(const z4sd_bincode* code, const char* path) {
    if (auto st = require(code && path, "bincode_write: null argument")) return st;
    return guarded([&] { code->code.write_file(path); });
}

uint32_t z4sd_bincode_length(const z4sd_bincode* code) {
    return code ? code->code.length() : 0;
}
uint32_t z4sd_bincode_dim(const z4sd_bincode* code) { return code ? code->code.dim() : 0; }

int z4sd_bincode_is_self_dual(const z4sd_bincode* code) {
    return code && code->code.is_self_dual() ? 1 : 0;
}

int z4sd_bincode_equal(const z4sd_bincode* a, const z4sd_bincode* b) {
    if (!a || !b) return 0;
    return a->code.same_row_space(b->code) ? 1 : 0;
}

z4sd_status z4sd_bincode_dual(const z4sd_bincode* code, z4sd_bincode** out) {
    if (auto st = require(code && out, "bincode_dual: null argument")) return st;
    return guarded([&] { *out = new z4sd_bincode{code->code.dual()}; });
}

z4sd_status z4sd_bincode_min_weight(const z4sd_bincode* code, int method, uint32_t* out) {
    if (auto st = require(code && out, "bincode_min_weight: null argument")) return st;
    if (auto st = require(method >= 0 && method <= 2, "bincode_min_weight: bad method"))
        return st;
    return guarded([&] {
        MinWeightMethod m = method == 0   ? MinWeightMethod::Exhaustive
                            : method == 1 ? MinWeightMethod::BrouwerZimmermann
                                          : MinWeightMethod::Auto;
        *out = min_weight(code->code, m);
    });
}

z4sd_status z4sd_bincode_parity_class(const z4sd_bincode* code, int* out) {
    if (auto st = require(code && out, "bincode_parity_class: null argument")) return st;
    return guarded([&] {
        switch (parity_class(code->code)) {
            case ParityClass::DoublyEven: *out = 0; break;
            case ParityClass::SinglyEven: *out = 1; break;
            default: *out = 2; break;
        }
    });
}

z4sd_status z4sd_bincode_weight_distribution(const z4sd_bincode* code, char** out) {
    if (auto st = require(code && out, "bincode_weight_distribution: null argument"))
        return st;
    return guarded([&] {
        std::string s;
        for (const auto& [w, c] : weight_distribution(code->code))
            s += std::to_string(w) + " " + std::to_string(c) + "\n";
        *out = dup_string(s);
    });
}

z4sd_status z4sd_bincode_covering_radius(const z4sd_bincode* code, int method,
                                         uint32_t* out) {
    if (auto st = require(code && out, "bincode_covering_radius: null argument")) return st;
    if (auto st = require(method == 0 || method == 1, "bincode_covering_radius: bad method"))
        return st;
    return guarded([&] {
        *out = covering_radius(code->code, method == 0 ? CoveringRadiusMethod::Exact
                                                       : CoveringRadiusMethod::DelsarteBound);
    });
}

z4sd_status z4sd_bincode_shadow_min_weight(const z4sd_bincode* code, uint32_t* out,
                                           uint64_t* shadow_size) {
    if (auto st = require(code && out, "bincode_shadow_min_weight: null argument")) return st;
    return guarded([&] {
        Shadow s = shadow(code->code);
        *out = s.min_weight;
        if (shadow_size) *shadow_size = s.size;
    });
}

z4sd_status z4sd_bincode_complete_self_dual(const z4sd_bincode* code, int target,
                                            z4sd_bincode** out) {
    if (auto st = require(code && out, "bincode_complete_self_dual: null argument"))
        return st;
    if (auto st = require(target >= 0 && target <= 2, "bincode_complete_self_dual: bad target"))
        return st;
    return guarded([&] {
        CompletionTarget t = target == 0   ? CompletionTarget::Any
                             : target == 1 ? CompletionTarget::DoublyEven
                                           : CompletionTarget::SinglyEven;
        *out = new z4sd_bincode{complete_to_self_dual(code->code, t)};
    });
}

z4sd_status z4sd_bincode_is_extremal(const z4sd_bincode* code, int* out) {
    if (auto st = require(code && out, "bincode_is_extremal: null argument")) return st;
    return guarded([&] { *out = is_extremal(code->code) ? 1 : 0; });
}

z4sd_status z4sd_bincode_is_s_extremal(const z4sd_bincode* code, int* out) {
    if (auto st = require(code && out, "bincode_is_s_extremal: null argument")) return st;
    return guarded([&] { *out = is_s_extremal(code->code) ? 1 : 0; });
}

/* ---- bounds ---- */

z4sd_status z4sd_lee_upper_bound(uint32_t n, uint32_t* out) {
    if (auto st = require(out != nullptr, "lee_upper_bound: null argument")) return st;
    return guarded([&] { *out = lee_upper_bound(n); });
}

z4sd_status z4sd_euclidean_upper_bound(uint32_t n, int type, uint32_t* out) {
    if (auto st = require(out && (type == 1 || type == 2), "euclidean_upper_bound: bad type"))
        return st;
    return guarded(
        [&] { *out = euclidean_upper_bound(n, type == 2 ? Z4Type::II : Z4Type::I); });
}

z4sd_status z4sd_binary_sd_upper_bound(uint32_t n, uint32_t* out) {
    if (auto st = require(out != nullptr, "binary_sd_upper_bound: null argument")) return st;
    return guarded([&] { *out = binary_sd_upper_bound(n); });
}

/* ---- certificate checkers ---- */

z4sd_status z4sd_check_residue_extremal(const z4sd_z4code* code, uint32_t d_lee,
                                        int d_lee_exact, uint32_t threads, int* out_pass,
                                        char** out_report) {
    if (auto st = require(code && out_pass, "check_residue_extremal: null argument"))
        return st;
    return guarded([&] {
        BoundReport rep =
            check_residue_extremal(code->code, "input", d_lee, d_lee_exact != 0, threads);
        *out_pass = rep.satisfied ? 1 : 0;
        if (out_report) *out_report = dup_string(rep.text());
    });
}

z4sd_status z4sd_check_container(const z4sd_z4code* code, const z4sd_bincode* container,
                                 uint32_t threads, int* out_pass, char** out_report) {
    if (auto st = require(code && container && out_pass, "check_container: null argument"))
        return st;
    return guarded([&] {
        BoundReport rep =
            check_self_dual_container(code->code, container->code, "input", threads);
        *out_pass = rep.satisfied ? 1 : 0;
        if (out_report) *out_report = dup_string(rep.text());
    });
}

/* ---- lift search ---- */

z4sd_status z4sd_lift_search(const z4sd_bincode* residue, uint64_t trials, uint64_t seed,
                             uint32_t target_d_lee, uint32_t threads, z4sd_z4code*** out_codes,
                             size_t* out_count, uint64_t* out_rejected) {
    if (auto st = require(residue && out_codes && out_count, "lift_search: null argument"))
        return st;
    return guarded([&] {
        LiftSearchResult r = lift_search(residue->code, trials, seed, target_d_lee, threads);
        z4sd_z4code** arr = static_cast<z4sd_z4code**>(
            ::malloc(sizeof(z4sd_z4code*) * std::max<size_t>(1, r.codes.size())));
        if (!arr) throw std::bad_alloc();
        for (size_t i = 0; i < r.codes.size(); ++i)
            arr[i] = new z4sd_z4code{std::move(r.codes[i])};
        *out_codes = arr;
        *out_count = r.codes.size();
        if (out_rejected)
            *out_rejected = r.not_self_dual + r.residue_mismatch + r.below_target;
    });
}

void z4sd_z4code_array_free(z4sd_z4code** codes, size_t count) {
    if (!codes) return;
    for (size_t i = 0; i < count; ++i) delete codes[i];
    ::free(codes);
}

} // extern "C"

/* ---- catalog ---- */

namespace {

template <class Fn>
z4sd_status catalog_report(const char* dir, uint32_t threads, int tsv, char** out_report,
                           int* out_all_pass, Fn&& fn) {
    (void)threads;
    if (!dir || !out_report || !out_all_pass)
        return record_error(Z4SD_ERROR_ARGUMENT, "catalog: null argument");
    return guarded([&] {
        Catalog cat = Catalog::load(dir);
        ReportOutcome outcome = fn(cat);
        *out_report = dup_string(tsv ? outcome.tsv : outcome.text);
        *out_all_pass = outcome.all_pass ? 1 : 0;
    });
}

} // namespace

extern "C" {

z4sd_status z4sd_catalog_verify(const char* dir, const char* id_glob, uint32_t threads,
                                int tsv, char** out_report, int* out_all_pass) {
    std::string glob = id_glob ? id_glob : "*";
    return catalog_report(dir, threads, tsv, out_report, out_all_pass,
                          [&](const Catalog& cat) {
                              return verify_catalog(cat, glob, threads);
                          });
}

z4sd_status z4sd_catalog_fingerprint_table(const char* dir, uint32_t threads, int tsv,
                                           char** out_report, int* out_all_pass) {
    return catalog_report(dir, threads, tsv, out_report, out_all_pass,
                          [&](const Catalog& cat) {
                              return report_s_invariant_table(cat, threads);
                          });
}

z4sd_status z4sd_catalog_distinct_count(const char* dir, uint32_t threads, int tsv,
                                        char** out_report, int* out_all_pass) {
    return catalog_report(dir, threads, tsv, out_report, out_all_pass,
                          [&](const Catalog& cat) {
                              return report_distinct_count(cat, threads);
                          });
}

} // extern "C"
