// Command line front end for the z4sd shared library.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "z4sd.h"

namespace {

struct Global {
    uint32_t threads = 1;
    std::string format = "text";
    std::string catalog = "data/catalog";
};

[[noreturn]] void die(z4sd_status st) {
    std::fprintf(stderr, "error (%s): %s\n", z4sd_status_name(st), z4sd_last_error());
    std::exit(2);
}

void check(z4sd_status st) {
    if (st != Z4SD_OK) die(st);
}

struct OwnedString {
    char* s = nullptr;
    ~OwnedString() { z4sd_string_free(s); }
};

struct OwnedZ4 {
    z4sd_z4code* c = nullptr;
    ~OwnedZ4() { z4sd_z4code_free(c); }
};

struct OwnedBin {
    z4sd_bincode* c = nullptr;
    ~OwnedBin() { z4sd_bincode_free(c); }
};

std::string weight_str(uint32_t w) {
    return w == UINT32_MAX ? std::string("?") : std::to_string(w);
}

int run_catalog_report(const Global& g,
                       z4sd_status (*fn)(const char*, uint32_t, int, char**, int*)) {
    OwnedString rep;
    int all_pass = 0;
    check(fn(g.catalog.c_str(), g.threads, g.format == "tsv", &rep.s, &all_pass));
    std::fputs(rep.s, stdout);
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"self-dual Z4 codes: construction, verification, fingerprints"};
    app.require_subcommand(1);
    Global g;
    app.add_option("--threads", g.threads, "worker threads")->capture_default_str();
    app.add_option("--format", g.format, "report format: text or tsv")
        ->check(CLI::IsMember({"text", "tsv"}))
        ->capture_default_str();
    app.add_option("--catalog", g.catalog, "catalog directory")->capture_default_str();

    int exit_code = 0;

    // construct
    auto* construct = app.add_subcommand("construct", "build a code from table parameters");
    construct->require_subcommand(1);
    std::string c_row, c_border = "0,1,1", c_row_a, c_row_b, c_out;
    auto* bdc = construct->add_subcommand("bdc", "bordered double circulant code");
    bdc->add_option("--row", c_row, "first row of the circulant block")->required();
    bdc->add_option("--border", c_border, "alpha,beta,gamma")->capture_default_str();
    bdc->add_option("--out", c_out, "write the code here instead of stdout");
    bdc->callback([&] {
        unsigned a, b, cgam;
        if (std::sscanf(c_border.c_str(), "%u,%u,%u", &a, &b, &cgam) != 3) {
            std::fprintf(stderr, "error: --border expects a,b,g\n");
            std::exit(2);
        }
        OwnedZ4 code;
        check(z4sd_construct_bordered_double_circulant(c_row.c_str(), a, b, cgam, &code.c));
        if (c_out.empty()) {
            OwnedString s;
            check(z4sd_z4code_format(code.c, &s.s));
            std::fputs(s.s, stdout);
        } else {
            check(z4sd_z4code_write(code.c, c_out.c_str()));
        }
        std::printf("# n=%u k1=%u k2=%u self_dual=%s\n", z4sd_z4code_length(code.c),
                    z4sd_z4code_k1(code.c), z4sd_z4code_k2(code.c),
                    z4sd_z4code_is_self_dual(code.c) ? "yes" : "no");
    });
    auto* fnc = construct->add_subcommand("fnc", "four negacirculant code");
    fnc->add_option("--rowA", c_row_a, "first row of A")->required();
    fnc->add_option("--rowB", c_row_b, "first row of B")->required();
    fnc->add_option("--out", c_out, "write the code here instead of stdout");
    fnc->callback([&] {
        OwnedZ4 code;
        check(z4sd_construct_four_negacirculant(c_row_a.c_str(), c_row_b.c_str(), &code.c));
        if (c_out.empty()) {
            OwnedString s;
            check(z4sd_z4code_format(code.c, &s.s));
            std::fputs(s.s, stdout);
        } else {
            check(z4sd_z4code_write(code.c, c_out.c_str()));
        }
        std::printf("# n=%u k1=%u k2=%u self_dual=%s\n", z4sd_z4code_length(code.c),
                    z4sd_z4code_k1(code.c), z4sd_z4code_k2(code.c),
                    z4sd_z4code_is_self_dual(code.c) ? "yes" : "no");
    });

    // minlee
    auto* minlee = app.add_subcommand("minlee", "minimum weights of a Z4 code");
    std::string ml_file;
    bool ml_exact = false;
    uint64_t ml_budget = 0, ml_seed = 0;
    minlee->add_option("file", ml_file, ".z4c file")->required();
    minlee->add_flag("--exact", ml_exact, "full enumeration (default)");
    minlee->add_option("--budget", ml_budget, "bounded search: codewords to visit");
    minlee->add_option("--seed", ml_seed, "bounded search seed");
    minlee->callback([&] {
        OwnedZ4 code;
        check(z4sd_z4code_read(ml_file.c_str(), &code.c));
        z4sd_weight_profile p{};
        if (ml_budget == 0) {
            check(z4sd_enumerate_weights(code.c, g.threads, &p));
            std::printf("exact minima: hamming=%s lee=%s euclidean=%s\n",
                        weight_str(p.d_hamming).c_str(), weight_str(p.d_lee).c_str(),
                        weight_str(p.d_euclidean).c_str());
            std::printf("attaining codewords: hamming=%" PRIu64 " lee=%" PRIu64
                        " euclidean=%" PRIu64 "\n",
                        p.count_hamming, p.count_lee, p.count_euclidean);
        } else {
            OwnedString lw, ew;
            check(z4sd_bounded_search(code.c, ml_budget, ml_seed, &p, &lw.s, &ew.s));
            OwnedBin residue;
            check(z4sd_z4code_residue(code.c, &residue.c));
            uint32_t lower = 0;
            check(z4sd_bincode_min_weight(residue.c, 2, &lower));
            std::printf("lee weight bracket: [%u, %s] (lower: residue minimum weight; "
                        "upper: witness)\n",
                        lower, weight_str(p.d_lee).c_str());
            std::printf("witness upper bounds: hamming<=%s lee<=%s euclidean<=%s\n",
                        weight_str(p.d_hamming).c_str(), weight_str(p.d_lee).c_str(),
                        weight_str(p.d_euclidean).c_str());
            if (lw.s) std::printf("lee witness: %s\n", lw.s);
            if (ew.s) std::printf("euclidean witness: %s\n", ew.s);
        }
    });

    // census
    auto* census = app.add_subcommand("census", "weight splits at a given Lee weight");
    std::string cs_file;
    uint32_t cs_lee = 0;
    census->add_option("file", cs_file, ".z4c file")->required();
    census->add_option("--lee", cs_lee, "Lee weight to survey")->required();
    census->callback([&] {
        OwnedZ4 code;
        check(z4sd_z4code_read(cs_file.c_str(), &code.c));
        OwnedString s;
        check(z4sd_census(code.c, cs_lee, g.threads, &s.s));
        std::printf("n13 n2 count\n%s", s.s);
    });

    // sinv
    auto* sinv = app.add_subcommand("sinv", "support-count fingerprint");
    std::string si_file;
    uint32_t si_t = 0, si_k = 0;
    sinv->add_option("file", si_file, ".z4c file")->required();
    sinv->add_option("--t", si_t, "Hamming weight of the fingerprinted words")->required();
    sinv->add_option("--k", si_k, "column subset size")->required();
    sinv->callback([&] {
        OwnedZ4 code;
        check(z4sd_z4code_read(si_file.c_str(), &code.c));
        z4sd_support_invariant si{};
        check(z4sd_support_invariant_of(code.c, si_t, si_k, g.threads, &si));
        std::printf("t=%u k=%u max=%u min=%u cardinality=%" PRIu64 "\n", si.t, si.k, si.max,
                    si.min, si.cardinality);
    });

    // distinguish
    auto* dist = app.add_subcommand("distinguish", "partition codes by fingerprints");
    std::vector<std::string> di_files;
    uint32_t di_t = 9, di_kmax = 4;
    dist->add_option("files", di_files, ".z4c files")->required()->expected(-1);
    dist->add_option("--t", di_t, "Hamming weight")->capture_default_str();
    dist->add_option("--kmax", di_kmax, "largest column subset size")->capture_default_str();
    dist->callback([&] {
        std::vector<z4sd_z4code*> codes(di_files.size(), nullptr);
        for (size_t i = 0; i < di_files.size(); ++i)
            check(z4sd_z4code_read(di_files[i].c_str(), &codes[i]));
        std::vector<uint32_t> groups(di_files.size());
        uint32_t count = 0;
        z4sd_status st = z4sd_distinguish(codes.data(), codes.size(), di_t, di_kmax,
                                          g.threads, groups.data(), &count);
        for (auto* c : codes) z4sd_z4code_free(c);
        check(st);
        std::printf("groups: %u of %zu codes\n", count, di_files.size());
        for (size_t i = 0; i < di_files.size(); ++i)
            std::printf("%s\t%u\n", di_files[i].c_str(), groups[i]);
        if (count != di_files.size()) exit_code = 1;
    });

    // residue
    auto* residue = app.add_subcommand("residue", "binary residue code of a Z4 code");
    std::string re_file, re_out;
    residue->add_option("file", re_file, ".z4c file")->required();
    residue->add_option("--out", re_out, "write the .g2c here instead of stdout");
    residue->callback([&] {
        OwnedZ4 code;
        check(z4sd_z4code_read(re_file.c_str(), &code.c));
        OwnedBin r;
        check(z4sd_z4code_residue(code.c, &r.c));
        if (re_out.empty()) {
            OwnedString s;
            check(z4sd_bincode_format(r.c, &s.s));
            std::fputs(s.s, stdout);
        } else {
            check(z4sd_bincode_write(r.c, re_out.c_str()));
        }
    });

    // bounds
    auto* bounds = app.add_subcommand("bounds", "published upper bounds");
    bounds->require_subcommand(1);
    uint32_t bn = 0;
    std::string btype = "II";
    auto* blee = bounds->add_subcommand("lee", "minimum Lee weight bound");
    blee->add_option("--n", bn, "length")->required();
    blee->callback([&] {
        uint32_t v = 0;
        check(z4sd_lee_upper_bound(bn, &v));
        std::printf("lee_upper_bound(%u) = %u\n", bn, v);
    });
    auto* beuc = bounds->add_subcommand("euclid", "minimum Euclidean weight bound");
    beuc->add_option("--n", bn, "length")->required();
    beuc->add_option("--type", btype, "I or II")->check(CLI::IsMember({"I", "II"}));
    beuc->callback([&] {
        uint32_t v = 0;
        check(z4sd_euclidean_upper_bound(bn, btype == "II" ? 2 : 1, &v));
        std::printf("euclidean_upper_bound(%u, %s) = %u\n", bn, btype.c_str(), v);
    });
    auto* bbin = bounds->add_subcommand("binary", "binary self-dual minimum weight bound");
    bbin->add_option("--n", bn, "length")->required();
    bbin->callback([&] {
        uint32_t v = 0;
        check(z4sd_binary_sd_upper_bound(bn, &v));
        std::printf("binary_sd_upper_bound(%u) = %u\n", bn, v);
    });

    // check
    auto* chk = app.add_subcommand("check", "instance certificates");
    chk->require_subcommand(1);
    std::string t3_file;
    uint32_t t3_dl = 0;
    bool t3_assumed = false;
    auto* thm3 = chk->add_subcommand(
        "thm3", "residue extremality at lengths 24k and 24k+8");
    thm3->add_option("file", t3_file, ".z4c file")->required();
    thm3->add_option("--dl", t3_dl,
                     "externally established minimum Lee weight (lengths > 32)");
    thm3->add_flag("--assumed", t3_assumed, "mark --dl as assumed rather than exact");
    thm3->callback([&] {
        OwnedZ4 code;
        check(z4sd_z4code_read(t3_file.c_str(), &code.c));
        uint32_t dl = t3_dl;
        int exact = !t3_assumed;
        if (dl == 0) {
            z4sd_weight_profile p{};
            check(z4sd_enumerate_weights(code.c, g.threads, &p));
            dl = p.d_lee;
            exact = 1;
        }
        int pass = 0;
        OwnedString rep;
        check(z4sd_check_residue_extremal(code.c, dl, exact, g.threads, &pass, &rep.s));
        std::fputs(rep.s, stdout);
        if (!pass) exit_code = 1;
    });
    std::string p5_z4, p5_g2;
    auto* prop5 = chk->add_subcommand(
        "prop5", "s-extremality of self-dual containers of the residue");
    prop5->add_option("z4file", p5_z4, ".z4c file")->required();
    prop5->add_option("g2file", p5_g2, ".g2c container")->required();
    prop5->callback([&] {
        OwnedZ4 code;
        check(z4sd_z4code_read(p5_z4.c_str(), &code.c));
        OwnedBin container;
        check(z4sd_bincode_read(p5_g2.c_str(), &container.c));
        int pass = 0;
        OwnedString rep;
        check(z4sd_check_container(code.c, container.c, g.threads, &pass, &rep.s));
        std::fputs(rep.s, stdout);
        if (!pass) exit_code = 1;
    });

    // lift-search
    auto* lift = app.add_subcommand("lift-search",
                                    "self-dual Z4 codes with a prescribed residue");
    std::string lf_res, lf_outdir;
    uint64_t lf_trials = 100000, lf_seed = 1;
    uint32_t lf_target = 10;
    lift->add_option("--residue", lf_res, ".g2c doubly even self-dual code")->required();
    lift->add_option("--trials", lf_trials, "seeded trials")->capture_default_str();
    lift->add_option("--seed", lf_seed, "search seed")->capture_default_str();
    lift->add_option("--target-dl", lf_target, "keep codes with d_lee >= this")
        ->capture_default_str();
    lift->add_option("--out-dir", lf_outdir, "write found codes here as .z4c files");
    lift->callback([&] {
        OwnedBin res;
        check(z4sd_bincode_read(lf_res.c_str(), &res.c));
        z4sd_z4code** found = nullptr;
        size_t count = 0;
        uint64_t rejected = 0;
        check(z4sd_lift_search(res.c, lf_trials, lf_seed, lf_target, g.threads, &found,
                               &count, &rejected));
        std::printf("trials=%" PRIu64 " kept=%zu rejected=%" PRIu64 "\n", lf_trials, count,
                    rejected);
        for (size_t i = 0; i < count; ++i) {
            if (lf_outdir.empty()) {
                OwnedString s;
                check(z4sd_z4code_format(found[i], &s.s));
                std::printf("# lift %zu\n%s", i, s.s);
            } else {
                char path[4096];
                std::snprintf(path, sizeof path, "%s/lift_%04zu.z4c", lf_outdir.c_str(), i);
                check(z4sd_z4code_write(found[i], path));
            }
        }
        z4sd_z4code_array_free(found, count);
        if (count == 0) exit_code = 1;
    });

    // catalog reports
    std::string vc_glob = "*";
    auto* vc = app.add_subcommand("verify-catalog", "verify catalog codes against records");
    vc->add_option("pattern", vc_glob, "id glob, e.g. 'D24*'")->capture_default_str();
    vc->callback([&] {
        OwnedString rep;
        int all_pass = 0;
        check(z4sd_catalog_verify(g.catalog.c_str(), vc_glob.c_str(), g.threads,
                                  g.format == "tsv", &rep.s, &all_pass));
        std::fputs(rep.s, stdout);
        if (!all_pass) exit_code = 1;
    });
    app.add_subcommand("report-table3", "recompute the stored fingerprint table")
        ->callback([&] { exit_code = run_catalog_report(g, z4sd_catalog_fingerprint_table); });
    app.add_subcommand("report-distinct60", "pairwise inequivalence of the length-24 codes")
        ->callback([&] { exit_code = run_catalog_report(g, z4sd_catalog_distinct_count); });

    CLI11_PARSE(app, argc, argv);
    return exit_code;
}
