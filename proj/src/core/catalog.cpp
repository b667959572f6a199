#include "catalog.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bounds.hpp"
#include "constructions.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "parallel.hpp"

namespace z4sd {

namespace {

using nlohmann::json;

ExpectedValue parse_expected(const json& j) {
    ExpectedValue e;
    e.value = j.at("value").get<uint32_t>();
    e.exact = j.value("exact", true);
    e.basis = j.value("basis", "computed");
    return e;
}

std::vector<uint8_t> digits_of(const std::string& s) {
    std::vector<uint8_t> d;
    d.reserve(s.size());
    for (char c : s) {
        if (c < '0' || c > '3') throw ParseError("manifest: bad digit string " + s);
        d.push_back(static_cast<uint8_t>(c - '0'));
    }
    return d;
}

// fixed-width helper
std::string pad(const std::string& s, size_t w) {
    return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

} // namespace

bool glob_match(const std::string& pattern, const std::string& text) {
    size_t p = 0, t = 0, star = std::string::npos, mark = 0;
    while (t < text.size()) {
        if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
            ++p;
            ++t;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            mark = t;
        } else if (star != std::string::npos) {
            p = star + 1;
            t = ++mark;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

Catalog Catalog::load(const std::string& dir) {
    const std::string path = dir + "/manifest.json";
    std::ifstream f(path);
    if (!f) throw IoError("cannot open " + path);
    json doc;
    try {
        f >> doc;
    } catch (const std::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    Catalog cat;
    cat.dir = dir;
    for (const auto& jr : doc.at("records")) {
        CatalogRecord rec;
        rec.id = jr.at("id").get<std::string>();
        rec.file = jr.at("file").get<std::string>();
        rec.length = jr.at("length").get<uint32_t>();
        const auto& jc = jr.at("construction");
        rec.kind = jc.at("kind").get<std::string>();
        if (rec.kind == "bdc") {
            rec.row = jc.at("row").get<std::string>();
            auto b = jc.at("border");
            rec.border = {b.at(0).get<uint8_t>(), b.at(1).get<uint8_t>(),
                          b.at(2).get<uint8_t>()};
        } else if (rec.kind == "fnc") {
            rec.row_a = jc.at("row_a").get<std::string>();
            rec.row_b = jc.at("row_b").get<std::string>();
        } else if (rec.kind != "standard_form") {
            throw ParseError(path + ": unknown construction kind " + rec.kind);
        }
        if (jr.contains("expected")) {
            const auto& je = jr.at("expected");
            if (je.contains("type")) rec.type = je.at("type").get<std::string>();
            if (je.contains("d_lee")) rec.d_lee = parse_expected(je.at("d_lee"));
            if (je.contains("d_euclidean"))
                rec.d_euclidean = parse_expected(je.at("d_euclidean"));
            if (je.contains("residue_extremal")) {
                ExpectedValue e;
                e.value = je.at("residue_extremal").at("value").get<bool>() ? 1 : 0;
                e.basis = je.at("residue_extremal").value("basis", "computed");
                rec.residue_extremal = e;
            }
            if (je.contains("s_invariants_t9"))
                for (const auto& tr : je.at("s_invariants_t9"))
                    rec.s_invariants_t9.push_back({tr.at(0).get<uint32_t>(),
                                                   tr.at(1).get<uint32_t>(),
                                                   tr.at(2).get<uint32_t>()});
        }
        if (jr.contains("search")) {
            rec.search_budget = jr.at("search").value("budget", uint64_t(0));
            rec.search_seed = jr.at("search").value("seed", uint64_t(0));
        }
        cat.records.push_back(std::move(rec));
    }
    return cat;
}

const CatalogRecord* Catalog::find(const std::string& id) const {
    for (const auto& r : records)
        if (r.id == id) return &r;
    return nullptr;
}

Z4Code Catalog::load_code(const CatalogRecord& rec) const {
    return Z4Code::read_file(dir + "/" + rec.file);
}

namespace {

struct FieldCheck {
    std::string field, expected, got;
    bool pass = true;
};

struct CodeVerdict {
    std::string id;
    std::vector<FieldCheck> fields;
    bool pass() const {
        for (const auto& f : fields)
            if (!f.pass) return false;
        return true;
    }
};

CodeVerdict verify_record(const Catalog& cat, const CatalogRecord& rec, uint32_t threads) {
    CodeVerdict v;
    v.id = rec.id;
    Z4Code code = cat.load_code(rec);

    // rebuild from the construction parameters and compare digits
    if (rec.kind == "bdc") {
        Z4Code built = bordered_double_circulant(
            digits_of(rec.row), BorderSpec{rec.border[0], rec.border[1], rec.border[2]});
        bool same = built.format() == code.format();
        v.fields.push_back({"rebuild", "identical", same ? "identical" : "differs", same});
    } else if (rec.kind == "fnc") {
        Z4Code built = four_negacirculant(digits_of(rec.row_a), digits_of(rec.row_b));
        bool same = built.format() == code.format();
        v.fields.push_back({"rebuild", "identical", same ? "identical" : "differs", same});
    } else {
        // standard form: the left block must be the identity
        bool shape = code.k2() == 0 && code.length() == 2 * code.k1();
        for (uint32_t i = 0; i < code.k1() && shape; ++i)
            for (uint32_t j = 0; j < code.k1() && shape; ++j)
                if (code.rows()[i].digit(j) != (i == j ? 1 : 0)) shape = false;
        v.fields.push_back({"shape", "(I|M)", shape ? "(I|M)" : "other", shape});
    }

    bool sd = code.is_self_dual();
    v.fields.push_back({"self_dual", "yes", sd ? "yes" : "no", sd});
    if (!sd) return v;

    const bool exhaustive = code.size_log2() <= 32;
    WeightProfile prof;
    Z4Type type = generator_type_criterion(code);
    if (exhaustive) {
        SurveyOptions opt;
        opt.threads = threads;
        SurveyResult res = survey(code, opt);
        prof = res.profile;
        prof.exact = true;
        Z4Type by_enum = res.all_euclidean_mult8 ? Z4Type::II : Z4Type::I;
        if (by_enum != type)
            throw InternalError(rec.id + ": generator type criterion contradicts enumeration");
    }

    if (rec.type) {
        std::string got = type == Z4Type::II ? "II" : "I";
        v.fields.push_back({"type", *rec.type, got, got == *rec.type});
    }

    std::optional<BoundedSearchResult> bounded;
    if (!exhaustive && (rec.d_lee || rec.d_euclidean)) {
        uint64_t budget = rec.search_budget ? rec.search_budget : 100000000;
        bounded = bounded_search(code, budget, rec.search_seed);
    }

    if (rec.d_lee) {
        if (rec.d_lee->exact) {
            if (!exhaustive) {
                v.fields.push_back({"d_lee", std::to_string(rec.d_lee->value),
                                    "inexact (too large)", false});
            } else {
                v.fields.push_back({"d_lee", std::to_string(rec.d_lee->value),
                                    std::to_string(prof.d_lee),
                                    prof.d_lee == rec.d_lee->value});
            }
        } else {
            uint32_t lower = min_weight(code.residue());
            uint32_t witness = bounded->profile.d_lee;
            std::string got = "[" + std::to_string(lower) + "," +
                              (witness == WeightProfile::kUnknown ? std::string("?")
                                                                  : std::to_string(witness)) +
                              "]";
            bool ok = witness == rec.d_lee->value && lower <= rec.d_lee->value;
            v.fields.push_back({"d_lee", "<=" + std::to_string(rec.d_lee->value), got, ok});
        }
    }
    if (rec.d_euclidean) {
        if (rec.d_euclidean->exact) {
            bool ok = exhaustive && prof.d_euclidean == rec.d_euclidean->value;
            v.fields.push_back({"d_euclid", std::to_string(rec.d_euclidean->value),
                                exhaustive ? std::to_string(prof.d_euclidean) : "inexact",
                                ok});
        } else {
            uint32_t witness = bounded->profile.d_euclidean;
            bool ok = witness == rec.d_euclidean->value;
            v.fields.push_back({"d_euclid", "<=" + std::to_string(rec.d_euclidean->value),
                                witness == WeightProfile::kUnknown ? "?"
                                                                   : std::to_string(witness),
                                ok});
        }
    }

    if (rec.residue_extremal) {
        BinaryCode r = code.residue();
        bool rsd = r.is_self_dual();
        bool de = parity_class(r) == ParityClass::DoublyEven;
        uint32_t d = r.dim() ? min_weight(r) : 0;
        bool extremal = rsd && de && d == binary_sd_upper_bound(code.length());
        bool expect = rec.residue_extremal->value != 0;
        v.fields.push_back({"residue_extremal", expect ? "yes" : "no",
                            extremal ? "yes" : "no", extremal == expect});
    }

    if (!rec.s_invariants_t9.empty()) {
        SurveyOptions opt;
        opt.threads = threads;
        opt.support_hamming_t = 9;
        SurveyResult res = survey(code, opt);
        bool ok = true;
        std::string got;
        for (uint32_t k = 1; k <= rec.s_invariants_t9.size(); ++k) {
            SInvariant si = s_invariant_from_masks(res.support_masks, code.length(), 9, k);
            const auto& exp = rec.s_invariants_t9[k - 1];
            if (si.max != exp[0] || si.min != exp[1] || si.cardinality != exp[2]) ok = false;
            got += "(" + std::to_string(si.max) + "," + std::to_string(si.min) + "," +
                   std::to_string(si.cardinality) + ")";
        }
        v.fields.push_back({"s_inv_t9", "stored", ok ? "match" : got, ok});
    }
    return v;
}

} // namespace

ReportOutcome verify_catalog(const Catalog& cat, const std::string& id_glob, uint32_t threads) {
    std::vector<const CatalogRecord*> selected;
    for (const auto& r : cat.records)
        if (glob_match(id_glob.empty() ? "*" : id_glob, r.id)) selected.push_back(&r);

    std::vector<CodeVerdict> verdicts(selected.size());
    parallel_tasks(selected.size(), threads, [&](uint64_t i) {
        verdicts[i] = verify_record(cat, *selected[i], 1);
    });

    ReportOutcome out;
    out.checked = static_cast<uint32_t>(selected.size());
    out.all_pass = true;
    std::ostringstream text, tsv;
    text << pad("code", 8) << pad("n", 4) << "checks\n";
    tsv << "code\tfield\texpected\tgot\tstatus\n";
    for (size_t i = 0; i < verdicts.size(); ++i) {
        const auto& v = verdicts[i];
        text << pad(v.id, 8) << pad(std::to_string(selected[i]->length), 4);
        for (const auto& f : v.fields) {
            text << f.field << "=" << f.got << (f.pass ? " " : "(FAIL) ");
            tsv << v.id << '\t' << f.field << '\t' << f.expected << '\t' << f.got << '\t'
                << (f.pass ? "PASS" : "FAIL") << '\n';
        }
        text << "=> " << (v.pass() ? "PASS" : "FAIL") << "\n";
        if (!v.pass()) out.all_pass = false;
    }
    text << (out.all_pass ? "all pass" : "FAILURES present") << " (" << out.checked
         << " codes)\n";
    out.text = text.str();
    out.tsv = tsv.str();
    return out;
}

ReportOutcome report_s_invariant_table(const Catalog& cat, uint32_t threads) {
    std::vector<const CatalogRecord*> selected;
    for (const auto& r : cat.records)
        if (!r.s_invariants_t9.empty()) selected.push_back(&r);

    struct Row {
        std::string id;
        std::vector<std::array<uint32_t, 3>> got;
        bool pass = true;
    };
    std::vector<Row> rows(selected.size());
    parallel_tasks(selected.size(), threads, [&](uint64_t i) {
        const CatalogRecord& rec = *selected[i];
        Z4Code code = cat.load_code(rec);
        SurveyOptions opt;
        opt.support_hamming_t = 9;
        SurveyResult res = survey(code, opt);
        Row row;
        row.id = rec.id;
        for (uint32_t k = 1; k <= rec.s_invariants_t9.size(); ++k) {
            SInvariant si = s_invariant_from_masks(res.support_masks, code.length(), 9, k);
            row.got.push_back({si.max, si.min, static_cast<uint32_t>(si.cardinality)});
            const auto& exp = rec.s_invariants_t9[k - 1];
            if (si.max != exp[0] || si.min != exp[1] || si.cardinality != exp[2])
                row.pass = false;
        }
        rows[i] = std::move(row);
    });

    ReportOutcome out;
    out.checked = static_cast<uint32_t>(rows.size());
    out.all_pass = true;
    std::ostringstream text, tsv;
    text << pad("code", 8);
    for (uint32_t k = 1; k <= 4; ++k) text << pad("S" + std::to_string(k), 16);
    text << "status\n";
    tsv << "code\tk\tmax\tmin\tcardinality\tstatus\n";
    for (const auto& row : rows) {
        text << pad(row.id, 8);
        for (size_t k = 0; k < row.got.size(); ++k) {
            const auto& g = row.got[k];
            text << pad("(" + std::to_string(g[0]) + "," + std::to_string(g[1]) + "," +
                            std::to_string(g[2]) + ")",
                        16);
            tsv << row.id << '\t' << (k + 1) << '\t' << g[0] << '\t' << g[1] << '\t' << g[2]
                << '\t' << (row.pass ? "PASS" : "FAIL") << '\n';
        }
        text << (row.pass ? "PASS" : "FAIL") << "\n";
        if (!row.pass) out.all_pass = false;
    }
    out.text = text.str();
    out.tsv = tsv.str();
    return out;
}

ReportOutcome report_distinct_count(const Catalog& cat, uint32_t threads) {
    std::vector<const CatalogRecord*> selected;
    for (const auto& r : cat.records)
        if (r.length == 24) selected.push_back(&r);

    std::vector<Z4Code> codes;
    codes.reserve(selected.size());
    for (const auto* r : selected) codes.push_back(cat.load_code(*r));
    std::vector<const Z4Code*> ptrs;
    for (const auto& c : codes) ptrs.push_back(&c);

    uint32_t groups = 0;
    std::vector<uint32_t> assign = distinguish(ptrs, 9, 4, &groups, threads);

    ReportOutcome out;
    out.checked = static_cast<uint32_t>(codes.size());
    out.all_pass = groups == codes.size();
    std::ostringstream text, tsv;
    text << "codes: " << codes.size() << "\ngroups: " << groups << "\n";
    tsv << "code\tgroup\n";
    for (size_t i = 0; i < assign.size(); ++i)
        tsv << selected[i]->id << '\t' << assign[i] << '\n';
    if (!out.all_pass) {
        for (uint32_t g = 0; g < groups; ++g) {
            std::string members;
            uint32_t count = 0;
            for (size_t i = 0; i < assign.size(); ++i)
                if (assign[i] == g) {
                    members += (count ? "," : "") + selected[i]->id;
                    ++count;
                }
            if (count > 1) text << "collision group " << g << ": " << members << "\n";
        }
    }
    text << "pairwise inequivalent: " << (out.all_pass ? "yes" : "NO") << "\n";
    out.text = text.str();
    out.tsv = tsv.str();
    return out;
}

} // namespace z4sd
