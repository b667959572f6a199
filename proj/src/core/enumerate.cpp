#include "enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <map>
#include <string>

#include "errors.hpp"
#include "parallel.hpp"
#include "rng.hpp"

namespace z4sd {

namespace {

inline void update_min(uint32_t w, uint32_t& best, uint64_t& count) {
    if (w < best) {
        best = w;
        count = 1;
    } else if (w == best) {
        ++count;
    }
}

// Per-subtask accumulator. Merge order is fixed by subtask index, and every
// merged quantity is commutative, so results do not depend on scheduling.
struct Accum {
    uint32_t census_target = kNoTarget;
    uint32_t mask_t = kNoTarget;
    uint32_t abort_below = 0;

    uint32_t min_ham = WeightProfile::kUnknown;
    uint32_t min_lee = WeightProfile::kUnknown;
    uint32_t min_euc = WeightProfile::kUnknown;
    uint64_t cnt_ham = 0, cnt_lee = 0, cnt_euc = 0;
    uint8_t euc_mod_or = 0;
    std::vector<uint64_t> census_by_twos;
    std::vector<uint64_t> masks;
    uint64_t visited = 0;
    uint64_t checksum = 0;
    bool aborted = false;

    inline bool visit(uint32_t odd, uint32_t twos, uint64_t lo0, uint64_t mask0) {
        ++visited;
        checksum ^= lo0;
        uint32_t lee = odd + 2 * twos;
        if (lee == 0) return true; // the zero word
        update_min(odd + twos, min_ham, cnt_ham);
        update_min(lee, min_lee, cnt_lee);
        uint32_t euc = odd + 4 * twos;
        update_min(euc, min_euc, cnt_euc);
        euc_mod_or |= euc & 7;
        if (lee == census_target) ++census_by_twos[twos];
        if (odd + twos == mask_t) masks.push_back(mask0);
        if (lee < abort_below) {
            aborted = true;
            return false;
        }
        return true;
    }

    void merge_from(const Accum& o) {
        if (o.min_ham < min_ham) { min_ham = o.min_ham; cnt_ham = o.cnt_ham; }
        else if (o.min_ham == min_ham) cnt_ham += o.cnt_ham;
        if (o.min_lee < min_lee) { min_lee = o.min_lee; cnt_lee = o.cnt_lee; }
        else if (o.min_lee == min_lee) cnt_lee += o.cnt_lee;
        if (o.min_euc < min_euc) { min_euc = o.min_euc; cnt_euc = o.cnt_euc; }
        else if (o.min_euc == min_euc) cnt_euc += o.cnt_euc;
        euc_mod_or |= o.euc_mod_or;
        if (!o.census_by_twos.empty()) {
            if (census_by_twos.empty()) census_by_twos.assign(o.census_by_twos.size(), 0);
            for (size_t i = 0; i < o.census_by_twos.size(); ++i)
                census_by_twos[i] += o.census_by_twos[i];
        }
        masks.insert(masks.end(), o.masks.begin(), o.masks.end());
        visited += o.visited;
        checksum ^= o.checksum;
        aborted = aborted || o.aborted;
    }
};

struct EnumContext {
    uint32_t n = 0;
    uint32_t limbs = 1;
    std::vector<Z4Word> rows;   // k1 order-4 rows then k2 order-2 rows
    std::vector<uint8_t> radix; // 4 or 2 per digit
    uint32_t inner = 0;         // digits enumerated in Gray order
    uint64_t subtasks = 1;      // product of the radices above `inner`
};

EnumContext make_context(const Z4Code& c, uint32_t threads) {
    EnumContext ctx;
    ctx.n = c.length();
    ctx.limbs = limbs_for(c.length());
    ctx.rows = c.rows();
    const uint32_t d = c.k1() + c.k2();
    ctx.radix.resize(d);
    for (uint32_t j = 0; j < d; ++j) ctx.radix[j] = j < c.k1() ? 4 : 2;
    ctx.inner = d;
    ctx.subtasks = 1;
    if (threads > 1) {
        uint64_t want = uint64_t(threads) * 4;
        while (ctx.inner > 0 && ctx.subtasks < want) {
            --ctx.inner;
            ctx.subtasks *= ctx.radix[ctx.inner];
        }
    }
    return ctx;
}

// Adds per inner digit, both directions; radix-2 digits add twice the row
// either way.
struct RowAdd {
    uint64_t lo, hi;
};

// Reflected mixed-radix Gray traversal of one subtask (single-limb words):
// each step is one row addition plus popcounts.
void run_subtask_single(const EnumContext& ctx, uint64_t subtask, Accum& acc,
                        const std::atomic<bool>* global_abort) {
    // base word from the top digit assignment
    Z4Word base(ctx.n);
    {
        uint64_t s = subtask;
        for (uint32_t j = ctx.inner; j < ctx.radix.size(); ++j) {
            uint8_t v = static_cast<uint8_t>(s % ctx.radix[j]);
            s /= ctx.radix[j];
            if (v) base = base.plus(ctx.rows[j].scaled(v));
        }
    }
    uint64_t lo = base.lo_limbs().empty() ? 0 : base.lo_limbs()[0];
    uint64_t hi = base.hi_limbs().empty() ? 0 : base.hi_limbs()[0];

    const uint32_t d = ctx.inner;
    std::vector<RowAdd> add(2 * d);
    for (uint32_t j = 0; j < d; ++j) {
        // negation fixes all-even rows, so radix-2 digits add the same word
        // in both directions
        Z4Word bwd = ctx.rows[j].negated();
        add[2 * j + 1] = RowAdd{ctx.rows[j].lo_limbs()[0], ctx.rows[j].hi_limbs()[0]};
        add[2 * j] = RowAdd{bwd.lo_limbs()[0], bwd.hi_limbs()[0]};
    }

    auto visit = [&](uint64_t l, uint64_t h) {
        uint32_t odd = static_cast<uint32_t>(std::popcount(l));
        uint32_t twos = static_cast<uint32_t>(std::popcount(h & ~l));
        return acc.visit(odd, twos, l, l | h);
    };
    if (!visit(lo, hi)) return;

    uint8_t a[33] = {0};
    int8_t o[33];
    uint8_t f[34];
    uint8_t top[33];
    for (uint32_t j = 0; j < d; ++j) {
        o[j] = 1;
        f[j] = static_cast<uint8_t>(j);
        top[j] = static_cast<uint8_t>(ctx.radix[j] - 1);
    }
    f[d] = static_cast<uint8_t>(d);

    for (;;) {
        uint8_t j = f[0];
        f[0] = 0;
        if (j == d) break;
        a[j] = static_cast<uint8_t>(a[j] + o[j]);
        const RowAdd& r = add[2 * j + (o[j] > 0 ? 1 : 0)];
        uint64_t nlo = lo ^ r.lo;
        hi = hi ^ r.hi ^ (lo & r.lo);
        lo = nlo;
        if (a[j] == 0 || a[j] == top[j]) {
            o[j] = static_cast<int8_t>(-o[j]);
            f[j] = f[j + 1];
            f[j + 1] = static_cast<uint8_t>(j + 1);
        }
        if (!visit(lo, hi)) return;
        if ((acc.visited & 0xFFFF) == 0 && global_abort &&
            global_abort->load(std::memory_order_relaxed))
            return;
    }
}

void run_subtask_generic(const EnumContext& ctx, uint64_t subtask, Accum& acc,
                         const std::atomic<bool>* global_abort) {
    Z4Word base(ctx.n);
    {
        uint64_t s = subtask;
        for (uint32_t j = ctx.inner; j < ctx.radix.size(); ++j) {
            uint8_t v = static_cast<uint8_t>(s % ctx.radix[j]);
            s /= ctx.radix[j];
            if (v) base = base.plus(ctx.rows[j].scaled(v));
        }
    }
    const uint32_t L = ctx.limbs;
    std::vector<uint64_t> lo(base.lo_limbs().begin(), base.lo_limbs().end());
    std::vector<uint64_t> hi(base.hi_limbs().begin(), base.hi_limbs().end());

    const uint32_t d = ctx.inner;
    std::vector<std::vector<uint64_t>> add_lo(2 * d), add_hi(2 * d);
    for (uint32_t j = 0; j < d; ++j) {
        Z4Word bwd = ctx.radix[j] == 4 ? ctx.rows[j].negated() : ctx.rows[j];
        add_lo[2 * j].assign(bwd.lo_limbs().begin(), bwd.lo_limbs().end());
        add_hi[2 * j].assign(bwd.hi_limbs().begin(), bwd.hi_limbs().end());
        add_lo[2 * j + 1].assign(ctx.rows[j].lo_limbs().begin(), ctx.rows[j].lo_limbs().end());
        add_hi[2 * j + 1].assign(ctx.rows[j].hi_limbs().begin(), ctx.rows[j].hi_limbs().end());
    }

    auto visit = [&]() {
        uint32_t odd = 0, twos = 0;
        for (uint32_t i = 0; i < L; ++i) {
            odd += static_cast<uint32_t>(std::popcount(lo[i]));
            twos += static_cast<uint32_t>(std::popcount(hi[i] & ~lo[i]));
        }
        return acc.visit(odd, twos, lo[0], lo[0] | hi[0]);
    };
    if (!visit()) return;

    std::vector<uint8_t> a(d, 0), f(d + 1), top(d);
    std::vector<int8_t> o(d, 1);
    for (uint32_t j = 0; j < d; ++j) {
        f[j] = static_cast<uint8_t>(j);
        top[j] = static_cast<uint8_t>(ctx.radix[j] - 1);
    }
    f[d] = static_cast<uint8_t>(d);

    for (;;) {
        uint8_t j = f[0];
        f[0] = 0;
        if (j == d) break;
        a[j] = static_cast<uint8_t>(a[j] + o[j]);
        uint32_t slot = 2u * j + (o[j] > 0 ? 1 : 0);
        for (uint32_t i = 0; i < L; ++i) {
            uint64_t nlo = lo[i] ^ add_lo[slot][i];
            hi[i] = hi[i] ^ add_hi[slot][i] ^ (lo[i] & add_lo[slot][i]);
            lo[i] = nlo;
        }
        if (a[j] == 0 || a[j] == top[j]) {
            o[j] = static_cast<int8_t>(-o[j]);
            f[j] = f[j + 1];
            f[j + 1] = static_cast<uint8_t>(j + 1);
        }
        if (!visit()) return;
        if ((acc.visited & 0xFFFF) == 0 && global_abort &&
            global_abort->load(std::memory_order_relaxed))
            return;
    }
}

uint64_t binom_capped(uint32_t n, uint32_t k, uint64_t cap) {
    if (k > n) return 0;
    unsigned __int128 r = 1;
    for (uint32_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > cap) return cap + 1;
    }
    return static_cast<uint64_t>(r);
}

} // namespace

SurveyResult survey(const Z4Code& c, const SurveyOptions& opt) {
    if (c.size_log2() > 32)
        throw TooLargeError("survey: more than 2^32 codewords; use bounded_search");
    if (opt.support_hamming_t != kNoTarget && c.length() > 64)
        throw TooLargeError("survey: support masks need length <= 64");

    uint32_t threads = std::max<uint32_t>(1, opt.threads);
    EnumContext ctx = make_context(c, threads);

    std::vector<Accum> accs(ctx.subtasks);
    for (auto& a : accs) {
        a.census_target = opt.census_lee_target;
        a.mask_t = opt.support_hamming_t;
        a.abort_below = opt.abort_below_lee;
        if (opt.census_lee_target != kNoTarget) a.census_by_twos.assign(c.length() + 1, 0);
    }

    std::atomic<bool> global_abort{false};
    bool single = ctx.limbs == 1;
    parallel_tasks(ctx.subtasks, threads, [&](uint64_t s) {
        if (single)
            run_subtask_single(ctx, s, accs[s], &global_abort);
        else
            run_subtask_generic(ctx, s, accs[s], &global_abort);
        if (accs[s].aborted) global_abort.store(true, std::memory_order_relaxed);
    });

    Accum total;
    total.census_target = opt.census_lee_target;
    total.mask_t = opt.support_hamming_t;
    for (const auto& a : accs) total.merge_from(a);

    SurveyResult res;
    res.profile.d_hamming = total.min_ham;
    res.profile.d_lee = total.min_lee;
    res.profile.d_euclidean = total.min_euc;
    res.profile.count_hamming = total.cnt_ham;
    res.profile.count_lee = total.cnt_lee;
    res.profile.count_euclidean = total.cnt_euc;
    res.aborted = total.aborted;
    res.profile.exact = !total.aborted;
    res.all_euclidean_mult8 = (total.euc_mod_or == 0);
    if (opt.census_lee_target != kNoTarget) {
        for (uint32_t twos = 0; twos <= c.length(); ++twos) {
            uint64_t cnt = total.census_by_twos.empty() ? 0 : total.census_by_twos[twos];
            if (cnt)
                res.census.push_back({{opt.census_lee_target - 2 * twos, twos}, cnt});
        }
    }
    res.support_masks = std::move(total.masks);
    std::sort(res.support_masks.begin(), res.support_masks.end());
    res.visited = total.visited;
    res.lo_checksum = total.checksum;
    return res;
}

WeightProfile enumerate_weights(const Z4Code& c, uint32_t threads) {
    if (c.size_log2() == 0)
        throw PreconditionError("enumerate_weights: the zero code has no nonzero codewords");
    SurveyOptions opt;
    opt.threads = threads;
    SurveyResult res = survey(c, opt);
    WeightProfile p = res.profile;
    p.exact = true;

    if (c.is_self_dual()) {
        BinaryCode r = c.residue();
        if (r.dim() > 0 && min_weight(r) > p.d_lee)
            throw InternalError("residue lower bound exceeds the enumerated Lee weight");
        BinaryCode rd = r.dual();
        if (rd.dim() > 0 && p.d_lee > 2 * min_weight(rd))
            throw InternalError("enumerated Lee weight exceeds twice the residue-dual weight");
        bool gen_type2 = generator_type_criterion(c) == Z4Type::II;
        if (gen_type2 != res.all_euclidean_mult8)
            throw InternalError("generator type criterion contradicts the enumeration");
    }
    return p;
}

Z4Type type_of(const Z4Code& c, uint32_t threads) {
    Z4Type gen = generator_type_criterion(c);
    if (c.size_log2() <= 32 && c.size_log2() > 0) {
        SurveyOptions opt;
        opt.threads = threads;
        SurveyResult res = survey(c, opt);
        Z4Type by_enum = res.all_euclidean_mult8 ? Z4Type::II : Z4Type::I;
        if (by_enum != gen)
            throw InternalError("generator type criterion contradicts the enumeration");
        return by_enum;
    }
    return gen;
}

std::vector<std::pair<std::pair<uint32_t, uint32_t>, uint64_t>>
lee_split_census(const Z4Code& c, uint32_t lee_target, uint32_t threads) {
    SurveyOptions opt;
    opt.threads = threads;
    opt.census_lee_target = lee_target;
    return survey(c, opt).census;
}

SInvariant s_invariant_from_masks(std::span<const uint64_t> masks, uint32_t n, uint32_t t,
                                  uint32_t k) {
    if (k < 1 || k > n) throw ArgumentError("support invariant: k out of range");
    SInvariant s;
    s.t = t;
    s.k = k;
    if (masks.empty()) {
        // no codewords of weight t: the value set is {0} by convention
        s.values = {0};
        s.cardinality = 1;
        return s;
    }
    std::vector<uint8_t> seen(masks.size() + 1, 0);
    uint32_t vmax = 0, vmin = std::numeric_limits<uint32_t>::max();

    std::vector<uint32_t> idx(k);
    std::vector<uint64_t> prefix(k + 1, 0);
    uint32_t depth = 0;
    idx[0] = 0;
    while (true) {
        if (idx[depth] > n - k + depth) {
            if (depth == 0) break;
            --depth;
            ++idx[depth];
            continue;
        }
        prefix[depth + 1] = prefix[depth] | (uint64_t(1) << idx[depth]);
        if (depth + 1 == k) {
            uint64_t sub = prefix[depth + 1];
            uint32_t cnt = 0;
            for (uint64_t m : masks)
                if ((m & sub) == sub) ++cnt;
            seen[cnt] = 1;
            vmax = std::max(vmax, cnt);
            vmin = std::min(vmin, cnt);
            ++idx[depth];
        } else {
            ++depth;
            idx[depth] = idx[depth - 1] + 1;
        }
    }
    s.max = vmax;
    s.min = vmin;
    for (uint32_t v = 0; v < seen.size(); ++v)
        if (seen[v]) s.values.push_back(v);
    s.cardinality = s.values.size();
    return s;
}

SInvariant s_invariant(const Z4Code& c, uint32_t t, uint32_t k, uint32_t threads) {
    if (c.length() > 64) throw TooLargeError("support invariant: length must be <= 64");
    if (k < 1 || k > c.length()) throw ArgumentError("support invariant: k out of range");
    if (binom_capped(c.length(), k, uint64_t(1) << 22) > (uint64_t(1) << 22))
        throw TooLargeError("support invariant: too many column subsets");
    SurveyOptions opt;
    opt.threads = threads;
    opt.support_hamming_t = t;
    SurveyResult res = survey(c, opt);
    return s_invariant_from_masks(res.support_masks, c.length(), t, k);
}

std::vector<uint32_t> distinguish(std::span<const Z4Code* const> codes, uint32_t t,
                                  uint32_t k_max, uint32_t* group_count, uint32_t threads) {
    if (k_max < 1) throw ArgumentError("distinguish: k_max must be >= 1");
    std::vector<std::string> keys(codes.size());
    parallel_tasks(codes.size(), threads, [&](uint64_t i) {
        const Z4Code& c = *codes[i];
        if (c.length() > 64) throw TooLargeError("distinguish: length must be <= 64");
        if (binom_capped(c.length(), k_max, uint64_t(1) << 22) > (uint64_t(1) << 22))
            throw TooLargeError("distinguish: too many column subsets");
        SurveyOptions opt;
        opt.threads = 1;
        opt.support_hamming_t = t;
        SurveyResult res = survey(c, opt);
        std::string key;
        for (uint32_t k = 1; k <= k_max; ++k) {
            SInvariant si = s_invariant_from_masks(res.support_masks, c.length(), t, k);
            for (uint32_t v : si.values) key += std::to_string(v) + ",";
            key += "|";
        }
        keys[i] = std::move(key);
    });
    std::vector<uint32_t> groups(codes.size());
    std::map<std::string, uint32_t> first;
    uint32_t next = 0;
    for (size_t i = 0; i < codes.size(); ++i) {
        auto [it, inserted] = first.try_emplace(keys[i], next);
        if (inserted) ++next;
        groups[i] = it->second;
    }
    if (group_count) *group_count = next;
    return groups;
}

namespace {

Z4Word word_from_planes(uint32_t n, uint64_t lo, uint64_t hi) {
    Z4Word w(n);
    for (uint32_t i = 0; i < n; ++i) {
        uint8_t d = static_cast<uint8_t>((((hi >> i) & 1) << 1) | ((lo >> i) & 1));
        if (d) w.set_digit(i, d);
    }
    return w;
}

} // namespace

BoundedSearchResult bounded_search(const Z4Code& c, uint64_t budget, uint64_t seed) {
    const uint32_t n = c.length();
    const uint32_t d = c.k1() + c.k2();
    BoundedSearchResult out;
    out.profile.exact = false;
    out.hamming_witness = Z4Word(n);
    out.lee_witness = Z4Word(n);
    out.euclidean_witness = Z4Word(n);
    if (budget == 0 || d == 0) return out;
    if (n > 64)
        throw TooLargeError("bounded_search: length must be <= 64");

    const auto& rows = c.rows();
    // nonzero multiples of each generator row as plane pairs
    struct Scaled {
        uint64_t lo, hi;
    };
    std::vector<std::array<Scaled, 3>> mult(d);
    std::vector<uint8_t> nvals(d);
    for (uint32_t j = 0; j < d; ++j) {
        nvals[j] = j < c.k1() ? 3 : 1;
        for (uint8_t v = 1; v <= nvals[j]; ++v) {
            Z4Word m = rows[j].scaled(v);
            mult[j][v - 1] = Scaled{m.lo_limbs()[0], m.hi_limbs()[0]};
        }
    }

    uint64_t best_lo[3] = {0, 0, 0}, best_hi[3] = {0, 0, 0};
    auto visit = [&](uint64_t lo, uint64_t hi) {
        ++out.visited;
        uint32_t odd = static_cast<uint32_t>(std::popcount(lo));
        uint32_t twos = static_cast<uint32_t>(std::popcount(hi & ~lo));
        uint32_t lee = odd + 2 * twos;
        if (lee == 0) return;
        uint32_t w[3] = {odd + twos, lee, odd + 4 * twos};
        uint32_t* d3[3] = {&out.profile.d_hamming, &out.profile.d_lee,
                           &out.profile.d_euclidean};
        uint64_t* c3[3] = {&out.profile.count_hamming, &out.profile.count_lee,
                           &out.profile.count_euclidean};
        for (int i = 0; i < 3; ++i) {
            if (w[i] < *d3[i]) {
                *d3[i] = w[i];
                *c3[i] = 1;
                best_lo[i] = lo;
                best_hi[i] = hi;
            } else if (w[i] == *d3[i]) {
                ++*c3[i];
            }
        }
    };

    // full sweep of message-support levels while they fit the budget
    uint64_t planned = 0;
    uint32_t w_max = 0;
    for (uint32_t w = 1; w <= d; ++w) {
        // messages with support exactly w: order-4 digits have 3 nonzero
        // values, order-2 digits one
        unsigned __int128 level = 0;
        for (uint32_t i = 0; i <= std::min(w, c.k1()); ++i) {
            uint32_t j = w - i;
            if (j > c.k2()) continue;
            uint64_t a = binom_capped(c.k1(), i, budget + 1);
            uint64_t b = binom_capped(c.k2(), j, budget + 1);
            unsigned __int128 term = (unsigned __int128)a * b;
            for (uint32_t p = 0; p < i; ++p) term *= 3;
            level += term;
            if (level > budget) break;
        }
        if (level > budget - planned) break;
        planned += static_cast<uint64_t>(level);
        w_max = w;
    }
    out.support_level = w_max;

    // depth-first over digit combinations with prefix sums
    for (uint32_t w = 1; w <= w_max; ++w) {
        std::vector<uint32_t> idx(w);
        std::vector<uint8_t> val(w);
        std::vector<uint64_t> plo(w + 1, 0), phi(w + 1, 0);
        uint32_t depth = 0;
        idx[0] = 0;
        val[0] = 1;
        while (true) {
            if (idx[depth] > d - w + depth) {
                if (depth == 0) break;
                --depth;
                if (val[depth] < nvals[idx[depth]]) {
                    ++val[depth];
                } else {
                    val[depth] = 1;
                    ++idx[depth];
                }
                continue;
            }
            const Scaled& sc = mult[idx[depth]][val[depth] - 1];
            plo[depth + 1] = plo[depth] ^ sc.lo;
            phi[depth + 1] = phi[depth] ^ sc.hi ^ (plo[depth] & sc.lo);
            if (depth + 1 == w) {
                visit(plo[depth + 1], phi[depth + 1]);
                if (val[depth] < nvals[idx[depth]]) {
                    ++val[depth];
                } else {
                    val[depth] = 1;
                    ++idx[depth];
                }
            } else {
                ++depth;
                idx[depth] = idx[depth - 1] + 1;
                val[depth] = 1;
            }
        }
    }

    // seeded random messages for the remaining budget
    SplitMix64 rng(seed);
    while (out.visited < budget) {
        uint64_t lo = 0, hi = 0;
        bool zero = true;
        for (uint32_t j = 0; j < d; ++j) {
            uint8_t v = static_cast<uint8_t>(rng.below(nvals[j] + 1u));
            if (!v) continue;
            zero = false;
            const Scaled& sc = mult[j][v - 1];
            uint64_t nlo = lo ^ sc.lo;
            hi = hi ^ sc.hi ^ (lo & sc.lo);
            lo = nlo;
        }
        if (zero) {
            ++out.visited;
            continue;
        }
        visit(lo, hi);
    }

    if (out.profile.d_hamming != WeightProfile::kUnknown) {
        out.hamming_witness = word_from_planes(n, best_lo[0], best_hi[0]);
        out.lee_witness = word_from_planes(n, best_lo[1], best_hi[1]);
        out.euclidean_witness = word_from_planes(n, best_lo[2], best_hi[2]);
    }
    return out;
}

} // namespace z4sd
