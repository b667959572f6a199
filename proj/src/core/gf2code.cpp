#include "gf2code.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>

#include "bounds.hpp"
#include "errors.hpp"

namespace z4sd {

namespace {

// Reduced row echelon form in the given column order (no column swaps);
// canonical for the row space. Zero rows are dropped.
void rref_inplace(std::vector<BinaryWord>& rows, uint32_t n, std::vector<uint32_t>& pivots) {
    pivots.clear();
    size_t r = 0;
    for (uint32_t c = 0; c < n && r < rows.size(); ++c) {
        size_t sel = r;
        while (sel < rows.size() && !rows[sel].bit(c)) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        for (size_t j = 0; j < rows.size(); ++j)
            if (j != r && rows[j].bit(c)) rows[j] ^= rows[r];
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
}

uint64_t check_pow2_guard(uint32_t k, uint32_t limit, const char* what) {
    if (k > limit)
        throw TooLargeError(std::string(what) + ": dimension " + std::to_string(k) +
                            " exceeds the exhaustive guard of " + std::to_string(limit));
    return uint64_t(1) << k;
}

} // namespace

BinaryCode BinaryCode::from_rows(uint32_t n, std::vector<BinaryWord> rows) {
    if (n == 0) throw ArgumentError("binary code: length must be positive");
    for (const auto& r : rows)
        if (r.length() != n) throw ArgumentError("binary code: row length mismatch");
    BinaryCode c;
    c.n_ = n;
    c.rref_ = std::move(rows);
    rref_inplace(c.rref_, n, c.pivots_);
    c.rows_ = c.rref_;
    return c;
}

BinaryCode BinaryCode::from_generator_rows(uint32_t n, std::vector<BinaryWord> rows) {
    if (n == 0) throw ArgumentError("binary code: length must be positive");
    for (const auto& r : rows)
        if (r.length() != n) throw ArgumentError("binary code: row length mismatch");
    BinaryCode c;
    c.n_ = n;
    c.rows_ = std::move(rows);
    c.rref_ = c.rows_;
    rref_inplace(c.rref_, n, c.pivots_);
    if (c.rref_.size() != c.rows_.size())
        throw ArgumentError("binary code: generator rows are dependent");
    return c;
}

BinaryCode BinaryCode::parse(std::string_view g2c_text) {
    std::istringstream in{std::string(g2c_text)};
    std::string line;
    uint32_t n = 0, k = 0;
    bool header = false;
    std::vector<BinaryWord> rows;
    while (std::getline(in, line)) {
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        size_t start = line.find_first_not_of(' ');
        if (start == std::string::npos) continue;
        line.erase(0, start);
        if (!header) {
            if (sscanf(line.c_str(), "G2CODE n=%u k=%u", &n, &k) != 2)
                throw ParseError("g2c: bad header line: " + line);
            header = true;
            continue;
        }
        if (line.size() != n) throw ParseError("g2c: row has wrong length: " + line);
        rows.push_back(BinaryWord::from_string(line));
    }
    if (!header) throw ParseError("g2c: missing header");
    if (rows.size() != k)
        throw ParseError("g2c: expected " + std::to_string(k) + " rows, got " +
                         std::to_string(rows.size()));
    return from_generator_rows(n, std::move(rows));
}

BinaryCode BinaryCode::read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    try {
        return parse(ss.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string BinaryCode::format() const {
    std::string out = "G2CODE n=" + std::to_string(n_) + " k=" + std::to_string(dim()) + "\n";
    for (const auto& r : rows_) out += r.to_string() + "\n";
    return out;
}

void BinaryCode::write_file(const std::string& path) const {
    std::ofstream f(path);
    if (!f) throw IoError("cannot open " + path + " for writing");
    f << format();
    if (!f) throw IoError("write failed: " + path);
}

bool BinaryCode::contains(const BinaryWord& w) const {
    if (w.length() != n_) throw ArgumentError("contains: length mismatch");
    BinaryWord x = w;
    for (size_t i = 0; i < rref_.size(); ++i)
        if (x.bit(pivots_[i])) x ^= rref_[i];
    return x.is_zero();
}

bool BinaryCode::contains_code(const BinaryCode& sub) const {
    for (const auto& r : sub.rows())
        if (!contains(r)) return false;
    return true;
}

bool BinaryCode::same_row_space(const BinaryCode& rhs) const {
    return n_ == rhs.n_ && rref_ == rhs.rref_;
}

BinaryCode BinaryCode::dual() const {
    std::vector<char> is_pivot(n_, 0);
    for (uint32_t p : pivots_) is_pivot[p] = 1;
    std::vector<BinaryWord> gens;
    gens.reserve(n_ - dim());
    for (uint32_t c = 0; c < n_; ++c) {
        if (is_pivot[c]) continue;
        BinaryWord v(n_);
        v.set_bit(c, true);
        for (size_t i = 0; i < rref_.size(); ++i)
            if (rref_[i].bit(c)) v.set_bit(pivots_[i], true);
        gens.push_back(std::move(v));
    }
    return from_rows(n_, std::move(gens));
}

bool BinaryCode::is_self_orthogonal() const {
    for (size_t i = 0; i < rows_.size(); ++i)
        for (size_t j = i; j < rows_.size(); ++j)
            if (rows_[i].dot(rows_[j])) return false;
    return true;
}

BinaryWord BinaryCode::codeword(uint64_t msg) const {
    if (dim() > 63) throw TooLargeError("codeword: dimension exceeds 63");
    BinaryWord w(n_);
    for (uint32_t i = 0; i < dim(); ++i)
        if ((msg >> i) & 1) w ^= rows_[i];
    return w;
}

ParityClass parity_class(const BinaryCode& c) {
    bool all_mult4 = true;
    for (const auto& r : c.rows()) {
        uint32_t w = r.weight();
        if (w % 2) return ParityClass::Neither;
        if (w % 4) all_mult4 = false;
    }
    if (all_mult4) {
        bool orth = true;
        const auto& rows = c.rows();
        for (size_t i = 0; i < rows.size() && orth; ++i)
            for (size_t j = i + 1; j < rows.size() && orth; ++j)
                if (rows[i].dot(rows[j])) orth = false;
        if (orth) return ParityClass::DoublyEven;
    }
    // All weights even but not doubly even: some codeword has weight 2 mod 4.
    return ParityClass::SinglyEven;
}

namespace {

uint32_t min_weight_exhaustive(const BinaryCode& c) {
    const uint32_t k = c.dim(), n = c.length();
    uint64_t total = check_pow2_guard(k, 28, "exhaustive minimum weight");
    uint32_t best = n;
    if (n <= 64) {
        std::vector<uint64_t> rows(k);
        for (uint32_t i = 0; i < k; ++i) rows[i] = c.rows()[i].mask64();
        uint64_t cw = 0;
        for (uint64_t i = 1; i < total; ++i) {
            cw ^= rows[std::countr_zero(i)];
            uint32_t w = static_cast<uint32_t>(std::popcount(cw));
            if (w < best) best = w;
        }
    } else {
        BinaryWord cw(n);
        for (uint64_t i = 1; i < total; ++i) {
            cw ^= c.rows()[std::countr_zero(i)];
            best = std::min(best, cw.weight());
        }
    }
    return best;
}

// Weight of the lightest combination of exactly w rows, folded into best.
void scan_combinations(const std::vector<BinaryWord>& rows, uint32_t w, uint32_t& best) {
    const uint32_t k = static_cast<uint32_t>(rows.size());
    if (w > k) return;
    std::vector<uint32_t> idx(w);
    std::vector<BinaryWord> prefix(w + 1);
    prefix[0] = BinaryWord(rows[0].length());
    uint32_t depth = 0;
    idx[0] = 0;
    while (true) {
        if (idx[depth] > k - w + depth) {
            if (depth == 0) break;
            --depth;
            ++idx[depth];
            continue;
        }
        prefix[depth + 1] = prefix[depth] ^ rows[idx[depth]];
        if (depth + 1 == w) {
            best = std::min(best, prefix[depth + 1].weight());
            ++idx[depth];
        } else {
            ++depth;
            idx[depth] = idx[depth - 1] + 1;
        }
    }
}

uint32_t min_weight_bz(const BinaryCode& c) {
    const uint32_t n = c.length(), k = c.dim();
    std::vector<char> used(n, 0);
    struct Mat {
        std::vector<BinaryWord> rows;
        uint32_t new_rank;
    };
    std::vector<Mat> mats;
    for (;;) {
        std::vector<BinaryWord> rows = c.rref_rows();
        uint32_t r = 0;
        // pivots chosen among columns not serving earlier matrices
        for (uint32_t col = 0; col < n && r < k; ++col) {
            if (used[col]) continue;
            uint32_t sel = r;
            while (sel < k && !rows[sel].bit(col)) ++sel;
            if (sel == k) continue;
            std::swap(rows[r], rows[sel]);
            for (uint32_t j = 0; j < k; ++j)
                if (j != r && rows[j].bit(col)) rows[j] ^= rows[r];
            used[col] = 1;
            ++r;
        }
        uint32_t new_rank = r;
        if (new_rank == 0) break;
        // complete to a full-rank generator matrix using any columns
        for (uint32_t col = 0; col < n && r < k; ++col) {
            uint32_t sel = r;
            while (sel < k && !rows[sel].bit(col)) ++sel;
            if (sel == k) continue;
            std::swap(rows[r], rows[sel]);
            for (uint32_t j = 0; j < k; ++j)
                if (j != r && rows[j].bit(col)) rows[j] ^= rows[r];
            ++r;
        }
        if (r != k) throw InternalError("brouwer-zimmermann: generator rank collapsed");
        mats.push_back(Mat{std::move(rows), new_rank});
    }
    uint32_t best = n;
    for (uint32_t w = 1; w <= k; ++w) {
        for (const auto& m : mats) scan_combinations(m.rows, w, best);
        uint64_t lower = 0;
        for (const auto& m : mats) {
            uint32_t slack = k - m.new_rank;
            if (w + 1 > slack) lower += (w + 1) - slack;
        }
        if (lower >= best) break;
    }
    return best;
}

} // namespace

uint32_t min_weight(const BinaryCode& c, MinWeightMethod method) {
    if (c.dim() == 0) throw PreconditionError("minimum weight: code has no nonzero codewords");
    switch (method) {
        case MinWeightMethod::Exhaustive:
            return min_weight_exhaustive(c);
        case MinWeightMethod::BrouwerZimmermann:
            return min_weight_bz(c);
        case MinWeightMethod::Auto:
        default:
            return c.dim() <= 20 ? min_weight_exhaustive(c) : min_weight_bz(c);
    }
}

std::vector<std::pair<uint32_t, uint64_t>> weight_distribution(const BinaryCode& c) {
    const uint32_t k = c.dim(), n = c.length();
    uint64_t total = check_pow2_guard(k, 28, "weight distribution");
    std::vector<uint64_t> counts(n + 1, 0);
    counts[0] = 1;
    if (k > 0) {
        if (n <= 64) {
            std::vector<uint64_t> rows(k);
            for (uint32_t i = 0; i < k; ++i) rows[i] = c.rows()[i].mask64();
            uint64_t cw = 0;
            for (uint64_t i = 1; i < total; ++i) {
                cw ^= rows[std::countr_zero(i)];
                ++counts[std::popcount(cw)];
            }
        } else {
            BinaryWord cw(n);
            for (uint64_t i = 1; i < total; ++i) {
                cw ^= c.rows()[std::countr_zero(i)];
                ++counts[cw.weight()];
            }
        }
    }
    std::vector<std::pair<uint32_t, uint64_t>> out;
    for (uint32_t w = 0; w <= n; ++w)
        if (counts[w]) out.emplace_back(w, counts[w]);
    return out;
}

BinaryCode doubly_even_subcode(const BinaryCode& c) {
    if (!c.is_self_dual() || parity_class(c) != ParityClass::SinglyEven)
        throw PreconditionError("doubly even subcode: input must be singly even self-dual");
    const auto& rows = c.rows();
    size_t seed = rows.size();
    for (size_t i = 0; i < rows.size(); ++i)
        if (rows[i].weight() % 4 == 2) { seed = i; break; }
    if (seed == rows.size())
        throw InternalError("singly even code without a 2 mod 4 generator");
    std::vector<BinaryWord> gens;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i == seed) continue;
        gens.push_back(rows[i].weight() % 4 == 2 ? rows[i] ^ rows[seed] : rows[i]);
    }
    BinaryCode c0 = BinaryCode::from_rows(c.length(), std::move(gens));
    if (c0.dim() + 1 != c.dim()) throw InternalError("doubly even subcode: wrong codimension");
    return c0;
}

Shadow shadow(const BinaryCode& c) {
    Shadow s;
    s.c0 = doubly_even_subcode(c); // validates the precondition
    s.c0_dual = s.c0.dual();
    for (const auto& r : c.rows())
        if (r.weight() % 4 == 2) { s.even_rep = r; break; }
    for (const auto& r : s.c0_dual.rows())
        if (!c.contains(r)) { s.shadow_rep = r; break; }
    if (s.shadow_rep.length() == 0)
        throw InternalError("shadow: no coset representative outside the code");
    const uint32_t k0 = s.c0.dim();
    uint64_t half = check_pow2_guard(k0, 28, "shadow enumeration");
    s.size = 2 * half;
    uint32_t best = c.length() + 1;
    for (int coset = 0; coset < 2; ++coset) {
        BinaryWord cw = coset ? s.shadow_rep ^ s.even_rep : s.shadow_rep;
        best = std::min(best, cw.weight());
        for (uint64_t i = 1; i < half; ++i) {
            cw ^= s.c0.rows()[std::countr_zero(i)];
            best = std::min(best, cw.weight());
        }
    }
    s.min_weight = best;
    return s;
}

uint32_t covering_radius(const BinaryCode& c, CoveringRadiusMethod method) {
    const uint32_t n = c.length(), k = c.dim();
    if (method == CoveringRadiusMethod::DelsarteBound) {
        auto dist = weight_distribution(c.dual());
        uint32_t classes = 0;
        for (const auto& [w, cnt] : dist)
            if (w > 0 && cnt > 0) ++classes;
        return classes;
    }
    const uint32_t red = n - k;
    if (red > 28)
        throw TooLargeError(
            "exact covering radius needs n-k <= 28; use the Delsarte bound method");
    if (red == 0) return 0;
    BinaryCode h = c.dual();
    std::vector<uint32_t> col_syndrome(n, 0);
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < red; ++j)
            if (h.rows()[j].bit(i)) col_syndrome[i] |= uint32_t(1) << j;
    const uint64_t total = uint64_t(1) << red;
    std::vector<uint64_t> seen(limbs_for(static_cast<uint32_t>(total)), 0);
    auto mark = [&](uint32_t s) {
        uint64_t m = uint64_t(1) << (s & 63);
        if (seen[s >> 6] & m) return false;
        seen[s >> 6] |= m;
        return true;
    };
    uint64_t remaining = total - 1;
    mark(0);
    // sweep vectors by increasing weight; the first weight covering a
    // syndrome is its coset leader weight
    std::vector<uint32_t> idx;
    std::vector<uint32_t> prefix;
    for (uint32_t w = 1; w <= n; ++w) {
        idx.assign(w, 0);
        prefix.assign(w + 1, 0);
        uint32_t depth = 0;
        while (true) {
            if (idx[depth] > n - w + depth) {
                if (depth == 0) break;
                --depth;
                ++idx[depth];
                continue;
            }
            prefix[depth + 1] = prefix[depth] ^ col_syndrome[idx[depth]];
            if (depth + 1 == w) {
                if (mark(prefix[depth + 1]) && --remaining == 0) return w;
                ++idx[depth];
            } else {
                ++depth;
                idx[depth] = idx[depth - 1] + 1;
            }
        }
    }
    throw InternalError("covering radius sweep left unseen syndromes");
}

BinaryCode complete_to_self_dual(const BinaryCode& c, CompletionTarget target) {
    const uint32_t n = c.length();
    if (n % 2 != 0)
        throw PreconditionError("self-dual completion: length must be even");
    if (!c.is_self_orthogonal())
        throw PreconditionError("self-dual completion: input must be self-orthogonal");
    if (target != CompletionTarget::Any) {
        if (n % 8 != 0)
            throw PreconditionError(
                "self-dual completion with fixed parity: length must be divisible by 8");
        if (parity_class(c) != ParityClass::DoublyEven)
            throw PreconditionError(
                "self-dual completion with fixed parity: input must be doubly even");
        if (c.is_self_dual())
            throw PreconditionError(
                "self-dual completion with fixed parity: input is already self-dual");
    } else if (c.is_self_dual()) {
        return c;
    }

    BinaryCode cur = BinaryCode::from_rows(n, c.rows());
    bool need_singly_seed = (target == CompletionTarget::SinglyEven);
    while (2 * cur.dim() < n) {
        BinaryCode d = cur.dual();
        if (d.dim() > 28)
            throw TooLargeError("self-dual completion: dual too large to scan");
        uint64_t total = uint64_t(1) << d.dim();
        bool found = false;
        for (uint64_t msg = 1; msg < total && !found; ++msg) {
            BinaryWord v = d.codeword(msg);
            uint32_t w = v.weight();
            if (w % 2) continue;
            if (target == CompletionTarget::DoublyEven && w % 4 != 0) continue;
            if (need_singly_seed && w % 4 != 2) continue;
            if (cur.contains(v)) continue;
            auto rows = cur.rows();
            rows.push_back(std::move(v));
            cur = BinaryCode::from_rows(n, std::move(rows));
            found = true;
        }
        if (!found)
            throw InternalError("self-dual completion: scan exhausted without extension");
        need_singly_seed = false;
    }

    if (!cur.is_self_dual() || !cur.contains_code(c))
        throw InternalError("self-dual completion: output fails its contract");
    ParityClass pc = parity_class(cur);
    if (target == CompletionTarget::DoublyEven && pc != ParityClass::DoublyEven)
        throw InternalError("self-dual completion: output is not doubly even");
    if (target == CompletionTarget::SinglyEven && pc != ParityClass::SinglyEven)
        throw InternalError("self-dual completion: output is not singly even");
    return cur;
}

bool is_extremal(const BinaryCode& c) {
    if (!c.is_self_dual()) throw PreconditionError("is_extremal: input must be self-dual");
    return min_weight(c) == binary_sd_upper_bound(c.length());
}

bool is_s_extremal(const BinaryCode& c) {
    if (!c.is_self_dual()) throw PreconditionError("is_s_extremal: input must be self-dual");
    if (parity_class(c) != ParityClass::SinglyEven)
        throw PreconditionError("is_s_extremal: shadow needs a singly even code");
    uint32_t d = min_weight(c);
    uint32_t ds = shadow(c).min_weight;
    const uint32_t n = c.length();
    int64_t bound;
    if (n % 24 == 22 && d == 4 * (n / 24) + 6)
        bound = int64_t(n) / 2 + 8 - 2 * int64_t(d);
    else
        bound = int64_t(n) / 2 + 4 - 2 * int64_t(d);
    return int64_t(ds) == bound;
}

} // namespace z4sd
