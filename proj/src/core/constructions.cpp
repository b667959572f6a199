#include "constructions.hpp"

#include <algorithm>
#include <memory>

#include "enumerate.hpp"
#include "errors.hpp"
#include "parallel.hpp"
#include "rng.hpp"

namespace z4sd {

std::vector<Z4Word> circulant_matrix(std::span<const uint8_t> first_row, CirculantKind kind) {
    const uint32_t m = static_cast<uint32_t>(first_row.size());
    if (m == 0) throw ArgumentError("circulant: empty first row");
    const uint8_t c = kind == CirculantKind::Circulant ? 1 : 3;
    std::vector<Z4Word> rows;
    rows.reserve(m);
    for (uint32_t i = 0; i < m; ++i) {
        Z4Word r(m);
        for (uint32_t j = 0; j < m; ++j) {
            uint8_t v = first_row[(j + m - i) % m];
            if (j < i) v = static_cast<uint8_t>((v * c) % 4);
            r.set_digit(j, v);
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

Z4Code bordered_double_circulant(std::span<const uint8_t> first_row, BorderSpec border) {
    const uint32_t m = static_cast<uint32_t>(first_row.size());
    if (m == 0) throw ArgumentError("bordered double circulant: empty first row");
    const uint32_t half = m + 1, n = 2 * half;
    std::vector<Z4Word> circ = circulant_matrix(first_row, CirculantKind::Circulant);
    std::vector<Z4Word> rows;
    rows.reserve(half);
    for (uint32_t i = 0; i < half; ++i) {
        Z4Word r(n);
        r.set_digit(i, 1);
        if (i == 0) {
            r.set_digit(half, border.alpha);
            for (uint32_t j = 1; j < half; ++j) r.set_digit(half + j, border.beta);
        } else {
            r.set_digit(half, border.gamma);
            for (uint32_t j = 1; j < half; ++j)
                r.set_digit(half + j, circ[i - 1].digit(j - 1));
        }
        rows.push_back(std::move(r));
    }
    return Z4Code::from_generator_rows(n, half, 0, std::move(rows));
}

Z4Code four_negacirculant(std::span<const uint8_t> row_a, std::span<const uint8_t> row_b) {
    const uint32_t m = static_cast<uint32_t>(row_a.size());
    if (m == 0 || row_b.size() != m)
        throw ArgumentError("four negacirculant: first rows must have equal positive length");
    const uint32_t n = 4 * m;
    std::vector<Z4Word> a = circulant_matrix(row_a, CirculantKind::Negacirculant);
    std::vector<Z4Word> b = circulant_matrix(row_b, CirculantKind::Negacirculant);
    std::vector<Z4Word> rows;
    rows.reserve(2 * m);
    for (uint32_t i = 0; i < 2 * m; ++i) {
        Z4Word r(n);
        r.set_digit(i, 1);
        for (uint32_t j = 0; j < m; ++j) {
            uint8_t left, right;
            if (i < m) {
                left = a[i].digit(j);
                right = b[i].digit(j);
            } else {
                left = static_cast<uint8_t>((4 - b[j].digit(i - m)) % 4); // -B^T
                right = a[j].digit(i - m);                                // A^T
            }
            r.set_digit(2 * m + j, left);
            r.set_digit(3 * m + j, right);
        }
        rows.push_back(std::move(r));
    }
    return Z4Code::from_generator_rows(n, 2 * m, 0, std::move(rows));
}

Z4Code standard_form_code(const std::vector<Z4Word>& m_rows) {
    const uint32_t k = static_cast<uint32_t>(m_rows.size());
    if (k == 0) throw ArgumentError("standard form: empty matrix");
    for (const auto& r : m_rows)
        if (r.length() != k) throw ArgumentError("standard form: matrix must be square");
    std::vector<Z4Word> rows;
    rows.reserve(k);
    for (uint32_t i = 0; i < k; ++i) {
        Z4Word r(2 * k);
        r.set_digit(i, 1);
        for (uint32_t j = 0; j < k; ++j) r.set_digit(k + j, m_rows[i].digit(j));
        rows.push_back(std::move(r));
    }
    return Z4Code::from_generator_rows(2 * k, k, 0, std::move(rows));
}

LiftSystem::LiftSystem(const BinaryCode& residue) : c1_(residue) {
    if (parity_class(c1_) != ParityClass::DoublyEven)
        throw PreconditionError("lift: residue must be doubly even");
    n_ = c1_.length();
    k_ = c1_.dim();
    if (k_ == 0) throw PreconditionError("lift: residue must be nonzero");
    m_ = n_ - k_;

    // systematic view (I_k | A) on the pivot columns of the echelon basis
    piv_ = c1_.pivot_cols();
    {
        std::vector<char> isp(n_, 0);
        for (uint32_t p : piv_) isp[p] = 1;
        for (uint32_t c = 0; c < n_; ++c)
            if (!isp[c]) nonpiv_.push_back(c);
    }
    a_rows_.reserve(k_);
    for (uint32_t i = 0; i < k_; ++i) {
        BinaryWord a(m_);
        for (uint32_t l = 0; l < m_; ++l)
            if (c1_.rref_rows()[i].bit(nonpiv_[l])) a.set_bit(l, true);
        a_rows_.push_back(std::move(a));
    }

    // self-duality conditions on the perturbation B, over GF(2):
    // A_i . B_j + A_j . B_i = c_ij for i < j, where c_ij is half the integer
    // inner product of the unit lifts of rows i and j, mod 4
    const uint32_t vars = k_ * m_;
    std::vector<BinaryWord> eqs;
    eqs.reserve(k_ * (k_ - 1) / 2);
    for (uint32_t i = 0; i < k_; ++i) {
        for (uint32_t j = i + 1; j < k_; ++j) {
            BinaryWord row(vars + 1);
            for (uint32_t l = 0; l < m_; ++l) {
                if (a_rows_[i].bit(l)) row.set_bit(j * m_ + l, !row.bit(j * m_ + l));
                if (a_rows_[j].bit(l)) row.set_bit(i * m_ + l, !row.bit(i * m_ + l));
            }
            // identity columns contribute nothing for i != j
            uint64_t ip = 0;
            for (uint32_t l = 0; l < m_; ++l)
                ip += a_rows_[i].bit(l) && a_rows_[j].bit(l);
            if (ip % 2) throw InternalError("lift: residue rows are not orthogonal");
            if ((ip % 4) / 2) row.set_bit(vars, true);
            eqs.push_back(std::move(row));
        }
    }

    // solve: rref of the augmented system
    std::vector<uint32_t> eq_pivots;
    {
        size_t r = 0;
        for (uint32_t c = 0; c < vars && r < eqs.size(); ++c) {
            size_t sel = r;
            while (sel < eqs.size() && !eqs[sel].bit(c)) ++sel;
            if (sel == eqs.size()) continue;
            std::swap(eqs[r], eqs[sel]);
            for (size_t t = 0; t < eqs.size(); ++t)
                if (t != r && eqs[t].bit(c)) eqs[t] ^= eqs[r];
            eq_pivots.push_back(c);
            ++r;
        }
        for (size_t t = r; t < eqs.size(); ++t)
            if (eqs[t].bit(vars))
                throw InternalError("lift: self-duality system is inconsistent");
        eqs.resize(r);
    }

    particular_ = BinaryWord(vars);
    for (size_t i = 0; i < eq_pivots.size(); ++i)
        if (eqs[i].bit(vars)) particular_.set_bit(eq_pivots[i], true);

    std::vector<char> is_eq_pivot(vars, 0);
    for (uint32_t p : eq_pivots) is_eq_pivot[p] = 1;
    for (uint32_t f = 0; f < vars; ++f) {
        if (is_eq_pivot[f]) continue;
        BinaryWord v(vars);
        v.set_bit(f, true);
        for (size_t i = 0; i < eq_pivots.size(); ++i)
            if (eqs[i].bit(f)) v.set_bit(eq_pivots[i], true);
        nullspace_.push_back(std::move(v));
    }

    if (c1_.is_self_dual() && free_dim() != k_ * (k_ + 1) / 2)
        throw InternalError("lift: free dimension is not k(k+1)/2 for a self-dual residue");

    // order-2 generators: twice a basis of residue_dual modulo residue
    BinaryCode dual = c1_.dual();
    std::vector<BinaryWord> ext = c1_.rref_rows();
    for (const auto& w : dual.rref_rows()) {
        std::vector<BinaryWord> trial = ext;
        trial.push_back(w);
        if (BinaryCode::from_rows(n_, trial).dim() > ext.size()) {
            ext.push_back(w);
            torsion_extra_.push_back(w);
        }
    }
}

Z4Code LiftSystem::lift(std::span<const uint8_t> free_bits) const {
    if (free_bits.size() != nullspace_.size())
        throw ArgumentError("lift: wrong number of free coordinates");
    BinaryWord b = particular_;
    for (size_t i = 0; i < nullspace_.size(); ++i)
        if (free_bits[i] & 1) b ^= nullspace_[i];

    std::vector<Z4Word> rows;
    rows.reserve(k_ + torsion_extra_.size());
    for (uint32_t i = 0; i < k_; ++i) {
        Z4Word r(n_);
        r.set_digit(piv_[i], 1);
        for (uint32_t l = 0; l < m_; ++l) {
            uint8_t d = a_rows_[i].bit(l) ? 1 : 0;
            if (b.bit(i * m_ + l)) d = static_cast<uint8_t>(d + 2);
            if (d) r.set_digit(nonpiv_[l], d);
        }
        rows.push_back(std::move(r));
    }
    for (const auto& w : torsion_extra_) {
        Z4Word r(n_);
        for (uint32_t c = 0; c < n_; ++c)
            if (w.bit(c)) r.set_digit(c, 2);
        rows.push_back(std::move(r));
    }
    return Z4Code::from_generator_rows(n_, k_, static_cast<uint32_t>(torsion_extra_.size()),
                                       std::move(rows));
}

Z4Code LiftSystem::lift_from_seed(uint64_t stream_seed) const {
    SplitMix64 rng(stream_seed);
    std::vector<uint8_t> bits(nullspace_.size());
    for (auto& bit : bits) bit = rng.coin();
    return lift(bits);
}

LightWordOracle::LightWordOracle(const LiftSystem& sys) {
    const BinaryCode& c1 = sys.c1_;
    const uint32_t n = sys.n_, k = sys.k_, m = sys.m_;
    if (n > 32) throw TooLargeError("light-word oracle: length must be <= 32");
    if (!c1.is_self_dual())
        throw PreconditionError("light-word oracle: residue must be self-dual");
    free_ = sys.free_dim();

    // minimum-weight residue words with their messages (Gray sweep)
    std::vector<uint32_t> gens(k);
    for (uint32_t i = 0; i < k; ++i)
        gens[i] = static_cast<uint32_t>(c1.rref_rows()[i].mask64());
    uint32_t dmin = n + 1;
    {
        uint32_t cw = 0;
        for (uint32_t i = 1; i < (1u << k); ++i) {
            cw ^= gens[std::countr_zero(i)];
            dmin = std::min<uint32_t>(dmin, std::popcount(cw));
        }
    }
    struct Light {
        uint32_t supp;
        uint32_t msg;
    };
    std::vector<Light> light;
    {
        uint32_t cw = 0;
        for (uint32_t i = 1; i < (1u << k); ++i) {
            cw ^= gens[std::countr_zero(i)];
            if (static_cast<uint32_t>(std::popcount(cw)) == dmin)
                light.push_back(Light{cw, i ^ (i >> 1)});
        }
    }

    // base lift rows as plane pairs: lo carries the identity and A bits,
    // hi the particular perturbation
    std::vector<uint32_t> row_lo(k, 0), row_hi(k, 0);
    for (uint32_t j = 0; j < k; ++j) {
        row_lo[j] = uint32_t(1) << sys.piv_[j];
        for (uint32_t l = 0; l < m; ++l) {
            if (sys.a_rows_[j].bit(l)) row_lo[j] |= uint32_t(1) << sys.nonpiv_[l];
            if (sys.particular_.bit(j * m + l)) row_hi[j] |= uint32_t(1) << sys.nonpiv_[l];
        }
    }
    // per free coordinate and row: the even-plane delta in code coordinates
    std::vector<uint32_t> nrow(size_t(free_) * k, 0);
    for (uint32_t f = 0; f < free_; ++f)
        for (uint32_t j = 0; j < k; ++j)
            for (uint32_t l = 0; l < m; ++l)
                if (sys.nullspace_[f].bit(j * m + l))
                    nrow[size_t(f) * k + j] |= uint32_t(1) << sys.nonpiv_[l];

    const size_t words = light.size();
    r0_.resize(words);
    rho_.assign(size_t(free_) * words, 0);
    for (size_t w = 0; w < words; ++w) {
        const uint32_t supp = light[w].supp;
        const uint32_t msg = light[w].msg;

        // reduced echelon basis of the generators masked off the support
        uint32_t basis[32] = {0};
        for (uint32_t j = 0; j < k; ++j) {
            uint32_t v = gens[j] & ~supp;
            for (uint32_t b = 0; b < n; ++b)
                if ((v >> b) & 1 && basis[b]) v ^= basis[b];
            if (!v) continue;
            uint32_t p = static_cast<uint32_t>(std::countr_zero(v));
            for (uint32_t b = 0; b < n; ++b)
                if (basis[b] && ((basis[b] >> p) & 1)) basis[b] ^= v;
            basis[p] = v;
        }
        auto residual = [&](uint32_t x) {
            for (uint32_t b = 0; b < n; ++b)
                if (((x >> b) & 1) && basis[b]) x ^= basis[b];
            return x;
        };

        // base lift of this word: Z4 sum of the selected rows
        uint32_t lo = 0, hi = 0;
        for (uint32_t j = 0; j < k; ++j) {
            if (!((msg >> j) & 1)) continue;
            uint32_t nlo = lo ^ row_lo[j];
            hi = hi ^ row_hi[j] ^ (lo & row_lo[j]);
            lo = nlo;
        }
        if (lo != supp) throw InternalError("light-word oracle: residue mismatch");
        r0_[w] = residual(hi & ~lo);

        for (uint32_t f = 0; f < free_; ++f) {
            uint32_t delta = 0;
            for (uint32_t j = 0; j < k; ++j)
                if ((msg >> j) & 1) delta ^= nrow[size_t(f) * k + j];
            rho_[size_t(f) * words + w] = residual(delta & ~supp);
        }
    }
}

std::vector<uint32_t> LightWordOracle::state(std::span<const uint8_t> free_bits) const {
    if (free_bits.size() != free_)
        throw ArgumentError("light-word oracle: wrong number of free coordinates");
    std::vector<uint32_t> st = r0_;
    const size_t words = r0_.size();
    for (uint32_t f = 0; f < free_; ++f)
        if (free_bits[f] & 1)
            for (size_t w = 0; w < words; ++w) st[w] ^= rho_[size_t(f) * words + w];
    return st;
}

uint32_t LightWordOracle::violations(std::span<const uint32_t> state) const {
    uint32_t v = 0;
    for (uint32_t s : state) v += (s == 0);
    return v;
}

uint32_t LightWordOracle::descend(std::vector<uint8_t>& bits, std::vector<uint32_t>& state,
                                  uint32_t max_steps) const {
    const size_t words = r0_.size();
    uint32_t viol = violations(state);
    for (uint32_t step = 0; step < max_steps && viol > 0; ++step) {
        uint32_t best_v = viol, best_f = free_;
        for (uint32_t f = 0; f < free_; ++f) {
            const uint32_t* col = &rho_[size_t(f) * words];
            uint32_t v = 0;
            for (size_t w = 0; w < words; ++w) v += ((state[w] ^ col[w]) == 0);
            if (v < best_v) {
                best_v = v;
                best_f = f;
            }
        }
        if (best_f == free_) break; // local minimum
        bits[best_f] ^= 1;
        const uint32_t* col = &rho_[size_t(best_f) * words];
        for (size_t w = 0; w < words; ++w) state[w] ^= col[w];
        viol = best_v;
    }
    return viol;
}

LiftSearchResult lift_search(const BinaryCode& residue, uint64_t trials, uint64_t seed,
                             uint32_t target_d_lee, uint32_t threads) {
    if (!residue.is_self_dual() || parity_class(residue) != ParityClass::DoublyEven)
        throw PreconditionError("lift_search: residue must be doubly even self-dual");
    if (residue.length() > 32)
        throw TooLargeError(
            "lift_search: exact Lee minima need length <= 32; larger lengths are unsupported");
    LiftSystem sys(residue);

    LiftSearchResult out;
    out.trials = trials;
    if (trials == 0) return out;

    // screen budget covering exactly the message supports <= 3 of a lift
    // (k1 = dim residue order-4 digits, k2 = n - 2 dim order-2 digits)
    uint64_t screen_budget = 0;
    {
        auto binom = [](uint64_t n, uint64_t k) {
            unsigned __int128 r = 1;
            for (uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
            return static_cast<uint64_t>(r);
        };
        const uint32_t lk1 = residue.dim();
        const uint32_t lk2 = residue.length() - 2 * residue.dim();
        for (uint32_t w = 1; w <= 3 && w <= lk1 + lk2; ++w)
            for (uint32_t i = 0; i <= w; ++i) {
                if (i > lk1 || w - i > lk2) continue;
                uint64_t t = binom(lk1, i) * binom(lk2, w - i);
                for (uint32_t p = 0; p < i; ++p) t *= 3;
                screen_budget += t;
            }
    }

    // plain draws cannot in practice avoid Lee weight d(C1) words, so every
    // 32nd trial runs the light-word descent from its draw
    constexpr uint64_t kDescentStride = 32;
    constexpr uint32_t kDescentSteps = 300;
    LightWordOracle oracle(sys);

    enum : uint8_t { kKeep, kNotSelfDual, kResidueMismatch, kBelowTarget };
    std::vector<uint8_t> outcome(trials, kBelowTarget);
    std::vector<std::unique_ptr<Z4Code>> kept(trials);

    parallel_tasks(trials, threads, [&](uint64_t trial) {
        SplitMix64 rng(substream_seed(seed, trial));
        std::vector<uint8_t> bits(sys.free_dim());
        for (auto& b : bits) b = rng.coin();
        if (trial % kDescentStride == 0) {
            std::vector<uint32_t> st = oracle.state(bits);
            oracle.descend(bits, st, kDescentSteps);
        }
        Z4Code cand = sys.lift(bits);
        if (!cand.is_self_dual()) {
            outcome[trial] = kNotSelfDual;
            return;
        }
        if (!cand.residue().same_row_space(residue)) {
            outcome[trial] = kResidueMismatch;
            return;
        }
        // cheap screen over message supports <= 3 before the full pass
        BoundedSearchResult screen = bounded_search(cand, screen_budget, 0);
        if (screen.profile.d_lee < target_d_lee) {
            outcome[trial] = kBelowTarget;
            return;
        }
        SurveyOptions opt;
        opt.abort_below_lee = target_d_lee;
        SurveyResult full = survey(cand, opt);
        if (full.aborted) {
            outcome[trial] = kBelowTarget;
            return;
        }
        outcome[trial] = kKeep;
        kept[trial] = std::make_unique<Z4Code>(std::move(cand));
    });

    for (uint64_t t = 0; t < trials; ++t) {
        switch (outcome[t]) {
            case kKeep:
                out.codes.push_back(std::move(*kept[t]));
                out.trial_of.push_back(t);
                break;
            case kNotSelfDual: ++out.not_self_dual; break;
            case kResidueMismatch: ++out.residue_mismatch; break;
            default: ++out.below_target; break;
        }
    }
    return out;
}

} // namespace z4sd
