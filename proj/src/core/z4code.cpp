#include "z4code.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "errors.hpp"

namespace z4sd {

namespace {

// Dense digit matrix used for the (cold) elimination paths.
struct DigitMatrix {
    uint32_t n = 0;
    std::vector<std::vector<uint8_t>> rows;

    static DigitMatrix from_words(uint32_t n, const std::vector<Z4Word>& words) {
        DigitMatrix m;
        m.n = n;
        m.rows.reserve(words.size());
        for (const auto& w : words) {
            std::vector<uint8_t> r(n);
            for (uint32_t i = 0; i < n; ++i) r[i] = w.digit(i);
            m.rows.push_back(std::move(r));
        }
        return m;
    }

    void submul(size_t dst, size_t src, uint8_t c) {
        for (uint32_t i = 0; i < n; ++i)
            rows[dst][i] = static_cast<uint8_t>((rows[dst][i] + (4 - c) * rows[src][i]) % 4);
    }

    void scale(size_t r, uint8_t c) {
        for (uint32_t i = 0; i < n; ++i)
            rows[r][i] = static_cast<uint8_t>((rows[r][i] * c) % 4);
    }
};

Z4Word word_of(const std::vector<uint8_t>& digits) {
    return Z4Word::from_digits(digits);
}

} // namespace

Z4StandardForm z4_standard_form(uint32_t n, const std::vector<Z4Word>& input) {
    for (const auto& r : input)
        if (r.length() != n) throw ArgumentError("z4 code: row length mismatch");
    DigitMatrix m = DigitMatrix::from_words(n, input);
    const size_t nr = m.rows.size();
    std::vector<char> used(n, 0);
    Z4StandardForm sf;
    sf.n = n;
    size_t r = 0;

    // unit pivots first
    while (r < nr) {
        uint32_t pc = n;
        size_t pr = nr;
        for (uint32_t c = 0; c < n && pc == n; ++c) {
            if (used[c]) continue;
            for (size_t i = r; i < nr; ++i)
                if (m.rows[i][c] & 1) { pc = c; pr = i; break; }
        }
        if (pc == n) break;
        std::swap(m.rows[r], m.rows[pr]);
        if (m.rows[r][pc] == 3) m.scale(r, 3);
        for (size_t j = 0; j < nr; ++j)
            if (j != r && m.rows[j][pc]) m.submul(j, r, m.rows[j][pc]);
        used[pc] = 1;
        sf.unit_cols.push_back(pc);
        ++r;
    }
    sf.k1 = static_cast<uint32_t>(r);

    // remaining rows have even entries only; order-2 pivots
    while (r < nr) {
        uint32_t pc = n;
        size_t pr = nr;
        for (uint32_t c = 0; c < n && pc == n; ++c) {
            if (used[c]) continue;
            for (size_t i = r; i < nr; ++i)
                if (m.rows[i][c] == 2) { pc = c; pr = i; break; }
        }
        if (pc == n) break;
        std::swap(m.rows[r], m.rows[pr]);
        for (size_t j = 0; j < nr; ++j)
            if (j != r && m.rows[j][pc] >= 2) m.submul(j, r, 1);
        used[pc] = 1;
        sf.two_cols.push_back(pc);
        ++r;
    }
    sf.k2 = static_cast<uint32_t>(r) - sf.k1;

    for (size_t i = r; i < nr; ++i)
        for (uint32_t c = 0; c < n; ++c)
            if (m.rows[i][c]) throw InternalError("z4 reduction: nonzero residual row");

    sf.rows.reserve(r);
    for (size_t i = 0; i < r; ++i) sf.rows.push_back(word_of(m.rows[i]));
    return sf;
}

void Z4Code::finish_init() {
    // self-duality: matching size and all pairwise products zero mod 4
    self_dual_ = (size_log2() == n_);
    for (size_t i = 0; i < rows_.size() && self_dual_; ++i)
        for (size_t j = i; j < rows_.size() && self_dual_; ++j)
            if (rows_[i].inner_product(rows_[j]) != 0) self_dual_ = false;
}

Z4Code Z4Code::from_rows(uint32_t n, std::vector<Z4Word> rows) {
    if (n == 0) throw ArgumentError("z4 code: length must be positive");
    Z4Code c;
    c.n_ = n;
    c.sf_ = z4_standard_form(n, rows);
    c.k1_ = c.sf_.k1;
    c.k2_ = c.sf_.k2;
    c.rows_ = c.sf_.rows;
    c.finish_init();
    return c;
}

Z4Code Z4Code::from_generator_rows(uint32_t n, uint32_t k1, uint32_t k2,
                                   std::vector<Z4Word> rows) {
    if (n == 0) throw ArgumentError("z4 code: length must be positive");
    if (rows.size() != size_t(k1) + k2)
        throw ArgumentError("z4 code: row count does not match k1+k2");
    for (uint32_t i = 0; i < k1; ++i)
        if (rows[i].all_even())
            throw ArgumentError("z4 code: order-4 row " + std::to_string(i) +
                                " has no unit coordinate");
    for (uint32_t i = k1; i < k1 + k2; ++i)
        if (!rows[i].all_even())
            throw ArgumentError("z4 code: order-2 row " + std::to_string(i) +
                                " has an odd coordinate");
    Z4Code c;
    c.n_ = n;
    c.sf_ = z4_standard_form(n, rows);
    if (2 * c.sf_.k1 + c.sf_.k2 != 2 * k1 + k2)
        throw ArgumentError("z4 code: generator rows are dependent");
    c.k1_ = k1;
    c.k2_ = k2;
    c.rows_ = std::move(rows);
    c.finish_init();
    return c;
}

Z4Code Z4Code::parse(std::string_view z4c_text) {
    std::istringstream in{std::string(z4c_text)};
    std::string line;
    uint32_t n = 0, k1 = 0, k2 = 0;
    bool header = false;
    std::vector<Z4Word> rows;
    while (std::getline(in, line)) {
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        size_t start = line.find_first_not_of(' ');
        if (start == std::string::npos) continue;
        line.erase(0, start);
        if (!header) {
            if (sscanf(line.c_str(), "Z4CODE n=%u k1=%u k2=%u", &n, &k1, &k2) != 3)
                throw ParseError("z4c: bad header line: " + line);
            header = true;
            continue;
        }
        if (line.size() != n) throw ParseError("z4c: row has wrong length: " + line);
        rows.push_back(Z4Word::from_string(line));
    }
    if (!header) throw ParseError("z4c: missing header");
    if (rows.size() != size_t(k1) + k2)
        throw ParseError("z4c: expected " + std::to_string(k1 + k2) + " rows, got " +
                         std::to_string(rows.size()));
    return from_generator_rows(n, k1, k2, std::move(rows));
}

Z4Code Z4Code::read_file(const std::string& path) {
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

std::string Z4Code::format() const {
    std::string out = "Z4CODE n=" + std::to_string(n_) + " k1=" + std::to_string(k1_) +
                      " k2=" + std::to_string(k2_) + "\n";
    for (const auto& r : rows_) out += r.to_string() + "\n";
    return out;
}

void Z4Code::write_file(const std::string& path) const {
    std::ofstream f(path);
    if (!f) throw IoError("cannot open " + path + " for writing");
    f << format();
    if (!f) throw IoError("write failed: " + path);
}

Z4Code Z4Code::dual() const {
    // Permuted standard form [I A B / 0 2I 2C] gives the dual generator
    // [-(B^T + C^T A^T)  C^T  I / 2A^T  2I  0]; build it in permuted
    // coordinates, then map columns back.
    const uint32_t k1 = sf_.k1, k2 = sf_.k2;
    const uint32_t m = n_ - k1 - k2;
    std::vector<uint32_t> rest_cols;
    {
        std::vector<char> used(n_, 0);
        for (uint32_t c : sf_.unit_cols) used[c] = 1;
        for (uint32_t c : sf_.two_cols) used[c] = 1;
        for (uint32_t c = 0; c < n_; ++c)
            if (!used[c]) rest_cols.push_back(c);
    }
    auto a = [&](uint32_t i, uint32_t j) { return sf_.rows[i].digit(sf_.two_cols[j]); };
    auto b = [&](uint32_t i, uint32_t j) { return sf_.rows[i].digit(rest_cols[j]); };
    auto cbit = [&](uint32_t i, uint32_t j) {
        return static_cast<uint8_t>(sf_.rows[k1 + i].digit(rest_cols[j]) / 2);
    };

    std::vector<Z4Word> gens;
    gens.reserve(m + k2);
    for (uint32_t j = 0; j < m; ++j) {
        Z4Word v(n_);
        for (uint32_t i = 0; i < k1; ++i) {
            int64_t acc = -int64_t(b(i, j));
            for (uint32_t t = 0; t < k2; ++t) acc -= int64_t(cbit(t, j)) * a(i, t);
            v.set_digit(sf_.unit_cols[i], static_cast<uint8_t>(((acc % 4) + 4) % 4));
        }
        for (uint32_t t = 0; t < k2; ++t) v.set_digit(sf_.two_cols[t], cbit(t, j));
        v.set_digit(rest_cols[j], 1);
        gens.push_back(std::move(v));
    }
    for (uint32_t j = 0; j < k2; ++j) {
        Z4Word v(n_);
        for (uint32_t i = 0; i < k1; ++i)
            v.set_digit(sf_.unit_cols[i], static_cast<uint8_t>((2 * a(i, j)) % 4));
        v.set_digit(sf_.two_cols[j], 2);
        gens.push_back(std::move(v));
    }
    return from_rows(n_, std::move(gens));
}

BinaryCode Z4Code::residue() const {
    std::vector<BinaryWord> gens;
    gens.reserve(sf_.k1);
    for (uint32_t i = 0; i < sf_.k1; ++i) gens.push_back(sf_.rows[i].lo_plane());
    BinaryCode res = BinaryCode::from_rows(n_, std::move(gens));
    if (self_dual_ && parity_class(res) != ParityClass::DoublyEven)
        throw InternalError("residue of a self-dual code must be doubly even");
    return res;
}

BinaryCode Z4Code::torsion() const {
    // spanned by the residue rows and the halved order-2 rows
    std::vector<BinaryWord> gens;
    gens.reserve(sf_.k1 + sf_.k2);
    for (uint32_t i = 0; i < sf_.k1; ++i) gens.push_back(sf_.rows[i].lo_plane());
    for (uint32_t i = sf_.k1; i < sf_.k1 + sf_.k2; ++i) {
        const Z4Word& row = sf_.rows[i];
        BinaryWord half(n_);
        for (uint32_t c = 0; c < n_; ++c)
            if (row.digit(c) == 2) half.set_bit(c, true);
        gens.push_back(std::move(half));
    }
    BinaryCode tor = BinaryCode::from_rows(n_, std::move(gens));
    if (tor.dim() != sf_.k1 + sf_.k2)
        throw InternalError("torsion dimension must be k1+k2");
    if (self_dual_ && !tor.same_row_space(residue().dual()))
        throw InternalError("torsion of a self-dual code must equal the residue dual");
    return tor;
}

bool Z4Code::contains(const Z4Word& w) const {
    if (w.length() != n_) throw ArgumentError("contains: length mismatch");
    Z4Word x = w;
    for (uint32_t i = 0; i < sf_.k1; ++i) {
        uint8_t d = x.digit(sf_.unit_cols[i]);
        if (d) x = x.plus(sf_.rows[i].scaled(static_cast<uint8_t>(4 - d)));
    }
    for (uint32_t i = 0; i < sf_.k2; ++i) {
        uint8_t d = x.digit(sf_.two_cols[i]);
        if (d & 1) return false;
        if (d == 2) x = x.plus(sf_.rows[sf_.k1 + i]);
    }
    return x.is_zero();
}

bool Z4Code::same_row_space(const Z4Code& rhs) const {
    if (n_ != rhs.n_ || sf_.k1 != rhs.sf_.k1 || sf_.k2 != rhs.sf_.k2) return false;
    for (const auto& r : rhs.sf_.rows)
        if (!contains(r)) return false;
    for (const auto& r : sf_.rows)
        if (!rhs.contains(r)) return false;
    return true;
}

Z4Code Z4Code::permuted(std::span<const uint32_t> perm) const {
    std::vector<Z4Word> rows;
    rows.reserve(rows_.size());
    for (const auto& r : rows_) rows.push_back(r.permuted(perm));
    return from_generator_rows(n_, k1_, k2_, std::move(rows));
}

Z4Code Z4Code::sign_flipped(const BinaryWord& mask) const {
    std::vector<Z4Word> rows;
    rows.reserve(rows_.size());
    for (const auto& r : rows_) rows.push_back(r.sign_flipped(mask));
    return from_generator_rows(n_, k1_, k2_, std::move(rows));
}

Z4Type generator_type_criterion(const Z4Code& c) {
    if (!c.is_self_dual())
        throw PreconditionError("type is defined for self-dual codes only");
    const auto& rows = c.rows();
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].weights().euclidean % 8) return Z4Type::I;
        for (size_t j = i + 1; j < rows.size(); ++j)
            if (rows[i].plus(rows[j]).weights().euclidean % 8) return Z4Type::I;
    }
    return Z4Type::II;
}

} // namespace z4sd
