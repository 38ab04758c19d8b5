#include "latpack/codes.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace latpack {

namespace {

void check_length(int length) {
    if (length < 1 || length > 32)
        throw PreconditionError("code length must be between 1 and 32");
}

} // namespace

BinaryCode BinaryCode::from_generators(int length, const std::vector<std::uint32_t>& gens) {
    check_length(length);
    std::uint32_t mask = length == 32 ? 0xffffffffu : ((1u << length) - 1);
    std::vector<std::uint32_t> words{0};
    for (std::uint32_t g : gens) {
        if (g & ~mask) throw PreconditionError("generator exceeds code length");
        std::size_t cur = words.size();
        for (std::size_t i = 0; i < cur; ++i) words.push_back(words[i] ^ g);
        std::sort(words.begin(), words.end());
        words.erase(std::unique(words.begin(), words.end()), words.end());
        if (words.size() > (1u << 26))
            throw ResourceError("code span too large");
    }
    BinaryCode c;
    c.length_ = length;
    c.linear_ = true;
    c.words_ = std::move(words);
    return c;
}

BinaryCode BinaryCode::from_words(int length, std::vector<std::uint32_t> words) {
    check_length(length);
    std::uint32_t mask = length == 32 ? 0xffffffffu : ((1u << length) - 1);
    for (std::uint32_t w : words)
        if (w & ~mask) throw PreconditionError("codeword exceeds code length");
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    if (words.empty()) throw PreconditionError("code must be nonempty");
    BinaryCode c;
    c.length_ = length;
    c.words_ = std::move(words);
    // Detect linearity: contains 0 and closed under xor.
    c.linear_ = c.contains(0);
    for (std::size_t i = 0; i < c.words_.size() && c.linear_; ++i)
        for (std::size_t j = i + 1; j < c.words_.size() && c.linear_; ++j)
            c.linear_ = c.contains(c.words_[i] ^ c.words_[j]);
    return c;
}

int BinaryCode::dimension() const {
    if (!linear_) throw PreconditionError("dimension requires a linear code");
    return std::bit_width(words_.size()) - 1;
}

bool BinaryCode::contains(std::uint32_t w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
}

int BinaryCode::min_distance() const {
    if (words_.size() < 2) throw PreconditionError("minimum distance needs two codewords");
    int best = length_ + 1;
    if (linear_) {
        for (std::uint32_t w : words_)
            if (w != 0) best = std::min(best, std::popcount(w));
    } else {
        for (std::size_t i = 0; i < words_.size(); ++i)
            for (std::size_t j = i + 1; j < words_.size(); ++j)
                best = std::min(best, std::popcount(words_[i] ^ words_[j]));
    }
    return best;
}

std::vector<std::uint64_t> BinaryCode::weight_distribution() const {
    std::vector<std::uint64_t> a(length_ + 1, 0);
    for (std::uint32_t w : words_) ++a[std::popcount(w)];
    return a;
}

BinaryCode dual_code(const BinaryCode& c) {
    if (!c.is_linear()) throw PreconditionError("dual requires a linear code");
    int n = c.length();
    // Echelonize a generating set; pivot = highest set bit of each row.
    // Rows are reduced against earlier pivots only, so pivot p_i never
    // appears in rows inserted after row i.
    std::vector<std::uint32_t> rows;
    std::vector<int> pivots;
    for (std::uint32_t w : c.words()) {
        std::uint32_t r = w;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (r >> pivots[i] & 1) r ^= rows[i];
        if (r) {
            rows.push_back(r);
            pivots.push_back(std::bit_width(r) - 1);
        }
    }
    std::vector<bool> is_pivot(n, false);
    for (int p : pivots) is_pivot[p] = true;
    // One kernel vector per free coordinate: set it, then walk the rows
    // last-to-first fixing each equation at its own pivot.
    std::vector<std::uint32_t> basis;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::uint32_t x = 1u << f;
        for (std::size_t i = rows.size(); i-- > 0;)
            if (std::popcount(x & rows[i]) & 1) x ^= 1u << pivots[i];
        basis.push_back(x);
    }
    return BinaryCode::from_generators(n, basis);
}

bool is_self_dual(const BinaryCode& c) {
    if (!c.is_linear() || 2 * c.dimension() != c.length()) return false;
    return dual_code(c).words() == c.words();
}

bool is_doubly_even(const BinaryCode& c) {
    for (std::uint32_t w : c.words())
        if (std::popcount(w) % 4) return false;
    return true;
}

BinaryCode golay24() {
    // Cyclic [23,12,7] code with generator polynomial
    // x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1, extended by overall parity.
    std::uint32_t g = 0;
    for (int e : {0, 2, 4, 5, 6, 10, 11}) g |= 1u << e;
    std::vector<std::uint32_t> gens;
    for (int i = 0; i + 11 < 23; ++i) gens.push_back(g << i);
    BinaryCode cyc = BinaryCode::from_generators(23, gens);
    std::vector<std::uint32_t> ext;
    ext.reserve(cyc.size());
    for (std::uint32_t w : cyc.words())
        ext.push_back(w | (static_cast<std::uint32_t>(std::popcount(w) & 1) << 23));
    return BinaryCode::from_words(24, std::move(ext));
}

namespace {

// GF(256) as F2[y]/(y^8 + y^4 + y^3 + y^2 + 1).
std::uint8_t gf_mul(std::uint8_t a, std::uint8_t b) {
    std::uint16_t r = 0, aa = a;
    while (b) {
        if (b & 1) r ^= aa;
        aa <<= 1;
        if (aa & 0x100) aa ^= 0x11d;
        b >>= 1;
    }
    return static_cast<std::uint8_t>(r);
}

std::uint8_t gf_pow(std::uint8_t a, int e) {
    std::uint8_t r = 1;
    while (e) {
        if (e & 1) r = gf_mul(r, a);
        a = gf_mul(a, a);
        e >>= 1;
    }
    return r;
}

} // namespace

BinaryCode qr18() {
    // Quadratic residues modulo 17.
    std::vector<int> residues;
    for (int i = 1; i <= 8; ++i) residues.push_back(i * i % 17);
    std::sort(residues.begin(), residues.end());

    // 17th root of unity in GF(256): the generator 0x02 has order 255, so
    // alpha = 0x02^15 has order 17.
    std::uint8_t alpha = gf_pow(2, 15);
    if (gf_pow(alpha, 17) != 1 || alpha == 1)
        throw Error("17th root of unity construction failed");

    // g(x) = prod over residues r of (x - alpha^r); the residue set is
    // closed under doubling, so the product has F2 coefficients.
    std::vector<std::uint8_t> poly{1};
    for (int r : residues) {
        std::uint8_t root = gf_pow(alpha, r);
        std::vector<std::uint8_t> next(poly.size() + 1, 0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] ^= poly[i];
            next[i] ^= gf_mul(poly[i], root);
        }
        poly = std::move(next);
    }
    std::uint32_t g = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        if (poly[i] > 1) throw Error("residue polynomial is not binary");
        if (poly[i]) g |= 1u << i;
    }

    std::vector<std::uint32_t> gens;
    for (int i = 0; i + 8 < 17; ++i) gens.push_back(g << i);
    BinaryCode cyc = BinaryCode::from_generators(17, gens);
    std::vector<std::uint32_t> ext;
    ext.reserve(cyc.size());
    for (std::uint32_t w : cyc.words())
        ext.push_back(w | (static_cast<std::uint32_t>(std::popcount(w) & 1) << 17));
    return BinaryCode::from_words(18, std::move(ext));
}

BinaryCode reed_muller_1(int m) {
    if (m < 1 || m > 5) throw PreconditionError("first-order Reed-Muller supports 1 <= m <= 5");
    int n = 1 << m;
    std::vector<std::uint32_t> gens;
    std::uint32_t ones = n == 32 ? 0xffffffffu : ((1u << n) - 1);
    gens.push_back(ones);
    for (int i = 0; i < m; ++i) {
        std::uint32_t v = 0;
        for (int p = 0; p < n; ++p)
            if (p >> i & 1) v |= 1u << p;
        gens.push_back(v);
    }
    return BinaryCode::from_generators(n, gens);
}

Z4Code::Z4Code(int length, std::vector<std::vector<std::uint8_t>> words)
    : length_(length), words_(std::move(words)) {
    if (length_ < 1 || length_ > 16)
        throw PreconditionError("quaternary code length must be between 1 and 16");
    for (const auto& w : words_) {
        if (static_cast<int>(w.size()) != length_)
            throw PreconditionError("quaternary word length mismatch");
        for (std::uint8_t d : w)
            if (d > 3) throw PreconditionError("quaternary digit out of range");
    }
}

Z4Code best_pentacode() {
    // Words (a, b, c, d, e) with b, c, d in {1, 3}, a = c - d, e = b + c,
    // together with all cyclic shifts.
    std::vector<std::vector<std::uint8_t>> words;
    for (std::uint8_t b : {1, 3})
        for (std::uint8_t c : {1, 3})
            for (std::uint8_t d : {1, 3}) {
                std::vector<std::uint8_t> w{
                    static_cast<std::uint8_t>((c - d + 8) % 4), b, c, d,
                    static_cast<std::uint8_t>((b + c) % 4)};
                for (int s = 0; s < 5; ++s) {
                    words.push_back(w);
                    std::rotate(w.begin(), w.begin() + 1, w.end());
                }
            }
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return Z4Code(5, std::move(words));
}

int lee_weight(const std::vector<std::uint8_t>& word) {
    int s = 0;
    for (std::uint8_t d : word) s += (d == 2) ? 2 : (d == 0 ? 0 : 1);
    return s;
}

std::uint32_t gray_map(const std::vector<std::uint8_t>& word) {
    // 0 -> 00, 1 -> 01, 2 -> 11, 3 -> 10; the left character of each pair
    // lands at bit 2i, the right one at bit 2i+1.
    static constexpr std::uint32_t left[4] = {0, 0, 1, 1};
    static constexpr std::uint32_t right[4] = {0, 1, 1, 0};
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < word.size(); ++i)
        out |= left[word[i]] << (2 * i) | right[word[i]] << (2 * i + 1);
    return out;
}

BinaryCode gray_image(const Z4Code& c) {
    std::vector<std::uint32_t> words;
    words.reserve(c.size());
    for (const auto& w : c.words()) words.push_back(gray_map(w));
    return BinaryCode::from_words(2 * c.length(), std::move(words));
}

BinaryCode best10() { return gray_image(best_pentacode()); }

} // namespace latpack
