#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latpack/errors.hpp"

namespace latpack {

// Binary block code of length <= 32; codewords are bitmasks with bit i
// holding coordinate i.  Word lists are kept sorted.
class BinaryCode {
public:
    static BinaryCode from_generators(int length, const std::vector<std::uint32_t>& gens);
    static BinaryCode from_words(int length, std::vector<std::uint32_t> words);

    int length() const { return length_; }
    std::size_t size() const { return words_.size(); }
    bool is_linear() const { return linear_; }
    int dimension() const;  // linear codes only
    const std::vector<std::uint32_t>& words() const { return words_; }
    bool contains(std::uint32_t w) const;

    int min_distance() const;
    std::vector<std::uint64_t> weight_distribution() const;  // A_0 .. A_n

private:
    int length_ = 0;
    bool linear_ = false;
    std::vector<std::uint32_t> words_;
};

// Dual of a linear code.
BinaryCode dual_code(const BinaryCode& c);

bool is_self_dual(const BinaryCode& c);
bool is_doubly_even(const BinaryCode& c);

// The [24,12,8] extended Golay code from the length-23 cyclic code.
BinaryCode golay24();

// The [18,9,6] extended quadratic-residue code of length 17.
BinaryCode qr18();

// First-order Reed-Muller code [2^m, m+1, 2^(m-1)].
BinaryCode reed_muller_1(int m);

// Quaternary code: vectors over Z/4.
class Z4Code {
public:
    Z4Code(int length, std::vector<std::vector<std::uint8_t>> words);

    int length() const { return length_; }
    std::size_t size() const { return words_.size(); }
    const std::vector<std::vector<std::uint8_t>>& words() const { return words_; }

private:
    int length_;
    std::vector<std::vector<std::uint8_t>> words_;
};

// The 40-word pentacode over Z/4 whose Gray image is the (10, 40, 4) code.
Z4Code best_pentacode();

int lee_weight(const std::vector<std::uint8_t>& word);

// Componentwise Gray map 0->00, 1->01, 2->11, 3->10, doubling the length.
// Distances map Lee -> Hamming.
std::uint32_t gray_map(const std::vector<std::uint8_t>& word);
BinaryCode gray_image(const Z4Code& c);

// The (10, 40, 4) binary nonlinear code.
BinaryCode best10();

} // namespace latpack
