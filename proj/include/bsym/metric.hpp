#pragma once

// b-symbol metric kernel: cyclic windows, weights, distances, the alphabet-q^b
// window relabeling, and distribution/enumerator computations on explicit codes.

#include "bsym/numeric.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace bsym {

using Symbol = std::uint32_t;

/// A length-n word over {0, ..., q-1}. Length and alphabet are fixed at construction.
class Word {
public:
    Word(std::uint32_t q, std::vector<Symbol> symbols);
    Word(std::uint32_t q, std::initializer_list<Symbol> symbols)
        : Word(q, std::vector<Symbol>(symbols)) {}

    static Word zero(std::uint32_t q, std::size_t n);

    /// Base-q digits of `index`, first symbol most significant.
    static Word from_index(std::uint32_t q, std::size_t n, std::uint64_t index);
    std::uint64_t to_index() const;

    std::uint32_t q() const noexcept { return q_; }
    std::size_t size() const noexcept { return symbols_.size(); }
    std::span<const Symbol> symbols() const noexcept { return symbols_; }
    Symbol operator[](std::size_t i) const { return symbols_[i]; }

    bool is_zero() const noexcept;

    /// Coordinatewise sum / difference modulo q.
    Word operator+(const Word& other) const;
    Word operator-(const Word& other) const;

    /// Cyclic left rotation by `k` positions.
    Word rotated(std::size_t k) const;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word& a, const Word& b) { return a.symbols_ <=> b.symbols_; }

private:
    std::uint32_t q_;
    std::vector<Symbol> symbols_;
};

/// A duplicate-free set of words sharing (n, q). Insertion order is kept.
class Code {
public:
    Code(std::uint32_t q, std::size_t n) : q_(q), n_(n) {}
    Code(std::uint32_t q, std::size_t n, std::vector<Word> words);

    /// Throws DimensionError on (n, q) mismatch and ParameterError on a duplicate.
    void insert(Word w);
    bool contains(const Word& w) const;

    std::uint32_t q() const noexcept { return q_; }
    std::size_t length() const noexcept { return n_; }
    std::size_t size() const noexcept { return words_.size(); }
    bool empty() const noexcept { return words_.empty(); }
    const std::vector<Word>& words() const noexcept { return words_; }
    auto begin() const { return words_.begin(); }
    auto end() const { return words_.end(); }

private:
    std::uint32_t q_;
    std::size_t n_;
    std::vector<Word> words_;
    std::vector<Word> sorted_;
};

using Window = std::vector<Symbol>;

/// pi(y): the n cyclic windows (y_i, ..., y_{i+b-1}), indices mod n.
std::vector<Window> bsym_expand(const Word& y, std::size_t b);

std::size_t hamming_weight(const Word& y);
std::size_t hamming_distance(const Word& x, const Word& y);

/// Number of nonzero cyclic windows of length b.
std::size_t bsym_weight(const Word& y, std::size_t b);

/// Number of window positions where x and y differ.
std::size_t bsym_distance(const Word& x, const Word& y, std::size_t b);

/// Relabels window i as its base-q value (first window symbol most significant).
/// The result lives over an alphabet of size q^b; requires n >= b.
Word window_encode(const Word& y, std::size_t b);

struct DistanceDistribution {
    std::vector<Rational> entries;  // B_0 .. B_n
    std::size_t code_size = 0;
};

/// B_i = (1/M) #{(u, v) in C^2 : d_b(u, v) = i}.
DistanceDistribution distance_distribution(const Code& code, std::size_t b);

/// Minimum d_b over distinct pairs; throws UndefinedDistanceError for |C| < 2.
std::size_t min_bsym_distance(const Code& code, std::size_t b);

enum class EnumeratorMetric { BSymbol, Hamming };

struct WeightEnumerator {
    std::vector<std::uint64_t> coefficients;  // A_0 .. A_n
    EnumeratorMetric metric = EnumeratorMetric::BSymbol;
};

/// A_i = #{c in C : w_b(c) = i}. b = 1 is tagged as a Hamming enumerator.
WeightEnumerator weight_enumerator(const Code& code, std::size_t b);

/// Hamming weights of the four window groups around the split after position l
/// (1-based): the windows of z starting at l-b+2..l, the windows of z starting
/// at n-b+2..n, the wrapped windows of the prefix z_1..z_l starting at l-b+2..l,
/// and the wrapped windows of the suffix z_{l+1}..z_n starting at n-b+2..n.
/// Requires n >= l >= b >= 2.
std::array<std::size_t, 4> boundary_blocks(const Word& z, std::size_t l, std::size_t b);

}  // namespace bsym
