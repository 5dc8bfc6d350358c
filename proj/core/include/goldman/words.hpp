#pragma once

#include "goldman/errors.hpp"
#include "goldman/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace goldman {

// Alphabet {a, A, b, B}; an uppercase letter is the inverse of its
// lowercase partner. Letter order for all comparisons: a < A < b < B.

inline constexpr bool is_letter(char c) {
    return c == 'a' || c == 'A' || c == 'b' || c == 'B';
}

inline constexpr char inverse_letter(char c) {
    switch (c) {
        case 'a': return 'A';
        case 'A': return 'a';
        case 'b': return 'B';
        case 'B': return 'b';
    }
    return '\0';
}

inline constexpr int letter_rank(char c) {
    switch (c) {
        case 'a': return 0;
        case 'A': return 1;
        case 'b': return 2;
        case 'B': return 3;
    }
    return 4;
}

/// Letter-order-aware lexicographic comparison of two letter strings.
int compare_letters(std::string_view u, std::string_view v);

/// Free reduction: cancel all adjacent mutually inverse pairs.
std::string free_reduce(std::string_view s);

/// Reversed string with every letter inverted.
std::string invert_letters(std::string_view s);

/// Freely reduced word in the free group on {a, b}.
class Word {
public:
    Word() = default;

    /// Wraps a string that is already freely reduced (checked).
    static Word from_reduced(std::string letters);

    const std::string& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    Word inverse() const { return Word(invert_letters(letters_)); }

    friend Word operator*(const Word& u, const Word& v) {
        return Word(free_reduce(u.letters_ + v.letters_));
    }

    bool operator==(const Word&) const = default;

private:
    explicit Word(std::string s) : letters_(std::move(s)) {}
    std::string letters_;
};

/// Parses "aBab" or the "a^-1b^2" exponent syntax and freely reduces.
/// Whitespace is ignored. Throws parse_error naming the bad offset.
Word parse_word(std::string_view text);

/// Canonical representative of a free homotopy class: cyclically reduced,
/// stored in its lexicographically least rotation. The empty word is the
/// class of the constant loop.
class CyclicWord {
public:
    CyclicWord() = default;

    const std::string& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    std::string str() const { return letters_; }

    bool operator==(const CyclicWord&) const = default;

    /// Shortlex order (length first, then letter order): a fixed total
    /// order used for FormalSum keys and serialized output.
    std::strong_ordering operator<=>(const CyclicWord& o) const {
        if (letters_.size() != o.letters_.size())
            return letters_.size() <=> o.letters_.size();
        int c = compare_letters(letters_, o.letters_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend CyclicWord cyclic_canonical(const Word& w);
    friend CyclicWord cyclic_canonical_str(std::string_view s);

private:
    explicit CyclicWord(std::string s) : letters_(std::move(s)) {}
    std::string letters_;
};

/// Conjugacy-class canonical form: two Words map to the same CyclicWord
/// iff they are conjugate.
CyclicWord cyclic_canonical(const Word& w);

/// Same, starting from a raw (possibly unreduced) letter string.
CyclicWord cyclic_canonical_str(std::string_view s);

/// x^m for m != 0; negative m inverts. Throws domain_error on m == 0.
CyclicWord power(const CyclicWord& x, int m);

CyclicWord inverse(const CyclicWord& x);

struct PrimitiveRoot {
    CyclicWord root;
    int exponent = 0;
};

/// Unique (root, exponent) with x = root^exponent, root primitive.
/// Throws domain_error on the empty word.
PrimitiveRoot primitive_root(const CyclicWord& x);

/// Finite rational linear combination of free homotopy classes,
/// i.e. an element of the free module over canonical cyclic words.
/// Zero coefficients are never stored.
class FormalSum {
public:
    FormalSum() = default;

    FormalSum& add(const Rational& coeff, const CyclicWord& w);
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    const std::map<CyclicWord, Rational>& terms() const { return terms_; }

    FormalSum& operator+=(const FormalSum& o);
    FormalSum operator-() const;
    FormalSum& scale(const Rational& c);

    bool operator==(const FormalSum&) const = default;

    /// Total number of terms counted with coefficient multiplicity,
    /// i.e. the sum of |coeff| when all coefficients are integers.
    Rational multiplicity_weight() const;

private:
    std::map<CyclicWord, Rational> terms_;
};

inline FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }

}  // namespace goldman
