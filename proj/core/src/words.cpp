#include "goldman/words.hpp"

#include <algorithm>
#include <cctype>

namespace goldman {

std::string rational_to_string(const Rational& r) {
    const auto num = boost::multiprecision::numerator(r);
    const auto den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw parse_error("empty rational");
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw parse_error("bad rational '" + s + "'");
    }
}

int compare_letters(std::string_view u, std::string_view v) {
    const std::size_t n = std::min(u.size(), v.size());
    for (std::size_t i = 0; i < n; ++i) {
        int d = letter_rank(u[i]) - letter_rank(v[i]);
        if (d != 0) return d;
    }
    if (u.size() == v.size()) return 0;
    return u.size() < v.size() ? -1 : 1;
}

std::string free_reduce(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (!out.empty() && out.back() == inverse_letter(c))
            out.pop_back();
        else
            out.push_back(c);
    }
    return out;
}

std::string invert_letters(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (auto it = s.rbegin(); it != s.rend(); ++it)
        out.push_back(inverse_letter(*it));
    return out;
}

Word Word::from_reduced(std::string letters) {
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (!is_letter(letters[i]))
            throw parse_error("unknown character '" + std::string(1, letters[i]) +
                              "' at offset " + std::to_string(i));
        if (i + 1 < letters.size() && letters[i + 1] == inverse_letter(letters[i]))
            throw domain_error("word is not freely reduced at offset " + std::to_string(i));
    }
    return Word(std::move(letters));
}

Word parse_word(std::string_view text) {
    std::string flat;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (!is_letter(c))
            throw parse_error("unknown character '" + std::string(1, c) +
                              "' at offset " + std::to_string(i));
        ++i;
        long exp = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            bool neg = false;
            if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
                neg = text[i] == '-';
                ++i;
            }
            if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                throw parse_error("expected exponent digits at offset " + std::to_string(i));
            long v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                if (v > 1000000) throw parse_error("exponent too large at offset " + std::to_string(i));
                ++i;
            }
            exp = neg ? -v : v;
        }
        char base = exp < 0 ? inverse_letter(c) : c;
        for (long k = 0; k < (exp < 0 ? -exp : exp); ++k) flat.push_back(base);
    }
    return Word::from_reduced(free_reduce(flat));
}

namespace {

std::string cyclic_reduce(std::string s) {
    s = free_reduce(s);
    std::size_t lo = 0, hi = s.size();
    while (hi - lo >= 2 && s[lo] == inverse_letter(s[hi - 1])) {
        ++lo;
        --hi;
    }
    return s.substr(lo, hi - lo);
}

std::string least_rotation(const std::string& s) {
    if (s.size() <= 1) return s;
    std::string best = s;
    std::string rot = s;
    for (std::size_t i = 1; i < s.size(); ++i) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (compare_letters(rot, best) < 0) best = rot;
    }
    return best;
}

}  // namespace

CyclicWord cyclic_canonical(const Word& w) {
    return CyclicWord(least_rotation(cyclic_reduce(w.letters())));
}

CyclicWord cyclic_canonical_str(std::string_view s) {
    return CyclicWord(least_rotation(cyclic_reduce(free_reduce(s))));
}

CyclicWord power(const CyclicWord& x, int m) {
    if (m == 0) throw domain_error("power: exponent must be nonzero");
    std::string base = x.letters();
    if (m < 0) {
        base = invert_letters(base);
        m = -m;
    }
    // base is cyclically reduced, so plain concatenation stays reduced and
    // repeating the least rotation is again the least rotation
    std::string out;
    out.reserve(base.size() * static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) out += base;
    return cyclic_canonical_str(out);
}

CyclicWord inverse(const CyclicWord& x) {
    return cyclic_canonical_str(invert_letters(x.letters()));
}

PrimitiveRoot primitive_root(const CyclicWord& x) {
    if (x.empty()) throw domain_error("primitive_root: empty word");
    const std::string& s = x.letters();
    const std::size_t n = s.size();
    for (std::size_t p = 1; p <= n; ++p) {
        if (n % p != 0) continue;
        bool periodic = true;
        for (std::size_t i = 0; i + p < n && periodic; ++i)
            periodic = s[i] == s[i + p];
        if (periodic)
            return PrimitiveRoot{cyclic_canonical_str(s.substr(0, p)),
                                 static_cast<int>(n / p)};
    }
    return PrimitiveRoot{x, 1};  // unreachable: p = n always matches
}

FormalSum& FormalSum::add(const Rational& coeff, const CyclicWord& w) {
    if (coeff == 0) return *this;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

FormalSum& FormalSum::operator+=(const FormalSum& o) {
    for (const auto& [w, c] : o.terms_) add(c, w);
    return *this;
}

FormalSum FormalSum::operator-() const {
    FormalSum out;
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
    return out;
}

FormalSum& FormalSum::scale(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

Rational FormalSum::multiplicity_weight() const {
    Rational total = 0;
    for (const auto& [w, c] : terms_) total += c < 0 ? Rational(-c) : c;
    return total;
}

}  // namespace goldman
