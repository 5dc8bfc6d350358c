#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "goldman/words.hpp"

#include <random>

using namespace goldman;

namespace {

// independent oracle: all rotations of the cyclically reduced string,
// compared under the letter order a < A < b < B
std::string rotation_oracle(std::string s) {
    s = free_reduce(s);
    std::size_t lo = 0, hi = s.size();
    while (hi - lo >= 2 && s[lo] == inverse_letter(s[hi - 1])) {
        ++lo;
        --hi;
    }
    s = s.substr(lo, hi - lo);
    std::string best = s;
    for (std::size_t i = 1; i < s.size(); ++i) {
        std::string rot = s.substr(i) + s.substr(0, i);
        if (compare_letters(rot, best) < 0) best = rot;
    }
    return best;
}

std::string random_reduced(std::mt19937& rng, int len) {
    static const char letters[4] = {'a', 'A', 'b', 'B'};
    std::string out;
    std::uniform_int_distribution<int> d(0, 3);
    while (static_cast<int>(out.size()) < len) {
        char c = letters[d(rng)];
        if (!out.empty() && out.back() == inverse_letter(c)) continue;
        out.push_back(c);
    }
    return out;
}

}  // namespace

TEST_CASE("parse_word reduces and desugars") {
    CHECK(parse_word("abB").letters() == "a");
    CHECK(parse_word("aB").letters() == "aB");
    CHECK(parse_word("a^-1b^-1").letters() == "AB");
    CHECK(parse_word("a^2 b^-2").letters() == "aaBB");
    CHECK(parse_word("").empty());
    CHECK_THROWS_AS(parse_word("a!b"), parse_error);
    CHECK_THROWS_AS(parse_word("a^x"), parse_error);
}

TEST_CASE("parse error names the offset") {
    try {
        parse_word("ab!c");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(std::string(e.what()).find("offset 2") != std::string::npos);
    }
}

TEST_CASE("cyclic canonical form") {
    CHECK(cyclic_canonical(parse_word("Bab")).str() == "a");
    CHECK(cyclic_canonical(parse_word("aBaBBa")).str() == "aaBaBB");
    CHECK(cyclic_canonical(parse_word("")).empty());

    SUBCASE("conjugacy invariance: canonical(uv) == canonical(vu)") {
        std::mt19937 rng(11);
        for (int trial = 0; trial < 300; ++trial) {
            Word u = Word::from_reduced(random_reduced(rng, 1 + trial % 6));
            Word v = Word::from_reduced(random_reduced(rng, 1 + (trial / 2) % 6));
            CHECK(cyclic_canonical(u * v) == cyclic_canonical(v * u));
        }
    }

    SUBCASE("matches the rotation oracle") {
        std::mt19937 rng(12);
        for (int trial = 0; trial < 300; ++trial) {
            std::string s = random_reduced(rng, 1 + trial % 8);
            CHECK(cyclic_canonical_str(s).str() == rotation_oracle(s));
        }
    }
}

TEST_CASE("power") {
    CyclicWord x = cyclic_canonical_str("aB");
    CHECK(power(x, 2).str() == "aBaB");
    CHECK(power(cyclic_canonical_str("a"), -1).str() == "A");
    CHECK(power(cyclic_canonical_str("aaB"), 2) == cyclic_canonical_str("aaBaaB"));
    CHECK(power(x, 1) == x);
    CHECK_THROWS_AS(power(x, 0), domain_error);

    SUBCASE("x^m = x^n implies m = n for nonempty x") {
        std::mt19937 rng(13);
        for (int trial = 0; trial < 100; ++trial) {
            CyclicWord w = cyclic_canonical_str(random_reduced(rng, 1 + trial % 5));
            if (w.empty()) continue;
            for (int m = 1; m <= 4; ++m)
                for (int n = m + 1; n <= 5; ++n)
                    CHECK(power(w, m) != power(w, n));
        }
    }
}

TEST_CASE("primitive_root") {
    auto [root1, exp1] = primitive_root(cyclic_canonical_str("aBaB"));
    CHECK(root1.str() == "aB");
    CHECK(exp1 == 2);
    auto [root2, exp2] = primitive_root(cyclic_canonical_str("aB"));
    CHECK(root2.str() == "aB");
    CHECK(exp2 == 1);
    auto [root3, exp3] = primitive_root(cyclic_canonical_str("aaBaaB"));
    CHECK(root3.str() == "aaB");
    CHECK(exp3 == 2);
    CHECK_THROWS_AS(primitive_root(CyclicWord{}), domain_error);

    SUBCASE("root of power multiplies the exponent") {
        std::mt19937 rng(14);
        for (int trial = 0; trial < 100; ++trial) {
            CyclicWord w = cyclic_canonical_str(random_reduced(rng, 1 + trial % 4));
            if (w.empty()) continue;
            int base_exp = primitive_root(w).exponent;
            for (int k = 2; k <= 4; ++k)
                CHECK(primitive_root(power(w, k)).exponent == k * base_exp);
        }
    }
}

TEST_CASE("formal sums") {
    FormalSum s;
    CyclicWord aB = cyclic_canonical_str("aB");
    s.add(1, aB);
    s.add(-1, aB);
    CHECK(s.is_zero());

    s.add(2, cyclic_canonical_str("a"));
    CHECK(s.term_count() == 1);
    CHECK(s.terms().begin()->second == 2);

    // conjugates merge under the canonical form
    s.add(1, cyclic_canonical(parse_word("Bab")));
    CHECK(s.term_count() == 1);
    CHECK(s.terms().begin()->second == 3);

    SUBCASE("exact rational arithmetic") {
        FormalSum t;
        t.add(parse_rational("1/3"), aB);
        t.add(parse_rational("1/6"), aB);
        t.add(parse_rational("-1/2"), aB);
        CHECK(t.is_zero());
    }
}

TEST_CASE("rational parsing and printing") {
    CHECK(rational_to_string(parse_rational("6/4")) == "3/2");
    CHECK(rational_to_string(parse_rational("-2")) == "-2");
    CHECK_THROWS_AS(parse_rational("x"), parse_error);
}

TEST_CASE("round trip: parse then print is canonical") {
    std::mt19937 rng(15);
    for (int trial = 0; trial < 200; ++trial) {
        std::string s = random_reduced(rng, 1 + trial % 7);
        Word w = parse_word(s);
        CHECK(parse_word(w.letters()) == w);
        CyclicWord c = cyclic_canonical(w);
        CHECK(cyclic_canonical_str(c.str()) == c);
    }
}
