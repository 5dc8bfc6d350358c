#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "goldman/fuchsian.hpp"

#include <cmath>
#include <functional>
#include <string>
#include <vector>

using namespace goldman;

namespace {

void for_all_reduced_words(int max_len, const std::function<void(const std::string&)>& fn) {
    std::vector<std::string> frontier{""};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<std::string> next;
        for (const std::string& w : frontier)
            for (char c : {'a', 'A', 'b', 'B'}) {
                if (!w.empty() && w.back() == inverse_letter(c)) continue;
                next.push_back(w + c);
                fn(next.back());
            }
        frontier = std::move(next);
    }
}

}  // namespace

TEST_CASE("pants construction realizes the boundary data") {
    SurfaceRep rep = default_pants();
    CHECK(rep.gen_a().trace() == doctest::Approx(-3.0).epsilon(1e-12));
    CHECK(rep.gen_b().trace() == doctest::Approx(-3.0).epsilon(1e-12));
    CHECK((rep.gen_a() * rep.gen_b()).trace() == doctest::Approx(-3.0).epsilon(1e-10));

    double l = 2.0 * std::acosh(1.5);
    CHECK(geodesic_length(rep, cyclic_canonical_str("a")) == doctest::Approx(l).epsilon(1e-9));
    CHECK(geodesic_length(rep, cyclic_canonical_str("b")) == doctest::Approx(l).epsilon(1e-9));
    CHECK(geodesic_length(rep, cyclic_canonical_str("ab")) == doctest::Approx(l).epsilon(1e-9));

    SUBCASE("asymmetric boundary lengths") {
        SurfaceRep rep2 = pants_rep(1.5, 2.0, 2.5);
        CHECK(geodesic_length(rep2, cyclic_canonical_str("a")) == doctest::Approx(1.5).epsilon(1e-9));
        CHECK(geodesic_length(rep2, cyclic_canonical_str("b")) == doctest::Approx(2.0).epsilon(1e-9));
        CHECK(geodesic_length(rep2, cyclic_canonical_str("ab")) == doctest::Approx(2.5).epsilon(1e-9));
    }

    CHECK_THROWS_AS(pants_rep(0.0, 1.0, 1.0), domain_error);
    CHECK_THROWS_AS(pants_rep_from_traces(-1.0, -3.0, -3.0), domain_error);
}

TEST_CASE("holonomy is a homomorphism") {
    SurfaceRep rep = default_pants();
    CHECK(holonomy(rep, parse_word("a")).approx_equal(rep.gen_a(), 1e-12));
    CHECK(holonomy(rep, parse_word("aA")).approx_equal(MobiusMap{}, 1e-12));
    MobiusMap ab = holonomy(rep, parse_word("ab"));
    MobiusMap ba_inv = holonomy(rep, parse_word("BA"));
    CHECK((ab * ba_inv).approx_equal(MobiusMap{}, 1e-10));
    CHECK(holonomy(rep, parse_word("abab"))
              .approx_equal(ab * ab, 1e-10));
}

TEST_CASE("ball of radius 8 carries no relation") {
    // faithfulness at desk scale: no nonempty reduced word of length <= 8
    // has holonomy +-identity (and every one is hyperbolic)
    SurfaceRep rep = default_pants();
    int checked = 0;
    for_all_reduced_words(8, [&](const std::string& w) {
        ++checked;
        MobiusMap m = holonomy(rep, w);
        CHECK(std::fabs(m.trace()) > 2.0 + 1e-9);
    });
    CHECK(checked == 13120);  // 4 * (3^8 - 1) / 2 reduced words of length 1..8
}

TEST_CASE("geodesic length properties") {
    SurfaceRep rep = pants_rep_from_traces(-3.0, -4.0, -5.0);
    CyclicWord x = cyclic_canonical_str("aB");
    CHECK(geodesic_length(rep, x) ==
          doctest::Approx(geodesic_length(rep, cyclic_canonical_str("Ba"))));
    CHECK(geodesic_length(rep, power(x, 3)) ==
          doctest::Approx(3.0 * geodesic_length(rep, x)).epsilon(1e-9));
    CHECK(geodesic_length(rep, inverse(x)) == doctest::Approx(geodesic_length(rep, x)));
    CHECK_THROWS_AS(geodesic_length(rep, CyclicWord{}), domain_error);

    // figure-eight on the symmetric metric: tr rho(aB) = 12
    SurfaceRep sym = default_pants();
    CHECK(holonomy(sym, parse_word("aB")).trace() == doctest::Approx(12.0).epsilon(1e-9));
    CHECK(geodesic_length(sym, x) == doctest::Approx(2.0 * std::acosh(6.0)).epsilon(1e-9));
}

TEST_CASE("essential classification") {
    SurfaceRep rep = default_pants();
    CHECK(is_nonessential(rep, cyclic_canonical_str("aaa")));
    CHECK(is_nonessential(rep, cyclic_canonical_str("ab")));
    CHECK(is_nonessential(rep, cyclic_canonical_str("BA")));
    CHECK(is_nonessential(rep, cyclic_canonical_str("abab")));
    CHECK(is_nonessential(rep, CyclicWord{}));
    CHECK(!is_nonessential(rep, cyclic_canonical_str("aB")));
    CHECK(!is_nonessential(rep, cyclic_canonical_str("aab")));
    CHECK(!is_nonessential(rep, cyclic_canonical_str("aBab")));
}

TEST_CASE("conjugated representation keeps invariants") {
    SurfaceRep rep = default_pants();
    MobiusMap k = MobiusMap::from_entries(1.1, 0.3, 0.2, 1.4);
    SurfaceRep moved = rep.conjugated(k);
    for (const char* w : {"a", "b", "ab", "aB", "aab"}) {
        CyclicWord c = cyclic_canonical_str(w);
        CHECK(geodesic_length(moved, c) ==
              doctest::Approx(geodesic_length(rep, c)).epsilon(1e-9));
    }
}
