#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conflie/errors.hpp"
#include "conflie/springer.hpp"

using namespace conflie;

TEST_CASE("orbit dimensions") {
    CHECK(orbit_dim(Partition{1, 1, 1}, 3) == 0);
    CHECK(orbit_dim(Partition{4}, 4) == 12);
    CHECK(orbit_dim(Partition{2, 1}, 3) == 4);
    CHECK_THROWS_AS(orbit_dim(Partition{2, 1}, 4), precondition_error);
}

TEST_CASE("springer fibre dimensions") {
    CHECK(springer_fibre_dim(Partition{5}) == 0);
    CHECK(springer_fibre_dim(Partition{1, 1, 1, 1}) == 6);
    CHECK(springer_fibre_dim(Partition{2, 2}) == 2);
}

TEST_CASE("the two dimension formulas agree for all partitions up to 10") {
    for (std::size_t n = 1; n <= 10; ++n)
        for (const auto& mu : partitions_of(n)) {
            std::size_t odd_weighted = 0;
            for (std::size_t k = 0; k < mu.size(); ++k) odd_weighted += (2 * k + 1) * mu[k];
            CHECK(odd_weighted - n == 2 * springer_fibre_dim(mu));
            CHECK(2 * springer_fibre_dim(mu) + orbit_dim(mu, n) == n * n - n);
        }
}

TEST_CASE("single-row charge is the staircase") {
    for (std::size_t n = 2; n <= 6; ++n) {
        Partition row{n}, col(n, 1);
        QPoly k = kostka_foulkes(row, col);
        REQUIRE(k.size() == n * (n - 1) / 2 + 1);
        for (std::size_t i = 0; i + 1 < k.size(); ++i) CHECK(k[i] == 0);
        CHECK(k.back() == 1);
    }
}

TEST_CASE("diagonal entries are one") {
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& lam : partitions_of(n)) CHECK(kostka_foulkes(lam, lam) == QPoly{1});
}

TEST_CASE("hook shape with three boxes") {
    QPoly k = kostka_foulkes(Partition{2, 1}, Partition{1, 1, 1});
    CHECK(k == QPoly{0, 1, 1});  // q + q^2
}

TEST_CASE("small known values") {
    CHECK(kostka_foulkes(Partition{3}, Partition{2, 1}) == QPoly{0, 1});
    CHECK(kostka_foulkes(Partition{2, 2}, Partition{1, 1, 1, 1}) == QPoly{0, 0, 1, 0, 1});
    CHECK(kostka_foulkes(Partition{2, 2}, Partition{2, 1, 1}) == QPoly{0, 1});
    CHECK(kostka_foulkes(Partition{1, 1}, Partition{2}).empty());  // no tableau
}

TEST_CASE("specialization at one counts tableaux, support respects dominance") {
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& lam : partitions_of(n))
            for (const auto& mu : partitions_of(n)) {
                QPoly k = kostka_foulkes(lam, mu);
                CHECK(qpoly_eval_one(k) == (long)kostka_number(lam, mu));
                if (!k.empty()) CHECK(dominates(lam, mu));
            }
}

TEST_CASE("charge never exceeds the fibre dimension") {
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& lam : partitions_of(n))
            for (const auto& mu : partitions_of(n)) {
                QPoly k = kostka_foulkes(lam, mu);
                CHECK(k.size() <= springer_fibre_dim(mu) + 1);
            }
}

TEST_CASE("graded character of a point") {
    SymFunPoly f = macdonald_value(Partition{4}, 4);
    REQUIRE(f.terms.size() == 1);
    CHECK(f.terms[0].first == Partition{4});
    CHECK(f.terms[0].second == QPoly{1});
}

TEST_CASE("graded character anchors") {
    for (std::size_t n = 1; n <= 5; ++n)
        for (const auto& mu : partitions_of(n)) {
            SymFunPoly f = macdonald_value(mu, n);
            std::size_t b = springer_fibre_dim(mu);
            for (const auto& [lam, poly] : f.terms) {
                // q = 1 recovers the tableau count
                CHECK(qpoly_eval_one(poly) == (long)kostka_number(lam, mu));
                // degree-zero coefficient: the trivial class sits at the bottom
                CHECK((poly.empty() ? 0 : poly[0]) == (lam == Partition{n} ? 1 : 0));
                // top degree carries the class of mu alone
                long top = poly.size() == b + 1 ? poly[b] : 0;
                CHECK(top == (lam == mu ? 1 : 0));
            }
        }
}

TEST_CASE("full flag fibre keeps the sign class at the top") {
    SymFunPoly f = macdonald_value(Partition{1, 1, 1}, 3);
    bool found = false;
    for (const auto& [lam, poly] : f.terms)
        if (lam == Partition{1, 1, 1}) {
            found = true;
            CHECK(poly == QPoly{0, 0, 0, 1});  // q^{b}, b = 3
        }
    CHECK(found);
}
