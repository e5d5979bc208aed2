#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conflie/analysis.hpp"
#include "conflie/generators.hpp"
#include "conflie/nilorbit.hpp"

using namespace conflie;

namespace {

Configuration points(std::size_t d) {
    Configuration cfg;
    for (std::size_t i = 0; i < d; ++i) cfg.labels.push_back("z" + std::to_string(i + 1));
    return cfg;
}

Vec v(std::initializer_list<long> xs) {
    Vec out;
    for (long x : xs) out.push_back(Scalar(x));
    return out;
}

Panel chain(std::size_t d) {
    Vec t(d);
    for (std::size_t i = 0; i < d; ++i) t[i] = Scalar((long)i);
    return Panel(points(d), Subspace::span_of({ones(d), t}, d));
}

struct Models {
    Model reduced, ambient;
};

Models models_of(const Panel& p) {
    Filtration f = compute_filtration(p);
    GradedModel g = orthogonal_decomposition(p, f);
    Reduction red = reduce(p, f);
    return {make_reduced_model(p, f, g, red), make_ambient_model(p, f, g)};
}

FnVec random_panel_elem(const Model& m, Rng& rng) {
    Subspace constants = Subspace::span_of({FnVec(m.n, Scalar(1))}, m.n);
    while (true) {
        FnVec t(m.n, Scalar(0));
        for (std::size_t i = 0; i < m.panel.dim(); ++i) {
            long c = rng.integer(-9, 9);
            if (c == 0) continue;
            FnVec b = m.panel.basis_vector(i);
            for (std::size_t z = 0; z < m.n; ++z) t[z] += Scalar(c) * b[z];
        }
        if (!constants.contains(t)) return t;
    }
}

}  // namespace

TEST_CASE("chain panel graded Jordan data") {
    Models mm = models_of(chain(4));
    FnVec t = v({0, 1, 2, 3});
    GradedJordan gj = graded_jordan_plus(t, mm.reduced);
    CHECK(gj.partition.lambda == Partition{3, 1});
    CHECK(gj.partition.per_level[0] == Partition{1});
    CHECK(gj.partition.per_level[1] == Partition{});
    CHECK(gj.partition.per_level[2] == Partition{3});
    CHECK(gj.matrix.mu[0][0] == 1);
    CHECK(gj.matrix.mu[2][2] == 1);
    CHECK(gj.matrix.column_sum(0) == 1);
    CHECK(gj.matrix.column_sum(2) == 1);
}

TEST_CASE("the unit gives the trivial Jordan type") {
    Models mm = models_of(chain(4));
    GradedJordan gj = graded_jordan_plus(ones(4), mm.reduced);
    CHECK(gj.partition.lambda == Partition{1, 1, 1, 1});
    for (std::size_t p = 0; p < 3; ++p)
        CHECK(gj.matrix.mu[0][p] == mm.reduced.summands[p].dim());
}

TEST_CASE("column sums are bounded by the summand dimensions") {
    Rng rng(23);
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        Instance inst = seed % 2 ? gen_general(7, 2, seed) : gen_rnc(3, seed);
        Models mm = models_of(inst.panel);
        FnVec t = random_panel_elem(mm.reduced, rng);
        GradedJordan gj = graded_jordan_plus(t, mm.reduced);
        for (std::size_t p = 0; p < gj.matrix.levels; ++p)
            CHECK(gj.matrix.column_sum(p) <= mm.reduced.summands[p].dim());
    }
}

TEST_CASE("hilbert vector identity from the per-level partitions") {
    Rng rng(29);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Instance inst = seed % 2 ? gen_general(6 + seed % 4, 1 + seed % 3, seed)
                                 : gen_chain(5 + seed % 4, seed);
        Models mm = models_of(inst.panel);
        FnVec t = random_panel_elem(mm.reduced, rng);
        GradedJordan gj = graded_jordan_plus(t, mm.reduced);
        const std::size_t L = gj.matrix.levels;
        for (std::size_t p = 0; p < L; ++p) {
            std::size_t acc = 0;
            for (std::size_t tt = p; tt < L; ++tt) {
                Partition conj = conjugate(gj.partition.per_level[tt]);
                std::size_t idx = tt - p;  // (t-p+1)-st part, zero-based
                if (idx < conj.size()) acc += conj[idx];
            }
            CHECK(acc == mm.reduced.summands[p].dim());
        }
    }
}

TEST_CASE("minus data and the reflection identity on the chain panel") {
    Models mm = models_of(chain(4));
    FnVec t = v({0, 1, 2, 3});
    GradedJordan plus = graded_jordan_plus(t, mm.reduced);
    MinusJordan minus = graded_jordan_minus(t, mm.reduced);
    CHECK(minus.lambda == Partition{3, 1});
    CHECK(minus.mu_prime[2][0] == plus.matrix.mu[0][0]);  // the singleton
    CHECK(minus.mu_prime[0][0] == plus.matrix.mu[2][2]);  // the long chain
    CHECK(reflection_identity_holds(plus.matrix, minus.mu_prime));
}

TEST_CASE("reflection identity on random instances") {
    Rng rng(31);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Instance inst = seed % 2 ? gen_general(6 + seed % 3, 1 + seed % 3, seed)
                                 : gen_rnc(3 + seed % 2, seed);
        Models mm = models_of(inst.panel);
        FnVec t = random_panel_elem(mm.reduced, rng);
        GradedJordan plus = graded_jordan_plus(t, mm.reduced);
        MinusJordan minus = graded_jordan_minus(t, mm.reduced);
        CHECK(plus.partition.lambda == minus.lambda);
        CHECK(reflection_identity_holds(plus.matrix, minus.mu_prime));
    }
}

TEST_CASE("chain panel bigrading table") {
    Models mm = models_of(chain(4));
    Bigrading bg = bigrading(v({0, 1, 2, 3}), mm.reduced);
    CHECK(bg.weight_dims == std::vector<std::size_t>{1, 0, 2, 0, 1});
    // long chain on the diagonal, singleton at (0, l-1)
    CHECK(bg.dim_pn[0][0] == 1);
    CHECK(bg.dim_pn[1][2] == 1);
    CHECK(bg.dim_pn[2][4] == 1);
    CHECK(bg.dim_pn[0][2] == 1);
}

TEST_CASE("the unit concentrates all weight in the middle") {
    Models mm = models_of(chain(4));
    Bigrading bg = bigrading(ones(4), mm.reduced);
    for (std::size_t n = 0; n < bg.weight_dims.size(); ++n)
        CHECK(bg.weight_dims[n] == (n == 2 ? 4 : 0));
}

TEST_CASE("opposite weight levels match and pair with the raising power") {
    Rng rng(37);
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        Instance inst = gen_general(6 + seed % 3, 1 + seed % 2, seed);
        Models mm = models_of(inst.panel);
        FnVec t = random_panel_elem(mm.reduced, rng);
        Bigrading bg = bigrading(t, mm.reduced);
        const std::size_t L = bg.levels;
        Mat n_op = op_plus(t, mm.reduced);
        std::vector<Subspace> w = weight_filtration(n_op, L, +1);
        Mat pw = Mat::identity(mm.reduced.n);
        for (std::size_t k = 0; k < L; ++k) {
            CHECK(bg.weight_dims[L - 1 - k] == bg.weight_dims[L - 1 + k]);
            // the k-th raising power carries the weight piece across the middle
            CHECK(image(pw, w[L - 1 - k]) == w[L - 1 + k]);
            pw = pw * n_op;
        }
    }
}

TEST_CASE("two weight filtrations are orthogonal complements") {
    Rng rng(41);
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        Instance inst = seed % 2 ? gen_general(6, 2, seed) : gen_rnc(3, seed);
        Models mm = models_of(inst.panel);
        FnVec t = random_panel_elem(mm.reduced, rng);
        CHECK(two_filtration_orthogonality(t, mm.reduced));
    }
}

TEST_CASE("truncation of small chain panels") {
    {
        Models mm = models_of(chain(5));
        Truncation tr = truncate(v({0, 1, 2, 3, 4}), mm.ambient);
        CHECK(tr.lambda == Partition{4, 1});
        CHECK(tr.lambda_hat == Partition{3});
        CHECK(tr.boxes_removed == 2);
    }
    {
        Models mm = models_of(chain(4));
        Truncation tr = truncate(v({0, 1, 2, 3}), mm.ambient);
        CHECK(tr.lambda == Partition{3, 1});
        CHECK(tr.lambda_hat == Partition{2});
        CHECK(tr.kept.size() == 1);  // s' = s - mu00 = 2 - 1
    }
}

TEST_CASE("truncation weight identity on random instances") {
    Rng rng(43);
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        Instance inst = seed % 2 ? gen_general(6 + seed % 4, 1 + seed % 3, seed)
                                 : gen_rnc(3 + seed % 2, seed);
        Models mm = models_of(inst.panel);
        FnVec t = random_panel_elem(mm.ambient, rng);
        Truncation tr = truncate(t, mm.ambient);
        CHECK(weight(tr.lambda) == inst.panel.degree());
        CHECK(weight(tr.lambda_hat) == inst.panel.degree() - inst.panel.r() - 1);
        // s' = s - mu00 against the raising data on the same model
        GradedJordan plus = graded_jordan_plus(t, mm.ambient);
        CHECK(tr.lambda_hat.size() == tr.lambda.size() - plus.matrix.mu[0][0]);
    }
}

TEST_CASE("strata sampling on a chain panel sees a single stratum") {
    Models mm = models_of(chain(4));
    StrataReport rep = sample_strata(mm.reduced, 20, 7);
    REQUIRE(rep.observed.size() == 1);
    CHECK(rep.observed[0].partition.lambda == Partition{3, 1});
    CHECK_FALSE(rep.ambiguous);
    CHECK(rep.generic_forgotten == Partition{3, 1});
}

TEST_CASE("strata sampling on a quasi-abelian panel is trivial") {
    Instance inst = gen_blocks(6, 3, 11);
    Models mm = models_of(inst.panel);
    StrataReport rep = sample_strata(mm.reduced, 15, 3);
    REQUIRE(rep.observed.size() == 1);
    CHECK(rep.observed[0].partition.lambda == Partition{1, 1, 1});
}

TEST_CASE("forgetful image preserves the weight") {
    Rng rng(47);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        Instance inst = gen_general(7, 2, seed);
        Models mm = models_of(inst.panel);
        StrataReport rep = sample_strata(mm.reduced, 10, seed);
        CHECK(weight(rep.generic_forgotten) == mm.reduced.n);
        for (const auto& s : rep.observed)
            CHECK(forget_grading(s.matrix) == s.partition.lambda);
    }
}

TEST_CASE("chain panel loop exponents") {
    Models mm = models_of(chain(4));
    LoopData ld = loop_exponents(v({0, 1, 2, 3}), mm.reduced);
    CHECK(ld.traces == std::vector<long>{-2, 0, 2});
    CHECK(ld.exponents == std::vector<long>{2, 2});

    LoopData unit = loop_exponents(ones(4), mm.reduced);
    for (long a : unit.exponents) CHECK(a == 0);
}

TEST_CASE("loop exponent bound and zero total trace at random") {
    Rng rng(53);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Instance inst = seed % 2 ? gen_general(6 + seed % 4, 1 + seed % 3, seed)
                                 : gen_chain(5 + seed % 5, seed);
        Models mm = models_of(inst.panel);
        FnVec t = random_panel_elem(mm.reduced, rng);
        LoopData ld = loop_exponents(t, mm.reduced);  // bound asserted inside
        long total = 0;
        for (long x : ld.traces) total += x;
        CHECK(total == 0);
        CHECK(ld.exponents.size() + 1 == mm.reduced.levels());
    }
}
