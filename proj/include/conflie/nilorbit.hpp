#pragma once

#include <cstdint>
#include <vector>

#include "conflie/liealg.hpp"

namespace conflie {

// Jordan type of the degree-raising operator refined by the summand holding
// each chain head: mu[q][p] = number of size-(q+1) chains ending in H^p.
struct MultiplicityMatrix {
    std::size_t levels = 0;
    std::vector<std::vector<std::size_t>> mu;  // levels x levels, upper triangular

    std::size_t column_sum(std::size_t p) const;
    bool operator==(const MultiplicityMatrix&) const = default;
};

struct GradedPartition {
    Partition lambda;
    std::vector<Partition> per_level;  // lambda^{(p)} = (1^{mu0p} ... (p+1)^{mupp})
    bool operator==(const GradedPartition&) const = default;
};

GradedPartition graded_partition_of(const MultiplicityMatrix& m);

struct GradedJordan {
    GradedPartition partition;
    MultiplicityMatrix matrix;
};

// mu_{qp} = dim[(ker N /\ im N^q /\ H^p) / (ker N /\ im N^{q+1} /\ H^p)]
// with N the degree-raising part of multiplication by t.
GradedJordan graded_jordan_plus(const FnVec& t, const Model& m);

// Same head-counting with the degree-lowering part; entry (q,p) counts
// chains of size l-q ending in H^p, arranged lower-triangularly.
struct MinusJordan {
    Partition lambda;
    std::vector<std::vector<std::size_t>> mu_prime;  // levels x levels, lower triangular
};

MinusJordan graded_jordan_minus(const FnVec& t, const Model& m);

// mu'_{qp} = mu_{(l-1-q)(l-1-q+p)}.
bool reflection_identity_holds(const MultiplicityMatrix& plus,
                               const std::vector<std::vector<std::size_t>>& minus);

// Explicit graded Jordan chains with homogeneous heads picked by a
// deterministic RREF complement. degree = +1 or -1.
struct Chain {
    FnVec head;
    std::size_t head_level = 0;
    std::size_t length = 0;
    std::vector<FnVec> vectors;  // head, N head, ..., N^{length-1} head
};

std::vector<Chain> graded_jordan_chains(const Mat& n_op, const Model& m, int degree);

// Bigraded dimension table derived from chain combinatorics: a chain of
// length q+1 with top in H^p occupies levels p-q..p with shifted weights
// l-1-q, l-1-q+2, ..., l-1+q.
struct Bigrading {
    std::size_t levels = 0;                          // l
    std::vector<std::vector<std::size_t>> dim_pn;    // [level p][shifted weight n]
    std::vector<std::size_t> weight_dims;            // dim V(n), n = 0..2(l-1)
    std::vector<std::size_t> filtration_ranks;       // dim W^n = sum_{m>=n} dim V(m)
};

Bigrading bigrading(const FnVec& t, const Model& m);

// Shifted weight filtration of a nilpotent operator, independent of any
// completion: W^n = sum_j ker N^{j+1} /\ im N^{j+n-(l-1)} for the raising
// case; the lowering case uses the mirrored exponent. Indexed n = 0..2l-1,
// decreasing for +1, increasing for -1.
std::vector<Subspace> weight_filtration(const Mat& n_op, std::size_t levels, int degree);

// W'_n = (W^{n+1})^perp with respect to the model's form.
bool two_filtration_orthogonality(const FnVec& t, const Model& m);

// Rows of the lowering-operator Jordan type with the level-0 boxes removed.
struct Truncation {
    Partition lambda;      // type of the lowering operator on the ambient model
    Partition lambda_hat;  // level-0 boxes removed, empty rows dropped
    std::vector<Chain> chains;       // ambient chains, in row order of lambda
    std::vector<std::size_t> kept;   // for each kept row: index into chains
    std::size_t boxes_removed = 0;
};

Truncation truncate(const FnVec& t, const Model& ambient);

struct StrataSample {
    MultiplicityMatrix matrix;
    GradedPartition partition;
    std::size_t count = 0;
};

struct StrataReport {
    std::vector<StrataSample> observed;
    std::size_t generic_index = 0;  // dominance-maximal observed partition
    bool ambiguous = false;         // not attained by at least half the samples
    Partition generic_forgotten;    // forgetful image of the generic graded partition
    std::vector<Partition> forgotten_set;  // distinct forgetful images observed
};

// M_s = sum_{p>=s} mu_{sp}: the partition with the grading forgotten.
Partition forget_grading(const MultiplicityMatrix& m);

StrataReport sample_strata(const Model& reduced, std::size_t n_samples, std::uint64_t seed);

struct LoopData {
    std::vector<long> traces;     // graded trace of the semisimple element per level
    std::vector<long> exponents;  // a_p = tr(h_{p+1}) - tr(h_p), p = 0..l-2
};

// Graded traces from chain combinatorics; a chain of length q+1 with top at
// level P carries weight 2(p-P)+q at level p.
LoopData loop_exponents(const FnVec& t, const Model& m);

}  // namespace conflie
