#pragma once

#include <vector>

#include "conflie/fibre.hpp"

namespace conflie {

// Multiplicative filtration H_{-1} c H_{-2} c ... c H_{-l}; strictly
// increasing until it stabilizes at step l. hilbert = (h^0,...,h^{l-1},h^l)
// with h^l = d - dim H_{-l}; the entries sum to d.
struct Filtration {
    std::vector<Subspace> steps;        // steps[i] = H_{-(i+1)}, i = 0..l-1
    std::vector<std::size_t> hilbert;   // length l+1

    std::size_t length() const { return steps.size(); }
    const Subspace& top() const { return steps.back(); }  // H_{-l}
};

Filtration compute_filtration(const Panel& p);

// Partition of the points into classes not separated by H_{-l}; classes
// ordered by least point index. d_prime = dim H_{-l}.
struct Reduction {
    std::vector<std::vector<std::size_t>> blocks;
    std::size_t d_prime() const { return blocks.size(); }
};

Reduction reduce(const Panel& p, const Filtration& f);

// Orthogonal summands H^0..H^l with H_{-i} = H^0 + ... + H^{i-1}; the last
// summand may be zero. f_steps[i] = F^i = H^i + ... + H^l.
struct GradedModel {
    std::vector<Subspace> summands;
    std::vector<Subspace> f_steps;
    std::size_t levels() const { return summands.size(); }  // l+1
};

// Splits a flag 0 c V_1 c ... c V_k c Q^n into q-orthogonal graded pieces
// H^{i} = V_{i+1} /\ (V_i)^perp, plus the final complement (V_k)^perp.
// Throws degenerate_restriction(i) when q degenerates on V_i. This is the
// general engine; with the trace form over Q every restriction is positive
// definite and the error cannot fire.
GradedModel graded_split(const std::vector<Subspace>& flag, const BilinearForm& q);

GradedModel orthogonal_decomposition(const Panel& p, const Filtration& f);

// H_{-i} of the rescaled panel equals (1+s)^{-i} H_{-i} of the original and
// the top step is unchanged.
bool rescaling_law_check(const Panel& p, const FnVec& s, std::size_t i);

// Self-contained computation space shared by the Lie-algebra, Jordan and
// equation layers: a configuration with point weights (the trace form is
// diag(weights)), a panel, its filtration and graded summands, and the
// q-orthogonal projections onto the summands.
//
// The ambient model of a fibre has all weights 1 and carries H^0..H^l.
// The reduced model lives on the classes of the reduction, with weights =
// class sizes, and carries H^0..H^{l-1} (which then span everything).
struct Model {
    std::size_t n = 0;
    Vec weights;
    BilinearForm form;
    Subspace panel;
    std::vector<Subspace> filtration;    // H_{-1}..H_{-l} inside Q^n
    std::vector<Subspace> summands;      // graded pieces, dims sum to n
    std::vector<Mat> projections;        // q-orthogonal projection per summand

    Model() : form(Mat(0, 0)), panel(0) {}
    std::size_t levels() const { return summands.size(); }
    std::size_t filtration_length() const { return filtration.size(); }

    // Index of the summand containing v, if v is homogeneous.
    Mat multiplication(const FnVec& t) const { return Mat::diagonal(t); }
    FnVec project(std::size_t level, const FnVec& v) const { return projections[level].apply(v); }
};

Model make_ambient_model(const Panel& p, const Filtration& f, const GradedModel& g);

// Block values of a function constant on the classes.
FnVec restrict_to_blocks(const FnVec& f, const Reduction& red);

Model make_reduced_model(const Panel& p, const Filtration& f, const GradedModel& g,
                         const Reduction& red);

}  // namespace conflie
