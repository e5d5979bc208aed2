#pragma once

#include "conflie/liealg.hpp"

namespace conflie {

// One-stop fibre analysis: filtration, reduction, decomposition, the two
// computation models, Lie data and Torelli kernels.
struct Analysis {
    Filtration filt;
    Reduction red;
    GradedModel graded;
    Model ambient;
    Model reduced;
    LieAlgebra algebra;
    LieReport lie;
    TorelliReport torelli;
};

inline Analysis analyze(const Panel& p) {
    Analysis a;
    a.filt = compute_filtration(p);
    a.red = reduce(p, a.filt);
    a.graded = orthogonal_decomposition(p, a.filt);
    a.ambient = make_ambient_model(p, a.filt, a.graded);
    a.reduced = make_reduced_model(p, a.filt, a.graded, a.red);
    a.algebra = generate_lie_algebra(a.reduced);
    a.lie = center_and_blocks(a.algebra, a.reduced);
    a.torelli = torelli_index(a.reduced);
    return a;
}

}  // namespace conflie
