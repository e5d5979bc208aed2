#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conflie/filtration.hpp"

namespace conflie {

// Multiplication by t split into graded parts of degree -1, 0, +1 relative
// to the model's summands. For t in the panel these three parts recover the
// full operator; q-adjointness pairs plus with minus.
struct TriangularOp {
    Mat full, minus, zero, plus;
};

TriangularOp triangular(const FnVec& t, const Model& m);

// Shorthands for the graded parts of multiplication by t.
Mat op_plus(const FnVec& t, const Model& m);
Mat op_minus(const FnVec& t, const Model& m);
Mat op_zero(const FnVec& t, const Model& m);

// Lie subalgebra of End(Q^n) generated by the graded parts of
// multiplication by a basis of the panel, as a span of flattened matrices.
struct LieAlgebra {
    std::size_t n = 0;
    std::vector<Mat> basis;
    std::size_t dim() const { return basis.size(); }
};

LieAlgebra generate_lie_algebra(const Model& reduced);

enum class FibreClass { QuasiAbelian, Simple, Mixed };

std::string to_string(FibreClass c);

struct LieReport {
    std::size_t algebra_dim = 0;
    std::size_t center_dim = 0;
    std::vector<std::vector<std::size_t>> blocks;  // indices into the model's points
    std::vector<std::size_t> block_dims;           // weight-space dimension per block
    FibreClass classification = FibreClass::Simple;
    std::size_t lambda_one_count = 0;   // blocks with weight space of dim 1
    std::size_t lambda_big_count = 0;   // blocks with weight space of dim >= 2
};

// Center as the null space of the stacked adjoint action of the generators.
std::vector<Mat> center(const LieAlgebra& alg, const Model& reduced);

// Weight blocks of the center action; verifies dim = sum of squared block
// sizes and that central elements are diagonal in the class basis.
LieReport center_and_blocks(const LieAlgebra& alg, const Model& reduced);

FibreClass classify(const LieReport& report, const Model& reduced);

// Blocks pulled back from the reduced model to the original points.
std::vector<std::vector<std::size_t>> pull_back_blocks(
    const std::vector<std::vector<std::size_t>>& blocks, const Reduction& red);

struct TorelliReport {
    std::vector<std::size_t> kernel_dims;  // ker d+_p for p = 0..l-2
    std::optional<std::size_t> tau;        // least p with nonzero kernel
    bool strong = false;                   // all kernels vanish (l >= 2)
    std::size_t total_kernel_dim = 0;      // ker of the full degree-raising map
};

// Kernels of t -> D+(t)|_{H^p} on the panel modulo constants.
TorelliReport torelli_index(const Model& reduced);

}  // namespace conflie
