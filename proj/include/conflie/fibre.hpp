#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conflie/subspace.hpp"

namespace conflie {

// d labeled distinct points, optionally with exact rational coordinates.
struct Configuration {
    std::vector<std::string> labels;
    std::optional<std::vector<Vec>> coords;

    std::size_t size() const { return labels.size(); }
    void validate() const;  // distinct labels; coords same length & distinct
};

// A function on the configuration: one value per point (delta basis).
using FnVec = Vec;

Scalar fn_trace(const FnVec& f);
FnVec fn_mult(const FnVec& f, const FnVec& g);  // pointwise; config_mismatch on length
FnVec ones(std::size_t d);

// Trace pairing q(f,g) = sum_z f(z) g(z); identity gram in the delta basis.
struct TraceData {
    BilinearForm form;
    explicit TraceData(std::size_t d) : form(BilinearForm::standard(d)) {}
};

// A distinguished subspace of functions containing the constants, of
// dimension r+1 with r >= 1.
struct Panel {
    Configuration config;
    Subspace basis;

    Panel(Configuration cfg, Subspace b);
    std::size_t degree() const { return config.size(); }
    std::size_t dim() const { return basis.dim(); }
    std::size_t r() const { return basis.dim() - 1; }
};

// Panel of the functions section_j / sigma' on the points; row sigma_prime_row
// must be nowhere zero. Output contains 1 automatically.
Panel panel_from_pencil(const Configuration& cfg, const Mat& section_values,
                        std::size_t sigma_prime_row);

// Moves to the panel {h/(1+s) : h in p}; s must lie in p and 1+s must be
// nowhere zero.
Panel rescale_panel(const Panel& p, const FnVec& s);

// Projective coordinates of each point under a deterministic basis of the
// panel whose first vector is 1. Result is (r+1) x d; column j = coords of
// point j.
Mat kappa_embed(const Panel& p);

}  // namespace conflie
