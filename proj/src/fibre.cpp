#include "conflie/fibre.hpp"

#include <set>

#include "conflie/errors.hpp"

namespace conflie {

void Configuration::validate() const {
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size()) throw precondition_error("duplicate point labels");
    if (coords) {
        if (coords->size() != labels.size())
            throw precondition_error("coords count != point count");
        std::size_t len = coords->empty() ? 0 : (*coords)[0].size();
        for (const auto& c : *coords)
            if (c.size() != len) throw precondition_error("ragged coordinate vectors");
        for (std::size_t i = 0; i < coords->size(); ++i)
            for (std::size_t j = i + 1; j < coords->size(); ++j)
                if ((*coords)[i] == (*coords)[j])
                    throw precondition_error("coincident points " + labels[i] + ", " + labels[j]);
    }
}

Scalar fn_trace(const FnVec& f) {
    Scalar s(0);
    for (const auto& x : f) s += x;
    return s;
}

FnVec fn_mult(const FnVec& f, const FnVec& g) {
    if (f.size() != g.size()) throw config_mismatch("pointwise product of different configurations");
    FnVec h(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) h[i] = f[i] * g[i];
    return h;
}

FnVec ones(std::size_t d) { return FnVec(d, Scalar(1)); }

Panel::Panel(Configuration cfg, Subspace b) : config(std::move(cfg)), basis(std::move(b)) {
    config.validate();
    if (basis.ambient_dim() != config.size())
        throw dimension_mismatch("panel ambient != number of points");
    if (!basis.contains(ones(config.size())))
        throw precondition_error("panel does not contain the constants");
    if (basis.dim() < 2) throw precondition_error("panel dimension must be at least 2 (r >= 1)");
}

Panel panel_from_pencil(const Configuration& cfg, const Mat& section_values,
                        std::size_t sigma_prime_row) {
    const std::size_t d = cfg.size();
    if (section_values.cols() != d) throw dimension_mismatch("section values per point");
    if (sigma_prime_row >= section_values.rows())
        throw precondition_error("sigma_prime row out of range");
    for (std::size_t z = 0; z < d; ++z)
        if (section_values.at(sigma_prime_row, z) == 0) throw sigma_vanishes(z);
    Mat rows(section_values.rows(), d);
    for (std::size_t i = 0; i < section_values.rows(); ++i)
        for (std::size_t z = 0; z < d; ++z)
            rows.at(i, z) = section_values.at(i, z) / section_values.at(sigma_prime_row, z);
    return Panel(cfg, Subspace::from_rows(rows));
}

Panel rescale_panel(const Panel& p, const FnVec& s) {
    if (s.size() != p.degree()) throw dimension_mismatch("rescale: wrong length");
    if (!p.basis.contains(s)) throw precondition_error("rescale: s not in the panel");
    for (std::size_t z = 0; z < s.size(); ++z)
        if (s[z] == Scalar(-1)) throw unit_vanishes(z);
    Mat rows = p.basis.basis();
    for (std::size_t i = 0; i < rows.rows(); ++i)
        for (std::size_t z = 0; z < rows.cols(); ++z)
            rows.at(i, z) /= Scalar(1) + s[z];
    return Panel(p.config, Subspace::from_rows(rows));
}

Mat kappa_embed(const Panel& p) {
    const std::size_t d = p.degree();
    // exchange the first basis row carrying the constants for 1 itself
    Vec coeff = p.basis.coordinates_of(ones(d));
    std::size_t drop = 0;
    while (coeff[drop] == 0) ++drop;
    std::vector<FnVec> rows{ones(d)};
    for (std::size_t i = 0; i < p.basis.dim(); ++i)
        if (i != drop) rows.push_back(p.basis.basis_vector(i));
    if (Subspace::span_of(rows, d) != p.basis)
        throw invariant_violation("kappa basis exchange failed");
    return Mat::from_rows(rows, d);
}

}  // namespace conflie
