#pragma once

#include <string>
#include <vector>

#include "conflie/nilorbit.hpp"
#include "conflie/polynomial.hpp"

namespace conflie {

// Polynomials in named coordinates together with the exact values of every
// coordinate at every point, and the (all-zero) per-point evaluations.
struct EquationSet {
    std::vector<std::string> vars;
    std::vector<Poly> polys;
    Mat assignment;  // vars.size() x n_points
    std::vector<Vec> certificate;
    std::string note;

    std::size_t n_points() const { return assignment.cols(); }
};

// Recomputes the certificate; throws invariant_violation on any nonzero
// evaluation.
void certify(EquationSet& es);

// Exact re-evaluation without touching the stored certificate.
bool verify(const EquationSet& es);

// Basis t^m y^{(s)}_{qp} adapted to both the filtration and the chain
// structure of the degree-raising operator of t. Heads are chosen by the
// deterministic graded complement; each head carries a recorded polynomial
// lifting of degree <= p-q+1 in the degree-zero heads.
struct Sl2Basis {
    Model model;
    FnVec t;
    Poly t_poly;  // t written in the Y variables

    struct Head {
        std::size_t q, p, s;  // chain of length q+1 ending in H^p, s-th of its kind
        FnVec value;          // lies in H^{p-q}
        Poly lifting;
        std::vector<FnVec> powers;  // t^m * value for m = 0..q
    };
    std::vector<Head> heads;
    std::vector<std::string> y_vars;          // one per head with q == p
    std::vector<std::size_t> grade0_heads;    // indices into heads, parallel to y_vars

    struct BasisElem {
        std::size_t head;
        std::size_t m;
    };
    // Basis of H_{-(k+1)}: elements with m + p - q <= k.
    std::vector<BasisElem> adapted_basis(std::size_t k) const;
    FnVec elem_value(const BasisElem& e) const { return heads[e.head].powers[e.m]; }
    Poly elem_poly(const BasisElem& e) const;  // T^m * lifting
};

Sl2Basis sl2_basis(const FnVec& t, const Model& reduced);

struct MonomialRelations {
    EquationSet affine;       // F(m) = Y^m - sum a T^k P^{(s)}_{qp}
    EquationSet homogeneous;  // H(m), extra variable appended
};

MonomialRelations monomial_relations(const Sl2Basis& b, unsigned degree_cap);

// mu_{qp} independent homogeneous forms of degree p+2 vanishing on the
// points, built from t^{q+1} y^{(s)}_{qp} landing in H_{-(p+1)}.
EquationSet rank_bounded_relations(const Sl2Basis& b, std::size_t q, std::size_t p);

// Quadrics x_i x_j - x_1 (linear) through the points, via the dual basis of
// the first spanning points; every emitted quadric has rank <= 4.
EquationSet rank4_quadrics(const Model& reduced);

struct Mu00Split {
    FnVec t;
    std::vector<std::size_t> z1, z2;  // zero set of t and its complement
    std::size_t mu00 = 0;
    std::size_t vanish_on_z1 = 0;  // panel functions vanishing on z1 (= 1, spanned by t)
    std::size_t vanish_on_z2 = 0;  // panel functions vanishing on z2 (= mu00 - 1)
};

Mu00Split mu00_split(const Model& reduced);

// Named coordinates X_{i,m} with values t(z)^m f_i(z); count = sum of the
// truncated parts.
struct AdjointCoords {
    Truncation trunc;
    std::vector<std::string> names;
    std::vector<std::pair<std::size_t, std::size_t>> index;  // (row, m) per name
    Mat values;                                              // names x points
};

AdjointCoords adjoint_coordinates(const FnVec& t, const Model& ambient);

// 2x2 minors of the per-row catalecticant matrices; empty when every
// truncated part is 1.
EquationSet scroll_equations(const AdjointCoords& ac);

}  // namespace conflie
