#pragma once

#include <cstddef>
#include <vector>

#include "conflie/partition.hpp"

namespace conflie {

// Integer polynomial in q, coefficient of q^i at index i.
using QPoly = std::vector<long>;

QPoly qpoly_trim(QPoly p);
long qpoly_eval_one(const QPoly& p);  // value at q = 1

// n^2 - sum (2k-1) mu_k.
std::size_t orbit_dim(const Partition& mu, std::size_t n);

// b_mu = sum (k-1) mu_k.
std::size_t springer_fibre_dim(const Partition& mu);

// Semistandard tableaux of shape lambda and content mu, rows as vectors of
// entries (1-based letters).
std::vector<std::vector<std::vector<std::size_t>>> ssyt(const Partition& lambda,
                                                        const Partition& mu);

std::size_t kostka_number(const Partition& lambda, const Partition& mu);

// Charge generating function over the tableaux: K(1) is the Kostka number,
// K vanishes unless lambda dominates mu, K_{lambda,lambda} = 1.
QPoly kostka_foulkes(const Partition& lambda, const Partition& mu);

// Formal sum of Schur functions with q-polynomial coefficients.
struct SymFunPoly {
    std::size_t n = 0;
    std::vector<std::pair<Partition, QPoly>> terms;
};

// Graded character of the cohomology of the Springer fibre over the orbit of
// mu: coefficient of s_lambda is q^{b_mu} K_{lambda,mu}(1/q), with q^i
// tracking cohomological degree 2i. At q=1 the multiplicities are Kostka
// numbers; the top degree b_mu carries the single class of mu.
SymFunPoly macdonald_value(const Partition& mu, std::size_t n);

}  // namespace conflie
