#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "conflie/rational.hpp"

namespace conflie {

// Multivariate polynomial over a fixed variable list held by the caller.
// Terms are keyed by exponent vectors; zero coefficients are dropped.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::size_t n_vars) : n_(n_vars) {}

    static Poly constant(std::size_t n_vars, const Scalar& c);
    static Poly variable(std::size_t n_vars, std::size_t index);

    std::size_t n_vars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<unsigned>, Scalar>& terms() const { return terms_; }

    void add_term(const std::vector<unsigned>& exps, const Scalar& c);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Scalar& c) const;
    Poly pow(unsigned k) const;

    unsigned total_degree() const;
    bool is_homogeneous(unsigned degree) const;

    Scalar eval(const Vec& point) const;

    // Pads every term with the extra variable (appended last) up to `degree`.
    Poly homogenized(unsigned degree) const;

    // Coefficient vector over all exponent vectors of total degree exactly d
    // in graded-lex order; used for independence ranks.
    Vec coefficients_of_degree(unsigned d) const;

    bool operator==(const Poly&) const = default;

private:
    std::size_t n_ = 0;
    std::map<std::vector<unsigned>, Scalar> terms_;
};

// All exponent vectors over n variables with total degree exactly d,
// graded-lex deterministic order.
std::vector<std::vector<unsigned>> monomials_of_degree(std::size_t n, unsigned d);

// Total degree at most d (degrees 0..d concatenated).
std::vector<std::vector<unsigned>> monomials_up_to(std::size_t n, unsigned d);

}  // namespace conflie
