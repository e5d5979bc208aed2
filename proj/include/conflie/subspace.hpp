#pragma once

#include <cstddef>
#include <vector>

#include "conflie/matrix.hpp"
#include "conflie/partition.hpp"

namespace conflie {

// Linear subspace of Q^n, stored as an RREF basis so equality of subspaces
// is equality of representations.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

    // Row span of `rows` (any spanning set).
    static Subspace from_rows(const Mat& rows);
    static Subspace full(std::size_t ambient_dim);
    static Subspace span_of(const std::vector<Vec>& vectors, std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Mat& basis() const { return basis_; }
    Vec basis_vector(std::size_t i) const { return basis_.row(i); }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& o) const;
    bool operator==(const Subspace& o) const = default;

    // Coordinates of v in the RREF basis; invariant_violation if v is outside.
    Vec coordinates_of(const Vec& v) const;

private:
    std::size_t ambient_;
    Mat basis_;
};

Subspace sum(const Subspace& a, const Subspace& b);

// Computed via the kernel of stacked dual constraints.
Subspace intersect(const Subspace& a, const Subspace& b);

// {op(v) : v in s}; op acts on column vectors.
Subspace image(const Mat& op, const Subspace& s);

Subspace kernel(const Mat& op);

struct BilinearForm {
    Mat gram;  // symmetric
    explicit BilinearForm(Mat g);
    static BilinearForm standard(std::size_t n) { return BilinearForm(Mat::identity(n)); }
    static BilinearForm diagonal(const Vec& w) { return BilinearForm(Mat::diagonal(w)); }
    Scalar eval(const Vec& a, const Vec& b) const;
    std::size_t dim() const { return gram.rows(); }
};

// {w : q(w, v) = 0 for all v in s}.
Subspace orth_complement(const Subspace& s, const BilinearForm& q);

// True iff q restricted to s has full rank.
bool restriction_nondegenerate(const Subspace& s, const BilinearForm& q);

// Jordan type of a nilpotent operator: with r_k = rank(n^k), the conjugate
// partition is (r_0 - r_1, r_1 - r_2, ...). Throws not_nilpotent.
Partition nilpotent_partition(const Mat& n);

// Integer vector proportional to v: denominators cleared, content divided
// out, leading coefficient positive.
Vec primitive_row(Vec v);

// Incrementally maintained span with exact reduction; used for closure
// computations where vectors arrive one at a time. Rows are kept primitive
// so entries stay small.
class SpanBuilder {
public:
    explicit SpanBuilder(std::size_t ambient) : ambient_(ambient) {}
    // Returns true if v enlarged the span.
    bool insert(Vec v);
    bool contains(Vec v) const;
    std::size_t dim() const { return rows_.size(); }
    Subspace to_subspace() const;

private:
    void reduce(Vec& v) const;
    std::size_t ambient_;
    std::vector<Vec> rows_;              // reduced primitive rows
    std::vector<std::size_t> lead_;      // leading column per row
};

}  // namespace conflie
