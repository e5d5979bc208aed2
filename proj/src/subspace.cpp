#include "conflie/subspace.hpp"

#include <algorithm>

#include "conflie/errors.hpp"

namespace conflie {

Subspace Subspace::from_rows(const Mat& rows) {
    Subspace s(rows.cols());
    s.basis_ = rref(rows).mat;
    return s;
}

Subspace Subspace::full(std::size_t n) { return from_rows(Mat::identity(n)); }

Subspace Subspace::span_of(const std::vector<Vec>& vectors, std::size_t ambient_dim) {
    return from_rows(Mat::from_rows(vectors, ambient_dim));
}

bool Subspace::contains(const Vec& v) const {
    if (v.size() != ambient_) throw dimension_mismatch("contains: ambient mismatch");
    Vec w = v;
    // basis_ is RREF; reduce w against it.
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        std::size_t lead = 0;
        while (lead < ambient_ && basis_.at(i, lead) == 0) ++lead;
        if (lead == ambient_) continue;
        if (w[lead] != 0) {
            Scalar f = w[lead];
            for (std::size_t j = 0; j < ambient_; ++j) w[j] -= f * basis_.at(i, j);
        }
    }
    return is_zero_vec(w);
}

bool Subspace::contains(const Subspace& o) const {
    for (std::size_t i = 0; i < o.dim(); ++i)
        if (!contains(o.basis_vector(i))) return false;
    return true;
}

Vec Subspace::coordinates_of(const Vec& v) const {
    Vec out;
    if (!solve(basis_.transpose(), v, out))
        throw invariant_violation("vector outside subspace in coordinates_of");
    return out;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw dimension_mismatch("sum: ambient mismatch");
    return Subspace::from_rows(a.basis().vstack(b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw dimension_mismatch("intersect: ambient mismatch");
    Mat ca = kernel_basis(a.basis());
    Mat cb = kernel_basis(b.basis());
    return Subspace::from_rows(kernel_basis(ca.vstack(cb)));
}

Subspace image(const Mat& op, const Subspace& s) {
    if (op.cols() != s.ambient_dim()) throw dimension_mismatch("image: shape mismatch");
    return Subspace::from_rows(s.basis() * op.transpose());
}

Subspace kernel(const Mat& op) { return Subspace::from_rows(kernel_basis(op)); }

BilinearForm::BilinearForm(Mat g) : gram(std::move(g)) {
    if (gram.rows() != gram.cols()) throw dimension_mismatch("gram must be square");
    if (gram != gram.transpose()) throw precondition_error("gram must be symmetric");
}

Scalar BilinearForm::eval(const Vec& a, const Vec& b) const {
    Vec gb = gram.apply(b);
    if (a.size() != gb.size()) throw dimension_mismatch("form eval");
    Scalar s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * gb[i];
    return s;
}

Subspace orth_complement(const Subspace& s, const BilinearForm& q) {
    if (s.ambient_dim() != q.dim()) throw dimension_mismatch("orth_complement: ambient mismatch");
    return kernel(s.basis() * q.gram);
}

bool restriction_nondegenerate(const Subspace& s, const BilinearForm& q) {
    Mat g = s.basis() * q.gram * s.basis().transpose();
    return rank(g) == s.dim();
}

Partition nilpotent_partition(const Mat& n) {
    if (n.rows() != n.cols()) throw dimension_mismatch("nilpotent_partition: square required");
    const std::size_t dim = n.rows();
    std::vector<std::size_t> ranks = {dim};  // rank of n^0
    Mat p = Mat::identity(dim);
    for (std::size_t k = 1; k <= dim; ++k) {
        p = p * n;
        ranks.push_back(rank(p));
        if (ranks.back() == 0) break;
    }
    if (ranks.back() != 0) throw not_nilpotent("operator is not nilpotent");
    std::vector<std::size_t> conj;
    for (std::size_t k = 1; k < ranks.size(); ++k) conj.push_back(ranks[k - 1] - ranks[k]);
    return conjugate(normalized(std::move(conj)));
}

Vec primitive_row(Vec v) {
    mpz_class lcm_den(1), gcd_num(0);
    for (const auto& x : v)
        if (x != 0) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den().get_mpz_t());
    for (auto& x : v) {
        x *= lcm_den;
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), x.get_num().get_mpz_t());
    }
    if (gcd_num == 0) return v;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0) {
            if (v[i] < 0) gcd_num = -gcd_num;
            break;
        }
    }
    for (auto& x : v) {
        x /= gcd_num;
        x.canonicalize();
    }
    return v;
}

bool SpanBuilder::insert(Vec v) {
    if (v.size() != ambient_) throw dimension_mismatch("SpanBuilder insert");
    reduce(v);
    std::size_t lead = 0;
    while (lead < ambient_ && v[lead] == 0) ++lead;
    if (lead == ambient_) return false;
    v = primitive_row(std::move(v));
    // keep earlier rows reduced against the new one
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][lead] != 0) {
            const Scalar a = v[lead], b = rows_[i][lead];
            for (std::size_t j = 0; j < ambient_; ++j)
                rows_[i][j] = a * rows_[i][j] - b * v[j];
            rows_[i] = primitive_row(std::move(rows_[i]));
        }
    }
    rows_.push_back(std::move(v));
    lead_.push_back(lead);
    return true;
}

bool SpanBuilder::contains(Vec v) const {
    reduce(v);
    return is_zero_vec(v);
}

void SpanBuilder::reduce(Vec& v) const {
    // cross-multiplied elimination; scales v, which membership checks and
    // insertions both tolerate. Content is stripped only when entries grow.
    std::size_t since_strip = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (v[lead_[i]] != 0) {
            const Scalar a = rows_[i][lead_[i]], b = v[lead_[i]];
            for (std::size_t j = 0; j < ambient_; ++j) v[j] = a * v[j] - b * rows_[i][j];
            if (++since_strip == 8) {
                v = primitive_row(std::move(v));
                since_strip = 0;
            }
        }
    }
    if (since_strip != 0) v = primitive_row(std::move(v));
}

Subspace SpanBuilder::to_subspace() const {
    return Subspace::span_of(rows_, ambient_);
}

}  // namespace conflie
