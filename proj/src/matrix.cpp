#include "conflie/matrix.hpp"

#include "conflie/errors.hpp"

namespace conflie {

Mat::Mat(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows.begin() == rows.end() ? 0 : rows.begin()->size();
    a_.assign(rows_ * cols_, Scalar(0));
    std::size_t i = 0;
    for (const auto& r : rows) {
        if (r.size() != cols_) throw dimension_mismatch("ragged initializer");
        std::size_t j = 0;
        for (long x : r) at(i, j++) = Scalar(x);
        ++i;
    }
}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::diagonal(const Vec& d) {
    Mat m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    Mat m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

Vec Mat::row(std::size_t i) const {
    Vec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

Vec Mat::col(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

void Mat::set_row(std::size_t i, const Vec& v) {
    if (v.size() != cols_) throw dimension_mismatch("row length mismatch");
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw dimension_mismatch("matrix product shape");
    Mat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& x = at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                if (o.at(k, j) == 0) continue;
                r.at(i, j) += x * o.at(k, j);
            }
        }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_mismatch("matrix sum shape");
    Mat r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_mismatch("matrix difference shape");
    Mat r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

Mat Mat::scaled(const Scalar& c) const {
    Mat r = *this;
    for (auto& x : r.a_) x *= c;
    return r;
}

Vec Mat::apply(const Vec& v) const {
    if (v.size() != cols_) throw dimension_mismatch("matrix apply shape");
    Vec r(rows_, Scalar(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0 && v[j] != 0) r[i] += at(i, j) * v[j];
    return r;
}

bool Mat::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

Mat Mat::vstack(const Mat& o) const {
    if (rows_ == 0) return o;
    if (o.rows_ == 0) return *this;
    if (cols_ != o.cols_) throw dimension_mismatch("vstack width");
    Mat r(rows_ + o.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
    return r;
}

Mat Mat::unflatten(const Vec& v, std::size_t rows, std::size_t cols) {
    if (v.size() != rows * cols) throw dimension_mismatch("unflatten size");
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = v[i * cols + j];
    return m;
}

Mat bracket(const Mat& a, const Mat& b) { return a * b - b * a; }

Scalar trace(const Mat& m) {
    Scalar t(0);
    for (std::size_t i = 0; i < m.rows() && i < m.cols(); ++i) t += m.at(i, i);
    return t;
}

namespace {

// Integer row proportional to v with content 1; keeps elimination entries
// from swelling.
void make_primitive(Vec& v) {
    mpz_class lcm_den(1), gcd_num(0);
    for (const auto& x : v)
        if (x != 0) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den().get_mpz_t());
    for (auto& x : v) {
        if (lcm_den != 1) x *= lcm_den;
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), x.get_num().get_mpz_t());
    }
    if (gcd_num == 0 || gcd_num == 1) return;
    for (auto& x : v) {
        x /= gcd_num;
        x.canonicalize();
    }
}

}  // namespace

RrefResult rref(const Mat& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < nr; ++i) {
        Vec v = m.row(i);
        make_primitive(v);
        rows.push_back(std::move(v));
    }
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t sel = nr;
        for (std::size_t i = r; i < nr; ++i)
            if (rows[i][c] != 0) {
                sel = i;
                break;
            }
        if (sel == nr) continue;
        std::swap(rows[sel], rows[r]);
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == r || rows[i][c] == 0) continue;
            // cross-multiplied elimination keeps rows integral
            const Scalar a = rows[r][c], b = rows[i][c];
            for (std::size_t j = 0; j < nc; ++j) rows[i][j] = a * rows[i][j] - b * rows[r][j];
            make_primitive(rows[i]);
        }
        pivots.push_back(c);
        ++r;
    }
    Mat out(r, nc);
    for (std::size_t i = 0; i < r; ++i) {
        Scalar inv = Scalar(1) / rows[i][pivots[i]];
        for (std::size_t j = 0; j < nc; ++j) out.at(i, j) = rows[i][j] * inv;
    }
    return {out, pivots};
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

Mat kernel_basis(const Mat& m) {
    RrefResult r = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : r.pivots) is_pivot[c] = true;
    std::vector<Vec> rows;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vec v(n, Scalar(0));
        v[f] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.mat.at(i, f);
        rows.push_back(std::move(v));
    }
    return rref(Mat::from_rows(rows, n)).mat;
}

bool solve(const Mat& m, const Vec& b, Vec& out) {
    if (b.size() != m.rows()) throw dimension_mismatch("solve rhs length");
    Mat aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    RrefResult r = rref(aug);
    out.assign(m.cols(), Scalar(0));
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
        if (r.pivots[i] == m.cols()) return false;  // row (0 ... 0 | 1)
        out[r.pivots[i]] = r.mat.at(i, m.cols());
    }
    return true;
}

}  // namespace conflie
