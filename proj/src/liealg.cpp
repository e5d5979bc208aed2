#include "conflie/liealg.hpp"

#include <deque>

#include "conflie/errors.hpp"

namespace conflie {

TriangularOp triangular(const FnVec& t, const Model& m) {
    TriangularOp op{Mat::diagonal(t), Mat(m.n, m.n), Mat(m.n, m.n), Mat(m.n, m.n)};
    const std::size_t L = m.levels();
    for (std::size_t p = 0; p < L; ++p) {
        Mat mp = op.full * m.projections[p];
        if (p + 1 < L) op.plus = op.plus + m.projections[p + 1] * mp;
        op.zero = op.zero + m.projections[p] * mp;
        if (p > 0) op.minus = op.minus + m.projections[p - 1] * mp;
    }
    return op;
}

Mat op_plus(const FnVec& t, const Model& m) { return triangular(t, m).plus; }
Mat op_minus(const FnVec& t, const Model& m) { return triangular(t, m).minus; }
Mat op_zero(const FnVec& t, const Model& m) { return triangular(t, m).zero; }

namespace {

// Graded parts of multiplication by a panel basis, scaled to primitive
// integer matrices; scaling changes neither the generated algebra nor
// centralizers.
std::vector<Mat> lie_generators(const Model& reduced) {
    std::vector<Mat> gens;
    for (std::size_t i = 0; i < reduced.panel.dim(); ++i) {
        TriangularOp op = triangular(reduced.panel.basis_vector(i), reduced);
        for (const Mat* part : {&op.minus, &op.zero, &op.plus}) {
            Vec flat = primitive_row(part->flatten());
            gens.push_back(Mat::unflatten(flat, reduced.n, reduced.n));
        }
    }
    return gens;
}

// Span of integer vectors with cross-multiplied reduction; avoids the
// per-operation normalization cost of rational arithmetic in the closure.
class IntSpan {
public:
    explicit IntSpan(std::size_t ambient) : ambient_(ambient) {}

    bool insert(std::vector<mpz_class> v) {
        reduce(v);
        std::size_t lead = 0;
        while (lead < ambient_ && v[lead] == 0) ++lead;
        if (lead == ambient_) return false;
        strip(v);
        rows_.push_back(std::move(v));
        lead_.push_back(lead);
        return true;
    }
    std::size_t dim() const { return rows_.size(); }

private:
    void strip(std::vector<mpz_class>& v) const {
        mpz_class g(0);
        for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g > 1)
            for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
    void reduce(std::vector<mpz_class>& v) const {
        std::size_t since = 0;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (v[lead_[i]] != 0) {
                const mpz_class a = rows_[i][lead_[i]], b = v[lead_[i]];
                for (std::size_t j = 0; j < ambient_; ++j)
                    v[j] = a * v[j] - b * rows_[i][j];
                if (++since == 4) {
                    strip(v);
                    since = 0;
                }
            }
        }
    }
    std::size_t ambient_;
    std::vector<std::vector<mpz_class>> rows_;
    std::vector<std::size_t> lead_;
};

// Primitive rows are integral; read them as integers.
std::vector<mpz_class> integral_flatten(const Mat& m) {
    Vec flat = primitive_row(m.flatten());
    std::vector<mpz_class> out;
    out.reserve(flat.size());
    for (const auto& x : flat) out.push_back(x.get_num());
    return out;
}

}  // namespace

LieAlgebra generate_lie_algebra(const Model& reduced) {
    const std::size_t n = reduced.n;
    LieAlgebra alg;
    alg.n = n;
    std::vector<Mat> gens = lie_generators(reduced);
    // Bracket saturation against the generators; left-normed brackets span
    // the generated algebra. Dimension is bounded by n^2.
    IntSpan span(n * n);
    std::deque<Mat> fresh;
    for (const auto& g : gens)
        if (span.insert(integral_flatten(g))) {
            alg.basis.push_back(g);
            fresh.push_back(g);
        }
    while (!fresh.empty() && span.dim() < n * n) {
        Mat x = std::move(fresh.front());
        fresh.pop_front();
        for (const auto& g : gens) {
            Mat br = bracket(g, x);
            std::vector<mpz_class> flat = integral_flatten(br);
            if (span.insert(flat)) {
                Vec q(flat.size());
                for (std::size_t k = 0; k < flat.size(); ++k) q[k] = Scalar(flat[k]);
                Mat b = Mat::unflatten(q, n, n);
                alg.basis.push_back(b);
                fresh.push_back(std::move(b));
                if (span.dim() == n * n) break;
            }
        }
    }
    return alg;
}

std::vector<Mat> center(const LieAlgebra& alg, const Model& reduced) {
    const std::size_t n = alg.n;
    if (alg.dim() == 0) return {};
    std::vector<Mat> gens = lie_generators(reduced);
    // cut the candidate space by one generator at a time; commuting with the
    // generators is commuting with the whole algebra
    std::vector<Mat> cand = alg.basis;
    for (const auto& g : gens) {
        if (cand.empty()) break;
        Mat system(n * n, cand.size());
        for (std::size_t i = 0; i < cand.size(); ++i) {
            Vec br = bracket(cand[i], g).flatten();
            for (std::size_t k = 0; k < n * n; ++k) system.at(k, i) = br[k];
        }
        Mat coeff = kernel_basis(system);
        std::vector<Mat> next;
        for (std::size_t i = 0; i < coeff.rows(); ++i) {
            Mat x(n, n);
            for (std::size_t j = 0; j < cand.size(); ++j)
                if (coeff.at(i, j) != 0) x = x + cand[j].scaled(coeff.at(i, j));
            next.push_back(Mat::unflatten(primitive_row(x.flatten()), n, n));
        }
        cand = std::move(next);
    }
    return cand;
}

LieReport center_and_blocks(const LieAlgebra& alg, const Model& reduced) {
    const std::size_t n = alg.n;
    std::vector<Mat> c = center(alg, reduced);
    LieReport rep;
    rep.algebra_dim = alg.dim();
    rep.center_dim = c.size();

    for (const auto& x : c)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && x.at(i, j) != 0)
                    throw invariant_violation("central element is not diagonal in the class basis");

    // simultaneous eigenspaces of commuting diagonal operators: points agree
    // iff every central element takes the same value on them
    std::vector<std::vector<std::size_t>> blocks;
    std::vector<Vec> keys;
    for (std::size_t z = 0; z < n; ++z) {
        Vec key;
        for (const auto& x : c) key.push_back(x.at(z, z));
        bool placed = false;
        for (std::size_t b = 0; b < blocks.size(); ++b)
            if (keys[b] == key) {
                blocks[b].push_back(z);
                placed = true;
                break;
            }
        if (!placed) {
            blocks.push_back({z});
            keys.push_back(std::move(key));
        }
    }
    rep.blocks = blocks;
    if (rep.blocks.size() != rep.center_dim)
        throw invariant_violation("center dimension differs from block count");
    std::size_t sum_sq = 0;
    for (const auto& b : rep.blocks) {
        rep.block_dims.push_back(b.size());
        sum_sq += b.size() * b.size();
        if (b.size() == 1)
            ++rep.lambda_one_count;
        else
            ++rep.lambda_big_count;
    }
    if (sum_sq != rep.algebra_dim)
        throw invariant_violation("algebra dimension differs from sum of squared block sizes");
    rep.classification = classify(rep, reduced);
    return rep;
}

FibreClass classify(const LieReport& report, const Model& reduced) {
    bool plus_vanish = true;
    for (std::size_t i = 0; i < reduced.panel.dim() && plus_vanish; ++i)
        if (!op_plus(reduced.panel.basis_vector(i), reduced).is_zero()) plus_vanish = false;
    if (plus_vanish) return FibreClass::QuasiAbelian;
    if (report.center_dim == 1) return FibreClass::Simple;
    return FibreClass::Mixed;
}

std::string to_string(FibreClass c) {
    switch (c) {
        case FibreClass::QuasiAbelian: return "quasi_abelian";
        case FibreClass::Simple: return "simple";
        case FibreClass::Mixed: return "mixed";
    }
    return "?";
}

std::vector<std::vector<std::size_t>> pull_back_blocks(
    const std::vector<std::vector<std::size_t>>& blocks, const Reduction& red) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& b : blocks) {
        std::vector<std::size_t> pts;
        for (std::size_t cls : b)
            pts.insert(pts.end(), red.blocks[cls].begin(), red.blocks[cls].end());
        std::sort(pts.begin(), pts.end());
        out.push_back(std::move(pts));
    }
    return out;
}

namespace {

// Basis of the panel modulo constants: RREF rows independent from 1.
std::vector<FnVec> panel_mod_constants(const Model& m) {
    SpanBuilder span(m.n);
    span.insert(FnVec(m.n, Scalar(1)));
    std::vector<FnVec> out;
    for (std::size_t i = 0; i < m.panel.dim(); ++i) {
        FnVec v = m.panel.basis_vector(i);
        if (span.insert(v)) out.push_back(v);
    }
    return out;
}

}  // namespace

TorelliReport torelli_index(const Model& reduced) {
    TorelliReport rep;
    const std::size_t L = reduced.levels();
    std::vector<FnVec> tangent = panel_mod_constants(reduced);
    const std::size_t R = tangent.size();
    std::vector<Mat> plus_ops;
    for (const auto& t : tangent) plus_ops.push_back(op_plus(t, reduced));

    // columns of the p-system: D+(t_i) restricted to H^p, flattened
    auto kernel_of_levels = [&](std::size_t p_lo, std::size_t p_hi) {
        std::vector<Vec> cols;
        for (std::size_t i = 0; i < R; ++i) {
            Vec col;
            for (std::size_t p = p_lo; p <= p_hi; ++p) {
                Mat restricted = plus_ops[i] * reduced.projections[p];
                Vec f = restricted.flatten();
                col.insert(col.end(), f.begin(), f.end());
            }
            cols.push_back(std::move(col));
        }
        if (R == 0) return Mat(0, 0);
        Mat sys = Mat::from_rows(cols, cols[0].size()).transpose();
        return kernel_basis(sys);
    };

    Subspace prev(R == 0 ? 1 : R);
    bool nested = true;
    for (std::size_t p = 0; p + 2 <= L; ++p) {
        Mat k = kernel_of_levels(p, p);
        Subspace ks = Subspace::from_rows(k);
        rep.kernel_dims.push_back(ks.dim());
        if (p > 0 && !ks.contains(prev)) nested = false;
        prev = ks;
        if (!rep.tau && ks.dim() > 0) rep.tau = p;
    }
    if (!nested) throw invariant_violation("degree-raising kernels are not nested");
    if (L >= 2) {
        Mat ktot = kernel_of_levels(0, L - 2);
        rep.total_kernel_dim = Subspace::from_rows(ktot).dim();
    } else {
        rep.total_kernel_dim = R;  // every direction is killed when there is one level
    }
    rep.strong = L >= 2 && !rep.tau.has_value();
    return rep;
}

}  // namespace conflie
