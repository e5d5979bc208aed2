#include "conflie/filtration.hpp"

#include <map>

#include "conflie/errors.hpp"

namespace conflie {

Filtration compute_filtration(const Panel& p) {
    const std::size_t d = p.degree();
    std::vector<FnVec> gens;
    for (std::size_t i = 0; i < p.basis.dim(); ++i) gens.push_back(p.basis.basis_vector(i));

    Filtration f;
    f.steps.push_back(p.basis);
    // H_{-(i+1)} = H_{-i} + H * H_{-i}; equals the span of i+1-fold products
    // since the panel contains the constants.
    while (true) {
        const Subspace& cur = f.steps.back();
        std::vector<FnVec> next;
        for (std::size_t i = 0; i < cur.dim(); ++i) next.push_back(cur.basis_vector(i));
        for (const auto& g : gens)
            for (std::size_t i = 0; i < cur.dim(); ++i)
                next.push_back(fn_mult(g, cur.basis_vector(i)));
        Subspace s = Subspace::span_of(next, d);
        if (s.dim() == cur.dim()) break;
        f.steps.push_back(std::move(s));
    }
    f.hilbert.push_back(f.steps[0].dim());
    for (std::size_t i = 1; i < f.steps.size(); ++i)
        f.hilbert.push_back(f.steps[i].dim() - f.steps[i - 1].dim());
    f.hilbert.push_back(d - f.steps.back().dim());
    return f;
}

Reduction reduce(const Panel& p, const Filtration& f) {
    const std::size_t d = p.degree();
    const Subspace& top = f.top();
    // classes = common level sets of a basis of H_{-l}, ordered by least index
    std::vector<std::vector<std::size_t>> blocks;
    std::vector<Vec> keys;
    for (std::size_t z = 0; z < d; ++z) {
        Vec key(top.dim());
        for (std::size_t i = 0; i < top.dim(); ++i) key[i] = top.basis().at(i, z);
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
    Reduction red{blocks};
    if (red.d_prime() != top.dim())
        throw invariant_violation("class count differs from dim of the stable subring");
    return red;
}

GradedModel graded_split(const std::vector<Subspace>& flag, const BilinearForm& q) {
    GradedModel g;
    if (flag.empty()) throw precondition_error("empty flag");
    const std::size_t n = flag[0].ambient_dim();
    for (std::size_t i = 0; i < flag.size(); ++i)
        if (!restriction_nondegenerate(flag[i], q)) throw degenerate_restriction(i + 1);
    for (std::size_t i = 0; i < flag.size(); ++i) {
        Subspace perp = i == 0 ? Subspace::full(n) : orth_complement(flag[i - 1], q);
        g.summands.push_back(intersect(flag[i], perp));
    }
    g.summands.push_back(orth_complement(flag.back(), q));
    // F^i = sum of the summands from i on
    g.f_steps.assign(g.summands.size(), Subspace(n));
    Subspace acc(n);
    for (std::size_t i = g.summands.size(); i-- > 0;) {
        acc = sum(acc, g.summands[i]);
        g.f_steps[i] = acc;
    }
    // direct-sum bookkeeping
    std::size_t total = 0;
    for (const auto& s : g.summands) total += s.dim();
    if (total != n) throw invariant_violation("graded summand dims do not fill the space");
    return g;
}

GradedModel orthogonal_decomposition(const Panel& p, const Filtration& f) {
    TraceData q(p.degree());
    GradedModel g = graded_split(f.steps, q.form);
    for (std::size_t i = 0; i <= f.length(); ++i)
        if (g.summands[i].dim() != f.hilbert[i])
            throw invariant_violation("summand dimension differs from Hilbert vector entry");
    return g;
}

bool rescaling_law_check(const Panel& p, const FnVec& s, std::size_t index) {
    Filtration fa = compute_filtration(p);
    Panel pb = rescale_panel(p, s);
    Filtration fb = compute_filtration(pb);
    if (fa.length() != fb.length()) return false;
    if (index == 0 || index > fa.length()) throw precondition_error("step index out of range");
    // (1+s)^{-i} * H_{-i}(original)
    FnVec unit_inv(p.degree(), Scalar(1));
    for (std::size_t z = 0; z < p.degree(); ++z)
        for (std::size_t k = 0; k < index; ++k) unit_inv[z] /= Scalar(1) + s[z];
    std::vector<FnVec> scaled;
    const Subspace& ha = fa.steps[index - 1];
    for (std::size_t i = 0; i < ha.dim(); ++i)
        scaled.push_back(fn_mult(unit_inv, ha.basis_vector(i)));
    if (Subspace::span_of(scaled, p.degree()) != fb.steps[index - 1]) return false;
    return fa.top() == fb.top();
}

namespace {

std::vector<Mat> orthogonal_projections(const std::vector<Subspace>& summands,
                                        const BilinearForm& q) {
    std::vector<Mat> out;
    for (const auto& s : summands) {
        if (s.dim() == 0) {
            out.push_back(Mat(q.dim(), q.dim()));
            continue;
        }
        Mat b = s.basis();
        Mat gram = b * q.gram * b.transpose();
        // gram is invertible here (split already validated nondegeneracy)
        Mat inv(gram.rows(), gram.rows());
        for (std::size_t j = 0; j < gram.rows(); ++j) {
            Vec e(gram.rows(), Scalar(0));
            e[j] = 1;
            Vec x;
            if (!solve(gram, e, x)) throw invariant_violation("projection gram not invertible");
            for (std::size_t i = 0; i < gram.rows(); ++i) inv.at(i, j) = x[i];
        }
        out.push_back(b.transpose() * inv * b * q.gram);
    }
    return out;
}

}  // namespace

Model make_ambient_model(const Panel& p, const Filtration& f, const GradedModel& g) {
    Model m;
    m.n = p.degree();
    m.weights = Vec(m.n, Scalar(1));
    m.form = BilinearForm::standard(m.n);
    m.panel = p.basis;
    m.filtration = f.steps;
    m.summands = g.summands;
    m.projections = orthogonal_projections(m.summands, m.form);
    return m;
}

FnVec restrict_to_blocks(const FnVec& f, const Reduction& red) {
    FnVec out(red.d_prime());
    for (std::size_t b = 0; b < red.blocks.size(); ++b) {
        out[b] = f[red.blocks[b][0]];
        for (std::size_t z : red.blocks[b])
            if (f[z] != out[b])
                throw precondition_error("function is not constant on a class");
    }
    return out;
}

Model make_reduced_model(const Panel& p, const Filtration& f, const GradedModel& g,
                         const Reduction& red) {
    Model m;
    m.n = red.d_prime();
    m.weights = Vec(m.n);
    for (std::size_t b = 0; b < m.n; ++b) m.weights[b] = Scalar((long)red.blocks[b].size());
    m.form = BilinearForm::diagonal(m.weights);

    auto push_down = [&](const Subspace& s) {
        std::vector<FnVec> rows;
        for (std::size_t i = 0; i < s.dim(); ++i)
            rows.push_back(restrict_to_blocks(s.basis_vector(i), red));
        return Subspace::span_of(rows, m.n);
    };
    m.panel = push_down(p.basis);
    for (const auto& step : f.steps) m.filtration.push_back(push_down(step));
    // H^0..H^{l-1}; the classes are separated by H_{-l}, so these fill Q^{d'}
    for (std::size_t i = 0; i < f.length(); ++i) m.summands.push_back(push_down(g.summands[i]));
    std::size_t total = 0;
    for (const auto& s : m.summands) total += s.dim();
    if (total != m.n) throw invariant_violation("reduced summands do not fill the class space");
    m.projections = orthogonal_projections(m.summands, m.form);
    return m;
}

}  // namespace conflie
