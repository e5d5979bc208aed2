#include "conflie/equations.hpp"

#include <algorithm>

#include "conflie/errors.hpp"

namespace conflie {

void certify(EquationSet& es) {
    es.certificate.clear();
    for (const auto& p : es.polys) {
        Vec evals;
        for (std::size_t z = 0; z < es.n_points(); ++z) {
            Scalar v = p.eval(es.assignment.col(z));
            if (v != 0) throw invariant_violation("equation does not vanish at a point");
            evals.push_back(v);
        }
        es.certificate.push_back(std::move(evals));
    }
}

bool verify(const EquationSet& es) {
    for (const auto& p : es.polys)
        for (std::size_t z = 0; z < es.n_points(); ++z)
            if (p.eval(es.assignment.col(z)) != 0) return false;
    return true;
}

std::vector<Sl2Basis::BasisElem> Sl2Basis::adapted_basis(std::size_t k) const {
    std::vector<BasisElem> out;
    for (std::size_t h = 0; h < heads.size(); ++h)
        for (std::size_t m = 0; m <= heads[h].q; ++m)
            if (m + heads[h].p - heads[h].q <= k) out.push_back({h, m});
    return out;
}

Poly Sl2Basis::elem_poly(const BasisElem& e) const {
    return t_poly.pow(static_cast<unsigned>(e.m)) * heads[e.head].lifting;
}

namespace {

// v as a combination of the given value columns; unique when they are
// independent. Throws if inconsistent.
Vec express(const std::vector<FnVec>& columns, const FnVec& v) {
    if (columns.empty()) throw invariant_violation("empty expressing set");
    Mat m(v.size(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (std::size_t i = 0; i < v.size(); ++i) m.at(i, j) = columns[j][i];
    Vec out;
    if (!solve(m, v, out)) throw invariant_violation("value outside the expressing span");
    return out;
}

}  // namespace

Sl2Basis sl2_basis(const FnVec& t, const Model& reduced) {
    Sl2Basis b;
    b.model = reduced;
    b.t = t;
    const std::size_t n = reduced.n;
    Subspace constants = Subspace::span_of({FnVec(n, Scalar(1))}, n);
    if (constants.contains(t)) throw precondition_error("sl2 basis needs a non-constant t");
    if (!reduced.panel.contains(t)) throw precondition_error("t must lie in the panel");

    std::vector<Chain> chains = graded_jordan_chains(op_plus(t, reduced), reduced, +1);
    // counts per (q, p) for the s index
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
    for (const auto& c : chains) {
        Sl2Basis::Head h;
        h.q = c.length - 1;
        h.p = c.head_level + h.q;
        h.s = ++seen[{h.q, h.p}];
        h.value = c.head;
        h.powers.push_back(c.head);
        for (std::size_t m = 1; m <= h.q; ++m)
            h.powers.push_back(fn_mult(t, h.powers.back()));
        b.heads.push_back(std::move(h));
    }
    // degree-zero heads name the coordinates
    for (std::size_t i = 0; i < b.heads.size(); ++i)
        if (b.heads[i].q == b.heads[i].p) {
            b.grade0_heads.push_back(i);
            b.y_vars.push_back("Y" + std::to_string(b.heads[i].s) + "_" +
                               std::to_string(b.heads[i].p));
        }
    std::vector<FnVec> y0;
    for (std::size_t i : b.grade0_heads) y0.push_back(b.heads[i].value);
    if (Subspace::span_of(y0, n) != reduced.panel)
        throw invariant_violation("degree-zero heads do not span the panel");

    const std::size_t nv = b.y_vars.size();
    // liftings: degree-zero heads are variables; higher heads are solved as
    // polynomials of degree <= p-q+1 in the variables
    for (std::size_t i = 0; i < b.heads.size(); ++i) {
        Sl2Basis::Head& h = b.heads[i];
        std::size_t grade = h.p - h.q;
        if (grade == 0) {
            h.lifting = Poly::variable(nv, static_cast<std::size_t>(
                                               std::find(b.grade0_heads.begin(),
                                                         b.grade0_heads.end(), i) -
                                               b.grade0_heads.begin()));
            continue;
        }
        auto mons = monomials_up_to(nv, static_cast<unsigned>(grade + 1));
        std::vector<FnVec> cols;
        for (const auto& e : mons) {
            FnVec v(n, Scalar(1));
            for (std::size_t j = 0; j < nv; ++j)
                for (unsigned k = 0; k < e[j]; ++k) v = fn_mult(v, y0[j]);
            cols.push_back(std::move(v));
        }
        Vec coeff = express(cols, h.value);
        Poly lift(nv);
        for (std::size_t j = 0; j < mons.size(); ++j)
            if (coeff[j] != 0) lift.add_term(mons[j], coeff[j]);
        h.lifting = lift;
    }
    b.t_poly = Poly(nv);
    {
        Vec coeff = express(y0, t);
        for (std::size_t j = 0; j < nv; ++j)
            if (coeff[j] != 0) {
                std::vector<unsigned> e(nv, 0);
                e[j] = 1;
                b.t_poly.add_term(e, coeff[j]);
            }
    }
    // adaptedness: the filtered subsets are bases of the filtration steps
    for (std::size_t k = 0; k < reduced.filtration.size(); ++k) {
        auto elems = b.adapted_basis(k);
        std::vector<FnVec> vals;
        for (const auto& e : elems) vals.push_back(b.elem_value(e));
        Subspace s = Subspace::span_of(vals, n);
        if (elems.size() != reduced.filtration[k].dim() || s != reduced.filtration[k])
            throw invariant_violation("adapted subset is not a basis of the filtration step");
    }
    return b;
}

namespace {

Mat y_assignment(const Sl2Basis& b) {
    Mat a(b.y_vars.size(), b.model.n);
    for (std::size_t i = 0; i < b.grade0_heads.size(); ++i)
        for (std::size_t z = 0; z < b.model.n; ++z)
            a.at(i, z) = b.heads[b.grade0_heads[i]].value[z];
    return a;
}

}  // namespace

MonomialRelations monomial_relations(const Sl2Basis& b, unsigned degree_cap) {
    const std::size_t nv = b.y_vars.size();
    const std::size_t n = b.model.n;
    MonomialRelations out;
    out.affine.vars = b.y_vars;
    out.affine.assignment = y_assignment(b);
    out.homogeneous.vars = b.y_vars;
    out.homogeneous.vars.push_back("T_alpha");
    {
        Mat a(nv + 1, n);
        for (std::size_t i = 0; i < nv; ++i)
            for (std::size_t z = 0; z < n; ++z) a.at(i, z) = out.affine.assignment.at(i, z);
        for (std::size_t z = 0; z < n; ++z) a.at(nv, z) = 1;
        out.homogeneous.assignment = a;
    }
    std::vector<FnVec> y0;
    for (std::size_t i : b.grade0_heads) y0.push_back(b.heads[i].value);

    for (unsigned deg = 2; deg <= degree_cap; ++deg) {
        for (const auto& e : monomials_of_degree(nv, deg)) {
            FnVec value(n, Scalar(1));
            for (std::size_t j = 0; j < nv; ++j)
                for (unsigned k = 0; k < e[j]; ++k) value = fn_mult(value, y0[j]);
            Poly f(nv);
            f.add_term(e, Scalar(1));
            if (!is_zero_vec(value)) {
                auto elems = b.adapted_basis(deg - 1);
                std::vector<FnVec> cols;
                for (const auto& el : elems) cols.push_back(b.elem_value(el));
                Vec coeff = express(cols, value);
                for (std::size_t j = 0; j < elems.size(); ++j)
                    if (coeff[j] != 0) f = f - b.elem_poly(elems[j]).scaled(coeff[j]);
            }
            out.affine.polys.push_back(f);
            Poly h = f.homogenized(deg);
            if (!h.is_homogeneous(deg))
                throw invariant_violation("homogenization failed to reach the target degree");
            out.homogeneous.polys.push_back(std::move(h));
        }
    }
    certify(out.affine);
    certify(out.homogeneous);
    return out;
}

EquationSet rank_bounded_relations(const Sl2Basis& b, std::size_t q, std::size_t p) {
    const std::size_t nv = b.y_vars.size();
    const std::size_t n = b.model.n;
    EquationSet es;
    es.vars = b.y_vars;
    es.vars.push_back("T_alpha");
    Mat a(nv + 1, n);
    Mat ya = y_assignment(b);
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t z = 0; z < n; ++z) a.at(i, z) = ya.at(i, z);
    for (std::size_t z = 0; z < n; ++z) a.at(nv, z) = 1;
    es.assignment = a;

    unsigned target = static_cast<unsigned>(p + 2);
    for (const auto& h : b.heads) {
        if (h.q != q || h.p != p) continue;
        FnVec w = fn_mult(b.t, h.powers[h.q]);  // t^{q+1} y
        Poly g = b.t_poly.pow(static_cast<unsigned>(q + 1)) * h.lifting;
        if (!is_zero_vec(w)) {
            auto elems = b.adapted_basis(p);
            std::vector<FnVec> cols;
            for (const auto& el : elems) cols.push_back(b.elem_value(el));
            Vec coeff = express(cols, w);
            for (std::size_t j = 0; j < elems.size(); ++j)
                if (coeff[j] != 0) g = g - b.elem_poly(elems[j]).scaled(coeff[j]);
        }
        es.polys.push_back(g.homogenized(target));
    }
    // independence of the emitted forms in degree p+2
    if (!es.polys.empty()) {
        std::vector<Vec> rows;
        for (const auto& g : es.polys) rows.push_back(g.coefficients_of_degree(target));
        Mat m = Mat::from_rows(rows, rows[0].size());
        if (rank(m) != es.polys.size())
            throw invariant_violation("rank-bounded relations are linearly dependent");
    }
    certify(es);
    return es;
}

EquationSet rank4_quadrics(const Model& reduced) {
    const std::size_t n = reduced.n;
    const std::size_t nv = reduced.panel.dim();  // coordinates x_1..x_nv
    // first points in label order whose evaluation functionals span
    std::vector<std::size_t> pts;
    {
        SpanBuilder sb(nv);
        for (std::size_t z = 0; z < n && pts.size() < nv; ++z) {
            Vec col(nv);
            for (std::size_t i = 0; i < nv; ++i) col[i] = reduced.panel.basis().at(i, z);
            if (sb.insert(col)) pts.push_back(z);
        }
    }
    if (pts.size() < nv) throw not_general_position("points do not span the panel dual");
    // dual basis x_i with x_i(z_j) = delta_ij
    Mat eval(nv, nv);
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = 0; j < nv; ++j) eval.at(i, j) = reduced.panel.basis().at(i, pts[j]);
    std::vector<FnVec> x(nv);
    for (std::size_t i = 0; i < nv; ++i) {
        Vec e(nv, Scalar(0));
        e[i] = 1;
        Vec c;
        if (!solve(eval.transpose(), e, c)) throw not_general_position("dual basis solve failed");
        FnVec xi(n, Scalar(0));
        for (std::size_t k = 0; k < nv; ++k)
            if (c[k] != 0) {
                FnVec bk = reduced.panel.basis_vector(k);
                for (std::size_t z = 0; z < n; ++z) xi[z] += c[k] * bk[z];
            }
        x[i] = xi;
    }
    // H = panel orthogonal to the constants; D+(x_i) must map it onto H^1
    Subspace hsub = intersect(reduced.panel,
                              orth_complement(Subspace::span_of({FnVec(n, Scalar(1))}, n),
                                              reduced.form));
    if (reduced.levels() < 2 || hsub.dim() != reduced.summands[1].dim())
        throw hypothesis_fails(0);
    std::vector<Mat> dplus(nv);
    std::vector<Mat> dplus_on_h(nv);  // columns indexed by the basis of hsub
    for (std::size_t i = 0; i < nv; ++i) {
        dplus[i] = op_plus(x[i], reduced);
        Mat cols(n, hsub.dim());
        for (std::size_t j = 0; j < hsub.dim(); ++j) {
            Vec img = dplus[i].apply(hsub.basis_vector(j));
            for (std::size_t z = 0; z < n; ++z) cols.at(z, j) = img[z];
        }
        if (rank(cols) != hsub.dim()) throw hypothesis_fails(i + 1);
        dplus_on_h[i] = cols;
    }

    EquationSet es;
    for (std::size_t i = 0; i < nv; ++i) es.vars.push_back("X" + std::to_string(i + 1));
    Mat assign(nv, n);
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t z = 0; z < n; ++z) assign.at(i, z) = x[i][z];
    es.assignment = assign;

    for (std::size_t i = 1; i < nv; ++i)
        for (std::size_t j = i + 1; j < nv; ++j) {
            Vec rhs = dplus[i].apply(x[j]);
            Vec c;
            if (!solve(dplus_on_h[0], rhs, c))
                throw not_general_position("raising image not in the expected summand");
            FnVec hprime(n, Scalar(0));
            for (std::size_t k = 0; k < hsub.dim(); ++k)
                if (c[k] != 0) {
                    Vec bk = hsub.basis_vector(k);
                    for (std::size_t z = 0; z < n; ++z) hprime[z] += c[k] * bk[z];
                }
            // x_i x_j - x_1 h' restricted to the points is a multiple of x_1
            FnVec mbar = fn_mult(x[i], x[j]);
            FnVec x1h = fn_mult(x[0], hprime);
            for (std::size_t z = 0; z < n; ++z) mbar[z] -= x1h[z];
            Scalar cij = mbar[pts[0]] / x[0][pts[0]];
            for (std::size_t z = 0; z < n; ++z)
                if (mbar[z] != cij * x[0][z])
                    throw not_general_position("residual is not a multiple of the first coordinate");
            FnVec hfull = hprime;
            for (std::size_t z = 0; z < n; ++z) hfull[z] += cij;
            // write h' + c in the dual coordinates: its values at the chosen
            // points are its coefficients
            Poly linear(nv);
            for (std::size_t k = 0; k < nv; ++k) {
                Scalar coeff = hfull[pts[k]];
                if (coeff != 0) {
                    std::vector<unsigned> e(nv, 0);
                    e[k] = 1;
                    linear.add_term(e, coeff);
                }
            }
            Poly quad = Poly::variable(nv, i) * Poly::variable(nv, j) -
                        Poly::variable(nv, 0) * linear;
            // structural rank bound: the symmetric matrix of x_i x_j - x_1 L
            Mat sym(nv, nv);
            for (const auto& [e, coef] : quad.terms()) {
                std::vector<std::size_t> idx;
                for (std::size_t k = 0; k < nv; ++k)
                    for (unsigned r = 0; r < e[k]; ++r) idx.push_back(k);
                if (idx.size() != 2) throw invariant_violation("quadric has a non-quadratic term");
                if (idx[0] == idx[1]) {
                    sym.at(idx[0], idx[0]) = sym.at(idx[0], idx[0]) + coef;
                } else {
                    sym.at(idx[0], idx[1]) = sym.at(idx[0], idx[1]) + coef / 2;
                    sym.at(idx[1], idx[0]) = sym.at(idx[1], idx[0]) + coef / 2;
                }
            }
            if (rank(sym) > 4) throw invariant_violation("emitted quadric has rank above four");
            es.polys.push_back(std::move(quad));
        }
    if (!es.polys.empty()) {
        std::vector<Vec> rows;
        for (const auto& g : es.polys) rows.push_back(g.coefficients_of_degree(2));
        if (rank(Mat::from_rows(rows, rows[0].size())) != es.polys.size())
            throw invariant_violation("rank-four quadrics are linearly dependent");
    }
    certify(es);
    return es;
}

Mu00Split mu00_split(const Model& reduced) {
    const std::size_t n = reduced.n;
    const std::size_t r = reduced.panel.dim() - 1;
    // first r points whose evaluation functionals on the panel are independent
    std::vector<std::size_t> chosen;
    SpanBuilder sb(reduced.panel.dim());
    for (std::size_t z = 0; z < n && chosen.size() < r; ++z) {
        Vec col(reduced.panel.dim());
        for (std::size_t i = 0; i < reduced.panel.dim(); ++i)
            col[i] = reduced.panel.basis().at(i, z);
        if (sb.insert(col)) chosen.push_back(z);
    }
    if (chosen.size() < r) throw not_general_position("points do not span a hyperplane");
    // t spans the panel functions vanishing at the chosen points
    Mat eval(chosen.size(), reduced.panel.dim());
    for (std::size_t i = 0; i < chosen.size(); ++i)
        for (std::size_t j = 0; j < reduced.panel.dim(); ++j)
            eval.at(i, j) = reduced.panel.basis().at(j, chosen[i]);
    Mat null = kernel_basis(eval);
    if (null.rows() != 1) throw not_general_position("vanishing condition does not cut a line");
    FnVec t(n, Scalar(0));
    for (std::size_t j = 0; j < reduced.panel.dim(); ++j)
        if (null.at(0, j) != 0) {
            FnVec bj = reduced.panel.basis_vector(j);
            for (std::size_t z = 0; z < n; ++z) t[z] += null.at(0, j) * bj[z];
        }

    Mu00Split out;
    out.t = t;
    Subspace k0 = intersect(kernel(op_plus(t, reduced)), reduced.summands[0]);
    out.mu00 = k0.dim();
    // D0(t) x = xi(x) t on the kernel piece
    Mat zero_part = op_zero(t, reduced);
    std::vector<Vec> xi_kernel_rows;
    {
        // xi as a functional on k0: D0(t) b_j = xi_j * t
        Vec xi(k0.dim());
        for (std::size_t j = 0; j < k0.dim(); ++j) {
            Vec img = zero_part.apply(k0.basis_vector(j));
            // img must be collinear with t
            Scalar ratio(0);
            std::size_t zt = 0;
            while (zt < n && t[zt] == 0) ++zt;
            ratio = img[zt] / t[zt];
            for (std::size_t z = 0; z < n; ++z)
                if (img[z] != ratio * t[z])
                    throw invariant_violation("flat part does not act by multiples of t");
            xi[j] = ratio;
        }
        // x in ker xi satisfies t x = 0, so x vanishes off the zero set of t
        std::vector<Vec> rows{xi};
        out.vanish_on_z2 = kernel_basis(Mat::from_rows(rows, k0.dim())).rows();
    }
    for (std::size_t z = 0; z < n; ++z)
        (t[z] == 0 ? out.z1 : out.z2).push_back(z);
    if (out.z2.empty()) throw not_general_position("cutting function vanishes everywhere");
    // direct count of panel functions supported off each part
    auto vanishing_dim = [&](const std::vector<std::size_t>& part) {
        Mat ev(part.size(), reduced.panel.dim());
        for (std::size_t i = 0; i < part.size(); ++i)
            for (std::size_t j = 0; j < reduced.panel.dim(); ++j)
                ev.at(i, j) = reduced.panel.basis().at(j, part[i]);
        return kernel_basis(ev).rows();
    };
    out.vanish_on_z1 = vanishing_dim(out.z1);
    if (out.vanish_on_z2 != vanishing_dim(out.z2))
        throw invariant_violation("kernel of the scalar functional mismatches the direct count");
    if (out.vanish_on_z2 + 1 != out.mu00)
        throw invariant_violation("speciality of the residual part is not mu00 - 1");
    if (out.vanish_on_z1 != 1)
        throw invariant_violation("the hyperplane part should carry exactly the cutting function");
    return out;
}

AdjointCoords adjoint_coordinates(const FnVec& t, const Model& ambient) {
    AdjointCoords ac;
    ac.trunc = truncate(t, ambient);
    const std::size_t n = ambient.n;
    std::vector<Vec> rows;
    for (std::size_t row = 0; row < ac.trunc.kept.size(); ++row) {
        const Chain& c = ac.trunc.chains[ac.trunc.kept[row]];
        FnVec phi = c.head;
        for (std::size_t m = 0; m < ac.trunc.lambda_hat[row]; ++m) {
            ac.names.push_back("X" + std::to_string(row + 1) + "_" + std::to_string(m));
            ac.index.emplace_back(row, m);
            rows.push_back(phi);
            phi = fn_mult(t, phi);
        }
    }
    ac.values = Mat::from_rows(rows, n);
    return ac;
}

EquationSet scroll_equations(const AdjointCoords& ac) {
    EquationSet es;
    es.vars = ac.names;
    es.assignment = ac.values;
    const std::size_t nv = ac.names.size();
    auto var_at = [&](std::size_t row, std::size_t m) {
        for (std::size_t i = 0; i < ac.index.size(); ++i)
            if (ac.index[i] == std::make_pair(row, m)) return i;
        throw invariant_violation("missing adjoint coordinate");
    };
    bool any_wide = false;
    for (std::size_t row = 0; row < ac.trunc.lambda_hat.size(); ++row) {
        std::size_t len = ac.trunc.lambda_hat[row];
        if (len < 2) continue;
        any_wide = true;
        // columns of the two-row matrix are (X_{row,m}, X_{row,m+1}),
        // m = len-2..0; minors pair distinct columns
        for (std::size_t a = 0; a + 1 < len; ++a)
            for (std::size_t c = a + 1; c + 1 < len; ++c) {
                Poly minor = Poly::variable(nv, var_at(row, a)) *
                                 Poly::variable(nv, var_at(row, c + 1)) -
                             Poly::variable(nv, var_at(row, c)) *
                                 Poly::variable(nv, var_at(row, a + 1));
                es.polys.push_back(std::move(minor));
            }
    }
    if (!any_wide) es.note = "all truncated parts are 1; the scroll is the ambient space";
    certify(es);
    return es;
}

}  // namespace conflie
