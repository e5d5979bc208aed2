#include "conflie/polynomial.hpp"

#include <algorithm>

#include "conflie/errors.hpp"

namespace conflie {

Poly Poly::constant(std::size_t n_vars, const Scalar& c) {
    Poly p(n_vars);
    p.add_term(std::vector<unsigned>(n_vars, 0), c);
    return p;
}

Poly Poly::variable(std::size_t n_vars, std::size_t index) {
    Poly p(n_vars);
    std::vector<unsigned> e(n_vars, 0);
    e[index] = 1;
    p.add_term(e, Scalar(1));
    return p;
}

void Poly::add_term(const std::vector<unsigned>& exps, const Scalar& c) {
    if (exps.size() != n_) throw dimension_mismatch("term arity");
    if (c == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r(n_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            std::vector<unsigned> e(n_);
            for (std::size_t i = 0; i < n_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

Poly Poly::scaled(const Scalar& c) const {
    Poly r(n_);
    if (c == 0) return r;
    for (const auto& [e, coef] : terms_) r.add_term(e, coef * c);
    return r;
}

Poly Poly::pow(unsigned k) const {
    Poly r = constant(n_, Scalar(1));
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

unsigned Poly::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
        unsigned t = 0;
        for (unsigned x : e) t += x;
        d = std::max(d, t);
    }
    return d;
}

bool Poly::is_homogeneous(unsigned degree) const {
    for (const auto& [e, c] : terms_) {
        unsigned t = 0;
        for (unsigned x : e) t += x;
        if (t != degree) return false;
    }
    return true;
}

Scalar Poly::eval(const Vec& point) const {
    if (point.size() != n_) throw dimension_mismatch("eval arity");
    Scalar s(0);
    for (const auto& [e, c] : terms_) {
        Scalar m = c;
        for (std::size_t i = 0; i < n_; ++i)
            for (unsigned k = 0; k < e[i]; ++k) m *= point[i];
        s += m;
    }
    return s;
}

Poly Poly::homogenized(unsigned degree) const {
    Poly r(n_ + 1);
    for (const auto& [e, c] : terms_) {
        unsigned t = 0;
        for (unsigned x : e) t += x;
        if (t > degree) throw precondition_error("homogenization degree too small");
        std::vector<unsigned> e2 = e;
        e2.push_back(degree - t);
        r.add_term(e2, c);
    }
    return r;
}

Vec Poly::coefficients_of_degree(unsigned d) const {
    std::vector<std::vector<unsigned>> mons = monomials_of_degree(n_, d);
    Vec out(mons.size(), Scalar(0));
    for (std::size_t i = 0; i < mons.size(); ++i) {
        auto it = terms_.find(mons[i]);
        if (it != terms_.end()) out[i] = it->second;
    }
    return out;
}

namespace {
void mono_rec(std::size_t n, unsigned rem, std::size_t idx, std::vector<unsigned>& cur,
              std::vector<std::vector<unsigned>>& out) {
    if (idx + 1 == n) {
        cur[idx] = rem;
        out.push_back(cur);
        return;
    }
    for (unsigned k = rem + 1; k-- > 0;) {
        cur[idx] = k;
        mono_rec(n, rem - k, idx + 1, cur, out);
    }
}
}  // namespace

std::vector<std::vector<unsigned>> monomials_of_degree(std::size_t n, unsigned d) {
    std::vector<std::vector<unsigned>> out;
    if (n == 0) {
        if (d == 0) out.push_back({});
        return out;
    }
    std::vector<unsigned> cur(n, 0);
    mono_rec(n, d, 0, cur, out);
    return out;
}

std::vector<std::vector<unsigned>> monomials_up_to(std::size_t n, unsigned d) {
    std::vector<std::vector<unsigned>> out;
    for (unsigned k = 0; k <= d; ++k) {
        auto part = monomials_of_degree(n, k);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace conflie
