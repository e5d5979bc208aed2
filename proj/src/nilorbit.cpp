#include "conflie/nilorbit.hpp"

#include <algorithm>
#include <cstdlib>

#include "conflie/errors.hpp"
#include "conflie/rng.hpp"

namespace conflie {

std::size_t MultiplicityMatrix::column_sum(std::size_t p) const {
    std::size_t s = 0;
    for (std::size_t q = 0; q < levels; ++q) s += mu[q][p];
    return s;
}

GradedPartition graded_partition_of(const MultiplicityMatrix& m) {
    GradedPartition g;
    g.per_level.resize(m.levels);
    for (std::size_t p = 0; p < m.levels; ++p) {
        std::vector<std::size_t> parts;
        for (std::size_t q = 0; q <= p; ++q)
            for (std::size_t c = 0; c < m.mu[q][p]; ++c) parts.push_back(q + 1);
        g.per_level[p] = normalized(std::move(parts));
        g.lambda = partition_union(g.lambda, g.per_level[p]);
    }
    return g;
}

namespace {

std::vector<Subspace> power_images(const Mat& n_op, std::size_t up_to) {
    std::vector<Subspace> im;
    im.push_back(Subspace::full(n_op.rows()));
    Mat p = n_op;
    for (std::size_t k = 1; k <= up_to; ++k) {
        im.push_back(Subspace::from_rows(p.transpose()));
        p = p * n_op;
    }
    return im;
}

// count[s][p] = number of chains of length exactly s+1 whose kernel vector
// lies in H^p.
std::vector<std::vector<std::size_t>> chain_counts(const Mat& n_op, const Model& m) {
    const std::size_t L = m.levels();
    Subspace ker_n = kernel(n_op);
    std::vector<Subspace> im = power_images(n_op, L);
    std::vector<std::vector<std::size_t>> heads(L + 1,
                                                std::vector<std::size_t>(L, 0));
    for (std::size_t s = 0; s <= L; ++s)
        for (std::size_t p = 0; p < L; ++p)
            heads[s][p] = intersect(intersect(ker_n, im[s]), m.summands[p]).dim();
    std::vector<std::vector<std::size_t>> count(L, std::vector<std::size_t>(L, 0));
    for (std::size_t s = 0; s < L; ++s)
        for (std::size_t p = 0; p < L; ++p) count[s][p] = heads[s][p] - heads[s + 1][p];
    return count;
}

}  // namespace

GradedJordan graded_jordan_plus(const FnVec& t, const Model& m) {
    const std::size_t L = m.levels();
    Mat n_op = op_plus(t, m);
    auto count = chain_counts(n_op, m);
    MultiplicityMatrix mm;
    mm.levels = L;
    mm.mu.assign(L, std::vector<std::size_t>(L, 0));
    for (std::size_t q = 0; q < L; ++q)
        for (std::size_t p = q; p < L; ++p) mm.mu[q][p] = count[q][p];
    GradedJordan out{graded_partition_of(mm), mm};
    if (out.partition.lambda != nilpotent_partition(n_op))
        throw invariant_violation("graded heads disagree with the rank-sequence Jordan type");
    return out;
}

MinusJordan graded_jordan_minus(const FnVec& t, const Model& m) {
    const std::size_t L = m.levels();
    Mat n_op = op_minus(t, m);
    auto count = chain_counts(n_op, m);
    MinusJordan out;
    out.lambda = nilpotent_partition(n_op);
    out.mu_prime.assign(L, std::vector<std::size_t>(L, 0));
    // a chain of length s+1 sits at filtration index q = l-1-s
    for (std::size_t s = 0; s < L; ++s)
        for (std::size_t p = 0; p < L; ++p)
            if (count[s][p] != 0) out.mu_prime[L - 1 - s][p] = count[s][p];
    return out;
}

bool reflection_identity_holds(const MultiplicityMatrix& plus,
                               const std::vector<std::vector<std::size_t>>& minus) {
    const std::size_t L = plus.levels;
    for (std::size_t q = 0; q < L; ++q)
        for (std::size_t p = 0; p < L; ++p) {
            std::size_t expected = 0;
            if (p <= q) expected = plus.mu[L - 1 - q][L - 1 - q + p];
            if (minus[q][p] != expected) return false;
        }
    return true;
}

std::vector<Chain> graded_jordan_chains(const Mat& n_op, const Model& m, int degree) {
    const std::size_t n = m.n;
    const std::size_t L = m.levels();
    std::vector<Subspace> ker_pow;
    ker_pow.push_back(Subspace(n));  // ker N^0 = 0
    Mat p = n_op;
    std::size_t nil_index = 0;
    for (std::size_t k = 1; k <= n + 1; ++k) {
        ker_pow.push_back(kernel(p));
        if (ker_pow.back().dim() == n) {
            nil_index = k;
            break;
        }
        p = p * n_op;
    }
    if (nil_index == 0) throw not_nilpotent("graded chains of a non-nilpotent operator");

    std::vector<Chain> chains;
    SpanBuilder avoid(n);
    for (std::size_t k = nil_index; k >= 1; --k) {
        SpanBuilder occupied(n);
        for (std::size_t i = 0; i < ker_pow[k - 1].dim(); ++i)
            occupied.insert(ker_pow[k - 1].basis_vector(i));
        for (const auto& c : chains)
            for (std::size_t j = c.length >= k ? c.length - k : 0; j < c.length; ++j)
                occupied.insert(c.vectors[j]);
        for (std::size_t lvl = 0; lvl < L; ++lvl) {
            Subspace candidates = intersect(ker_pow[k], m.summands[lvl]);
            for (std::size_t i = 0; i < candidates.dim(); ++i) {
                FnVec v = candidates.basis_vector(i);
                if (!occupied.insert(v)) continue;
                Chain c;
                c.head = v;
                c.head_level = lvl;
                c.length = k;
                c.vectors.push_back(v);
                for (std::size_t j = 1; j < k; ++j) c.vectors.push_back(n_op.apply(c.vectors.back()));
                if (is_zero_vec(c.vectors.back()))
                    throw invariant_violation("graded chain shorter than expected");
                chains.push_back(std::move(c));
            }
        }
    }
    std::size_t boxes = 0;
    for (const auto& c : chains) boxes += c.length;
    if (boxes != n) throw invariant_violation("graded chains do not exhaust the space");
    // level bookkeeping: vectors descend (degree -1) or ascend (degree +1)
    for (const auto& c : chains) {
        long last = static_cast<long>(c.head_level) + degree * static_cast<long>(c.length - 1);
        if (last < 0 || last >= static_cast<long>(L))
            throw degree_gap("chain leaves the level range");
    }
    std::stable_sort(chains.begin(), chains.end(),
                     [](const Chain& a, const Chain& b) { return a.length > b.length; });
    return chains;
}

Bigrading bigrading(const FnVec& t, const Model& m) {
    const std::size_t L = m.levels();
    GradedJordan gj = graded_jordan_plus(t, m);
    Bigrading bg;
    bg.levels = L;
    bg.dim_pn.assign(L, std::vector<std::size_t>(2 * L - 1, 0));
    for (std::size_t q = 0; q < L; ++q)
        for (std::size_t p = q; p < L; ++p) {
            std::size_t mult = gj.matrix.mu[q][p];
            if (mult == 0) continue;
            for (std::size_t j = 0; j <= q; ++j)
                bg.dim_pn[p - q + j][L - 1 - q + 2 * j] += mult;
        }
    bg.weight_dims.assign(2 * L - 1, 0);
    for (std::size_t p = 0; p < L; ++p)
        for (std::size_t nw = 0; nw < 2 * L - 1; ++nw) bg.weight_dims[nw] += bg.dim_pn[p][nw];
    bg.filtration_ranks.assign(2 * L - 1, 0);
    std::size_t acc = 0;
    for (std::size_t nw = 2 * L - 1; nw-- > 0;) {
        acc += bg.weight_dims[nw];
        bg.filtration_ranks[nw] = acc;
    }
    // range check n in [p, p+l-1]
    for (std::size_t p = 0; p < L; ++p)
        for (std::size_t nw = 0; nw < 2 * L - 1; ++nw)
            if (bg.dim_pn[p][nw] != 0 && (nw < p || nw > p + L - 1))
                throw invariant_violation("bigraded piece outside the admissible square");
    return bg;
}

std::vector<Subspace> weight_filtration(const Mat& n_op, std::size_t levels, int degree) {
    const std::size_t n = n_op.rows();
    std::vector<Subspace> ker_pow{Subspace(n)};
    std::vector<Subspace> im_pow{Subspace::full(n)};
    Mat p = n_op;
    for (std::size_t k = 1; k <= levels + 1; ++k) {
        ker_pow.push_back(kernel(p));
        im_pow.push_back(Subspace::from_rows(p.transpose()));
        p = p * n_op;
    }
    auto ker_at = [&](std::size_t k) { return k < ker_pow.size() ? ker_pow[k] : Subspace::full(n); };
    auto im_at = [&](std::size_t k) { return k < im_pow.size() ? im_pow[k] : Subspace(n); };

    std::vector<Subspace> w;
    for (std::size_t shifted = 0; shifted < 2 * levels; ++shifted) {
        long cw = static_cast<long>(shifted) - static_cast<long>(levels - 1);
        Subspace acc(n);
        for (long j = std::max(0L, degree > 0 ? -cw : cw); j <= static_cast<long>(levels); ++j) {
            long e = degree > 0 ? j + cw : j - cw;
            if (e < 0) continue;
            acc = sum(acc, intersect(ker_at(static_cast<std::size_t>(j + 1)),
                                     im_at(static_cast<std::size_t>(e))));
        }
        w.push_back(acc);
    }
    return w;
}

bool two_filtration_orthogonality(const FnVec& t, const Model& m) {
    const std::size_t L = m.levels();
    std::vector<Subspace> w_plus = weight_filtration(op_plus(t, m), L, +1);
    std::vector<Subspace> w_minus = weight_filtration(op_minus(t, m), L, -1);
    for (std::size_t nw = 0; nw + 1 < 2 * L; ++nw)
        if (orth_complement(w_plus[nw + 1], m.form) != w_minus[nw]) return false;
    return true;
}

Truncation truncate(const FnVec& t, const Model& ambient) {
    Truncation tr;
    Mat n_op = op_minus(t, ambient);
    tr.chains = graded_jordan_chains(n_op, ambient, -1);
    std::vector<std::size_t> lam, lam_hat;
    struct Row {
        std::size_t chain;
        std::size_t kept;
    };
    std::vector<Row> rows;
    for (std::size_t i = 0; i < tr.chains.size(); ++i) {
        const Chain& c = tr.chains[i];
        lam.push_back(c.length);
        std::size_t bottom = c.head_level - (c.length - 1);
        std::size_t kept = bottom == 0 ? c.length - 1 : c.length;
        tr.boxes_removed += c.length - kept;
        if (kept > 0) rows.push_back({i, kept});
    }
    tr.lambda = normalized(std::move(lam));
    std::stable_sort(rows.begin(), rows.end(),
                     [](const Row& a, const Row& b) { return a.kept > b.kept; });
    for (const auto& r : rows) {
        lam_hat.push_back(r.kept);
        tr.kept.push_back(r.chain);
    }
    tr.lambda_hat = lam_hat;
    if (tr.boxes_removed != ambient.summands[0].dim())
        throw invariant_violation("level-0 boxes removed differ from the first summand dimension");
    return tr;
}

Partition forget_grading(const MultiplicityMatrix& m) {
    std::vector<std::size_t> parts;
    for (std::size_t s = 0; s < m.levels; ++s) {
        std::size_t row_sum = 0;
        for (std::size_t p = s; p < m.levels; ++p) row_sum += m.mu[s][p];
        for (std::size_t c = 0; c < row_sum; ++c) parts.push_back(s + 1);
    }
    return normalized(std::move(parts));
}

StrataReport sample_strata(const Model& reduced, std::size_t n_samples, std::uint64_t seed) {
    if (n_samples == 0) throw precondition_error("n_samples must be positive");
    Rng rng(seed);
    StrataReport rep;
    FnVec one(reduced.n, Scalar(1));
    Subspace constants = Subspace::span_of({one}, reduced.n);
    std::size_t done = 0;
    while (done < n_samples) {
        FnVec t(reduced.n, Scalar(0));
        for (std::size_t i = 0; i < reduced.panel.dim(); ++i) {
            long c = rng.integer(-9, 9);
            if (c == 0) continue;
            FnVec b = reduced.panel.basis_vector(i);
            for (std::size_t z = 0; z < reduced.n; ++z) t[z] += Scalar(c) * b[z];
        }
        if (constants.contains(t)) continue;
        ++done;
        GradedJordan gj = graded_jordan_plus(t, reduced);
        bool found = false;
        for (auto& s : rep.observed)
            if (s.matrix == gj.matrix) {
                ++s.count;
                found = true;
                break;
            }
        if (!found) rep.observed.push_back({gj.matrix, gj.partition, 1});
    }
    // dominance-maximal observed partition, majority-attained
    std::size_t best = 0;
    bool have_max = false;
    for (std::size_t i = 0; i < rep.observed.size(); ++i) {
        bool dominates_all = true;
        for (std::size_t j = 0; j < rep.observed.size(); ++j)
            if (i != j &&
                !dominates(rep.observed[i].partition.lambda, rep.observed[j].partition.lambda)) {
                dominates_all = false;
                break;
            }
        if (dominates_all) {
            if (!have_max || rep.observed[i].count > rep.observed[best].count) best = i;
            have_max = true;
        }
    }
    if (!have_max) {
        rep.ambiguous = true;
        for (std::size_t i = 1; i < rep.observed.size(); ++i)
            if (rep.observed[i].count > rep.observed[best].count) best = i;
    } else if (2 * rep.observed[best].count < n_samples) {
        rep.ambiguous = true;
    }
    rep.generic_index = best;
    rep.generic_forgotten = forget_grading(rep.observed[best].matrix);
    for (const auto& s : rep.observed) {
        Partition f = forget_grading(s.matrix);
        if (std::find(rep.forgotten_set.begin(), rep.forgotten_set.end(), f) ==
            rep.forgotten_set.end())
            rep.forgotten_set.push_back(std::move(f));
    }
    return rep;
}

LoopData loop_exponents(const FnVec& t, const Model& m) {
    const std::size_t L = m.levels();
    GradedJordan gj = graded_jordan_plus(t, m);
    LoopData out;
    out.traces.assign(L, 0);
    for (std::size_t q = 0; q < L; ++q)
        for (std::size_t top = q; top < L; ++top) {
            long mult = static_cast<long>(gj.matrix.mu[q][top]);
            if (mult == 0) continue;
            for (std::size_t j = 0; j <= q; ++j) {
                std::size_t lvl = top - q + j;
                long w = 2 * (static_cast<long>(lvl) - static_cast<long>(top)) +
                         static_cast<long>(q);
                out.traces[lvl] += mult * w;
            }
        }
    long total = 0;
    for (long x : out.traces) total += x;
    if (total != 0) throw invariant_violation("graded traces do not sum to zero");
    long hmax = 0;
    for (std::size_t p = 0; p < L; ++p)
        hmax = std::max(hmax, static_cast<long>(m.summands[p].dim()));
    for (std::size_t p = 0; p + 1 < L; ++p) {
        long a = out.traces[p + 1] - out.traces[p];
        if (std::labs(a) > 2 * hmax * static_cast<long>(L))
            throw invariant_violation("loop exponent exceeds the graded-trace bound");
        out.exponents.push_back(a);
    }
    return out;
}

}  // namespace conflie
