#include "conflie/springer.hpp"

#include <algorithm>
#include <functional>

#include "conflie/errors.hpp"

namespace conflie {

QPoly qpoly_trim(QPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

long qpoly_eval_one(const QPoly& p) {
    long s = 0;
    for (long c : p) s += c;
    return s;
}

std::size_t orbit_dim(const Partition& mu, std::size_t n) {
    if (weight(mu) != n) throw precondition_error("orbit_dim: weight mismatch");
    std::size_t s = 0;
    for (std::size_t k = 0; k < mu.size(); ++k) s += (2 * k + 1) * mu[k];
    return n * n - s;
}

std::size_t springer_fibre_dim(const Partition& mu) {
    std::size_t s = 0;
    for (std::size_t k = 0; k < mu.size(); ++k) s += k * mu[k];
    return s;
}

std::vector<std::vector<std::vector<std::size_t>>> ssyt(const Partition& lambda,
                                                        const Partition& mu) {
    std::vector<std::vector<std::vector<std::size_t>>> out;
    if (weight(lambda) != weight(mu)) throw precondition_error("ssyt: weight mismatch");
    const std::size_t nrows = lambda.size();
    const std::size_t nletters = mu.size();
    std::vector<std::vector<std::size_t>> t(nrows);
    for (std::size_t i = 0; i < nrows; ++i) t[i].assign(lambda[i], 0);
    std::vector<std::size_t> used(nletters + 1, 0);

    // fill cells row by row, left to right; rows weakly increase, columns
    // strictly increase
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t j) {
        if (i == nrows) {
            out.push_back(t);
            return;
        }
        std::size_t ni = i, nj = j + 1;
        if (nj == lambda[i]) {
            ni = i + 1;
            nj = 0;
        }
        std::size_t lo = 1;
        if (j > 0) lo = std::max(lo, t[i][j - 1]);
        if (i > 0 && j < lambda[i - 1]) lo = std::max(lo, t[i - 1][j] + 1);
        for (std::size_t v = lo; v <= nletters; ++v) {
            if (used[v] == mu[v - 1]) continue;
            ++used[v];
            t[i][j] = v;
            rec(ni, nj);
            --used[v];
        }
    };
    if (nrows == 0) {
        out.push_back({});
        return out;
    }
    rec(0, 0);
    return out;
}

std::size_t kostka_number(const Partition& lambda, const Partition& mu) {
    return ssyt(lambda, mu).size();
}

namespace {

// Reading word: rows bottom to top, each left to right.
std::vector<std::size_t> reading_word(const std::vector<std::vector<std::size_t>>& t) {
    std::vector<std::size_t> w;
    for (std::size_t i = t.size(); i-- > 0;)
        for (std::size_t v : t[i]) w.push_back(v);
    return w;
}

// Charge of a standard subword given by positions (in word order) of the
// letters 1..k: index(1) = 0, index(a+1) = index(a) + 1 when a+1 sits to the
// right of a.
std::size_t standard_charge(const std::vector<std::size_t>& pos_of_letter) {
    std::size_t charge = 0, idx = 0;
    for (std::size_t a = 1; a < pos_of_letter.size(); ++a) {
        if (pos_of_letter[a] > pos_of_letter[a - 1]) ++idx;
        charge += idx;
    }
    return charge;
}

std::size_t word_charge(std::vector<std::size_t> w) {
    std::size_t total = 0;
    while (!w.empty()) {
        std::size_t maxletter = *std::max_element(w.begin(), w.end());
        std::vector<bool> taken(w.size(), false);
        std::vector<std::size_t> pos;
        // rightmost 1, then each next letter scanning leftward, cyclically
        std::size_t cur = w.size();
        for (std::size_t i = w.size(); i-- > 0;)
            if (w[i] == 1) {
                cur = i;
                break;
            }
        if (cur == w.size()) throw invariant_violation("word content is not a partition");
        taken[cur] = true;
        pos.push_back(cur);
        for (std::size_t letter = 2; letter <= maxletter; ++letter) {
            std::size_t found = w.size();
            for (std::size_t step = 1; step <= w.size(); ++step) {
                std::size_t i = (cur + w.size() - step) % w.size();
                if (!taken[i] && w[i] == letter) {
                    found = i;
                    break;
                }
            }
            if (found == w.size()) break;  // subword ends early
            taken[found] = true;
            pos.push_back(found);
            cur = found;
        }
        total += standard_charge(pos);
        std::vector<std::size_t> rest;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (!taken[i]) rest.push_back(w[i]);
        w = std::move(rest);
    }
    return total;
}

}  // namespace

QPoly kostka_foulkes(const Partition& lambda, const Partition& mu) {
    if (weight(lambda) != weight(mu)) throw precondition_error("kostka_foulkes: weight mismatch");
    QPoly p;
    for (const auto& t : ssyt(lambda, mu)) {
        std::size_t c = word_charge(reading_word(t));
        if (p.size() <= c) p.resize(c + 1, 0);
        ++p[c];
    }
    return qpoly_trim(p);
}

SymFunPoly macdonald_value(const Partition& mu, std::size_t n) {
    if (weight(mu) != n) throw precondition_error("macdonald_value: weight mismatch");
    SymFunPoly out;
    out.n = n;
    const std::size_t b = springer_fibre_dim(mu);
    for (const auto& lambda : partitions_of(n)) {
        QPoly k = kostka_foulkes(lambda, mu);
        if (k.empty()) continue;
        QPoly graded(b + 1, 0);
        for (std::size_t c = 0; c < k.size(); ++c) {
            if (k[c] == 0) continue;
            if (c > b) throw invariant_violation("charge above the fibre dimension");
            graded[b - c] += k[c];
        }
        out.terms.emplace_back(lambda, qpoly_trim(graded));
    }
    return out;
}

}  // namespace conflie
