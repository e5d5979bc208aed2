#include "conflie/generators.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "conflie/errors.hpp"

namespace conflie {

namespace {

Configuration labeled_points(std::size_t d, const std::string& prefix) {
    Configuration cfg;
    for (std::size_t i = 0; i < d; ++i) cfg.labels.push_back(prefix + std::to_string(i + 1));
    return cfg;
}

// all (r+1)x(r+1) minors of the d x (r+1) matrix must be nonzero
bool maximal_minors_nonzero(const Mat& m) {
    const std::size_t d = m.rows(), k = m.cols();
    std::vector<std::size_t> idx(k);
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
        if (pos == k) {
            Mat sub(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = m.at(idx[i], j);
            return rank(sub) == k;
        }
        for (std::size_t i = from; i + (k - pos) <= d; ++i) {
            idx[pos] = i;
            if (!rec(pos + 1, i + 1)) return false;
        }
        return true;
    };
    return rec(0, 0);
}

}  // namespace

Instance gen_general(std::size_t d, std::size_t r, std::uint64_t seed) {
    if (r < 1 || d < r + 2) throw precondition_error("gen general: need r >= 1 and d >= r+2");
    Rng rng(seed);
    const long box = 25;
    for (int attempt = 0; attempt < 4096; ++attempt) {
        std::vector<Vec> coords(d, Vec(r));
        Mat aff(d, r + 1);
        for (std::size_t z = 0; z < d; ++z) {
            aff.at(z, 0) = 1;
            for (std::size_t j = 0; j < r; ++j) {
                coords[z][j] = Scalar(rng.integer(-box, box));
                aff.at(z, j + 1) = coords[z][j];
            }
        }
        if (!maximal_minors_nonzero(aff)) continue;
        Configuration cfg = labeled_points(d, "z");
        cfg.coords = coords;
        Instance inst{Panel(cfg, Subspace::from_rows(aff.transpose())), seed, "general"};
        return inst;
    }
    throw precondition_error("gen general: rejection budget exhausted");
}

Instance gen_chain(std::size_t d, std::uint64_t seed) {
    if (d < 3) throw precondition_error("gen chain: need d >= 3");
    Rng rng(seed);
    std::set<long> vals;
    while (vals.size() < d) vals.insert(rng.integer(-3 * (long)d, 3 * (long)d));
    Mat rows(2, d);
    std::size_t z = 0;
    for (long v : vals) {
        rows.at(0, z) = 1;
        rows.at(1, z) = Scalar(v);
        ++z;
    }
    Configuration cfg = labeled_points(d, "z");
    return Instance{Panel(cfg, Subspace::from_rows(rows)), seed, "chain"};
}

Instance gen_blocks(std::size_t d, std::size_t n_blocks, std::uint64_t seed) {
    if (n_blocks < 2 || n_blocks > d) throw precondition_error("gen blocks: need 2 <= blocks <= d");
    Rng rng(seed);
    // random positive sizes summing to d
    std::vector<std::size_t> sizes(n_blocks, 1);
    for (std::size_t extra = d - n_blocks; extra > 0; --extra)
        ++sizes[static_cast<std::size_t>(rng.integer(0, (long)n_blocks - 1))];
    Mat rows(n_blocks, d);
    std::size_t z = 0;
    for (std::size_t b = 0; b < n_blocks; ++b)
        for (std::size_t i = 0; i < sizes[b]; ++i) rows.at(b, z++) = 1;
    Configuration cfg = labeled_points(d, "z");
    return Instance{Panel(cfg, Subspace::from_rows(rows)), seed, "blocks"};
}

Instance gen_rnc(std::size_t m, std::uint64_t seed) {
    if (m < 2) throw precondition_error("gen rnc: need m >= 2");
    const std::size_t d = 2 * m;
    Rng rng(seed);
    std::set<long> params;
    while (params.size() < d) params.insert(rng.integer(-3 * (long)d, 3 * (long)d));
    Mat rows(m, d);
    std::size_t z = 0;
    for (long s : params) {
        Scalar pw(1);
        for (std::size_t k = 0; k < m; ++k) {
            rows.at(k, z) = pw;
            pw *= Scalar(s);
        }
        ++z;
    }
    Configuration cfg = labeled_points(d, "z");
    cfg.coords = std::vector<Vec>();
    for (long s : params) cfg.coords->push_back(Vec{Scalar(s)});
    return Instance{Panel(cfg, Subspace::from_rows(rows)), seed, "rnc"};
}

Instance gen_union(const Instance& a, const Instance& b) {
    const std::size_t da = a.panel.degree(), db = b.panel.degree();
    Configuration cfg;
    for (const auto& l : a.panel.config.labels) cfg.labels.push_back("a:" + l);
    for (const auto& l : b.panel.config.labels) cfg.labels.push_back("b:" + l);
    Mat rows(a.panel.dim() + b.panel.dim(), da + db);
    for (std::size_t i = 0; i < a.panel.dim(); ++i)
        for (std::size_t z = 0; z < da; ++z) rows.at(i, z) = a.panel.basis.basis().at(i, z);
    for (std::size_t i = 0; i < b.panel.dim(); ++i)
        for (std::size_t z = 0; z < db; ++z)
            rows.at(a.panel.dim() + i, da + z) = b.panel.basis.basis().at(i, z);
    return Instance{Panel(cfg, Subspace::from_rows(rows)), a.seed, "union"};
}

Instance generate(const std::string& kind, std::size_t d, std::size_t r, std::size_t m,
                  std::size_t n_blocks, std::uint64_t seed) {
    if (kind == "general") return gen_general(d, r, seed);
    if (kind == "chain") return gen_chain(d, seed);
    if (kind == "blocks") return gen_blocks(d, n_blocks, seed);
    if (kind == "rnc") return gen_rnc(m, seed);
    if (kind == "union") {
        Instance a = gen_general(d, r, seed);
        Instance b = gen_blocks(std::max<std::size_t>(4, d / 2), 2, seed + 1);
        return gen_union(a, b);
    }
    throw precondition_error("unknown generator kind '" + kind + "'");
}

}  // namespace conflie
