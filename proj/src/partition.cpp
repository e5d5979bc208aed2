#include "conflie/partition.hpp"

#include <algorithm>
#include <functional>

namespace conflie {

std::size_t weight(const Partition& p) {
    std::size_t w = 0;
    for (auto x : p) w += x;
    return w;
}

Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    Partition c(p[0], 0);
    for (auto part : p)
        for (std::size_t j = 0; j < part; ++j) ++c[j];
    return c;
}

Partition normalized(std::vector<std::size_t> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return parts;
}

Partition partition_union(const Partition& a, const Partition& b) {
    Partition u = a;
    u.insert(u.end(), b.begin(), b.end());
    return normalized(std::move(u));
}

bool dominates(const Partition& a, const Partition& b) {
    std::size_t sa = 0, sb = 0;
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa < sb) return false;
    }
    return sa == sb;
}

std::vector<Partition> partitions_of(std::size_t n) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t rem, std::size_t maxpart) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (std::size_t k = std::min(rem, maxpart); k >= 1; --k) {
            cur.push_back(k);
            rec(rem - k, k);
            cur.pop_back();
        }
    };
    rec(n, n == 0 ? 1 : n);
    return out;
}

std::size_t part_multiplicity(const Partition& p, std::size_t m) {
    std::size_t c = 0;
    for (auto x : p) c += (x == m);
    return c;
}

}  // namespace conflie
