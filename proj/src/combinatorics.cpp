#include "alglab/combinatorics.hpp"

#include <cassert>

namespace alglab {

long binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    long r = 1;
    for (int i = 0; i < k; ++i)
        r = r * (n - i) / (i + 1);
    return r;
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n)
        return out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i)
        cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j)
            cur[j] = cur[j - 1] + 1;
    }
    return out;
}

int sort_sign(std::vector<int>& idx) {
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i) {
        std::size_t j = i;
        while (j > 0 && idx[j - 1] > idx[j]) {
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
            --j;
        }
        if (j > 0 && idx[j - 1] == idx[j])
            return 0;
    }
    return sign;
}

SubsetTable::SubsetTable(int n, int k) : n_(n), k_(k), subsets_(k_subsets(n, k)) {
    assert(n >= 0 && n < 31);
    rank_by_mask_.assign(1u << n, -1);
    for (std::size_t r = 0; r < subsets_.size(); ++r) {
        unsigned mask = 0;
        for (int x : subsets_[r])
            mask |= 1u << x;
        rank_by_mask_[mask] = static_cast<int>(r);
    }
}

int SubsetTable::rank_of_sorted(const std::vector<int>& sorted) const {
    unsigned mask = 0;
    for (int x : sorted)
        mask |= 1u << x;
    return rank_by_mask_[mask];
}

} // namespace alglab
