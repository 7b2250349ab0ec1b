#pragma once

#include <vector>

namespace alglab {

long binomial(int n, int k);

/// All k-element subsets of {0,...,n-1} in lexicographic order.
std::vector<std::vector<int>> k_subsets(int n, int k);

/// Sorts the indices in place. Returns 0 if any index repeats, otherwise the
/// sign of the sorting permutation.
int sort_sign(std::vector<int>& idx);

/// Rank lookup for the k-subsets of a fixed (n, k), by bitmask.
class SubsetTable {
public:
    SubsetTable(int n, int k);

    int n() const { return n_; }
    int k() const { return k_; }
    int count() const { return static_cast<int>(subsets_.size()); }
    const std::vector<int>& subset(int rank) const { return subsets_[rank]; }
    const std::vector<std::vector<int>>& subsets() const { return subsets_; }

    int rank_of_mask(unsigned mask) const { return rank_by_mask_[mask]; }
    int rank_of_sorted(const std::vector<int>& sorted) const;

private:
    int n_;
    int k_;
    std::vector<std::vector<int>> subsets_;
    std::vector<int> rank_by_mask_;
};

} // namespace alglab
