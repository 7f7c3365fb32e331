#pragma once

#include <span>
#include <vector>

namespace specrisk {

// Loss values plus a maintained argsort. perm maps rank -> sample index and
// is kept consistent with a stable sort (ties broken by index) across
// single-entry updates, which bubble only the displaced element.
class SortedLossTable {
  public:
    explicit SortedLossTable(std::vector<double> values);

    int size() const { return static_cast<int>(values_.size()); }
    std::span<const double> values() const { return values_; }
    std::span<const int> perm() const { return perm_; }

    double value(int i) const { return values_[i]; }
    int index_at_rank(int r) const { return perm_[r]; }
    int rank_of(int i) const { return rank_[i]; }
    double value_at_rank(int r) const { return values_[perm_[r]]; }

    // Sets values[j] = v and re-sorts by adjacent swaps. Returns the number
    // of swaps performed.
    int update(int j, double v);

  private:
    bool precedes(int a, int b) const {
        return values_[a] < values_[b] || (values_[a] == values_[b] && a < b);
    }

    std::vector<double> values_;
    std::vector<int> perm_;  // rank -> index
    std::vector<int> rank_;  // index -> rank
};

SortedLossTable build_sorted_table(std::vector<double> values);

}  // namespace specrisk
