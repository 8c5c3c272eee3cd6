#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "shiftedkeys/errors.hpp"

namespace shiftedkeys {

using Cell = std::pair<int, int>; // (row, col), 1-based
using CellSet = std::set<Cell>;

/// Weak composition: finitely supported sequence of nonnegative integers.
/// Canonical form strips trailing zeros; equality and hashing use it.
class WeakComposition {
public:
    WeakComposition() = default;
    WeakComposition(std::initializer_list<int> parts);
    explicit WeakComposition(std::vector<int> parts);

    /// Parse "1,0,2,1"; "" is the empty composition.
    static WeakComposition parse(const std::string& s);

    /// Entry at 1-based index i (0 beyond the support).
    int operator[](int i) const;
    /// Index of the last nonzero part (0 when empty).
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    int max_part() const;
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }

    /// Copy with entries i and i+1 exchanged.
    WeakComposition swapped(int i) const;
    /// Copy with entry i (1-based) incremented by d.
    WeakComposition bumped(int i, int d) const;
    bool is_partition() const;

    friend bool operator==(const WeakComposition& a, const WeakComposition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const WeakComposition& a, const WeakComposition& b) { return !(a == b); }
    friend bool operator<(const WeakComposition& a, const WeakComposition& b) { return a.parts_ < b.parts_; }

    /// "1,0,2,1" (no padding); "" for empty.
    std::string str() const;

private:
    std::vector<int> parts_;
};

/// Lexicographic comparison after padding to a common length.
bool lex_less(const WeakComposition& a, const WeakComposition& b);

/// Weakly decreasing weak composition, with Young-diagram geometry.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(const WeakComposition& w);
    explicit Partition(std::vector<int> parts);

    static Partition parse(const std::string& s);
    /// Staircase (n-1, n-2, ..., 1).
    static Partition staircase(int n);

    int operator[](int i) const { return w_[i]; }
    int length() const { return w_.length(); }
    int size() const { return w_.size(); }
    bool empty() const { return w_.empty(); }
    const WeakComposition& as_composition() const { return w_; }
    const std::vector<int>& parts() const { return w_.parts(); }

    Partition transpose() const;
    CellSet cells() const;
    bool contains_cell(int i, int j) const { return j >= 1 && j <= w_[i]; }

    /// Nonzero parts pairwise distinct.
    bool is_strict() const;
    /// Equal to its own transpose.
    bool is_symmetric() const;
    /// Symmetric, and the two diagonal-corner conditions hold:
    /// a removable (i,i) forbids an addable (i,i+1); an addable (i,i)
    /// forbids a removable (i,i-1).
    bool is_skew_symmetric() const;

    std::vector<Cell> addable_corners() const;
    std::vector<Cell> removable_corners() const;

    /// Number of diagonal cells (i,i) in the Young diagram.
    int diagonal_cells() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.w_ == b.w_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) { return a.w_ < b.w_; }

    std::string str() const { return w_.str(); }

private:
    WeakComposition w_;
};

/// The unique partition rearranging the parts of alpha.
Partition sort_to_partition(const WeakComposition& alpha);

bool is_symmetric(const WeakComposition& alpha);
bool is_skew_symmetric(const WeakComposition& alpha);

/// Strict partition with nonzero parts { lambda_i - i } inter P, sorted
/// decreasingly.  Requires lambda symmetric.
Partition half_lt(const Partition& lambda);
/// Strict partition with nonzero parts { lambda_i - (i-1) } inter P.
Partition half_le(const Partition& lambda);

/// Unique symmetric partition lambda with half_le(lambda) = mu.
Partition symmetric_closure_half_le(const Partition& mu);
/// Unique skew-symmetric partition lambda with half_lt(lambda) = mu.
Partition skew_symmetric_closure_half_lt(const Partition& mu);

/// For symmetric lambda, the unique skew-symmetric partition differing from
/// it by one diagonal corner (identity when lambda is already skew-symmetric).
Partition skew_symmetric_partner(const Partition& lambda);

/// Counts of skew-symmetric partitions of each size 0..n.
std::vector<long long> count_skew_symmetric(int n);

} // namespace shiftedkeys
