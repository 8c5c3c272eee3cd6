#pragma once

#include <utility>

#include "shiftedkeys/compositions.hpp"
#include "shiftedkeys/permutations.hpp"

namespace shiftedkeys {

/// Transpose-invariant cell set D^sym_alpha = {(u(i),u(j)) : (i,j) in D_lambda}
/// for u = u(alpha), lambda = lambda(alpha).
class SymmetricDiagram {
public:
    SymmetricDiagram() = default;
    explicit SymmetricDiagram(const WeakComposition& alpha);

    const CellSet& cells() const { return cells_; }
    bool contains(int i, int j) const { return cells_.count({i, j}) > 0; }
    /// Row counts, which recover alpha.
    WeakComposition row_counts() const;
    int diagonal_cells() const;

private:
    CellSet cells_;
};

enum class CountKind { Rho, Gamma, RhoStrict, GammaStrict };

/// Sub-diagonal row/column counts of a symmetric diagram.
struct CountVector {
    CountKind kind;
    WeakComposition entries;
};

/// (rho, gamma) when strict = false: rho_j = #{(a,b) : j = a >= b},
/// gamma_j = #{(a,b) : a >= b = j}.  strict = true uses a > b.
std::pair<CountVector, CountVector> counts(const WeakComposition& alpha, bool strict);

/// Number of diagonal cells of D^sym_alpha.
int diag(const WeakComposition& alpha);

/// |D^Sp(alpha)| = number of strictly sub-diagonal cells.
int d_sp_size(const WeakComposition& alpha);

/// Invert `counts` by stripping maximal hooks; validates the result by
/// recomputing the counts and fails loudly on inconsistent input.
WeakComposition reconstruct_from_counts(const CountVector& rho, const CountVector& gamma, bool strict);

/// For symmetric alpha with alpha_1 = 0: the unique skew-symmetric composition
/// eta(alpha) obtained by adjoining a first row/column hook through the
/// diagonal cells (plus the corner cell when needed).
WeakComposition eta(const WeakComposition& alpha);

} // namespace shiftedkeys
