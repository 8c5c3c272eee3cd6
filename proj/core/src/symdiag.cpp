#include "shiftedkeys/symdiag.hpp"

#include <algorithm>

namespace shiftedkeys {

SymmetricDiagram::SymmetricDiagram(const WeakComposition& alpha) {
    if (!is_symmetric(alpha)) throw DomainError("D^sym needs a symmetric composition, got " + alpha.str());
    Partition lam = sort_to_partition(alpha);
    Permutation u = sorting_permutation(alpha);
    for (const auto& [i, j] : lam.cells()) cells_.emplace(u(i), u(j));
}

WeakComposition SymmetricDiagram::row_counts() const {
    int maxrow = 0;
    for (const auto& [i, j] : cells_) maxrow = std::max(maxrow, i);
    std::vector<int> r(static_cast<std::size_t>(maxrow), 0);
    for (const auto& [i, j] : cells_) ++r[static_cast<std::size_t>(i) - 1];
    return WeakComposition(std::move(r));
}

int SymmetricDiagram::diagonal_cells() const {
    int h = 0;
    for (const auto& [i, j] : cells_)
        if (i == j) ++h;
    return h;
}

std::pair<CountVector, CountVector> counts(const WeakComposition& alpha, bool strict) {
    SymmetricDiagram d(alpha);
    int n = 0;
    for (const auto& [i, j] : d.cells()) n = std::max({n, i, j});
    std::vector<int> rho(static_cast<std::size_t>(n), 0), gam(static_cast<std::size_t>(n), 0);
    for (const auto& [a, b] : d.cells()) {
        bool below = strict ? a > b : a >= b;
        if (below) {
            ++rho[static_cast<std::size_t>(a) - 1];
            ++gam[static_cast<std::size_t>(b) - 1];
        }
    }
    CountVector r{strict ? CountKind::RhoStrict : CountKind::Rho, WeakComposition(std::move(rho))};
    CountVector g{strict ? CountKind::GammaStrict : CountKind::Gamma, WeakComposition(std::move(gam))};
    return {r, g};
}

int diag(const WeakComposition& alpha) {
    if (!is_symmetric(alpha)) throw DomainError("diag needs a symmetric composition");
    return sort_to_partition(alpha).diagonal_cells();
}

int d_sp_size(const WeakComposition& alpha) {
    Partition lam = sort_to_partition(alpha);
    return (lam.size() - lam.diagonal_cells()) / 2;
}

namespace {

WeakComposition reconstruct_rec(const WeakComposition& rho, const WeakComposition& gam, bool strict) {
    int n = std::max(rho.length(), gam.length());
    if (n == 0) return WeakComposition{};
    // v_i = rho_i + gamma_i -+ 1 equals alpha_i on rows with a diagonal cell
    // and alpha_i - 1 otherwise; its maximum is attained exactly on the rows
    // where alpha is maximal.
    int adj = strict ? 1 : -1;
    int best = 0;
    std::vector<int> I;
    for (int i = 1; i <= n; ++i) {
        if (rho[i] + gam[i] == 0) continue;
        int v = rho[i] + gam[i] + adj;
        if (v > best) {
            best = v;
            I.clear();
        }
        if (v == best) I.push_back(i);
    }
    if (I.empty()) throw DomainError("count vectors are inconsistent (no maximal row)");
    int m = best; // the maximal part of alpha
    auto inI = [&](int i) { return std::binary_search(I.begin(), I.end(), i); };
    std::vector<int> rho2(static_cast<std::size_t>(n), 0), gam2(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        if (inI(i)) continue;
        if (rho[i] != 0) {
            int below = static_cast<int>(std::lower_bound(I.begin(), I.end(), i) - I.begin());
            rho2[static_cast<std::size_t>(i) - 1] = rho[i] - below;
        }
        if (gam[i] != 0) {
            int above = static_cast<int>(I.end() - std::upper_bound(I.begin(), I.end(), i));
            gam2[static_cast<std::size_t>(i) - 1] = gam[i] - above;
        }
    }
    for (int x : rho2)
        if (x < 0) throw DomainError("count vectors are inconsistent (negative residual)");
    for (int x : gam2)
        if (x < 0) throw DomainError("count vectors are inconsistent (negative residual)");
    WeakComposition sub = reconstruct_rec(WeakComposition(std::move(rho2)), WeakComposition(std::move(gam2)), strict);
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        if (inI(i)) a[static_cast<std::size_t>(i) - 1] = m;
        else if (rho[i] + gam[i] > 0) a[static_cast<std::size_t>(i) - 1] = sub[i] + static_cast<int>(I.size());
    }
    return WeakComposition(std::move(a));
}

} // namespace

WeakComposition reconstruct_from_counts(const CountVector& rho, const CountVector& gamma, bool strict) {
    if (strict && (rho.kind != CountKind::RhoStrict || gamma.kind != CountKind::GammaStrict))
        throw DomainError("reconstruct_from_counts: strict mode expects strict count vectors");
    if (!strict && (rho.kind != CountKind::Rho || gamma.kind != CountKind::Gamma))
        throw DomainError("reconstruct_from_counts: expects (rho, gamma) count vectors");
    WeakComposition alpha = reconstruct_rec(rho.entries, gamma.entries, strict);
    if (!is_symmetric(alpha)) throw DomainError("no symmetric composition matches the given counts");
    auto [r2, g2] = counts(alpha, strict);
    if (r2.entries != rho.entries || g2.entries != gamma.entries)
        throw DomainError("no symmetric composition matches the given counts");
    return alpha;
}

WeakComposition eta(const WeakComposition& alpha) {
    if (!is_symmetric(alpha)) throw DomainError("eta needs a symmetric composition");
    if (alpha[1] != 0) throw DomainError("eta needs alpha_1 = 0, got " + alpha.str());
    SymmetricDiagram d(alpha);
    int h = d.diagonal_cells();
    int n = std::max(alpha.length(), 1);
    std::vector<int> e1(static_cast<std::size_t>(n), 0);
    e1[0] = h;
    for (int i = 2; i <= n; ++i) e1[static_cast<std::size_t>(i) - 1] = alpha[i] + (d.contains(i, i) ? 1 : 0);
    WeakComposition eta1(std::move(e1));
    if (is_skew_symmetric(eta1)) return eta1;
    WeakComposition eta2 = eta1.bumped(1, +1);
    if (!is_skew_symmetric(eta2)) throw InvariantError("neither eta candidate is skew-symmetric for " + alpha.str());
    return eta2;
}

} // namespace shiftedkeys
