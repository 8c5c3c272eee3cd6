#include "shiftedkeys/bases.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "shiftedkeys/enumerate.hpp"

namespace shiftedkeys {

std::string basis_name(BasisId id) {
    switch (id) {
        case BasisId::KEY: return "key";
        case BasisId::ATOM: return "atom";
        case BasisId::LASCOUX: return "lascoux";
        case BasisId::LASCOUX_ATOM: return "lascoux_atom";
        case BasisId::PKEY: return "pkey";
        case BasisId::PATOM: return "patom";
        case BasisId::QKEY: return "qkey";
        case BasisId::QATOM: return "qatom";
        case BasisId::PLASCOUX: return "plascoux";
        case BasisId::PLASCOUX_ATOM: return "plascoux_atom";
        case BasisId::LTILDE_O: return "ltilde_o";
        case BasisId::QLASCOUX: return "qlascoux";
        case BasisId::SCHUBERT: return "schubert";
        case BasisId::GROTHENDIECK: return "grothendieck";
        case BasisId::INV_SCHUB_SP: return "inv_schub_sp";
        case BasisId::INV_SCHUB_O: return "inv_schub_o";
        case BasisId::GROTH_SP: return "groth_sp";
        case BasisId::GROTH_O_VEX: return "groth_o_vex";
    }
    return "?";
}

std::optional<BasisId> basis_from_name(const std::string& name) {
    static const std::map<std::string, BasisId> table = {
        {"key", BasisId::KEY},
        {"atom", BasisId::ATOM},
        {"lascoux", BasisId::LASCOUX},
        {"lascoux_atom", BasisId::LASCOUX_ATOM},
        {"pkey", BasisId::PKEY},
        {"patom", BasisId::PATOM},
        {"qkey", BasisId::QKEY},
        {"qatom", BasisId::QATOM},
        {"plascoux", BasisId::PLASCOUX},
        {"plascoux_atom", BasisId::PLASCOUX_ATOM},
        {"ltilde_o", BasisId::LTILDE_O},
        {"qlascoux", BasisId::QLASCOUX},
        {"schubert", BasisId::SCHUBERT},
        {"grothendieck", BasisId::GROTHENDIECK},
        {"inv_schub_sp", BasisId::INV_SCHUB_SP},
        {"invschub-sp", BasisId::INV_SCHUB_SP},
        {"inv_schub_o", BasisId::INV_SCHUB_O},
        {"invschub-o", BasisId::INV_SCHUB_O},
        {"groth_sp", BasisId::GROTH_SP},
        {"groth_o_vex", BasisId::GROTH_O_VEX},
    };
    auto it = table.find(name);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

namespace {

struct Caches {
    std::map<std::pair<int, WeakComposition>, Poly> comp_indexed; // (BasisId, alpha)
    std::map<std::pair<int, Permutation>, Poly> perm_indexed;
    std::map<std::vector<int>, Poly> sp_schub, sp_groth;
    std::map<Permutation, Poly> o_schub, o_groth;
};

Caches& caches() {
    static Caches c;
    return c;
}

template <class Key, class Map, class Fn>
const Poly& memo(Map& m, const Key& key, Fn&& fn) {
    auto it = m.find(key);
    if (it != m.end()) return it->second;
    Poly value = fn();
    return m.emplace(key, std::move(value)).first->second;
}

Poly monomial_of(const Partition& lam) {
    Exponents e(lam.parts().begin(), lam.parts().end());
    return Poly::x_power(e);
}

// prod over D_mu of (x_i + x_{i+j})  [P]  or (x_i + x_{i+j-1})  [Q]
Poly shifted_operand(const Partition& mu, bool qcase) {
    Poly p = Poly::constant(BetaScalar(1));
    for (const auto& [i, j] : mu.cells()) {
        int other = qcase ? i + j - 1 : i + j;
        p *= Poly::variable(i) + Poly::variable(other);
    }
    return p;
}

} // namespace

// ----------------------------------------------------------- key-type bases

Poly key(const WeakComposition& alpha) {
    return memo(caches().comp_indexed, std::make_pair(static_cast<int>(BasisId::KEY), alpha), [&] {
        return apply_perm(OperatorKind::ISO, sorting_permutation(alpha), monomial_of(sort_to_partition(alpha)));
    });
}

Poly atom(const WeakComposition& alpha) {
    return memo(caches().comp_indexed, std::make_pair(static_cast<int>(BasisId::ATOM), alpha), [&] {
        return apply_perm(OperatorKind::BAR, sorting_permutation(alpha), monomial_of(sort_to_partition(alpha)));
    });
}

Poly lascoux(const WeakComposition& alpha) {
    return memo(caches().comp_indexed, std::make_pair(static_cast<int>(BasisId::LASCOUX), alpha), [&] {
        return apply_perm(OperatorKind::ISO_B, sorting_permutation(alpha), monomial_of(sort_to_partition(alpha)));
    });
}

Poly lascoux_atom(const WeakComposition& alpha) {
    return memo(caches().comp_indexed, std::make_pair(static_cast<int>(BasisId::LASCOUX_ATOM), alpha), [&] {
        return apply_perm(OperatorKind::BAR_B, sorting_permutation(alpha), monomial_of(sort_to_partition(alpha)));
    });
}

// ------------------------------------------------------------ shifted bases

Poly pkey_wmu(const Permutation& w, const Partition& mu) {
    return apply_perm(OperatorKind::ISO, w, shifted_operand(mu, false));
}

Poly qkey_wmu(const Permutation& w, const Partition& mu) {
    return apply_perm(OperatorKind::ISO, w, shifted_operand(mu, true));
}

Poly patom_wmu(const Permutation& w, const Partition& mu) {
    return apply_perm(OperatorKind::BAR, w, shifted_operand(mu, false));
}

Poly qatom_wmu(const Permutation& w, const Partition& mu) {
    return apply_perm(OperatorKind::BAR, w, shifted_operand(mu, true));
}

namespace {

// The P-side families are defined for every symmetric index; skew-symmetric
// compositions are the canonical indexing subset, and merely-symmetric
// indices give the same polynomial as their skew-symmetric partner.
Poly shifted_comp_family(BasisId id, const WeakComposition& alpha) {
    bool pside = id == BasisId::PKEY || id == BasisId::PATOM;
    if (!is_symmetric(alpha))
        throw DomainError(basis_name(id) + " index must be symmetric: " + alpha.str());
    Partition lam = sort_to_partition(alpha);
    Partition mu = pside ? half_lt(lam) : half_le(lam);
    Permutation u = sorting_permutation(alpha);
    bool bar = id == BasisId::PATOM || id == BasisId::QATOM;
    OperatorKind kind = bar ? OperatorKind::BAR : OperatorKind::ISO;
    return apply_perm(kind, u, shifted_operand(mu, !pside));
}

} // namespace

Poly pkey(const WeakComposition& alpha) {
    return memo(caches().comp_indexed, std::make_pair(static_cast<int>(BasisId::PKEY), alpha),
                [&] { return shifted_comp_family(BasisId::PKEY, alpha); });
}

Poly patom(const WeakComposition& alpha) {
    return memo(caches().comp_indexed, std::make_pair(static_cast<int>(BasisId::PATOM), alpha),
                [&] { return shifted_comp_family(BasisId::PATOM, alpha); });
}

Poly qkey(const WeakComposition& alpha) {
    return memo(caches().comp_indexed, std::make_pair(static_cast<int>(BasisId::QKEY), alpha),
                [&] { return shifted_comp_family(BasisId::QKEY, alpha); });
}

Poly qatom(const WeakComposition& alpha) {
    return memo(caches().comp_indexed, std::make_pair(static_cast<int>(BasisId::QATOM), alpha),
                [&] { return shifted_comp_family(BasisId::QATOM, alpha); });
}

namespace {

Poly oplus_product(const Partition& lam, bool weak) {
    Poly p = Poly::constant(BetaScalar(1));
    for (const auto& [i, j] : lam.cells()) {
        if (weak ? i >= j : i > j) p *= oplus(Poly::variable(i), Poly::variable(j));
    }
    return p;
}

Poly k_shifted_comp_family(BasisId id, const WeakComposition& alpha) {
    bool pside = id == BasisId::PLASCOUX || id == BasisId::PLASCOUX_ATOM;
    if (!is_symmetric(alpha))
        throw DomainError(basis_name(id) + " index must be symmetric: " + alpha.str());
    Partition lam = sort_to_partition(alpha);
    Permutation u = sorting_permutation(alpha);
    bool bar = id == BasisId::PLASCOUX_ATOM;
    OperatorKind kind = bar ? OperatorKind::BAR_B : OperatorKind::ISO_B;
    return apply_perm(kind, u, oplus_product(lam, !pside));
}

} // namespace

Poly plascoux(const WeakComposition& alpha) {
    return memo(caches().comp_indexed, std::make_pair(static_cast<int>(BasisId::PLASCOUX), alpha),
                [&] { return k_shifted_comp_family(BasisId::PLASCOUX, alpha); });
}

Poly plascoux_atom(const WeakComposition& alpha) {
    return memo(caches().comp_indexed, std::make_pair(static_cast<int>(BasisId::PLASCOUX_ATOM), alpha),
                [&] { return k_shifted_comp_family(BasisId::PLASCOUX_ATOM, alpha); });
}

Poly ltilde_o(const WeakComposition& alpha) {
    return memo(caches().comp_indexed, std::make_pair(static_cast<int>(BasisId::LTILDE_O), alpha), [&] {
        if (!is_symmetric(alpha)) throw DomainError("ltilde_o index must be symmetric: " + alpha.str());
        return apply_perm(OperatorKind::ISO_B, sorting_permutation(alpha),
                          oplus_product(sort_to_partition(alpha), true));
    });
}

Poly ltilde_o_atom(const WeakComposition& alpha) {
    if (!is_symmetric(alpha)) throw DomainError("ltilde_o_atom index must be symmetric: " + alpha.str());
    return apply_perm(OperatorKind::BAR_B, sorting_permutation(alpha),
                      oplus_product(sort_to_partition(alpha), true));
}

Poly q_lascoux(const WeakComposition& alpha) {
    Involution z = code_to_involution(alpha); // typed failure on non-involution codes
    if (!z.is_vexillary())
        throw DomainError("q_lascoux: code " + alpha.str() + " belongs to the non-vexillary involution " +
                          z.str());
    return groth_o_vex(z);
}

// --------------------------------------------- Schubert-type, via recursions

Poly schubert(const Permutation& w) {
    return memo(caches().perm_indexed, std::make_pair(static_cast<int>(BasisId::SCHUBERT), w), [&] {
        if (w.is_dominant()) return monomial_of(Partition(w.code()));
        int n = w.window_size();
        Poly top = monomial_of(Partition::staircase(n));
        return apply_perm(OperatorKind::DD, w.inverse() * Permutation::reverse(n), top);
    });
}

Poly grothendieck(const Permutation& w) {
    return memo(caches().perm_indexed, std::make_pair(static_cast<int>(BasisId::GROTHENDIECK), w), [&] {
        if (w.is_dominant()) return monomial_of(Partition(w.code()));
        int n = w.window_size();
        Poly top = monomial_of(Partition::staircase(n));
        return apply_perm(OperatorKind::DD_B, w.inverse() * Permutation::reverse(n), top);
    });
}

namespace {

Poly product_over_cells(const CellSet& cells, bool beta) {
    Poly p = Poly::constant(BetaScalar(1));
    for (const auto& [i, j] : cells) {
        if (beta) p *= oplus(Poly::variable(i), Poly::variable(j));
        else p *= Poly::variable(i) + Poly::variable(j);
    }
    return p;
}

// first ascent of an involution window, 0 if none in [1, n-1]
template <class Inv>
int first_ascent(const Inv& z, int n) {
    for (int i = 1; i < n; ++i)
        if (z(i) < z(i + 1)) return i;
    return 0;
}

} // namespace

Poly inv_schubert_sp(const FpfInvolution& z) {
    return memo(caches().sp_schub, z.window_padded(0), [&]() -> Poly {
        if (is_fpf_dominant(z)) return product_over_cells(z.d_sp(), false);
        int n = z.window_size();
        int i = first_ascent(z, n);
        if (i == 0) throw InvariantError("non-dominant fpf involution without ascent: " + z.str());
        return apply(OperatorKind::DD, i, inv_schubert_sp(z.conjugate_s(i)));
    });
}

Poly inv_schubert_o(const Involution& z) {
    return memo(caches().o_schub, z.perm(), [&]() -> Poly {
        if (z.is_dominant()) return product_over_cells(z.d_o(), false);
        int n = z.perm().window_size();
        int i = first_ascent(z.perm(), n);
        if (i == 0) throw InvariantError("non-dominant involution without ascent: " + z.str());
        if (z(i) == i && z(i + 1) == i + 1) {
            // y = z * s_i has y(i) = i+1, and dd_i S^O_y = 2 S^O_z
            Involution y(z.perm() * Permutation::s(i));
            Poly twice = apply(OperatorKind::DD, i, inv_schubert_o(y));
            return twice.exact_div_int(BigInt(2));
        }
        return apply(OperatorKind::DD, i, inv_schubert_o(z.conjugate_s(i)));
    });
}

Poly groth_sp(const FpfInvolution& z) {
    return memo(caches().sp_groth, z.window_padded(0), [&]() -> Poly {
        if (is_fpf_dominant(z)) return product_over_cells(z.d_sp(), true);
        int n = z.window_size();
        int i = first_ascent(z, n);
        if (i == 0) throw InvariantError("non-dominant fpf involution without ascent: " + z.str());
        return apply(OperatorKind::DD_B, i, groth_sp(z.conjugate_s(i)));
    });
}

namespace {

// Depth-first ascent-chain search for orthogonal Grothendieck polynomials of
// vexillary involutions.  Every step conjugates by an ascent s_i such that the
// larger involution stays vexillary; dominant involutions are the base case.
bool groth_o_chain(const Involution& z, int budget, Poly& out, std::map<Permutation, Poly>& cache,
                   std::set<Permutation>& dead) {
    auto hit = cache.find(z.perm());
    if (hit != cache.end()) {
        out = hit->second;
        return true;
    }
    if (dead.count(z.perm())) return false;
    if (z.is_dominant()) {
        out = product_over_cells(z.d_o(), true);
        cache.emplace(z.perm(), out);
        return true;
    }
    for (int i = 1; i < budget; ++i) {
        if (z(i) >= z(i + 1)) continue;
        Involution y = z.conjugate_s(i);
        if (y == z || !y.is_vexillary()) continue;
        Poly up;
        if (!groth_o_chain(y, budget, up, cache, dead)) continue;
        out = apply(OperatorKind::DD_B, i, up);
        cache.emplace(z.perm(), out);
        return true;
    }
    dead.insert(z.perm());
    return false;
}

} // namespace

Poly groth_o_vex(const Involution& z) {
    if (!z.is_vexillary()) throw DomainError("groth_o_vex needs a vexillary involution, got " + z.str());
    auto& cache = caches().o_groth;
    auto hit = cache.find(z.perm());
    if (hit != cache.end()) return hit->second;
    auto vis = z.visible_descents();
    int budget = (vis.empty() ? 0 : vis.back()) + z.perm().length() + 2;
    budget = std::max(budget, z.perm().window_size() + 1);
    std::set<Permutation> dead;
    Poly out;
    if (!groth_o_chain(z, budget, out, cache, dead))
        throw DomainError("groth_o_vex: no vexillary ascent chain found for " + z.str() +
                          " within rank budget " + std::to_string(budget));
    return cache.at(z.perm());
}

// -------------------------------------------------------- fpf-vexillarity

bool is_fpf_vexillary(const FpfInvolution& z) {
    int d = static_cast<int>(z.d_sp().size());
    if (d == 0) return true;
    // Both symplectic Stanley functions are N-combinations of Schur P-functions
    // of degree d, whose lengths are at most max_strict_length(d); comparing
    // truncations at that many variables is conclusive.
    int m = std::max(1, max_strict_length(d));
    Poly pz = symmetrize(OperatorKind::ISO, m, inv_schubert_sp(z).truncate_vars(m));
    Partition mu = lambda_sp(z);
    Partition lam = skew_symmetric_closure_half_lt(mu);
    FpfInvolution dom = dominant_fpf_of_shape(lam);
    Poly pmu = symmetrize(OperatorKind::ISO, m, inv_schubert_sp(dom).truncate_vars(m));
    return pz == pmu;
}

void clear_basis_caches() { caches() = Caches(); }

std::vector<std::pair<std::string, std::string>> dump_groth_o_cache() {
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& [w, p] : caches().o_groth) rows.emplace_back(w.str(), p.to_json());
    return rows;
}

void load_groth_o_cache(const std::vector<std::pair<std::string, std::string>>& rows) {
    for (const auto& [ws, pj] : rows) {
        Permutation w = Permutation::parse(ws);
        caches().o_groth.emplace(w, Poly::from_json(pj));
    }
}

} // namespace shiftedkeys
