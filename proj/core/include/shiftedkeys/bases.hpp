#pragma once

#include <optional>
#include <string>

#include "shiftedkeys/operators.hpp"
#include "shiftedkeys/symdiag.hpp"

namespace shiftedkeys {

enum class BasisId {
    KEY,
    ATOM,
    LASCOUX,
    LASCOUX_ATOM,
    PKEY,
    PATOM,
    QKEY,
    QATOM,
    PLASCOUX,
    PLASCOUX_ATOM,
    LTILDE_O,
    QLASCOUX,
    SCHUBERT,
    GROTHENDIECK,
    INV_SCHUB_SP,
    INV_SCHUB_O,
    GROTH_SP,
    GROTH_O_VEX,
};

std::string basis_name(BasisId id);
std::optional<BasisId> basis_from_name(const std::string& name);

// -- key-type families, indexed by weak compositions ------------------------

Poly key(const WeakComposition& alpha);
Poly atom(const WeakComposition& alpha);
Poly lascoux(const WeakComposition& alpha);
Poly lascoux_atom(const WeakComposition& alpha);

// -- shifted families --------------------------------------------------------

/// pi_w applied to prod_{(i,j) in D_mu} (x_i + x_{i+j}).  Strictness of mu is
/// not enforced; non-strict mu can give zero or negative results.
Poly pkey_wmu(const Permutation& w, const Partition& mu);
Poly qkey_wmu(const Permutation& w, const Partition& mu);
Poly patom_wmu(const Permutation& w, const Partition& mu);
Poly qatom_wmu(const Permutation& w, const Partition& mu);

/// Shifted keys indexed by (skew-)symmetric weak compositions.
Poly pkey(const WeakComposition& alpha);  // alpha skew-symmetric
Poly patom(const WeakComposition& alpha);
Poly qkey(const WeakComposition& alpha);  // alpha symmetric
Poly qatom(const WeakComposition& alpha);

/// K-theoretic shifted families.
Poly plascoux(const WeakComposition& alpha);       // alpha skew-symmetric
Poly plascoux_atom(const WeakComposition& alpha);
Poly ltilde_o(const WeakComposition& alpha);       // alpha symmetric
Poly ltilde_o_atom(const WeakComposition& alpha);
/// Defined for codes of vexillary involutions only.
Poly q_lascoux(const WeakComposition& alpha);

// -- Schubert / Grothendieck families ----------------------------------------

Poly schubert(const Permutation& w);
Poly grothendieck(const Permutation& w);
Poly inv_schubert_sp(const FpfInvolution& z);
Poly inv_schubert_o(const Involution& z);
Poly groth_sp(const FpfInvolution& z);
/// Orthogonal Grothendieck polynomial of a vexillary involution, via an
/// ascent chain to a dominant involution.  Throws DomainError when z is not
/// vexillary or no chain is found within the rank budget.
Poly groth_o_vex(const Involution& z);

/// Semantic fpf-vexillarity test: the symplectic Stanley symmetric function
/// of z equals the Schur P-function of lambda_sp(z).
bool is_fpf_vexillary(const FpfInvolution& z);

/// Drop all memoized polynomials (mainly for benchmarks and tests).
void clear_basis_caches();

/// Snapshot of the memoized orthogonal Grothendieck chain results, as
/// (one-line window, polynomial json) rows; used by the optional on-disk
/// cache of the CLI.
std::vector<std::pair<std::string, std::string>> dump_groth_o_cache();
void load_groth_o_cache(const std::vector<std::pair<std::string, std::string>>& rows);

} // namespace shiftedkeys
