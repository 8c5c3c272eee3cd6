#pragma once

#include <string>

#include "shiftedkeys/expand.hpp"

namespace shiftedkeys {

/// A symmetric-function truncation: a polynomial symmetric in x_1..x_n
/// together with the variable count and a label naming its family and index.
struct SymmetricTruncation {
    Poly value;
    int n = 0;
    std::string family;
    std::string index;
};

/// Stanley symmetric function F_v(x_1..x_n); needs D(v) inside the first n rows.
SymmetricTruncation stanley(const Permutation& v, int n);
/// Involution Stanley symmetric functions of symplectic / orthogonal type.
SymmetricTruncation inv_stanley_p(const FpfInvolution& y, int n);
SymmetricTruncation inv_stanley_q(const Involution& z, int n);

/// Schur s_lambda(x_1..x_n) as the key polynomial of the reversed padding.
SymmetricTruncation schur(const Partition& lambda, int n);
/// Schur P/Q functions of a strict partition, via the halved closures.
SymmetricTruncation schur_p(const Partition& mu, int n);
SymmetricTruncation schur_q(const Partition& mu, int n);

/// Stable Grothendieck truncations.
SymmetricTruncation stable_groth(const Permutation& w, int n);
SymmetricTruncation g_lambda(const Partition& lambda, int n);

/// K-theoretic Schur P/Q truncations via denominator-free symmetrization.
SymmetricTruncation gp(const Partition& mu, int n);
SymmetricTruncation gq(const Partition& mu, int n);

/// Symplectic stable Grothendieck truncation; needs the fpf-visible descents
/// of z inside [n].
SymmetricTruncation gp_z(const FpfInvolution& z, int n);
/// Orthogonal stable truncation at the exact visible-descent rank: requires
/// Des_V(z) = {n}.
SymmetricTruncation gq_z_igrassmannian(const Involution& z, int n);

/// lambda^O for an I-Grassmannian involution (phi_1 n+1)...(phi_r n+r).
Partition lambda_o_igrassmannian(const Involution& z);

/// Expand a symmetric truncation over the G_lambda basis (via the Lascoux
/// route); indices that are not reversed partitions signal missing variables.
PartitionExpansion g_basis_expand(const SymmetricTruncation& t);
/// Schur-basis expansion of a beta-free symmetric truncation.
PartitionExpansion schur_expand(const SymmetricTruncation& t);

enum class StableKind { GP, GQ };

/// True iff the G-basis expansion of GP_mu / GQ_mu is supported on partitions
/// with at most n rows and has coefficients in N[b].
bool row_bound_check(StableKind kind, const Partition& mu, int n);

} // namespace shiftedkeys
