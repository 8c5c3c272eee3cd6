#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shiftedkeys/bases.hpp"

namespace shiftedkeys {

/// Result of a change-of-basis computation: index -> coefficient terms, the
/// residual left unexpanded (zero on success), and whether every coefficient
/// lies in N[b].
template <class Index>
struct Expansion {
    std::map<Index, BetaScalar> terms;
    Poly residual;

    bool complete() const { return residual.is_zero(); }
    bool positive() const {
        for (const auto& [k, c] : terms)
            if (!c.is_natural()) return false;
        return true;
    }
    /// Rebuild sum(terms) + residual through the given constructor.
    Poly reconstruct(const std::function<Poly(const Index&)>& basis) const {
        Poly p = residual;
        for (const auto& [k, c] : terms) p += basis(k).scalar_mul(c);
        return p;
    }
};

using KeyExpansion = Expansion<WeakComposition>;
using PermExpansion = Expansion<Permutation>;
using PartitionExpansion = Expansion<Partition>;

/// Carries the partial state when an expansion hits the iteration guard.
struct ExpansionGuardError : GuardError {
    KeyExpansion partial;
    ExpansionGuardError(const std::string& msg, KeyExpansion p)
        : GuardError(msg), partial(std::move(p)) {}
};

/// Peel by lexicographically minimal monomials; unique by the triangular
/// leading-term property of keys/atoms/Lascoux polynomials.
KeyExpansion key_expand(const Poly& f);
KeyExpansion atom_expand(const Poly& f);
KeyExpansion lascoux_expand(const Poly& f);
KeyExpansion lascoux_atom_expand(const Poly& f);

/// Coefficients of a homogeneous polynomial in the Schubert basis, extracted
/// as constant terms of dd_w f over the codes supported in the variable box.
PermExpansion schubert_expand(const Poly& f);
/// Peels the lowest x-degree layer through schubert_expand, subtracting whole
/// Grothendieck polynomials until nothing remains.
PermExpansion grothendieck_expand(const Poly& f);

enum class SearchFamily { PKEY, QKEY_2POW, PLASCOUX };

struct SearchConfig {
    bool all_solutions = false;
    std::size_t max_solutions = 8;
    long node_budget = 2'000'000;
    /// cyc(z) hint for QKEY_2POW: coefficients constrained to 2^{cyc - diag}.
    std::optional<int> cyc_hint;
};

struct SearchResult {
    std::vector<KeyExpansion> solutions;
    /// True when the search space was exhausted without finding the requested
    /// number of solutions (an empty `solutions` then certifies failure).
    bool exhausted = false;
    long nodes = 0;
};

/// Backtracking search for a positive expansion of f into P-keys, Q-keys with
/// power-of-two coefficients, or P-Lascoux polynomials.  Candidates at each
/// step are the (skew-)symmetric compositions in the variable box whose
/// conjectural leading monomial matches the current lex-minimal term; on
/// exhaustion the search falls back to the full degree-bounded candidate set
/// before certifying failure.
SearchResult positive_search(const Poly& f, SearchFamily family, const SearchConfig& config = {});

struct SpanCertificate {
    bool member = false;
    /// Coefficients over the generators when member.
    std::vector<BigRational> coefficients;
    /// A monomial-indexed functional vanishing on every generator but not on
    /// f, when not a member.
    std::vector<std::pair<Exponents, BigRational>> separating;
};

/// Exact rational solve for membership of f in the span of the generators.
/// All inputs must be beta-free.
SpanCertificate span_membership(const Poly& f, const std::vector<Poly>& generators);

struct LeadingTermReport {
    bool applicable = false;
    bool conforms = false;
    WeakComposition rho, gamma;
    std::string detail;
};

/// Checks the conjectural leading-term shape of 2^{-diag} kappa^Q_alpha
/// (symmetric alpha) and of kappa^P_alpha (skew-symmetric alpha), plus the
/// provable key-positivity of the difference with the distinguished key term.
LeadingTermReport leading_term_check_q(const WeakComposition& alpha);
LeadingTermReport leading_term_check_p(const WeakComposition& alpha);

/// The composition with pi_w kappa_alpha = kappa_{w o alpha}.
WeakComposition w_circ_alpha(const Permutation& w, const WeakComposition& alpha);

} // namespace shiftedkeys
