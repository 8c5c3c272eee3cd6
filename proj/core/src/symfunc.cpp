#include "shiftedkeys/symfunc.hpp"

#include <algorithm>

#include "shiftedkeys/enumerate.hpp"

namespace shiftedkeys {

namespace {

// (lambda_n, ..., lambda_2, lambda_1) padded to exactly n slots
WeakComposition reverse_pad(const Partition& lam, int n) {
    if (lam.length() > n) throw DomainError("too few variables for " + lam.str());
    std::vector<int> v(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= lam.length(); ++i) v[static_cast<std::size_t>(n - i)] = lam[i];
    return WeakComposition(std::move(v));
}

int first_row_beyond(const CellSet& cells, int n) {
    for (const auto& [i, j] : cells)
        if (i > n) return i;
    return 0;
}

} // namespace

SymmetricTruncation stanley(const Permutation& v, int n) {
    int bad = first_row_beyond(v.rothe_diagram(), n);
    if (bad) throw DomainError("stanley: diagram row " + std::to_string(bad) + " lies beyond x" + std::to_string(n));
    return {symmetrize(OperatorKind::ISO, n, schubert(v)), n, "F", v.str()};
}

SymmetricTruncation inv_stanley_p(const FpfInvolution& y, int n) {
    int bad = first_row_beyond(y.d_sp(), n);
    if (bad) throw DomainError("inv_stanley_p: diagram row " + std::to_string(bad) + " lies beyond x" + std::to_string(n));
    return {symmetrize(OperatorKind::ISO, n, inv_schubert_sp(y)), n, "P", y.str()};
}

SymmetricTruncation inv_stanley_q(const Involution& z, int n) {
    int bad = first_row_beyond(z.d_o(), n);
    if (bad) throw DomainError("inv_stanley_q: diagram row " + std::to_string(bad) + " lies beyond x" + std::to_string(n));
    return {symmetrize(OperatorKind::ISO, n, inv_schubert_o(z)), n, "Q", z.str()};
}

SymmetricTruncation schur(const Partition& lambda, int n) {
    return {key(reverse_pad(lambda, n)), n, "s", lambda.str()};
}

SymmetricTruncation schur_p(const Partition& mu, int n) {
    Partition lam = skew_symmetric_closure_half_lt(mu);
    if (lam.length() > n) {
        // compute at the doubled rank and restrict back down
        int big = lam.length();
        Poly full = pkey(reverse_pad(lam, big));
        return {full.truncate_vars(n), n, "Pfn", mu.str()};
    }
    return {pkey(reverse_pad(lam, n)), n, "Pfn", mu.str()};
}

SymmetricTruncation schur_q(const Partition& mu, int n) {
    Partition lam = symmetric_closure_half_le(mu);
    if (lam.length() > n) {
        int big = lam.length();
        Poly full = qkey(reverse_pad(lam, big));
        return {full.truncate_vars(n), n, "Qfn", mu.str()};
    }
    return {qkey(reverse_pad(lam, n)), n, "Qfn", mu.str()};
}

SymmetricTruncation stable_groth(const Permutation& w, int n) {
    if (w.max_descent() > n) throw DomainError("stable_groth: descents of " + w.str() + " exceed " + std::to_string(n));
    return {symmetrize(OperatorKind::ISO_B, n, grothendieck(w)), n, "G", w.str()};
}

SymmetricTruncation g_lambda(const Partition& lambda, int n) {
    return {lascoux(reverse_pad(lambda, n)), n, "G_lambda", lambda.str()};
}

namespace {

// The shifted stable operand is x^mu times a product of factors
// (x_i (+) x_j)/x_i over rows i <= r, with j starting at i+1 (GP) or i (GQ).
// The division is cleared by the symmetric monomial (x_1...x_n)^K, which
// commutes with every isobaric operator, and divided back out at the end.
Poly stable_shifted_symmetrized(const Partition& mu, int n, bool qcase) {
    int r = mu.length();
    int K = 0;
    for (int i = 1; i <= r; ++i) K = std::max(K, n - i + (qcase ? 1 : 0));
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        int facs = i <= r ? n - i + (qcase ? 1 : 0) : 0;
        e[static_cast<std::size_t>(i) - 1] = mu[i] + K - facs;
    }
    Poly p = Poly::x_power(Exponents(e.begin(), e.end()));
    for (int i = 1; i <= r; ++i) {
        for (int j = qcase ? i : i + 1; j <= n; ++j) p *= oplus(Poly::variable(i), Poly::variable(j));
    }
    Poly sym = symmetrize(OperatorKind::ISO_B, n, p);
    return sym.exact_div_monomial(Exponents(static_cast<std::size_t>(n), K));
}

} // namespace

SymmetricTruncation gp(const Partition& mu, int n) {
    if (!mu.is_strict()) throw DomainError("gp needs a strict partition");
    if (n < mu.length()) throw DomainError("gp: need at least " + std::to_string(mu.length()) + " variables");
    if (mu.empty()) return {Poly::constant(BetaScalar(1)), n, "GP", mu.str()};
    return {stable_shifted_symmetrized(mu, n, false), n, "GP", mu.str()};
}

SymmetricTruncation gq(const Partition& mu, int n) {
    if (!mu.is_strict()) throw DomainError("gq needs a strict partition");
    if (n < mu.length()) throw DomainError("gq: need at least " + std::to_string(mu.length()) + " variables");
    if (mu.empty()) return {Poly::constant(BetaScalar(1)), n, "GQ", mu.str()};
    return {stable_shifted_symmetrized(mu, n, true), n, "GQ", mu.str()};
}

SymmetricTruncation gp_z(const FpfInvolution& z, int n) {
    auto des = z.visible_descents();
    if (!des.empty() && des.back() > n)
        throw DomainError("gp_z: fpf-visible descent " + std::to_string(des.back()) + " exceeds " + std::to_string(n));
    return {symmetrize(OperatorKind::ISO_B, n, groth_sp(z)), n, "GPz", z.str()};
}

Partition lambda_o_igrassmannian(const Involution& z) {
    auto des = z.visible_descents();
    if (des.size() > 1) throw DomainError("lambda_o: " + z.str() + " is not I-Grassmannian");
    if (des.empty()) return Partition{};
    int n = des.front();
    std::vector<int> phi;
    for (const auto& [a, b] : z.cycles()) {
        if (a > n || b <= n) throw DomainError("lambda_o: unexpected cycle shape in " + z.str());
        phi.push_back(a);
    }
    std::sort(phi.begin(), phi.end());
    for (std::size_t i = 0; i < phi.size(); ++i) {
        if (z(phi[i]) != n + 1 + static_cast<int>(i))
            throw DomainError("lambda_o: " + z.str() + " is not of I-Grassmannian form");
    }
    std::vector<int> mu;
    for (int p : phi) mu.push_back(n + 1 - p);
    std::sort(mu.begin(), mu.end(), std::greater<int>());
    return Partition(std::move(mu));
}

SymmetricTruncation gq_z_igrassmannian(const Involution& z, int n) {
    auto des = z.visible_descents();
    if (des.size() != 1 || des.front() != n)
        throw DomainError("gq_z_igrassmannian needs Des_V(z) = {" + std::to_string(n) + "}");
    return {symmetrize(OperatorKind::ISO_B, n, groth_o_vex(z)), n, "GQz", z.str()};
}

namespace {

PartitionExpansion to_partition_expansion(const KeyExpansion& ke, int n, const char* what) {
    PartitionExpansion out;
    out.residual = ke.residual;
    for (const auto& [idx, c] : ke.terms) {
        std::vector<int> v = idx.parts();
        if (static_cast<int>(v.size()) > n)
            throw DomainError(std::string(what) + ": index " + idx.str() + " exceeds the variable count (insufficient variables)");
        v.resize(static_cast<std::size_t>(n), 0); // pad before reversing
        std::vector<int> rev(v.rbegin(), v.rend());
        WeakComposition w{std::vector<int>(rev.begin(), rev.end())};
        if (!w.is_partition())
            throw DomainError(std::string(what) + ": index " + idx.str() + " is not a reversed partition (insufficient variables)");
        out.terms[Partition(w)] += c;
    }
    return out;
}

} // namespace

PartitionExpansion g_basis_expand(const SymmetricTruncation& t) {
    for (int i = 1; i < t.n; ++i)
        if (t.value.swap_vars(i) != t.value) throw DomainError("g_basis_expand needs a symmetric input");
    return to_partition_expansion(lascoux_expand(t.value), t.n, "g_basis_expand");
}

PartitionExpansion schur_expand(const SymmetricTruncation& t) {
    if (!t.value.beta_free()) throw DomainError("schur_expand needs a beta-free input");
    return to_partition_expansion(key_expand(t.value), t.n, "schur_expand");
}

bool row_bound_check(StableKind kind, const Partition& mu, int n) {
    if (!mu.is_strict()) throw DomainError("row_bound_check needs a strict partition");
    if (mu.empty()) return true;
    int rows_max = kind == StableKind::GP ? mu[1] : mu[1] + 1;
    int big = std::max({n + 1, mu.length(), 1});
    (void)rows_max;
    SymmetricTruncation t = kind == StableKind::GP ? gp(mu, big) : gq(mu, big);
    PartitionExpansion ex = g_basis_expand(t);
    for (const auto& [lam, c] : ex.terms) {
        if (lam.length() > n) return false;
        if (!c.is_natural()) return false;
    }
    return true;
}

} // namespace shiftedkeys
