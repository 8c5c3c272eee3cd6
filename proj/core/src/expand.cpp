#include "shiftedkeys/expand.hpp"

#include <algorithm>

#include "shiftedkeys/enumerate.hpp"
#include "shiftedkeys/symdiag.hpp"

namespace shiftedkeys {

namespace {

WeakComposition comp_of(const Exponents& e) { return WeakComposition(std::vector<int>(e.begin(), e.end())); }

KeyExpansion peel_expand(const Poly& f, const std::function<Poly(const WeakComposition&)>& basis,
                         const char* what) {
    KeyExpansion out;
    out.residual = f;
    long iter = 0;
    while (!out.residual.is_zero()) {
        if (++iter > guard().max_iterations) {
            KeyExpansion partial = out;
            throw ExpansionGuardError(std::string(what) + ": iteration guard exceeded", partial);
        }
        auto [e, c] = out.residual.lex_min_term();
        WeakComposition idx = comp_of(e);
        Poly b = basis(idx);
        // the basis element must start at the same monomial with coefficient 1
        auto [be, bc] = b.lex_min_term();
        if (be != e || !bc.is_one())
            throw InvariantError(std::string(what) + ": basis element for " + idx.str() +
                                 " does not lead at its index");
        out.residual -= b.scalar_mul(c);
        out.terms[idx] += c;
        if (out.terms[idx].is_zero()) out.terms.erase(idx);
        // peeling strictly increases the lex-minimal monomial
        if (!out.residual.is_zero() && !lex_less(e, out.residual.lex_min_term().first))
            throw InvariantError(std::string(what) + ": lex-minimal term failed to advance");
    }
    return out;
}

} // namespace

KeyExpansion key_expand(const Poly& f) {
    return peel_expand(f, [](const WeakComposition& a) { return key(a); }, "key_expand");
}

KeyExpansion atom_expand(const Poly& f) {
    return peel_expand(f, [](const WeakComposition& a) { return atom(a); }, "atom_expand");
}

KeyExpansion lascoux_expand(const Poly& f) {
    return peel_expand(f, [](const WeakComposition& a) { return lascoux(a); }, "lascoux_expand");
}

KeyExpansion lascoux_atom_expand(const Poly& f) {
    return peel_expand(f, [](const WeakComposition& a) { return lascoux_atom(a); }, "lascoux_atom_expand");
}

// ------------------------------------------------- Schubert / Grothendieck

namespace {

std::vector<WeakComposition> codes_of_degree(int d, int n) {
    std::vector<WeakComposition> out;
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == n) {
            if (remaining == 0) out.emplace_back(std::vector<int>(cur));
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, remaining - v);
        }
        cur[static_cast<std::size_t>(pos)] = 0;
    };
    rec(rec, 0, d);
    return out;
}

} // namespace

PermExpansion schubert_expand(const Poly& f) {
    PermExpansion out;
    if (f.is_zero()) return out;
    if (!f.is_homogeneous(Grading::XDegree)) throw DomainError("schubert_expand needs an x-homogeneous input");
    int n = f.var_bound();
    int d = f.max_x_degree();
    Poly residual = f;
    for (const auto& code : codes_of_degree(d, n)) {
        Permutation w = lehmer_decode(code);
        Poly ddw = apply_perm(OperatorKind::DD, w, f);
        BetaScalar c = ddw.coeff(Exponents{});
        if (c.is_zero()) continue;
        out.terms.emplace(w, c);
        residual -= schubert(w).scalar_mul(c);
    }
    out.residual = residual;
    if (!residual.is_zero()) throw InvariantError("schubert_expand: nonzero residual after extraction");
    return out;
}

PermExpansion grothendieck_expand(const Poly& f) {
    PermExpansion out;
    Poly residual = f;
    int n = f.var_bound();
    long iter = 0;
    while (!residual.is_zero()) {
        if (++iter > guard().max_iterations) throw GuardError("grothendieck_expand: iteration guard exceeded");
        int d = residual.min_x_degree();
        Poly layer = residual.homogeneous_part(d, Grading::XDegree);
        bool progressed = false;
        for (const auto& code : codes_of_degree(d, n)) {
            Permutation w = lehmer_decode(code);
            Poly ddw = apply_perm(OperatorKind::DD, w, layer);
            BetaScalar c = ddw.coeff(Exponents{});
            if (c.is_zero()) continue;
            out.terms[w] += c;
            if (out.terms[w].is_zero()) out.terms.erase(w);
            residual -= grothendieck(w).scalar_mul(c);
            progressed = true;
        }
        if (!progressed)
            throw InvariantError("grothendieck_expand: lowest layer is not a Schubert combination");
        if (!residual.is_zero() && residual.min_x_degree() <= d)
            throw InvariantError("grothendieck_expand: lowest x-degree failed to advance");
    }
    out.residual = residual;
    return out;
}

// ------------------------------------------------------------- positive search

namespace {

struct CandidateTable {
    // leading count vector -> candidate indices, ordered by (|alpha|, lex)
    std::map<WeakComposition, std::vector<WeakComposition>> by_counts;
    std::vector<WeakComposition> all;
};

bool order_by_size_lex(const WeakComposition& a, const WeakComposition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    if (lex_less(a, b)) return true;
    if (lex_less(b, a)) return false;
    return a < b;
}

// All (skew-)symmetric compositions alpha with l(alpha) <= nvars whose basis
// element is homogeneous of x-degree d, bucketed by rho (Q) or strict rho (P).
CandidateTable build_candidates(SearchFamily family, int d, int nvars) {
    CandidateTable table;
    bool qcase = family == SearchFamily::QKEY_2POW;
    for (const auto& lam : symmetric_partitions_in_box(nvars)) {
        if (qcase) {
            if (half_le(lam).size() != d) continue;
        } else {
            if (!lam.is_skew_symmetric()) continue;
            if (half_lt(lam).size() != d) continue;
        }
        for (const auto& alpha : rearrangements(lam, nvars)) {
            auto [rho, gam] = counts(alpha, !qcase);
            table.by_counts[rho.entries].push_back(alpha);
            table.all.push_back(alpha);
        }
    }
    for (auto& [k, v] : table.by_counts) std::sort(v.begin(), v.end(), order_by_size_lex);
    std::sort(table.all.begin(), table.all.end(), order_by_size_lex);
    return table;
}

Poly search_basis(SearchFamily family, const WeakComposition& alpha) {
    switch (family) {
        case SearchFamily::PKEY: return pkey(alpha);
        case SearchFamily::QKEY_2POW: return qkey(alpha);
        case SearchFamily::PLASCOUX: return plascoux(alpha);
    }
    throw DomainError("unknown search family");
}

struct Searcher {
    SearchFamily family;
    SearchConfig config;
    const CandidateTable* table = nullptr;
    int base_degree = 0; // x-degree of the input
    SearchResult result;
    std::vector<std::pair<WeakComposition, BetaScalar>> stack;
    bool use_exact_buckets = false;
    std::map<WeakComposition, std::vector<WeakComposition>> exact_buckets;

    const std::vector<WeakComposition>* candidates_for(const WeakComposition& delta) {
        if (use_exact_buckets) {
            auto it = exact_buckets.find(delta);
            return it == exact_buckets.end() ? nullptr : &it->second;
        }
        auto it = table->by_counts.find(delta);
        return it == table->by_counts.end() ? nullptr : &it->second;
    }

    void build_exact_buckets() {
        exact_buckets.clear();
        for (const auto& alpha : table->all) {
            Poly b = search_basis(family, alpha);
            if (b.is_zero()) continue;
            exact_buckets[comp_of(b.lex_min_term().first)].push_back(alpha);
        }
        for (auto& [k, v] : exact_buckets) std::sort(v.begin(), v.end(), order_by_size_lex);
        use_exact_buckets = true;
    }

    bool done() const {
        return !config.all_solutions ? !result.solutions.empty()
                                     : result.solutions.size() >= config.max_solutions;
    }

    // admissible coefficients for candidate alpha given the lex-min coefficient c
    std::vector<BetaScalar> term_coefficients(const WeakComposition& alpha, const BetaScalar& c) {
        std::vector<BetaScalar> opts;
        if (family == SearchFamily::PKEY) {
            opts.emplace_back(1);
        } else if (family == SearchFamily::QKEY_2POW) {
            if (config.cyc_hint) {
                int k = *config.cyc_hint - diag(alpha);
                if (k >= 0) opts.emplace_back(BigInt(1) << k);
            } else {
                BigInt avail = c.coeff(0) >> diag(alpha);
                for (BigInt p(1); p <= avail; p <<= 1) opts.emplace_back(p);
                std::reverse(opts.begin(), opts.end());
            }
        } else {
            // PLASCOUX: beta^{|D^Sp(alpha)| - |D^Sp(z)|}
            int k = d_sp_size(alpha) - base_degree;
            if (k >= 0) opts.push_back(BetaScalar::beta(k));
        }
        return opts;
    }

    void dfs(const Poly& residual) {
        if (done()) return;
        if (++result.nodes > config.node_budget) throw GuardError("positive_search: node budget exceeded");
        if (residual.is_zero()) {
            KeyExpansion sol;
            for (const auto& [a, c] : stack) sol.terms[a] += c;
            result.solutions.push_back(std::move(sol));
            return;
        }
        if (!residual.is_natural()) return;
        auto [e, c] = residual.lex_min_term();
        const auto* cands = candidates_for(comp_of(e));
        if (!cands) return;
        for (const auto& alpha : *cands) {
            Poly b = search_basis(family, alpha);
            if (b.is_zero() || lex_less(b.lex_min_term().first, e)) continue;
            for (const auto& coeff : term_coefficients(alpha, c)) {
                Poly next = residual - b.scalar_mul(coeff);
                if (!next.is_natural()) continue;
                stack.emplace_back(alpha, coeff);
                dfs(next);
                stack.pop_back();
                if (done()) return;
            }
        }
    }
};

} // namespace

SearchResult positive_search(const Poly& f, SearchFamily family, const SearchConfig& config) {
    if (f.is_zero()) {
        SearchResult r;
        r.solutions.emplace_back();
        return r;
    }
    if (!f.is_homogeneous(Grading::XMinusBeta)) throw DomainError("positive_search: input not homogeneous");
    int d = f.min_x_degree();
    int nvars = f.var_bound();
    CandidateTable table = build_candidates(family, d, nvars);
    Searcher s;
    s.family = family;
    s.config = config;
    s.table = &table;
    s.base_degree = d;
    s.dfs(f);
    bool found_fast = !s.result.solutions.empty();
    if (!found_fast || config.all_solutions) {
        // rerun with exact leading-monomial buckets so failures (and "all
        // solutions" sweeps) do not depend on the conjectural count formula
        s.build_exact_buckets();
        s.result.solutions.clear();
        s.result.nodes = 0;
        s.dfs(f);
        s.result.exhausted = s.result.solutions.empty();
    }
    auto& sols = s.result.solutions;
    std::sort(sols.begin(), sols.end(),
              [](const KeyExpansion& a, const KeyExpansion& b) { return a.terms < b.terms; });
    sols.erase(std::unique(sols.begin(), sols.end(),
                           [](const KeyExpansion& a, const KeyExpansion& b) { return a.terms == b.terms; }),
               sols.end());
    return s.result;
}

// ------------------------------------------------------------ span membership

SpanCertificate span_membership(const Poly& f, const std::vector<Poly>& generators) {
    if (!f.beta_free()) throw DomainError("span_membership expects beta-free input");
    for (const auto& g : generators)
        if (!g.beta_free()) throw DomainError("span_membership expects beta-free generators");

    std::map<Exponents, std::size_t, LexLess> row_of;
    auto note = [&](const Poly& p) {
        for (const auto& [e, c] : p.terms())
            if (!row_of.count(e)) row_of.emplace(e, row_of.size());
    };
    note(f);
    for (const auto& g : generators) note(g);
    std::size_t rows = row_of.size(), cols = generators.size();

    // dense augmented matrix [A | b | I] over Q; the identity block tracks row
    // operations so a separating functional can be reported on failure
    std::vector<std::vector<BigRational>> a(rows, std::vector<BigRational>(cols + 1 + rows, BigRational(0)));
    for (std::size_t j = 0; j < cols; ++j)
        for (const auto& [e, c] : generators[j].terms()) a[row_of[e]][j] = BigRational(c.coeff(0));
    for (const auto& [e, c] : f.terms()) a[row_of[e]][cols] = BigRational(c.coeff(0));
    for (std::size_t r = 0; r < rows; ++r) a[r][cols + 1 + r] = BigRational(1);

    std::vector<std::size_t> pivot_row_of_col(cols, SIZE_MAX);
    std::size_t rank = 0;
    for (std::size_t j = 0; j < cols && rank < rows; ++j) {
        std::size_t p = rank;
        while (p < rows && a[p][j] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rank]);
        BigRational inv = a[rank][j];
        for (auto& x : a[rank]) x /= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][j] == 0) continue;
            BigRational factor = a[r][j];
            for (std::size_t k2 = 0; k2 < a[r].size(); ++k2) a[r][k2] -= factor * a[rank][k2];
        }
        pivot_row_of_col[j] = rank;
        ++rank;
    }

    SpanCertificate cert;
    for (std::size_t r = rank; r < rows; ++r) {
        if (a[r][cols] == 0) continue;
        cert.member = false;
        std::vector<Exponents> exps_by_row(rows);
        for (const auto& [e, idx] : row_of) exps_by_row[idx] = e;
        for (std::size_t k2 = 0; k2 < rows; ++k2) {
            if (a[r][cols + 1 + k2] != 0) cert.separating.emplace_back(exps_by_row[k2], a[r][cols + 1 + k2]);
        }
        return cert;
    }
    cert.member = true;
    cert.coefficients.assign(cols, BigRational(0));
    for (std::size_t j = 0; j < cols; ++j) {
        if (pivot_row_of_col[j] != SIZE_MAX) cert.coefficients[j] = a[pivot_row_of_col[j]][cols];
    }
    return cert;
}

// --------------------------------------------------------- leading term check

namespace {

LeadingTermReport leading_check(const WeakComposition& alpha, bool qside) {
    LeadingTermReport rep;
    rep.applicable = true;
    if (alpha.empty()) {
        rep.conforms = true;
        rep.detail = "empty index";
        return rep;
    }
    auto [rho, gam] = counts(alpha, !qside);
    rep.rho = rho.entries;
    rep.gamma = gam.entries;
    Poly p = qside ? qkey(alpha).exact_div_int(BigInt(1) << diag(alpha)) : pkey(alpha);
    if (rho.entries == gam.entries) {
        rep.conforms = p.is_natural();
        return rep;
    }
    int n = alpha.length();
    bool ok = p.is_natural();
    auto [e, c] = p.lex_min_term();
    ok = ok && comp_of(e) == rho.entries && c.is_one();
    ok = ok && !p.coeff(Exponents(gam.entries.parts().begin(), gam.entries.parts().end())).is_zero();
    for (const auto& [ee, cc] : p.terms()) ok = ok && static_cast<int>(ee.size()) <= n;
    rep.conforms = ok;
    if (!ok) rep.detail = "leading-term shape violated";
    return rep;
}

} // namespace

LeadingTermReport leading_term_check_q(const WeakComposition& alpha) {
    if (!is_symmetric(alpha)) throw DomainError("leading_term_check_q needs a symmetric index");
    return leading_check(alpha, true);
}

LeadingTermReport leading_term_check_p(const WeakComposition& alpha) {
    if (!is_skew_symmetric(alpha)) throw DomainError("leading_term_check_p needs a skew-symmetric index");
    return leading_check(alpha, false);
}

WeakComposition w_circ_alpha(const Permutation& w, const WeakComposition& alpha) {
    WeakComposition a = alpha;
    auto word = w.reduced_word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        int i = *it;
        if (a[i] > a[i + 1]) a = a.swapped(i);
    }
    return a;
}

} // namespace shiftedkeys
