#include "shiftedkeys/hecke.hpp"

#include <algorithm>
#include <sstream>

namespace shiftedkeys {

WeakComposition HeckeFactorization::weight() const {
    std::vector<int> w;
    w.reserve(blocks.size());
    for (const auto& b : blocks) w.push_back(static_cast<int>(b.size()));
    return WeakComposition(std::move(w));
}

std::vector<int> HeckeFactorization::concatenation() const {
    std::vector<int> out;
    for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
    return out;
}

bool HeckeFactorization::bounded() const {
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].empty()) continue;
        int mn = *std::min_element(blocks[i].begin(), blocks[i].end());
        if (static_cast<int>(i) + 1 > mn) return false;
    }
    return true;
}

std::string HeckeFactorization::str() const {
    std::ostringstream out;
    for (const auto& b : blocks) {
        out << "(";
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (k) out << ",";
            out << b[k];
        }
        out << ")";
    }
    return out.str();
}

bool is_hecke_word(const Permutation& w, const std::vector<int>& word) {
    return demazure_product(word) == w;
}

std::vector<HeckeFactorization> bhf_enumerate(const Permutation& w) {
    std::vector<HeckeFactorization> out;
    if (w.is_identity()) {
        out.push_back(HeckeFactorization{});
        return out;
    }
    int maxletter = w.window_size() - 1;
    std::vector<std::vector<int>> blocks;
    // block i may only use letters in [i, maxletter]; the Demazure product is
    // monotone, so prefixes must stay below w in Bruhat order
    auto rec = [&](auto&& self, int blockidx, const Permutation& prefix) -> void {
        if (blockidx > maxletter) {
            if (prefix == w) {
                HeckeFactorization hf{blocks};
                while (!hf.blocks.empty() && hf.blocks.back().empty()) hf.blocks.pop_back();
                out.push_back(std::move(hf));
            }
            return;
        }
        // decreasing subsets of [blockidx, maxletter]
        std::vector<int> block;
        auto pick = [&](auto&& pself, int next_below, const Permutation& acc) -> void {
            // close the block and move on
            blocks.push_back(block);
            self(self, blockidx + 1, acc);
            blocks.pop_back();
            for (int letter = next_below; letter >= blockidx; --letter) {
                Permutation nxt = acc;
                if (nxt(letter) < nxt(letter + 1)) nxt = nxt * Permutation::s(letter);
                if (!bruhat_leq(nxt, w)) continue;
                block.push_back(letter);
                pself(pself, letter - 1, nxt);
                block.pop_back();
            }
        };
        pick(pick, maxletter, prefix);
    };
    rec(rec, 1, Permutation::identity());
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<FpfInvolution> star_apply(const std::optional<FpfInvolution>& z, int i) {
    if (!z) return std::nullopt;
    int a = (*z)(i), b = (*z)(i + 1);
    if (a == i + 1) return std::nullopt; // (i, i+1) is already a cycle
    if (a > b) return z;                 // i + 1 != a > b != i here: absorbed
    return z->conjugate_s(i);
}

bool is_sp_hecke_word(const FpfInvolution& z, const std::vector<int>& word) {
    std::optional<FpfInvolution> cur = FpfInvolution::base();
    for (int i : word) cur = star_apply(cur, i);
    return cur.has_value() && *cur == z;
}

std::vector<Permutation> bsp(const FpfInvolution& z) {
    Poly g = groth_sp(z);
    int d = static_cast<int>(z.d_sp().size());
    PermExpansion ex = grothendieck_expand(g);
    std::vector<Permutation> out;
    for (const auto& [w, c] : ex.terms) {
        if (w.length() < d || c != BetaScalar::beta(w.length() - d))
            throw InvariantError("bsp: coefficient of " + w.str() + " is " + c.str() +
                                 ", expected beta^" + std::to_string(w.length() - d));
        out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool desv_cover_check(const FpfInvolution& z) {
    auto visible = z.visible_descents();
    int maxvis = visible.empty() ? 0 : visible.back();
    for (const auto& w : bsp(z)) {
        for (int i : w.descents())
            if (i > maxvis) return false;
    }
    return true;
}

} // namespace shiftedkeys
