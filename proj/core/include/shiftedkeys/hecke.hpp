#pragma once

#include <optional>
#include <vector>

#include "shiftedkeys/expand.hpp"

namespace shiftedkeys {

/// Blocks of strictly decreasing words whose concatenation is a Hecke word;
/// bounded when block i is empty or has min(a^i) >= i.
struct HeckeFactorization {
    std::vector<std::vector<int>> blocks;

    WeakComposition weight() const;
    std::vector<int> concatenation() const;
    bool bounded() const;
    friend bool operator==(const HeckeFactorization& a, const HeckeFactorization& b) {
        return a.blocks == b.blocks;
    }
    friend bool operator<(const HeckeFactorization& a, const HeckeFactorization& b) {
        return a.blocks < b.blocks;
    }
    std::string str() const;
};

bool is_hecke_word(const Permutation& w, const std::vector<int>& word);

/// All bounded Hecke factorizations of w (letters below the window size,
/// block count bounded by the largest letter).
std::vector<HeckeFactorization> bhf_enumerate(const Permutation& w);

/// z * s_i in the symplectic 0-Hecke action; nullopt is the absorbing null.
std::optional<FpfInvolution> star_apply(const std::optional<FpfInvolution>& z, int i);
bool is_sp_hecke_word(const FpfInvolution& z, const std::vector<int>& word);

/// The finite set B^Sp(z) with G^Sp_z = sum_w beta^{l(w)-|D^Sp(z)|} G_w,
/// recovered from the Grothendieck expansion; the single-power coefficient
/// shape is validated and a violation is an invariant failure.
std::vector<Permutation> bsp(const FpfInvolution& z);

/// Every right descent of every w in B^Sp(z) sits weakly below some
/// fpf-visible descent of z.
bool desv_cover_check(const FpfInvolution& z);

} // namespace shiftedkeys
