#pragma once

#include <vector>

#include "shiftedkeys/permutations.hpp"
#include "shiftedkeys/polyring.hpp"

namespace shiftedkeys {

/// DD   : dd_i f = (f - s_i f)/(x_i - x_{i+1})        dd^2 = 0
/// ISO  : pi_i f = dd_i(x_i f)                        pi^2 = pi
/// BAR  : pibar_i = pi_i - 1                          pibar^2 = -pibar
/// DD_B : dd^b_i f = dd_i((1 + b x_{i+1}) f)          (dd^b)^2 = -b dd^b
/// ISO_B: pi^b_i f = pi_i((1 + b x_{i+1}) f)          (pi^b)^2 = pi^b
/// BAR_B: pibar^b_i = pi^b_i - 1                      (pibar^b)^2 = -pibar^b
enum class OperatorKind { DD, ISO, BAR, DD_B, ISO_B, BAR_B };

Poly apply(OperatorKind kind, int i, const Poly& f);

/// Left-to-right operator word: apply_word(k, {i1,...,il}, f) computes
/// op_{i1}(op_{i2}(... op_{il}(f))).
Poly apply_word(OperatorKind kind, const std::vector<int>& word, const Poly& f);

/// op_w via a reduced word of w.
Poly apply_perm(OperatorKind kind, const Permutation& w, const Poly& f);

/// pi_{w_n} f (kind ISO) or pi^b_{w_n} f (kind ISO_B); the result is
/// symmetric in x_1..x_n.  Computed by sweeping the idempotent generators to
/// a fixed point, which skips already-symmetric prefixes.
Poly symmetrize(OperatorKind kind, int n, const Poly& f);

} // namespace shiftedkeys
