#include "shiftedkeys/operators.hpp"

namespace shiftedkeys {

Poly apply(OperatorKind kind, int i, const Poly& f) {
    if (i < 1) throw DomainError("operator index must be positive");
    switch (kind) {
        case OperatorKind::DD: return f.dd_pipeline(i, false, false);
        case OperatorKind::ISO: return f.dd_pipeline(i, true, false);
        case OperatorKind::BAR: return f.dd_pipeline(i, true, false) - f;
        case OperatorKind::DD_B: return f.dd_pipeline(i, false, true);
        case OperatorKind::ISO_B: return f.dd_pipeline(i, true, true);
        case OperatorKind::BAR_B: return f.dd_pipeline(i, true, true) - f;
    }
    throw DomainError("unknown operator kind");
}

Poly apply_word(OperatorKind kind, const std::vector<int>& word, const Poly& f) {
    Poly g = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) g = apply(kind, *it, g);
    return g;
}

Poly apply_perm(OperatorKind kind, const Permutation& w, const Poly& f) {
    return apply_word(kind, w.reduced_word(), f);
}

Poly symmetrize(OperatorKind kind, int n, const Poly& f) {
    if (kind != OperatorKind::ISO && kind != OperatorKind::ISO_B)
        throw DomainError("symmetrize expects an isobaric operator kind");
    Poly g = f;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = n - 1; i >= 1; --i) {
            // an s_i-symmetric polynomial is already fixed by the isobaric
            // operators; the swap test is much cheaper than applying one
            if (g.swap_vars(i) == g) continue;
            g = apply(kind, i, g);
            changed = true;
        }
    }
    return g;
}

} // namespace shiftedkeys
