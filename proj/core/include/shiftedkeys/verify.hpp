#pragma once

#include <map>
#include <string>
#include <vector>

#include "shiftedkeys/hecke.hpp"
#include "shiftedkeys/symfunc.hpp"

namespace shiftedkeys {

enum class ConjectureId {
    FKSS,        // symplectic involution Schuberts are sums of distinct P-keys
    FKSO,        // orthogonal ones are 2-power combinations of Q-keys
    FKGS,        // symplectic Grothendiecks are beta-power combinations of P-Lascoux
    SYM_UNIQUE,  // distinct symmetric indices give distinct Q-keys
    LEAD_Q,      // leading-term shape of 2^{-diag} qkey
    LEAD_P,      // leading-term shape of pkey
    VEX_CODE,    // vexillary z: S^O_z = qkey(code(z))
    ALPHA1_CONV, // qkey a scalar multiple of a pkey forces alpha_1 = 0
    PKEY_SHAPE,  // key terms of pkey have entries > 1 before their first zero
    GQ_Z1,       // z(1) = 1: stable orthogonal limit matches symmetrization
};

std::string conjecture_name(ConjectureId id);
std::vector<ConjectureId> all_conjectures();
ConjectureId conjecture_from_name(const std::string& name);

struct VerificationReport {
    std::string id;
    int bound = 0;
    std::string params;                     // sweep box, replayable
    std::string status;                     // verified | counterexample | inconclusive
    std::vector<std::string> witnesses;     // counterexample inputs, replayable
    std::map<std::string, long> stats;
    double seconds = 0.0;

    std::string to_json() const;
};

/// Exhaustive desk-scale sweep of one conjecture up to the given bound.
VerificationReport run(ConjectureId id, int bound);
int default_bound(ConjectureId id);

struct TableReport {
    bool ok = false;
    std::vector<std::string> generated_p, generated_q;
    std::vector<std::string> mismatches; // first differing rows
    double seconds = 0.0;
};

/// Regenerate the shifted-key expansion tables from the constructors and
/// key_expand, diff them against the stored fixtures, and re-check the linear
/// relation 2 kappa^P_{(n+1)1^n} = kappa^Q_{n101^{n-2}} - kappa^Q_{1n01^{n-2}}
/// + kappa^Q_{0n1^{n-1}} for n <= 5.  `include_slow` adds the multiplicity
/// fact for mu = (8,5,4,3).
TableReport reproduce_tables(bool include_slow = false);

} // namespace shiftedkeys
