#pragma once

#include <string>
#include <utility>
#include <vector>

#include "shiftedkeys/polyring.hpp"

namespace shiftedkeys::fixtures {

/// Orthogonal Grothendieck polynomial of the non-vexillary involution
/// (1 2)(3 4), which has no divided-difference formula; shipped as a stored
/// value (parse-only) for expansion checks.
const Poly& groth_o_2143();

/// Its Grothendieck expansion: (one-line permutation, coefficient) pairs.
const std::vector<std::pair<std::string, std::string>>& groth_o_2143_expansion();

/// Rows of the reference key-expansion tables for the shifted keys of
/// (skew-)symmetric partitions up to degree 6, in canonical text form.
const std::vector<std::string>& pkey_table_rows();
const std::vector<std::string>& qkey_table_rows();

} // namespace shiftedkeys::fixtures
