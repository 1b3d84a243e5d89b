#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dtk/formula.hpp"
#include "dtk/structures.hpp"

namespace dtk {

using Rng = std::mt19937_64;

/// 1..max_states states named s0, s1, ...; up to 2n transitions, about 40%
/// of them silent, the rest over the first `num_actions` of a, b, c, ...
Lts random_lts(Rng& rng, std::size_t max_states, std::size_t num_actions);
/// Same shape; each of the first `num_props` of p, q, r, ... holds with
/// probability one half.
KripkeStructure random_ks(Rng& rng, std::size_t max_states, std::size_t num_props);

std::vector<std::string> action_names(std::size_t n);
std::vector<std::string> prop_names(std::size_t n);

/// Random state formula of operator depth <= depth.
StateFormula random_formula(Rng& rng, const std::vector<std::string>& props, unsigned depth,
                            bool allow_ginf = true);
/// Random next-free path formula of operator depth <= depth.
PathFormula random_path_formula(Rng& rng, const std::vector<std::string>& props, unsigned depth,
                                bool allow_infinity = true);

}  // namespace dtk
