#pragma once

#include <vector>

#include "ringops/fincat.hpp"

namespace ringops {

// Index data for the distributivity permutation nu: arity k, sizes
// j[r] for 1 <= r <= k, and a full matrix i[r][q] for 1 <= q <= j[r].
struct BlockData {
  int k = 0;
  std::vector<int> j;
  std::vector<std::vector<int>> i;
};

// sigma<j_1,...,j_k>: the permutation of j_1...j_k letters realizing the
// factor permutation j_1 ^ ... ^ j_k -> j_{s^{-1}(1)} ^ ... ^ j_{s^{-1}(k)}
// on lexicographic indices.
Permutation sigma_block(const Permutation& sigma, const std::vector<int>& j);

// tau_1 (x) ... (x) tau_k acting coordinatewise on lexicographic indices.
Permutation tensor_perms(const std::vector<Permutation>& taus);

// Block-sum analogues on j_1 + ... + j_k letters: sigma permutes the
// blocks, direct_sum acts blockwise.
Permutation block_sum_perm(const Permutation& sigma, const std::vector<int>& j);
Permutation direct_sum(const std::vector<Permutation>& taus);

// nu({k, j_r, i_{r,q}}): the natural distributivity permutation between
// the block-sum/lex order of v_Q (^_r i_{r,q_r}) and the lex order of
// ^_r (v_q i_{r,q}).
Permutation nu_distributivity(const BlockData& data);

// The factor-reordering permutation of the fiber (psi.phi)^{-1}(k): from
// the order of i increasing to the order j increasing then i increasing.
// Returned as a position permutation of |(psi.phi)^{-1}(k)| letters.
Permutation fiber_reorder(const FMorphism& psi, const FMorphism& phi, int k);

// sigma_k(psi,phi) on prod_{psi.phi(i)=k} r_i letters; identity of 1 when
// the fiber is empty.
Permutation sigma_k_comp(const FMorphism& psi, const FMorphism& phi,
                         const std::vector<int>& r, int k);

// Reorder lexicographic tuples: factor t of the output is factor
// pos(t) of the input, where pos = position_perm^{-1}.  Sends the lex
// rank over sizes (in input order) to the lex rank over permuted sizes.
Permutation reorder_factors(const Permutation& position_perm,
                            const std::vector<int>& sizes);

}  // namespace ringops
