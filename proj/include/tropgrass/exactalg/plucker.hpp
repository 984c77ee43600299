#pragma once

// Pluecker ideals and the generic-matrix expansion check.

#include <vector>

#include "tropgrass/exactalg/poly.hpp"
#include "tropgrass/subsets.hpp"

namespace tropgrass::alg {

/// Ring in the C(n,d) variables p_S, S running over the d-subsets of [n] in
/// lexicographic order (p_123, p_124, ...).
RingPtr plucker_ring(int d, int n, Field field = Field());

/// Variable index of p_S in plucker_ring(d, n).
std::size_t plucker_index(Subset s, int n);

/// Signed Pluecker variable for an arbitrary index sequence: the sign of
/// the sorting permutation times p_sorted, or zero on a repeated index.
MultiPoly plucker_variable(const RingPtr& ring, const std::vector<int>& indices, int n);

/// Quadratic exchange relations indexed by (I, J), |I| = d-1, |J| = d+1
/// (all of them, possibly linearly dependent, zero ones dropped).
std::vector<MultiPoly> exchange_relations(int d, int n, Field field = Field());

/// Quadrics generating the Pluecker ideal I_{d,n}, 2 <= d < n. For d = 2
/// these are the C(n,4) three-term relations
/// p_ij p_kl - p_ik p_jl + p_il p_jk. With `minimal`, a linearly independent
/// subset of the exchange relations spanning the degree-2 part; otherwise
/// all nonzero exchange relations.
std::vector<MultiPoly> plucker_generators(int d, int n, Field field = Field(), bool minimal = true);

/// Ring with the d*n entries x_{r,c} ("x_1_1" ... ) of a generic matrix.
RingPtr generic_matrix_ring(int d, int n, Field field = Field());

/// Substitutes each p_S by the d x d minor on columns S of the generic d x n
/// matrix and expands. Zero output certifies f in I_{d,n}.
MultiPoly expand_on_generic_matrix(const MultiPoly& f, int d, int n);

}  // namespace tropgrass::alg
