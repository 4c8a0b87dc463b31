#pragma once

#include <string>
#include <vector>

#include "samelson/poly.hpp"

namespace samelson {

/* a maximal-torus weight over t_1..t_5, coordinates stored doubled so
   half-spin weights stay integral */
struct WeightVector {
    std::vector<int> twice;
};

struct WeightSystem {
    std::string name;
    std::vector<WeightVector> weights;
    int trivial = 0;
    int dim() const { return (int)weights.size() + trivial; }
};

WeightSystem ws_vector(int n);        // lambda_n restricted to the rank-5 torus, n = 10 or 11
WeightSystem ws_half_spin_plus();     // positive half spin rep of Spin(10), 16 weights
WeightSystem ws_spin11();             // spin rep of Spin(11), 32 weights
WeightSystem ws_adjoint_spin11();     // 55-dimensional adjoint
WeightSystem ws_union(const WeightSystem& a, const WeightSystem& b);

/* sum over weights of w^n, exact, as a t-polynomial (small n only) */
Poly power_sum_ch_t(const WeightSystem& ws, int n);
/* product over weights of (1+w), truncated by degree */
Poly total_chern_t(const WeightSystem& ws, int max_deg);

/* H^*(BSpin(10)) and H^*(BSpin(11)) */
RingPtr spin10_ring();
RingPtr spin11_ring();

/* invariant expression of a signed-permutation-invariant t-polynomial:
   target spin11_ring when euler=false, spin10_ring when euler=true */
Poly express_invariants(const Poly& t_poly, bool euler);

/* n! ch_n of the restriction of rho_ell along the Spin subgroup, exact,
   in spin10_ring (ell=6) or spin11_ring (ell=7,8) */
Poly rep_power_sum(int ell, int n);
int rep_dimension(int ell);

/* constituents of the restricted representation, for audits */
std::vector<std::pair<WeightSystem, int>> rep_constituents(int ell);
int rep_trivial_count(int ell);

}  // namespace samelson
