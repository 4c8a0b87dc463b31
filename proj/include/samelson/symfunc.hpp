#pragma once

#include <vector>

#include "samelson/poly.hpp"

namespace samelson {

/* H^*(BSpin(2rank+1)): Z[p_1..p_rank], |p_i| = 4i */
RingPtr pontryagin_ring(int rank);
/* H^*(BSpin(2rank)): Z[p_1..p_{rank-1}, c_rank], |c_rank| = 2rank */
RingPtr spin_even_ring(int rank);
/* internal u_i = t_i^2 variables, |u_i| = 4 */
RingPtr u_ring(int rank);
/* torus variables t_1..t_m, |t_i| = 2 */
RingPtr t_ring(int m);

/* power sum P_m(u_1..u_rank) written in the elementary symmetric basis,
   i.e. as a polynomial in p_1..p_rank; cached */
const Poly& power_sum_e(int rank, int m);

/* e_k expanded as a u-polynomial */
Poly elementary_in_u(int rank, int k);

/* log of a rational power series with constant term 1 */
std::vector<Rat> series_log(const std::vector<Rat>& f, int nterms);

/* exp of a polynomial with no constant term, graded by degree/4,
   truncated to weight <= maxw */
Poly graded_exp(const Poly& a, int maxw);

/* unique expression of a symmetric u-polynomial in p_1..p_rank;
   throws NotInSpan when the input is not symmetric */
Poly symmetric_to_e(const Poly& f_u);

/* n! ch_n from Chern classes c_1..c_n (Girard's power-sum formula);
   c[i-1] = c_i, zero polys allowed */
Poly girard_ch(const std::vector<Poly>& c, int n);

/* recover c_1..c_up_to from the power sums s[k-1] = k! ch_k */
std::vector<Poly> newton_invert(const std::vector<Poly>& s, int up_to, const RingPtr& ring);

}  // namespace samelson
