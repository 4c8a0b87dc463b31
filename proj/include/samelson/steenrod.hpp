#pragma once

#include <map>
#include <set>

#include "samelson/liedata.hpp"
#include "samelson/masked.hpp"

namespace samelson {

/* P^1 p_n in H^*(BSpin; Z/p), as the exact integral representative
   2 m_{((p+1)/2, 1^{n-1})}(u) expanded in p_1..p_rank */
Poly wu_p1_pontryagin(int n, long p, int rank);

/* P^1 on the Euler class of BSpin(2 rank): c * P_{(p-1)/2}(u) */
Poly wu_p1_euler(long p, int rank);

/* P^1 c_k in H^*(BU(nvars); Z/p) via m_{(p, 1^{k-1})} */
Poly wu_p1_chern(int k, long p, int nvars);

/* word-length <= 2 part of P^1 c_k: the coefficient of c_{k+p-1} and the
   coefficients of c_a c_b with a+b = k+p-1, all mod p */
struct WuChernTrunc {
    long lin = 0;
    std::map<std::pair<int, int>, long> quad;  // key a <= b
};
WuChernTrunc wu_p1_chern_quadratic(int k, long p);

/* the multinomial closed forms, kept as an independent oracle */
Poly wu_p1_pontryagin_multinomial(int n, long p, int rank);
Poly wu_p1_chern_multinomial(int k, long p, int nvars);

/* P^1 extended as a derivation over a Pontrjagin or Spin(even) ring */
Poly p1_extend(const Poly& a, long p);
MaskedPoly p1_extend(const MaskedPoly& a, long p);

/* one row of a P^1 table: linear and quadratic parts of P^1 x_d mod p */
struct P1Row {
    int degree = 0;
    std::map<int, long> lin;                   // x_m -> coefficient
    std::map<std::pair<int, int>, long> quad;  // x_a x_b, a <= b
    std::set<std::string> undetermined;        // slots the solve could not pin
    bool underdetermined() const { return !undetermined.empty(); }
};

struct P1Table {
    GroupId g;
    long p = 0;
    std::map<int, P1Row> rows;
};

P1Table p1_generator_table(GroupId g, long p);

/* quadratic part of P^2 x_d = (1/2) P^1 P^1 x_d, from table rows only */
std::map<std::pair<int, int>, long> p2_quadratic(const P1Table& t, int degree);

/* E7 rows for the generators shared with E8, derived along k2 */
P1Row e7_row_from_e8(const P1Table& e8_table, int degree);

std::string p1_row_str(const P1Row& row);

}  // namespace samelson
