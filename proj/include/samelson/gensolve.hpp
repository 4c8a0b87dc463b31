#pragma once

#include <map>
#include <set>

#include "samelson/liedata.hpp"

namespace samelson {

/* a cohomology class of BG recorded by its linear and quadratic parts in
   the chosen generators, with the undetermined slots listed explicitly */
struct GenCoordClass {
    int n = 0;  // degree 2n
    std::map<int, Rat> lin;                    // x_d -> coefficient
    std::map<std::pair<int, int>, Rat> quad;   // x_a x_b, a <= b
    std::set<int> lin_ambiguous;
    std::set<std::pair<int, int>> quad_ambiguous;

    Rat lin_at(int d) const;                             // 0 when determined-zero
    Rat quad_at(int a, int b) const;                     // throws on ambiguous slots
    bool quad_is_ambiguous(int a, int b) const;
    bool determined() const { return lin_ambiguous.empty() && quad_ambiguous.empty(); }
    std::string str() const;
};

/* the exact linear system matching x-monomial coefficients against
   H^{2n}(BSpin) through the generator images */
struct PullbackSystem {
    RingPtr xring;
    RingPtr spin;
    std::vector<Expo> cols;
    std::vector<Expo> rows;            // usable rows only
    std::vector<std::vector<Rat>> a;   // rows x cols
};
PullbackSystem pullback_system(int ell, int n);

/* n! ch_n(rho_ell) in generator coordinates */
const GenCoordClass& rep_ch_class(int ell, int n);
GenCoordClass ch_in_generators(int ell, int n);  // ch_n itself

/* Chern classes c_1..c_top(ell) by Newton inversion, word length <= 2 */
const std::vector<GenCoordClass>& chern_in_generators(int ell);
int chern_top(int ell);  // 20 / 30 / 60

/* quadratic part of c_n(rho_ell) mod p recovered through the Wu identity
   on P^1 c_{n-p+1}; throws NoResolvingIdentity when no identity applies */
std::map<std::pair<int, int>, long> wu_resolve_quadratic(int ell, int n, long p);

}  // namespace samelson
