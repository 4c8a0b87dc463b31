#pragma once

#include <set>

#include "samelson/poly.hpp"

namespace samelson {

/* A polynomial whose coefficients are known everywhere except on a recorded
   set of monomials.  Models generator images given modulo an ideal or only
   in part; arithmetic propagates the uncertainty conservatively. */
struct MaskedPoly {
    Poly known;
    std::set<Expo> unknown;

    explicit MaskedPoly(Poly k = Poly()) : known(std::move(k)) {}
    MaskedPoly(Poly k, std::set<Expo> u) : known(std::move(k)), unknown(std::move(u)) {}

    const RingPtr& ring() const { return known.ring(); }
    bool exact() const { return unknown.empty(); }
    bool fully_unknown() const { return known.is_zero() && unknown.empty(); }

    void add_unknown(const Expo& e) {
        if (!known.ring()->killed(e)) unknown.insert(e);
    }
};

MaskedPoly mp_add(const MaskedPoly& a, const MaskedPoly& b);
MaskedPoly mp_mul(const MaskedPoly& a, const MaskedPoly& b);
MaskedPoly mp_scale(const Rat& c, const MaskedPoly& a);
MaskedPoly mp_pow(const MaskedPoly& a, int n);

/* push through a variable substitution (images must be exact polynomials) */
MaskedPoly mp_map(const MaskedPoly& a, const RingPtr& target, const std::vector<Poly>& images);

/* all monomials of the given degree not killed by the ring */
std::vector<Expo> monomials_of_degree(const RingPtr& ring, int degree);

}  // namespace samelson
