#include "samelson/masked.hpp"

namespace samelson {

MaskedPoly mp_add(const MaskedPoly& a, const MaskedPoly& b) {
    MaskedPoly r(a.known + b.known);
    for (auto& e : a.unknown) r.add_unknown(e);
    for (auto& e : b.unknown) r.add_unknown(e);
    return r;
}

MaskedPoly mp_scale(const Rat& c, const MaskedPoly& a) {
    MaskedPoly r(c * a.known);
    if (c != 0) r.unknown = a.unknown;
    return r;
}

MaskedPoly mp_mul(const MaskedPoly& a, const MaskedPoly& b) {
    MaskedPoly r(a.known * b.known);
    auto spread = [&](const std::set<Expo>& mask, const MaskedPoly& other) {
        for (auto& e : mask) {
            for (auto& [k, c] : other.known.terms()) r.add_unknown(expo_mul(e, k.second));
            for (auto& e2 : other.unknown) r.add_unknown(expo_mul(e, e2));
        }
    };
    spread(a.unknown, b);
    spread(b.unknown, MaskedPoly(a.known));  // a.unknown x b.unknown already covered
    return r;
}

MaskedPoly mp_pow(const MaskedPoly& a, int n) {
    MaskedPoly r(Poly(a.ring(), 1));
    for (int i = 0; i < n; ++i) r = mp_mul(r, a);
    return r;
}

MaskedPoly mp_map(const MaskedPoly& a, const RingPtr& target, const std::vector<Poly>& images) {
    MaskedPoly r(a.known.map_through(target, images));
    for (auto& e : a.unknown) {
        Poly m(target, 1);
        for (size_t i = 0; i < e.size(); ++i)
            for (int j = 0; j < e[i]; ++j) m = m * images[i];
        for (auto& [k, c] : m.terms()) r.add_unknown(k.second);
    }
    return r;
}

namespace {

void enumerate_rec(const RingPtr& ring, int var, int rem, Expo& cur, std::vector<Expo>& out) {
    if (var == (int)ring->nvars()) {
        if (rem == 0 && !ring->killed(cur)) out.push_back(cur);
        return;
    }
    int d = ring->degrees[var];
    for (int k = 0; k * d <= rem; ++k) {
        cur[var] = k;
        enumerate_rec(ring, var + 1, rem - k * d, cur, out);
    }
    cur[var] = 0;
}

}  // namespace

std::vector<Expo> monomials_of_degree(const RingPtr& ring, int degree) {
    std::vector<Expo> out;
    Expo cur(ring->nvars(), 0);
    enumerate_rec(ring, 0, degree, cur, out);
    return out;
}

}  // namespace samelson
