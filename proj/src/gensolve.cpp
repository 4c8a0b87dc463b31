#include "samelson/gensolve.hpp"

#include <algorithm>

#include "samelson/linsolve.hpp"
#include "samelson/steenrod.hpp"
#include "samelson/symfunc.hpp"
#include "samelson/weights.hpp"

namespace samelson {

Rat GenCoordClass::lin_at(int d) const {
    if (lin_ambiguous.count(d))
        throw UndeterminedCrossTerm("linear slot x" + std::to_string(d) + " of degree-" +
                                    std::to_string(2 * n) + " class is undetermined");
    auto it = lin.find(d);
    return it == lin.end() ? Rat(0) : it->second;
}

Rat GenCoordClass::quad_at(int a, int b) const {
    if (a > b) std::swap(a, b);
    if (quad_ambiguous.count({a, b}))
        throw UndeterminedCrossTerm("quadratic slot x" + std::to_string(a) + "*x" +
                                    std::to_string(b) + " of degree-" + std::to_string(2 * n) +
                                    " class is undetermined");
    auto it = quad.find({a, b});
    return it == quad.end() ? Rat(0) : it->second;
}

bool GenCoordClass::quad_is_ambiguous(int a, int b) const {
    if (a > b) std::swap(a, b);
    return quad_ambiguous.count({a, b}) != 0;
}

std::string GenCoordClass::str() const {
    std::string s;
    auto app = [&](const std::string& t) {
        if (!s.empty()) s += " + ";
        s += t;
    };
    for (auto& [d, c] : lin) app(c.get_str() + "*x" + std::to_string(d));
    for (auto& [ab, c] : quad)
        app(c.get_str() + "*x" + std::to_string(ab.first) +
            (ab.first == ab.second ? "^2" : "*x" + std::to_string(ab.second)));
    for (int d : lin_ambiguous) app("?x" + std::to_string(d));
    for (auto& ab : quad_ambiguous)
        app("?x" + std::to_string(ab.first) + "*x" + std::to_string(ab.second));
    return s.empty() ? "0" : s;
}

namespace {

GroupId group_of_rep(int ell) {
    switch (ell) {
        case 6: return GroupId::E6;
        case 7: return GroupId::E7;
        case 8: return GroupId::E8;
    }
    throw DataError("group_of_rep: ell must be 6, 7 or 8");
}

std::vector<int> word_degrees(const RingPtr& xring, const Expo& e) {
    std::vector<int> ds;
    for (size_t t = 0; t < e.size(); ++t)
        for (int j = 0; j < e[t]; ++j) ds.push_back(xring->degrees[t]);
    return ds;
}

}  // namespace

PullbackSystem pullback_system(int ell, int n) {
    const GroupGens& gens = generator_images(group_of_rep(ell));
    PullbackSystem sys;
    sys.xring = gens.xring;
    sys.spin = gens.spin;
    sys.cols = monomials_of_degree(gens.xring, 2 * n);
    std::vector<MaskedPoly> psi;
    for (auto& e : sys.cols) {
        MaskedPoly prod{Poly(gens.spin, 1)};
        for (size_t v = 0; v < e.size(); ++v)
            for (int j = 0; j < e[v]; ++j) prod = mp_mul(prod, gens.image.at(gens.degrees[v]));
        psi.push_back(std::move(prod));
    }
    std::set<Expo> mask;
    for (auto& c : psi) mask.insert(c.unknown.begin(), c.unknown.end());
    std::set<Expo> rows;
    for (auto& c : psi)
        for (auto& [k, coef] : c.known.terms())
            if (!mask.count(k.second)) rows.insert(k.second);
    for (auto& e : monomials_of_degree(sys.spin, 2 * n))
        if (!mask.count(e)) rows.insert(e);
    sys.rows.assign(rows.begin(), rows.end());
    sys.a.assign(sys.rows.size(), std::vector<Rat>(sys.cols.size(), Rat(0)));
    for (size_t i = 0; i < sys.rows.size(); ++i)
        for (size_t j = 0; j < sys.cols.size(); ++j) sys.a[i][j] = psi[j].known.coeff(sys.rows[i]);
    return sys;
}

namespace {

GenCoordClass solve_rep_ch(int ell, int n) {
    GenCoordClass out;
    out.n = n;
    Poly s = rep_power_sum(ell, n);
    auto sys = pullback_system(ell, n);
    if (sys.cols.empty()) {
        if (!s.is_zero())
            throw InconsistentSystem("rep ch " + std::to_string(n) + ": no columns but nonzero data");
        return out;
    }
    std::vector<Rat> b(sys.rows.size(), Rat(0));
    for (size_t i = 0; i < sys.rows.size(); ++i) b[i] = s.coeff(sys.rows[i]);
    auto sol = solve_rational(sys.a, b);
    if (!sol.consistent)
        throw InconsistentSystem("rep ch solve inconsistent at ell=" + std::to_string(ell) +
                                 " n=" + std::to_string(n));
    for (size_t j = 0; j < sys.cols.size(); ++j) {
        auto ds = word_degrees(sys.xring, sys.cols[j]);
        if (ds.size() > 2) continue;
        if (!sol.value[j]) {
            if (ds.size() == 1)
                out.lin_ambiguous.insert(ds[0]);
            else
                out.quad_ambiguous.insert({ds[0], ds[1]});
            continue;
        }
        if (*sol.value[j] == 0) continue;
        if (ds.size() == 1)
            out.lin[ds[0]] = *sol.value[j];
        else
            out.quad[{ds[0], ds[1]}] = *sol.value[j];
    }
    return out;
}

struct GenArith {
    static GenCoordClass mul(const GenCoordClass& a, const GenCoordClass& b) {
        GenCoordClass r;
        r.n = a.n + b.n;
        auto addq = [&](int x, int y, const Rat& c) {
            if (x > y) std::swap(x, y);
            auto& slot = r.quad[{x, y}];
            slot += c;
            if (slot == 0) r.quad.erase({x, y});
        };
        for (auto& [da, ca] : a.lin)
            for (auto& [db, cb] : b.lin) addq(da, db, ca * cb);
        auto spread_ambig = [&](const GenCoordClass& u, const GenCoordClass& v) {
            for (int da : u.lin_ambiguous) {
                for (auto& [db, cb] : v.lin)
                    r.quad_ambiguous.insert({std::min(da, db), std::max(da, db)});
                for (int db : v.lin_ambiguous)
                    r.quad_ambiguous.insert({std::min(da, db), std::max(da, db)});
            }
        };
        spread_ambig(a, b);
        spread_ambig(b, a);
        for (auto& ab : r.quad_ambiguous) r.quad.erase(ab);
        return r;
    }
    static void add_scaled(GenCoordClass& r, const Rat& c, const GenCoordClass& a) {
        if (c == 0) return;
        for (auto& [d, v] : a.lin) {
            auto& slot = r.lin[d];
            slot += c * v;
            if (slot == 0) r.lin.erase(d);
        }
        for (auto& [ab, v] : a.quad) {
            auto& slot = r.quad[ab];
            slot += c * v;
            if (slot == 0) r.quad.erase(ab);
        }
        for (int d : a.lin_ambiguous) r.lin_ambiguous.insert(d);
        for (auto& ab : a.quad_ambiguous) r.quad_ambiguous.insert(ab);
        for (int d : r.lin_ambiguous) r.lin.erase(d);
        for (auto& ab : r.quad_ambiguous) r.quad.erase(ab);
    }
};

}  // namespace

const GenCoordClass& rep_ch_class(int ell, int n) {
    static std::map<std::pair<int, int>, GenCoordClass> cache;
    auto key = std::make_pair(ell, n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache.emplace(key, solve_rep_ch(ell, n)).first->second;
}

GenCoordClass ch_in_generators(int ell, int n) {
    GenCoordClass out;
    out.n = n;
    GenArith::add_scaled(out, frac(1, factorial(n)), rep_ch_class(ell, n));
    return out;
}

int chern_top(int ell) {
    switch (ell) {
        case 6: return 20;
        case 7: return 30;
        case 8: return 60;
    }
    throw DataError("chern_top: bad ell");
}

const std::vector<GenCoordClass>& chern_in_generators(int ell) {
    static std::map<int, std::vector<GenCoordClass>> cache;
    auto it = cache.find(ell);
    if (it != cache.end()) return it->second;
    int top = chern_top(ell);
    std::vector<GenCoordClass> c;  // c[k-1] = c_k
    for (int k = 1; k <= top; ++k) {
        GenCoordClass acc = rep_ch_class(ell, k);  // the power sum P_k
        for (int r = 1; r < k; ++r) {
            const GenCoordClass& er = c[r - 1];
            if (er.lin.empty() && er.quad.empty() && er.determined()) continue;
            GenCoordClass t = GenArith::mul(er, rep_ch_class(ell, k - r));
            GenArith::add_scaled(acc, r % 2 == 0 ? Rat(1) : Rat(-1), t);
        }
        GenCoordClass ck;
        ck.n = k;
        Rat f = frac(1, k);
        if (k % 2 == 0) f = -f;
        GenArith::add_scaled(ck, f, acc);
        c.push_back(std::move(ck));
    }
    return cache.emplace(ell, std::move(c)).first->second;
}

std::map<std::pair<int, int>, long> wu_resolve_quadratic(int ell, int n, long p) {
    int k = n - (int)p + 1;
    if (k < 2) throw NoResolvingIdentity("no Wu identity resolves c_" + std::to_string(n));
    const auto& cs = chern_in_generators(ell);
    if (n > (int)cs.size() || k > (int)cs.size())
        throw NoResolvingIdentity("c-rows out of range for the Wu identity");
    auto tr = wu_p1_chern_quadratic(k, p);
    if (tr.lin % p == 0)
        throw NoResolvingIdentity("P^1 c_" + std::to_string(k) +
                                  " has vanishing linear coefficient mod " + std::to_string(p));
    const GenCoordClass& ck = cs[k - 1];
    auto table = p1_generator_table(group_of_rep(ell), p);
    auto norm = [&](long v) { return ((v % p) + p) % p; };
    std::map<std::pair<int, int>, long> lhs;  // quadratic part of P^1(c_k), mod p
    auto addq = [&](int a, int b, long v) {
        if (a > b) std::swap(a, b);
        long w = norm(lhs[{a, b}] + v);
        if (w)
            lhs[{a, b}] = w;
        else
            lhs.erase({a, b});
    };
    for (auto& [d, coef] : ck.lin) {
        const P1Row& row = table.rows.at(d);
        if (row.underdetermined())
            throw UnderdeterminedRow("wu_resolve: P^1 x" + std::to_string(d) + " row incomplete");
        long c0 = norm_mod(coef, p);
        for (auto& [ab, mu] : row.quad) addq(ab.first, ab.second, c0 * mu % p);
    }
    for (auto& [ab, coef] : ck.quad) {
        auto [a, b] = ab;
        long c0 = norm_mod(coef, p);
        for (auto& [m, mu] : table.rows.at(a).lin) addq(m, b, c0 * mu % p);
        for (auto& [m, mu] : table.rows.at(b).lin) addq(a, m, c0 * mu % p);
    }
    for (auto& [abk, lam] : tr.quad) {
        auto [A, B] = abk;
        if (A > (int)cs.size() || B > (int)cs.size()) continue;
        for (auto& [da, va] : cs[A - 1].lin)
            for (auto& [db, vb] : cs[B - 1].lin) addq(da, db, -norm_mod(Rat(lam) * va * vb, p));
    }
    long inv = inv_mod(tr.lin, p);
    std::map<std::pair<int, int>, long> out;
    for (auto& [ab, v] : lhs) {
        long w = v * inv % p;
        if (w) out[ab] = w;
    }
    return out;
}

}  // namespace samelson
