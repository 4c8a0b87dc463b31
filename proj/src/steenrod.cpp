#include "samelson/steenrod.hpp"

#include <algorithm>

#include "samelson/linsolve.hpp"
#include "samelson/symfunc.hpp"
#include "samelson/weights.hpp"

namespace samelson {

namespace {

/* power sums over an alphabet whose elementary symmetric functions are the
   ring variables in declared order */
const Poly& power_sum_generic(const RingPtr& ring, int m) {
    static std::map<std::pair<std::string, int>, Poly> cache;
    std::string sig;
    for (auto& n : ring->names) sig += n + ",";
    auto key = std::make_pair(sig, m);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    int rank = (int)ring->nvars();
    Poly r(ring, m == 0 ? Rat(rank) : Rat(0));
    if (m > 0) {
        for (int i = 1; i <= rank && i < m; ++i) {
            Expo e(rank, 0);
            e[i - 1] = 1;
            Poly t = Poly::monomial(ring, e, 1) * power_sum_generic(ring, m - i);
            r += (i % 2 == 1) ? t : -t;
        }
        if (m <= rank) {
            Expo e(rank, 0);
            e[m - 1] = 1;
            r += Poly::monomial(ring, e, m % 2 == 1 ? Rat(m) : Rat(-m));
        }
    }
    return cache.emplace(key, std::move(r)).first->second;
}

RingPtr chern_ring(int nvars) {
    static std::map<int, RingPtr> cache;
    auto it = cache.find(nvars);
    if (it != cache.end()) return it->second;
    std::vector<std::string> names;
    std::vector<int> degs;
    for (int i = 1; i <= nvars; ++i) {
        names.push_back("c" + std::to_string(i));
        degs.push_back(2 * i);
    }
    auto r = Ring::make(names, degs);
    cache[nvars] = r;
    return r;
}

/* m_{(q, 1^{k-1})} = sum_s (-1)^s P_{q+s} e_{k-1-s} over the ring's alphabet */
Poly hook_monomial_symmetric(const RingPtr& ring, int q, int k) {
    Poly out(ring);
    int rank = (int)ring->nvars();
    for (int s = 0; s <= k - 1; ++s) {
        int j = k - 1 - s;
        if (j > rank) continue;
        Poly e(ring, 1);
        if (j > 0) {
            Expo ex(rank, 0);
            ex[j - 1] = 1;
            e = Poly::monomial(ring, ex, 1);
        }
        Poly t = power_sum_generic(ring, q + s) * e;
        out += (s % 2 == 0) ? t : -t;
    }
    return out;
}

}  // namespace

Poly wu_p1_pontryagin(int n, long p, int rank) {
    if (n > rank) throw OutOfValidRange("wu_p1_pontryagin: n exceeds the rank");
    static std::map<std::tuple<int, long, int>, Poly> cache;
    auto key = std::make_tuple(n, p, rank);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Poly r = Rat(2) * hook_monomial_symmetric(pontryagin_ring(rank), (int)((p + 1) / 2), n);
    cache[key] = r;
    return cache.at(key);
}

Poly wu_p1_euler(long p, int rank) {
    auto target = spin_even_ring(rank);
    std::vector<Poly> img;
    for (int i = 1; i < rank; ++i) img.push_back(Poly::variable(target, "p" + std::to_string(i)));
    img.push_back(Poly::variable(target, "c" + std::to_string(rank), 2));
    Poly ps = power_sum_e(rank, (int)((p - 1) / 2)).map_through(target, img);
    return Poly::variable(target, "c" + std::to_string(rank)) * ps;
}

Poly wu_p1_chern(int k, long p, int nvars) {
    return hook_monomial_symmetric(chern_ring(nvars), (int)p, k);
}

WuChernTrunc wu_p1_chern_quadratic(int k, long p) {
    WuChernTrunc out;
    long m = p + k - 1;
    out.lin = ((k - 1) % p + p) % p;
    for (long B = 1; 2 * B <= m; ++B) {
        long A = m - B;
        long lam;
        if (A == B)
            lam = (A <= k - 1) ? 0 : -A;
        else
            lam = (B <= k - 1 ? A : 0) + (A <= k - 1 ? B : 0) - m;
        lam = (lam % p + p) % p;
        if (lam) out.quad[{(int)B, (int)A}] = lam;
    }
    return out;
}

/* ---------- displayed multinomial forms (oracle) ---------- */

namespace {

template <class F>
void partitions_rec(int rem, int maxpart, std::vector<int>& mult, F&& emit) {
    if (rem == 0) {
        emit(mult);
        return;
    }
    for (int j = std::min(maxpart, rem); j >= 1; --j) {
        ++mult[j - 1];
        partitions_rec(rem - j, j, mult, emit);
        --mult[j - 1];
    }
}

}  // namespace

Poly wu_p1_pontryagin_multinomial(int n, long p, int rank) {
    auto ring = pontryagin_ring(rank);
    Poly out(ring);
    int target = n + (int)(p - 1) / 2;
    std::vector<int> mult(rank, 0);
    partitions_rec(target, rank, mult, [&](const std::vector<int>& iv) {
        long tot = 0;
        for (int x : iv) tot += x;
        Rat inner(2 * n - 1);
        Int num = 0;
        for (int j = 1; j <= n - 1 && j <= rank; ++j) num += Int(2 * n + p - 1 - 2 * j) * iv[j - 1];
        if (num != 0) {
            if (tot == 1) throw DataError("wu multinomial: 0/0 with nonzero numerator");
            inner -= frac(num, tot - 1);
        }
        Rat coeff = frac(factorial(tot - 1), 1);
        for (int x : iv) coeff /= Rat(factorial(x));
        coeff *= inner;
        if ((tot + (p + 1) / 2) % 2 == 1) coeff = -coeff;
        Expo e(rank, 0);
        for (int j = 0; j < rank; ++j) e[j] = iv[j];
        out.add_term(e, coeff);
    });
    return out;
}

Poly wu_p1_chern_multinomial(int k, long p, int nvars) {
    auto ring = chern_ring(nvars);
    Poly out(ring);
    int target = k + (int)p - 1;
    std::vector<int> mult(nvars, 0);
    partitions_rec(target, nvars, mult, [&](const std::vector<int>& iv) {
        long tot = 0;
        for (int x : iv) tot += x;
        Rat inner(k - 1);
        Int num = 0;
        for (int j = 2; j <= k - 1 && j <= nvars; ++j) num += Int(k + p - 1 - j) * iv[j - 1];
        if (num != 0) {
            if (tot == 1) throw DataError("wu multinomial: 0/0 with nonzero numerator");
            inner -= frac(num, tot - 1);
        }
        Rat coeff = frac(factorial(tot - 1), 1);
        for (int x : iv) coeff /= Rat(factorial(x));
        coeff *= inner;
        if (tot % 2 == 0) coeff = -coeff;  // (-1)^{i_1+...+i_n-1}
        Expo e(nvars, 0);
        for (int j = 0; j < nvars; ++j) e[j] = iv[j];
        out.add_term(e, coeff);
    });
    return out;
}

/* ---------- the derivation P^1 on spin rings ---------- */

namespace {

const Poly& wu_of_variable(const RingPtr& ring, size_t var, long p) {
    static std::map<std::tuple<std::string, long, size_t>, Poly> cache;
    std::string sig;
    for (auto& n : ring->names) sig += n + ",";
    auto key = std::make_tuple(sig, p, var);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    const std::string& name = ring->names[var];
    Poly w(ring);
    if (name[0] == 'c') {
        int rank = std::stoi(name.substr(1));
        w = wu_p1_euler(p, rank);
    } else {
        int i = std::stoi(name.substr(1));
        bool euler = !ring->names.empty() && ring->names.back()[0] == 'c';
        if (euler) {
            int rank = std::stoi(ring->names.back().substr(1));
            auto full = wu_p1_pontryagin(i, p, rank);
            std::vector<Poly> img;
            for (int j = 1; j < rank; ++j) img.push_back(Poly::variable(ring, "p" + std::to_string(j)));
            img.push_back(Poly::variable(ring, ring->names.back(), 2));
            w = full.map_through(ring, img);
        } else {
            w = wu_p1_pontryagin(i, p, (int)ring->nvars());
        }
    }
    return cache.emplace(key, std::move(w)).first->second;
}

}  // namespace

Poly p1_extend(const Poly& a, long p) {
    auto ring = a.ring();
    Poly out(ring);
    for (auto& [k, c] : a.terms()) {
        const Expo& e = k.second;
        for (size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            Expo rest = e;
            rest[v] -= 1;
            out += (c * Rat(e[v])) * (Poly::monomial(ring, rest, 1) * wu_of_variable(ring, v, p));
        }
    }
    return out;
}

MaskedPoly p1_extend(const MaskedPoly& a, long p) {
    MaskedPoly out(p1_extend(a.known, p));
    auto ring = a.ring();
    for (auto& e : a.unknown) {
        for (size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            Expo rest = e;
            rest[v] -= 1;
            for (auto& [k, c] : wu_of_variable(ring, v, p).terms())
                out.add_unknown(expo_mul(rest, k.second));
        }
    }
    return out;
}

/* ---------- generator tables ---------- */

namespace {

struct XBasis {
    std::vector<Expo> monos;
    std::vector<MaskedPoly> psi;
};

XBasis pullback_columns(const GroupGens& gens, int degree) {
    XBasis xb;
    xb.monos = monomials_of_degree(gens.xring, degree);
    for (auto& e : xb.monos) {
        MaskedPoly prod{Poly(gens.spin, 1)};
        for (size_t v = 0; v < e.size(); ++v)
            for (int j = 0; j < e[v]; ++j) prod = mp_mul(prod, gens.image.at(gens.degrees[v]));
        xb.psi.push_back(std::move(prod));
    }
    return xb;
}

}  // namespace

P1Table p1_generator_table(GroupId g, long p) {
    // E8 rows are solved over Spin(15), where the p6, p7 coordinates pin
    // slots the Spin(11) restriction cannot see
    const GroupGens& gens = g == GroupId::E8 ? e8_images_spin15() : generator_images(g);
    P1Table table;
    table.g = g;
    table.p = p;
    for (int d : gens.degrees) {
        P1Row row;
        row.degree = d;
        int target = d + 2 * (int)(p - 1);
        auto xb = pullback_columns(gens, target);
        MaskedPoly lhs = p1_extend(gens.image.at(d), p);
        std::set<Expo> mask = lhs.unknown;
        for (auto& col : xb.psi) mask.insert(col.unknown.begin(), col.unknown.end());
        std::set<Expo> rows;
        auto collect = [&](const Poly& q) {
            for (auto& [k, c] : q.terms())
                if (!mask.count(k.second)) rows.insert(k.second);
        };
        collect(lhs.known);
        for (auto& col : xb.psi) collect(col.known);
        std::vector<Expo> rowv(rows.begin(), rows.end());
        std::vector<std::vector<long>> A(rowv.size(), std::vector<long>(xb.monos.size(), 0));
        std::vector<long> b(rowv.size(), 0);
        for (size_t i = 0; i < rowv.size(); ++i) {
            for (size_t j = 0; j < xb.monos.size(); ++j) {
                Rat c = xb.psi[j].known.coeff(rowv[i]);
                if (c != 0) A[i][j] = norm_mod(c, p);
            }
            Rat c = lhs.known.coeff(rowv[i]);
            if (c != 0) b[i] = norm_mod(c, p);
        }
        auto sol = solve_mod_p(A, b, p);
        if (!sol.consistent)
            throw InconsistentSystem("P1 table solve inconsistent for " + group_name(g) + " x" +
                                     std::to_string(d) + " p=" + std::to_string(p));
        for (size_t j = 0; j < xb.monos.size(); ++j) {
            const Expo& e = xb.monos[j];
            int wl = gens.xring->word_length(e);
            if (wl > 2) continue;
            if (!sol.value[j]) {
                row.undetermined.insert(expo_str(*gens.xring, e));
                continue;
            }
            long v = *sol.value[j];
            if (v == 0) continue;
            if (wl == 1) {
                for (size_t t = 0; t < e.size(); ++t)
                    if (e[t] == 1) row.lin[gens.degrees[t]] = v;
            } else {
                std::vector<int> ds;
                for (size_t t = 0; t < e.size(); ++t)
                    for (int j2 = 0; j2 < e[t]; ++j2) ds.push_back(gens.degrees[t]);
                row.quad[{ds[0], ds[1]}] = v;
            }
        }
        table.rows[d] = std::move(row);
    }
    if (g == GroupId::E7) {
        // rows for the generators shared with E8: fill anything the
        // Spin(11) solve leaves open from the E8 table along k2
        auto e8 = p1_generator_table(GroupId::E8, p);
        for (int d : {4, 16, 24, 28, 36}) {
            P1Row& row = table.rows.at(d);
            if (!row.underdetermined()) continue;
            P1Row derived = e7_row_from_e8(e8, d);
            if (derived.underdetermined()) continue;
            for (auto& [m, v] : derived.lin)
                if (!row.lin.count(m)) row.lin[m] = v;
            for (auto& [ab, v] : derived.quad)
                if (!row.quad.count(ab)) row.quad[ab] = v;
            row.undetermined.clear();
        }
    }
    return table;
}

std::map<std::pair<int, int>, long> p2_quadratic(const P1Table& t, int degree) {
    long p = t.p;
    const P1Row& row = t.rows.at(degree);
    auto norm = [&](long v) { return ((v % p) + p) % p; };
    std::map<std::pair<int, int>, long> acc;  // quadratic part of P^1(P^1 x)
    auto add = [&](int a, int b, long v) {
        if (a > b) std::swap(a, b);
        long w = norm(acc[{a, b}] + v);
        if (w)
            acc[{a, b}] = w;
        else
            acc.erase({a, b});
    };
    for (auto& [m, lam] : row.lin) {
        const P1Row& rm = t.rows.at(m);
        if (rm.underdetermined())
            throw UnderdeterminedRow("p2_quadratic: row x" + std::to_string(m) + " undetermined");
        for (auto& [ab, mu] : rm.quad) add(ab.first, ab.second, lam * mu % p);
    }
    for (auto& [ab, lam] : row.quad) {
        auto [a, b] = ab;
        const P1Row& ra = t.rows.at(a);
        const P1Row& rb = t.rows.at(b);
        for (auto& [m, mu] : ra.lin) add(m, b, lam * mu % p);
        for (auto& [m, mu] : rb.lin) add(a, m, lam * mu % p);
    }
    long half = inv_mod(2, p);
    std::map<std::pair<int, int>, long> out;
    for (auto& [ab, v] : acc) {
        long w = v * half % p;
        if (w) out[ab] = w;
    }
    return out;
}

P1Row e7_row_from_e8(const P1Table& e8_table, int degree) {
    long p = e8_table.p;
    const P1Row& src = e8_table.rows.at(degree);
    const auto& pulls = e7_quadratic_pullbacks();
    static const std::set<int> shared{4, 16, 24, 28, 36};
    P1Row out;
    out.degree = degree;
    out.undetermined = src.undetermined;
    auto norm = [&](long v) { return ((v % p) + p) % p; };
    auto addq = [&](int a, int b, long v) {
        if (a > b) std::swap(a, b);
        long w = norm(out.quad[{a, b}] + v);
        if (w)
            out.quad[{a, b}] = w;
        else
            out.quad.erase({a, b});
    };
    for (auto& [m, lam] : src.lin) {
        if (shared.count(m)) {
            out.lin[m] = lam;
            continue;
        }
        auto it = pulls.find(m);
        if (it == pulls.end()) throw DataError("e7_row_from_e8: no pullback for x" + std::to_string(m));
        const auto& xr = it->second.ring();
        for (auto& [k, c] : it->second.terms()) {
            std::vector<int> ds;
            for (size_t t = 0; t < k.second.size(); ++t)
                for (int j = 0; j < k.second[t]; ++j) ds.push_back(xr->degrees[t]);
            addq(ds[0], ds[1], norm_mod(Rat(lam) * c, p));
        }
    }
    for (auto& [ab, lam] : src.quad)
        if (shared.count(ab.first) && shared.count(ab.second)) addq(ab.first, ab.second, lam);
    return out;
}

std::string p1_row_str(const P1Row& row) {
    std::string s;
    auto app = [&](const std::string& t) {
        if (!s.empty()) s += " + ";
        s += t;
    };
    for (auto& [m, v] : row.lin) app(std::to_string(v) + "x" + std::to_string(m));
    for (auto& [ab, v] : row.quad) {
        std::string mono = ab.first == ab.second
                               ? "x" + std::to_string(ab.first) + "^2"
                               : "x" + std::to_string(ab.first) + "*x" + std::to_string(ab.second);
        app(std::to_string(v) + mono);
    }
    for (auto& u : row.undetermined) app("?" + u);
    return s.empty() ? "0" : s;
}

}  // namespace samelson
