#include "samelson/symfunc.hpp"

#include <map>

namespace samelson {

namespace {

std::vector<std::string> numbered(const std::string& stem, int from, int to) {
    std::vector<std::string> v;
    for (int i = from; i <= to; ++i) v.push_back(stem + std::to_string(i));
    return v;
}

}  // namespace

RingPtr pontryagin_ring(int rank) {
    static std::map<int, RingPtr> cache;
    auto it = cache.find(rank);
    if (it != cache.end()) return it->second;
    std::vector<int> degs;
    for (int i = 1; i <= rank; ++i) degs.push_back(4 * i);
    auto r = Ring::make(numbered("p", 1, rank), degs);
    cache[rank] = r;
    return r;
}

RingPtr spin_even_ring(int rank) {
    static std::map<int, RingPtr> cache;
    auto it = cache.find(rank);
    if (it != cache.end()) return it->second;
    auto names = numbered("p", 1, rank - 1);
    names.push_back("c" + std::to_string(rank));
    std::vector<int> degs;
    for (int i = 1; i < rank; ++i) degs.push_back(4 * i);
    degs.push_back(2 * rank);
    auto r = Ring::make(names, degs);
    cache[rank] = r;
    return r;
}

RingPtr u_ring(int rank) {
    static std::map<int, RingPtr> cache;
    auto it = cache.find(rank);
    if (it != cache.end()) return it->second;
    auto r = Ring::make(numbered("u", 1, rank), std::vector<int>(rank, 4));
    cache[rank] = r;
    return r;
}

RingPtr t_ring(int m) {
    static std::map<int, RingPtr> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    auto r = Ring::make(numbered("t", 1, m), std::vector<int>(m, 2));
    cache[m] = r;
    return r;
}

const Poly& power_sum_e(int rank, int m) {
    static std::map<std::pair<int, int>, Poly> cache;
    auto key = std::make_pair(rank, m);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto ring = pontryagin_ring(rank);
    Poly r(ring);
    if (m == 0) {
        r = Poly(ring, rank);
    } else {
        // Newton: P_m = sum_{i<=min(m-1,rank)} (-1)^{i-1} e_i P_{m-i} (+ (-1)^{m-1} m e_m)
        for (int i = 1; i <= rank && i < m; ++i) {
            Poly t = Poly::variable(ring, "p" + std::to_string(i)) * power_sum_e(rank, m - i);
            r += (i % 2 == 1) ? t : -t;
        }
        if (m <= rank) {
            Rat c = (m % 2 == 1) ? Rat(m) : Rat(-m);
            r += c * Poly::variable(ring, "p" + std::to_string(m));
        }
    }
    return cache.emplace(key, std::move(r)).first->second;
}

Poly elementary_in_u(int rank, int k) {
    auto ring = u_ring(rank);
    Poly r(ring);
    if (k == 0) return Poly(ring, 1);
    std::vector<int> idx(k);
    // iterate over k-subsets of {0..rank-1}
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        Expo e(rank, 0);
        for (int i : idx) e[i] = 1;
        r.add_term(e, 1);
        int i = k - 1;
        while (i >= 0 && idx[i] == rank - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return r;
}

std::vector<Rat> series_log(const std::vector<Rat>& f, int nterms) {
    if (f.empty() || f[0] != 1) throw DataError("series_log: constant term must be 1");
    // g = log f:  n g_n = n f_n - sum_{k=1}^{n-1} k g_k f_{n-k}
    std::vector<Rat> g(nterms, Rat(0));
    for (int n = 1; n < nterms; ++n) {
        Rat acc = (size_t)n < f.size() ? Rat(n) * f[n] : Rat(0);
        for (int k = 1; k < n; ++k)
            if ((size_t)(n - k) < f.size()) acc -= Rat(k) * g[k] * f[n - k];
        g[n] = acc / n;
    }
    return g;
}

Poly graded_exp(const Poly& a, int maxw) {
    auto ring = a.ring();
    // split by weight = degree/4
    std::vector<Poly> aw(maxw + 1, Poly(ring));
    for (auto& [k, c] : a.terms()) {
        if (k.first % 4 != 0) throw DataError("graded_exp: degree not a multiple of 4");
        int w = k.first / 4;
        if (w == 0) throw DataError("graded_exp: nonzero constant term");
        if (w <= maxw) aw[w].add_term(k.second, c);
    }
    std::vector<Poly> rw(maxw + 1, Poly(ring));
    rw[0] = Poly(ring, 1);
    for (int w = 1; w <= maxw; ++w) {
        Poly acc(ring);
        for (int m = 1; m <= w; ++m)
            if (!aw[m].is_zero() && !rw[w - m].is_zero()) acc += Rat(m) * (aw[m] * rw[w - m]);
        rw[w] = Rat(1, w) * acc;
    }
    Poly out(ring);
    for (auto& x : rw) out += x;
    return out;
}

namespace {

Poly drop_last_var(const Poly& f, const RingPtr& smaller) {
    Poly g(smaller);
    size_t n = f.ring()->nvars();
    for (auto& [k, c] : f.terms()) {
        if (k.second[n - 1] != 0) continue;
        Expo e(k.second.begin(), k.second.end() - 1);
        g.add_term(e, c);
    }
    return g;
}

Poly to_e_rec(const Poly& f, int rank) {
    auto ering = pontryagin_ring(rank);
    if (rank == 0) {
        Poly out(ering);
        for (auto& [k, c] : f.terms()) out.add_term(Expo{}, c);
        return out;
    }
    if (f.is_zero()) return Poly(ering);
    // g0: expression of f|_{u_rank=0} in the smaller elementary basis
    Poly f0 = drop_last_var(f, u_ring(rank - 1));
    Poly g0 = to_e_rec(f0, rank - 1);
    // reinterpret g0 in rank variables and expand back into u
    Poly g0_big(ering);
    std::vector<Poly> eimg;
    for (int i = 1; i < rank; ++i) eimg.push_back(Poly::variable(ering, "p" + std::to_string(i)));
    g0_big = g0.map_through(ering, eimg);
    std::vector<Poly> eexp;
    for (int i = 1; i <= rank; ++i) eexp.push_back(elementary_in_u(rank, i));
    Poly h = f - g0_big.map_through(u_ring(rank), eexp);
    if (h.is_zero()) return g0_big;
    // h must be divisible by e_rank = u_1...u_rank
    Poly q(u_ring(rank));
    for (auto& [k, c] : h.terms()) {
        Expo e = k.second;
        for (int i = 0; i < rank; ++i) {
            if (e[i] == 0) throw NotInSpan("symmetric_to_e: input not symmetric");
            e[i] -= 1;
        }
        q.add_term(e, c);
    }
    Poly qe = to_e_rec(q, rank);
    return g0_big + Poly::variable(ering, "p" + std::to_string(rank)) * qe;
}

}  // namespace

Poly symmetric_to_e(const Poly& f_u) {
    int rank = (int)f_u.ring()->nvars();
    return to_e_rec(f_u, rank);
}

namespace {

/* enumerate (i_1..i_n) with sum j*i_j = n, skipping parts with zero c_j */
void girard_rec(const std::vector<Poly>& c, int n, int maxpart, int rem, int parts, const Rat& invfact,
                const Poly& prod, Poly& out) {
    if (rem == 0) {
        // coefficient (-1)^{n+parts} n (parts-1)! / prod(i_j!)  [invfact carries 1/prod i_j!]
        Rat coeff = Rat(n) * Rat(factorial(parts - 1)) * invfact;
        if ((n + parts) % 2 == 1) coeff = -coeff;
        out += coeff * prod;
        return;
    }
    for (int j = std::min(maxpart, rem); j >= 1; --j) {
        if (c[j - 1].is_zero()) continue;
        // multiplicity of part j
        Poly pw = prod;
        Rat f = invfact;
        for (int m = 1; m * j <= rem; ++m) {
            pw = pw * c[j - 1];
            if (pw.is_zero()) break;
            f /= m;
            girard_rec(c, n, j - 1, rem - m * j, parts + m, f, pw, out);
        }
    }
}

}  // namespace

Poly girard_ch(const std::vector<Poly>& c, int n) {
    if (c.empty()) throw DataError("girard_ch: need at least c_1");
    auto ring = c[0].ring();
    Poly out(ring);
    girard_rec(c, n, std::min<int>(n, (int)c.size()), n, 0, 1, Poly(ring, 1), out);
    return out;
}

std::vector<Poly> newton_invert(const std::vector<Poly>& s, int up_to, const RingPtr& ring) {
    std::vector<Poly> e;  // e[k-1] = c_k
    for (int k = 1; k <= up_to; ++k) {
        Poly acc = (size_t)(k - 1) < s.size() ? s[k - 1] : Poly(ring);
        for (int r = 1; r < k; ++r) {
            if (e[r - 1].is_zero() || (size_t)(k - r - 1) >= s.size()) continue;
            Poly t = e[r - 1] * s[k - r - 1];
            acc += (r % 2 == 0) ? t : -t;
        }
        Rat f = Rat(1, k);
        if (k % 2 == 0) f = -f;
        e.push_back(f * acc);
    }
    return e;
}

}  // namespace samelson
