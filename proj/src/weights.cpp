#include "samelson/weights.hpp"

#include <map>

#include "samelson/symfunc.hpp"

namespace samelson {

namespace {
constexpr int kTorus = 5;
}

WeightSystem ws_vector(int n) {
    if (n != 10 && n != 11) throw DataError("ws_vector: n must be 10 or 11");
    WeightSystem ws;
    ws.name = "lambda" + std::to_string(n);
    for (int i = 0; i < kTorus; ++i)
        for (int s : {2, -2}) {
            WeightVector w{std::vector<int>(kTorus, 0)};
            w.twice[i] = s;
            ws.weights.push_back(w);
        }
    if (n == 11) ws.weights.push_back(WeightVector{std::vector<int>(kTorus, 0)});
    return ws;
}

WeightSystem ws_half_spin_plus() {
    WeightSystem ws;
    ws.name = "Delta+";
    for (int mask = 0; mask < 32; ++mask) {
        int par = __builtin_popcount(mask) % 2;
        if (par != 0) continue;  // even number of minus signs
        WeightVector w{std::vector<int>(kTorus, 0)};
        for (int i = 0; i < kTorus; ++i) w.twice[i] = (mask >> i & 1) ? -1 : 1;
        ws.weights.push_back(w);
    }
    return ws;
}

WeightSystem ws_spin11() {
    WeightSystem ws;
    ws.name = "Delta";
    for (int mask = 0; mask < 32; ++mask) {
        WeightVector w{std::vector<int>(kTorus, 0)};
        for (int i = 0; i < kTorus; ++i) w.twice[i] = (mask >> i & 1) ? -1 : 1;
        ws.weights.push_back(w);
    }
    return ws;
}

WeightSystem ws_adjoint_spin11() {
    WeightSystem ws;
    ws.name = "adjoint";
    for (int i = 0; i < kTorus; ++i)
        for (int j = i + 1; j < kTorus; ++j)
            for (int si : {2, -2})
                for (int sj : {2, -2}) {
                    WeightVector w{std::vector<int>(kTorus, 0)};
                    w.twice[i] = si;
                    w.twice[j] = sj;
                    ws.weights.push_back(w);
                }
    for (int i = 0; i < kTorus; ++i)
        for (int s : {2, -2}) {
            WeightVector w{std::vector<int>(kTorus, 0)};
            w.twice[i] = s;
            ws.weights.push_back(w);
        }
    ws.trivial = kTorus;  // Cartan directions
    return ws;
}

WeightSystem ws_union(const WeightSystem& a, const WeightSystem& b) {
    WeightSystem ws;
    ws.name = a.name + "+" + b.name;
    ws.weights = a.weights;
    ws.weights.insert(ws.weights.end(), b.weights.begin(), b.weights.end());
    ws.trivial = a.trivial + b.trivial;
    return ws;
}

namespace {

Poly weight_linear(const WeightVector& w) {
    auto ring = t_ring(kTorus);
    Poly l(ring);
    for (int i = 0; i < kTorus; ++i)
        if (w.twice[i] != 0) l += frac(w.twice[i], 2) * Poly::variable(ring, "t" + std::to_string(i + 1));
    return l;
}

Poly poly_pow(const Poly& b, int n) {
    Poly r(b.ring(), 1);
    for (int i = 0; i < n; ++i) r = r * b;
    return r;
}

}  // namespace

Poly power_sum_ch_t(const WeightSystem& ws, int n) {
    auto ring = t_ring(kTorus);
    Poly acc(ring);
    if (n == 0) return Poly(ring, ws.dim());
    for (const auto& w : ws.weights) acc += poly_pow(weight_linear(w), n);
    return acc;
}

Poly total_chern_t(const WeightSystem& ws, int max_deg) {
    auto ring = t_ring(kTorus);
    Poly acc(ring, 1);
    for (const auto& w : ws.weights) {
        Poly f = Poly(ring, 1) + weight_linear(w);
        acc = (acc * f).truncate_degree(max_deg);
    }
    return acc;
}

RingPtr spin10_ring() { return spin_even_ring(5); }
RingPtr spin11_ring() { return pontryagin_ring(5); }

/* ---------- expression in Pontrjagin / Euler invariants ---------- */

Poly express_invariants(const Poly& t_poly, bool euler) {
    auto uring = u_ring(kTorus);
    Poly even(uring), odd(uring);
    for (auto& [k, c] : t_poly.terms()) {
        const Expo& e = k.second;
        bool all_even = true, all_odd = true;
        for (int i = 0; i < kTorus; ++i) {
            if (e[i] % 2) all_even = false;
            if (e[i] % 2 == 0) all_odd = false;
        }
        if (all_even) {
            Expo u(kTorus);
            for (int i = 0; i < kTorus; ++i) u[i] = e[i] / 2;
            even.add_term(u, c);
        } else if (all_odd && euler) {
            Expo u(kTorus);
            for (int i = 0; i < kTorus; ++i) u[i] = (e[i] - 1) / 2;
            odd.add_term(u, c);
        } else {
            throw NotInSpan("express_invariants: " + expo_str(*t_poly.ring(), e) +
                            " is not invariant");
        }
    }
    Poly even_e = symmetric_to_e(even);
    Poly odd_e = odd.is_zero() ? Poly(pontryagin_ring(kTorus)) : symmetric_to_e(odd);
    if (!euler) {
        // target spin11_ring = pontryagin_ring(5)
        return even_e;
    }
    auto target = spin10_ring();
    std::vector<Poly> img;
    for (int i = 1; i <= 4; ++i) img.push_back(Poly::variable(target, "p" + std::to_string(i)));
    img.push_back(Poly::variable(target, "c5", 2));  // p_5 = c_5^2
    Poly out = even_e.map_through(target, img);
    if (!odd_e.is_zero()) out += Poly::variable(target, "c5") * odd_e.map_through(target, img);
    return out;
}

/* ---------- Chern characters of the restricted representations ----------

   All spin-type constituents have multiplicative Chern character:
     ch(Delta)  = prod_i 2cosh(t_i/2),
     ch(Delta+) = (prod_i 2cosh(t_i/2) + prod_i 2sinh(t_i/2)) / 2,
     prod_i 2sinh(t_i/2) = c_5 * prod_i theta(u_i),
   so everything reduces to graded exponentials of power sums. */

namespace {

constexpr int kMaxWeight = 32;

std::vector<Rat> cosh_half_series(int n) {
    // 2cosh(t/2)/2 = sum u^k / (4^k (2k)!)
    std::vector<Rat> f(n, Rat(0));
    for (int k = 0; k < n; ++k) f[k] = Rat(1, pow_int(4, k) * factorial(2 * k));
    return f;
}

std::vector<Rat> sinh_half_series(int n) {
    // 2sinh(t/2)/t = sum u^k / (4^k (2k+1)!)
    std::vector<Rat> f(n, Rat(0));
    for (int k = 0; k < n; ++k) f[k] = Rat(1, pow_int(4, k) * factorial(2 * k + 1));
    return f;
}

Poly exp_of_logseries(const std::vector<Rat>& logf, int maxw) {
    auto ring = pontryagin_ring(kTorus);
    Poly a(ring);
    for (int m = 1; m <= maxw && (size_t)m < logf.size(); ++m)
        if (logf[m] != 0) a += logf[m] * power_sum_e(kTorus, m);
    return graded_exp(a, maxw);
}

struct RepSeries {
    // graded pieces by weight; even[w] sits in degree 4w
    std::vector<Poly> delta;       // ch parts of the 32-dim spin rep
    std::vector<Poly> delta_plus_even;
    std::vector<Poly> delta_plus_odd;  // coefficient of c_5, weight w in u
    std::vector<Poly> adjoint;
};

const RepSeries& series() {
    static RepSeries s = [] {
        RepSeries rs;
        auto ring = pontryagin_ring(kTorus);
        auto split = [&](const Poly& f, std::vector<Poly>& out) {
            out.assign(kMaxWeight + 1, Poly(ring));
            for (auto& [k, c] : f.terms()) out[k.first / 4].add_term(k.second, c);
        };
        Poly ef = Rat(32) * exp_of_logseries(series_log(cosh_half_series(kMaxWeight + 1), kMaxWeight + 1),
                                             kMaxWeight);
        split(ef, rs.delta);
        Poly et = exp_of_logseries(series_log(sinh_half_series(kMaxWeight + 1), kMaxWeight + 1),
                                   kMaxWeight);
        split(Rat(1, 2) * ef, rs.delta_plus_even);
        split(Rat(1, 2) * et, rs.delta_plus_odd);
        // adjoint: 2C^2 + 2C - D with C = sum P_w/(2w)!, D = sum 4^w P_w/(2w)!
        Poly C(ring), D(ring);
        for (int w = 0; w <= kMaxWeight; ++w) {
            Poly pw = power_sum_e(kTorus, w);
            C += Rat(1, factorial(2 * w)) * pw;
            D += frac(pow_int(4, w), factorial(2 * w)) * pw;
        }
        Poly A = Rat(2) * (C * C).truncate_degree(4 * kMaxWeight) + Rat(2) * C - D;
        split(A, rs.adjoint);
        return rs;
    }();
    return s;
}

}  // namespace

int rep_dimension(int ell) {
    switch (ell) {
        case 6: return 27;
        case 7: return 56;
        case 8: return 248;
    }
    throw DataError("rep_dimension: ell must be 6, 7 or 8");
}

std::vector<std::pair<WeightSystem, int>> rep_constituents(int ell) {
    switch (ell) {
        case 6: return {{ws_vector(10), 1}, {ws_half_spin_plus(), 1}};
        case 7: return {{ws_vector(11), 2}, {ws_spin11(), 1}};
        case 8: return {{ws_adjoint_spin11(), 1}, {ws_vector(11), 5}, {ws_spin11(), 4}};
    }
    throw DataError("rep_constituents: ell must be 6, 7 or 8");
}

int rep_trivial_count(int ell) {
    switch (ell) {
        case 6: return 1;
        case 7: return 2;
        case 8: return 10;
    }
    throw DataError("rep_trivial_count: bad ell");
}

Poly rep_power_sum(int ell, int n) {
    const auto& rs = series();
    auto ring5 = pontryagin_ring(kTorus);
    if (n == 0) {
        RingPtr target = ell == 6 ? spin10_ring() : spin11_ring();
        return Poly(target, rep_dimension(ell));
    }
    Int nf = factorial(n);
    if (ell == 6) {
        auto target = spin10_ring();
        std::vector<Poly> img;
        for (int i = 1; i <= 4; ++i) img.push_back(Poly::variable(target, "p" + std::to_string(i)));
        img.push_back(Poly::variable(target, "c5", 2));
        if (n % 2 == 0) {
            int w = n / 2;
            if (w > kMaxWeight) throw OutOfValidRange("rep_power_sum: weight too large");
            Poly e5 = Rat(2) * power_sum_e(kTorus, w) + Rat(nf) * rs.delta_plus_even[w];
            return e5.map_through(target, img);
        }
        if (n < 5) return Poly(target);
        int v = (n - 5) / 2;
        if (v > kMaxWeight) throw OutOfValidRange("rep_power_sum: weight too large");
        Poly odd = Rat(nf) * rs.delta_plus_odd[v];
        return Poly::variable(target, "c5") * odd.map_through(target, img);
    }
    auto target = spin11_ring();
    if (n % 2 == 1) return Poly(target);
    int w = n / 2;
    if (w > kMaxWeight) throw OutOfValidRange("rep_power_sum: weight too large");
    if (ell == 7) return Rat(4) * power_sum_e(kTorus, w) + Rat(nf) * rs.delta[w];
    if (ell == 8)
        return Rat(nf) * rs.adjoint[w] + Rat(10) * power_sum_e(kTorus, w) +
               Rat(4 * nf) * rs.delta[w];
    throw DataError("rep_power_sum: ell must be 6, 7 or 8");
}

}  // namespace samelson
