#include "samelson/linsolve.hpp"

#include <algorithm>

namespace samelson {

namespace {

/* Gauss-Jordan over an abstract field; returns pivot column per row-echelon
   step.  Determinedness: after RREF, a pivot unknown is pinned exactly when
   its row carries no free column. */
template <class T, class Ops>
void rref(std::vector<std::vector<T>>& A, std::vector<T>& b, bool& consistent,
          std::vector<std::optional<T>>& value, const Ops& ops) {
    size_t rows = A.size();
    size_t cols = rows ? A[0].size() : 0;
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = rows;
        for (size_t i = r; i < rows; ++i)
            if (!ops.is0(A[i][c])) {
                sel = i;
                break;
            }
        if (sel == rows) continue;
        std::swap(A[sel], A[r]);
        std::swap(b[sel], b[r]);
        T inv = ops.inv(A[r][c]);
        for (size_t j = c; j < cols; ++j) A[r][j] = ops.mul(A[r][j], inv);
        b[r] = ops.mul(b[r], inv);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || ops.is0(A[i][c])) continue;
            T f = A[i][c];
            for (size_t j = c; j < cols; ++j) A[i][j] = ops.sub(A[i][j], ops.mul(f, A[r][j]));
            b[i] = ops.sub(b[i], ops.mul(f, b[r]));
        }
        pivot_col.push_back(c);
        ++r;
    }
    consistent = true;
    for (size_t i = r; i < rows; ++i)
        if (!ops.is0(b[i])) consistent = false;
    value.assign(cols, std::nullopt);
    if (!consistent) return;
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivot_col) is_pivot[c] = true;
    for (size_t i = 0; i < pivot_col.size(); ++i) {
        size_t c = pivot_col[i];
        bool pinned = true;
        for (size_t j = 0; j < cols; ++j)
            if (!is_pivot[j] && !ops.is0(A[i][j])) pinned = false;
        if (pinned) value[c] = b[i];
    }
}

struct RatOps {
    bool is0(const Rat& a) const { return a == 0; }
    Rat inv(const Rat& a) const { return Rat(1) / a; }
    Rat mul(const Rat& a, const Rat& b) const { return a * b; }
    Rat sub(const Rat& a, const Rat& b) const { return a - b; }
};

struct FpOps {
    long p;
    bool is0(long a) const { return a % p == 0; }
    long inv(long a) const { return inv_mod(((a % p) + p) % p, p); }
    long mul(long a, long b) const { return (long)((__int128)a * b % p + p) % p; }
    long sub(long a, long b) const { return ((a - b) % p + p) % p; }
};

}  // namespace

long inv_mod(long a, long p) {
    long t = 0, newt = 1, r = p, newr = a % p;
    if (newr < 0) newr += p;
    while (newr != 0) {
        long q = r / newr;
        std::swap(t -= q * newt, newt);
        std::swap(r -= q * newr, newr);
    }
    if (r != 1) throw std::invalid_argument("inv_mod: not invertible");
    return t < 0 ? t + p : t;
}

long norm_mod(const Rat& a, long p) { return (long)mod_prime_power(a, p, 1).get_si(); }

RatSolve solve_rational(std::vector<std::vector<Rat>> A, std::vector<Rat> b) {
    RatSolve out;
    rref(A, b, out.consistent, out.value, RatOps{});
    return out;
}

FpSolve solve_mod_p(std::vector<std::vector<long>> A, std::vector<long> b, long p) {
    FpSolve out;
    for (auto& row : A)
        for (auto& x : row) x = ((x % p) + p) % p;
    for (auto& x : b) x = ((x % p) + p) % p;
    rref(A, b, out.consistent, out.value, FpOps{p});
    return out;
}

/* ---------- Z_(p) lattice ---------- */

ZpLattice::ZpLattice(long p, size_t ambient_dim, const std::vector<std::vector<Rat>>& generators)
    : p_(p), m_(ambient_dim), gens_(generators) {
    for (auto& g : gens_)
        if (g.size() != m_) throw DataError("ZpLattice: generator dimension mismatch");
    size_t n = gens_.size();
    // M as rows=ambient coords, cols=generators
    std::vector<std::vector<Rat>> M(m_, std::vector<Rat>(n, Rat(0)));
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < m_; ++i) M[i][j] = gens_[j][i];
    // U starts as identity; row ops applied to M are applied to U
    row_ops_.assign(m_, std::vector<Rat>(m_, Rat(0)));
    for (size_t i = 0; i < m_; ++i) row_ops_[i][i] = 1;

    size_t r = 0;
    while (r < m_ && r < n) {
        // minimal p-valuation pivot in the trailing block
        long best = 0;
        size_t bi = m_, bj = n;
        for (size_t i = r; i < m_; ++i)
            for (size_t j = r; j < n; ++j) {
                if (M[i][j] == 0) continue;
                long v = p_valuation(M[i][j], p_);
                if (bi == m_ || v < best) {
                    best = v;
                    bi = i;
                    bj = j;
                }
            }
        if (bi == m_) break;
        std::swap(M[bi], M[r]);
        std::swap(row_ops_[bi], row_ops_[r]);
        for (size_t i = 0; i < m_; ++i) std::swap(M[i][bj], M[i][r]);
        Rat piv = M[r][r];
        for (size_t i = r + 1; i < m_; ++i) {
            if (M[i][r] == 0) continue;
            Rat f = M[i][r] / piv;
            for (size_t j = r; j < n; ++j) M[i][j] -= f * M[r][j];
            for (size_t j = 0; j < m_; ++j) row_ops_[i][j] -= f * row_ops_[r][j];
        }
        for (size_t j = r + 1; j < n; ++j) {
            if (M[r][j] == 0) continue;
            Rat f = M[r][j] / piv;
            for (size_t i = r; i < m_; ++i) M[i][j] -= f * M[i][r];
        }
        diag_.push_back(piv);
        diag_val_.push_back(best);
        ++r;
    }
}

bool ZpLattice::contains(const std::vector<Rat>& v) const {
    if (v.size() != m_) throw DataError("ZpLattice::contains: dimension mismatch");
    std::vector<Rat> w(m_, Rat(0));
    for (size_t i = 0; i < m_; ++i)
        for (size_t j = 0; j < m_; ++j)
            if (row_ops_[i][j] != 0 && v[j] != 0) w[i] += row_ops_[i][j] * v[j];
    for (size_t i = 0; i < m_; ++i) {
        if (i < diag_.size()) {
            if (w[i] == 0) continue;
            if (p_valuation(w[i], p_) < diag_val_[i]) return false;
        } else if (w[i] != 0) {
            return false;
        }
    }
    return true;
}

bool ZpLattice::contains_scaled_ambient(int e) const {
    if (diag_val_.size() < m_) return false;
    for (long v : diag_val_)
        if (v > e) return false;
    return true;
}

std::vector<std::vector<Int>> ZpLattice::mod_generators(int e) const {
    Int mod = pow_int(Int(p_), e);
    std::vector<std::vector<Int>> rows;
    for (auto& g : gens_) {
        std::vector<Int> r(m_);
        bool nz = false;
        for (size_t i = 0; i < m_; ++i) {
            r[i] = mod_prime_power(g[i], p_, e);
            if (r[i] != 0) nz = true;
        }
        if (nz) rows.push_back(std::move(r));
    }
    // echelonize over Z/p^e with p-valuation pivoting, monic pivots
    size_t r0 = 0;
    for (size_t c = 0; c < m_ && r0 < rows.size(); ++c) {
        size_t sel = rows.size();
        long vbest = 0;
        for (size_t i = r0; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            long v = p_valuation(rows[i][c], p_);
            if (sel == rows.size() || v < vbest) {
                sel = i;
                vbest = v;
            }
        }
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[r0]);
        // scale by the unit part inverse so the pivot becomes p^vbest
        Int unit = rows[r0][c] / pow_int(Int(p_), vbest);
        Int uinv;
        mpz_invert(uinv.get_mpz_t(), unit.get_mpz_t(), mod.get_mpz_t());
        for (size_t j = 0; j < m_; ++j) rows[r0][j] = rows[r0][j] * uinv % mod;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r0 || rows[i][c] == 0) continue;
            if (p_valuation(rows[i][c], p_) < vbest) continue;
            Int f = rows[i][c] / pow_int(Int(p_), vbest);
            for (size_t j = 0; j < m_; ++j) {
                rows[i][j] = (rows[i][j] - f * rows[r0][j]) % mod;
                if (rows[i][j] < 0) rows[i][j] += mod;
            }
        }
        ++r0;
    }
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [&](const std::vector<Int>& r) {
                                  return std::all_of(r.begin(), r.end(),
                                                     [](const Int& x) { return x == 0; });
                              }),
               rows.end());
    std::sort(rows.begin(), rows.end());
    return rows;
}

}  // namespace samelson
