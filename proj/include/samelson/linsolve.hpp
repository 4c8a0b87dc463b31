#pragma once

#include <optional>
#include <vector>

#include "samelson/rational.hpp"

namespace samelson {

/* Exact solve of A x = b.  Reports, per unknown, the value when it is the
   same across every solution of the (possibly under/overdetermined) system,
   and leaves it unset when the kernel moves it. */
struct RatSolve {
    bool consistent = true;
    std::vector<std::optional<Rat>> value;
};
RatSolve solve_rational(std::vector<std::vector<Rat>> A, std::vector<Rat> b);

struct FpSolve {
    bool consistent = true;
    std::vector<std::optional<long>> value;
};
FpSolve solve_mod_p(std::vector<std::vector<long>> A, std::vector<long> b, long p);

long inv_mod(long a, long p);
long norm_mod(const Rat& a, long p);  // canonical representative of a p-local rational

/* Finitely generated Z_(p)-submodule of Z_(p)^m, in diagonalized form.
   Columns of the generator matrix are the generators. */
class ZpLattice {
public:
    ZpLattice(long p, size_t ambient_dim, const std::vector<std::vector<Rat>>& generators);

    bool contains(const std::vector<Rat>& v) const;
    /* p^e Z_(p)^m inside the lattice? */
    bool contains_scaled_ambient(int e) const;
    size_t rank() const { return diag_val_.size(); }
    const std::vector<long>& elementary_valuations() const { return diag_val_; }

    /* canonical reduced generators of (lattice + p^e ambient)/p^e, echelon
       form with monic pivots; rows are vectors of residues in [0, p^e) */
    std::vector<std::vector<Int>> mod_generators(int e) const;

private:
    long p_;
    size_t m_;
    std::vector<std::vector<Rat>> gens_;      // original generator columns
    std::vector<std::vector<Rat>> row_ops_;   // U with U*M diagonal
    std::vector<long> diag_val_;              // valuations of diagonal entries
    std::vector<Rat> diag_;
};

}  // namespace samelson
