#pragma once

#include <map>
#include <string>
#include <vector>

#include "samelson/masked.hpp"

namespace samelson {

enum class GroupId { G2, F4, E6, E7, E8 };

std::string group_name(GroupId g);
GroupId group_from_name(const std::string& s);

/* one factor of the mod p decomposition: a sphere S^{2i-1} (rank 1) or a
   two-cell bundle B(2i-1, 2i+2p-3) (rank 2) */
struct Factor {
    int i = 0;
    int rank = 1;
    int bottom = 0;  // 2i-1
    int top = 0;     // 2i+2p-3 when rank 2
};

struct GroupCtx {
    GroupId g;
    long p = 0;
    std::vector<int> type;        // t(G)
    std::vector<Factor> factors;  // the mod p decomposition
    std::vector<int> tp;          // bottom indices, sorted

    int r(int i) const;                  // rank of the factor at i in t_p
    bool in_tp(int i) const;
    const Factor& factor(int i) const;
};

/* the tabulated quasi-p-regular pairs; throws NotQuasiPRegular below the
   quasi-p-regular bound and OutOfValidRange for p-regular primes beyond
   the table */
GroupCtx group_ctx(GroupId g, long p);
std::vector<std::pair<GroupId, long>> all_cases();
const std::vector<int>& group_type(GroupId g);
bool quasi_p_regular(GroupId g, long p);

/* admissibility bounds for the classical groups, carried as data only */
bool classical_admissible(const std::string& family, int n, long p);

/* generator images under the Spin pullback.
   E6: H^*(BSpin(10)); E7, E8: restricted to H^*(BSpin(11));
   F4: H^*(BSpin(9)), derived from the E6 choice by killing c5 */
struct GroupGens {
    RingPtr xring;  // free ring on the x-generators
    RingPtr spin;   // target of the pullback
    std::vector<int> degrees;
    std::map<int, MaskedPoly> image;  // by generator degree
    bool has_euler = false;           // spin ring contains c5
};
const GroupGens& generator_images(GroupId g);

/* E8 images over H^*(BSpin(15)) before restriction, for audits */
const GroupGens& e8_images_spin15();

/* quadratic parts of the E8 generators pulled back to E7 (mod cubes) */
const std::map<int, Poly>& e7_quadratic_pullbacks();

/* representation attached to the group's K-lift stage (6, 7 or 8) */
int rep_index(GroupId g);

std::string data_dir();

}  // namespace samelson
