#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dp {

/* Subsets of {0,...,n-1}, kept sorted ascending. The empty set stands
   for the triangle image of the unique surjection onto [0]. */
using SetP = std::vector<int>;

// Total order on the powerset: larger cardinality first, then
// lexicographic on the sorted elements. The empty set is the maximum.
int family_set_compare(const SetP& a, const SetP& b);

struct TriangleFamily {
    int n = 0;
    std::vector<SetP> sets;  // strictly increasing under family_set_compare

    bool operator==(const TriangleFamily& o) const { return n == o.n && sets == o.sets; }
};

// Compare families as sequences of sets; a proper prefix comes first.
int family_compare(const TriangleFamily& a, const TriangleFamily& b);

// Union of the sets covers {0,...,n-1}.
bool is_honourable(const TriangleFamily& t);

/* Underlining scan: walking r = 2..m and each i in x_r in ascending
   order, an element already present in x_1 u ... u x_{r-1} gets
   underlined in every set x_1..x_r containing it. The scan stops at
   the first set with all elements underlined; that set is superfluous
   (its removal does not change the union). The empty set is
   superfluous outright. */
struct SuperfluousScan {
    int superfluous_index = -1;  // position in t.sets, -1 if none
    std::vector<std::vector<bool>> underlined;  // state when the scan stopped
};

SuperfluousScan find_superfluous(const TriangleFamily& t);

/* Inductive list T_1, T_2, ... of all subsets of the powerset (empty
   set excluded) that contain no superfluous set, starting from
   {start} and ending at {{n-1}}. Each step either extends a
   non-honourable family by the minimal admissible set above its
   maximum, or backtracks: replace x_s (s maximal) by the minimal
   admissible y > x_s. A family that cannot be extended backtracks
   even when not honourable. */
struct EnumEntry {
    TriangleFamily family;
    bool honourable = false;
    std::vector<std::vector<bool>> underlined;  // final scan state, for display
};

std::vector<EnumEntry> enumerate_families(int n, const SetP& start);

// The honourable members of enumerate_families, in enumeration order.
// These are exactly the minimal honourable families (no superfluous
// sets) whose sets all lie at or above `start` in the subset order.
std::vector<TriangleFamily> enumerate_minimal_honourable(int n, const SetP& start);

inline SetP default_start(int n) {
    SetP s(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) s[static_cast<std::size_t>(j)] = j;
    return s;
}

/* All honourable families with at most max_sets members, each of
   cardinality at most max_card, including non-minimal ones and the
   empty-set member. Built by augmenting the minimal families and
   deduplicating; ordered by family_compare. */
std::vector<TriangleFamily> complete_with_nonminimal(const std::vector<TriangleFamily>& minimal,
                                                     int n, int max_sets, int max_card);

/* A witness family with exactly a_k sets of cardinality k covering
   {0,...,n-1}, or nullopt when sum k*a_k < n. Requires a_k <=
   binomial(n,k). */
std::optional<TriangleFamily> honourable_existence(int n, const std::vector<std::int64_t>& a);

// "{{0,1},{0,2}}"; underlined elements are suffixed with '_' when the
// mask is supplied.
std::string family_str(const TriangleFamily& t,
                       const std::vector<std::vector<bool>>* underlined = nullptr);

}  // namespace dp
