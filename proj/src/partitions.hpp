#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ints.hpp"

namespace dp {

/* An order-preserving map mu : [n] -> [k] stored as its fiber-size
   partition mu* = (|mu^-1(0)|, ..., |mu^-1(k)|): k+1 entries summing
   to n+1. The map is surjective ("proper") iff every entry is positive.
   Entries of 0 are allowed so that face composition is total. */
struct Partition {
    std::vector<int> entries;

    Partition() = default;
    explicit Partition(std::vector<int> e);

    int n() const;  // source top index: sum(entries) - 1
    int k() const { return static_cast<int>(entries.size()) - 1; }
    bool proper() const;
    int zero_count() const;
    std::string str() const;  // "(1,2,1)"

    bool operator==(const Partition& o) const { return entries == o.entries; }
};

// Lexicographic comparison. Requires equal n and k.
int compare(const Partition& a, const Partition& b);

// All surjections [n] ->> [k] in increasing order; binomial(n,k) of them.
std::vector<Partition> enumerate_surjections(int n, int k);

// All order-preserving maps [n] -> [k] (zero entries allowed), increasing.
std::vector<Partition> enumerate_monotone(int n, int k);

// mu : [n-1] -> [k] composed with the degeneracy sigma_i : [n] -> [n-1].
Partition compose_degeneracy(const Partition& mu, int i);

// mu : [n] -> [k] composed with the face delta_i : [n-1] -> [n].
Partition compose_face(const Partition& mu, int i);

/* For nu with exactly one zero entry, the factorization nu = delta_j o mu_hat:
   j is the position of the zero, mu_hat drops it. */
std::pair<int, Partition> factor_nonsurjective(const Partition& nu);

// 1-based position of a surjection within enumerate_surjections(n,k).
std::int64_t surjection_ordinal(const Partition& mu);

// Inverse of surjection_ordinal.
Partition surjection_at(int n, int k, std::int64_t ordinal);

/* S^{n,k}_i: surjections whose partition has an initial sub-partition
   summing to i+1. Returned as sorted 1-based ordinals. */
std::vector<std::int64_t> s_set(int n, int k, int i);

// Complement of S^{n,k}_i within Sur([n],[k]), sorted ordinals.
std::vector<std::int64_t> s_set_complement(int n, int k, int i);

// S~^{n,k}_i: partitions of the form (x,1,y) with |x| = i, sorted ordinals.
std::vector<std::int64_t> s_tilde_set(int n, int k, int i);

// Fiber maxima {max mu^-1(0), ..., max mu^-1(k-1)} as a sorted list.
std::vector<int> triangle(const Partition& mu);

// The unique surjection [n] ->> [k] whose triangle image is the given set.
Partition triangle_inverse(int n, const std::vector<int>& subset);

}  // namespace dp
