#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chain_complex.hpp"

namespace dp {

/* Gamma(C.)_n = (+)_{k=0..min(n,l)} (+)_{Sur([n],[k])} C_k.
   Basis blocks are ordered by k DESCENDING, within k by ordinal,
   within a copy by the basis of C_k. This order is normative for
   every matrix and file produced here. */

std::int64_t gamma_rank(const ChainComplex& c, int n);

// Offset of copy (k, ordinal) in the level-n basis of Gamma(C.).
std::int64_t gamma_offset(const ChainComplex& c, int n, int k, std::int64_t ordinal);

enum class BlockTag { identity, boundary };

/* One block of a face/degeneracy operator: the source copy
   (source_k, source_ordinal) maps to the target copy by the identity
   of C_k or by the differential C_k -> C_{k-1}. */
struct BlockEntry {
    int target_k;
    std::int64_t target_ordinal;
    int source_k;
    std::int64_t source_ordinal;
    BlockTag tag;
};

struct BlockMap {
    int length;    // complex length the copies refer to
    int source_n;  // level of the source Gamma
    int target_n;
    std::vector<BlockEntry> entries;
};

// s_i : Gamma_{n-1} -> Gamma_n, 0 <= i <= n-1.
BlockMap degeneracy_op(int length, int n, int i);

// d_i : Gamma_n -> Gamma_{n-1}, 0 <= i <= n.
BlockMap face_op(int length, int n, int i);

IntMatrix as_matrix(const BlockMap& bm, const ChainComplex& c);

/* Display at copy level, e.g. for d_2 at n=4 over a
   length-2 complex: "(c1+c2,c3,c5+c6; b1,b2+b3,b4; a)". Degree k
   copies are named 'a'+k, with ordinal subscripts when the block
   has more than one copy. */
std::string formula(const BlockMap& bm);

}  // namespace dp
