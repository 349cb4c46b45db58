#pragma once

#include <cstdint>
#include <vector>

#include "chain_complex.hpp"
#include "matrix.hpp"

namespace dp {

/* M = U * D * V with U, V unimodular and D diagonal, each diagonal
   entry non-negative and dividing the next. Uinv and Vinv are the
   exact inverses, accumulated during the reduction. */
struct SmithResult {
    IntMatrix U, Uinv, D, V, Vinv;
    std::size_t rank = 0;
    std::vector<Int> invariant_factors;  // the non-zero diagonal, in order
};

SmithResult smith_normal_form(const IntMatrix& m);

// Columns forming a basis of ker(M) (integrally: a direct summand).
IntMatrix kernel_basis(const IntMatrix& m);

std::size_t matrix_rank(const IntMatrix& m);

struct HomologyGroup {
    std::int64_t free_rank = 0;
    std::vector<Int> torsion;  // invariant factors > 1, each dividing the next

    bool operator==(const HomologyGroup& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
};

// "Z^2 + Z/2 + Z/6", or "0".
std::string homology_str(const HomologyGroup& h);

// H_n of the complex: ker(d_n) / im(d_{n+1}), exact over the integers.
HomologyGroup homology(const ChainComplex& c, int n);

// Dimension of H_n over F_p (reduce matrices mod p first).
std::int64_t homology_dim_mod_p(const ChainComplex& c, int n, std::int64_t p);

}  // namespace dp
