#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace dp {

enum class Family { Sym, Ext, Tensor };

struct PolynomialFunctor {
    Family family;
    int degree;  // >= 1
};

// Parse "sym:2", "ext:3", "tensor:1".
PolynomialFunctor parse_functor(const std::string& spec);
std::string functor_name(const PolynomialFunctor& f);

/* Monomial basis of F applied to a free module of rank m, as index
   tuples of length d in lexicographic order: weakly increasing for Sym,
   strictly increasing for Ext, arbitrary for Tensor. */
std::int64_t functor_rank(const PolynomialFunctor& f, std::int64_t m);
std::vector<std::vector<std::int64_t>> functor_basis(const PolynomialFunctor& f, std::int64_t m);

// Position of a basis tuple in functor_basis, by combinatorial ranking.
std::int64_t monomial_index(const PolynomialFunctor& f, std::int64_t m,
                            const std::vector<std::int64_t>& tuple);

// The induced matrix F(g) on monomial bases.
IntMatrix apply_functor(const PolynomialFunctor& f, const IntMatrix& g);

// Columns of F(g) for a chosen list of source monomials only.
IntMatrix apply_functor_on(const PolynomialFunctor& f, const IntMatrix& g,
                           const std::vector<std::vector<std::int64_t>>& source_tuples);

/* Deviation F(f_1|...|f_r): alternating inclusion-exclusion sum of F
   over partial sums of parallel maps f_j : A -> B. */
IntMatrix deviation(const PolynomialFunctor& f, const std::vector<IntMatrix>& maps);

/* Cross-effect summand cr_r(F)(A_{j in alpha}) of F(A_1 (+) ... (+) A_s),
   realized as the span of monomials whose support is exactly alpha.
   Basis order: Sym/Ext by multidegree (e_1..e_r) lex, then per-slot
   monomials slot-major; Tensor by slot function (phi(1)..phi(d)) lex,
   then positional indices. */
struct CrossEffect {
    PolynomialFunctor functor;
    std::vector<int> alpha;               // selected slots, 0-based, ascending
    std::vector<std::int64_t> arg_ranks;  // ranks of the selected slots
    std::int64_t rank;
    // row index in F(A_1 (+) ... (+) A_s) of each basis vector
    std::vector<std::int64_t> ambient_indices;
    // the same basis vectors as ambient monomial tuples
    std::vector<std::vector<std::int64_t>> tuples;
};

std::int64_t cross_effect_rank(const PolynomialFunctor& f,
                               const std::vector<std::int64_t>& arg_ranks);

/* The alpha summand of F applied to the direct sum with the given slot
   ranks. Slot j occupies ambient coordinates [sum of earlier ranks, ...). */
CrossEffect cross_effect(const PolynomialFunctor& f, const std::vector<std::int64_t>& slot_ranks,
                         const std::vector<int>& alpha);

// All summands of F(A_1 (+) ... (+) A_s): non-empty alpha, |alpha| <= d,
// selected ranks positive. Ordered by subset bitmask.
std::vector<CrossEffect> decompose(const PolynomialFunctor& f,
                                   const std::vector<std::int64_t>& slot_ranks);

// 0/1 embedding of the summand into F of the ambient sum.
IntMatrix embedding_matrix(const CrossEffect& ce, std::int64_t ambient_rank);

/* Block of F(g) from the source summand to the target one, where g is
   a map of direct sums with the stated slot ranks. */
IntMatrix induced_map(const PolynomialFunctor& f, const IntMatrix& g,
                      const std::vector<std::int64_t>& source_slot_ranks,
                      const std::vector<int>& source_alpha,
                      const std::vector<std::int64_t>& target_slot_ranks,
                      const std::vector<int>& target_alpha);

}  // namespace dp
