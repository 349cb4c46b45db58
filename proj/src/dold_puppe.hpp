#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chain_complex.hpp"
#include "functors.hpp"
#include "honourable.hpp"
#include "matrix.hpp"

namespace dp {

// A copy of C_k inside Gamma(C.)_n.
struct DPSlot {
    int k;
    std::int64_t ordinal;  // 1-based position in Sur([n],[k])
};

/* One cross-effect summand of the normalized complex at level n: an
   honourable family, its slots (one per member set, via the triangle
   bijection), and the realized cross-effect inside F(Gamma_n). */
struct DPSummand {
    TriangleFamily family;
    std::vector<DPSlot> slots;
    CrossEffect ce;
    std::string label;  // e.g. "Sym^2(B_1)", "C_1⊗C_6"
};

struct DPLevel {
    int n = 0;
    std::int64_t rank = 0;
    std::vector<DPSummand> summands;
};

struct DPComplex {
    PolynomialFunctor functor;
    ChainComplex input;              // trimmed
    std::vector<DPLevel> levels;     // 0 .. length*degree
    std::vector<IntMatrix> differentials;  // differentials[n-1] = Delta_n

    ChainComplex as_chain_complex() const;
    std::string to_json() const;
    std::string summary() const;  // "ranks: ..." plus one line per degree
};

// Copies of C_k in Gamma_n ordered k descending then ordinal; one slot
// per copy, with rank r_k.
std::vector<DPSlot> gamma_slots(const ChainComplex& c, int n);
std::vector<std::int64_t> gamma_slot_ranks(const ChainComplex& c, int n);

// The summands of level n, in order: honourable families under the
// family order, slots in triangle order. Zero-rank summands dropped.
// Degree 0 is F(C_0) as the single empty-set family.
std::vector<DPSummand> dp_degree(const PolynomialFunctor& f, const ChainComplex& c, int n);

// Delta_n = sum of (-1)^i F(d_i), restricted to honourable summands.
IntMatrix dp_differential(const PolynomialFunctor& f, const ChainComplex& c, int n);

// Assemble all levels and differentials; verifies Delta o Delta = 0.
DPComplex build(const PolynomialFunctor& f, const ChainComplex& c);

/* Independent construction: realize level n as the plain quotient
   F(Gamma_n) / sum of Image F(s_i) via Smith normal form, with the
   differential induced by sum (-1)^i F(d_i). Slow but definitionally
   direct; build() must agree on ranks and homology. */
ChainComplex quotient_oracle(const PolynomialFunctor& f, const ChainComplex& c, int n_max);

}  // namespace dp
