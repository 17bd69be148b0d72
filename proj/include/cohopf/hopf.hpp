#pragma once

#include <memory>

#include "cohopf/linmap.hpp"

namespace cohopf {

/// Finite-dimensional Hopf algebra given by structure-constant tables.
/// Tensor indices on H⊗H are lexicographic: (i,j) -> i*dim + j.
struct Hopf {
    std::string name;
    Field k;
    VectorSpace space;
    LinMap mult;      // H⊗H -> H
    LinMap unit;      // k -> H
    LinMap comult;    // H -> H⊗H
    LinMap counit;    // H -> k
    LinMap antipode;  // H -> H
};

using HopfPtr = std::shared_ptr<const Hopf>;

struct AxiomFailure {
    std::string axiom;
    std::string detail;
};

/// Empty report iff all eight axiom identities hold exactly:
/// associativity, unitality, coassociativity, counitality,
/// comult-algebra-map, counit-algebra-map, antipode-left, antipode-right.
/// Shape problems are reported with axiom = "shape".
std::vector<AxiomFailure> validate_hopf(const Hopf& h);

/// Dual Hopf algebra on H*: mult = comult^T, unit = counit^T, comult = mult^T,
/// counit = unit^T, antipode = S^T. Under the dual lexicographic basis the
/// double dual has literally the same tables.
Hopf dual_hopf(const Hopf& h);

/// Basis of the space of left integrals L: H->k with (id⊗L)∘Δ = unit∘L.
std::vector<LinMap> integral_space(const Hopf& h);

struct IntegralData {
    LinMap lambda;        // left integral H->k, first nonzero value normalized to 1
    LinMap lambda_prime;  // right integral Λ' = Λ∘S
    std::size_t x_index = 0;  // first basis vector with Λ'(e_i) != 0
    LinMap x;                 // k -> H picking that basis vector
    bool is_cofrobenius = false;
};

/// Throws std::runtime_error if the integral space does not have dimension 1.
IntegralData cofrobenius_data(const Hopf& h);

/// A nonzero two-sided-enough integral element t in H (h·t = ε(h)·t),
/// the free generator of H as a module over H*. Used by the cofree-comodule
/// hom parameterization. Throws if none exists (impossible for valid f.d. Hopf).
LinMap integral_element(const Hopf& h);  // k -> H

/// Builders for the common structural pieces.
LinMap hopf_tau(const Hopf& h);  // swap on H⊗H

}  // namespace cohopf
