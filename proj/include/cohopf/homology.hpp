#pragma once

#include "cohopf/cyclic_cat.hpp"

namespace cohopf {

/// Plain k-algebra data used by the classical chain complexes.
struct PlainAlgebra {
    Field k;
    VectorSpace space;
    LinMap mult;  // A⊗A -> A
    LinMap unit;  // k -> A
};

PlainAlgebra plain_of_hopf(const Hopf& h);

/// The cyclic bar construction of a plain algebra, X_n = A^{⊗(n+1)}, as a
/// cyclic module over the one-dimensional Hopf algebra.
ParaCyclicComodule cyclic_bar(const PlainAlgebra& a, std::size_t N);

/// Alternating face sum b_n: X_n -> X_{n-1} of a (para-)cyclic module.
LinMap hochschild_b_of(const ParaCyclicComodule& X, std::size_t n);
/// Hochschild differential of an algebra, A^{⊗(n+1)} -> A^{⊗n}, n >= 1.
LinMap hochschild_b(const PlainAlgebra& a, std::size_t n);

/// Connes operator B_n = (1 - λ_{n+1})∘s_ext∘N_n with λ_m = (-1)^m t_m and
/// the extra degeneracy s_ext = t_{n+1}∘s_n.
LinMap connes_B(const ParaCyclicComodule& X, std::size_t n);

struct MixedComplex {
    Field k;
    std::vector<std::size_t> dims;  // degrees 0..top
    std::vector<LinMap> b;          // b[n]: n -> n-1 (b[0] unused)
    std::vector<LinMap> B;          // B[n]: n -> n+1 (defined for n < top)
};

/// b² = 0, B² = 0, bB + Bb = 0, checked exactly.
std::vector<std::string> validate_mixed(const MixedComplex& mc);

MixedComplex mixed_of_cyclic(const ParaCyclicComodule& X);

/// Homology dimensions of the direct-sum totalization Tot_n = ⊕_p X_{n-2p},
/// for n = 0..range. All maps needed must exist in the complex (range+1 <= top).
std::vector<std::size_t> tot_homology(const MixedComplex& mc, std::size_t range);

/// The (b,B)-bicomplex of an algebra with B(A)_{pq} = A^{⊗(q-p+1)}.
struct Bicomplex {
    Field k;
    std::size_t maxq = 0;
    PlainAlgebra a;
    std::vector<LinMap> vertical;    // b_m, index by m = q-p
    std::vector<LinMap> horizontal;  // Connes B_m
};

Bicomplex build_bicomplex(const PlainAlgebra& a, std::size_t range);
std::vector<std::string> validate_bicomplex(const Bicomplex& bc);
std::vector<std::size_t> tot_homology(const Bicomplex& bc, std::size_t range);

/// HC of an algebra via the bicomplex route; exact for all reported degrees.
std::vector<std::size_t> hc_of_algebra(const PlainAlgebra& a, std::size_t range);

struct CyclicHomologyResult {
    MixedComplex mixed;
    std::vector<std::string> issues;     // identity failures (not truly cyclic)
    std::vector<std::size_t> hc;         // degrees 0..N-1
    std::size_t reliable_max = 0;        // degrees above this are provisional
};

CyclicHomologyResult cyclic_from_cyclic_module(const ParaCyclicComodule& X);

}  // namespace cohopf
