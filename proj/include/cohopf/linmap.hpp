#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cohopf/matrix.hpp"

namespace cohopf {

struct VectorSpace {
    std::size_t dim = 0;
    std::vector<std::string> labels;

    static VectorSpace make(std::size_t dim, const std::string& prefix = "e");
    static VectorSpace with_labels(std::vector<std::string> labels);
    static VectorSpace tensor(const VectorSpace& a, const VectorSpace& b);
    static VectorSpace line();  // the base field k, label "1"

    bool operator==(const VectorSpace& o) const { return dim == o.dim; }
};

/// Linear map as a codomain.dim x domain.dim matrix; column j is the image
/// of the j-th basis vector of the domain.
struct LinMap {
    VectorSpace dom, cod;
    Mat m;

    LinMap() = default;
    LinMap(VectorSpace dom_, VectorSpace cod_, Mat m_);

    const Field& field() const { return m.field(); }

    static LinMap identity(const Field& f, const VectorSpace& v);
    static LinMap zero(const Field& f, const VectorSpace& cod, const VectorSpace& dom);

    LinMap operator*(const LinMap& g) const;  // composition: this ∘ g
    LinMap operator+(const LinMap& g) const;
    LinMap operator-(const LinMap& g) const;
    LinMap operator-() const;
    LinMap scaled(const Scalar& c) const;
    bool operator==(const LinMap& g) const { return m == g.m; }
    bool is_zero() const { return m.is_zero(); }

    LinMap tensor(const LinMap& g) const;  // Kronecker, lexicographic indices
    LinMap transpose_map() const;          // dual map between the same spaces swapped
};

/// The braiding V⊗W -> W⊗V as a permutation matrix.
LinMap swap_map(const Field& f, const VectorSpace& v, const VectorSpace& w);

/// Permutation of tensor slots: output slot k is input slot perm[k].
LinMap slot_permutation(const Field& f, const std::vector<VectorSpace>& slots,
                        const std::vector<std::size_t>& perm);

/// id ⊗ ... ⊗ f ⊗ ... ⊗ id acting on the given slot of a tensor product.
LinMap apply_at_slot(const std::vector<VectorSpace>& slots, std::size_t slot, const LinMap& f);

struct KernelImage {
    Mat kernel;   // domain.dim x k, columns echelon-canonical
    Mat image;    // codomain.dim x r, columns echelon-reduced
    std::size_t rank = 0;
};

KernelImage kernel_image(const LinMap& f);

struct FactorSolution {
    LinMap h;
    std::size_t solution_space_dim = 0;
};

/// Solves g∘h = f for h (g: Y->Z, f: X->Z). Echelon-canonical particular solution.
std::optional<FactorSolution> factor_through_left(const LinMap& g, const LinMap& f);
/// Solves h∘g = f for h (g: W->Y, f: W->Z).
std::optional<FactorSolution> factor_through_right(const LinMap& g, const LinMap& f);

struct QuotientData {
    VectorSpace quotient;
    LinMap projection;   // W -> Q
    LinMap section;      // Q -> W, projection∘section = id
    LinMap retraction;   // W -> U, retraction∘incl = id
};

/// Splits an injective map U -> W into a biproduct: projection∘incl = 0,
/// projection∘section = id, retraction∘incl = id, incl∘retraction + section∘projection = id.
QuotientData quotient_and_section(const LinMap& incl);

/// f: W->Z with f∘incl = 0 factors uniquely through the quotient; returns Q->Z.
LinMap factor_through_quotient(const LinMap& f, const LinMap& incl, const QuotientData& qd);

/// Basis columns of a subspace, echelon-reduced: returns the canonical RREF basis.
Mat column_space_basis(const Mat& m);

/// True iff every column of sub lies in the column span of space.
bool subspace_contained(const Mat& sub, const Mat& space);
bool subspace_equal(const Mat& a, const Mat& b);

/// Basis of the intersection of two column spans.
Mat subspace_intersection(const Mat& a, const Mat& b);

}  // namespace cohopf
