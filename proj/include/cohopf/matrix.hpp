#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "cohopf/field.hpp"

namespace cohopf {

/// Process-wide switch between the serial reference kernels and the
/// OpenMP-parallel ones. Both produce bit-identical results; the serial
/// path is kept as the testing oracle.
namespace parallel {
void set_enabled(bool on);
bool enabled();
void set_threads(int n);  // 0 = library default
}  // namespace parallel

/// Dense exact matrix. Rational entries are GMP rationals; prime-field
/// entries are packed machine residues. Row-major storage.
class Mat {
public:
    Mat() : f_(Field::rational()), rows_(0), cols_(0) {}
    Mat(const Field& f, std::size_t rows, std::size_t cols);

    static Mat identity(const Field& f, std::size_t n);
    static Mat zero(const Field& f, std::size_t rows, std::size_t cols) { return Mat(f, rows, cols); }

    const Field& field() const { return f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Scalar& v);
    void set_int(std::size_t i, std::size_t j, long v);
    void add_at(std::size_t i, std::size_t j, const Scalar& v);
    bool entry_zero(std::size_t i, std::size_t j) const;

    Mat operator*(const Mat& o) const;  // dispatches on parallel::enabled()
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator-() const;
    Mat scaled(const Scalar& c) const;
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat transpose() const;
    bool is_zero() const;
    bool is_identity() const;

    /// Horizontal / vertical concatenation.
    static Mat hcat(const Mat& a, const Mat& b);
    static Mat vcat(const Mat& a, const Mat& b);
    Mat sub_cols(std::size_t from, std::size_t count) const;
    Mat sub_rows(std::size_t from, std::size_t count) const;

    static Mat mul_serial(const Mat& a, const Mat& b);
    static Mat mul_parallel(const Mat& a, const Mat& b);

    /// Kronecker product with lexicographic index convention (i,j) -> i*dim2 + j.
    static Mat kron(const Mat& a, const Mat& b);

    std::string str() const;

    // Raw views used by the elimination kernels.
    std::vector<mpq_class>& raw_q() { return q_; }
    std::vector<std::uint64_t>& raw_r() { return r_; }
    const std::vector<mpq_class>& raw_q() const { return q_; }
    const std::vector<std::uint64_t>& raw_r() const { return r_; }

private:
    Field f_;
    std::size_t rows_, cols_;
    std::vector<mpq_class> q_;        // used when rational
    std::vector<std::uint64_t> r_;    // used when prime

    void check_same_field(const Mat& o) const;
};

struct RrefResult {
    Mat R;
    std::vector<std::size_t> pivots;  // pivot column per pivot row
    std::size_t rank = 0;
};

RrefResult rref(const Mat& a);
RrefResult rref_serial(const Mat& a);
RrefResult rref_parallel(const Mat& a);
std::size_t rank_of(const Mat& a);

/// Columns form the echelon-canonical kernel basis (free variable = 1,
/// pivot entries filled from the reduced echelon form).
Mat kernel_basis(const Mat& a);

struct SolveResult {
    bool consistent = false;
    Mat particular;        // echelon-canonical: free variables set to zero
    std::size_t nullity = 0;  // dim ker(A), per right-hand column
};

/// Solves A X = B for all columns of B simultaneously.
SolveResult solve(const Mat& A, const Mat& B);

/// Matrix of a linear operator L on matrix space Hom(X,Y) -> Hom(U,W),
/// in row-major vec coordinates. Probes L on elementary matrices.
Mat probe_operator(const Field& f, std::size_t y, std::size_t x, std::size_t w, std::size_t u,
                   const std::function<Mat(const Mat&)>& L);

Mat vec_of(const Mat& m);                                   // row-major flatten, column vector
Mat unvec(std::size_t rows, std::size_t cols, const Mat& v);

}  // namespace cohopf
