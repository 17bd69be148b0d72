#include "cohopf/matrix.hpp"

#include <atomic>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cohopf {

namespace parallel {
namespace {
std::atomic<bool> g_enabled{true};
}
void set_enabled(bool on) { g_enabled.store(on); }
bool enabled() {
#ifdef _OPENMP
    return g_enabled.load();
#else
    return false;
#endif
}
void set_threads(int n) {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}
}  // namespace parallel

Mat::Mat(const Field& f, std::size_t rows, std::size_t cols) : f_(f), rows_(rows), cols_(cols) {
    if (f.kind == FieldKind::rational)
        q_.assign(rows * cols, mpq_class(0));
    else
        r_.assign(rows * cols, 0);
}

Mat Mat::identity(const Field& f, std::size_t n) {
    Mat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set_int(i, i, 1);
    return m;
}

void Mat::check_same_field(const Mat& o) const {
    if (!(f_ == o.f_)) throw std::logic_error("Mat: mixed-field operation");
}

Scalar Mat::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("Mat::at");
    if (f_.kind == FieldKind::rational) return Scalar::from_mpq(f_, q_[i * cols_ + j]);
    return Scalar::from_int(f_, static_cast<long>(r_[i * cols_ + j]));
}

void Mat::set(std::size_t i, std::size_t j, const Scalar& v) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("Mat::set");
    if (!(v.field() == f_)) throw std::logic_error("Mat::set: field mismatch");
    if (f_.kind == FieldKind::rational)
        q_[i * cols_ + j] = v.value();
    else
        r_[i * cols_ + j] = v.residue();
}

void Mat::set_int(std::size_t i, std::size_t j, long v) { set(i, j, Scalar::from_int(f_, v)); }

void Mat::add_at(std::size_t i, std::size_t j, const Scalar& v) { set(i, j, at(i, j) + v); }

bool Mat::entry_zero(std::size_t i, std::size_t j) const {
    if (f_.kind == FieldKind::rational) return q_[i * cols_ + j] == 0;
    return r_[i * cols_ + j] == 0;
}

Mat Mat::mul_serial(const Mat& a, const Mat& b) {
    a.check_same_field(b);
    if (a.cols_ != b.rows_) throw std::logic_error("Mat::mul: shape mismatch");
    Mat c(a.f_, a.rows_, b.cols_);
    if (a.f_.kind == FieldKind::rational) {
        mpq_class acc, t;
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) {
                acc = 0;
                for (std::size_t k = 0; k < a.cols_; ++k) {
                    const mpq_class& x = a.q_[i * a.cols_ + k];
                    if (x == 0) continue;
                    const mpq_class& y = b.q_[k * b.cols_ + j];
                    if (y == 0) continue;
                    t = x * y;
                    acc += t;
                }
                c.q_[i * c.cols_ + j] = acc;
            }
    } else {
        const std::uint64_t p = a.f_.p;
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) {
                std::uint64_t acc = 0;
                for (std::size_t k = 0; k < a.cols_; ++k) {
                    std::uint64_t x = a.r_[i * a.cols_ + k];
                    if (!x) continue;
                    acc = modp::add(acc, modp::mul(x, b.r_[k * b.cols_ + j], p), p);
                }
                c.r_[i * c.cols_ + j] = acc;
            }
    }
    return c;
}

Mat Mat::mul_parallel(const Mat& a, const Mat& b) {
#ifndef _OPENMP
    return mul_serial(a, b);
#else
    a.check_same_field(b);
    if (a.cols_ != b.rows_) throw std::logic_error("Mat::mul: shape mismatch");
    Mat c(a.f_, a.rows_, b.cols_);
    const long rows = static_cast<long>(a.rows_);
    if (a.f_.kind == FieldKind::rational) {
#pragma omp parallel for schedule(dynamic, 1)
        for (long i = 0; i < rows; ++i) {
            mpq_class acc, t;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                acc = 0;
                for (std::size_t k = 0; k < a.cols_; ++k) {
                    const mpq_class& x = a.q_[i * a.cols_ + k];
                    if (x == 0) continue;
                    const mpq_class& y = b.q_[k * b.cols_ + j];
                    if (y == 0) continue;
                    t = x * y;
                    acc += t;
                }
                c.q_[i * c.cols_ + j] = acc;
            }
        }
    } else {
        const std::uint64_t p = a.f_.p;
#pragma omp parallel for schedule(static)
        for (long i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) {
                std::uint64_t acc = 0;
                for (std::size_t k = 0; k < a.cols_; ++k) {
                    std::uint64_t x = a.r_[i * a.cols_ + k];
                    if (!x) continue;
                    acc = modp::add(acc, modp::mul(x, b.r_[k * b.cols_ + j], p), p);
                }
                c.r_[i * c.cols_ + j] = acc;
            }
    }
    return c;
#endif
}

Mat Mat::operator*(const Mat& o) const {
    return parallel::enabled() ? mul_parallel(*this, o) : mul_serial(*this, o);
}

Mat Mat::operator+(const Mat& o) const {
    check_same_field(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::logic_error("Mat::+ shape mismatch");
    Mat c(f_, rows_, cols_);
    if (f_.kind == FieldKind::rational)
        for (std::size_t i = 0; i < q_.size(); ++i) c.q_[i] = q_[i] + o.q_[i];
    else
        for (std::size_t i = 0; i < r_.size(); ++i) c.r_[i] = modp::add(r_[i], o.r_[i], f_.p);
    return c;
}

Mat Mat::operator-(const Mat& o) const {
    check_same_field(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::logic_error("Mat::- shape mismatch");
    Mat c(f_, rows_, cols_);
    if (f_.kind == FieldKind::rational)
        for (std::size_t i = 0; i < q_.size(); ++i) c.q_[i] = q_[i] - o.q_[i];
    else
        for (std::size_t i = 0; i < r_.size(); ++i) c.r_[i] = modp::sub(r_[i], o.r_[i], f_.p);
    return c;
}

Mat Mat::operator-() const {
    Mat c(f_, rows_, cols_);
    if (f_.kind == FieldKind::rational)
        for (std::size_t i = 0; i < q_.size(); ++i) c.q_[i] = -q_[i];
    else
        for (std::size_t i = 0; i < r_.size(); ++i) c.r_[i] = modp::neg(r_[i], f_.p);
    return c;
}

Mat Mat::scaled(const Scalar& c) const {
    if (!(c.field() == f_)) throw std::logic_error("Mat::scaled: field mismatch");
    Mat m(f_, rows_, cols_);
    if (f_.kind == FieldKind::rational)
        for (std::size_t i = 0; i < q_.size(); ++i) m.q_[i] = q_[i] * c.value();
    else {
        std::uint64_t cv = c.residue();
        for (std::size_t i = 0; i < r_.size(); ++i) m.r_[i] = modp::mul(r_[i], cv, f_.p);
    }
    return m;
}

bool Mat::operator==(const Mat& o) const {
    if (!(f_ == o.f_) || rows_ != o.rows_ || cols_ != o.cols_) return false;
    return f_.kind == FieldKind::rational ? q_ == o.q_ : r_ == o.r_;
}

Mat Mat::transpose() const {
    Mat t(f_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (f_.kind == FieldKind::rational)
                t.q_[j * rows_ + i] = q_[i * cols_ + j];
            else
                t.r_[j * rows_ + i] = r_[i * cols_ + j];
        }
    return t;
}

bool Mat::is_zero() const {
    if (f_.kind == FieldKind::rational) {
        for (const auto& v : q_)
            if (v != 0) return false;
    } else {
        for (auto v : r_)
            if (v) return false;
    }
    return true;
}

bool Mat::is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(f_, rows_);
}

Mat Mat::hcat(const Mat& a, const Mat& b) {
    a.check_same_field(b);
    if (a.rows_ != b.rows_) throw std::logic_error("Mat::hcat shape");
    Mat c(a.f_, a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < c.cols_; ++j) {
            bool left = j < a.cols_;
            if (a.f_.kind == FieldKind::rational)
                c.q_[i * c.cols_ + j] = left ? a.q_[i * a.cols_ + j] : b.q_[i * b.cols_ + (j - a.cols_)];
            else
                c.r_[i * c.cols_ + j] = left ? a.r_[i * a.cols_ + j] : b.r_[i * b.cols_ + (j - a.cols_)];
        }
    return c;
}

Mat Mat::vcat(const Mat& a, const Mat& b) {
    a.check_same_field(b);
    if (a.cols_ != b.cols_) throw std::logic_error("Mat::vcat shape");
    Mat c(a.f_, a.rows_ + b.rows_, a.cols_);
    if (a.f_.kind == FieldKind::rational) {
        std::copy(a.q_.begin(), a.q_.end(), c.q_.begin());
        std::copy(b.q_.begin(), b.q_.end(), c.q_.begin() + a.q_.size());
    } else {
        std::copy(a.r_.begin(), a.r_.end(), c.r_.begin());
        std::copy(b.r_.begin(), b.r_.end(), c.r_.begin() + a.r_.size());
    }
    return c;
}

Mat Mat::sub_cols(std::size_t from, std::size_t count) const {
    if (from + count > cols_) throw std::out_of_range("Mat::sub_cols");
    Mat c(f_, rows_, count);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < count; ++j) {
            if (f_.kind == FieldKind::rational)
                c.q_[i * count + j] = q_[i * cols_ + from + j];
            else
                c.r_[i * count + j] = r_[i * cols_ + from + j];
        }
    return c;
}

Mat Mat::sub_rows(std::size_t from, std::size_t count) const {
    if (from + count > rows_) throw std::out_of_range("Mat::sub_rows");
    Mat c(f_, count, cols_);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (f_.kind == FieldKind::rational)
                c.q_[i * cols_ + j] = q_[(from + i) * cols_ + j];
            else
                c.r_[i * cols_ + j] = r_[(from + i) * cols_ + j];
        }
    return c;
}

Mat Mat::kron(const Mat& a, const Mat& b) {
    a.check_same_field(b);
    Mat c(a.f_, a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) {
            if (a.entry_zero(i, j)) continue;
            for (std::size_t k = 0; k < b.rows_; ++k)
                for (std::size_t l = 0; l < b.cols_; ++l) {
                    if (b.entry_zero(k, l)) continue;
                    std::size_t r = i * b.rows_ + k, col = j * b.cols_ + l;
                    if (a.f_.kind == FieldKind::rational)
                        c.q_[r * c.cols_ + col] = a.q_[i * a.cols_ + j] * b.q_[k * b.cols_ + l];
                    else
                        c.r_[r * c.cols_ + col] = modp::mul(a.r_[i * a.cols_ + j], b.r_[k * b.cols_ + l], a.f_.p);
                }
        }
    return c;
}

std::string Mat::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).str();
        os << "]";
    }
    os << "]";
    return os.str();
}

namespace {

// Row-reduction over the two storage kinds. Elimination of the non-pivot
// rows is the data-parallel loop; results are identical to the serial path
// because each row update is an independent axpy.
template <bool Parallel>
RrefResult rref_impl(const Mat& a) {
    RrefResult res;
    res.R = a;
    Mat& m = res.R;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    if (m.field().kind == FieldKind::rational) {
        auto& q = m.raw_q();
        for (std::size_t c = 0; c < cols && r < rows; ++c) {
            std::size_t pr = rows;
            for (std::size_t i = r; i < rows; ++i)
                if (q[i * cols + c] != 0) { pr = i; break; }
            if (pr == rows) continue;
            if (pr != r)
                for (std::size_t j = c; j < cols; ++j) std::swap(q[r * cols + j], q[pr * cols + j]);
            mpq_class inv = 1 / q[r * cols + c];
            for (std::size_t j = c; j < cols; ++j)
                if (q[r * cols + j] != 0) q[r * cols + j] *= inv;
            const long nrows = static_cast<long>(rows);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (Parallel)
#endif
            for (long i = 0; i < nrows; ++i) {
                if (static_cast<std::size_t>(i) == r) continue;
                mpq_class f = q[i * cols + c];
                if (f == 0) continue;
                mpq_class t;
                for (std::size_t j = c; j < cols; ++j) {
                    const mpq_class& pv = q[r * cols + j];
                    if (pv == 0) continue;
                    t = f * pv;
                    q[i * cols + j] -= t;
                }
            }
            res.pivots.push_back(c);
            ++r;
        }
    } else {
        auto& rv = m.raw_r();
        const std::uint64_t p = m.field().p;
        for (std::size_t c = 0; c < cols && r < rows; ++c) {
            std::size_t pr = rows;
            for (std::size_t i = r; i < rows; ++i)
                if (rv[i * cols + c]) { pr = i; break; }
            if (pr == rows) continue;
            if (pr != r)
                for (std::size_t j = c; j < cols; ++j) std::swap(rv[r * cols + j], rv[pr * cols + j]);
            std::uint64_t inv = modp::inv(rv[r * cols + c], p);
            for (std::size_t j = c; j < cols; ++j) rv[r * cols + j] = modp::mul(rv[r * cols + j], inv, p);
            const long nrows = static_cast<long>(rows);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (Parallel)
#endif
            for (long i = 0; i < nrows; ++i) {
                if (static_cast<std::size_t>(i) == r) continue;
                std::uint64_t f = rv[i * cols + c];
                if (!f) continue;
                for (std::size_t j = c; j < cols; ++j) {
                    std::uint64_t pv = rv[r * cols + j];
                    if (!pv) continue;
                    rv[i * cols + j] = modp::sub(rv[i * cols + j], modp::mul(f, pv, p), p);
                }
            }
            res.pivots.push_back(c);
            ++r;
        }
    }
    res.rank = res.pivots.size();
    return res;
}

}  // namespace

RrefResult rref_serial(const Mat& a) { return rref_impl<false>(a); }
RrefResult rref_parallel(const Mat& a) { return rref_impl<true>(a); }
RrefResult rref(const Mat& a) { return parallel::enabled() ? rref_parallel(a) : rref_serial(a); }

std::size_t rank_of(const Mat& a) { return rref(a).rank; }

Mat kernel_basis(const Mat& a) {
    RrefResult rr = rref(a);
    const std::size_t n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : rr.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Mat K(a.field(), n, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t fc = free_cols[k];
        K.set_int(fc, k, 1);
        for (std::size_t pi = 0; pi < rr.pivots.size(); ++pi)
            K.set(rr.pivots[pi], k, -rr.R.at(pi, fc));
    }
    return K;
}

SolveResult solve(const Mat& A, const Mat& B) {
    if (A.rows() != B.rows()) throw std::logic_error("solve: shape mismatch");
    Mat aug = Mat::hcat(A, B);
    RrefResult rr = rref(aug);
    SolveResult out;
    // pivot in the B-part of any row means inconsistency
    for (auto c : rr.pivots)
        if (c >= A.cols()) return out;
    out.consistent = true;
    out.particular = Mat(A.field(), A.cols(), B.cols());
    for (std::size_t pi = 0; pi < rr.pivots.size(); ++pi) {
        std::size_t pc = rr.pivots[pi];
        for (std::size_t j = 0; j < B.cols(); ++j) out.particular.set(pc, j, rr.R.at(pi, A.cols() + j));
    }
    out.nullity = A.cols() - rr.pivots.size();
    return out;
}

Mat probe_operator(const Field& f, std::size_t y, std::size_t x, std::size_t w, std::size_t u,
                   const std::function<Mat(const Mat&)>& L) {
    Mat M(f, w * u, y * x);
    Mat E(f, y, x);
    for (std::size_t i = 0; i < y; ++i)
        for (std::size_t j = 0; j < x; ++j) {
            E.set_int(i, j, 1);
            Mat img = L(E);
            if (img.rows() != w || img.cols() != u) throw std::logic_error("probe_operator: bad image shape");
            for (std::size_t a = 0; a < w; ++a)
                for (std::size_t b = 0; b < u; ++b)
                    if (!img.entry_zero(a, b)) M.set(a * u + b, i * x + j, img.at(a, b));
            E.set_int(i, j, 0);
        }
    return M;
}

Mat vec_of(const Mat& m) {
    Mat v(m.field(), m.rows() * m.cols(), 1);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m.entry_zero(i, j)) v.set(i * m.cols() + j, 0, m.at(i, j));
    return v;
}

Mat unvec(std::size_t rows, std::size_t cols, const Mat& v) {
    if (v.rows() != rows * cols || v.cols() != 1) throw std::logic_error("unvec: shape");
    Mat m(v.field(), rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (!v.entry_zero(i * cols + j, 0)) m.set(i, j, v.at(i * cols + j, 0));
    return m;
}

}  // namespace cohopf
