#include "cohopf/linmap.hpp"

namespace cohopf {

VectorSpace VectorSpace::make(std::size_t dim, const std::string& prefix) {
    VectorSpace v;
    v.dim = dim;
    v.labels.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) v.labels.push_back(prefix + std::to_string(i));
    return v;
}

VectorSpace VectorSpace::with_labels(std::vector<std::string> labels) {
    VectorSpace v;
    v.dim = labels.size();
    v.labels = std::move(labels);
    return v;
}

VectorSpace VectorSpace::tensor(const VectorSpace& a, const VectorSpace& b) {
    VectorSpace v;
    v.dim = a.dim * b.dim;
    v.labels.reserve(v.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < b.dim; ++j) v.labels.push_back(a.labels[i] + "*" + b.labels[j]);
    return v;
}

VectorSpace VectorSpace::line() { return with_labels({"1"}); }

LinMap::LinMap(VectorSpace dom_, VectorSpace cod_, Mat m_) : dom(std::move(dom_)), cod(std::move(cod_)), m(std::move(m_)) {
    if (m.rows() != cod.dim || m.cols() != dom.dim) throw std::logic_error("LinMap: matrix shape does not match spaces");
}

LinMap LinMap::identity(const Field& f, const VectorSpace& v) { return LinMap(v, v, Mat::identity(f, v.dim)); }

LinMap LinMap::zero(const Field& f, const VectorSpace& cod, const VectorSpace& dom) {
    return LinMap(dom, cod, Mat::zero(f, cod.dim, dom.dim));
}

LinMap LinMap::operator*(const LinMap& g) const {
    if (g.cod.dim != dom.dim) throw std::logic_error("LinMap: composition shape mismatch");
    return LinMap(g.dom, cod, m * g.m);
}

LinMap LinMap::operator+(const LinMap& g) const { return LinMap(dom, cod, m + g.m); }
LinMap LinMap::operator-(const LinMap& g) const { return LinMap(dom, cod, m - g.m); }
LinMap LinMap::operator-() const { return LinMap(dom, cod, -m); }
LinMap LinMap::scaled(const Scalar& c) const { return LinMap(dom, cod, m.scaled(c)); }

LinMap LinMap::tensor(const LinMap& g) const {
    return LinMap(VectorSpace::tensor(dom, g.dom), VectorSpace::tensor(cod, g.cod), Mat::kron(m, g.m));
}

LinMap LinMap::transpose_map() const { return LinMap(cod, dom, m.transpose()); }

LinMap swap_map(const Field& f, const VectorSpace& v, const VectorSpace& w) {
    Mat m(f, w.dim * v.dim, v.dim * w.dim);
    for (std::size_t i = 0; i < v.dim; ++i)
        for (std::size_t j = 0; j < w.dim; ++j) m.set_int(j * v.dim + i, i * w.dim + j, 1);
    return LinMap(VectorSpace::tensor(v, w), VectorSpace::tensor(w, v), std::move(m));
}

LinMap slot_permutation(const Field& f, const std::vector<VectorSpace>& slots,
                        const std::vector<std::size_t>& perm) {
    if (perm.size() != slots.size()) throw std::logic_error("slot_permutation: arity mismatch");
    std::size_t total = 1;
    for (const auto& s : slots) total *= s.dim;
    std::vector<std::size_t> dims(slots.size());
    for (std::size_t i = 0; i < slots.size(); ++i) dims[i] = slots[i].dim;

    Mat m(f, total, total);
    std::vector<std::size_t> tup(slots.size());
    for (std::size_t col = 0; col < total; ++col) {
        std::size_t rem = col;
        for (std::size_t s = slots.size(); s-- > 0;) {
            tup[s] = rem % dims[s];
            rem /= dims[s];
        }
        std::size_t row = 0;
        for (std::size_t k = 0; k < perm.size(); ++k) row = row * dims[perm[k]] + tup[perm[k]];
        m.set_int(row, col, 1);
    }
    VectorSpace dom = slots[0];
    for (std::size_t i = 1; i < slots.size(); ++i) dom = VectorSpace::tensor(dom, slots[i]);
    VectorSpace cod = slots[perm[0]];
    for (std::size_t i = 1; i < perm.size(); ++i) cod = VectorSpace::tensor(cod, slots[perm[i]]);
    return LinMap(dom, cod, std::move(m));
}

LinMap apply_at_slot(const std::vector<VectorSpace>& slots, std::size_t slot, const LinMap& f) {
    if (slot >= slots.size()) throw std::logic_error("apply_at_slot: slot out of range");
    if (slots[slot].dim != f.dom.dim) throw std::logic_error("apply_at_slot: slot dim mismatch");
    const Field& k = f.field();
    LinMap acc = slot == 0 ? f : LinMap::identity(k, slots[0]);
    for (std::size_t i = 1; i < slots.size(); ++i)
        acc = acc.tensor(i == slot ? f : LinMap::identity(k, slots[i]));
    return acc;
}

KernelImage kernel_image(const LinMap& f) {
    KernelImage out;
    out.kernel = kernel_basis(f.m);
    out.image = column_space_basis(f.m);
    out.rank = out.image.cols();
    return out;
}

std::optional<FactorSolution> factor_through_left(const LinMap& g, const LinMap& f) {
    if (g.cod.dim != f.cod.dim) throw std::logic_error("factor_through_left: codomain mismatch");
    SolveResult sr = solve(g.m, f.m);
    if (!sr.consistent) return std::nullopt;
    FactorSolution fs;
    fs.h = LinMap(f.dom, g.dom, sr.particular);
    fs.solution_space_dim = sr.nullity * f.dom.dim;
    return fs;
}

std::optional<FactorSolution> factor_through_right(const LinMap& g, const LinMap& f) {
    if (g.dom.dim != f.dom.dim) throw std::logic_error("factor_through_right: domain mismatch");
    SolveResult sr = solve(g.m.transpose(), f.m.transpose());
    if (!sr.consistent) return std::nullopt;
    FactorSolution fs;
    fs.h = LinMap(g.cod, f.cod, sr.particular.transpose());
    fs.solution_space_dim = sr.nullity * f.cod.dim;
    return fs;
}

QuotientData quotient_and_section(const LinMap& incl) {
    const Field& f = incl.field();
    const std::size_t w = incl.cod.dim, u = incl.dom.dim;
    if (rank_of(incl.m) != u) throw std::logic_error("quotient_and_section: map is not injective");

    auto retraction = factor_through_right(incl, LinMap::identity(f, incl.dom));
    if (!retraction) throw std::logic_error("quotient_and_section: no retraction (not injective?)");

    // canonical image basis and the standard-basis complement of its pivots
    RrefResult rr = rref(incl.m.transpose());
    std::vector<bool> pivot(w, false);
    for (auto c : rr.pivots) pivot[c] = true;
    std::vector<std::size_t> comp;
    for (std::size_t c = 0; c < w; ++c)
        if (!pivot[c]) comp.push_back(c);

    Mat T(f, w, w);
    for (std::size_t i = 0; i < u; ++i)
        for (std::size_t c = 0; c < w; ++c)
            if (!rr.R.entry_zero(i, c)) T.set(c, i, rr.R.at(i, c));
    for (std::size_t k = 0; k < comp.size(); ++k) T.set_int(comp[k], u + k, 1);
    SolveResult inv = solve(T, Mat::identity(f, w));
    if (!inv.consistent || inv.nullity != 0) throw std::logic_error("quotient_and_section: basis extension failed");

    QuotientData qd;
    std::vector<std::string> qlabels;
    for (auto c : comp) qlabels.push_back("[" + incl.cod.labels[c] + "]");
    qd.quotient = VectorSpace::with_labels(std::move(qlabels));
    qd.projection = LinMap(incl.cod, qd.quotient, inv.particular.sub_rows(u, comp.size()));
    qd.retraction = retraction->h;

    Mat sigma0(f, w, comp.size());
    for (std::size_t k = 0; k < comp.size(); ++k) sigma0.set_int(comp[k], k, 1);
    Mat corr = (Mat::identity(f, w) - incl.m * qd.retraction.m) * sigma0;
    qd.section = LinMap(qd.quotient, incl.cod, std::move(corr));
    return qd;
}

LinMap factor_through_quotient(const LinMap& f, const LinMap& incl, const QuotientData& qd) {
    if (!(f.m * incl.m).is_zero()) throw std::logic_error("factor_through_quotient: map does not kill the subobject");
    return LinMap(qd.quotient, f.cod, f.m * qd.section.m);
}

Mat column_space_basis(const Mat& m) {
    RrefResult rr = rref(m.transpose());
    Mat b(m.field(), m.rows(), rr.rank);
    for (std::size_t i = 0; i < rr.rank; ++i)
        for (std::size_t c = 0; c < m.rows(); ++c)
            if (!rr.R.entry_zero(i, c)) b.set(c, i, rr.R.at(i, c));
    return b;
}

bool subspace_contained(const Mat& sub, const Mat& space) {
    if (sub.cols() == 0) return true;
    return solve(space, sub).consistent;
}

bool subspace_equal(const Mat& a, const Mat& b) {
    return subspace_contained(a, b) && subspace_contained(b, a);
}

Mat subspace_intersection(const Mat& a, const Mat& b) {
    if (a.cols() == 0 || b.cols() == 0) return Mat(a.field(), a.rows(), 0);
    // kernel of [a | -b]; intersection vectors are a * (first block of kernel)
    Mat k = kernel_basis(Mat::hcat(a, -b));
    Mat coeff = k.sub_rows(0, a.cols());
    return column_space_basis(a * coeff);
}

}  // namespace cohopf
