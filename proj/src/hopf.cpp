#include "cohopf/hopf.hpp"

namespace cohopf {

namespace {

bool shapes_ok(const Hopf& h, std::vector<AxiomFailure>& out) {
    const std::size_t d = h.space.dim;
    bool ok = true;
    auto expect = [&](const LinMap& f, std::size_t r, std::size_t c, const char* what) {
        if (f.m.rows() != r || f.m.cols() != c) {
            out.push_back({"shape", std::string(what) + ": expected " + std::to_string(r) + "x" + std::to_string(c) +
                                        ", got " + std::to_string(f.m.rows()) + "x" + std::to_string(f.m.cols())});
            ok = false;
        }
    };
    expect(h.mult, d, d * d, "mult");
    expect(h.unit, d, 1, "unit");
    expect(h.comult, d * d, d, "comult");
    expect(h.counit, 1, d, "counit");
    expect(h.antipode, d, d, "antipode");
    return ok;
}

}  // namespace

LinMap hopf_tau(const Hopf& h) { return swap_map(h.k, h.space, h.space); }

std::vector<AxiomFailure> validate_hopf(const Hopf& h) {
    std::vector<AxiomFailure> out;
    if (!shapes_ok(h, out)) return out;

    const Field& f = h.k;
    const VectorSpace& H = h.space;
    LinMap id = LinMap::identity(f, H);
    LinMap idk = LinMap::identity(f, VectorSpace::line());

    if (!(h.mult * h.mult.tensor(id) == h.mult * id.tensor(h.mult)))
        out.push_back({"associativity", "m∘(m⊗id) != m∘(id⊗m)"});

    if (!(h.mult * h.unit.tensor(id) == id) || !(h.mult * id.tensor(h.unit) == id))
        out.push_back({"unitality", "unit is not two-sided"});

    if (!(h.comult.tensor(id) * h.comult == id.tensor(h.comult) * h.comult))
        out.push_back({"coassociativity", "(Δ⊗id)∘Δ != (id⊗Δ)∘Δ"});

    if (!(h.counit.tensor(id) * h.comult == id) || !(id.tensor(h.counit) * h.comult == id))
        out.push_back({"counitality", "counit laws fail"});

    // Δ is an algebra map: Δ∘m = (m⊗m)∘(id⊗τ⊗id)∘(Δ⊗Δ), Δ∘η = η⊗η
    LinMap tau = hopf_tau(h);
    LinMap mid = id.tensor(tau).tensor(id);
    bool comult_mult = (h.comult * h.mult == h.mult.tensor(h.mult) * mid * h.comult.tensor(h.comult));
    bool comult_unit = (h.comult * h.unit == h.unit.tensor(h.unit) * idk);
    if (!comult_mult || !comult_unit)
        out.push_back({"comult-algebra-map", comult_mult ? "Δ∘η != η⊗η" : "Δ∘m != (m⊗m)(id⊗τ⊗id)(Δ⊗Δ)"});

    bool counit_mult = (h.counit * h.mult == h.counit.tensor(h.counit));
    bool counit_unit = (h.counit * h.unit == idk);
    if (!counit_mult || !counit_unit)
        out.push_back({"counit-algebra-map", counit_mult ? "ε∘η != 1" : "ε∘m != ε⊗ε"});

    LinMap eta_eps = h.unit * h.counit;
    if (!(h.mult * h.antipode.tensor(id) * h.comult == eta_eps))
        out.push_back({"antipode-left", "m∘(S⊗id)∘Δ != η∘ε"});
    if (!(h.mult * id.tensor(h.antipode) * h.comult == eta_eps))
        out.push_back({"antipode-right", "m∘(id⊗S)∘Δ != η∘ε"});

    return out;
}

Hopf dual_hopf(const Hopf& h) {
    Hopf d;
    d.name = h.name + "^*";
    d.k = h.k;
    std::vector<std::string> labels;
    for (const auto& l : h.space.labels) labels.push_back(l + "^");
    d.space = VectorSpace::with_labels(std::move(labels));
    VectorSpace dd = VectorSpace::tensor(d.space, d.space);
    VectorSpace line = VectorSpace::line();
    d.mult = LinMap(dd, d.space, h.comult.m.transpose());
    d.unit = LinMap(line, d.space, h.counit.m.transpose());
    d.comult = LinMap(d.space, dd, h.mult.m.transpose());
    d.counit = LinMap(d.space, line, h.unit.m.transpose());
    d.antipode = LinMap(d.space, d.space, h.antipode.m.transpose());
    return d;
}

std::vector<LinMap> integral_space(const Hopf& h) {
    const std::size_t d = h.space.dim;
    const Field& f = h.k;
    // unknowns L_b = Λ(e_b); equation per (a, j):
    //   sum_b Δ[(a,b), j] L_b - unit[a] L_j = 0
    Mat sys(f, d * d, d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t b = 0; b < d; ++b) {
                Scalar c = h.comult.m.at(a * d + b, j);
                if (!c.is_zero()) sys.add_at(a * d + j, b, c);
            }
            Scalar u = h.unit.m.at(a, 0);
            if (!u.is_zero()) sys.add_at(a * d + j, j, -u);
        }
    Mat K = kernel_basis(sys);
    std::vector<LinMap> out;
    for (std::size_t c = 0; c < K.cols(); ++c) {
        Mat row(f, 1, d);
        for (std::size_t b = 0; b < d; ++b) row.set(0, b, K.at(b, c));
        out.emplace_back(h.space, VectorSpace::line(), std::move(row));
    }
    return out;
}

IntegralData cofrobenius_data(const Hopf& h) {
    auto basis = integral_space(h);
    if (basis.size() != 1)
        throw std::runtime_error("cofrobenius_data: integral space has dimension " + std::to_string(basis.size()) +
                                 " (expected 1); input is not a valid finite-dimensional Hopf algebra");
    IntegralData out;
    LinMap lambda = basis[0];
    Scalar first = Scalar::zero(h.k);
    for (std::size_t j = 0; j < h.space.dim; ++j)
        if (!lambda.m.entry_zero(0, j)) { first = lambda.m.at(0, j); break; }
    out.lambda = lambda.scaled(first.inverse());
    out.lambda_prime = out.lambda * h.antipode;
    out.is_cofrobenius = true;
    bool found = false;
    for (std::size_t j = 0; j < h.space.dim; ++j)
        if (!out.lambda_prime.m.entry_zero(0, j)) {
            out.x_index = j;
            found = true;
            break;
        }
    if (!found) throw std::runtime_error("cofrobenius_data: Λ' is zero");
    Mat xv(h.k, h.space.dim, 1);
    xv.set_int(out.x_index, 0, 1);
    out.x = LinMap(VectorSpace::line(), h.space, std::move(xv));
    return out;
}

LinMap integral_element(const Hopf& h) {
    const std::size_t d = h.space.dim;
    const Field& f = h.k;
    // t with m(e_a⊗t) = ε(e_a)·t for all a; unknowns t_b:
    //   sum_b mult[i, (a,b)] t_b - ε(e_a) t_i = 0
    Mat sys(f, d * d, d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t b = 0; b < d; ++b) {
                Scalar c = h.mult.m.at(i, a * d + b);
                if (!c.is_zero()) sys.add_at(a * d + i, b, c);
            }
            Scalar e = h.counit.m.at(0, a);
            if (!e.is_zero()) sys.add_at(a * d + i, i, -e);
        }
    Mat K = kernel_basis(sys);
    if (K.cols() == 0) throw std::runtime_error("integral_element: no left integral element");
    Mat t(f, d, 1);
    for (std::size_t b = 0; b < d; ++b) t.set(b, 0, K.at(b, 0));
    return LinMap(VectorSpace::line(), h.space, std::move(t));
}

}  // namespace cohopf
