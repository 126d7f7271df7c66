#include "support/reference.hpp"

#include <catch_amalgamated.hpp>

using namespace qcgeo;
using namespace qcgeo::testing;

TEST_CASE("the zero connection has torsion de and curvature zero", "[connection]") {
    const CoframeModel m = solvable_model();
    const ConnectionForm zero = ConnectionForm::zero(m.layout(), AlgebraName::K);
    Tensor expected(vector_form_signature(2), m.layout());
    for (int i = 0; i < 7; ++i) expected += form_times_vector(m.differentials[i], {{i, Rational(1)}});
    CHECK(torsion(m, zero) == expected);
    CHECK(curvature(m, zero).is_zero());
}

TEST_CASE("connections outside the structure algebra are rejected", "[connection]") {
    const IndexLayout l = std_layout(1);
    // e¹⊗(e¹⊗e₁) is a scalar-free diagonal entry, not in sp(n)+sp(1).
    Tensor coeffs(form_gl_signature(1), l);
    coeffs.add(Key{0, 0, 0}, Rational(1));
    CHECK_THROWS_AS(ConnectionForm(l, AlgebraName::SpnSp1, coeffs), StructuralError);
    CHECK_NOTHROW(ConnectionForm(l, AlgebraName::K, covector_times_gl(0, scalar_generator(l))));
}

TEST_CASE("Bianchi identities for random connections on random frames", "[connection][property]") {
    Random rnd(31);
    std::vector<CoframeModel> models = {heisenberg_model(1), solvable_model(), sphere_model(1), hyperbolic_model(1)};
    for (int trial = 0; trial < 100; ++trial) {
        const CoframeModel m = random_frame(models[trial % models.size()], rnd);
        const ConnectionForm w = rnd.connection(m.layout(), trial % 2 ? AlgebraName::K : AlgebraName::B);
        const auto res = bianchi_residuals(m, w);
        CHECK(res.first.is_zero());
        CHECK(res.second.is_zero());
    }
}

TEST_CASE("torsion is affine and curvature quadratic in the connection", "[connection][property]") {
    Random rnd(32);
    const CoframeModel m = solvable_model();
    const IndexLayout l = m.layout();
    for (int trial = 0; trial < 20; ++trial) {
        const ConnectionForm a = rnd.connection(l, AlgebraName::K);
        const ConnectionForm b = rnd.connection(l, AlgebraName::K);
        const ConnectionForm sum(l, AlgebraName::K, a.coefficients() + b.coefficients());
        CHECK(torsion(m, sum) - torsion(m, a) == partial(b.coefficients()));
        Tensor cross(form_gl_signature(2), l);
        for (int i = 0; i < l.ambient; ++i)
            for (int j = i + 1; j < l.ambient; ++j)
                cross += form_times_gl(form(1, {i + 1, j + 1}), bracket(a.component(i), b.component(j)) +
                                                                    bracket(b.component(i), a.component(j)));
        CHECK(curvature(m, sum) == curvature(m, a) + curvature(m, b) + cross);
    }
}

TEST_CASE("Ricci contraction on the sphere", "[connection]") {
    const CoframeModel m = sphere_model(1);
    const Ricci r = ricci(m, qc_connection(m));
    CHECK(is_symmetric(r.ric));
    Rational trace = 0;
    for (int i = 0; i < 4; ++i) trace += r.ric[i][i];
    CHECK(trace == r.scalar);
}

TEST_CASE("value-slot action leaves the form slots alone", "[connection]") {
    const IndexLayout l = std_layout(1);
    const Tensor a = identity_on(l, Range::Horizontal);
    const Tensor t = form_times_vector(form(1, {1, 2}), {{0, Rational(1)}});
    CHECK(act_on_values(a, t) == t);
    CHECK(act(a, t) == -t);
}

TEST_CASE("derivative of the volume form on the sphere", "[connection]") {
    const CoframeModel m = sphere_model(1);
    const int n = 1;
    // Dσ = (ω₁∧w^{23} + ω₂∧w^{31} + ω₃∧w^{12}) ⊗ w_{123}; the w_{123} factor is implicit.
    Tensor expected(Signature::form(4), std_layout(n));
    for (int s = 1; s <= 3; ++s) expected += wedge(omega(n, s), w_contract_volume(n, s));
    CHECK(tensorial_derivative(StandardForm::Sigma, m, isotropy_connection(m)) == expected);
}
