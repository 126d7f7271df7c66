#include "qcgeo/qc_pipeline.hpp"

#include <variant>

namespace qcgeo {

namespace {

// Coordinates of each covector's value along the EH generators of g.
Matrix eh_coordinates(const Tensor& one_form_gl, const AlgebraBasis& g, int first, int count) {
    const auto eh = *g.part(AlgebraName::EH);
    Matrix m(count, std::vector<Rational>(eh.count));
    for (int r = 0; r < count; ++r) {
        const Tensor value = gl_component(one_form_gl, first + r);
        if (value.is_zero()) continue;
        auto coords = g.matrices.coordinates(value);
        if (!coords) throw InvariantViolation("value leaves EH");
        for (int b = 0; b < eh.count; ++b) m[r][b] = (*coords)[eh.offset + b];
    }
    return m;
}

AffineSolutionSet require_solution(SolveResult r, const char* what) {
    if (auto* bad = std::get_if<Unsolvable>(&r)) throw PipelineError(what, bad->residual);
    return std::get<AffineSolutionSet>(std::move(r));
}

MetricConnection finish(const CoframeModel& model, ConnectionForm w) {
    MetricConnection out{std::move(w), Tensor(), Tensor(), Tensor(), Tensor()};
    out.torsion = tangent_torsion(model, out.omega);
    out.t20 = bigrade_part(out.torsion, 2, 0);
    out.t11 = bigrade_part(out.torsion, 1, 1);
    out.t02 = bigrade_part(out.torsion, 0, 2);
    return out;
}

// [Θ^{2,0}]_V + [Θ^{1,1}]_V, optionally with [Θ^{1,1}]_W + [Θ^{0,2}]_W.
Tensor constrained_part(const Tensor& theta, bool with_w) {
    Tensor out = horizontal_values(bigrade_part(theta, 2, 0) + bigrade_part(theta, 1, 1));
    if (with_w) out += vertical_values(bigrade_part(theta, 1, 1) + bigrade_part(theta, 0, 2));
    return out;
}

MetricConnection solve_metric(const CoframeModel& model, const QcmData& qcm, bool duchemin) {
    const auto& spaces = ModelSpaces::get(model.n);
    const IndexLayout l = spaces.layout();
    const int n = model.n;
    const AlgebraName target_algebra = duchemin ? AlgebraName::SpnSp1SoW : AlgebraName::SpnSp1;
    const auto& alg = spaces.algebra(target_algebra);

    LinearMap map(form_gl_signature(1), vector_form_signature(2), l);
    for (int k = 0; k < l.tangent(); ++k)
        for (const auto& x : alg.matrices.generators()) {
            Tensor input = covector_times_gl(k, x);
            Tensor image = constrained_part(partial(input), duchemin);
            map.add_column(std::move(input), std::move(image));
        }
    const int connection_columns = map.domain_dim();
    // Allowed remainder: ∂(W*⊗(sp(n)+sp(1))^⊥) in [Θ^{1,1}]_V, and ES⁵H in [Θ^{1,1}]_W.
    for (int s = 0; s < 3; ++s)
        for (const auto& p : spaces.spn_sp1_perp_v()) {
            Tensor input = covector_times_gl(vertical_index(n, s), p);
            Tensor image = -partial(input);
            map.add_column(std::move(input), std::move(image));
        }
    if (duchemin)
        for (const auto& x : spaces.es5h().generators()) map.add_column(Tensor(form_gl_signature(1), l), -x);

    const Tensor target = -constrained_part(tangent_torsion(model, qcm.omega_qcm), duchemin);
    const auto sol = require_solution(exact_solve(map, target), "metric connection conditions are unsolvable");
    for (const auto& k : sol.kernel)
        for (const auto& [i, c] : k)
            if (i < connection_columns)
                throw InvariantViolation("metric connection conditions do not determine the connection");

    Combination eta;
    for (const auto& [i, c] : sol.particular)
        if (i < connection_columns) eta[i] = c;
    const Tensor correction = map.domain_element(eta);
    return finish(model, ConnectionForm(model.layout(), target_algebra,
                                        qcm.omega_qcm.coefficients() + correction.relayout(model.layout())));
}

}  // namespace

QcmData qcm_connection(const CoframeModel& model) {
    const auto& spaces = ModelSpaces::get(model.n);
    const int n = model.n;
    const int v = 4 * n;
    const auto& g = spaces.algebra(AlgebraName::G);
    const LinearMap& map = spaces.partial_of(AlgebraName::G);
    const ConnectionForm base = base_connection(model, AlgebraName::SpnSp1);
    const Tensor target = spaces.constants().theta0 - tangent_torsion(model, base);

    const auto sol = require_solution(exact_solve(map, target), "frame is not qcm-adapted");
    if (!sol.kernel.empty()) throw InvariantViolation("∂ is not injective on T*⊗g");

    // x = ω' − χ with ω' ∈ T*⊗(sp(n)+sp(1)) and χ ∈ T*⊗EH.
    const Tensor x = sol.particular_element;
    const auto eh = *g.part(AlgebraName::EH);
    Tensor chi(form_gl_signature(1), spaces.layout());
    for (int k = 0; k < spaces.layout().tangent(); ++k) {
        const Tensor value = gl_component(x, k);
        if (value.is_zero()) continue;
        auto coords = g.matrices.coordinates(value);
        if (!coords) throw InvariantViolation("qcm solution leaves g");
        Tensor eh_value = gl_zero(spaces.layout());
        for (int b = eh.offset; b < eh.offset + eh.count; ++b)
            if (!is_zero((*coords)[b])) eh_value += (*coords)[b] * g.matrices.generators()[b];
        chi -= covector_times_gl(k, eh_value);
    }
    const Tensor omega_prime = x + chi;

    QcmData out{ConnectionForm(model.layout(), AlgebraName::SpnSp1,
                               base.coefficients() + omega_prime.relayout(model.layout())),
                Tensor(), Tensor(), Matrix(), Matrix()};
    const int pos = 0;
    out.chi_v = chi.filter([&](const Key& k) { return k[pos] < v; });
    out.chi_w = chi.filter([&](const Key& k) { return k[pos] >= v; });
    out.chi_v_matrix = eh_coordinates(chi, g, 0, v);
    out.chi_w_matrix = eh_coordinates(chi, g, v, 3);
    if (!is_symmetric(out.chi_v_matrix)) throw InvariantViolation("χ_V is not symmetric");
    return out;
}

CoframeModel shift_complement(const CoframeModel& model, const Matrix& shift) {
    const int n = model.n;
    Matrix p = identity_matrix(model.dimension());
    for (int a = 0; a < 4 * n; ++a)
        for (int s = 0; s < 3; ++s) p[a][vertical_index(n, s)] = shift[a][s];
    CoframeModel out = change_coframe(model, p);
    out.name = model.name;
    return out;
}

namespace {

Matrix scaled(Matrix mu, const Rational& t) {
    for (auto& row : mu)
        for (auto& x : row) x *= t;
    return mu;
}

Tensor complement_defect(const CoframeModel& model, const Matrix& mu) {
    const CoframeModel m = shift_complement(model, mu);
    return ModelSpaces::get(model.n).constants().theta0 - tangent_torsion(m, base_connection(m, AlgebraName::SpnSp1));
}

// Shift μ in span(directions) with defect(μ) ∈ im ∂ on T*⊗`quotient`, solved
// linearly. The derivative columns use a five-point stencil, which is exact
// on the cubic polynomials that occur.
std::optional<Matrix> linear_shift(const CoframeModel& model, const std::vector<Matrix>& directions,
                                   AlgebraName quotient, Tensor& residual) {
    const auto& spaces = ModelSpaces::get(model.n);
    const IndexLayout l = spaces.layout();
    const int v = 4 * model.n;
    LinearMap map(form_gl_signature(1), vector_form_signature(2), l);
    for (const auto& dir : directions) {
        const Tensor fp1 = complement_defect(model, dir), fm1 = complement_defect(model, scaled(dir, -1));
        const Tensor fp2 = complement_defect(model, scaled(dir, 2)), fm2 = complement_defect(model, scaled(dir, -2));
        Tensor derivative = Rational(1, 12) * (Rational(8) * (fp1 - fm1) - (fp2 - fm2));
        map.add_column(Tensor(form_gl_signature(1), l), std::move(derivative));
    }
    const int shift_columns = map.domain_dim();
    const auto& q_map = spaces.partial_of(quotient);
    for (std::size_t i = 0; i < q_map.images().size(); ++i) map.add_column(q_map.inputs()[i], -q_map.images()[i]);

    auto result = exact_solve(map, -complement_defect(model, Matrix(v, std::vector<Rational>(3))));
    if (auto* bad = std::get_if<Unsolvable>(&result)) {
        residual = bad->residual;
        return std::nullopt;
    }
    Matrix mu(v, std::vector<Rational>(3));
    for (const auto& [i, c] : std::get<AffineSolutionSet>(result).particular)
        if (i < shift_columns)
            for (int a = 0; a < v; ++a)
                for (int s = 0; s < 3; ++s) mu[a][s] += c * directions[i][a][s];
    return mu;
}

}  // namespace

AdaptedComplement adapt_complement(const CoframeModel& model) {
    const IndexLayout l = ModelSpaces::get(model.n).layout();
    const int v = 4 * model.n;
    const Tensor start = complement_defect(model, Matrix(v, std::vector<Rational>(3)));
    auto fail = [&](const Tensor& second) -> AdaptedComplement {
        throw PipelineError("complement correction did not converge", start, second);
    };

    // Stage one: all of Hom(W, V) modulo im ∂_B fixes the K-reduction; the
    // action is affine there.
    std::vector<Matrix> all;
    for (int a = 0; a < v; ++a)
        for (int s = 0; s < 3; ++s) {
            Matrix mu(v, std::vector<Rational>(3));
            mu[a][s] = 1;
            all.push_back(std::move(mu));
        }
    Tensor residual;
    const auto first = linear_shift(model, all, AlgebraName::B, residual);
    if (!first) return fail(residual);
    const CoframeModel reduced = shift_complement(model, *first);

    // Stage two: EH directions modulo im ∂_G.
    std::vector<Matrix> eh;
    for (int b = 0; b < v; ++b) {
        const Tensor x = eh_generator(l, b);
        Matrix mu(v, std::vector<Rational>(3));
        for (int a = 0; a < v; ++a)
            for (int s = 0; s < 3; ++s) mu[a][s] = x.coefficient(Key{a, vertical_index(model.n, s)});
        eh.push_back(std::move(mu));
    }
    const auto second = linear_shift(reduced, eh, AlgebraName::G, residual);
    if (!second) return fail(residual);

    Matrix total = *first;
    for (int a = 0; a < v; ++a)
        for (int s = 0; s < 3; ++s) total[a][s] += (*second)[a][s];
    AdaptedComplement out{shift_complement(model, total), total};
    try {
        qcm_connection(out.model);
    } catch (const PipelineError& e) {
        return fail(e.residual());
    }
    return out;
}

MetricConnection biquard_connection(const CoframeModel& model, const QcmData& qcm) {
    return solve_metric(model, qcm, false);
}

MetricConnection duchemin_connection(const CoframeModel& model, const QcmData& qcm) {
    return solve_metric(model, qcm, true);
}

EinsteinFlags einstein_flat_report(const CoframeModel& model, const QcmData& qcm, const ConnectionForm& qc) {
    const auto& c = ModelSpaces::get(model.n).constants();
    const int v = 4 * model.n;
    EinsteinFlags out;

    Tensor four(Signature::form(4), c.layout);
    for (int s = 0; s < 3; ++s) four += wedge(c.omega[s], c.omega[s]);
    out.four_form_closed = restrict_to_tangent(d(four.relayout(model.layout()), model)).is_zero();

    const Matrix& chi = qcm.chi_v_matrix;
    Rational trace_chi;
    for (int a = 0; a < v; ++a) trace_chi += chi[a][a];
    Matrix scalar_chi = identity_matrix(v);
    for (auto& row : scalar_chi)
        for (auto& x : row) x *= trace_chi / Rational(v);
    out.traceless_chi_v_zero = operator_equal(chi, scalar_chi);
    out.chi_scalar_and_w_zero = out.traceless_chi_v_zero && qcm.chi_w.is_zero();

    out.ricci = ricci(model, qcm.omega_qcm, true);
    Matrix scalar_ric = identity_matrix(v);
    for (auto& row : scalar_ric)
        for (auto& x : row) x *= out.ricci.scalar / Rational(v);
    out.traceless_ricci_zero = operator_equal(out.ricci.ric, scalar_ric);

    out.flat = tangent_curvature(model, qc).is_zero();

    if (model.n > 1) {
        const bool f = out.four_form_closed;
        if (out.chi_scalar_and_w_zero != f || out.traceless_ricci_zero != f || out.traceless_chi_v_zero != f)
            throw InvariantViolation("Einstein conditions disagree although n > 1");
    }
    return out;
}

}  // namespace qcgeo
