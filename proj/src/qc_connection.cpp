#include "qcgeo/qc_pipeline.hpp"

#include <variant>

namespace qcgeo {

namespace {

Tensor adaptation_residual(const CoframeModel& model) {
    const auto& c = ModelSpaces::get(model.n).constants();
    Tensor out(vector_form_signature(2), c.layout);
    for (int s = 0; s < 3; ++s) {
        const int w = vertical_index(model.n, s);
        const Tensor diff = bigrade_part(model.differentials[w], 2, 0).relayout(c.layout) - c.omega[s];
        out += form_times_vector(diff, {{w, Rational(1)}});
    }
    return out;
}

ConnectionForm shifted(const CoframeModel& model, const ConnectionForm& base, AlgebraName algebra, const Tensor& x) {
    return ConnectionForm(model.layout(), algebra, base.coefficients() + x.relayout(model.layout()));
}

// Splits each value of a T*-graded gl tensor into its summands of k.
struct ValueSplit {
    Tensor rest;  // sp(n) + sp(1) + scalar
    Tensor eh;
};

ValueSplit split_values(const Tensor& omega, const AlgebraBasis& k) {
    const auto eh = *k.part(AlgebraName::EH);
    const IndexLayout l = omega.layout();
    std::map<Key, Tensor> by_form;
    for (const auto& [key, x] : omega.terms())
        by_form.try_emplace(key.slice(0, 2), gl_zero(l)).first->second.add(key.slice(2, 2), x);
    ValueSplit out{Tensor(omega.signature(), l), Tensor(omega.signature(), l)};
    const auto& gens = k.matrices.generators();
    for (const auto& [form, value] : by_form) {
        auto coords = k.matrices.coordinates(value);
        if (!coords) throw InvariantViolation("curvature value leaves k: " + render(value));
        Tensor eh_value = gl_zero(l);
        for (int g = eh.offset; g < eh.offset + eh.count; ++g)
            if (!is_zero((*coords)[g])) eh_value += (*coords)[g] * gens[g];
        Tensor f(Signature::form(2), l);
        f.add(form, Rational(1));
        out.eh += form_times_gl(f, eh_value);
        out.rest += form_times_gl(f, value - eh_value);
    }
    return out;
}

}  // namespace

std::array<Rational, 3> trace_normalization(const CoframeModel& model, const ConnectionForm& w) {
    const auto& c = ModelSpaces::get(model.n).constants();
    const Tensor omega = tangent_curvature(model, w);
    Tensor tr(Signature::form(2), c.layout);
    for (const auto& [k, v] : omega.terms())
        if (k[2] == k[3]) tr.add(Key{k[0], k[1]}, v);
    tr = bigrade_part(tr, 2, 0);
    std::array<Rational, 3> out;
    for (int s = 0; s < 3; ++s)
        for (const auto& [k, v] : tr.terms()) out[s] += v * c.omega[s].coefficient(k);
    return out;
}

ConnectionForm qc_connection(const CoframeModel& model, const std::optional<std::array<Rational, 3>>& kernel_offset) {
    if (!qc_check(model).adapted) throw PipelineError("frame is not qc-adapted", adaptation_residual(model));
    const auto& spaces = ModelSpaces::get(model.n);
    const LinearMap& map = spaces.partial_of(AlgebraName::K);
    const ConnectionForm base = base_connection(model, AlgebraName::K);
    const Tensor target = spaces.constants().theta0 - tangent_torsion(model, base);

    auto result = exact_solve(map, target);
    if (auto* bad = std::get_if<Unsolvable>(&result))
        throw PipelineError("not an integrable qc structure", bad->residual);
    const auto& sol = std::get<AffineSolutionSet>(result);
    if (sol.kernel.size() != 3)
        throw InvariantViolation("ker ∂_K has dimension " + std::to_string(sol.kernel.size()) + ", expected 3");

    std::vector<Tensor> kernel;
    for (const auto& k : sol.kernel) kernel.push_back(map.domain_element(k));
    Tensor x = sol.particular_element;
    if (kernel_offset)
        for (int i = 0; i < 3; ++i) x += (*kernel_offset)[i] * kernel[i];

    // The normalization is affine along the kernel: f(x + Σ t_i k_i) = f(x) + M t.
    const auto f0 = trace_normalization(model, shifted(model, base, AlgebraName::K, x));
    Matrix m(3, std::vector<Rational>(3));
    for (int i = 0; i < 3; ++i) {
        const auto fi = trace_normalization(model, shifted(model, base, AlgebraName::K, x + kernel[i]));
        for (int s = 0; s < 3; ++s) m[s][i] = fi[s] - f0[s];
    }
    if (is_zero(determinant(m))) throw InvariantViolation("curvature normalization is singular on ker ∂_K");
    auto t = solve(m, {-f0[0], -f0[1], -f0[2]});
    if (!t) throw InvariantViolation("curvature normalization has no solution");
    for (int i = 0; i < 3; ++i) x += (*t)[i] * kernel[i];

    ConnectionForm w = shifted(model, base, AlgebraName::K, x);
    for (const auto& r : trace_normalization(model, w))
        if (!is_zero(r)) throw InvariantViolation("curvature trace is not affine along ker ∂_K");
    return w;
}

CurvatureReport curvature_module_membership(const Tensor& omega, int n) {
    const auto& spaces = ModelSpaces::get(n);
    const IndexLayout l = spaces.layout();
    const auto& mods = spaces.curvature_modules();
    const ValueSplit split = split_values(omega, spaces.algebra(AlgebraName::K));

    CurvatureReport out;
    for (auto& c : out.components) c = Tensor(form_gl_signature(2), l);
    for (const auto* part : {&split.rest, &split.eh}) {
        const bool eh = part == &split.eh;
        for (const auto& [key, x] : part->terms()) out.components[curvature_grade(key, 2, l, eh)].add(key, x);
    }
    out.in_sum = true;
    for (int g = 0; g < 4; ++g) {
        out.in_R[g] = mods.R[g].contains(out.components[g]);
        out.in_tilde_R[g] = mods.tilde_R[g].contains(out.components[g]);
        out.in_sum = out.in_sum && out.in_R[g];
    }

    const Casimir& sp1 = spaces.sp1_casimir();
    const Casimir& spn = spaces.spn_casimir();
    auto spn_eig = [&](int pairing) { return spaces.spn_casimir_eigenvalue(pairing); };
    if (out.in_tilde_R[0]) {
        const auto h = isotypic_split(sp1, out.components[0], {Rational(0), Rational(-8)});
        const auto e = isotypic_split(spn, h[0], {spn_eig(16 + 8 * n), spn_eig(4 * n), Rational(0)});
        out.isotypes["R1:S4E"] = e[0];
        out.isotypes["R1:L20E"] = e[1];
        out.isotypes["R1:R"] = e[2];
        out.isotypes["R1:S2ES2H"] = isotypic_split(spn, h[1], {spn_eig(4 + 4 * n)})[0];
    }
    if (out.in_tilde_R[2]) {
        const auto h = isotypic_split(sp1, out.components[2], {Rational(-8), Rational(-24), Rational(0)});
        out.isotypes["R3:S2ES2H"] = isotypic_split(spn, h[0], {spn_eig(4 + 4 * n)})[0];
        out.isotypes["R3:S4H"] = isotypic_split(spn, h[1], {Rational(0)})[0];
        out.isotypes["R3:R"] = isotypic_split(spn, h[2], {Rational(0)})[0];
    }

    const int v = 4 * n;
    for (const auto& [k, x] : omega.terms()) {
        if (k[1] < v && k[2] == k[1] && k[3] == k[0]) out.r1_scalar += x;
        if (k[0] >= v && k[2] == k[1] && k[3] == k[0]) out.r3_scalar += x;
    }
    return out;
}

}  // namespace qcgeo
