#include "qcgeo/connection.hpp"

namespace qcgeo {

ConnectionForm::ConnectionForm(IndexLayout layout, AlgebraName algebra, Tensor coefficients)
    : layout_(layout), algebra_(algebra), coefficients_(std::move(coefficients)) {
    if (!(coefficients_.signature() == form_gl_signature(1)))
        throw StructuralError("connection coefficients must lie in T*⊗gl, got " +
                              coefficients_.signature().describe());
    const auto& alg = algebra_basis(algebra_, layout_.n);
    std::map<int, Tensor> rows;
    for (const auto& [k, v] : coefficients_.terms())
        if (k[0] < layout_.tangent())
            rows.try_emplace(k[0], gl_zero(IndexLayout::standard(layout_.n))).first->second.add(Key{k[1], k[2]}, v);
    for (const auto& [k, a] : rows)
        if (!alg.contains(a))
            throw StructuralError("connection component on e^" + std::to_string(k + 1) + " leaves " +
                                  std::string(algebra_id(algebra_)));
}

ConnectionForm ConnectionForm::zero(IndexLayout layout, AlgebraName algebra) {
    return ConnectionForm(layout, algebra, Tensor(form_gl_signature(1), layout));
}

Tensor ConnectionForm::tangent_coefficients() const {
    return restrict_to_tangent(coefficients_).relayout(IndexLayout::standard(layout_.n));
}

Tensor torsion(const CoframeModel& model, const ConnectionForm& w) {
    const IndexLayout l = model.layout();
    Tensor out = partial(w.coefficients());
    for (int j = 0; j < l.tangent(); ++j) out += form_times_vector(model.differentials[j], {{j, Rational(1)}});
    return out;
}

Tensor tangent_torsion(const CoframeModel& model, const ConnectionForm& w) {
    return restrict_to_tangent(torsion(model, w)).relayout(IndexLayout::standard(model.n));
}

Tensor curvature(const CoframeModel& model, const ConnectionForm& w) {
    const IndexLayout l = model.layout();
    Tensor out(form_gl_signature(2), l);
    std::vector<Tensor> a(l.ambient);
    for (int i = 0; i < l.ambient; ++i) a[i] = w.component(i);
    for (int i = 0; i < l.ambient; ++i) {
        if (a[i].is_zero()) continue;
        out += form_times_gl(model.differentials[i], a[i]);
        for (int j = i + 1; j < l.ambient; ++j) {
            if (a[j].is_zero()) continue;
            Tensor f(Signature::form(2), l);
            f.add(Key{i, j}, Rational(1));
            out += form_times_gl(f, bracket(a[i], a[j]));
        }
    }
    return out;
}

Tensor tangent_curvature(const CoframeModel& model, const ConnectionForm& w) {
    return restrict_to_tangent(curvature(model, w)).relayout(IndexLayout::standard(model.n));
}

Tensor act_on_values(const Tensor& a, const Tensor& form) {
    const int deg = form.signature().form_degree();
    Tensor out(form.signature(), form.layout());
    int pos = 0;
    std::vector<std::pair<int, Variance>> slots;
    for (const auto& g : form.signature().groups())
        for (int p = 0; p < g.degree; ++p, ++pos)
            if (pos >= deg) slots.emplace_back(pos, g.variance);
    for (const auto& [key, v] : form.terms())
        for (const auto& [ak, c] : a.terms())
            for (const auto& [p, variance] : slots) {
                // vector slot: e_col ↦ c e_row; covector slot: e^row ↦ −c e^col
                const int from = variance == Variance::Vector ? ak[1] : ak[0];
                const int to = variance == Variance::Vector ? ak[0] : ak[1];
                if (key[p] != from) continue;
                Key k2 = key;
                k2.at(p) = static_cast<std::uint8_t>(to);
                out.add(k2, variance == Variance::Vector ? c * v : Rational(-c * v));
            }
    return out;
}

namespace {

// Σ_k e^k ∧ (A_k · α) on the value slots, plus tr(A_k|W) α for an implicit w_{123}.
Tensor connection_action(const ConnectionForm& w, const Tensor& alpha, bool volume_factor) {
    const IndexLayout l = alpha.layout();
    const Signature out_sig = alpha.signature().with_form_degree(alpha.signature().form_degree() + 1);
    Tensor out(out_sig, l);
    for (int k = 0; k < l.ambient; ++k) {
        const Tensor a = w.component(k).relayout(l);
        if (a.is_zero()) continue;
        Tensor moved = act_on_values(a, alpha);
        if (volume_factor) moved += trace(gl_block(a, Range::Vertical, Range::Vertical)) * alpha;
        if (moved.is_zero()) continue;
        out += wedge(basis_form(l, {k}), moved);
    }
    return out;
}

}  // namespace

BianchiResiduals bianchi_residuals(const CoframeModel& model, const ConnectionForm& w) {
    const IndexLayout l = model.layout();
    const Tensor theta = torsion(model, w);
    const Tensor omega = curvature(model, w);

    Tensor first = d(theta, model) + connection_action(w, theta, false);
    Tensor omega_theta(vector_form_signature(3), l);
    for (const auto& [k, v] : omega.terms()) omega_theta.add(Key{k[0], k[1], k[3], k[2]}, v);
    first -= omega_theta;

    Tensor second = d(omega, model);
    for (int k = 0; k < l.ambient; ++k) {
        const Tensor a = w.component(k);
        if (a.is_zero()) continue;
        // [A, ·] on the gl values is the induced action on the value slots.
        second += wedge(basis_form(l, {k}), act_on_values(a, omega));
    }
    return {std::move(first), std::move(second)};
}

Ricci ricci(const CoframeModel& model, const ConnectionForm& w, bool restrict_to_v) {
    const Tensor omega = tangent_curvature(model, w);
    const IndexLayout l = IndexLayout::standard(model.n);
    const int size = restrict_to_v ? l.horizontal() : l.tangent();
    Ricci r{Matrix(size, std::vector<Rational>(size)), Rational(0)};
    for (const auto& [k, v] : omega.terms()) {
        // Ω = Σ_{a<b} e^{ab} ⊗ Ω_ab, so Ω(e_a, e_x) = Ω_ax for a < x and −Ω_xa otherwise.
        const int row = k[2], col = k[3];
        if (col >= size) continue;
        if (k[0] == row && row < l.horizontal() && k[1] < size) r.ric[k[1]][col] += v;
        if (k[1] == row && row < l.horizontal() && k[0] < size) r.ric[k[0]][col] -= v;
    }
    for (int i = 0; i < size; ++i) r.scalar += r.ric[i][i];
    return r;
}

Tensor standard_form(StandardForm which, int n) {
    const auto c = standard_forms(n);
    const IndexLayout l = c.layout;
    switch (which) {
        case StandardForm::Sigma: return c.w123;
        case StandardForm::Eta: {
            Tensor eta(vector_form_signature(1), l);
            for (int s = 0; s < 3; ++s) eta.add(Key{vertical_index(n, s), vertical_index(n, s)}, Rational(1));
            return eta;
        }
        case StandardForm::Gamma: {
            Tensor gamma(vector_form_signature(5), l);
            for (int s = 0; s < 3; ++s)
                gamma += form_times_vector(wedge(c.omega[s], c.w123), {{vertical_index(n, s), Rational(1)}});
            return gamma;
        }
    }
    throw StructuralError("unknown standard form");
}

Tensor tensorial_derivative(StandardForm which, const CoframeModel& model, const ConnectionForm& w) {
    const Tensor alpha = standard_form(which, model.n).relayout(model.layout());
    const bool volume = which != StandardForm::Eta;
    Tensor out = d(alpha, model) + connection_action(w, alpha, volume);
    return restrict_to_tangent(out).relayout(IndexLayout::standard(model.n));
}

}  // namespace qcgeo
