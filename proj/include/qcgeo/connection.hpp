#pragma once

// Constant-coefficient connections on a coframe model: torsion, curvature,
// Bianchi residuals, Ricci contraction and covariant exterior derivatives.

#include "qcgeo/lie_input.hpp"
#include "qcgeo/model_spaces.hpp"

namespace qcgeo {

/// ω = Σ_k e^k ⊗ A_k. Covectors range over every coframe index of the model;
/// the A_k on tangent covectors lie in `algebra`, those on isotropy covectors
/// carry the isotropy action and are not constrained.
class ConnectionForm {
public:
    /// Throws StructuralError if some tangent A_k leaves the algebra.
    ConnectionForm(IndexLayout layout, AlgebraName algebra, Tensor coefficients);
    static ConnectionForm zero(IndexLayout layout, AlgebraName algebra);

    const IndexLayout& layout() const { return layout_; }
    AlgebraName algebra() const { return algebra_; }
    const Tensor& coefficients() const { return coefficients_; }
    /// A_k.
    Tensor component(int k) const { return gl_component(coefficients_, k); }
    /// Coefficients on tangent covectors only, in the standard layout.
    Tensor tangent_coefficients() const;

    friend bool operator==(const ConnectionForm& a, const ConnectionForm& b) {
        return a.algebra_ == b.algebra_ && a.coefficients_ == b.coefficients_;
    }

private:
    IndexLayout layout_;
    AlgebraName algebra_;
    Tensor coefficients_;
};

/// Θ = de + ∂ω with values in T, on the full coframe of the model.
Tensor torsion(const CoframeModel& model, const ConnectionForm& w);
/// Θ restricted to tangent forms, standard layout.
Tensor tangent_torsion(const CoframeModel& model, const ConnectionForm& w);

/// Ω = Σ de^i⊗A_i + Σ_{i<j} e^{ij}⊗[A_i, A_j].
Tensor curvature(const CoframeModel& model, const ConnectionForm& w);
Tensor tangent_curvature(const CoframeModel& model, const ConnectionForm& w);

struct BianchiResiduals {
    Tensor first;   // DΘ − Ω∧θ
    Tensor second;  // DΩ
};
BianchiResiduals bianchi_residuals(const CoframeModel& model, const ConnectionForm& w);

struct Ricci {
    Matrix ric;
    Rational scalar;
};
/// ric(x, y) = Σ_{a<4n} ⟨e^a, Ω(e_a, e_x) e_y⟩; x, y over V or over all of T.
Ricci ricci(const CoframeModel& model, const ConnectionForm& w, bool restrict_to_v = true);

enum class StandardForm { Sigma, Eta, Gamma };
/// The constant form in the standard layout; Sigma and Gamma carry an implicit
/// w_{123} factor that is not stored.
Tensor standard_form(StandardForm which, int n);
/// D of the standard form in the left-invariant frame, tangent part only.
Tensor tensorial_derivative(StandardForm which, const CoframeModel& model, const ConnectionForm& w);

/// Action of an endomorphism on the value slots of a form (form slots untouched).
Tensor act_on_values(const Tensor& a, const Tensor& form);

}  // namespace qcgeo
