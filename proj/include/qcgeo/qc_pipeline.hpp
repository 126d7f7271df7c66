#pragma once

// Decision procedures and canonical connections for qc structures on
// left-invariant coframe models.

#include "qcgeo/connection.hpp"
#include "qcgeo/lie_input.hpp"
#include "qcgeo/model_spaces.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcgeo {

/// A model fails a precondition of a construction; carries the exact obstruction.
class PipelineError : public std::runtime_error {
public:
    PipelineError(const std::string& what, Tensor residual, std::optional<Tensor> second = std::nullopt)
        : std::runtime_error(what), residual_(std::move(residual)), second_(std::move(second)) {}
    const Tensor& residual() const { return residual_; }
    const std::optional<Tensor>& second_residual() const { return second_; }

private:
    Tensor residual_;
    std::optional<Tensor> second_;
};

// ---------------------------------------------------------------------------
// Classification

struct QcCheck {
    bool adapted = false;
    bool orbit_compatible = false;
    std::string witness;                         // first failing relation, empty on success
    std::array<Matrix, 3> gamma;                 // (de^{4n+s})^{2,0} as skew matrices
    std::optional<std::array<Matrix, 3>> complex_structures;
    std::optional<Matrix> metric;                // compatible metric on V when orbit_compatible
};
QcCheck qc_check(const CoframeModel& model);

struct TorsionDecomposition {
    Tensor theta_star;    // im ∂_B
    Tensor theta_q;       // Λ²V*⊗W
    Tensor theta_minus1;  // Λ^{1,1}⊗W part of theta_star
    Tensor theta_1;       // ∂(V*⊗sp(n)^⊥)
    Tensor theta_2;       // ∂(V*⊗S²₀W)
    Tensor theta_2_es3h;
    Tensor theta_2_es5h;
    Tensor total() const { return theta_star + theta_q + theta_1 + theta_2; }
};
/// Splits the tangent torsion of `w` along im∂_B ⊕ Λ²V*⊗W ⊕ ∂(W₁) ⊕ ∂(W₂).
TorsionDecomposition torsion_decomposition(const CoframeModel& model, const ConnectionForm& w);

struct Integrability {
    bool integrable = false;
    Tensor es3h_part;
    Tensor es5h_part;
};
Integrability integrability_check(const CoframeModel& model);

/// The connection on isotropy directions (zero for Lie-group models), tagged
/// with the given algebra.
ConnectionForm base_connection(const CoframeModel& model, AlgebraName algebra);

// ---------------------------------------------------------------------------
// The qc connection

/// Components of tr Ω^{2,0} along ω₁, ω₂, ω₃ (Frobenius pairing on 2-forms).
std::array<Rational, 3> trace_normalization(const CoframeModel& model, const ConnectionForm& w);

/// Unique connection in T*⊗k with torsion Θ₀ and normalized curvature trace.
/// `kernel_offset` (three rationals) moves the particular solution along
/// ker ∂_K before normalizing; the result does not depend on it.
ConnectionForm qc_connection(const CoframeModel& model,
                             const std::optional<std::array<Rational, 3>>& kernel_offset = std::nullopt);

struct CurvatureReport {
    std::array<Tensor, 4> components;      // grade pieces R1..R4 (standard layout)
    std::array<bool, 4> in_R{};
    std::array<bool, 4> in_tilde_R{};
    bool in_sum = false;                   // Ω ∈ R1+R2+R3+R4
    /// Isotypic pieces of the tilde-R1 and tilde-R3 components, keyed
    /// "R1:S4E", "R1:S2ES2H", "R1:L20E", "R1:R", "R3:S2ES2H", "R3:S4H", "R3:R".
    std::map<std::string, Tensor> isotypes;
    Rational r1_scalar;                    // Σ_{a<b} Ω_ab[b][a], a, b horizontal
    Rational r3_scalar;                    // Σ_{s<t} Ω_{w_s w_t}[w_t][w_s]
};
/// `omega` is a tangent curvature (standard layout) with values in k.
CurvatureReport curvature_module_membership(const Tensor& omega, int n);

// ---------------------------------------------------------------------------
// Metric structures

struct QcmData {
    ConnectionForm omega_qcm;
    Tensor chi_v;         // V*⊗EH part, as T*⊗gl
    Tensor chi_w;         // W*⊗EH part
    Matrix chi_v_matrix;  // χ_V = Σ c_ab e^a ⊗ EH(e_b)
    Matrix chi_w_matrix;  // χ_W = Σ c_sb w^s ⊗ EH(e_b), 3 × 4n
};
/// Throws PipelineError("frame is not qcm-adapted") when the complement is wrong.
QcmData qcm_connection(const CoframeModel& model);

struct AdaptedComplement {
    CoframeModel model;
    Matrix shift;  // μ, 4n × 3: ẽ^a = e^a + Σ_s μ_as w^s
};
/// Linear correction of the vertical complement: Hom(W,V) modulo im ∂_B, then
/// EH modulo im ∂_g. Verified by a successful qcm solve on the result.
AdaptedComplement adapt_complement(const CoframeModel& model);
/// The frame change ẽ^a = e^a + Σ_s μ_as w^s.
CoframeModel shift_complement(const CoframeModel& model, const Matrix& shift);

struct MetricConnection {
    ConnectionForm omega;
    Tensor torsion;  // tangent torsion
    Tensor t20, t11, t02;
};
MetricConnection biquard_connection(const CoframeModel& model, const QcmData& qcm);
MetricConnection duchemin_connection(const CoframeModel& model, const QcmData& qcm);

/// [·]_V and [·]_W: restriction of the value slot.
Tensor horizontal_values(const Tensor& t);
Tensor vertical_values(const Tensor& t);

struct EinsteinFlags {
    bool four_form_closed = false;         // (1)
    bool chi_scalar_and_w_zero = false;    // (2)
    bool traceless_ricci_zero = false;     // (4)
    bool traceless_chi_v_zero = false;     // (5)
    bool flat = false;
    Ricci ricci;                           // of the qcm connection, on V
};
EinsteinFlags einstein_flat_report(const CoframeModel& model, const QcmData& qcm, const ConnectionForm& qc);

// ---------------------------------------------------------------------------
// Full report

struct GeometryReport {
    std::string name;
    int n = 1;
    bool valid = false;
    bool qc_adapted = false;
    bool qc_orbit = false;
    bool integrable = false;
    std::vector<std::string> jacobi_failures;
    std::optional<ConnectionForm> qc;
    std::optional<CurvatureReport> curvature;
    std::optional<QcmData> qcm;
    std::optional<EinsteinFlags> einstein;
    std::optional<MetricConnection> biquard;
    std::optional<MetricConnection> duchemin;
    std::string note;  // why the pipeline stopped early, if it did
};
GeometryReport build_report(const CoframeModel& model);

}  // namespace qcgeo
