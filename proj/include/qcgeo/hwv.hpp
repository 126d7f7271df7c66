#pragma once

// Highest weight vectors over the Gaussian rationals and the exact identities
// they satisfy. Complex vectors use the frame v_j h_2 = e_{4j+1} − i e_{4j+2},
// v_{n+j} h_1 = −e_{4j+1} − i e_{4j+2}, v_j h_1 = e_{4j+3} − i e_{4j+4},
// v_{n+j} h_2 = e_{4j+3} + i e_{4j+4} (1-based real indices); the metric is the
// identity, so vectors and covectors share coordinates.

#include "qcgeo/model_spaces.hpp"

#include <map>
#include <string>
#include <vector>

namespace qcgeo {

/// Names accepted by `build_hwv`.
const std::vector<std::string>& hwv_names();

/// alpha1..alpha3, beta1, beta2, kerK: T*⊗gl; alpha4, alpha5, beta3, beta4,
/// genEH: Λ²T*⊗T. At n = 1, alpha3 and beta2 are replaced by alpha1 and beta1.
/// Throws std::invalid_argument for an unknown name.
ComplexTensor build_hwv(const std::string& name, int n);

/// x⊗α ↦ α⊗x for x⊗gl(α) in T*⊗gl with α a 2-form.
ComplexTensor tilde(const ComplexTensor& x);

/// ∂ extended complex-linearly.
ComplexTensor complex_partial(const ComplexTensor& x);

/// Exact membership of both real and imaginary parts in im ∂ on T*⊗alg.
bool membership_mod_image(const ComplexTensor& x, AlgebraName algebra, int n);

struct HwvCheck {
    std::string id;
    ComplexTensor residual;  // identities: zero on success
    bool expected = true;    // memberships: the expected answer
    bool observed = true;
    bool passed() const { return observed == expected && residual.is_zero(); }
};

/// The full catalog at rank n: the ∂ formulas, the kernel vector of ∂_K and
/// its curvature trace, the image relations, and the ξ·Θ₀ generators.
std::vector<HwvCheck> verify_hwv_catalog(int n);

}  // namespace qcgeo
