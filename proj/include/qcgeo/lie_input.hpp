#pragma once

// Left-invariant coframe models: de^i given by structure constants.

#include "qcgeo/linalg.hpp"
#include "qcgeo/tensor.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qcgeo {

/// A Lie algebra presented by the differentials of a coframe. The first 4n
/// indices are horizontal, the next three vertical; a homogeneous model
/// appends `isotropy` further indices for the isotropy subalgebra.
struct CoframeModel {
    std::string name;
    int n = 1;
    int isotropy = 0;
    std::vector<Tensor> differentials;  // de^i, 2-forms in layout()

    IndexLayout layout() const { return {n, 4 * n + 3 + isotropy}; }
    int dimension() const { return 4 * n + 3 + isotropy; }
    friend bool operator==(const CoframeModel&, const CoframeModel&) = default;
};

/// An empty model (all de^i = 0) of the given size.
CoframeModel abelian_model(std::string name, int n, int isotropy = 0);

/// Parses the JSON model document; reports the offending entry on error.
CoframeModel parse_model(std::string_view document);
/// Canonical JSON; parse_model(serialize_model(m)) == m.
std::string serialize_model(const CoframeModel& model);

struct JacobiFailure {
    int index;        // 0-based coframe index
    Tensor residual;  // d(de^i)
};
/// Empty iff d² = 0 on every coframe element.
std::vector<JacobiFailure> validate_jacobi(const CoframeModel& model);

/// Exterior derivative of the leading form group; value slots are constant.
Tensor d(const Tensor& form, const CoframeModel& model);

/// Re-expresses the model in the coframe ẽ = P e.
CoframeModel change_coframe(const CoframeModel& model, const Matrix& p);

}  // namespace qcgeo
