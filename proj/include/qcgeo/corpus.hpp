#pragma once

// Structure constants of the bundled example models, generated from their
// defining brackets.

#include "qcgeo/connection.hpp"
#include "qcgeo/lie_input.hpp"

#include <vector>

namespace qcgeo {

/// de^a = 0, de^{4n+s} = ω_s.
CoframeModel heisenberg_model(int n);
/// The seven-dimensional solvable example.
CoframeModel solvable_model();
/// Sp(n+1)Sp(1)/Sp(n)Sp(1) presented on Sp(n+1)Sp(1), isotropy directions last.
CoframeModel sphere_model(int n);
/// The noncompact dual, Sp(n,1)Sp(1)/Sp(n)Sp(1).
CoframeModel hyperbolic_model(int n);

/// heisenberg_n1, heisenberg_n2, sphere_n1, sphere_n2, hyperbolic_n1, cfs_solvable.
std::vector<CoframeModel> bundled_corpus();

/// For a homogeneous model, the connection on the isotropy directions given by
/// ad(h)|_m; zero elsewhere. Zero for models without isotropy.
ConnectionForm isotropy_connection(const CoframeModel& model);

}  // namespace qcgeo
