#pragma once

// Fixed tensors of the flat model and the chain of structure algebras
// q ⊃ b ⊃ k ⊃ g ⊃ sp(n)⊕sp(1) inside gl(T), all in the standard layout.

#include "qcgeo/gl.hpp"
#include "qcgeo/linalg.hpp"
#include "qcgeo/tensor.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qcgeo {

/// Thrown when a computed object violates a property the construction guarantees.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct ModelConstants {
    int n = 1;
    IndexLayout layout;
    std::array<Tensor, 3> omega;  // 2-forms on V
    Tensor theta0;                // Σ ω_s ⊗ w_s
    std::array<Matrix, 3> J;      // J_s[x][y] = ω_s(e_x, e_y) on V
    Tensor w123;                  // volume form of W
    Matrix metric;                // identity on T
};

ModelConstants standard_forms(int n);

/// Index of the s-th vertical direction (s = 0, 1, 2).
inline int vertical_index(int n, int s) { return 4 * n + s; }

enum class AlgebraName {
    Q,          // A(V) ⊂ V
    B,          // sp(n) + sp(1) + scalar + Hom(W, V)
    K,          // sp(n) + sp(1) + scalar + EH
    G,          // sp(n) + sp(1) + EH
    SpN,
    Sp1,
    Scalar,
    EH,
    HomWV,
    SpnSp1,
    SpnSp1SoW,
    SoW,
};

inline constexpr std::array<AlgebraName, 12> kAllAlgebras = {
    AlgebraName::Q,     AlgebraName::B,      AlgebraName::K,         AlgebraName::G,
    AlgebraName::SpN,   AlgebraName::Sp1,    AlgebraName::Scalar,    AlgebraName::EH,
    AlgebraName::HomWV, AlgebraName::SpnSp1, AlgebraName::SpnSp1SoW, AlgebraName::SoW};

std::string_view algebra_id(AlgebraName name);
/// Accepts the ids returned by `algebra_id`; throws StructuralError otherwise.
AlgebraName parse_algebra_name(std::string_view id);

struct AlgebraBasis {
    AlgebraName name = AlgebraName::SpN;
    int n = 1;
    SubspaceBasis matrices;  // generators in construction order
    /// Named summands in generator order: (summand, first generator, count).
    struct Part {
        AlgebraName name;
        int offset;
        int count;
    };
    std::vector<Part> parts;

    int dim() const { return matrices.rank(); }
    bool contains(const Tensor& a) const { return matrices.contains(a); }
    std::optional<Part> part(AlgebraName summand) const;
};

/// Built once per (name, n) and cached; closure under the bracket is verified on first construction.
const AlgebraBasis& algebra_basis(AlgebraName name, int n);
/// Every commutator of generators re-expands in the span.
bool is_bracket_closed(const AlgebraBasis& alg);

// Single generators.
Tensor sp1_generator(IndexLayout layout, int s);
Tensor scalar_generator(IndexLayout layout);
/// w^s ⊗ (e_a ⌟ ω_s) summed over s.
Tensor eh_generator(IndexLayout layout, int a);
/// The rotation of W given by w_s ⌟ w^{123}.
Tensor so_w_generator(IndexLayout layout, int s);
/// Endomorphism of V for the 2-form ω_s (no W-part).
Tensor omega_endomorphism(const ModelConstants& c, int s);

/// ∂(e^k ⊗ A) = Σ A_ji e^{ki} ⊗ e_j on any layout.
Tensor partial(const Tensor& one_form_gl);
/// δ(e^{ab} ⊗ A) = Σ A_ji e^{abi} ⊗ e_j.
Tensor skew_partial(const Tensor& two_form_gl);

/// ∂ restricted to T*⊗alg; `covectors` limits the leading slot (e.g. to V* or W*).
LinearMap partial_map(const AlgebraBasis& alg, Range covectors = Range::Full);

/// span{ ξ·Θ₀ : ξ ∈ EH }.
SubspaceBasis etilde_subspace(int n);

/// The sp(1) or sp(n) Casimir acting on tensors through `act`.
class Casimir {
public:
    Casimir() = default;
    Casimir(std::vector<Tensor> left, std::vector<Tensor> right) : left_(std::move(left)), right_(std::move(right)) {}

    template <class S>
    BasicTensor<S> apply(const BasicTensor<S>& t) const {
        BasicTensor<S> out(t.signature(), t.layout());
        for (std::size_t i = 0; i < left_.size(); ++i) out += act(left_[i], act(right_[i], t));
        return out;
    }

private:
    std::vector<Tensor> left_, right_;
};

/// Projects `x` onto the eigenspaces of `c` for the listed (distinct) eigenvalues
/// by Lagrange interpolation. Throws InvariantViolation unless each part is an
/// eigenvector and the parts sum to `x`.
std::vector<Tensor> isotypic_split(const Casimir& c, const Tensor& x, const std::vector<Rational>& eigenvalues);

struct TorsionSplit {
    SubspaceBasis star;     // im ∂_B
    SubspaceBasis q_part;   // Λ²V*⊗W
    SubspaceBasis w1;       // ∂(V*⊗sp(n)^⊥)
    SubspaceBasis w2;       // ∂(V*⊗S²₀W)
    std::vector<SubspaceBasis> parts() const { return {star, q_part, w1, w2}; }
};

/// Graded pieces of Λ²T*⊗k and the curvature subspaces R₁..R₄ inside them.
struct CurvatureModules {
    std::array<LinearMap, 4> delta;       // δ on the grade-i domain
    std::array<SubspaceBasis, 4> R;       // preimage of s(T*⊗ẼH)
    std::array<SubspaceBasis, 4> tilde_R; // R_i with zero scalar component
    SubspaceBasis s_target;               // s(T*⊗ẼH) ⊂ Λ³T*⊗T
};

/// Grade of e^{form}⊗X for X in a summand of k: vertical form degree, plus one for EH.
int curvature_grade(const Key& form, int form_degree, const IndexLayout& layout, bool eh_value);

/// Per-n cache of everything above. Members are built lazily and are safe to
/// request concurrently.
class ModelSpaces {
public:
    static const ModelSpaces& get(int n);

    int n() const { return n_; }
    IndexLayout layout() const { return IndexLayout::standard(n_); }
    const ModelConstants& constants() const { return constants_; }
    const AlgebraBasis& algebra(AlgebraName name) const { return algebra_basis(name, n_); }

    /// ∂ on T*⊗alg (all covectors), cached.
    const LinearMap& partial_of(AlgebraName name) const;
    const SubspaceBasis& image_of(AlgebraName name) const;
    const TorsionSplit& torsion_split() const;
    const SubspaceBasis& etilde() const;
    const CurvatureModules& curvature_modules() const;
    const Casimir& sp1_casimir() const;
    /// Σ g^{ab} X_a X_b over a basis of sp(n), g the trace form.
    const Casimir& spn_casimir() const;
    /// Eigenvalue of `spn_casimir` on the irreducible sp(n)-module with the
    /// given ⟨λ, λ+2ρ⟩.
    Rational spn_casimir_eigenvalue(int lambda_pairing) const;
    /// Basis of the −35 eigenspace of the sp(1) Casimir on Λ^{1,1}⊗W.
    const SubspaceBasis& es5h() const;
    /// Frobenius complement in gl(V) of the V-parts of sp(n)⊕sp(1).
    const std::vector<Tensor>& spn_sp1_perp_v() const;

    explicit ModelSpaces(int n);

private:
    template <class T>
    struct Lazy {
        mutable std::once_flag flag;
        mutable std::optional<T> value;
        template <class F>
        const T& get(F&& make) const {
            std::call_once(flag, [&] { value.emplace(make()); });
            return *value;
        }
    };

    int n_;
    ModelConstants constants_;
    std::array<Lazy<LinearMap>, kAllAlgebras.size()> partials_;
    std::array<Lazy<SubspaceBasis>, kAllAlgebras.size()> images_;
    Lazy<TorsionSplit> split_;
    Lazy<SubspaceBasis> etilde_;
    Lazy<CurvatureModules> curvature_;
    Lazy<Casimir> sp1_casimir_;
    Lazy<std::pair<Casimir, Rational>> spn_casimir_;
    Lazy<SubspaceBasis> es5h_;
    Lazy<std::vector<Tensor>> perp_v_;
};

}  // namespace qcgeo
