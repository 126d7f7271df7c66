#pragma once

// Endomorphisms of T stored as tensors with one vector slot (row) and one
// covector slot (column): the key (j, i) is the basis element e^i ⊗ e_j.

#include "qcgeo/linalg.hpp"
#include "qcgeo/tensor.hpp"

#include <map>
#include <vector>

namespace qcgeo {

inline Signature gl_signature() {
    return Signature{{Variance::Vector, 1, Range::Full}, {Variance::Covector, 1, Range::Full}};
}

/// Signature of T*⊗gl(T): leading covector, then the endomorphism slots.
inline Signature form_gl_signature(int degree) {
    return Signature::form(degree).concat(gl_signature());
}

/// Signature of Λ^k T*⊗T.
inline Signature vector_form_signature(int degree) { return Signature::form(degree).then_vector(); }

using VectorCoeffs = std::map<int, Rational>;

Tensor gl_zero(IndexLayout layout);
Tensor gl_unit(IndexLayout layout, int row, int col, const Rational& c = Rational(1));
Tensor identity_on(IndexLayout layout, Range block, const Rational& c = Rational(1));
Tensor compose(const Tensor& a, const Tensor& b);
Tensor bracket(const Tensor& a, const Tensor& b);
Rational trace(const Tensor& a);
/// The entries of `a` with row in `rows` and column in `cols`.
Tensor gl_block(const Tensor& a, Range rows, Range cols);
/// e^i∧e^j ↦ e^i⊗e_j − e^j⊗e_i, i.e. v ↦ v ⌟ α.
Tensor gl_from_2form(const Tensor& form2);
/// y ⊗ z for a 1-form y and a vector z: v ↦ y(v) z.
Tensor endomorphism(const Tensor& one_form, const VectorCoeffs& vec);
VectorCoeffs apply(const Tensor& a, const VectorCoeffs& v);
/// Frobenius pairing Σ a_ji b_ji.
Rational frobenius(const Tensor& a, const Tensor& b);
/// tr(ab).
Rational trace_pairing(const Tensor& a, const Tensor& b);

/// Dense block of an endomorphism, rows/cols [offset, offset+size).
Matrix to_matrix(const Tensor& a, int offset, int size);
Tensor from_matrix(IndexLayout layout, const Matrix& m, int offset);

/// Vector form of a 1-form (coefficient map).
VectorCoeffs as_vector(const Tensor& one_form);
Tensor as_one_form(IndexLayout layout, const VectorCoeffs& v);

/// e^k ⊗ A as an element of T*⊗gl(T).
Tensor covector_times_gl(int k, const Tensor& a);
/// Form ⊗ A for a k-form on the model.
Tensor form_times_gl(const Tensor& form, const Tensor& a);
/// Form ⊗ v for a vector v.
Tensor form_times_vector(const Tensor& form, const VectorCoeffs& v);
/// Extracts the endomorphism attached to covector k in a T*⊗gl element.
Tensor gl_component(const Tensor& one_form_gl, int k);

/// Infinitesimal action of an endomorphism on every slot of `t`: vector slots
/// transform by A, covector slots by −Aᵀ.
template <class S>
BasicTensor<S> act(const Tensor& a, const BasicTensor<S>& t) {
    std::map<int, std::vector<std::pair<int, Rational>>> by_col, by_row;
    for (const auto& [k, v] : a.terms()) {
        by_col[k[1]].emplace_back(k[0], v);
        by_row[k[0]].emplace_back(k[1], v);
    }
    BasicTensor<S> out(t.signature(), t.layout());
    for (const auto& [key, v] : t.terms()) {
        int pos = 0;
        for (const auto& g : t.signature().groups()) {
            for (int p = 0; p < g.degree; ++p, ++pos) {
                const int x = key[pos];
                if (g.variance == Variance::Vector) {
                    auto it = by_col.find(x);
                    if (it == by_col.end()) continue;
                    for (const auto& [r, c] : it->second) {
                        Key k2 = key;
                        k2.at(pos) = static_cast<std::uint8_t>(r);
                        out.add(k2, v * S(c));
                    }
                } else {
                    auto it = by_row.find(x);
                    if (it == by_row.end()) continue;
                    for (const auto& [col, c] : it->second) {
                        Key k2 = key;
                        k2.at(pos) = static_cast<std::uint8_t>(col);
                        out.add(k2, v * S(-c));
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace qcgeo
