#pragma once

// Reference tensors written out term by term, and random generators for the
// property suites. Everything here is built from basis elements, independently
// of the solvers under test.

#include "qcgeo/connection.hpp"
#include "qcgeo/corpus.hpp"
#include "qcgeo/gl.hpp"
#include "qcgeo/qc_pipeline.hpp"

#include <random>
#include <vector>

namespace qcgeo::testing {

inline Rational q(long num, long den = 1) { return make_rational(num, den); }

inline IndexLayout std_layout(int n) { return IndexLayout::standard(n); }

/// e^{i j ...} with 1-based indices.
inline Tensor form(int n, std::initializer_list<int> one_based) {
    Tensor t(Signature::form(static_cast<int>(one_based.size())), std_layout(n));
    Key k;
    for (int i : one_based) k.push(i - 1);
    t.add(k, Rational(1));
    return t;
}

/// ω_s for s = 1, 2, 3: Σ_j of e^{12}−e^{34}, e^{13}+e^{24}, e^{14}−e^{23} shifted to block j.
inline Tensor omega(int n, int s) {
    static constexpr int pairs[3][2][3] = {{{1, 2, 1}, {3, 4, -1}}, {{1, 3, 1}, {2, 4, 1}}, {{1, 4, 1}, {2, 3, -1}}};
    Tensor t(Signature::form(2), std_layout(n));
    for (int j = 0; j < n; ++j)
        for (const auto& p : pairs[s - 1]) t.add(Key{4 * j + p[0] - 1, 4 * j + p[1] - 1}, Rational(p[2]));
    return t;
}

/// w^s as a covector index (0-based), s = 1, 2, 3.
inline int w_index(int n, int s) { return 4 * n + s - 1; }

/// The 2-form w_s ⌟ w^{123}.
inline Tensor w_contract_volume(int n, int s) {
    const int a = w_index(n, s % 3 + 1), b = w_index(n, (s + 1) % 3 + 1);
    Tensor t(Signature::form(2), std_layout(n));
    t.add(Key{a, b}, Rational(1));
    return t;
}

/// The sp(1) element written ω_s: ω_s on V and twice the rotation w_t → w_u on W.
inline Tensor sp1_value(int n, int s) {
    Tensor a = gl_from_2form(omega(n, s));
    const int t = w_index(n, s % 3 + 1), u = w_index(n, (s + 1) % 3 + 1);
    a.add(Key{u, t}, Rational(-2));
    a.add(Key{t, u}, Rational(2));
    return a;
}

/// EH(e_a) = Σ_s w^s ⊗ (e_a ⌟ ω_s), a 1-based.
inline Tensor eh_value(int n, int a) {
    Tensor out = gl_zero(std_layout(n));
    for (int s = 1; s <= 3; ++s) {
        Tensor w(Signature::form(1), std_layout(n));
        w.add(Key{w_index(n, s)}, Rational(1));
        out += endomorphism(w, as_vector(interior(a - 1, omega(n, s))));
    }
    return out;
}

/// Σ_a e^a ⊗ EH(e_a) in T*⊗gl.
inline Tensor eh_tautological(int n) {
    Tensor out(form_gl_signature(1), std_layout(n));
    for (int a = 1; a <= 4 * n; ++a) out += covector_times_gl(a - 1, eh_value(n, a));
    return out;
}

/// Σ_{a,s,r} (e_a ⌟ ω_r) ∧ w^r ⊗ w^s ⊗ (e_a ⌟ ω_s).
inline Tensor eh_curvature_term(int n) {
    Tensor out(form_gl_signature(2), std_layout(n));
    for (int a = 1; a <= 4 * n; ++a) {
        Tensor two(Signature::form(2), std_layout(n));
        for (int r = 1; r <= 3; ++r) two += wedge(interior(a - 1, omega(n, r)), form(n, {w_index(n, r) + 1}));
        out += form_times_gl(two, eh_value(n, a));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Random generators. Small integers over small denominators keep the exact
// arithmetic fast while exercising signs and fractions.

class Random {
public:
    explicit Random(std::uint64_t seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    Rational rational(int bound = 3) { return make_rational(integer(-bound, bound), integer(1, 3)); }
    Rational nonzero_rational(int bound = 3) {
        for (;;)
            if (Rational r = rational(bound); !is_zero(r)) return r;
    }

    /// Unitriangular times diagonal: always invertible.
    Matrix invertible(int size, int density_percent = 30) {
        Matrix m = identity_matrix(size);
        for (int i = 0; i < size; ++i) {
            m[i][i] = nonzero_rational(2);
            for (int j = i + 1; j < size; ++j)
                if (integer(0, 99) < density_percent) m[i][j] = rational(2);
        }
        if (integer(0, 1)) m = transpose(m);
        return m;
    }

    /// Random element of T*⊗alg on the tangent covectors of `layout`, plus a
    /// random gl part on isotropy covectors.
    ConnectionForm connection(IndexLayout layout, AlgebraName algebra) {
        const auto& gens = ModelSpaces::get(layout.n).algebra(algebra).matrices.generators();
        Tensor coeffs(form_gl_signature(1), layout);
        for (int k = 0; k < layout.ambient; ++k) {
            if (k < layout.tangent()) {
                for (const auto& g : gens)
                    if (integer(0, 2) == 0) coeffs += covector_times_gl(k, rational() * g.relayout(layout));
            } else {
                for (int i = 0; i < layout.tangent(); ++i)
                    if (integer(0, 9) == 0) coeffs.add(Key{k, i, integer(0, layout.tangent() - 1)}, rational());
            }
        }
        return ConnectionForm(layout, algebra, coeffs);
    }

    /// A random EH shift of the complement, as the 4n × 3 matrix of ẽ^a = e^a + Σ μ_as w^s.
    Matrix eh_shift(int n) {
        Matrix mu(4 * n, std::vector<Rational>(3));
        for (int a = 1; a <= 4 * n; ++a) {
            const Rational c = integer(0, 1) ? rational() : Rational(0);
            if (is_zero(c)) continue;
            const Tensor eh = eh_value(n, a);
            for (int r = 0; r < 4 * n; ++r)
                for (int s = 0; s < 3; ++s) mu[r][s] += c * eh.coefficient(Key{r, w_index(n, s + 1)});
        }
        return mu;
    }

private:
    std::mt19937_64 rng_;
};

/// A Lie algebra in a random coframe: the bundled model re-expressed by an
/// invertible change of basis mixing only tangent directions.
inline CoframeModel random_frame(const CoframeModel& base, Random& rnd) {
    Matrix p = identity_matrix(base.dimension());
    const Matrix block = rnd.invertible(base.layout().tangent());
    for (int i = 0; i < base.layout().tangent(); ++i)
        for (int j = 0; j < base.layout().tangent(); ++j) p[i][j] = block[i][j];
    return change_coframe(base, p);
}

inline bool all_zero(const std::array<Rational, 3>& xs) {
    return is_zero(xs[0]) && is_zero(xs[1]) && is_zero(xs[2]);
}

}  // namespace qcgeo::testing
