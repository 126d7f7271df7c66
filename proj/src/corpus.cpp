#include "qcgeo/corpus.hpp"

#include <array>

namespace qcgeo {

namespace {

void add_term(CoframeModel& m, int i, long c, int j, int k) {
    m.differentials[i - 1].add(Key{j - 1, k - 1}, Rational(c));
}

// Quaternions as (1, i, j, k) coefficients.
using Quat = std::array<Rational, 4>;

Quat qmul(const Quat& a, const Quat& b) {
    return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
            a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
            a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}
Quat qadd(const Quat& a, const Quat& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]}; }
Quat qscale(const Rational& c, const Quat& a) { return {c * a[0], c * a[1], c * a[2], c * a[3]}; }
Quat unit(int u) {
    Quat q{};
    q[u] = 1;
    return q;
}

// An element of the isometry algebra: a quaternionic (n+1)×(n+1) matrix
// paired with an imaginary quaternion for the extra sp(1) factor.
struct AlgebraElement {
    std::vector<std::vector<Quat>> m;
    Quat q{};
};

class QuaternionicAlgebra {
public:
    explicit QuaternionicAlgebra(int size) : size_(size) {}

    AlgebraElement element(std::initializer_list<std::tuple<int, int, Quat>> entries, Quat q = {}) const {
        AlgebraElement x{std::vector<std::vector<Quat>>(size_, std::vector<Quat>(size_)), q};
        for (const auto& [r, c, v] : entries) x.m[r][c] = qadd(x.m[r][c], v);
        return x;
    }

    AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) const {
        AlgebraElement z{std::vector<std::vector<Quat>>(size_, std::vector<Quat>(size_)), {}};
        for (int i = 0; i < size_; ++i)
            for (int j = 0; j < size_; ++j)
                for (int k = 0; k < size_; ++k) {
                    z.m[i][j] = qadd(z.m[i][j], qmul(x.m[i][k], y.m[k][j]));
                    z.m[i][j] = qadd(z.m[i][j], qscale(-1, qmul(y.m[i][k], x.m[k][j])));
                }
        z.q = qadd(qmul(x.q, y.q), qscale(-1, qmul(y.q, x.q)));
        return z;
    }

    std::vector<Rational> coords(const AlgebraElement& x) const {
        std::vector<Rational> v;
        for (const auto& row : x.m)
            for (const auto& e : row) v.insert(v.end(), e.begin(), e.end());
        v.insert(v.end(), x.q.begin(), x.q.end());
        return v;
    }

private:
    int size_;
};

CoframeModel homogeneous_model(int n, bool hyperbolic) {
    const int last = n;
    QuaternionicAlgebra alg(n + 1);
    const Quat one = unit(0);
    const Rational sg = hyperbolic ? -1 : 1;
    std::vector<AlgebraElement> basis;
    for (int l = 0; l < n; ++l) {
        if (!hyperbolic) {
            basis.push_back(alg.element({{last, l, qscale(-1, one)}, {l, last, one}}));
            for (int u = 1; u <= 3; ++u) basis.push_back(alg.element({{last, l, unit(u)}, {l, last, unit(u)}}));
        } else {
            basis.push_back(alg.element({{last, l, one}, {l, last, one}}));
            for (int u = 1; u <= 3; ++u)
                basis.push_back(alg.element({{last, l, qscale(-1, unit(u))}, {l, last, unit(u)}}));
        }
    }
    for (int u = 1; u <= 3; ++u)
        basis.push_back(alg.element({{last, last, qscale(sg, unit(u))}}, qscale(-sg, unit(u))));
    // Isotropy: sp(n) block and the diagonal sp(1).
    for (int i = 0; i < n; ++i) {
        for (int u = 1; u <= 3; ++u) basis.push_back(alg.element({{i, i, unit(u)}}));
        for (int j = i + 1; j < n; ++j) {
            basis.push_back(alg.element({{i, j, one}, {j, i, qscale(-1, one)}}));
            for (int u = 1; u <= 3; ++u) basis.push_back(alg.element({{i, j, unit(u)}, {j, i, unit(u)}}));
        }
    }
    for (int u = 1; u <= 3; ++u) basis.push_back(alg.element({{last, last, unit(u)}}, unit(u)));

    const int dim = static_cast<int>(basis.size());
    const int tangent = 4 * n + 3;
    std::vector<std::vector<Rational>> columns;
    for (const auto& b : basis) columns.push_back(alg.coords(b));
    Matrix a(columns[0].size(), std::vector<Rational>(dim));
    for (int c = 0; c < dim; ++c)
        for (std::size_t r = 0; r < columns[c].size(); ++r) a[r][c] = columns[c][r];

    CoframeModel m = abelian_model((hyperbolic ? "hyperbolic_n" : "sphere_n") + std::to_string(n), n, dim - tangent);
    for (int j = 0; j < dim; ++j)
        for (int k = j + 1; k < dim; ++k) {
            auto c = solve(a, alg.coords(alg.bracket(basis[j], basis[k])));
            if (!c) throw InvariantViolation("isometry algebra basis does not close");
            for (int i = 0; i < dim; ++i)
                if (!is_zero((*c)[i])) m.differentials[i].add(Key{j, k}, -(*c)[i]);
        }
    return m;
}

}  // namespace

CoframeModel heisenberg_model(int n) {
    CoframeModel m = abelian_model("heisenberg_n" + std::to_string(n), n);
    const auto c = standard_forms(n);
    for (int s = 0; s < 3; ++s) m.differentials[vertical_index(n, s)] = c.omega[s];
    return m;
}

CoframeModel solvable_model() {
    CoframeModel m = abelian_model("cfs_solvable", 1);
    add_term(m, 2, 1, 1, 5);
    add_term(m, 2, 1, 3, 4);
    add_term(m, 2, -1, 4, 6);
    add_term(m, 3, -1, 2, 4);
    add_term(m, 3, 1, 1, 6);
    add_term(m, 3, 1, 4, 5);
    add_term(m, 4, -2, 1, 4);
    add_term(m, 5, 1, 1, 2);
    add_term(m, 5, -1, 3, 4);
    add_term(m, 5, 1, 4, 6);
    add_term(m, 6, 1, 1, 3);
    add_term(m, 6, 1, 2, 4);  // −e^{42}
    add_term(m, 6, -1, 4, 5);
    add_term(m, 7, 1, 1, 4);
    add_term(m, 7, -1, 2, 3);
    add_term(m, 7, 1, 5, 6);
    return m;
}

CoframeModel sphere_model(int n) { return homogeneous_model(n, false); }
CoframeModel hyperbolic_model(int n) { return homogeneous_model(n, true); }

std::vector<CoframeModel> bundled_corpus() {
    return {heisenberg_model(1), heisenberg_model(2), sphere_model(1),
            sphere_model(2),     hyperbolic_model(1), solvable_model()};
}

ConnectionForm isotropy_connection(const CoframeModel& model) {
    const IndexLayout l = model.layout();
    Tensor coeffs(form_gl_signature(1), l);
    for (int j = 0; j < l.ambient; ++j)
        for (const auto& [k, c] : model.differentials[j].terms()) {
            // The e^{iα} coefficient of de^j, i tangent and α isotropy, is the
            // e_j-component of [h_α, e_i].
            if (k[0] >= l.tangent() || k[1] < l.tangent()) continue;
            if (j >= l.tangent())
                throw InvariantViolation("isotropy action does not preserve the tangent directions");
            coeffs.add(Key{k[1], j, k[0]}, c);
        }
    return ConnectionForm(l, AlgebraName::SpnSp1, std::move(coeffs));
}

}  // namespace qcgeo
