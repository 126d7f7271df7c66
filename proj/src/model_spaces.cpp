#include "qcgeo/model_spaces.hpp"

#include <map>
#include <mutex>

namespace qcgeo {

namespace {

// Vertical pair (a, b) rotated by the s-th sp(1) generator, as offsets into W.
constexpr std::array<std::pair<int, int>, 3> kWRotation = {{{1, 2}, {2, 0}, {0, 1}}};

Signature single_vector_signature() { return Signature{{Variance::Vector, 1, Range::Full}}; }

std::vector<Tensor> spn_generators(const ModelConstants& c) {
    const int v = 4 * c.n;
    const int unknowns = v * v;
    auto var = [v](int r, int col) { return r * v + col; };
    Matrix eqs;
    for (int r = 0; r < v; ++r)
        for (int col = r; col < v; ++col) {
            std::vector<Rational> row(unknowns);
            row[var(r, col)] += 1;
            row[var(col, r)] += 1;
            eqs.push_back(std::move(row));
        }
    for (const auto& J : c.J)
        for (int r = 0; r < v; ++r)
            for (int col = 0; col < v; ++col) {
                // (AJ − JA)[r][col]
                std::vector<Rational> row(unknowns);
                for (int m = 0; m < v; ++m) {
                    row[var(r, m)] += J[m][col];
                    row[var(m, col)] -= J[r][m];
                }
                eqs.push_back(std::move(row));
            }
    std::vector<Tensor> out;
    for (const auto& x : nullspace(eqs, unknowns)) {
        Tensor a = gl_zero(c.layout);
        for (int u = 0; u < unknowns; ++u) a.add(Key{u / v, u % v}, x[u]);
        out.push_back(std::move(a));
    }
    return out;
}

std::vector<Tensor> generators_of(AlgebraName name, const ModelConstants& c) {
    const IndexLayout l = c.layout;
    const int v = 4 * c.n;
    std::vector<Tensor> g;
    switch (name) {
        case AlgebraName::SpN: return spn_generators(c);
        case AlgebraName::Sp1:
            for (int s = 0; s < 3; ++s) g.push_back(sp1_generator(l, s));
            return g;
        case AlgebraName::Scalar: return {scalar_generator(l)};
        case AlgebraName::EH:
            for (int a = 0; a < v; ++a) g.push_back(eh_generator(l, a));
            return g;
        case AlgebraName::HomWV:
            for (int a = 0; a < v; ++a)
                for (int s = 0; s < 3; ++s) g.push_back(gl_unit(l, a, vertical_index(c.n, s)));
            return g;
        case AlgebraName::SoW:
            for (int s = 0; s < 3; ++s) g.push_back(so_w_generator(l, s));
            return g;
        case AlgebraName::Q:
            for (int r = 0; r < l.tangent(); ++r)
                for (int col = 0; col < l.tangent(); ++col)
                    if (!(l.is_vertical(r) && l.is_horizontal(col))) g.push_back(gl_unit(l, r, col));
            return g;
        default: break;
    }
    throw StructuralError("composite algebra has no direct generators");
}

std::vector<AlgebraName> summands_of(AlgebraName name) {
    using A = AlgebraName;
    switch (name) {
        case A::B: return {A::SpN, A::Sp1, A::Scalar, A::HomWV};
        case A::K: return {A::SpN, A::Sp1, A::Scalar, A::EH};
        case A::G: return {A::SpN, A::Sp1, A::EH};
        case A::SpnSp1: return {A::SpN, A::Sp1};
        case A::SpnSp1SoW: return {A::SpN, A::Sp1, A::SoW};
        default: return {name};
    }
}

AlgebraBasis build_algebra(AlgebraName name, int n) {
    const ModelConstants c = standard_forms(n);
    AlgebraBasis alg;
    alg.name = name;
    alg.n = n;
    alg.matrices = SubspaceBasis(gl_signature(), c.layout);
    for (AlgebraName summand : summands_of(name)) {
        const int offset = alg.matrices.rank();
        for (const auto& x : generators_of(summand, c))
            if (!alg.matrices.add(x))
                throw InvariantViolation(std::string("summands of ") + std::string(algebra_id(name)) +
                                         " are not independent");
        alg.parts.push_back({summand, offset, alg.matrices.rank() - offset});
    }
    if (!is_bracket_closed(alg))
        throw InvariantViolation(std::string(algebra_id(name)) + " is not closed under the bracket");
    return alg;
}

Tensor form_pair(IndexLayout l, int a, int b) {
    Tensor f(Signature::form(2), l);
    f.add(Key{a, b}, Rational(1));
    return f;
}

}  // namespace

// ---------------------------------------------------------------------------

ModelConstants standard_forms(int n) {
    if (n < 1) throw StructuralError("model size must be positive");
    ModelConstants c;
    c.n = n;
    c.layout = IndexLayout::standard(n);
    const IndexLayout l = c.layout;
    for (auto& w : c.omega) w = Tensor(Signature::form(2), l);
    for (int j = 0; j < n; ++j) {
        const int b = 4 * j;
        c.omega[0].add(Key{b, b + 1}, Rational(1));
        c.omega[0].add(Key{b + 2, b + 3}, Rational(-1));
        c.omega[1].add(Key{b, b + 2}, Rational(1));
        c.omega[1].add(Key{b + 1, b + 3}, Rational(1));
        c.omega[2].add(Key{b, b + 3}, Rational(1));
        c.omega[2].add(Key{b + 1, b + 2}, Rational(-1));
    }
    c.theta0 = Tensor(vector_form_signature(2), l);
    for (int s = 0; s < 3; ++s) c.theta0 += form_times_vector(c.omega[s], {{vertical_index(n, s), Rational(1)}});
    const int v = 4 * n;
    for (int s = 0; s < 3; ++s) {
        c.J[s] = Matrix(v, std::vector<Rational>(v));
        for (const auto& [k, x] : c.omega[s].terms()) {
            c.J[s][k[0]][k[1]] += x;
            c.J[s][k[1]][k[0]] -= x;
        }
    }
    c.w123 = basis_form(l, {vertical_index(n, 0), vertical_index(n, 1), vertical_index(n, 2)});
    c.metric = identity_matrix(l.tangent());
    return c;
}

std::string_view algebra_id(AlgebraName name) {
    switch (name) {
        case AlgebraName::Q: return "gl_V_gl_W_hom";
        case AlgebraName::B: return "b";
        case AlgebraName::K: return "k";
        case AlgebraName::G: return "g";
        case AlgebraName::SpN: return "sp_n";
        case AlgebraName::Sp1: return "sp_1";
        case AlgebraName::Scalar: return "scalar_R";
        case AlgebraName::EH: return "EH";
        case AlgebraName::HomWV: return "hom_WV";
        case AlgebraName::SpnSp1: return "spn_sp1";
        case AlgebraName::SpnSp1SoW: return "spn_sp1_soW";
        case AlgebraName::SoW: return "so_W";
    }
    return "?";
}

AlgebraName parse_algebra_name(std::string_view id) {
    for (AlgebraName a : kAllAlgebras)
        if (algebra_id(a) == id) return a;
    throw StructuralError("unknown algebra '" + std::string(id) + "'");
}

std::optional<AlgebraBasis::Part> AlgebraBasis::part(AlgebraName summand) const {
    for (const auto& p : parts)
        if (p.name == summand) return p;
    return std::nullopt;
}

const AlgebraBasis& algebra_basis(AlgebraName name, int n) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::unique_ptr<AlgebraBasis>> cache;
    const auto key = std::pair{static_cast<int>(name), n};
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return *it->second;
    }
    auto built = std::make_unique<AlgebraBasis>(build_algebra(name, n));
    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.try_emplace(key, std::move(built));
    return *it->second;
}

bool is_bracket_closed(const AlgebraBasis& alg) {
    const auto& g = alg.matrices.generators();
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (!alg.matrices.contains(bracket(g[i], g[j]))) return false;
    return true;
}

Tensor sp1_generator(IndexLayout layout, int s) {
    const int n = layout.n;
    const auto c = standard_forms(n);
    Tensor a = gl_from_2form(c.omega[s].relayout(layout));
    const auto [p, q] = kWRotation[s];
    a.add(Key{vertical_index(n, q), vertical_index(n, p)}, Rational(-2));
    a.add(Key{vertical_index(n, p), vertical_index(n, q)}, Rational(2));
    return a;
}

Tensor scalar_generator(IndexLayout layout) {
    return identity_on(layout, Range::Horizontal, Rational(-1)) + identity_on(layout, Range::Vertical, Rational(-2));
}

Tensor eh_generator(IndexLayout layout, int a) {
    const auto c = standard_forms(layout.n);
    Tensor out = gl_zero(layout);
    for (int s = 0; s < 3; ++s) {
        const Tensor row = interior(a, c.omega[s]);
        for (const auto& [k, x] : row.terms()) out.add(Key{k[0], vertical_index(layout.n, s)}, x);
    }
    return out;
}

Tensor so_w_generator(IndexLayout layout, int s) {
    const int n = layout.n;
    const auto [p, q] = kWRotation[s];
    Tensor f(Signature::form(2), layout);
    f.add(Key{vertical_index(n, p), vertical_index(n, q)}, Rational(1));
    return gl_from_2form(f);
}

Tensor omega_endomorphism(const ModelConstants& c, int s) { return gl_from_2form(c.omega[s]); }

Tensor partial(const Tensor& x) {
    Tensor out(vector_form_signature(2), x.layout());
    for (const auto& [k, v] : x.terms()) out.add(Key{k[0], k[2], k[1]}, v);
    return out;
}

Tensor skew_partial(const Tensor& x) {
    Tensor out(vector_form_signature(3), x.layout());
    for (const auto& [k, v] : x.terms()) out.add(Key{k[0], k[1], k[3], k[2]}, v);
    return out;
}

LinearMap partial_map(const AlgebraBasis& alg, Range covectors) {
    const IndexLayout l = IndexLayout::standard(alg.n);
    LinearMap map(form_gl_signature(1), vector_form_signature(2), l);
    for (int k = 0; k < l.tangent(); ++k) {
        if (!l.in_range(covectors, k)) continue;
        for (const auto& x : alg.matrices.generators()) {
            Tensor input = covector_times_gl(k, x);
            Tensor image = partial(input);
            map.add_column(std::move(input), std::move(image));
        }
    }
    return map;
}

SubspaceBasis etilde_subspace(int n) {
    const auto c = standard_forms(n);
    SubspaceBasis out(vector_form_signature(2), c.layout);
    for (int a = 0; a < 4 * n; ++a) out.add(act(eh_generator(c.layout, a), c.theta0));
    return out;
}

std::vector<Tensor> isotypic_split(const Casimir& c, const Tensor& x, const std::vector<Rational>& eigenvalues) {
    std::vector<Tensor> parts;
    Tensor total(x.signature(), x.layout());
    for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
        Tensor p = x;
        for (std::size_t j = 0; j < eigenvalues.size(); ++j) {
            if (i == j) continue;
            p = (Rational(1) / (eigenvalues[i] - eigenvalues[j])) * (c.apply(p) - eigenvalues[j] * p);
        }
        if (!(c.apply(p) == eigenvalues[i] * p))
            throw InvariantViolation("isotypic projection is not an eigenvector for eigenvalue " +
                                     to_string(eigenvalues[i]));
        total += p;
        parts.push_back(std::move(p));
    }
    if (!(total == x)) throw InvariantViolation("element has components outside the listed isotypes");
    return parts;
}

int curvature_grade(const Key& form, int form_degree, const IndexLayout& layout, bool eh_value) {
    return bigrade_of(form, form_degree, layout).second + (eh_value ? 1 : 0);
}

// ---------------------------------------------------------------------------
// ModelSpaces

ModelSpaces::ModelSpaces(int n) : n_(n), constants_(standard_forms(n)) {}

const ModelSpaces& ModelSpaces::get(int n) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<ModelSpaces>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<ModelSpaces>(n);
    return *slot;
}

const LinearMap& ModelSpaces::partial_of(AlgebraName name) const {
    return partials_[static_cast<std::size_t>(name)].get([&] { return partial_map(algebra(name)); });
}

const SubspaceBasis& ModelSpaces::image_of(AlgebraName name) const {
    return images_[static_cast<std::size_t>(name)].get([&] { return partial_of(name).image(); });
}

const TorsionSplit& ModelSpaces::torsion_split() const {
    return split_.get([&] {
        const IndexLayout l = layout();
        const int v = 4 * n_;
        TorsionSplit t;
        t.star = image_of(AlgebraName::B);

        t.q_part = SubspaceBasis(vector_form_signature(2), l);
        for (int a = 0; a < v; ++a)
            for (int b = a + 1; b < v; ++b)
                for (int s = 0; s < 3; ++s)
                    t.q_part.add(form_times_vector(form_pair(l, a, b), {{vertical_index(n_, s), Rational(1)}}));

        // Complement of sp(n) in so(4n) under the trace form.
        std::vector<std::pair<int, int>> so_basis;
        for (int i = 0; i < v; ++i)
            for (int j = i + 1; j < v; ++j) so_basis.emplace_back(i, j);
        Matrix eqs;
        for (const auto& y : algebra(AlgebraName::SpN).matrices.generators()) {
            std::vector<Rational> row(so_basis.size());
            for (std::size_t u = 0; u < so_basis.size(); ++u) {
                const auto [i, j] = so_basis[u];
                row[u] = y.coefficient(Key{j, i}) - y.coefficient(Key{i, j});
            }
            eqs.push_back(std::move(row));
        }
        std::vector<Tensor> perp;
        for (const auto& x : nullspace(eqs, static_cast<int>(so_basis.size()))) {
            Tensor a = gl_zero(l);
            for (std::size_t u = 0; u < so_basis.size(); ++u) {
                a.add(Key{so_basis[u].first, so_basis[u].second}, x[u]);
                a.add(Key{so_basis[u].second, so_basis[u].first}, -x[u]);
            }
            perp.push_back(std::move(a));
        }
        std::vector<Tensor> s2w;
        for (int s = 0; s < 3; ++s)
            for (int u = s + 1; u < 3; ++u)
                s2w.push_back(gl_unit(l, vertical_index(n_, s), vertical_index(n_, u)) +
                              gl_unit(l, vertical_index(n_, u), vertical_index(n_, s)));
        for (int s = 0; s < 2; ++s)
            s2w.push_back(gl_unit(l, vertical_index(n_, s), vertical_index(n_, s)) -
                          gl_unit(l, vertical_index(n_, s + 1), vertical_index(n_, s + 1)));

        t.w1 = SubspaceBasis(vector_form_signature(2), l);
        t.w2 = SubspaceBasis(vector_form_signature(2), l);
        for (int a = 0; a < v; ++a) {
            for (const auto& x : perp) t.w1.add(partial(covector_times_gl(a, x)));
            for (const auto& x : s2w) t.w2.add(partial(covector_times_gl(a, x)));
        }
        return t;
    });
}

const SubspaceBasis& ModelSpaces::etilde() const {
    return etilde_.get([&] { return etilde_subspace(n_); });
}

const CurvatureModules& ModelSpaces::curvature_modules() const {
    return curvature_.get([&] {
        const IndexLayout l = layout();
        const auto& k = algebra(AlgebraName::K);
        const auto eh = *k.part(AlgebraName::EH);
        const auto scalar = *k.part(AlgebraName::Scalar);

        std::array<LinearMap, 4> delta = {
            LinearMap(form_gl_signature(2), vector_form_signature(3), l),
            LinearMap(form_gl_signature(2), vector_form_signature(3), l),
            LinearMap(form_gl_signature(2), vector_form_signature(3), l),
            LinearMap(form_gl_signature(2), vector_form_signature(3), l)};
        for (int a = 0; a < l.tangent(); ++a)
            for (int b = a + 1; b < l.tangent(); ++b) {
                const Tensor f = form_pair(l, a, b);
                const auto& gens = k.matrices.generators();
                for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
                    const bool in_eh = g >= eh.offset && g < eh.offset + eh.count;
                    const int grade = curvature_grade(Key{a, b}, 2, l, in_eh);
                    Tensor input = form_times_gl(f, gens[g]);
                    Tensor image = skew_partial(input);
                    delta[grade].add_column(std::move(input), std::move(image));
                }
            }

        SubspaceBasis target(vector_form_signature(3), l);
        for (int c = 0; c < l.tangent(); ++c)
            for (const auto& xi : etilde().generators()) target.add(wedge(basis_form(l, {c}), xi));

        CurvatureModules m{delta, {}, {}, target};
        for (int g = 0; g < 4; ++g) {
            m.R[g] = delta[g].preimage(target);
            // Scalar component as a 2-form valued in the scalar line.
            LinearMap scalar_part(form_gl_signature(2), form_gl_signature(2), l);
            for (const auto& r : m.R[g].generators()) {
                Tensor s(form_gl_signature(2), l);
                std::map<Key, Tensor> by_form;
                for (const auto& [key, x] : r.terms())
                    by_form.try_emplace(key.slice(0, 2), gl_zero(l)).first->second.add(key.slice(2, 2), x);
                for (const auto& [form, value] : by_form) {
                    auto coords = k.matrices.coordinates(value);
                    if (!coords) throw InvariantViolation("curvature generator leaves k");
                    const Rational& c = (*coords)[scalar.offset];
                    if (!is_zero(c)) s.add(form.append(Key{0, 0}), c);
                }
                scalar_part.add_column(r, s);
            }
            m.tilde_R[g] = scalar_part.kernel();
        }
        return m;
    });
}

const Casimir& ModelSpaces::sp1_casimir() const {
    return sp1_casimir_.get([&] {
        const auto& g = algebra(AlgebraName::Sp1).matrices.generators();
        return Casimir(g, g);
    });
}

const Casimir& ModelSpaces::spn_casimir() const {
    return spn_casimir_
        .get([&] {
            const auto& x = algebra(AlgebraName::SpN).matrices.generators();
            const int m = static_cast<int>(x.size());
            Matrix gram(m, std::vector<Rational>(m));
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b) gram[a][b] = trace_pairing(x[a], x[b]);
            auto inv = inverse(gram);
            if (!inv) throw InvariantViolation("trace form is degenerate on sp(n)");
            std::vector<Tensor> y;
            for (int b = 0; b < m; ++b) {
                Tensor t = gl_zero(layout());
                for (int a = 0; a < m; ++a)
                    if (!is_zero((*inv)[a][b])) t += (*inv)[a][b] * x[a];
                y.push_back(std::move(t));
            }
            Casimir c(y, x);
            Tensor e0(single_vector_signature(), layout());
            e0.add(Key{0}, Rational(1));
            const Tensor ce0 = c.apply(e0);
            const Rational on_v = ce0.coefficient(Key{0});
            if (!(ce0 == on_v * e0)) throw InvariantViolation("sp(n) Casimir is not scalar on V");
            return std::pair{std::move(c), on_v};
        })
        .first;
}

Rational ModelSpaces::spn_casimir_eigenvalue(int lambda_pairing) const {
    spn_casimir();
    return spn_casimir_.value->second * Rational(lambda_pairing) / Rational(2 * n_ + 1);
}

const SubspaceBasis& ModelSpaces::es5h() const {
    return es5h_.get([&] {
        const IndexLayout l = layout();
        LinearMap shifted(vector_form_signature(2), vector_form_signature(2), l);
        for (int a = 0; a < 4 * n_; ++a)
            for (int s = 0; s < 3; ++s)
                for (int t = 0; t < 3; ++t) {
                    Tensor x = form_times_vector(form_pair(l, a, vertical_index(n_, s)),
                                                 {{vertical_index(n_, t), Rational(1)}});
                    Tensor y = sp1_casimir().apply(x) + Rational(35) * x;
                    shifted.add_column(std::move(x), std::move(y));
                }
        return shifted.kernel();
    });
}

const std::vector<Tensor>& ModelSpaces::spn_sp1_perp_v() const {
    return perp_v_.get([&] {
        const IndexLayout l = layout();
        const int v = 4 * n_;
        Matrix eqs;
        for (const auto& y : algebra(AlgebraName::SpnSp1).matrices.generators()) {
            std::vector<Rational> row(v * v);
            const Tensor block = gl_block(y, Range::Horizontal, Range::Horizontal);
            for (const auto& [k, c] : block.terms()) row[k[0] * v + k[1]] = c;
            eqs.push_back(std::move(row));
        }
        std::vector<Tensor> out;
        for (const auto& x : nullspace(eqs, v * v)) {
            Tensor a = gl_zero(l);
            for (int u = 0; u < v * v; ++u) a.add(Key{u / v, u % v}, x[u]);
            out.push_back(std::move(a));
        }
        return out;
    });
}

}  // namespace qcgeo
