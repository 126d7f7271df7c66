#include "qcgeo/linalg.hpp"

namespace qcgeo {

namespace {

void axpy(Tensor::Terms& v, const Key& k, const Rational& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = v.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (is_zero(it->second)) v.erase(it);
    }
}

void axpy(Combination& v, int k, const Rational& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = v.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (is_zero(it->second)) v.erase(it);
    }
}

Tensor from_terms(const Signature& sig, const IndexLayout& layout, const Tensor::Terms& terms) {
    Tensor t(sig, layout);
    for (const auto& [k, v] : terms) t.add(k, v);
    return t;
}

}  // namespace

// ---------------------------------------------------------------------------
// Echelon

void Echelon::eliminate(Tensor::Terms& v, Combination& used) const {
    auto it = v.begin();
    while (it != v.end()) {
        auto p = pivots_.find(it->first);
        if (p == pivots_.end()) {
            ++it;
            continue;
        }
        const Key key = it->first;
        const Rational c = it->second;
        const Row& row = rows_[p->second];
        for (const auto& [rk, rv] : row.vec) axpy(v, rk, -c * rv);
        for (const auto& [g, gv] : row.combo) axpy(used, g, c * gv);
        it = v.upper_bound(key);
    }
}

std::optional<Combination> Echelon::insert(const Tensor::Terms& v) {
    const int index = inserted_++;
    Tensor::Terms work = v;
    Combination used;
    eliminate(work, used);
    if (work.empty()) {
        Combination relation;
        relation[index] = Rational(1);
        for (const auto& [g, c] : used) axpy(relation, g, -c);
        return relation;
    }
    const Rational lead = work.begin()->second;
    Row row;
    for (auto& [k, c] : work) row.vec.emplace(k, c / lead);
    row.combo[index] = Rational(1) / lead;
    for (const auto& [g, c] : used) axpy(row.combo, g, -c / lead);
    pivots_.emplace(row.vec.begin()->first, static_cast<int>(rows_.size()));
    rows_.push_back(std::move(row));
    return std::nullopt;
}

bool Echelon::insert_if_independent(const Tensor::Terms& v) {
    Tensor::Terms work = v;
    Combination used;
    eliminate(work, used);
    if (work.empty()) return false;
    insert(v);
    return true;
}

Echelon::Reduction Echelon::reduce(const Tensor::Terms& v) const {
    Reduction r{v, {}};
    eliminate(r.residual, r.combination);
    return r;
}

// ---------------------------------------------------------------------------
// SubspaceBasis

SubspaceBasis SubspaceBasis::span(Signature ambient, IndexLayout layout, const std::vector<Tensor>& spanning) {
    SubspaceBasis s(std::move(ambient), layout);
    for (const auto& t : spanning) s.add(t);
    return s;
}

bool SubspaceBasis::add(const Tensor& t) {
    if (!(t.signature() == ambient_))
        throw StructuralError("subspace ambient " + ambient_.describe() + " does not accept " +
                              t.signature().describe());
    if (!echelon_.insert_if_independent(t.terms())) return false;
    gens_.push_back(t);
    return true;
}

bool SubspaceBasis::contains(const Tensor& t) const { return echelon_.contains(t.terms()); }

std::optional<std::vector<Rational>> SubspaceBasis::coordinates(const Tensor& t) const {
    auto r = echelon_.reduce(t.terms());
    if (!r.residual.empty()) return std::nullopt;
    std::vector<Rational> out(gens_.size());
    for (const auto& [g, c] : r.combination) out[g] = c;
    return out;
}

Tensor SubspaceBasis::residual(const Tensor& t) const {
    return from_terms(t.signature(), t.layout(), echelon_.reduce(t.terms()).residual);
}

Tensor SubspaceBasis::combine(const std::vector<Rational>& coords) const {
    Tensor out(ambient_, layout_);
    for (std::size_t i = 0; i < coords.size() && i < gens_.size(); ++i)
        if (!is_zero(coords[i])) out += coords[i] * gens_[i];
    return out;
}

SubspaceBasis sum(const SubspaceBasis& a, const SubspaceBasis& b) {
    SubspaceBasis s = a;
    for (const auto& g : b.generators()) s.add(g);
    return s;
}

SubspaceBasis intersection(const SubspaceBasis& a, const SubspaceBasis& b) {
    Echelon e;
    for (const auto& g : a.generators()) e.insert(g.terms());
    SubspaceBasis out(a.ambient(), a.layout());
    const int na = a.rank();
    for (const auto& g : b.generators()) {
        auto rel = e.insert(g.terms());
        if (!rel) continue;
        Tensor x(a.ambient(), a.layout());
        for (const auto& [i, c] : *rel)
            if (i < na) x += c * a.generators()[i];
        out.add(x);
    }
    return out;
}

// ---------------------------------------------------------------------------
// LinearMap

void LinearMap::add_column(Tensor domain_element, Tensor image) {
    if (!(image.signature() == codomain_))
        throw StructuralError("image signature " + image.signature().describe() + " does not match codomain " +
                              codomain_.describe());
    inputs_.push_back(std::move(domain_element));
    images_.push_back(std::move(image));
}

Tensor LinearMap::apply_coordinates(const Combination& x) const {
    Tensor out(codomain_, layout_);
    for (const auto& [i, c] : x) out += c * images_.at(i);
    return out;
}

Tensor LinearMap::domain_element(const Combination& x) const {
    Tensor out(domain_, layout_);
    for (const auto& [i, c] : x) out += c * inputs_.at(i);
    return out;
}

int LinearMap::rank() const {
    Echelon e;
    for (const auto& im : images_) e.insert(im.terms());
    return e.rank();
}

SubspaceBasis LinearMap::image() const { return SubspaceBasis::span(codomain_, layout_, images_); }

std::vector<Combination> LinearMap::kernel_coordinates() const {
    Echelon e;
    std::vector<Combination> ker;
    for (const auto& im : images_)
        if (auto rel = e.insert(im.terms())) ker.push_back(std::move(*rel));
    return ker;
}

SubspaceBasis LinearMap::kernel() const {
    SubspaceBasis k(domain_, layout_);
    for (const auto& c : kernel_coordinates()) k.add(domain_element(c));
    return k;
}

SubspaceBasis LinearMap::preimage(const SubspaceBasis& target) const {
    Echelon e;
    for (const auto& im : images_) e.insert(im.terms());
    SubspaceBasis out(domain_, layout_);
    for (const auto& c : kernel_coordinates()) out.add(domain_element(c));
    const int nd = domain_dim();
    for (const auto& g : target.generators()) {
        auto rel = e.insert(g.terms());
        if (!rel) continue;
        Combination x;
        for (const auto& [i, c] : *rel)
            if (i < nd) x[i] = c;
        out.add(domain_element(x));
    }
    return out;
}

SolveResult exact_solve(const LinearMap& map, const Tensor& target) {
    Echelon e;
    AffineSolutionSet sol;
    sol.kernel_basis = SubspaceBasis(map.domain(), map.layout());
    for (const auto& im : map.images())
        if (auto rel = e.insert(im.terms())) sol.kernel.push_back(std::move(*rel));
    auto r = e.reduce(target.terms());
    if (!r.residual.empty()) return Unsolvable{from_terms(target.signature(), target.layout(), r.residual)};
    sol.particular = std::move(r.combination);
    sol.particular_element = map.domain_element(sol.particular);
    for (const auto& k : sol.kernel) sol.kernel_basis.add(map.domain_element(k));
    return sol;
}

std::vector<Tensor> project_components(const Tensor& x, const std::vector<SubspaceBasis>& parts) {
    Echelon e;
    std::vector<std::pair<int, int>> owner;  // (part, generator)
    for (std::size_t p = 0; p < parts.size(); ++p) {
        for (std::size_t g = 0; g < parts[p].generators().size(); ++g) {
            if (e.insert(parts[p].generators()[g].terms()))
                throw StructuralError("subspaces in decomposition are not independent (part " +
                                      std::to_string(p) + ")");
            owner.emplace_back(static_cast<int>(p), static_cast<int>(g));
        }
    }
    auto r = e.reduce(x.terms());
    if (!r.residual.empty())
        throw StructuralError("element not in the span of the decomposition; residual " +
                              render(from_terms(x.signature(), x.layout(), r.residual)));
    std::vector<Tensor> out;
    out.assign(parts.size(), Tensor(x.signature(), x.layout()));
    for (const auto& [i, c] : r.combination) {
        auto [p, g] = owner[i];
        out[p] += c * parts[p].generators()[g];
    }
    return out;
}

int direct_sum_rank(const std::vector<SubspaceBasis>& parts, bool& independent) {
    Echelon e;
    independent = true;
    for (const auto& p : parts)
        for (const auto& g : p.generators())
            if (e.insert(g.terms())) independent = false;
    return e.rank();
}

std::vector<Key> enumerate_keys(const Signature& sig, const IndexLayout& layout) {
    std::vector<Key> keys{Key{}};
    for (const auto& g : sig.groups()) {
        std::vector<int> allowed;
        for (int i = 0; i < layout.ambient; ++i)
            if (layout.in_range(g.range, i)) allowed.push_back(i);
        std::vector<Key> next;
        for (const auto& base : keys) {
            // increasing index tuples of length g.degree
            std::vector<int> pos(g.degree);
            for (int p = 0; p < g.degree; ++p) pos[p] = p;
            const int m = static_cast<int>(allowed.size());
            if (g.degree > m) continue;
            while (true) {
                Key k = base;
                for (int p : pos) k.push(allowed[p]);
                next.push_back(k);
                int p = g.degree - 1;
                while (p >= 0 && pos[p] == m - g.degree + p) --p;
                if (p < 0) break;
                ++pos[p];
                for (int q = p + 1; q < g.degree; ++q) pos[q] = pos[q - 1] + 1;
            }
        }
        keys = std::move(next);
    }
    return keys;
}

// ---------------------------------------------------------------------------
// Dense helpers

Matrix identity_matrix(int size) {
    Matrix m(size, std::vector<Rational>(size));
    for (int i = 0; i < size; ++i) m[i][i] = 1;
    return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    const std::size_t r = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
    Matrix out(r, std::vector<Rational>(c));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (is_zero(a[i][l])) continue;
            for (std::size_t j = 0; j < c; ++j) out[i][j] += a[i][l] * b[l][j];
        }
    return out;
}

Matrix transpose(const Matrix& a) {
    if (a.empty()) return a;
    Matrix out(a[0].size(), std::vector<Rational>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) out[j][i] = a[i][j];
    return out;
}

std::optional<Matrix> inverse(const Matrix& a) {
    const int m = static_cast<int>(a.size());
    Matrix work = a;
    Matrix inv = identity_matrix(m);
    for (int col = 0; col < m; ++col) {
        int piv = -1;
        for (int r = col; r < m; ++r)
            if (!is_zero(work[r][col])) {
                piv = r;
                break;
            }
        if (piv < 0) return std::nullopt;
        std::swap(work[piv], work[col]);
        std::swap(inv[piv], inv[col]);
        const Rational p = work[col][col];
        for (int j = 0; j < m; ++j) {
            work[col][j] /= p;
            inv[col][j] /= p;
        }
        for (int r = 0; r < m; ++r) {
            if (r == col || is_zero(work[r][col])) continue;
            const Rational f = work[r][col];
            for (int j = 0; j < m; ++j) {
                work[r][j] -= f * work[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

Rational determinant(Matrix a) {
    const int m = static_cast<int>(a.size());
    Rational det = 1;
    for (int col = 0; col < m; ++col) {
        int piv = -1;
        for (int r = col; r < m; ++r)
            if (!is_zero(a[r][col])) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (int r = col + 1; r < m; ++r) {
            if (is_zero(a[r][col])) continue;
            const Rational f = a[r][col] / a[col][col];
            for (int j = col; j < m; ++j) a[r][j] -= f * a[col][j];
        }
    }
    return det;
}

bool is_symmetric(const Matrix& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (a[i][j] != a[j][i]) return false;
    return true;
}

bool is_positive_definite(const Matrix& a) {
    if (!is_symmetric(a)) return false;
    for (std::size_t k = 1; k <= a.size(); ++k) {
        Matrix minor(k, std::vector<Rational>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) minor[i][j] = a[i][j];
        if (determinant(minor) <= 0) return false;
    }
    return true;
}

bool operator_equal(const Matrix& a, const Matrix& b) { return a == b; }

std::vector<std::vector<Rational>> nullspace(const Matrix& m, int cols) {
    Matrix work = m;
    std::vector<int> pivot_col;
    int row = 0;
    const int rows = static_cast<int>(work.size());
    for (int col = 0; col < cols && row < rows; ++col) {
        int piv = -1;
        for (int r = row; r < rows; ++r)
            if (!is_zero(work[r][col])) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(work[piv], work[row]);
        const Rational p = work[row][col];
        for (int j = 0; j < cols; ++j) work[row][j] /= p;
        for (int r = 0; r < rows; ++r) {
            if (r == row || is_zero(work[r][col])) continue;
            const Rational f = work[r][col];
            for (int j = 0; j < cols; ++j) work[r][j] -= f * work[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> x(cols);
        x[free] = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = -work[r][free];
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b) {
    const int cols = a.empty() ? 0 : static_cast<int>(a[0].size());
    Matrix aug = a;
    for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(-b[r]);
    // A solution is a null vector of [a | −b] with last coordinate 1.
    for (const auto& x : nullspace(aug, cols + 1)) {
        if (is_zero(x[cols])) continue;
        std::vector<Rational> out(x.begin(), x.begin() + cols);
        for (auto& v : out) v /= x[cols];
        return out;
    }
    return std::nullopt;
}

}  // namespace qcgeo
