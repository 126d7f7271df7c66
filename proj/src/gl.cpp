#include "qcgeo/gl.hpp"

namespace qcgeo {

Tensor gl_zero(IndexLayout layout) { return Tensor(gl_signature(), layout); }

Tensor gl_unit(IndexLayout layout, int row, int col, const Rational& c) {
    Tensor t = gl_zero(layout);
    t.add(Key{row, col}, c);
    return t;
}

Tensor identity_on(IndexLayout layout, Range block, const Rational& c) {
    Tensor t = gl_zero(layout);
    for (int i = 0; i < layout.tangent(); ++i)
        if (layout.in_range(block, i)) t.add(Key{i, i}, c);
    return t;
}

Tensor compose(const Tensor& a, const Tensor& b) {
    std::map<int, std::vector<std::pair<int, Rational>>> b_rows;
    for (const auto& [k, v] : b.terms()) b_rows[k[0]].emplace_back(k[1], v);
    Tensor out = gl_zero(a.layout());
    for (const auto& [k, v] : a.terms()) {
        auto it = b_rows.find(k[1]);
        if (it == b_rows.end()) continue;
        for (const auto& [col, w] : it->second) out.add(Key{k[0], col}, v * w);
    }
    return out;
}

Tensor bracket(const Tensor& a, const Tensor& b) { return compose(a, b) - compose(b, a); }

Rational trace(const Tensor& a) {
    Rational t = 0;
    for (const auto& [k, v] : a.terms())
        if (k[0] == k[1]) t += v;
    return t;
}

Tensor gl_block(const Tensor& a, Range rows, Range cols) {
    const auto& l = a.layout();
    return a.filter([&](const Key& k) { return l.in_range(rows, k[0]) && l.in_range(cols, k[1]); });
}

Tensor gl_from_2form(const Tensor& form2) {
    Tensor out = gl_zero(form2.layout());
    for (const auto& [k, v] : form2.terms()) {
        out.add(Key{k[1], k[0]}, v);
        out.add(Key{k[0], k[1]}, -v);
    }
    return out;
}

Tensor endomorphism(const Tensor& one_form, const VectorCoeffs& vec) {
    Tensor out = gl_zero(one_form.layout());
    for (const auto& [k, a] : one_form.terms())
        for (const auto& [j, b] : vec) out.add(Key{j, k[0]}, a * b);
    return out;
}

VectorCoeffs apply(const Tensor& a, const VectorCoeffs& v) {
    VectorCoeffs out;
    for (const auto& [k, c] : a.terms()) {
        auto it = v.find(k[1]);
        if (it == v.end()) continue;
        out[k[0]] += c * it->second;
    }
    for (auto it = out.begin(); it != out.end();) it = is_zero(it->second) ? out.erase(it) : std::next(it);
    return out;
}

Rational frobenius(const Tensor& a, const Tensor& b) {
    Rational s = 0;
    for (const auto& [k, v] : a.terms()) {
        auto it = b.terms().find(k);
        if (it != b.terms().end()) s += v * it->second;
    }
    return s;
}

Rational trace_pairing(const Tensor& a, const Tensor& b) { return trace(compose(a, b)); }

Matrix to_matrix(const Tensor& a, int offset, int size) {
    Matrix m(size, std::vector<Rational>(size));
    for (const auto& [k, v] : a.terms()) {
        const int r = k[0] - offset, c = k[1] - offset;
        if (r >= 0 && r < size && c >= 0 && c < size) m[r][c] = v;
    }
    return m;
}

Tensor from_matrix(IndexLayout layout, const Matrix& m, int offset) {
    Tensor out = gl_zero(layout);
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < m[r].size(); ++c)
            out.add(Key{static_cast<int>(r) + offset, static_cast<int>(c) + offset}, m[r][c]);
    return out;
}

VectorCoeffs as_vector(const Tensor& one_form) {
    VectorCoeffs v;
    for (const auto& [k, c] : one_form.terms()) v[k[0]] = c;
    return v;
}

Tensor as_one_form(IndexLayout layout, const VectorCoeffs& v) {
    Tensor t(Signature::form(1), layout);
    for (const auto& [i, c] : v) t.add(Key{i}, c);
    return t;
}

Tensor covector_times_gl(int k, const Tensor& a) {
    Tensor out(form_gl_signature(1), a.layout());
    for (const auto& [key, v] : a.terms()) out.add(Key{k, key[0], key[1]}, v);
    return out;
}

Tensor form_times_gl(const Tensor& form, const Tensor& a) {
    const int deg = form.signature().form_degree();
    Tensor out(form_gl_signature(deg), form.layout());
    for (const auto& [fk, fv] : form.terms())
        for (const auto& [key, v] : a.terms()) out.add(fk.append(key), fv * v);
    return out;
}

Tensor form_times_vector(const Tensor& form, const VectorCoeffs& vec) {
    const int deg = form.signature().form_degree();
    Tensor out(vector_form_signature(deg), form.layout());
    for (const auto& [fk, fv] : form.terms())
        for (const auto& [j, c] : vec) {
            Key k = fk;
            k.push(j);
            out.add(k, fv * c);
        }
    return out;
}

Tensor gl_component(const Tensor& one_form_gl, int k) {
    Tensor out = gl_zero(one_form_gl.layout());
    for (const auto& [key, v] : one_form_gl.terms())
        if (key[0] == k) out.add(Key{key[1], key[2]}, v);
    return out;
}

}  // namespace qcgeo
