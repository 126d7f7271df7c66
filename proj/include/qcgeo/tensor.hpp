#pragma once

#include "qcgeo/scalar.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qcgeo {

class StructuralError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

enum class Variance : std::uint8_t { Vector, Covector };

/// Which block of indices a slot may carry. `Ambient` admits every coframe
/// index of the model, including isotropy directions of a homogeneous model.
enum class Range : std::uint8_t { Ambient, Full, Horizontal, Vertical };

/// One group of slots. A group of degree k > 1 is alternating; its indices are
/// stored strictly increasing.
struct SlotGroup {
    Variance variance = Variance::Covector;
    int degree = 1;
    Range range = Range::Full;
    friend bool operator==(const SlotGroup&, const SlotGroup&) = default;
};

class Signature {
public:
    Signature() = default;
    Signature(std::initializer_list<SlotGroup> groups) : groups_(groups) {}

    static Signature form(int degree, Range range = Range::Ambient) {
        return Signature{{Variance::Covector, degree, range}};
    }

    Signature then(SlotGroup g) const {
        Signature s = *this;
        s.groups_.push_back(g);
        return s;
    }
    Signature then_vector(Range r = Range::Full) const { return then({Variance::Vector, 1, r}); }
    Signature then_covector(Range r = Range::Full) const { return then({Variance::Covector, 1, r}); }

    const std::vector<SlotGroup>& groups() const { return groups_; }
    int arity() const {
        int a = 0;
        for (const auto& g : groups_) a += g.degree;
        return a;
    }
    /// Degree of the leading form group, 0 if the tensor has no leading covector group.
    int form_degree() const {
        return groups_.empty() || groups_.front().variance != Variance::Covector ? 0 : groups_.front().degree;
    }
    /// The signature with the leading group removed.
    Signature values() const {
        Signature s;
        if (!groups_.empty()) s.groups_.assign(groups_.begin() + 1, groups_.end());
        return s;
    }
    Signature with_form_degree(int k) const {
        Signature s = *this;
        if (s.groups_.empty()) throw StructuralError("signature has no form group");
        s.groups_.front().degree = k;
        return s;
    }
    Signature concat(const Signature& other) const {
        Signature s = *this;
        s.groups_.insert(s.groups_.end(), other.groups_.begin(), other.groups_.end());
        return s;
    }
    std::string describe() const;

    friend bool operator==(const Signature&, const Signature&) = default;

private:
    std::vector<SlotGroup> groups_;
};

/// Fixed-capacity multi-index; no heap allocation.
struct Key {
    static constexpr int kCapacity = 14;
    std::array<std::uint8_t, kCapacity> idx{};
    std::uint8_t size = 0;

    Key() = default;
    Key(std::initializer_list<int> list) {
        for (int i : list) push(i);
    }
    void push(int i) {
        if (size >= kCapacity) throw StructuralError("tensor arity exceeds key capacity");
        idx[size++] = static_cast<std::uint8_t>(i);
    }
    int operator[](int p) const { return idx[p]; }
    std::uint8_t& at(int p) { return idx[p]; }
    friend bool operator<(const Key& a, const Key& b) {
        return std::lexicographical_compare(a.idx.begin(), a.idx.begin() + a.size, b.idx.begin(),
                                            b.idx.begin() + b.size);
    }
    friend bool operator==(const Key& a, const Key& b) {
        return a.size == b.size && std::equal(a.idx.begin(), a.idx.begin() + a.size, b.idx.begin());
    }
    Key slice(int from, int count) const {
        Key k;
        for (int p = 0; p < count; ++p) k.push(idx[from + p]);
        return k;
    }
    Key append(const Key& other) const {
        Key k = *this;
        for (int p = 0; p < other.size; ++p) k.push(other.idx[p]);
        return k;
    }
};

struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
        std::size_t h = k.size;
        for (int p = 0; p < k.size; ++p) h = h * 131 + k.idx[p] + 1;
        return h;
    }
};

/// Sorts `k[from, from+count)` in place; returns the permutation sign, or 0 on a repeated index.
inline int sort_alternating(Key& k, int from, int count) {
    int sign = 1;
    for (int a = 1; a < count; ++a) {
        for (int b = a; b > 0; --b) {
            auto& lo = k.idx[from + b - 1];
            auto& hi = k.idx[from + b];
            if (lo == hi) return 0;
            if (lo < hi) break;
            std::swap(lo, hi);
            sign = -sign;
        }
    }
    for (int a = 1; a < count; ++a)
        if (k.idx[from + a - 1] == k.idx[from + a]) return 0;
    return sign;
}

/// Index layout of a model: 4n horizontal, 3 vertical, then optional isotropy directions.
struct IndexLayout {
    int n = 1;
    int ambient = 7;  // total number of coframe indices

    int horizontal() const { return 4 * n; }
    int tangent() const { return 4 * n + 3; }
    bool is_horizontal(int i) const { return i < 4 * n; }
    bool is_vertical(int i) const { return i >= 4 * n && i < 4 * n + 3; }
    bool in_range(Range r, int i) const {
        switch (r) {
            case Range::Ambient: return i >= 0 && i < ambient;
            case Range::Full: return i >= 0 && i < tangent();
            case Range::Horizontal: return i >= 0 && i < horizontal();
            case Range::Vertical: return is_vertical(i);
        }
        return false;
    }
    friend bool operator==(const IndexLayout&, const IndexLayout&) = default;
    static IndexLayout standard(int n) { return {n, 4 * n + 3}; }
};

/// Sparse exact multilinear element; zero coefficients are never stored and
/// alternating groups are kept in canonical (increasing) order.
template <class S>
class BasicTensor {
public:
    using Scalar = S;
    using Terms = std::map<Key, S>;

    BasicTensor() = default;
    BasicTensor(Signature sig, IndexLayout layout) : sig_(std::move(sig)), layout_(layout) {}

    const Signature& signature() const { return sig_; }
    const IndexLayout& layout() const { return layout_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Adds c times the basis element with (possibly unsorted) key `raw`.
    void add(Key raw, const S& c) {
        if (qcgeo::is_zero(c)) return;
        if (raw.size != sig_.arity())
            throw StructuralError("key arity " + std::to_string(raw.size) + " does not match " + sig_.describe());
        int sign = 1;
        int pos = 0;
        for (const auto& g : sig_.groups()) {
            for (int p = 0; p < g.degree; ++p)
                if (!layout_.in_range(g.range, raw[pos + p]))
                    throw StructuralError("index " + std::to_string(raw[pos + p] + 1) + " outside slot range in " +
                                          sig_.describe());
            if (g.degree > 1) {
                int s = sort_alternating(raw, pos, g.degree);
                if (s == 0) return;
                sign *= s;
            }
            pos += g.degree;
        }
        accumulate(raw, sign > 0 ? c : S(-c));
    }

    S coefficient(Key raw) const {
        int sign = 1;
        int pos = 0;
        for (const auto& g : sig_.groups()) {
            if (g.degree > 1) {
                int s = sort_alternating(raw, pos, g.degree);
                if (s == 0) return S();
                sign *= s;
            }
            pos += g.degree;
        }
        auto it = terms_.find(raw);
        if (it == terms_.end()) return S();
        return sign > 0 ? it->second : S(-it->second);
    }

    BasicTensor& operator+=(const BasicTensor& o) {
        check_compatible(o);
        for (const auto& [k, v] : o.terms_) accumulate(k, v);
        return *this;
    }
    BasicTensor& operator-=(const BasicTensor& o) {
        check_compatible(o);
        for (const auto& [k, v] : o.terms_) accumulate(k, S(-v));
        return *this;
    }
    BasicTensor& operator*=(const S& c) {
        if (qcgeo::is_zero(c)) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, v] : terms_) v = v * c;
        return *this;
    }
    friend BasicTensor operator+(BasicTensor a, const BasicTensor& b) { return a += b; }
    friend BasicTensor operator-(BasicTensor a, const BasicTensor& b) { return a -= b; }
    friend BasicTensor operator-(BasicTensor a) { return a *= S(-1); }
    friend BasicTensor operator*(const S& c, BasicTensor a) { return a *= c; }
    friend bool operator==(const BasicTensor& a, const BasicTensor& b) {
        return a.sig_ == b.sig_ && a.terms_ == b.terms_;
    }

    /// Keeps the terms whose key satisfies `pred`.
    template <class Pred>
    BasicTensor filter(Pred pred) const {
        BasicTensor out(sig_, layout_);
        for (const auto& [k, v] : terms_)
            if (pred(k)) out.terms_.emplace(k, v);
        return out;
    }

    /// Same coefficients reinterpreted under a new layout (e.g. dropping isotropy directions).
    BasicTensor relayout(IndexLayout layout) const {
        BasicTensor out(sig_, layout);
        for (const auto& [k, v] : terms_) out.add(k, v);
        return out;
    }

    void check_compatible(const BasicTensor& o) const {
        if (!(sig_ == o.sig_))
            throw StructuralError("slot mismatch: " + sig_.describe() + " vs " + o.sig_.describe());
    }

private:
    void accumulate(const Key& k, const S& c) {
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (qcgeo::is_zero(it->second)) terms_.erase(it);
        }
    }

    Signature sig_;
    IndexLayout layout_;
    Terms terms_;
};

using Tensor = BasicTensor<Rational>;
using ComplexTensor = BasicTensor<Gaussian>;

inline std::string Signature::describe() const {
    std::string s = "[";
    bool first = true;
    for (const auto& g : groups_) {
        if (!first) s += ",";
        first = false;
        s += g.variance == Variance::Covector ? "T*" : "T";
        switch (g.range) {
            case Range::Horizontal: s += "(V)"; break;
            case Range::Vertical: s += "(W)"; break;
            case Range::Ambient: s += "(G)"; break;
            case Range::Full: break;
        }
        if (g.degree > 1) s += "^" + std::to_string(g.degree);
    }
    return s + "]";
}

// ---------------------------------------------------------------------------
// Forms and the basic exterior-algebra operations.

/// Basis form e^{i1...ik}, 0-based indices.
template <class S = Rational>
BasicTensor<S> basis_form(IndexLayout layout, std::initializer_list<int> idx) {
    BasicTensor<S> t(Signature::form(static_cast<int>(idx.size())), layout);
    t.add(Key(idx), S(1));
    return t;
}

template <class S = Rational>
BasicTensor<S> zero_form(IndexLayout layout, int degree) {
    return BasicTensor<S>(Signature::form(degree), layout);
}

/// Wedge of the leading form groups; value slots of `a` precede those of `b`.
template <class S>
BasicTensor<S> wedge(const BasicTensor<S>& a, const BasicTensor<S>& b) {
    if (!(a.layout() == b.layout())) throw StructuralError("wedge across different models");
    const int p = a.signature().form_degree();
    const int q = b.signature().form_degree();
    if ((p == 0 && !a.signature().groups().empty()) || (q == 0 && !b.signature().groups().empty()))
        throw StructuralError("wedge needs leading form groups: " + a.signature().describe() + " and " +
                              b.signature().describe());
    Signature sig = Signature::form(p + q).concat(a.signature().values()).concat(b.signature().values());
    BasicTensor<S> out(sig, a.layout());
    const int av = a.signature().arity() - p;
    for (const auto& [ka, va] : a.terms()) {
        for (const auto& [kb, vb] : b.terms()) {
            Key k = ka.slice(0, p).append(kb.slice(0, q)).append(ka.slice(p, av)).append(kb.slice(q, kb.size - q));
            out.add(k, va * vb);
        }
    }
    return out;
}

/// Contraction of a vector (index -> coefficient) into the first slot of the form group.
template <class S>
BasicTensor<S> interior(const std::map<int, S>& vec, const BasicTensor<S>& a) {
    const int p = a.signature().form_degree();
    if (p == 0) return BasicTensor<S>(a.signature(), a.layout());
    BasicTensor<S> out(a.signature().with_form_degree(p - 1), a.layout());
    for (const auto& [k, v] : a.terms()) {
        for (int pos = 0; pos < p; ++pos) {
            auto it = vec.find(k[pos]);
            if (it == vec.end()) continue;
            Key rest;
            for (int q = 0; q < k.size; ++q)
                if (q != pos) rest.push(k[q]);
            S c = v * it->second;
            out.add(rest, pos % 2 == 0 ? c : S(-c));
        }
    }
    return out;
}

template <class S>
BasicTensor<S> interior(int basis_vector, const BasicTensor<S>& a) {
    return interior(std::map<int, S>{{basis_vector, S(1)}}, a);
}

/// Bigrade (p, q) of a form key: p horizontal indices, q vertical ones among the
/// first `degree` entries. Isotropy indices are counted in neither.
inline std::pair<int, int> bigrade_of(const Key& k, int degree, const IndexLayout& layout) {
    int p = 0, q = 0;
    for (int pos = 0; pos < degree; ++pos) {
        if (layout.is_horizontal(k[pos])) ++p;
        else if (layout.is_vertical(k[pos])) ++q;
    }
    return {p, q};
}

template <class S>
std::map<std::pair<int, int>, BasicTensor<S>> bigrade_split(const BasicTensor<S>& a) {
    std::map<std::pair<int, int>, BasicTensor<S>> parts;
    const int deg = a.signature().form_degree();
    for (const auto& [k, v] : a.terms()) {
        auto pq = bigrade_of(k, deg, a.layout());
        auto it = parts.try_emplace(pq, a.signature(), a.layout()).first;
        it->second.add(k, v);
    }
    return parts;
}

template <class S>
BasicTensor<S> bigrade_part(const BasicTensor<S>& a, int p, int q) {
    const int deg = a.signature().form_degree();
    return a.filter([&](const Key& k) { return bigrade_of(k, deg, a.layout()) == std::pair{p, q}; });
}

/// Drops every term whose form indices touch an isotropy direction.
template <class S>
BasicTensor<S> restrict_to_tangent(const BasicTensor<S>& a) {
    const int deg = a.signature().form_degree();
    const int tan = a.layout().tangent();
    return a.filter([&](const Key& k) {
        for (int p = 0; p < deg; ++p)
            if (k[p] >= tan) return false;
        return true;
    });
}

/// Real and imaginary parts of a complex tensor.
inline Tensor real_part(const ComplexTensor& z) {
    Tensor t(z.signature(), z.layout());
    for (const auto& [k, v] : z.terms()) t.add(k, v.re);
    return t;
}
inline Tensor imag_part(const ComplexTensor& z) {
    Tensor t(z.signature(), z.layout());
    for (const auto& [k, v] : z.terms()) t.add(k, v.im);
    return t;
}
inline ComplexTensor complexify(const Tensor& t) {
    ComplexTensor z(t.signature(), t.layout());
    for (const auto& [k, v] : t.terms()) z.add(k, Gaussian(v));
    return z;
}

/// Human-readable rendering with 1-based indices, e.g. "1/2 e^{1,5}⊗e_2".
template <class S>
std::string render(const BasicTensor<S>& t) {
    if (t.is_zero()) return "0";
    std::string out;
    for (const auto& [k, v] : t.terms()) {
        if (!out.empty()) out += " + ";
        out += "(" + to_string(v) + ")";
        int pos = 0;
        for (const auto& g : t.signature().groups()) {
            out += g.variance == Variance::Covector ? " e^{" : " e_{";
            for (int p = 0; p < g.degree; ++p) out += (p ? "," : "") + std::to_string(k[pos + p] + 1);
            out += "}";
            pos += g.degree;
        }
    }
    return out;
}

}  // namespace qcgeo
