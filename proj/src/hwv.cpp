#include "qcgeo/hwv.hpp"

#include "qcgeo/gl.hpp"

#include <array>
#include <functional>
#include <stdexcept>

namespace qcgeo {

namespace {

using CVec = std::map<int, Gaussian>;

const Gaussian kI = Gaussian::i();

// Builders for one rank n; indices are 0-based, j runs over 0..n-1.
class Frame {
public:
    explicit Frame(int n) : n_(n), layout_(IndexLayout::standard(n)) {}

    int n() const { return n_; }
    IndexLayout layout() const { return layout_; }

    CVec vh2(int j) const { return {{4 * j, 1}, {4 * j + 1, -kI}}; }
    CVec vnh1(int j) const { return {{4 * j, -1}, {4 * j + 1, -kI}}; }
    CVec vh1(int j) const { return {{4 * j + 2, 1}, {4 * j + 3, -kI}}; }
    CVec vnh2(int j) const { return {{4 * j + 2, 1}, {4 * j + 3, kI}}; }
    /// w_s for s = 1, 2, 3.
    CVec w(int s) const { return {{4 * n_ + s - 1, 1}}; }
    CVec w_plus() const { return {{4 * n_ + 1, 1}, {4 * n_ + 2, kI}}; }

    ComplexTensor wedge2(const CVec& y, const CVec& z) const {
        ComplexTensor out(Signature::form(2), layout_);
        for (const auto& [a, ya] : y)
            for (const auto& [b, zb] : z) out.add(Key{a, b}, ya * zb);
        return out;
    }
    /// x ⊗ gl(f) for a covector x and a 2-form f.
    ComplexTensor cov_gl2(const CVec& x, const ComplexTensor& f) const {
        ComplexTensor out(form_gl_signature(1), layout_);
        for (const auto& [k, xc] : x)
            for (const auto& [ij, c] : f.terms()) {
                out.add(Key{k, ij[1], ij[0]}, xc * c);
                out.add(Key{k, ij[0], ij[1]}, -(xc * c));
            }
        return out;
    }
    /// y ⊗ z as an endomorphism v ↦ y(v) z.
    ComplexTensor endo(const CVec& y, const CVec& z) const {
        ComplexTensor out(gl_signature(), layout_);
        for (const auto& [i, b] : y)
            for (const auto& [j, c] : z) out.add(Key{j, i}, b * c);
        return out;
    }
    ComplexTensor cov_gl(const CVec& x, const ComplexTensor& a) const {
        ComplexTensor out(form_gl_signature(1), layout_);
        for (const auto& [k, xc] : x)
            for (const auto& [key, v] : a.terms()) out.add(Key{k, key[0], key[1]}, xc * v);
        return out;
    }
    /// x ∧ y ⊗ z in Λ²T*⊗T.
    ComplexTensor wedge_vec(const CVec& x, const CVec& y, const CVec& z) const {
        ComplexTensor out(vector_form_signature(2), layout_);
        for (const auto& [a, xa] : x)
            for (const auto& [b, yb] : y)
                for (const auto& [c, zc] : z) out.add(Key{a, b, c}, xa * yb * zc);
        return out;
    }
    ComplexTensor sum_j(const std::function<ComplexTensor(int)>& f) const {
        ComplexTensor out = f(0);
        for (int j = 1; j < n_; ++j) out += f(j);
        return out;
    }

private:
    int n_;
    IndexLayout layout_;
};

ComplexTensor scale(const Gaussian& c, ComplexTensor t) { return t *= c; }

ComplexTensor alpha1(const Frame& f) {
    const CVec v1h2 = f.vh2(0), v1h1 = f.vh1(0);
    return f.sum_j([&](int j) {
        return f.cov_gl2(v1h2, f.wedge2(f.vnh1(j), f.vh2(j)) + f.wedge2(f.vnh2(j), f.vh1(j))) +
               scale(2, f.cov_gl2(v1h1, f.wedge2(f.vh2(j), f.vnh2(j))));
    });
}

ComplexTensor alpha2(const Frame& f) {
    const CVec v1h2 = f.vh2(0), v1h1 = f.vh1(0);
    return f.sum_j([&](int j) {
        return f.cov_gl2(f.vnh2(j), f.wedge2(f.vh2(j), v1h1) + f.wedge2(v1h2, f.vh1(j))) -
               f.cov_gl2(f.vh2(j), f.wedge2(f.vnh2(j), v1h1) + f.wedge2(v1h2, f.vnh1(j)));
    });
}

ComplexTensor alpha3(const Frame& f) {
    const CVec v1h2 = f.vh2(0), v1h1 = f.vh1(0);
    return f.sum_j([&](int j) {
        return f.cov_gl2(f.vnh2(j), f.wedge2(v1h1, f.vh2(j)) + f.wedge2(v1h2, f.vh1(j))) -
               f.cov_gl2(f.vh2(j), f.wedge2(v1h1, f.vnh2(j)) + f.wedge2(v1h2, f.vnh1(j))) -
               scale(2, f.cov_gl2(f.vnh1(j), f.wedge2(v1h2, f.vh2(j)))) +
               scale(2, f.cov_gl2(f.vh1(j), f.wedge2(v1h2, f.vnh2(j))));
    });
}

ComplexTensor beta1(const Frame& f) {
    return f.sum_j([&](int j) { return f.cov_gl2(f.vh2(0), f.wedge2(f.vh2(j), f.vnh2(j))); });
}

ComplexTensor beta2(const Frame& f) {
    const CVec v1h2 = f.vh2(0);
    return f.sum_j([&](int j) {
        return f.cov_gl2(f.vh2(j), f.wedge2(v1h2, f.vnh2(j))) - f.cov_gl2(f.vnh2(j), f.wedge2(v1h2, f.vh2(j)));
    });
}

ComplexTensor alpha4(const Frame& f) {
    ComplexTensor out(vector_form_signature(2), f.layout());
    for (int s = 1; s <= 3; ++s) out += f.wedge_vec(f.vh2(0), f.w(s), f.w(s));
    return out;
}

ComplexTensor alpha5(const Frame& f) {
    const CVec v1h2 = f.vh2(0), v1h1 = f.vh1(0);
    return f.wedge_vec(v1h2, f.w(2), f.w(3)) - f.wedge_vec(v1h2, f.w(3), f.w(2)) +
           f.wedge_vec(v1h1, f.w(1), f.w_plus()) - f.wedge_vec(v1h1, f.w_plus(), f.w(1));
}

ComplexTensor beta3(const Frame& f) {
    const CVec v1h2 = f.vh2(0), v1h1 = f.vh1(0);
    return f.wedge_vec(v1h2, f.w(1), f.w_plus()) + f.wedge_vec(v1h2, f.w_plus(), f.w(1)) -
           scale(Gaussian(0, 2), f.wedge_vec(v1h1, f.w_plus(), f.w_plus()));
}

ComplexTensor beta4(const Frame& f) {
    const CVec v1h2 = f.vh2(0);
    return f.wedge_vec(v1h2, f.w(1), f.w_plus()) - f.wedge_vec(v1h2, f.w_plus(), f.w(1));
}

ComplexTensor complex_gl(const Tensor& a) { return complexify(a); }

ComplexTensor ker_k(const Frame& f) {
    const int n = f.n();
    const IndexLayout l = f.layout();
    ComplexTensor id_v2w = complex_gl(identity_on(l, Range::Horizontal) + identity_on(l, Range::Vertical, Rational(2)));
    std::array<ComplexTensor, 3> sp1 = {complex_gl(sp1_generator(l, 0)), complex_gl(sp1_generator(l, 1)),
                                        complex_gl(sp1_generator(l, 2))};
    (void)n;
    ComplexTensor out = f.sum_j([&](int j) {
        return f.cov_gl(f.vh2(j), f.endo(f.w_plus(), f.vnh1(j)) + scale(kI, f.endo(f.w(1), f.vnh2(j)))) -
               f.cov_gl(f.vnh2(j), f.endo(f.w_plus(), f.vh1(j)) + scale(kI, f.endo(f.w(1), f.vh2(j))));
    });
    out -= f.cov_gl(f.w_plus(), id_v2w);
    out += scale(kI, f.cov_gl(f.w(1), sp1[1] + scale(kI, sp1[2])));
    out -= scale(kI, f.cov_gl(f.w_plus(), sp1[0]));
    return out;
}

ComplexTensor complex_act(const ComplexTensor& a, const ComplexTensor& t) {
    return act(real_part(a), t) + scale(kI, act(imag_part(a), t));
}

// ξ·Θ₀ for ξ = (w² + i w³) ⊗ v₁h₁ + i w¹ ⊗ v₁h₂ ∈ EH.
ComplexTensor eh_action(const Frame& f) {
    const ComplexTensor xi = f.endo(f.w_plus(), f.vh1(0)) + scale(kI, f.endo(f.w(1), f.vh2(0)));
    return complex_act(xi, complexify(ModelSpaces::get(f.n()).constants().theta0));
}

// ξ·Θ₀ for ξ = (w² + i w³) ⊗ v₁h₂ ∈ ES³H.
ComplexTensor es3h_action(const Frame& f) {
    const ComplexTensor xi = f.endo(f.w_plus(), f.vh2(0));
    return complex_act(xi, complexify(ModelSpaces::get(f.n()).constants().theta0));
}

ComplexTensor gen_eh(const Frame& f) {
    return scale(Rational(1, 2), tilde(alpha1(f))) - alpha4(f) + scale(kI, alpha5(f));
}

// Σ_s ω_s ⊗ (w_s ⌟ t), then the gl trace: a complex 2-form.
ComplexTensor theta0_trace(const ComplexTensor& t, int n) {
    const auto& c = ModelSpaces::get(n).constants();
    ComplexTensor out(Signature::form(2), c.layout);
    for (int s = 0; s < 3; ++s) {
        Gaussian tr;
        for (const auto& [k, v] : t.terms())
            if (k[0] == vertical_index(n, s) && k[1] == k[2]) tr += v;
        if (is_zero(tr)) continue;
        for (const auto& [k, v] : c.omega[s].terms()) out.add(k, tr * Gaussian(v));
    }
    return out;
}

}  // namespace

const std::vector<std::string>& hwv_names() {
    static const std::vector<std::string> names = {"alpha1", "alpha2", "alpha3", "alpha4", "alpha5", "beta1",
                                                   "beta2",  "beta3",  "beta4",  "kerK",   "genEH"};
    return names;
}

ComplexTensor build_hwv(const std::string& name, int n) {
    if (n < 1) throw std::invalid_argument("rank must be positive");
    const Frame f(n);
    if (name == "alpha1") return alpha1(f);
    if (name == "alpha2") return alpha2(f);
    if (name == "alpha3") return n == 1 ? alpha1(f) : alpha3(f);
    if (name == "alpha4") return alpha4(f);
    if (name == "alpha5") return alpha5(f);
    if (name == "beta1") return beta1(f);
    if (name == "beta2") return n == 1 ? beta1(f) : beta2(f);
    if (name == "beta3") return beta3(f);
    if (name == "beta4") return beta4(f);
    if (name == "kerK") return ker_k(f);
    if (name == "genEH") return gen_eh(f);
    throw std::invalid_argument("unknown highest weight vector '" + name + "'");
}

ComplexTensor tilde(const ComplexTensor& x) {
    if (!(x.signature() == form_gl_signature(1))) throw StructuralError("tilde expects an element of T*⊗gl");
    ComplexTensor out(vector_form_signature(2), x.layout());
    for (const auto& [k, v] : x.terms()) {
        // x ⊗ gl(e^{ij}) stores +1 at (k, j, i) and −1 at (k, i, j).
        if (x.coefficient(Key{k[0], k[2], k[1]}) != -v) throw StructuralError("tilde expects skew values");
        if (k[2] < k[1]) out.add(Key{k[2], k[1], k[0]}, v);
    }
    return out;
}

ComplexTensor complex_partial(const ComplexTensor& x) {
    return complexify(partial(real_part(x))) + scale(kI, complexify(partial(imag_part(x))));
}

bool membership_mod_image(const ComplexTensor& x, AlgebraName algebra, int n) {
    const auto& image = ModelSpaces::get(n).image_of(algebra);
    return image.contains(real_part(x)) && image.contains(imag_part(x));
}

std::vector<HwvCheck> verify_hwv_catalog(int n) {
    const Frame f(n);
    auto get = [&](const char* name) { return build_hwv(name, n); };
    const ComplexTensor a1 = get("alpha1"), a2 = get("alpha2"), a3 = get("alpha3");
    const ComplexTensor b1 = get("beta1"), b2 = get("beta2");
    const ComplexTensor a4 = get("alpha4"), a5 = get("alpha5"), b3 = get("beta3"), b4 = get("beta4");
    const ComplexTensor ta1 = tilde(a1), ta2 = tilde(a2), ta3 = tilde(a3), tb1 = tilde(b1), tb2 = tilde(b2);
    const ComplexTensor k = get("kerK");
    const Rational half(1, 2), three_halves(3, 2);

    std::vector<HwvCheck> out;
    auto identity = [&](std::string id, ComplexTensor residual) {
        out.push_back({std::move(id), std::move(residual), true, true});
    };
    auto member = [&](std::string id, const ComplexTensor& x, AlgebraName alg, bool expected) {
        const bool observed = membership_mod_image(x, alg, n);
        out.push_back({std::move(id), ComplexTensor(x.signature(), x.layout()), expected, observed});
    };

    identity("∂α₁ = ½α̃₃ − 3/2 α̃₂", complex_partial(a1) - scale(half, ta3) + scale(three_halves, ta2));
    identity("∂α₂ = −α̃₁ − ½α̃₃ + ½α̃₂", complex_partial(a2) + ta1 + scale(half, ta3) - scale(half, ta2));
    if (n > 1)
        identity("∂α₃ = α̃₁ − ½α̃₃ − 3/2 α̃₂", complex_partial(a3) - ta1 + scale(half, ta3) + scale(three_halves, ta2));
    identity("∂β₁ = −β̃₂", complex_partial(b1) + tb2);
    if (n > 1) identity("∂β₂ = β̃₂ − 2β̃₁", complex_partial(b2) - tb2 + scale(2, tb1));
    identity("∂_K(kerK) = 0", complex_partial(k));
    {
        // Each covector slice of kerK must be a complex element of k.
        const auto& k_alg = ModelSpaces::get(n).algebra(AlgebraName::K);
        const int dim = f.layout().tangent();
        bool inside = true;
        for (int c = 0; c < dim && inside; ++c) {
            ComplexTensor slice(gl_signature(), f.layout());
            for (const auto& [key, v] : k.terms())
                if (key[0] == c) slice.add(Key{key[1], key[2]}, v);
            inside = k_alg.contains(real_part(slice)) && k_alg.contains(imag_part(slice));
        }
        out.push_back({"kerK takes values in k", ComplexTensor(k.signature(), k.layout()), true, inside});
    }
    {
        // tr(Θ₀⌟kerK) = −(4n + 6)(ω₂ + iω₃): nonzero, so ker ∂_K meets the normalization.
        const auto& c = ModelSpaces::get(n).constants();
        const ComplexTensor target =
            scale(Rational(-(4 * n + 6)), complexify(c.omega[1]) + scale(kI, complexify(c.omega[2])));
        identity("tr(Θ₀⌟kerK) = −(4n+6)(ω₂ + iω₃)", theta0_trace(k, n) - target);
    }
    identity("ξ·Θ₀ = ½α̃₁ − α₄ + iα₅ for ξ ∈ EH", eh_action(f) - gen_eh(f));
    identity("ξ·Θ₀ = β̃₁ + i/2 β₃ − i/2 β₄ for ξ ∈ ES³H",
             es3h_action(f) - (tb1 + scale(Gaussian(0, half), b3) - scale(Gaussian(0, half), b4)));

    const AlgebraName B = AlgebraName::B;
    member("∂α₂ ∈ im ∂_B", complex_partial(a2), B, true);
    member("α̃₂ + α̃₃ + 8α₄ ∈ im ∂_B", ta2 + ta3 + scale(8, a4), B, true);
    member("8iα₅ − α̃₃ + 3α̃₂ ∈ im ∂_B", scale(Gaussian(0, 8), a5) - ta3 + scale(3, ta2), B, true);
    member("β̃₂ + 2iβ₄ ∈ im ∂_B", tb2 + scale(Gaussian(0, 2), b4), B, true);
    member("2α̃₁ + α̃₃ − α̃₂ ∈ im ∂_B", scale(2, ta1) + ta3 - ta2, B, true);

    const ComplexTensor p = ta1 - ta3, q = ta1 - scale(3, ta2);
    auto frac = [](long a, long b) { return make_rational(a, b); };
    member("α̃₁ ≡ 3/8(α̃₁−α̃₃) − 1/8(α̃₁−3α̃₂)", ta1 - scale(frac(3, 8), p) + scale(frac(1, 8), q), B, true);
    member("α̃₂ ≡ 1/8(α̃₁−α̃₃) − 3/8(α̃₁−3α̃₂)", ta2 - scale(frac(1, 8), p) + scale(frac(3, 8), q), B, true);
    member("α̃₃ ≡ −5/8(α̃₁−α̃₃) − 1/8(α̃₁−3α̃₂)", ta3 + scale(frac(5, 8), p) + scale(frac(1, 8), q), B, true);
    member("α₄ ≡ 1/16(α̃₁−α̃₃) + 1/16(α̃₁−3α̃₂)", a4 - scale(frac(1, 16), p) - scale(frac(1, 16), q), B, true);
    member("α₅ ≡ i/8(α̃₁−α̃₃) − i/8(α̃₁−3α̃₂)",
           a5 - scale(Gaussian(0, frac(1, 8)), p) + scale(Gaussian(0, frac(1, 8)), q), B, true);
    member("½α̃₁ − α₄ + iα₅ ∈ im ∂_B", gen_eh(f), B, true);
    member("½α̃₁ − α₄ + iα₅ ∉ im ∂_g", gen_eh(f), AlgebraName::G, false);
    member("−i/2 β₄ ≡ 1/4 β̃₂", scale(Gaussian(0, -half), b4) - scale(frac(1, 4), tb2), B, true);
    member("β̃₁ ∉ im ∂_B", tb1, B, false);
    if (n > 1) member("α̃₁ − α̃₃ ∉ im ∂_B", p, B, false);
    member("α̃₁ − 3α̃₂ ∉ im ∂_B", q, B, false);
    return out;
}

}  // namespace qcgeo
