#include "qcgeo/rep_dims.hpp"

#include "qcgeo/model_spaces.hpp"

#include <gmpxx.h>

#include <charconv>
#include <stdexcept>

namespace qcgeo {

std::int64_t weyl_dim(const HighestWeight& w) {
    if (w.n < 1) throw std::invalid_argument("rank must be positive");
    if (w.sp1_degree < 0) throw std::invalid_argument("negative Sp(1) degree");
    int nonzero = 0;
    for (std::size_t i = 0; i < w.coefficients.size(); ++i) {
        if (w.coefficients[i] < 0) throw std::invalid_argument("negative weight coefficient");
        if (i > 0 && w.coefficients[i] > w.coefficients[i - 1])
            throw std::invalid_argument("weight coefficients must be non-increasing");
        if (w.coefficients[i] > 0) ++nonzero;
    }
    if (nonzero > w.n) return 0;

    // λ + ρ and ρ with ρ = (n, n−1, …, 1); positive roots L_i ± L_j (i < j) and 2L_i.
    std::vector<mpz_class> m(w.n), rho(w.n);
    for (int i = 0; i < w.n; ++i) {
        rho[i] = w.n - i;
        m[i] = rho[i] + (i < static_cast<int>(w.coefficients.size()) ? w.coefficients[i] : 0);
    }
    mpq_class dim = 1;
    for (int i = 0; i < w.n; ++i) {
        dim *= mpq_class(m[i], rho[i]);
        for (int j = i + 1; j < w.n; ++j)
            dim *= mpq_class((m[i] - m[j]) * (m[i] + m[j]), (rho[i] - rho[j]) * (rho[i] + rho[j]));
    }
    dim.canonicalize();
    dim *= w.sp1_degree + 1;
    if (dim.get_den() != 1) throw std::logic_error("Weyl product is not an integer");
    return dim.get_num().get_si();
}

std::vector<int> parse_weight_list(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view item(text.data() + pos, (comma == std::string::npos ? text.size() : comma) - pos);
        int value = 0;
        auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (ec != std::errc() || end != item.data() + item.size() || item.empty())
            throw std::invalid_argument("malformed weight entry '" + std::string(item) + "'");
        out.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    // Trailing zeros are the same weight.
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

namespace {

std::int64_t dim_of(int n, const Summand& s) {
    return s.multiplicity * weyl_dim(HighestWeight{n, s.weight, s.sp1_degree});
}

std::int64_t binomial(std::int64_t a, std::int64_t b) {
    if (b < 0 || b > a) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r.get_si();
}

std::int64_t e_dim(int n) { return 2 * n; }
std::int64_t s2e_dim(int n) { return weyl_dim({n, {2}, 0}); }
std::int64_t l20e_dim(int n) { return weyl_dim({n, {1, 1}, 0}); }

std::vector<IdentitySpec> make_catalog() {
    std::vector<IdentitySpec> c;
    c.push_back({"S2E⊗E", "S²E⊗E = S³E + E + V₂₁", false, 1,
                 [](int n, int) { return s2e_dim(n) * e_dim(n); },
                 [](int, int) { return std::vector<Summand>{{{3}}, {{1}}, {{2, 1}}}; }});
    c.push_back({"Λ²₀E⊗E", "Λ²₀E⊗E = Λ³₀E + E + V₂₁", false, 1,
                 [](int n, int) { return l20e_dim(n) * e_dim(n); },
                 [](int, int) { return std::vector<Summand>{{{1, 1, 1}}, {{1}}, {{2, 1}}}; }});
    c.push_back({"Λ³(EH)", "Λ³(EH) = Λ³₀E S³H + V₂₁H + E(S³H + H) for n > 1, EH for n = 1", false, 1,
                 [](int n, int) { return binomial(4 * n, 3); },
                 [](int n, int) {
                     if (n == 1) return std::vector<Summand>{{{1}, 1}};
                     return std::vector<Summand>{{{1, 1, 1}, 3}, {{2, 1}, 1}, {{1}, 3}, {{1}, 1}};
                 }});
    c.push_back({"Λ²₀E⊗S²E", "Λ²₀E⊗S²E = V₃₁ + V₂₁₁ + Λ²₀E + S²E", false, 1,
                 [](int n, int) { return l20e_dim(n) * s2e_dim(n); },
                 [](int, int) { return std::vector<Summand>{{{3, 1}}, {{2, 1, 1}}, {{1, 1}}, {{2}}}; }});
    c.push_back({"S2E⊗S2E", "S²E⊗S²E = S⁴E + V₃₁ + V₂₂ + S²E + Λ²₀E + ℝ", false, 1,
                 [](int n, int) { return s2e_dim(n) * s2e_dim(n); },
                 [](int, int) { return std::vector<Summand>{{{4}}, {{3, 1}}, {{2, 2}}, {{2}}, {{1, 1}}, {{}}}; }});
    c.push_back({"V211 closed form", "dim V₂₁₁ = ½(n+1)(2n+1)(2n−1)(n−2)", false, 1,
                 [](int n, int) { return std::int64_t(n + 1) * (2 * n + 1) * (2 * n - 1) * (n - 2) / 2; },
                 [](int, int) { return std::vector<Summand>{{{2, 1, 1}}}; }});
    c.push_back({"V_{l,1} closed form", "dim V_{l,1} = l(2n−2)/(l+2n−1) · C(l+2n, l+1)", true, 1,
                 [](int n, int l) {
                     mpq_class v(mpz_class(std::int64_t(l) * (2 * n - 2)), mpz_class(l + 2 * n - 1));
                     v *= mpz_class(binomial(l + 2 * n, l + 1));
                     v.canonicalize();
                     if (v.get_den() != 1) throw std::logic_error("closed form is not an integer");
                     return std::int64_t(v.get_num().get_si());
                 },
                 [](int, int l) { return std::vector<Summand>{{{l, 1}}}; }});
    c.push_back({"V_{l,2} closed form", "dim V_{l,2} = (l²+2ln−2n−1)/2 · C(l+2n−2, l+1)", true, 2,
                 [](int n, int l) {
                     mpq_class v(mpz_class(std::int64_t(l) * l + 2 * l * n - 2 * n - 1), mpz_class(2));
                     v *= mpz_class(binomial(l + 2 * n - 2, l + 1));
                     v.canonicalize();
                     if (v.get_den() != 1) throw std::logic_error("closed form is not an integer");
                     return std::int64_t(v.get_num().get_si());
                 },
                 [](int, int l) { return std::vector<Summand>{{{l, 2}}}; }});
    c.push_back({"V*⊗S²₀W", "V*⊗S²₀W = ES³H + ES⁵H", false, 1,
                 [](int n, int) { return std::int64_t(4 * n) * 5; },
                 [](int, int) { return std::vector<Summand>{{{1}, 3}, {{1}, 5}}; }});
    c.push_back({"V*⊗sp(n)^⊥", "V*⊗sp(n)^⊥ = (V₂₁ + Λ³₀E + 2E)(S³H + H) for n > 1, ES³H + EH for n = 1", false, 1,
                 [](int n, int) { return std::int64_t(4 * n) * 3 * n * (2 * n - 1); },
                 [](int n, int) {
                     if (n == 1) return std::vector<Summand>{{{1}, 3}, {{1}, 1}};
                     return std::vector<Summand>{{{2, 1}, 3}, {{1, 1, 1}, 3}, {{1}, 3, 2},
                                                 {{2, 1}, 1}, {{1, 1, 1}, 1}, {{1}, 1, 2}};
                 }});
    return c;
}

}  // namespace

const std::vector<IdentitySpec>& identity_catalog() {
    static const std::vector<IdentitySpec> catalog = make_catalog();
    return catalog;
}

IdentityResult identity_check(const std::string& id, int n, std::optional<int> l) {
    for (const auto& spec : identity_catalog()) {
        if (spec.id != id) continue;
        if (spec.uses_l && !l) throw std::invalid_argument("identity '" + id + "' needs a value of l");
        IdentityResult r{id, n, spec.uses_l ? l : std::nullopt, 0, {}, false};
        const int lv = l.value_or(0);
        r.lhs = spec.lhs(n, lv);
        std::int64_t total = 0;
        for (const auto& s : spec.rhs(n, lv)) {
            r.rhs.push_back(dim_of(n, s));
            total += r.rhs.back();
        }
        r.equal = r.lhs == total;
        return r;
    }
    throw std::invalid_argument("unknown identity '" + id + "'");
}

std::vector<IdentityResult> check_catalog(int n, int max_l) {
    std::vector<IdentityResult> out;
    for (const auto& spec : identity_catalog()) {
        if (!spec.uses_l) {
            out.push_back(identity_check(spec.id, n));
            continue;
        }
        for (int l = spec.min_l; l <= max_l; ++l) out.push_back(identity_check(spec.id, n, l));
    }
    return out;
}

std::vector<LedgerRow> module_ledger(int n) {
    const auto& spaces = ModelSpaces::get(n);
    auto d = [n](std::vector<int> w, int s = 0) { return weyl_dim({n, std::move(w), s}); };
    const std::int64_t t = 4 * n + 3;
    const std::int64_t total = t * (t - 1) / 2 * t;

    const auto& k_map = spaces.partial_of(AlgebraName::K);
    const int im_k = spaces.image_of(AlgebraName::K).rank();
    const int im_b = spaces.image_of(AlgebraName::B).rank();
    const auto& split = spaces.torsion_split();
    SubspaceBasis joined = split.star;
    for (const auto* part : {&split.q_part, &split.w1, &split.w2})
        for (const auto& g : part->generators()) joined.add(g);
    const auto& mods = spaces.curvature_modules();

    const std::int64_t s2e = d({2}), l20e = d({1, 1});
    std::vector<LedgerRow> rows;
    rows.push_back({"ker ∂_K", d({}, 2), k_map.domain_dim() - im_k});
    rows.push_back({"coker ∂_Q", 3 * (4 * n) * (4 * n - 1) / 2, total - spaces.image_of(AlgebraName::Q).rank()});
    const std::int64_t w1 = n == 1 ? d({1}, 3) + d({1}, 1)
                                   : (d({2, 1}) + d({1, 1, 1}) + 2 * d({1})) * (d({}, 3) + d({}, 1));
    rows.push_back({"W1", w1, split.w1.rank()});
    rows.push_back({"W2", d({1}, 3) + d({1}, 5), split.w2.rank()});
    const std::int64_t w3 = n == 1 ? 5 * (s2e + 1) + 3 : 5 * (s2e + l20e + 1) + 3 * l20e + 3;
    rows.push_back({"W3", w3, im_b - im_k});
    rows.push_back({"Λ²T*⊗T = im∂_B ⊕ Λ²V*⊗W ⊕ ∂W1 ⊕ ∂W2", total,
                    split.star.rank() + split.q_part.rank() + split.w1.rank() + split.w2.rank()});
    rows.push_back({"direct sum (rank of the union)", total, joined.rank()});
    rows.push_back({"R1", d({4}) + (s2e + l20e + 1) * 4, mods.R[0].rank()});
    rows.push_back({"R2", d({3}, 1) + 2 * d({1}, 3) + 2 * d({1}, 1), mods.R[1].rank()});
    rows.push_back({"R3", d({2}, 2) + d({}, 4) + d({}, 2) + 1, mods.R[2].rank()});
    rows.push_back({"R4", d({1}, 3), mods.R[3].rank()});
    rows.push_back({"R1 traceless", d({4}) + d({2}, 2) + l20e + 1, mods.tilde_R[0].rank()});
    rows.push_back({"R2 traceless", d({3}, 1) + d({1}, 3) + d({1}, 1), mods.tilde_R[1].rank()});
    rows.push_back({"R3 traceless", d({2}, 2) + d({}, 4) + 1, mods.tilde_R[2].rank()});
    return rows;
}

}  // namespace qcgeo
