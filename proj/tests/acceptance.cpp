// Acceptance run: one line per criterion, with a detail line for every failing
// sub-check. Exit status is nonzero if any criterion fails.

#include "qcgeo/hwv.hpp"
#include "qcgeo/report.hpp"
#include "qcgeo/rep_dims.hpp"

#include "support/reference.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

using namespace qcgeo;
using namespace qcgeo::testing;

namespace {

struct SubCheck {
    std::string name;
    bool ok;
    std::string detail;
};

std::string shorten(std::string s, std::size_t limit = 240) {
    if (s.size() <= limit) return s;
    std::size_t cut = limit;
    while (cut > 0 && (static_cast<unsigned char>(s[cut]) & 0xC0) == 0x80) --cut;
    return s.substr(0, cut) + " ...";
}

class Criterion {
public:
    Criterion(int id, std::string title, double budget_seconds)
        : id_(id), title_(std::move(title)), budget_(budget_seconds), start_(std::chrono::steady_clock::now()) {}

    void check(std::string name, bool ok, std::string detail = {}) {
        checks_.push_back({std::move(name), ok, std::move(detail)});
    }
    template <class T>
    void equal(std::string name, const T& got, const T& want) {
        if (got == want) return check(std::move(name), true);
        if constexpr (requires { render(got); })
            check(std::move(name), false, "computed − expected = " + shorten(render(got - want)));
        else
            check(std::move(name), false);
    }

    bool finish() {
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        check("time budget " + std::to_string(static_cast<int>(budget_)) + " s", secs < budget_,
              "took " + std::to_string(secs) + " s");
        int failed = 0;
        for (const auto& c : checks_) failed += !c.ok;
        std::cout << "criterion " << id_ << ": " << (failed ? "FAIL" : "PASS") << "  " << title_ << "  ("
                  << checks_.size() - failed << "/" << checks_.size() << " checks, " << secs << " s)\n";
        for (const auto& c : checks_)
            if (!c.ok) std::cout << "    failed: " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
        return failed == 0;
    }

private:
    int id_;
    std::string title_;
    double budget_;
    std::chrono::steady_clock::time_point start_;
    std::vector<SubCheck> checks_;
};

Tensor fgl(const Tensor& f, const Tensor& a) { return form_times_gl(f, a); }
Tensor cgl(int one_based, const Tensor& a) { return covector_times_gl(one_based - 1, a); }

// Criterion 1 ----------------------------------------------------------------

bool solvable_golden() {
    Criterion c(1, "solvable example reproduced exactly", 10);
    const int n = 1;
    const CoframeModel m = solvable_model();
    auto e = [&](std::initializer_list<int> idx) { return form(n, idx); };

    const auto split = torsion_decomposition(m, ConnectionForm::zero(m.layout(), AlgebraName::B));
    Tensor theta_m1(vector_form_signature(2), std_layout(n));
    theta_m1 += form_times_vector(e({4, 6}), {{w_index(n, 1), Rational(1)}});
    theta_m1 -= form_times_vector(e({4, 5}), {{w_index(n, 2), Rational(1)}});
    c.equal("Θ₋₁ of the frame connection", split.theta_minus1, theta_m1);
    c.check("integrable", integrability_check(m).integrable);

    const ConnectionForm qc = qc_connection(m);
    const Tensor sp_part = gl_from_2form(e({1, 4}) + e({2, 3}));
    Tensor expected_qc = q(1, 4) * cgl(5, sp1_value(n, 1)) + q(1, 4) * cgl(6, sp1_value(n, 2)) -
                         (q(1, 2) * cgl(4, sp1_value(n, 3)) + q(1, 4) * cgl(7, sp1_value(n, 3))) -
                         (q(3, 2) * cgl(4, sp_part) + q(1, 2) * cgl(7, sp_part));
    const Rational eh_coeffs[4] = {q(-3, 4), q(1, 4), q(1, 4), q(-3, 4)};
    for (int a = 1; a <= 4; ++a) expected_qc += eh_coeffs[a - 1] * cgl(a, eh_value(n, a));
    c.equal("qc connection", qc.tangent_coefficients(), expected_qc);

    const Tensor curv = tangent_curvature(m, qc);
    Tensor om1(form_gl_signature(2), std_layout(n));
    for (int s = 1; s <= 3; ++s) om1 += q(1, 4) * fgl(omega(n, s), sp1_value(n, s));
    om1 += q(1, 2) * fgl(e({1, 4}) + e({2, 3}), sp1_value(n, 3));
    om1 += q(1, 2) * fgl(5 * e({1, 4}) + e({2, 3}), sp_part);
    Tensor om3 = q(1, 8) * fgl(e({6, 7}), sp1_value(n, 1)) - q(1, 8) * fgl(e({5, 7}), sp1_value(n, 2)) -
                 q(3, 8) * fgl(e({5, 6}), sp1_value(n, 3)) - q(1, 2) * fgl(e({5, 6}), sp_part) +
                 q(1, 16) * eh_curvature_term(n) + q(1, 2) * fgl(e({4, 7}), eh_value(n, 1)) +
                 q(1, 2) * fgl(e({1, 5}) - e({4, 6}), eh_value(n, 2)) +
                 q(1, 2) * fgl(e({1, 6}) + e({4, 5}), eh_value(n, 3)) - q(1, 2) * fgl(e({1, 7}), eh_value(n, 4));
    c.equal("curvature Ω₁ + Ω₃", curv, om1 + om3);
    const CurvatureReport parts = curvature_module_membership(curv, n);
    c.equal("curvature R1 component", parts.components[0], om1);
    c.equal("curvature R3 component", parts.components[2], om3);

    const QcmData qcm = qcm_connection(m);
    Matrix chi_v(4, std::vector<Rational>(4));
    chi_v[0][0] = chi_v[3][3] = q(3, 4);
    chi_v[1][1] = chi_v[2][2] = q(-1, 4);
    c.check("χ_V", qcm.chi_v_matrix == chi_v);
    c.check("χ_W = 0", qcm.chi_w.is_zero());

    // The symmetric product e^i⊙e^j = e^i⊗e_j + e^j⊗e_i in the value slots.
    auto sym = [&](int i, int j) {
        Tensor t(vector_form_signature(1), std_layout(n));
        t.add(Key{i - 1, j - 1}, Rational(1));
        t.add(Key{j - 1, i - 1}, Rational(1));
        return t;
    };
    auto wedge_w = [&](int w, const Tensor& t) { return wedge(e({w}), t); };
    const Tensor t11 = q(-1, 2) * wedge_w(5, sym(1, 2) - sym(3, 4)) - q(1, 2) * wedge_w(6, sym(1, 3) - sym(4, 2));
    Tensor t02(vector_form_signature(2), std_layout(n));
    for (int s = 1; s <= 3; ++s) t02 += form_times_vector(w_contract_volume(n, s), {{w_index(n, s), Rational(1)}});
    const MetricConnection biquard = biquard_connection(m, qcm);
    c.equal("Biquard torsion (1,1) as printed", biquard.t11, t11);
    c.equal("Biquard torsion (0,2) as printed", biquard.t02, t02);
    return c.finish();
}

// Criterion 2 ----------------------------------------------------------------

struct HomogeneousScalars {
    Rational r1, r3;
};

HomogeneousScalars check_homogeneous(Criterion& c, const CoframeModel& m, int sign) {
    const int n = m.n;
    const std::string tag = m.name + ": ";
    const ConnectionForm proj = isotropy_connection(m);

    Tensor theta(vector_form_signature(2), std_layout(n));
    for (int a = 1; a <= 4 * n; ++a)
        for (int s = 1; s <= 3; ++s)
            theta += Rational(sign) *
                     form_times_vector(wedge(interior(a - 1, omega(n, s)), form(n, {w_index(n, s) + 1})),
                                       {{a - 1, Rational(1)}});
    for (int s = 1; s <= 3; ++s) theta += form_times_vector(omega(n, s), {{w_index(n, s), Rational(1)}});
    c.equal(tag + "torsion of the projection connection", tangent_torsion(m, proj), theta);

    Tensor curv(form_gl_signature(2), std_layout(n));
    for (int a = 1; a <= 4 * n; ++a)
        for (int b = a + 1; b <= 4 * n; ++b) {
            Tensor value = gl_from_2form(form(n, {a, b}));
            for (int s = 1; s <= 3; ++s)
                value += gl_from_2form(wedge(interior(a - 1, omega(n, s)), interior(b - 1, omega(n, s))));
            curv -= Rational(sign) * fgl(form(n, {a, b}), value);
        }
    for (int s = 1; s <= 3; ++s)
        curv -= Rational(sign) * fgl(omega(n, s) - Rational(2 * sign) * w_contract_volume(n, s), sp1_value(n, s));
    c.equal(tag + "curvature of the projection connection", tangent_curvature(m, proj), curv);

    const ConnectionForm qc = qc_connection(m);
    const Tensor shift = qc.tangent_coefficients() - proj.tangent_coefficients();
    c.equal(tag + "ω_qc − ω with A = ∓Σ e^a⊗EH(e_a) as printed", shift, Rational(-sign) * eh_tautological(n));
    const Tensor curv_qc = tangent_curvature(m, qc);
    c.equal(tag + "qc curvature as printed", curv_qc, curv - eh_curvature_term(n));

    c.check(tag + "tr Ω^{2,0} has no Span{ω_s} component", all_zero(trace_normalization(m, qc)));
    const CurvatureReport r = curvature_module_membership(curv_qc, n);
    c.check(tag + "curvature in R1 + R3", r.in_sum && r.components[1].is_zero() && r.components[3].is_zero());
    for (const char* key : {"R1:S4E", "R1:S2ES2H", "R1:L20E", "R3:S2ES2H", "R3:S4H"}) {
        const auto it = r.isotypes.find(key);
        c.check(tag + "no " + key + " part", it == r.isotypes.end() || it->second.is_zero());
    }
    c.check(tag + "nonzero trivial isotypes", !is_zero(r.r1_scalar) && !is_zero(r.r3_scalar));
    return {r.r1_scalar, r.r3_scalar};
}

bool homogeneous_models() {
    Criterion c(2, "sphere and hyperbolic models", 130);
    for (int n = 1; n <= 2; ++n) {
        const auto start = std::chrono::steady_clock::now();
        const auto sphere = check_homogeneous(c, sphere_model(n), +1);
        const auto hyper = check_homogeneous(c, hyperbolic_model(n), -1);
        const std::string tag = "n=" + std::to_string(n) + ": ";
        c.check(tag + "R1 scalar flips sign", sphere.r1 == -hyper.r1,
                to_string(sphere.r1) + " vs " + to_string(hyper.r1));
        c.check(tag + "R3 scalar agrees", sphere.r3 == hyper.r3, to_string(sphere.r3) + " vs " + to_string(hyper.r3));
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        c.check(tag + "time budget", secs < (n == 1 ? 10 : 120), std::to_string(secs) + " s");
    }
    return c.finish();
}

// Criterion 3 ----------------------------------------------------------------

bool heisenberg_flat() {
    Criterion c(3, "Heisenberg models are flat", 60);
    for (int n = 1; n <= 2; ++n) {
        const CoframeModel m = heisenberg_model(n);
        const std::string tag = m.name + ": ";
        const ConnectionForm qc = qc_connection(m);
        c.check(tag + "qc connection = 0", qc.tangent_coefficients().is_zero(), render(qc.tangent_coefficients()));
        c.check(tag + "Ω = 0", tangent_curvature(m, qc).is_zero());
        const GeometryReport r = build_report(m);
        c.check(tag + "report flags", r.einstein && r.einstein->flat && r.einstein->traceless_chi_v_zero);
        c.check(tag + "scalar curvature 0", r.einstein && is_zero(r.einstein->ricci.scalar));
    }
    return c.finish();
}

// Criterion 4 ----------------------------------------------------------------

bool representation_ledger() {
    Criterion c(4, "representation ledger", 60);
    for (int n = 1; n <= 6; ++n)
        for (const auto& r : check_catalog(n, 5)) {
            std::string rhs;
            for (auto x : r.rhs) rhs += (rhs.empty() ? "" : "+") + std::to_string(x);
            c.check(r.id + " at n=" + std::to_string(n) + (r.l ? ", l=" + std::to_string(*r.l) : ""), r.equal,
                    std::to_string(r.lhs) + " ≠ " + rhs);
        }
    for (int n = 1; n <= 2; ++n)
        for (const auto& row : module_ledger(n))
            c.check(row.module + " at n=" + std::to_string(n), row.equal(),
                    std::to_string(row.representation_dim) + " vs rank " + std::to_string(row.linear_dim));
    return c.finish();
}

// Criterion 5 ----------------------------------------------------------------

bool hwv_suite() {
    Criterion c(5, "highest weight vector identities", 60);
    for (int n = 1; n <= 3; ++n)
        for (const auto& h : verify_hwv_catalog(n))
            c.check(h.id + " at n=" + std::to_string(n), h.passed(),
                    h.residual.is_zero() ? "membership mismatch" : "residual " + render(h.residual));
    return c.finish();
}

// Criterion 6 ----------------------------------------------------------------

bool property_suites() {
    Criterion c(6, "randomized exact property suites", 300);
    Random rnd(20261016);
    const auto corpus = bundled_corpus();

    int bianchi_failures = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const CoframeModel& base = corpus[trial % corpus.size()];
        const CoframeModel m = random_frame(base, rnd);
        if (!validate_jacobi(m).empty()) {
            ++bianchi_failures;
            continue;
        }
        const auto res = bianchi_residuals(m, rnd.connection(m.layout(), AlgebraName::K));
        bianchi_failures += !(res.first.is_zero() && res.second.is_zero());
    }
    c.check("Bianchi identities on 100 random connections", bianchi_failures == 0,
            std::to_string(bianchi_failures) + " failures");

    for (const auto& m : corpus) {
        const std::string tag = m.name + ": ";
        const ConnectionForm qc = qc_connection(m);
        bool unique = true;
        for (int i = 0; i < 5; ++i)
            unique = unique && qc_connection(m, std::array{rnd.rational(), rnd.rational(), rnd.rational()}) == qc;
        c.check(tag + "qc connection independent of the kernel offset", unique);

        const ConnectionForm a = rnd.connection(m.layout(), AlgebraName::K);
        const ConnectionForm b = rnd.connection(m.layout(), AlgebraName::K);
        const Rational t = rnd.rational();
        const ConnectionForm mix(m.layout(), AlgebraName::K,
                                 t * a.coefficients() + (Rational(1) - t) * b.coefficients());
        c.check(tag + "torsion affine in the connection",
                tangent_torsion(m, mix) == t * tangent_torsion(m, a) + (Rational(1) - t) * tangent_torsion(m, b));

        const QcmData qcm = qcm_connection(m);
        c.check(tag + "χ_V symmetric", is_symmetric(qcm.chi_v_matrix));
        const MetricConnection bq = biquard_connection(m, qcm);
        const Tensor diff = bq.omega.tangent_coefficients() - qcm.omega_qcm.tangent_coefficients();
        c.check(tag + "(ω_B − ω_qcm)^{1,0} = 0", diff.filter([&](const Key& k) { return k[0] < 4 * m.n; }).is_zero());
        const MetricConnection du = duchemin_connection(m, qcm);
        c.check(tag + "Θ_D = Θ_B − [Θ_B^{0,2}]_W", du.torsion == bq.torsion - vertical_values(bq.t02));

        Tensor contraction(form_gl_signature(2), std_layout(m.n));
        for (int s = 1; s <= 3; ++s)
            contraction += fgl(omega(m.n, s), gl_component(diff, w_index(m.n, s)));
        c.check(tag + "Ω_B^{2,0} − Ω_qcm^{2,0} = Θ₀⌟(ω_B − ω_qcm)",
                bigrade_part(tangent_curvature(m, bq.omega), 2, 0) -
                        bigrade_part(tangent_curvature(m, qcm.omega_qcm), 2, 0) ==
                    contraction);

        if (m.n == 2) {
            const GeometryReport r = build_report(m);
            const auto& f = *r.einstein;
            c.check(tag + "four-form chain (1)⟺(2)⟺(4)⟺(5)",
                    f.four_form_closed == f.chi_scalar_and_w_zero && f.chi_scalar_and_w_zero == f.traceless_ricci_zero &&
                        f.traceless_ricci_zero == f.traceless_chi_v_zero);
        }
    }
    return c.finish();
}

// Criterion 7 ----------------------------------------------------------------

bool adaptation_round_trip() {
    Criterion c(7, "complement adaptation round trip", 300);
    Random rnd(7);
    for (const auto& m : bundled_corpus()) {
        const Matrix original = qcm_connection(m).chi_v_matrix;
        int failures = 0;
        std::string first_failure;
        for (int trial = 0; trial < 10; ++trial) {
            const CoframeModel shifted = shift_complement(m, rnd.eh_shift(m.n));
            try {
                const AdaptedComplement adapted = adapt_complement(shifted);
                if (qcm_connection(adapted.model).chi_v_matrix != original) {
                    ++failures;
                    if (first_failure.empty()) first_failure = "χ_V changed";
                }
            } catch (const PipelineError& e) {
                ++failures;
                if (first_failure.empty()) first_failure = e.what();
            }
        }
        c.check(m.name + ": 10 random EH shifts recovered", failures == 0,
                std::to_string(failures) + " failures, first: " + first_failure);
    }
    return c.finish();
}

}  // namespace

int main() {
    const std::vector<std::function<bool()>> criteria = {solvable_golden,       homogeneous_models, heisenberg_flat,
                                                         representation_ledger, hwv_suite,          property_suites,
                                                         adaptation_round_trip};
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        try {
            failed += !criteria[i]();
        } catch (const std::exception& e) {
            std::cout << "criterion " << i + 1 << ": FAIL  aborted: " << e.what() << "\n";
            ++failed;
        }
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << "\n";
    return failed ? 1 : 0;
}
