#include "qcgeo/hwv.hpp"

#include <catch_amalgamated.hpp>

using namespace qcgeo;

TEST_CASE("every catalog entry holds for n = 1..3", "[hwv]") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& c : verify_hwv_catalog(n)) {
            INFO(c.id << " n=" << n);
            CHECK(c.passed());
        }
}

TEST_CASE("vector names", "[hwv]") {
    const auto& names = hwv_names();
    CHECK(names.size() == 11);
    for (const auto& name : names) CHECK_FALSE(build_hwv(name, 2).is_zero());
    CHECK_THROWS_AS(build_hwv("alpha6", 2), std::invalid_argument);
    CHECK_THROWS_AS(build_hwv("", 1), std::invalid_argument);
}

TEST_CASE("rank one substitutes the missing vectors", "[hwv]") {
    CHECK(build_hwv("alpha3", 1) == build_hwv("alpha1", 1));
    CHECK(build_hwv("beta2", 1) == build_hwv("beta1", 1));
    CHECK_FALSE(build_hwv("alpha3", 2) == build_hwv("alpha1", 2));
}

TEST_CASE("slot structure of the vectors", "[hwv]") {
    const int n = 2;
    for (const char* name : {"alpha1", "alpha2", "alpha3", "beta1", "beta2", "kerK"})
        CHECK(build_hwv(name, n).signature() == form_gl_signature(1));
    for (const char* name : {"alpha4", "alpha5", "beta3", "beta4", "genEH"})
        CHECK(build_hwv(name, n).signature() == vector_form_signature(2));
}

TEST_CASE("real and imaginary parts reassemble the vector", "[hwv]") {
    for (const auto& name : hwv_names()) {
        const ComplexTensor x = build_hwv(name, 2);
        ComplexTensor rebuilt = complexify(real_part(x));
        rebuilt += Gaussian::i() * complexify(imag_part(x));
        CHECK(rebuilt == x);
    }
}

TEST_CASE("kernel vector of the Spencer differential on k", "[hwv]") {
    for (int n = 1; n <= 3; ++n) {
        const ComplexTensor k = build_hwv("kerK", n);
        CHECK(complex_partial(k).is_zero());
    }
}

TEST_CASE("membership modulo the image of ∂_B", "[hwv]") {
    const int n = 2;
    const ComplexTensor a1 = tilde(build_hwv("alpha1", n));
    const ComplexTensor a2 = tilde(build_hwv("alpha2", n));
    const ComplexTensor a3 = tilde(build_hwv("alpha3", n));
    CHECK(membership_mod_image(Gaussian(2) * a1 + a3 - a2, AlgebraName::B, n));
    CHECK_FALSE(membership_mod_image(tilde(build_hwv("beta1", n)), AlgebraName::B, n));
    CHECK_FALSE(membership_mod_image(build_hwv("genEH", n), AlgebraName::G, n));
}

TEST_CASE("tilde rejects values outside the skew part", "[hwv]") {
    const IndexLayout l{1, 7};
    ComplexTensor x(form_gl_signature(1), l);
    x.add(Key{0, 0, 0}, Gaussian(1));
    CHECK_THROWS(tilde(x));
}
