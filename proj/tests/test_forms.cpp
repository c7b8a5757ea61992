#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leviscope/expr_io.hpp"
#include "leviscope/forms.hpp"
#include "leviscope/ils.hpp"
#include "test_support.hpp"

using namespace leviscope;
using namespace leviscope::testing;

namespace {
Poly P(const std::string& text, const VarSpacePtr& space) {
    return parse_poly(ExprSource{text, space});
}
const VarSpacePtr zsp = VarSpace::paired({"z"});
}  // namespace

TEST_CASE("wirtinger operators split d") {
    Poly f = P("z*~z", zsp);
    DiffForm dh = d_holo(f);
    DiffForm da = d_anti(f);
    CHECK(dh.coeff({0}) == P("~z", zsp));
    CHECK(da.coeff({1}) == P("z", zsp));
    CHECK(d_full(f) == dh + da);

    DiffForm mixed = d_holo(d_anti(f));  // d d~ (z~z) = dz ^ d~z
    REQUIRE(mixed.degree() == 2);
    CHECK(mixed.coeff({0, 1}) == P("1", zsp));
    CHECK(mixed.terms().size() == 1);
}

TEST_CASE("wedge basics") {
    DiffForm dz(zsp, 1), dzb(zsp, 1);
    dz.add({0}, P("1", zsp));
    dzb.add({1}, P("1", zsp));
    CHECK(wedge(dz, dz).is_zero());
    CHECK(wedge(dz, dzb) == -wedge(dzb, dz));

    DiffForm a(zsp, 1), b(zsp, 1);
    a.add({0}, P("~z", zsp));
    b.add({1}, P("z", zsp));
    DiffForm ab = wedge(a, b);
    CHECK(ab.coeff({0, 1}) == P("z*~z", zsp));
}

TEST_CASE("wedge is graded anticommutative on random forms") {
    auto sp = VarSpace::plain({"x", "y", "z", "w"});
    Rng rng(47);
    for (int k = 0; k < 200; ++k) {
        std::uniform_int_distribution<unsigned> deg(1, 2);
        unsigned da = deg(rng), db = deg(rng);
        DiffForm a(sp, da), b(sp, db);
        for (int t = 0; t < 3; ++t) {
            std::vector<VarIndex> ba, bb;
            for (unsigned j = 0; j < da; ++j) ba.push_back(rng() % 4);
            for (unsigned j = 0; j < db; ++j) bb.push_back(rng() % 4);
            a.add(ba, random_poly(sp, rng, 2, 2));
            b.add(bb, random_poly(sp, rng, 2, 2));
        }
        DiffForm lhs = wedge(a, b);
        DiffForm rhs = wedge(b, a);
        if ((da * db) % 2 == 1) rhs = -rhs;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("d is a complex: dd = 0, Wirtinger identities") {
    auto sp = VarSpace::paired({"x", "y1"});
    Rng rng(53);
    for (int k = 0; k < 200; ++k) {
        Poly f = random_poly(sp, rng, 4, 4);
        CHECK(d_full(d_full(f)).is_zero());
    }
    for (int k = 0; k < 50; ++k) {
        Poly f = random_poly(sp, rng, 4, 4);
        CHECK(d_holo(d_holo(f)).is_zero());
        CHECK(d_anti(d_anti(f)).is_zero());
        CHECK(d_holo(d_anti(f)) == -d_anti(d_holo(f)));
    }
}

TEST_CASE("Leibniz rule holds exactly") {
    auto sp = VarSpace::paired({"x", "y1"});
    Rng rng(59);
    for (int k = 0; k < 200; ++k) {
        Poly f = random_poly(sp, rng, 3, 3);
        Poly g = random_poly(sp, rng, 3, 3);
        DiffForm want = d_full(f).scaled(g) + d_full(g).scaled(f);
        CHECK(d_full(f * g) == want);
    }
}

TEST_CASE("levi_form: spec examples") {
    auto z1 = VarSpace::paired({"z1"});
    HermitianPoly Re_z1 = re_part(P("z1", z1));
    DiffForm eta = levi_form(Re_z1);
    GaussianRational half_i = GaussianRational::unit_i() * GaussianRational(Rational(1, 2));
    CHECK(eta.coeff({0}) == Poly::constant(z1, half_i));
    CHECK(eta.coeff({1}) == Poly::constant(z1, -half_i));

    HermitianPoly zz = make_hermitian(P("z1*~z1", z1));
    DiffForm eta2 = levi_form(zz);
    CHECK(eta2.coeff({0}) == P("~z1", z1).scaled(GaussianRational::unit_i()));
    CHECK(eta2.coeff({1}) == P("z1", z1).scaled(-GaussianRational::unit_i()));

    HermitianPoly one = make_hermitian(P("1", z1));
    CHECK(levi_form(one).is_zero());
}

TEST_CASE("alpha_beta on the A_oo complexification") {
    auto sp = VarSpace::paired({"x", "y1", "y2"});
    ComplexifiedPoly Fc = complexify(re_part(P("y1^2 + y2^2", sp)));
    AlphaBeta ab = alpha_beta(Fc);
    DiffForm alpha_expect(Fc.space(), 1);
    alpha_expect.add({1}, Poly::variable(Fc.space(), 1));  // y1 dy1
    alpha_expect.add({2}, Poly::variable(Fc.space(), 2));  // y2 dy2
    CHECK(ab.alpha == alpha_expect);
    DiffForm beta_expect(Fc.space(), 1);
    beta_expect.add({4}, Poly::variable(Fc.space(), 4));  // w1 dw1
    beta_expect.add({5}, Poly::variable(Fc.space(), 5));  // w2 dw2
    CHECK(ab.beta == beta_expect);
    CHECK(ab.theta1.is_zero());
    CHECK(ab.theta2.is_zero());
}

TEST_CASE("alpha_beta on a lone x") {
    auto sp = VarSpace::paired({"x"});
    ComplexifiedPoly ctx = complexify(re_part(P("x", sp)));
    ctx.poly = Poly::variable(ctx.space(), 0);  // F_C = x
    AlphaBeta ab = alpha_beta(ctx);
    DiffForm dx(ctx.space(), 1);
    dx.add({0}, P("1", ctx.space()));
    CHECK(ab.alpha == dx);
    CHECK(ab.beta.is_zero());
}

TEST_CASE("alpha_beta split: consistent and inconsistent") {
    auto sp = VarSpace::paired({"x", "y1", "y2"});
    ComplexifiedPoly Fc = complexify(re_part(P("y1^2 + y2^2", sp)));
    // H_C = y1^2 * w1^2 is mirror-symmetric, i.e. comes from a real H
    Poly Hc = P("y1^2*w1^2", Fc.space());
    ComplexifiedPoly FH = Fc;
    FH.poly = Fc.poly + Hc;
    Poly Pxy = P("y1^2 + y2^2", FH.space());
    AlphaBeta ab = alpha_beta(FH, ComplexSplit{Pxy, Hc});
    CHECK(ab.theta1 == d_over(Hc, FH.holo_slots));
    CHECK(ab.theta2 == d_over(Hc, FH.anti_slots));
    CHECK(ab.alpha - ab.theta1 == d_over(Pxy.scaled(GaussianRational(Rational(1, 2))), FH.holo_slots));

    CHECK_THROWS_AS(alpha_beta(FH, ComplexSplit{Pxy, Poly::zero(FH.space())}),
                    inconsistent_split_error);
}

TEST_CASE("equation (3): eta_C +- i dF_C = +-2i alpha/beta, catalog wide") {
    for (const auto& row : table1_rows()) {
        for (int n : {2, 3}) {
            if (n < row.min_n) continue;
            Germ g = build_normal_form(row.tag, row.smallest, n);
            auto paired = VarSpace::paired(g.space()->names());
            HermitianPoly F = re_part(inject_germ(g, paired));
            ComplexifiedPoly Fc = complexify(F);

            // independent route: complexify the Levi 1-form of F
            DiffForm etaC = complexify_form(Fc, levi_form(F));
            CHECK(etaC == eta_complexified(Fc));

            AlphaBeta ab = alpha_beta(Fc);
            GaussianRational i = GaussianRational::unit_i();
            DiffForm dFc = d_full(Fc.poly);
            CHECK(etaC + dFc.scaled(i) == ab.alpha.scaled(i * GaussianRational(2)));
            CHECK(etaC - dFc.scaled(i) == ab.beta.scaled(-(i * GaussianRational(2))));
        }
    }
}

TEST_CASE("equation (3) identities on random real polynomials") {
    auto sp = VarSpace::paired({"x", "y1"});
    Rng rng(61);
    for (int k = 0; k < 200; ++k) {
        Poly h = random_poly(sp, rng, 3, 3);
        Poly real = h + conj_swap(h);
        if (real.is_zero()) continue;
        HermitianPoly F = make_hermitian(real);
        ComplexifiedPoly Fc = complexify(F);
        DiffForm etaC = complexify_form(Fc, levi_form(F));
        AlphaBeta ab = alpha_beta(Fc);
        GaussianRational i = GaussianRational::unit_i();
        DiffForm dFc = d_full(Fc.poly);
        CHECK(etaC + dFc.scaled(i) == ab.alpha.scaled(i * GaussianRational(2)));
        CHECK(etaC - dFc.scaled(i) == ab.beta.scaled(-(i * GaussianRational(2))));
    }
}

TEST_CASE("print_form is stable") {
    auto sp = VarSpace::plain({"t", "s", "u"});
    DiffForm w(sp, 1);
    w.add({2}, P("t^2 + s^2", sp));
    w.add({0}, P("u*t", sp));
    w.add({1}, P("u*s", sp));
    CHECK(print_form(w) == "t*u*dt + s*u*ds + (t^2 + s^2)*du");
    CHECK(print_form(DiffForm::zero(sp, 1)) == "0");
}
