#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leviscope/expr_io.hpp"
#include "leviscope/groebner.hpp"
#include "leviscope/ils.hpp"
#include "test_support.hpp"

using namespace leviscope;
using namespace leviscope::testing;

namespace {

Poly P(const std::string& text, const VarSpacePtr& space) {
    return parse_poly(ExprSource{text, space});
}

const VarSpacePtr xy = VarSpace::plain({"x", "y"});
const VarSpacePtr y12 = VarSpace::plain({"y1", "y2"});

}  // namespace

TEST_CASE("gaussian rational field operations are exact") {
    GaussianRational a(Rational(1, 3), Rational(-2, 7));
    GaussianRational b(Rational(5, 2), Rational(1, 6));
    CHECK((a + b) - b == a);
    CHECK((a * b) / b == a);
    CHECK(a.conj().conj() == a);
    CHECK((a * a.conj()).is_real());
    GaussianRational i = GaussianRational::unit_i();
    CHECK(i * i == GaussianRational(-1));

    Rng rng(7);
    for (int k = 0; k < 50; ++k) {
        GaussianRational p = random_gaussian(rng), q = random_gaussian(rng),
                         r = random_gaussian(rng);
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p + q == q + p);
        CHECK((p * q) * r == p * (q * r));
        if (!q.is_zero()) CHECK((p / q) * q == p);
    }
}

TEST_CASE("rational k-th roots") {
    CHECK(*rational_kth_root(Rational(4), 2) == Rational(2));
    CHECK(*rational_kth_root(Rational(27, 8), 3) == Rational(3, 2));
    CHECK(*rational_kth_root(Rational(-8), 3) == Rational(-2));
    CHECK(!rational_kth_root(Rational(-4), 2).has_value());
    CHECK(!rational_kth_root(Rational(2), 2).has_value());
}

TEST_CASE("monomial orders") {
    // space (x, y): x is the larger variable
    Monomial one;
    Monomial x = Monomial::var(0), y = Monomial::var(1);
    Monomial x2 = Monomial::var(0, 2), mxy = x * y, y2 = Monomial::var(1, 2);
    CHECK(cmp_grevlex(x, y) > 0);
    CHECK(cmp_grevlex(x2, mxy) > 0);
    CHECK(cmp_grevlex(mxy, y2) > 0);
    CHECK(cmp_grevlex(y2, x) > 0);  // graded: degree dominates
    CHECK(cmp_grevlex(x, one) > 0);
    CHECK(cmp_lex(x, y2) > 0);  // lex: x beats any pure y power
    Monomial z = Monomial::var(2);
    CHECK(cmp_grevlex(x * y * z, y * y * y) < 0);  // rightmost difference favors y^3
    CHECK(cmp_grevlex(x * x * y, x * y * y) > 0);
    CHECK(cmp_monomial(x, y, MonomialOrder::Lex) > 0);
}

TEST_CASE("monomial arithmetic") {
    Monomial a = Monomial::var(0, 3) * Monomial::var(1, 2);
    Monomial b = Monomial::var(0, 1) * Monomial::var(1, 4) * Monomial::var(2, 2);
    Monomial l = a.lcm(b);
    CHECK(l.degree_of(0) == 3);
    CHECK(l.degree_of(1) == 4);
    CHECK(l.degree_of(2) == 2);
    CHECK(a.divides(l));
    CHECK(b.divides(l));
    CHECK(!a.divides(b));
    CHECK(b.divide_into(l) == Monomial::var(0, 2));
    CHECK(Monomial().divides(a));
    CHECK(a.coprime(Monomial::var(2)));
    CHECK(!a.coprime(b));
}

TEST_CASE("poly_divmod: exact factorization") {
    Poly f = P("x^2 - y^2", xy);
    auto [q, r] = poly_divmod(f, {P("x - y", xy)}, MonomialOrder::Grevlex);
    CHECK(q[0] == P("x + y", xy));
    CHECK(r.is_zero());
}

TEST_CASE("poly_divmod: generator of I^2 divides itself") {
    auto [q, r] = poly_divmod(P("y1*y2", y12),
                              {P("y1^2", y12), P("y1*y2", y12), P("y2^2", y12)},
                              MonomialOrder::Grevlex);
    CHECK(r.is_zero());
}

TEST_CASE("poly_divmod: no division possible") {
    auto sp = VarSpace::plain({"x", "y1"});
    auto [q, r] = poly_divmod(P("x", sp), {P("y1", sp)}, MonomialOrder::Grevlex);
    CHECK(q[0].is_zero());
    CHECK(r == P("x", sp));
}

TEST_CASE("poly_divmod: mixed variable spaces rejected") {
    CHECK_THROWS_AS(poly_divmod(P("x", xy), {P("y1", y12)}, MonomialOrder::Grevlex),
                    space_mismatch_error);
}

TEST_CASE("division correctness on random instances") {
    auto sp = VarSpace::plain({"x", "y", "z"});
    Rng rng(11);
    for (int k = 0; k < 200; ++k) {
        Poly f = random_poly(sp, rng, 4, 5);
        std::vector<Poly> divisors;
        for (int j = 0; j < 2; ++j) {
            Poly d = random_poly(sp, rng, 2, 3);
            if (!d.is_zero()) divisors.push_back(d);
        }
        if (divisors.empty()) continue;
        auto [q, r] = poly_divmod(f, divisors, MonomialOrder::Grevlex);
        Poly recombined = r;
        for (std::size_t j = 0; j < divisors.size(); ++j) recombined += q[j] * divisors[j];
        CHECK(recombined == f);
        for (const auto& [m, c] : r.terms())
            for (const auto& d : divisors)
                CHECK(!d.leading_term(MonomialOrder::Grevlex).first.divides(m));
    }
}

TEST_CASE("buchberger: already a basis") {
    auto gb = buchberger(Ideal::make(y12, {P("y1", y12), P("y2", y12)}));
    REQUIRE(gb.basis.size() == 2);
    CHECK(gb.basis[0] == P("y2", y12));
    CHECK(gb.basis[1] == P("y1", y12));
}

TEST_CASE("buchberger: S-polynomial chain produces y2^3") {
    auto gb = buchberger(Ideal::make(y12, {P("y1^2", y12), P("y1*y2 + y2^2", y12)}));
    bool has_y2_cubed = false;
    for (const auto& b : gb.basis)
        if (b == P("y2^3", y12)) has_y2_cubed = true;
    CHECK(has_y2_cubed);
    CHECK(gb.basis.size() == 3);
}

TEST_CASE("buchberger: monomial ideal I^2") {
    auto gb = buchberger(i2_ideal(y12, 2));
    REQUIRE(gb.basis.size() == 3);
    CHECK(gb.basis[0] == P("y2^2", y12));
    CHECK(gb.basis[1] == P("y1*y2", y12));
    CHECK(gb.basis[2] == P("y1^2", y12));
}

TEST_CASE("buchberger: term cap raises resource_limit_error") {
    Limits tiny;
    tiny.max_terms = 2;
    CHECK_THROWS_AS(buchberger(Ideal::make(xy, {P("x^2 + x*y + y^2 + x + y + 1", xy)}), tiny),
                    resource_limit_error);
}

TEST_CASE("buchberger: lex order basis") {
    // elimination shape in lex: x > y
    auto ideal = Ideal::make(xy, {P("x^2 + y^2 - 1", xy), P("x*y - 1", xy)}, MonomialOrder::Lex);
    auto gb = buchberger(ideal);
    bool has_univariate_y = false;
    for (const auto& b : gb.basis) {
        bool pure_y = true;
        for (const auto& [m, c] : b.terms())
            if (m.degree_of(0) > 0) pure_y = false;
        if (pure_y && !b.is_zero()) has_univariate_y = true;
        CHECK(ideal_member(b, ideal));
    }
    CHECK(has_univariate_y);
}

TEST_CASE("groebner soundness: generators and S-polynomials reduce to zero") {
    auto sp = VarSpace::plain({"x", "y", "z"});
    Rng rng(13);
    for (int k = 0; k < 25; ++k) {
        std::vector<Poly> gens;
        for (int j = 0; j < 3; ++j) {
            Poly g = random_poly(sp, rng, 3, 3, /*complex=*/false);
            if (!g.is_zero()) gens.push_back(g);
        }
        if (gens.empty()) continue;
        auto ideal = Ideal::make(sp, gens);
        auto gb = buchberger(ideal);
        for (const auto& g : gens) CHECK(ideal_member(g, gb));
        for (std::size_t i = 0; i < gb.basis.size(); ++i)
            for (std::size_t j = i + 1; j < gb.basis.size(); ++j) {
                auto [mi, ci] = gb.basis[i].leading_term(gb.order);
                auto [mj, cj] = gb.basis[j].leading_term(gb.order);
                Monomial l = mi.lcm(mj);
                Poly s = gb.basis[i].mul_term(mi.divide_into(l), GaussianRational(1) / ci) -
                         gb.basis[j].mul_term(mj.divide_into(l), GaussianRational(1) / cj);
                CHECK(ideal_member(s, gb));
            }
    }
}

TEST_CASE("ideal_member matches the linear-algebra oracle") {
    auto sp = VarSpace::plain({"x", "y", "z"});
    Rng rng(17);
    for (int k = 0; k < 60; ++k) {
        std::vector<Poly> gens;
        for (int j = 0; j < 2; ++j) {
            Poly g = random_poly(sp, rng, 3, 3, false);
            if (!g.is_zero()) gens.push_back(g);
        }
        if (gens.empty()) continue;
        auto ideal = Ideal::make(sp, gens);
        auto gb = buchberger(ideal);

        // known member: a random combination
        Poly f = Poly::zero(sp);
        for (const auto& g : gens) f += random_poly(sp, rng, 2, 2, false) * g;
        CHECK(ideal_member(f, gb));
        CHECK(la_ideal_member(f, gens, 3));

        // random polynomial: LA-true forces GB-true; GB-false forces LA-false
        Poly h = random_poly(sp, rng, 3, 3, false);
        bool gb_says = ideal_member(h, gb);
        bool la_says = la_ideal_member(h, gens, 4);
        if (la_says) CHECK(gb_says);
        if (!gb_says) CHECK(!la_says);
    }
}

TEST_CASE("membership is independent of generator order") {
    auto sp = VarSpace::plain({"x", "y", "z"});
    Rng rng(19);
    for (int k = 0; k < 20; ++k) {
        std::vector<Poly> gens;
        for (int j = 0; j < 3; ++j) {
            Poly g = random_poly(sp, rng, 3, 3, false);
            if (!g.is_zero()) gens.push_back(g);
        }
        if (gens.size() < 2) continue;
        std::vector<Poly> shuffled = gens;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        auto gb1 = buchberger(Ideal::make(sp, gens));
        auto gb2 = buchberger(Ideal::make(sp, shuffled));
        for (int t = 0; t < 5; ++t) {
            Poly h = random_poly(sp, rng, 3, 3, false);
            CHECK(ideal_member(h, gb1) == ideal_member(h, gb2));
        }
        // reduced bases agree as sets
        REQUIRE(gb1.basis.size() == gb2.basis.size());
        for (const auto& b : gb1.basis)
            CHECK(std::find(gb2.basis.begin(), gb2.basis.end(), b) != gb2.basis.end());
    }
}

TEST_CASE("ideal_member: spec examples") {
    CHECK(ideal_member(P("y1*y2", y12), i2_ideal(y12, 2)));
    CHECK(!ideal_member(P("y1", y12), i2_ideal(y12, 2)));
    // y1^2 is not in tau(D_oo)
    Germ dinf = build_normal_form(NormalFormTag::D, {}, 2);
    Ideal tau = tau_ideal(dinf);
    Poly y1sq = Poly::variable(dinf.space(), 1, 2);
    CHECK(!ideal_member(y1sq, tau));
}

TEST_CASE("ideal_dimension: spec examples") {
    auto six = VarSpace::plain({"x", "y1", "y2", "z", "w1", "w2"});
    auto ideal = Ideal::make(six, {P("y1", six), P("y2", six), P("w1", six), P("w2", six)});
    CHECK(ideal_dimension(ideal) == 2);

    auto one = VarSpace::plain({"x"});
    CHECK(ideal_dimension(Ideal::make(one, {P("x", one)})) == 0);

    CHECK(ideal_dimension(Ideal::make(y12, {P("y1*y2", y12)})) == 1);

    CHECK_THROWS_AS(ideal_dimension(Ideal::make(y12, {P("y1 + 1", y12), P("y1", y12)})),
                    empty_variety_error);
}

TEST_CASE("ideal_dimension agrees with vertex-cover brute force on monomial ideals") {
    Rng rng(23);
    auto sp = VarSpace::plain({"a", "b", "c", "d", "e"});
    for (int k = 0; k < 40; ++k) {
        std::vector<Monomial> monos;
        std::vector<Poly> gens;
        std::uniform_int_distribution<int> count(1, 4);
        int ng = count(rng);
        for (int j = 0; j < ng; ++j) {
            Monomial m = random_monomial(rng, 5, 3);
            if (m.is_one()) continue;
            monos.push_back(m);
            gens.push_back(Poly::term(sp, m, GaussianRational(1)));
        }
        if (gens.empty()) continue;
        int expect = monomial_ideal_dimension_bruteforce(monos, 5);
        CHECK(ideal_dimension(Ideal::make(sp, gens)) == expect);
    }
}

TEST_CASE("truncated_quotient_dim: spec examples against the dense oracle") {
    // A_oo: tau = I^2, quotient 0
    Germ ainf = build_normal_form(NormalFormTag::A, {}, 2);
    Ideal i2 = i2_ideal(ainf.space(), 2);
    Ideal tauA = tau_ideal(ainf);
    CHECK(truncated_quotient_dim(i2, tauA, 6) == 0);
    CHECK(dense_truncated_quotient_dim(i2, tauA, 6) == 0);

    // D_oo: one class (y1^2)
    Germ dinf = build_normal_form(NormalFormTag::D, {}, 2);
    Ideal tauD = tau_ideal(dinf);
    CHECK(truncated_quotient_dim(i2, tauD, 6) == 1);
    CHECK(dense_truncated_quotient_dim(i2, tauD, 6) == 1);

    // trivial: num == den
    CHECK(truncated_quotient_dim(i2, i2, 5) == 0);

    CHECK_THROWS_AS(truncated_quotient_dim(i2, tauD, 100), resource_limit_error);
}

TEST_CASE("truncated_quotient_dim matches the dense oracle on random ideals") {
    Rng rng(29);
    auto sp = VarSpace::plain({"x", "y"});
    for (int k = 0; k < 25; ++k) {
        std::vector<Poly> ng, dg;
        for (int j = 0; j < 2; ++j) {
            Poly a = random_poly(sp, rng, 3, 2, false);
            Poly b = random_poly(sp, rng, 3, 2, false);
            if (!a.is_zero()) ng.push_back(a);
            if (!b.is_zero()) dg.push_back(b);
        }
        if (ng.empty() || dg.empty()) continue;
        Ideal num = Ideal::make(sp, ng);
        Ideal den = Ideal::make(sp, dg);
        for (unsigned N : {3u, 5u})
            CHECK(truncated_quotient_dim(num, den, N) ==
                  dense_truncated_quotient_dim(num, den, N));
    }
}

TEST_CASE("truncated_quotient_dim is monotone and stabilizes on catalog inputs") {
    for (const auto& row : table1_rows()) {
        int n = std::max(row.min_n, 2);
        Germ f = build_normal_form(row.tag, row.smallest, n);
        Ideal i2 = i2_ideal(f.space(), n);
        Ideal tau = tau_ideal(f);
        int prev = -1;
        std::vector<int> dims;
        for (unsigned N = 3; N <= 11; ++N) {
            int d = truncated_quotient_dim(i2, tau, N);
            CHECK(d >= prev);
            prev = d;
            dims.push_back(d);
        }
        std::size_t m = dims.size();
        CHECK(dims[m - 1] == dims[m - 2]);
        CHECK(dims[m - 2] == dims[m - 3]);
    }
}
