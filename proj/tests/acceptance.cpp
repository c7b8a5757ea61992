// Acceptance suite: one pass/fail line per criterion. Every tolerance is
// exact (the whole engine is exact rational arithmetic); timing bounds are
// wall-clock. Returns the number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "leviscope/blowup.hpp"
#include "leviscope/expr_io.hpp"
#include "leviscope/ils.hpp"
#include "leviscope/leviflat.hpp"
#include "test_support.hpp"

using namespace leviscope;
using namespace leviscope::testing;

namespace {

struct Criterion {
    std::string name;
    std::function<bool(std::ostream&)> run;
};

Poly parse_in(const std::string& text, const VarSpacePtr& space) {
    return parse_poly(ExprSource{text, space});
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

HermitianPoly re_of_row(const NormalFormEntry& row, int n) {
    Germ g = build_normal_form(row.tag, row.smallest, n);
    return re_part(inject_germ(g, VarSpace::paired(g.space()->names())));
}

// ---------------------------------------------------------------------------
// 1. Levi-flat catalog sweep
// ---------------------------------------------------------------------------

bool criterion_levi_sweep(std::ostream& log) {
    bool ok = true;
    for (const auto& row : table1_rows()) {
        auto t0 = std::chrono::steady_clock::now();
        HermitianPoly F = re_of_row(row, 3);
        bool flat = is_levi_flat(F).is_levi_flat;
        double secs = seconds_since(t0);
        if (!flat) {
            log << "    " << row.display << ": not Levi-flat\n";
            ok = false;
        }
        if (secs >= 10.0) {
            log << "    " << row.display << ": took " << secs << "s (>= 10s)\n";
            ok = false;
        }
    }
    for (const auto& row : table2_rows()) {
        auto t0 = std::chrono::steady_clock::now();
        HermitianPoly F = build_quadric(row.tag, row.default_params, 3);
        bool flat = is_levi_flat(F).is_levi_flat;
        double secs = seconds_since(t0);
        if (!flat) {
            log << "    " << row.display << ": not Levi-flat\n";
            ok = false;
        }
        if (secs >= 10.0) {
            log << "    " << row.display << ": took " << secs << "s (>= 10s)\n";
            ok = false;
        }
    }
    // control: z1~z1 + z2~z2 must come back false with a witness
    auto sp = VarSpace::paired({"z1", "z2"});
    HermitianPoly cone = make_hermitian(parse_in("z1*~z1 + z2*~z2", sp));
    LeviFlatReport rep = is_levi_flat(cone);
    if (rep.is_levi_flat || !rep.witness.has_value()) {
        log << "    control z1*~z1 + z2*~z2: expected false with witness, got "
            << (rep.is_levi_flat ? "true" : "false") << "; the obstruction form equals "
            << "-2*F times the volume covector, which F divides, so the "
            << "divisibility criterion is vacuously satisfied (the zero set has "
            << "no smooth real points)\n";
        ok = false;
    }
    return ok;
}

// ---------------------------------------------------------------------------
// 2. Singular-set dimension
// ---------------------------------------------------------------------------

bool criterion_sing_dimension(std::ostream& log) {
    bool ok = true;
    for (const auto& row : table1_rows()) {
        HermitianPoly F = re_of_row(row, 3);
        int dim = ideal_dimension(sing_ideal(F));
        if (dim != 2) {
            log << "    " << row.display << ": algebraic dimension " << dim << " != 2\n";
            ok = false;
        }
    }
    return ok;
}

// ---------------------------------------------------------------------------
// 3. ILS invariants
// ---------------------------------------------------------------------------

bool criterion_ils_invariants(std::ostream& log) {
    bool ok = true;

    // independent dense-oracle values for A_oo and D_oo (n = 2), computed
    // before trusting the engine
    {
        Germ a = build_normal_form(NormalFormTag::A, {}, 2);
        Germ d = build_normal_form(NormalFormTag::D, {}, 2);
        Ideal i2 = i2_ideal(a.space(), 2);
        int oracle_a = dense_truncated_quotient_dim(i2, tau_ideal(a), 7);
        int oracle_d = dense_truncated_quotient_dim(i2, tau_ideal(d), 7);
        if (oracle_a != 0 || oracle_d != 1) {
            log << "    dense oracle disagrees: c(A_oo)=" << oracle_a
                << " (want 0), c(D_oo)=" << oracle_d << " (want 1)\n";
            ok = false;
        }
    }

    // frozen regression values at n = 3, smallest legal parameters; every
    // value is re-derived by the independent dense oracle past stabilization
    struct Expect {
        NormalFormTag tag;
        int c;
    };
    const Expect expected[] = {
        {NormalFormTag::A, 0},  {NormalFormTag::D, 1},   {NormalFormTag::J, 2},
        {NormalFormTag::Tk2, 3}, {NormalFormTag::Z, 4},  {NormalFormTag::W1, 5},
        {NormalFormTag::Tqr, 3}, {NormalFormTag::Qk, 4}, {NormalFormTag::S1, 5},
    };
    for (const auto& [tag, c_want] : expected) {
        const NormalFormEntry* row = nullptr;
        for (const auto& r : table1_rows())
            if (r.tag == tag) row = &r;
        Germ f = build_normal_form(tag, row->smallest, 3);
        IlsReport rep = codim_c(f, 2, 12);
        if (!rep.c_value.has_value()) {
            log << "    " << row->display << ": c did not stabilize within degree cap 12\n";
            ok = false;
        } else if (*rep.c_value != c_want) {
            log << "    " << row->display << ": c = " << *rep.c_value << " != " << c_want
                << "\n";
            ok = false;
        } else if (*rep.stabilized_at + rep.window > 8) {
            log << "    " << row->display << ": stabilized too late for the oracle window\n";
            ok = false;
        }
        int oracle = dense_truncated_quotient_dim(i2_ideal(f.space(), 3), tau_ideal(f), 8);
        if (oracle != c_want) {
            log << "    " << row->display << ": dense oracle gives " << oracle << " != "
                << c_want << "\n";
            ok = false;
        }
    }

    // control: f = y1^2 (n = 2) must not stabilize
    Germ control = make_germ(parse_in("y1^2", germ_space(2)));
    IlsReport rep = codim_c(control, 2, 12);
    if (rep.c_value.has_value()) {
        log << "    control y1^2: unexpectedly stabilized at c = " << *rep.c_value << "\n";
        ok = false;
    }
    return ok;
}

// ---------------------------------------------------------------------------
// 4. Blow-up reproduction
// ---------------------------------------------------------------------------

bool criterion_blowup(std::ostream& log) {
    bool ok = true;
    auto sp = VarSpace::paired({"x", "y1", "y2"});
    ComplexifiedPoly Fc = complexify(re_part(parse_in("y1^2 + y2^2", sp)));
    BlowupChart chart =
        BlowupChart::make(Fc.space(), {"y1", "y2", "w1", "w2"}, {"t", "s", "u", "v"}, 2);

    auto st = strict_transform(chart, Fc.poly);
    Poly want = parse_in("1 + t^2 + s^2 + v^2", chart.chart_space());
    if (st.multiplicity != 2 || print_poly(st.transform) != print_poly(want)) {
        log << "    strict transform: got (" << print_poly(st.transform) << ", m="
            << st.multiplicity << "), want (" << print_poly(want) << ", m=2)\n";
        ok = false;
    }

    auto sf = strict_transform_form(chart, alpha_beta(Fc).alpha);
    DiffForm want_form(chart.chart_space(), 1);
    want_form.add({1}, parse_in("u*t", chart.chart_space()));
    want_form.add({2}, parse_in("u*s", chart.chart_space()));
    want_form.add({4}, parse_in("t^2 + s^2", chart.chart_space()));
    if (sf.multiplicity != 1 || print_form(sf.transform) != print_form(want_form)) {
        log << "    transformed 1-form: got " << print_form(sf.transform) << " (m="
            << sf.multiplicity << "), want " << print_form(want_form) << " (m=1)\n";
        ok = false;
    }
    return ok;
}

// ---------------------------------------------------------------------------
// 5. Segre suite
// ---------------------------------------------------------------------------

bool criterion_segre(std::ostream& log) {
    bool ok = true;
    HermitianPoly q24 = build_quadric(QuadricTag::Q24, {}, 3);
    std::vector<std::vector<GaussianRational>> line_pts;
    for (long c : {0L, 1L, -3L})
        line_pts.push_back({GaussianRational(0), GaussianRational(0), GaussianRational(c)});
    line_pts.push_back({GaussianRational(0), GaussianRational(0),
                        GaussianRational(Rational(2, 3), Rational(-1))});
    auto scan = degenerate_locus_scan(q24, line_pts);
    for (const auto& [k, deg] : scan)
        if (!deg) {
            log << "    Q_{2,4}: point " << k << " on the singular line is not degenerate\n";
            ok = false;
        }

    HermitianPoly q04 = build_quadric(QuadricTag::Q02k, {.k = 2}, 3);
    SegreReport at0 =
        segre_variety(q04, {GaussianRational(0), GaussianRational(0), GaussianRational(0)});
    if (at0.degenerate) {
        log << "    Q_{0,4}: degenerate at the origin\n";
        ok = false;
    }

    auto n3 = quadric_models_for_line(3);
    if (!(n3.size() == 2 && n3[0].display == "Q_{0,2}" && n3[1].display == "Q_{2,4}")) {
        log << "    model list for n=3 is not [Q_{0,2}, Q_{2,4}]\n";
        ok = false;
    }
    auto n4 = quadric_models_for_line(4);
    if (!(n4.size() == 1 && n4[0].display == "Q_{0,6}")) {
        log << "    model list for n=4 is not [Q_{0,6}]\n";
        ok = false;
    }
    return ok;
}

// ---------------------------------------------------------------------------
// 6. Algebra property suites (200 randomized cases each)
// ---------------------------------------------------------------------------

bool criterion_properties(std::ostream& log) {
    bool ok = true;
    auto sp = VarSpace::paired({"x", "y1"});

    {
        Rng rng(101);
        for (int k = 0; k < 200; ++k) {
            Poly f = random_poly(sp, rng, 4, 4);
            if (!d_full(d_full(f)).is_zero()) {
                log << "    d(d(f)) != 0 at case " << k << "\n";
                ok = false;
                break;
            }
        }
    }
    {
        Rng rng(103);
        for (int k = 0; k < 200; ++k) {
            Poly f = random_poly(sp, rng, 3, 3);
            Poly g = random_poly(sp, rng, 3, 3);
            if (d_full(f * g) != d_full(f).scaled(g) + d_full(g).scaled(f)) {
                log << "    Leibniz failure at case " << k << "\n";
                ok = false;
                break;
            }
        }
    }
    {
        Rng rng(107);
        auto four = VarSpace::plain({"a", "b", "c", "d"});
        for (int k = 0; k < 200; ++k) {
            std::uniform_int_distribution<unsigned> deg(1, 2);
            unsigned da = deg(rng), db = deg(rng);
            DiffForm a(four, da), b(four, db);
            for (int t = 0; t < 3; ++t) {
                std::vector<VarIndex> ba, bb;
                for (unsigned j = 0; j < da; ++j) ba.push_back(rng() % 4);
                for (unsigned j = 0; j < db; ++j) bb.push_back(rng() % 4);
                a.add(ba, random_poly(four, rng, 2, 2));
                b.add(bb, random_poly(four, rng, 2, 2));
            }
            DiffForm rhs = wedge(b, a);
            if ((da * db) % 2 == 1) rhs = -rhs;
            if (wedge(a, b) != rhs) {
                log << "    wedge anticommutativity failure at case " << k << "\n";
                ok = false;
                break;
            }
        }
    }
    {
        Rng rng(109);
        GaussianRational i = GaussianRational::unit_i();
        for (int k = 0; k < 200; ++k) {
            Poly h = random_poly(sp, rng, 3, 3);
            Poly real = h + conj_swap(h);
            if (real.is_zero()) continue;
            HermitianPoly F = make_hermitian(real);
            ComplexifiedPoly Fc = complexify(F);
            DiffForm etaC = complexify_form(Fc, levi_form(F));
            AlphaBeta ab = alpha_beta(Fc);
            DiffForm dFc = d_full(Fc.poly);
            bool eq3 = etaC + dFc.scaled(i) == ab.alpha.scaled(i * GaussianRational(2)) &&
                       etaC - dFc.scaled(i) == ab.beta.scaled(-(i * GaussianRational(2)));
            if (!eq3) {
                log << "    equation (3) identity failure at case " << k << "\n";
                ok = false;
                break;
            }
        }
    }
    {
        Rng rng(113);
        auto three = VarSpace::plain({"x", "y", "z"});
        for (int k = 0; k < 200; ++k) {
            std::vector<Poly> gens;
            for (int j = 0; j < 2; ++j) {
                Poly g = random_poly(three, rng, 3, 3, false);
                if (!g.is_zero()) gens.push_back(g);
            }
            if (gens.empty()) continue;
            auto ideal = Ideal::make(three, gens);
            auto gb = buchberger(ideal);

            Poly f = Poly::zero(three);
            for (const auto& g : gens) f += random_poly(three, rng, 2, 2, false) * g;
            if (!ideal_member(f, gb) || !la_ideal_member(f, gens, 3)) {
                log << "    division/groebner oracle disagreement (known member) at case "
                    << k << "\n";
                ok = false;
                break;
            }
            Poly h = random_poly(three, rng, 3, 3, false);
            bool gb_says = ideal_member(h, gb);
            bool la_says = la_ideal_member(h, gens, 4);
            if ((la_says && !gb_says) || (!gb_says && la_says)) {
                log << "    division/groebner oracle disagreement at case " << k << "\n";
                ok = false;
                break;
            }
        }
    }
    return ok;
}

// ---------------------------------------------------------------------------
// 7. Round trips
// ---------------------------------------------------------------------------

bool criterion_round_trips(std::ostream& log) {
    bool ok = true;

    // parse . print = identity on the corpus
    std::vector<Poly> corpus;
    for (const auto& row : table1_rows())
        for (int n : {2, 3}) {
            if (n < row.min_n) continue;
            corpus.push_back(build_normal_form(row.tag, row.smallest, n).poly);
        }
    for (const auto& row : table2_rows())
        corpus.push_back(build_quadric(row.tag, row.default_params, 3).poly);
    {
        Rng rng(127);
        auto sp = VarSpace::paired({"x", "y1", "y2"});
        for (int k = 0; k < 200; ++k) corpus.push_back(random_poly(sp, rng, 4, 6));
    }
    for (const auto& p : corpus) {
        Poly back = parse_poly(ExprSource{print_poly(p), p.space()});
        if (back != p) {
            log << "    parse(print(p)) != p for " << print_poly(p) << "\n";
            ok = false;
        }
        std::string once = print_poly(back);
        Poly again = parse_poly(ExprSource{once, p.space()});
        if (print_poly(again) != once) {
            log << "    print is not a fixed point on " << once << "\n";
            ok = false;
        }
    }

    // complexify . diagonal_restrict = identity
    for (const auto& row : table1_rows()) {
        HermitianPoly F = re_of_row(row, 3);
        if (diagonal_restrict(complexify(F)).poly != F.poly) {
            log << "    complexify round trip failed for " << row.display << "\n";
            ok = false;
        }
    }
    for (const auto& row : table2_rows()) {
        HermitianPoly F = build_quadric(row.tag, row.default_params, 3);
        if (diagonal_restrict(complexify(F)).poly != F.poly) {
            log << "    complexify round trip failed for " << row.display << "\n";
            ok = false;
        }
    }

    // classify_exact . build_normal_form = identity on the full catalog
    for (const auto& row : table1_rows())
        for (int n : {2, 3}) {
            if (n < row.min_n) continue;
            Germ f = build_normal_form(row.tag, row.smallest, n);
            auto cls = classify_exact(f);
            bool match = cls && cls->tag == row.tag && cls->params.k == row.smallest.k &&
                         cls->params.q == row.smallest.q && cls->params.r == row.smallest.r;
            if (!match) {
                log << "    classify(build(" << row.display << ", n=" << n
                    << ")) failed to round trip\n";
                ok = false;
            }
        }
    return ok;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"levi-flat catalog sweep (Table 1 n=3, Table 2, control)", criterion_levi_sweep},
        {"singular-set dimension = 2 for every Table 1 germ", criterion_sing_dimension},
        {"ILS invariants: oracle values, frozen c regression, controls", criterion_ils_invariants},
        {"blow-up reproduction: strict transform and transformed 1-form", criterion_blowup},
        {"Segre suite: degeneracy and quadric model lists", criterion_segre},
        {"algebra property suites: 200 randomized cases each", criterion_properties},
        {"round trips: parse/print, complexify/restrict, classify/build", criterion_round_trips},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        std::ostringstream log;
        bool passed = false;
        try {
            passed = c.run(log);
        } catch (const std::exception& e) {
            log << "    exception: " << e.what() << "\n";
        }
        std::cout << (passed ? "[PASS] " : "[FAIL] ") << c.name << "\n";
        if (!passed) {
            std::cout << log.str();
            ++failures;
        }
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion(s) failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
