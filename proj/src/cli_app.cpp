#include "leviscope/cli_app.hpp"

#include <chrono>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "leviscope/blowup.hpp"
#include "leviscope/expr_io.hpp"
#include "leviscope/ils.hpp"
#include "leviscope/leviflat.hpp"

namespace leviscope {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

unsigned env_degree_cap() {
    if (const char* s = std::getenv("LEVISCOPE_DEGREE_CAP")) {
        int v = std::atoi(s);
        if (v >= 4) return static_cast<unsigned>(v);
    }
    return 12;
}

void render_plain(const Json& j, std::ostream& out, int indent) {
    std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_object() || (v.is_array() && !v.empty() && !v.front().is_primitive())) {
                out << pad << k << ":\n";
                render_plain(v, out, indent + 2);
            } else if (v.is_array()) {
                out << pad << k << ":";
                if (v.empty()) out << " []";
                out << "\n";
                for (const auto& e : v) out << pad << "  - " << (e.is_string() ? e.get<std::string>() : e.dump()) << "\n";
            } else {
                out << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& e : j) {
            if (e.is_primitive()) {
                out << pad << "- " << (e.is_string() ? e.get<std::string>() : e.dump()) << "\n";
            } else {
                out << pad << "-\n";
                render_plain(e, out, indent + 2);
            }
        }
    } else {
        out << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

struct Emitter {
    bool json_mode = false;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    int emit(const std::string& command, Json inputs, Json result, std::ostream& out,
             int exit_code) const {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        Json rep;
        rep["command"] = command;
        rep["inputs"] = std::move(inputs);
        rep["result"] = std::move(result);
        rep["timing_ms"] = ms;
        rep["version"] = kVersion;
        if (json_mode)
            out << rep.dump(2) << "\n";
        else
            render_plain(rep, out, 0);
        return exit_code;
    }
};

Json ideal_to_json(const Ideal& ideal) {
    Json a = Json::array();
    for (const auto& g : ideal.generators) a.push_back(print_poly(g));
    return a;
}

std::vector<GaussianRational> parse_point(const std::string& text) {
    std::vector<GaussianRational> coords;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ',')) coords.push_back(parse_gaussian(cur));
    return coords;
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ',')) {
        if (!cur.empty()) out.push_back(cur);
    }
    return out;
}

HermitianPoly hermitian_from_file(const std::string& path, bool take_re) {
    PolyFile pf = read_poly_file(path);
    if (take_re) return re_part(pf.poly);
    return make_hermitian(pf.poly);
}

CatalogParams parse_normal_form_params(const std::vector<std::string>& tokens) {
    CatalogParams p;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
        const std::string& t = tokens[i];
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw domain_error("normal-form parameter must look like k=2, got '" + t + "'");
        std::string key = t.substr(0, eq);
        std::string val = t.substr(eq + 1);
        if (key == "k")
            p.k = std::stoi(val);
        else if (key == "q")
            p.q = std::stoi(val);
        else if (key == "r")
            p.r = std::stoi(val);
        else if (key == "lambda")
            p.lambda = Rational(val);
        else
            throw domain_error("unknown normal-form parameter '" + key + "'");
    }
    return p;
}

std::vector<std::string> tokenize(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string t;
    while (in >> t) out.push_back(t);
    if (out.size() == 1 && out[0].find(',') != std::string::npos) return split_csv(out[0]);
    return out;
}

Json ils_report_to_json(const IlsReport& rep) {
    Json r;
    r["in_I2"] = rep.in_I2;
    r["truncated_dims_from_N3"] = rep.truncated_dims;
    if (rep.c_value) {
        r["c"] = *rep.c_value;
        r["stabilized_at"] = *rep.stabilized_at;
    } else {
        r["c"] = "not stabilized by bound";
    }
    if (rep.is_ils)
        r["is_ils"] = *rep.is_ils;
    else
        r["is_ils"] = "unknown";
    r["window"] = rep.window;
    r["degree_cap"] = rep.cap;
    return r;
}

// --------------------------------------------------------------------------
// subcommand bodies
// --------------------------------------------------------------------------

int cmd_check_levi(const std::string& file, bool take_re, const Emitter& em, std::ostream& out) {
    HermitianPoly F = hermitian_from_file(file, take_re);
    LeviFlatReport rep = is_levi_flat(F);
    Json result;
    result["is_levi_flat"] = rep.is_levi_flat;
    result["normalization"] = gaussian_to_string(F.normalization);
    result["assumption"] = "F is assumed irreducible (not checked)";
    if (!rep.is_levi_flat) {
        result["witness_coefficient"] = print_poly(*rep.witness);
        std::string basis;
        for (VarIndex v : rep.witness_basis) basis += (basis.empty() ? "d" : "^d") + F.space()->name(v);
        result["witness_covectors"] = basis;
        result["obstruction_degree"] = rep.obstruction_degree;
    }
    return em.emit("check-levi", Json{{"file", file}, {"F", print_poly(F.poly)}},
                   std::move(result), out, rep.is_levi_flat ? 0 : 1);
}

int cmd_complexify(const std::string& file, bool take_re, const Emitter& em, std::ostream& out) {
    HermitianPoly F = hermitian_from_file(file, take_re);
    ComplexifiedPoly Fc = complexify(F);
    HermitianPoly back = diagonal_restrict(Fc);
    Json result;
    result["F"] = print_poly(F.poly);
    result["F_C"] = print_poly(Fc.poly);
    result["space"] = Fc.space()->names();
    result["diagonal_restrict_roundtrip"] = back.poly == F.poly;
    return em.emit("complexify", Json{{"file", file}}, std::move(result), out, 0);
}

int cmd_sing(const std::string& file, bool take_re, bool eta, const Emitter& em,
             std::ostream& out) {
    HermitianPoly F = hermitian_from_file(file, take_re);
    ComplexifiedPoly Fc = complexify(F);
    Ideal sing = sing_ideal(Fc);
    Json result;
    result["generators"] = ideal_to_json(sing);
    try {
        result["algebraic_dimension"] = ideal_dimension(sing);
    } catch (const empty_variety_error&) {
        result["algebraic_dimension"] = "empty (the ideal contains a unit)";
    }
    if (eta) {
        EtaComponents comps = sing_eta_components(Fc);
        Json e;
        e["X1"] = ideal_to_json(comps.X1);
        e["X2"] = ideal_to_json(comps.X2);
        e["side_conditions"] = comps.side_conditions;
        int hyp_dim = static_cast<int>(Fc.space()->size()) - 1;
        try {
            e["X1_codim_in_hypersurface"] = hyp_dim - ideal_dimension(comps.X1);
        } catch (const empty_variety_error&) {
            e["X1_codim_in_hypersurface"] = "empty";
        }
        result["eta_components"] = std::move(e);
    }
    return em.emit("sing", Json{{"file", file}, {"F", print_poly(F.poly)}}, std::move(result),
                   out, 0);
}

int cmd_segre(const std::string& file, bool take_re, const std::vector<std::string>& points,
              bool require_singular, const Emitter& em, std::ostream& out) {
    HermitianPoly F = hermitian_from_file(file, take_re);
    std::vector<std::vector<GaussianRational>> coords;
    for (const auto& p : points) coords.push_back(parse_point(p));
    Json rows = Json::array();
    if (require_singular) {
        auto scan = degenerate_locus_scan(F, coords);
        for (std::size_t k = 0; k < coords.size(); ++k) {
            SegreReport rep = segre_variety(F, coords[k]);
            rows.push_back(Json{{"point", points[k]},
                                {"variety", print_poly(rep.variety)},
                                {"degenerate", scan.at(k)}});
        }
    } else {
        for (std::size_t k = 0; k < coords.size(); ++k) {
            SegreReport rep = segre_variety(F, coords[k]);
            rows.push_back(Json{{"point", points[k]},
                                {"variety", print_poly(rep.variety)},
                                {"degenerate", rep.degenerate}});
        }
    }
    return em.emit("segre", Json{{"file", file}, {"F", print_poly(F.poly)}},
                   Json{{"points", std::move(rows)}}, out, 0);
}

int cmd_ils(const std::string& file, unsigned window, unsigned cap, const Emitter& em,
            std::ostream& out) {
    PolyFile pf = read_poly_file(file);
    Germ f = germ_from_paired(pf.poly);
    Json inputs{{"file", file}, {"germ", print_poly(f.poly)}, {"n", f.n}};
    if (!in_I2(f)) {
        Json result;
        result["in_I2"] = false;
        result["is_ils"] = false;
        result["note"] = "not a line singularity: some term has y-degree < 2";
        return em.emit("ils", std::move(inputs), std::move(result), out, 1);
    }
    Ideal tau = tau_ideal(f);
    IlsReport rep = codim_c(f, window, cap);
    Json result = ils_report_to_json(rep);
    result["tau_generators"] = ideal_to_json(tau);
    return em.emit("ils", std::move(inputs), std::move(result), out,
                   rep.is_ils && *rep.is_ils ? 0 : 1);
}

int cmd_classify(const std::string& file, const Emitter& em, std::ostream& out) {
    PolyFile pf = read_poly_file(file);
    Germ f = germ_from_paired(pf.poly);
    auto cls = classify_exact(f);
    Json result;
    if (cls) {
        result["match"] = normal_form_display(cls->tag, cls->params);
        Json params;
        if (cls->params.k) params["k"] = *cls->params.k;
        if (cls->params.q) params["q"] = *cls->params.q;
        if (cls->params.r) params["r"] = *cls->params.r;
        result["params"] = std::move(params);
        result["transform"] = cls->transform;
    } else {
        result["match"] = nullptr;
        result["note"] = "no exact-form match in the search group";
    }
    return em.emit("classify", Json{{"file", file}, {"germ", print_poly(f.poly)}},
                   std::move(result), out, cls ? 0 : 1);
}

int cmd_catalog_build(const std::string& tag_str, const std::string& params_str, int n,
                      bool quadric, const Emitter& em, std::ostream& out) {
    std::vector<std::string> tokens{tag_str};
    for (const auto& t : tokenize(params_str)) tokens.push_back(t);
    CatalogParams params = parse_normal_form_params(tokens);
    Json result;
    if (quadric) {
        auto tag = quadric_tag_from_string(tag_str);
        if (!tag) throw domain_error("unknown quadric tag '" + tag_str + "'");
        if (tag == QuadricTag::Q02k && !params.k) params.k = 1;
        if (tag == QuadricTag::Q12lambda && !params.lambda) params.lambda = Rational(1, 2);
        HermitianPoly F = build_quadric(*tag, params, n);
        result["name"] = quadric_display(*tag, params, n);
        result["F"] = print_poly(F.poly);
        result["normalization"] = gaussian_to_string(F.normalization);
        result["singular_set"] = quadric_singular_set(*tag, params, n);
    } else {
        auto tag = normal_form_tag_from_string(tag_str);
        if (!tag) throw domain_error("unknown normal form tag '" + tag_str + "'");
        Germ g = build_normal_form(*tag, params, n);
        result["name"] = normal_form_display(*tag, params);
        result["germ"] = print_poly(g.poly);
    }
    return em.emit("catalog build",
                   Json{{"tag", tag_str}, {"params", params_str}, {"n", n}}, std::move(result),
                   out, 0);
}

int cmd_catalog_verify(int n, unsigned cap, const Emitter& em, std::ostream& out) {
    bool all_ok = true;
    Json rows = Json::array();
    for (const auto& row : table1_rows()) {
        int use_n = std::max(n, row.min_n);
        Germ P = build_normal_form(row.tag, row.smallest, use_n);
        HermitianPoly F = re_part(inject_germ(P, VarSpace::paired(P.space()->names())));
        Json r;
        r["row"] = normal_form_display(row.tag, row.smallest);
        r["germ"] = print_poly(P.poly);
        bool flat = is_levi_flat(F).is_levi_flat;
        r["levi_flat"] = flat;
        int dim = ideal_dimension(sing_ideal(F));
        r["sing_dimension"] = dim;
        IlsReport ils = codim_c(P, 2, cap);
        if (ils.c_value) {
            r["c"] = *ils.c_value;
        } else {
            r["c"] = "not stabilized";
        }
        bool ok = flat && dim == 2 && ils.c_value.has_value();
        r["ok"] = ok;
        all_ok = all_ok && ok;
        rows.push_back(std::move(r));
    }
    Json quadrics = Json::array();
    for (const auto& row : table2_rows()) {
        HermitianPoly F = build_quadric(row.tag, row.default_params, n);
        Json r;
        r["row"] = quadric_display(row.tag, row.default_params, n);
        r["F"] = print_poly(F.poly);
        bool flat = is_levi_flat(F).is_levi_flat;
        r["levi_flat"] = flat;
        r["singular_set"] = quadric_singular_set(row.tag, row.default_params, n);
        r["ok"] = flat;
        all_ok = all_ok && flat;
        quadrics.push_back(std::move(r));
    }
    Json result;
    result["table1"] = std::move(rows);
    result["table2"] = std::move(quadrics);
    result["all_ok"] = all_ok;
    return em.emit("catalog verify", Json{{"n", n}}, std::move(result), out, all_ok ? 0 : 1);
}

int cmd_blowup(const std::string& file, bool take_re, const std::string& center_csv,
               const std::string& names_csv, const std::string& exceptional,
               const std::string& nf, const Emitter& em, std::ostream& out) {
    HermitianPoly F = hermitian_from_file(file, take_re);
    ComplexifiedPoly Fc = complexify(F);
    std::vector<std::string> center = split_csv(center_csv);
    if (center.empty()) throw domain_error("blow-up needs a nonempty --center list");

    std::vector<std::string> names;
    if (!names_csv.empty()) {
        names = split_csv(names_csv);
    } else if (center.size() == 4) {
        names = {"t", "s", "u", "v"};
    } else {
        for (std::size_t i = 0; i + 1 < center.size(); ++i)
            names.push_back("t" + std::to_string(i + 1));
        names.push_back("u");
    }
    std::size_t exc_pos;
    if (!exceptional.empty()) {
        auto it = std::find(center.begin(), center.end(), exceptional);
        if (it == center.end())
            throw domain_error("--exceptional must name one of the center variables");
        exc_pos = static_cast<std::size_t>(it - center.begin());
    } else {
        exc_pos = center.size() == 4 ? 2 : center.size() - 1;
    }

    BlowupChart chart = BlowupChart::make(Fc.space(), center, names, exc_pos);
    StrictTransform st = strict_transform(chart, Fc.poly);
    AlphaBeta ab = alpha_beta(Fc);
    StrictTransformForm sf = strict_transform_form(chart, ab.alpha);
    Ideal sing = transform_singular_ideal(chart, sf.transform, st.transform);

    // E ∩ M~ : substitute u = 0 in the strict transform
    std::vector<Poly> storage;
    for (VarIndex v = 0; v < chart.chart_space()->size(); ++v) {
        if (v == chart.exceptional_var())
            storage.push_back(Poly::zero(chart.chart_space()));
        else
            storage.push_back(Poly::variable(chart.chart_space(), v));
    }
    std::vector<const Poly*> ptrs;
    for (const auto& q : storage) ptrs.push_back(&q);
    Poly trace = st.transform.substitute(ptrs);

    Json result;
    result["chart_space"] = chart.chart_space()->names();
    result["exceptional"] = chart.exceptional_name();
    result["strict_transform"] = print_poly(st.transform);
    result["multiplicity"] = st.multiplicity;
    result["exceptional_trace"] = print_poly(trace);
    result["alpha"] = print_form(ab.alpha);
    result["alpha_transform"] = print_form(sf.transform);
    result["alpha_multiplicity"] = sf.multiplicity;
    result["singular_ideal"] = ideal_to_json(sing);

    // with a declared normal form, split off H_C and report the residue
    // H1 = pullback(H_C)/u^3 of the transformed-equation shape
    if (!nf.empty()) {
        std::vector<std::string> tokens = tokenize(nf);
        auto tag = normal_form_tag_from_string(tokens.empty() ? "" : tokens[0]);
        if (!tag) throw domain_error("unknown normal form tag in --normal-form");
        CatalogParams params = parse_normal_form_params(tokens);
        int n = static_cast<int>(F.space()->holo_count()) - 1;
        Germ P = build_normal_form(*tag, params, n);
        Poly Pc = Fc.lift(inject_germ(P, F.space()));
        GaussianRational half(Rational(1, 2));
        Poly Hc = Fc.poly - Pc.scaled(half) - Fc.mirror(Pc).scaled(half);
        result["H_C"] = print_poly(Hc);
        AlphaBeta split_ab = alpha_beta(Fc, ComplexSplit{Pc, Hc});
        result["theta1"] = print_form(split_ab.theta1);
        try {
            result["H1"] = print_poly(h_one(chart, Hc));
        } catch (const domain_error& e) {
            result["H1"] = std::string("error: ") + e.what();
        }
    }
    return em.emit("blowup",
                   Json{{"file", file}, {"center", center_csv}, {"F_C", print_poly(Fc.poly)}},
                   std::move(result), out, 0);
}

int cmd_check_theorem(const std::string& file, bool take_re, const std::string& nf,
                      const Emitter& em, std::ostream& out) {
    HermitianPoly F = hermitian_from_file(file, take_re);
    std::vector<std::string> tokens = tokenize(nf);
    if (tokens.empty()) throw domain_error("--normal-form needs a tag, e.g. 'J k=2'");
    auto tag = normal_form_tag_from_string(tokens[0]);
    if (!tag) throw domain_error("unknown normal form tag '" + tokens[0] + "'");
    CatalogParams params = parse_normal_form_params(tokens);
    int n = static_cast<int>(F.space()->holo_count()) - 1;
    Germ P = build_normal_form(*tag, params, n);
    TheoremReport rep = check_theorem_hypotheses(F, P);
    Json result;
    result["P"] = print_poly(P.poly);
    result["H"] = print_poly(rep.H);
    result["H_vanishes_on_line"] = rep.h_vanishes_on_line;
    result["jet_condition"] = rep.jet_condition;
    result["deg_P"] = rep.deg_P;
    result["deg_ambiguous"] = rep.deg_ambiguous;
    result["is_levi_flat"] = rep.levi.is_levi_flat;
    result["theorem"] = rep.theorem;
    result["all_hypotheses"] = rep.all_hypotheses;
    result["conclusion"] = rep.conclusion;
    bool pass = rep.all_hypotheses && rep.theorem != "none";
    return em.emit("check-theorem-a", Json{{"file", file}, {"normal_form", nf}},
                   std::move(result), out, pass ? 0 : 1);
}

int cmd_branch(const std::string& file, bool take_re, const std::string& g_expr,
               const Emitter& em, std::ostream& out) {
    HermitianPoly F = hermitian_from_file(file, take_re);
    Poly g = parse_poly(ExprSource{g_expr, F.space()});
    bool member = branch_in_M(F, g);
    Json result;
    result["g"] = print_poly(g);
    result["contained"] = member;
    result["note"] = member ? "membership certificate: {g=0} is contained in M"
                            : "inconclusive: the membership test is sufficient, not necessary";
    return em.emit("branch", Json{{"file", file}, {"g", g_expr}}, std::move(result), out,
                   member ? 0 : 1);
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"leviscope: exact symbolic checks for Levi-flat hypersurfaces with line singularities"};
    app.set_version_flag("--version", std::string("leviscope ") + kVersion);
    bool json_mode = false;
    app.add_flag("--json", json_mode, "machine-readable JSON report");

    std::string file, points_file;
    bool take_re = false;

    auto* levi = app.add_subcommand("check-levi", "decide Levi-flatness of {F=0}");
    levi->add_option("file", file)->required();
    levi->add_flag("--re", take_re, "interpret the file as holomorphic P and use Re(P)");

    auto* cpx = app.add_subcommand("complexify", "complexify F(z,~z) into F_C(z,w)");
    cpx->add_option("file", file)->required();
    cpx->add_flag("--re", take_re);

    bool eta = false;
    auto* sing = app.add_subcommand("sing", "singular-set ideal of M_C and its dimension");
    sing->add_option("file", file)->required();
    sing->add_flag("--re", take_re);
    sing->add_flag("--eta-components", eta, "also report X1/X2 of Sing(eta_C)");

    std::vector<std::string> points;
    bool require_singular = false;
    auto* segre = app.add_subcommand("segre", "Segre variety at rational points");
    segre->add_option("file", file)->required();
    segre->add_option("--point", points, "comma-separated coordinates, repeatable")->required();
    segre->add_flag("--re", take_re);
    segre->add_flag("--require-singular", require_singular,
                    "check the points lie on Sing(M) first (scan semantics)");

    unsigned window = 2;
    unsigned cap = env_degree_cap();
    auto* ils = app.add_subcommand("ils", "line-singularity invariants: I^2, tau, c");
    ils->add_option("file", file)->required();
    ils->add_option("--window", window, "stabilization window (default 2)");
    ils->add_option("--cap", cap, "truncation degree cap");

    auto* classify = app.add_subcommand("classify", "exact-form match against Table 1");
    classify->add_option("file", file)->required();

    auto* catalog = app.add_subcommand("catalog", "catalog operations");
    int cat_n = 3;
    auto* verify = catalog->add_subcommand("verify", "run the Table 1 + Table 2 sweep");
    verify->add_option("--n", cat_n, "coordinate dimension parameter (default 3)");
    std::string tag_str, params_str;
    bool quadric = false;
    auto* build = catalog->add_subcommand("build", "print a catalog normal form");
    build->add_option("tag", tag_str)->required();
    build->add_option("--params", params_str, "e.g. 'k=2' or 'q=3,r=3' or 'lambda=1/2'");
    build->add_option("--n", cat_n);
    build->add_flag("--quadric", quadric, "Table 2 quadric instead of a Table 1 germ");
    catalog->require_subcommand(1);

    std::string center_csv, names_csv, exceptional, blowup_nf;
    auto* blowup = app.add_subcommand("blowup", "strict transform in one blow-up chart");
    blowup->add_option("file", file)->required();
    blowup->add_option("--center", center_csv, "center variables, e.g. y1,y2,w1,w2")->required();
    blowup->add_option("--names", names_csv, "chart variable names (default t,s,u,v)");
    blowup->add_option("--exceptional", exceptional, "center variable carrying u");
    blowup->add_option("--normal-form", blowup_nf,
                       "split F_C = Re(P)_C + H_C and report H1 = pullback(H_C)/u^3");
    blowup->add_flag("--re", take_re);

    std::string nf;
    auto* thm = app.add_subcommand("check-theorem-a", "verify normal-form hypotheses for F");
    thm->add_option("file", file)->required();
    thm->add_option("--normal-form", nf, "e.g. 'A' or 'J k=2'")->required();
    thm->add_flag("--re", take_re);

    std::string g_expr;
    auto* branch = app.add_subcommand("branch", "sufficient branch-containment test {g=0} in M");
    branch->add_option("file", file)->required();
    branch->add_option("--g", g_expr, "holomorphic polynomial")->required();
    branch->add_flag("--re", take_re);

    app.require_subcommand(1);

    std::vector<const char*> argv;
    argv.push_back("leviscope");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    Emitter em{json_mode};
    try {
        if (levi->parsed()) return cmd_check_levi(file, take_re, em, out);
        if (cpx->parsed()) return cmd_complexify(file, take_re, em, out);
        if (sing->parsed()) return cmd_sing(file, take_re, eta, em, out);
        if (segre->parsed()) return cmd_segre(file, take_re, points, require_singular, em, out);
        if (ils->parsed()) return cmd_ils(file, window, cap, em, out);
        if (classify->parsed()) return cmd_classify(file, em, out);
        if (catalog->parsed()) {
            if (verify->parsed()) return cmd_catalog_verify(cat_n, cap, em, out);
            return cmd_catalog_build(tag_str, params_str, cat_n, quadric, em, out);
        }
        if (blowup->parsed())
            return cmd_blowup(file, take_re, center_csv, names_csv, exceptional, blowup_nf, em,
                              out);
        if (thm->parsed()) return cmd_check_theorem(file, take_re, nf, em, out);
        if (branch->parsed()) return cmd_branch(file, take_re, g_expr, em, out);
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace leviscope
