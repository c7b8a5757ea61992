#include "leviscope/ils.hpp"

#include <algorithm>
#include <numeric>

#include "leviscope/expr_io.hpp"

namespace leviscope {

VarSpacePtr germ_space(int n) {
    if (n < 1) throw domain_error("germ space needs n >= 1");
    std::vector<std::string> names{"x"};
    for (int j = 1; j <= n; ++j) names.push_back("y" + std::to_string(j));
    return VarSpace::plain(std::move(names));
}

Germ make_germ(Poly p) {
    const VarSpace& sp = *p.space();
    if (sp.has_pairing()) throw domain_error("germ space must be plain (x, y1..yn)");
    if (sp.size() < 2 || sp.name(0) != "x")
        throw domain_error("germ space must be (x, y1..yn)");
    for (std::size_t j = 1; j < sp.size(); ++j)
        if (sp.name(static_cast<VarIndex>(j)) != "y" + std::to_string(j))
            throw domain_error("germ space must be (x, y1..yn)");
    int n = static_cast<int>(sp.size()) - 1;
    return Germ{std::move(p), n};
}

Germ germ_from_paired(const Poly& p) {
    const VarSpace& sp = *p.space();
    if (!sp.has_pairing()) return make_germ(p);
    if (!holomorphic_only(p))
        throw domain_error("germ must not mention conjugated variables");
    int n = static_cast<int>(sp.holo_count()) - 1;
    auto target = germ_space(n);
    std::vector<VarIndex> map(sp.size(), 0);
    for (VarIndex v = 0; v < sp.holo_count(); ++v) map[v] = v;
    return make_germ(p.rename(target, map, false));
}

Poly inject_germ(const Germ& f, const VarSpacePtr& paired) {
    const VarSpace& sp = *f.space();
    std::vector<VarIndex> map(sp.size());
    for (VarIndex v = 0; v < sp.size(); ++v) {
        auto t = paired->find(sp.name(v));
        if (!t) throw space_mismatch_error("target space lacks variable " + sp.name(v));
        map[v] = *t;
    }
    return f.poly.rename(paired, map, false);
}

bool in_I2(const Germ& f) {
    std::vector<VarIndex> yvars;
    for (int j = 1; j <= f.n; ++j) yvars.push_back(static_cast<VarIndex>(j));
    for (const auto& [m, c] : f.poly.terms())
        if (m.degree_over(yvars) < 2) return false;
    return true;
}

Ideal i2_ideal(const VarSpacePtr& space, int n) {
    std::vector<VarIndex> y;
    for (int j = 1; j <= n; ++j) {
        auto v = space->find("y" + std::to_string(j));
        if (!v) throw domain_error("i2_ideal: space lacks variable y" + std::to_string(j));
        y.push_back(*v);
    }
    std::vector<Poly> gens;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            gens.push_back(Poly::term(space, Monomial::var(y[i]) * Monomial::var(y[j]),
                                      GaussianRational(1)));
    return Ideal::make(space, std::move(gens));
}

Ideal tau_ideal(const Germ& f) {
    if (f.poly.is_zero()) throw domain_error("tau_ideal: zero germ");
    if (!in_I2(f)) throw domain_error("tau_ideal: germ is not in I^2");
    const auto& space = f.space();
    std::vector<Poly> gens;
    Poly fx = f.poly.derivative(0);
    if (!fx.is_zero())
        for (int v = 0; v <= f.n; ++v) {
            Poly g = fx * Poly::variable(space, static_cast<VarIndex>(v));
            if (!g.is_zero()) gens.push_back(std::move(g));
        }
    for (int j = 1; j <= f.n; ++j) {
        Poly fy = f.poly.derivative(static_cast<VarIndex>(j));
        if (fy.is_zero()) continue;
        for (int i = 1; i <= f.n; ++i)
            gens.push_back(fy * Poly::variable(space, static_cast<VarIndex>(i)));
    }
    return Ideal::make(space, std::move(gens));
}

IlsReport codim_c(const Germ& f, unsigned window, unsigned cap, const Limits& limits) {
    IlsReport rep;
    rep.window = window;
    rep.cap = cap;
    rep.in_I2 = in_I2(f);
    if (!rep.in_I2) throw domain_error("codim_c: germ is not in I^2");
    Ideal tau = tau_ideal(f);
    Ideal i2 = i2_ideal(f.space(), f.n);
    for (unsigned N = 3; N <= cap; ++N)
        rep.truncated_dims.push_back(truncated_quotient_dim(i2, tau, N, limits));
    for (std::size_t idx = 0; idx + window < rep.truncated_dims.size(); ++idx) {
        bool stable = true;
        for (std::size_t j = 1; j <= window; ++j)
            if (rep.truncated_dims[idx + j] != rep.truncated_dims[idx]) {
                stable = false;
                break;
            }
        if (stable) {
            rep.c_value = rep.truncated_dims[idx];
            rep.stabilized_at = static_cast<unsigned>(3 + idx);
            rep.is_ils = true;
            break;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Table 1
// ---------------------------------------------------------------------------

const std::vector<NormalFormEntry>& table1_rows() {
    static const std::vector<NormalFormEntry> rows = {
        {NormalFormTag::A, "A", "A_oo", "", 1, {}},
        {NormalFormTag::D, "D", "D_oo", "", 2, {}},
        {NormalFormTag::J, "J", "J_{k,oo}", "k>=2", 2, {.k = 2}},
        {NormalFormTag::Tk2, "Tk2", "T_{oo,k,2}", "k>=4", 2, {.k = 4}},
        {NormalFormTag::Z, "Z", "Z_{k,oo}", "k>=1", 2, {.k = 1}},
        {NormalFormTag::W1, "W1", "W_{1,oo}", "", 2, {}},
        {NormalFormTag::Tqr, "Tqr", "T_{oo,q,r}", "q>=r>=3", 3, {.q = 3, .r = 3}},
        {NormalFormTag::Qk, "Qk", "Q_{k,oo}", "k>=2", 3, {.k = 2}},
        {NormalFormTag::S1, "S1", "S_{1,oo}", "", 3, {}},
    };
    return rows;
}

namespace {

Poly y_tail(const VarSpacePtr& sp, int from, int n) {
    Poly p = Poly::zero(sp);
    for (int j = from; j <= n; ++j)
        p.add_term(Monomial::var(static_cast<VarIndex>(j), 2), GaussianRational(1));
    return p;
}

Poly mono(const VarSpacePtr& sp, std::initializer_list<std::pair<int, int>> ve) {
    Monomial m;
    for (auto [v, e] : ve) m = m * Monomial::var(static_cast<VarIndex>(v), static_cast<unsigned>(e));
    return Poly::term(sp, m, GaussianRational(1));
}

int require_k(const CatalogParams& p, int min, const char* row) {
    if (!p.k) throw parameter_error(std::string(row) + ": parameter k required");
    if (*p.k < min)
        throw parameter_error(std::string(row) + ": k must be >= " + std::to_string(min));
    return *p.k;
}

}  // namespace

Germ build_normal_form(NormalFormTag tag, const CatalogParams& params, int n) {
    auto row = std::find_if(table1_rows().begin(), table1_rows().end(),
                            [&](const NormalFormEntry& e) { return e.tag == tag; });
    if (n < row->min_n)
        throw parameter_error(row->display + " requires n >= " + std::to_string(row->min_n));
    auto sp = germ_space(n);
    Poly p = Poly::zero(sp);
    switch (tag) {
        case NormalFormTag::A:
            p = y_tail(sp, 1, n);
            break;
        case NormalFormTag::D:
            p = mono(sp, {{0, 1}, {1, 2}}) + y_tail(sp, 2, n);
            break;
        case NormalFormTag::J: {
            int k = require_k(params, 2, "J_{k,oo}");
            p = mono(sp, {{0, k}, {1, 2}}) + mono(sp, {{1, 3}}) + y_tail(sp, 2, n);
            break;
        }
        case NormalFormTag::Tk2: {
            int k = require_k(params, 4, "T_{oo,k,2}");
            p = mono(sp, {{0, 2}, {1, 2}}) + mono(sp, {{1, k}}) + y_tail(sp, 2, n);
            break;
        }
        case NormalFormTag::Z: {
            int k = require_k(params, 1, "Z_{k,oo}");
            p = mono(sp, {{0, 1}, {1, 3}}) + mono(sp, {{0, k + 2}, {1, 2}}) + y_tail(sp, 2, n);
            break;
        }
        case NormalFormTag::W1:
            p = mono(sp, {{0, 3}, {1, 2}}) + mono(sp, {{1, 4}}) + y_tail(sp, 2, n);
            break;
        case NormalFormTag::Tqr: {
            if (!params.q || !params.r)
                throw parameter_error("T_{oo,q,r}: parameters q and r required");
            int q = *params.q, r = *params.r;
            if (!(q >= r && r >= 3)) throw parameter_error("T_{oo,q,r}: need q >= r >= 3");
            p = mono(sp, {{0, 1}, {1, 1}, {2, 1}}) + mono(sp, {{1, q}}) + mono(sp, {{2, r}}) +
                y_tail(sp, 3, n);
            break;
        }
        case NormalFormTag::Qk: {
            int k = require_k(params, 2, "Q_{k,oo}");
            p = mono(sp, {{0, k}, {1, 2}}) + mono(sp, {{1, 3}}) + mono(sp, {{0, 1}, {2, 2}}) +
                y_tail(sp, 3, n);
            break;
        }
        case NormalFormTag::S1:
            p = mono(sp, {{0, 2}, {1, 2}}) + mono(sp, {{1, 2}, {2, 1}}) +
                mono(sp, {{0, 1}, {2, 2}}) + y_tail(sp, 3, n);
            break;
    }
    return Germ{std::move(p), n};
}

std::optional<NormalFormTag> normal_form_tag_from_string(const std::string& s) {
    for (const auto& row : table1_rows())
        if (row.cli_name == s) return row.tag;
    return std::nullopt;
}

std::string normal_form_display(NormalFormTag tag, const CatalogParams& params) {
    switch (tag) {
        case NormalFormTag::A: return "A_oo";
        case NormalFormTag::D: return "D_oo";
        case NormalFormTag::J: return "J_{" + std::to_string(params.k.value_or(0)) + ",oo}";
        case NormalFormTag::Tk2: return "T_{oo," + std::to_string(params.k.value_or(0)) + ",2}";
        case NormalFormTag::Z: return "Z_{" + std::to_string(params.k.value_or(0)) + ",oo}";
        case NormalFormTag::W1: return "W_{1,oo}";
        case NormalFormTag::Tqr:
            return "T_{oo," + std::to_string(params.q.value_or(0)) + "," +
                   std::to_string(params.r.value_or(0)) + "}";
        case NormalFormTag::Qk: return "Q_{" + std::to_string(params.k.value_or(0)) + ",oo}";
        case NormalFormTag::S1: return "S_{1,oo}";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Table 2
// ---------------------------------------------------------------------------

const std::vector<QuadricEntry>& table2_rows() {
    static const std::vector<QuadricEntry> rows = {
        {QuadricTag::Q02k, "Q0", "Q_{0,2k}", "C^(n-k)", {.k = 1}},
        {QuadricTag::Q11, "Q11", "Q_{1,1}", "empty", {}},
        {QuadricTag::Q12lambda, "Q12", "Q^lambda_{1,2}", "C^(n-1)", {.lambda = Rational(1, 2)}},
        {QuadricTag::Q22, "Q22", "Q_{2,2}", "R^2 x C^(n-2)", {}},
        {QuadricTag::Q24, "Q24", "Q_{2,4}", "C^(n-2)", {}},
    };
    return rows;
}

namespace {
VarSpacePtr quadric_space(int n) {
    if (n < 1) throw parameter_error("quadric space needs n >= 1");
    std::vector<std::string> names;
    for (int j = 1; j <= n; ++j) names.push_back("z" + std::to_string(j));
    return VarSpace::paired(std::move(names));
}
}  // namespace

HermitianPoly build_quadric(QuadricTag tag, const CatalogParams& params, int n) {
    auto sp = quadric_space(n);
    auto zvar = [&](int j) { return Poly::variable(sp, static_cast<VarIndex>(j - 1)); };
    auto zbar = [&](int j) { return Poly::variable(sp, static_cast<VarIndex>(n + j - 1)); };
    switch (tag) {
        case QuadricTag::Q02k: {
            int k = params.k.value_or(1);
            if (k < 1 || k > n) throw parameter_error("Q_{0,2k}: need 1 <= k <= n");
            Poly h = Poly::zero(sp);
            for (int j = 1; j <= k; ++j) h += zvar(j) * zvar(j);
            return re_part(h);
        }
        case QuadricTag::Q11: {
            Poly p = zvar(1) * zvar(1) + (zvar(1) * zbar(1)).scaled(GaussianRational(2)) +
                     zbar(1) * zbar(1);
            return make_hermitian(p);
        }
        case QuadricTag::Q12lambda: {
            if (!params.lambda) throw parameter_error("Q^lambda_{1,2}: parameter lambda required");
            GaussianRational two_lambda(Rational(2) * *params.lambda);
            Poly p = zvar(1) * zvar(1) + (zvar(1) * zbar(1)).scaled(two_lambda) +
                     zbar(1) * zbar(1);
            return make_hermitian(p);
        }
        case QuadricTag::Q22: {
            if (n < 2) throw parameter_error("Q_{2,2}: need n >= 2");
            Poly p = (zvar(1) + zbar(1)) * (zvar(2) + zbar(2));
            return make_hermitian(p);
        }
        case QuadricTag::Q24: {
            if (n < 2) throw parameter_error("Q_{2,4}: need n >= 2");
            Poly p = zvar(1) * zbar(2) - zbar(1) * zvar(2);
            return make_hermitian(p);  // anti-real; normalized by i
        }
    }
    throw parameter_error("unknown quadric tag");
}

std::optional<QuadricTag> quadric_tag_from_string(const std::string& s) {
    for (const auto& row : table2_rows())
        if (row.cli_name == s) return row.tag;
    return std::nullopt;
}

std::string quadric_display(QuadricTag tag, const CatalogParams& params, int /*n*/) {
    switch (tag) {
        case QuadricTag::Q02k: return "Q_{0," + std::to_string(2 * params.k.value_or(1)) + "}";
        case QuadricTag::Q11: return "Q_{1,1}";
        case QuadricTag::Q12lambda: {
            std::string l = params.lambda ? rational_to_string(*params.lambda) : "lambda";
            return "Q^" + l + "_{1,2}";
        }
        case QuadricTag::Q22: return "Q_{2,2}";
        case QuadricTag::Q24: return "Q_{2,4}";
    }
    return "?";
}

std::string quadric_singular_set(QuadricTag tag, const CatalogParams& params, int n) {
    switch (tag) {
        case QuadricTag::Q02k: return "C^" + std::to_string(n - params.k.value_or(1));
        case QuadricTag::Q11: return "empty";
        case QuadricTag::Q12lambda: return "C^" + std::to_string(n - 1);
        case QuadricTag::Q22: return "R^2 x C^" + std::to_string(n - 2);
        case QuadricTag::Q24: return "C^" + std::to_string(n - 2);
    }
    return "?";
}

// ---------------------------------------------------------------------------
// exact-form classifier
// ---------------------------------------------------------------------------

namespace {

Rational rational_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    Rational b = base;
    bool inv = e < 0;
    unsigned long n = static_cast<unsigned long>(inv ? -e : e);
    Rational acc(1);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    if (inv) acc = Rational(1) / acc;
    return acc;
}

struct MulEq {
    std::vector<long> ex;
    Rational rhs;
};

struct MulSolution {
    std::vector<Rational> values;
    std::vector<bool> even_root;  // sign-ambiguous unknowns
};

std::optional<MulSolution> solve_multiplicative(std::vector<MulEq> eqs, std::size_t nu) {
    std::vector<std::pair<std::size_t, MulEq>> pivots;
    std::vector<MulEq> work = std::move(eqs);
    for (std::size_t col = 0; col < nu; ++col) {
        std::size_t best = work.size();
        for (std::size_t r = 0; r < work.size(); ++r) {
            if (work[r].ex[col] == 0) continue;
            if (best == work.size() ||
                std::abs(work[r].ex[col]) < std::abs(work[best].ex[col]))
                best = r;
        }
        if (best == work.size()) continue;
        MulEq pivot = work[best];
        work.erase(work.begin() + static_cast<long>(best));
        long p = pivot.ex[col];
        std::vector<MulEq> next;
        for (auto& row : work) {
            if (row.ex[col] == 0) {
                next.push_back(std::move(row));
                continue;
            }
            long r = row.ex[col];
            MulEq combined;
            combined.ex.resize(nu);
            for (std::size_t j = 0; j < nu; ++j)
                combined.ex[j] = p * row.ex[j] - r * pivot.ex[j];
            combined.rhs = rational_pow(row.rhs, p) / rational_pow(pivot.rhs, r);
            bool all_zero =
                std::all_of(combined.ex.begin(), combined.ex.end(), [](long e) { return e == 0; });
            if (all_zero) {
                if (combined.rhs != 1) return std::nullopt;  // inconsistent
                continue;
            }
            next.push_back(std::move(combined));
        }
        work = std::move(next);
        pivots.emplace_back(col, std::move(pivot));
    }
    if (!work.empty()) return std::nullopt;  // leftover constraints (unreachable)

    MulSolution sol;
    sol.values.assign(nu, Rational(1));
    sol.even_root.assign(nu, false);
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        const auto& [col, eq] = *it;
        Rational value = eq.rhs;
        for (std::size_t j = 0; j < nu; ++j) {
            if (j == col || eq.ex[j] == 0) continue;
            value /= rational_pow(sol.values[j], eq.ex[j]);
        }
        long p = eq.ex[col];
        if (p < 0) {
            value = Rational(1) / value;
            p = -p;
        }
        auto root = rational_kth_root(value, static_cast<unsigned>(p));
        if (!root) return std::nullopt;
        sol.values[col] = *root;
        sol.even_root[col] = p % 2 == 0;
    }
    return sol;
}

/// c * f(a x, b1 y1, ..) with unknowns laid out (a, b1..bn, c).
Poly apply_diagonal(const Germ& f, const std::vector<Rational>& vals) {
    const auto& sp = f.space();
    std::vector<Poly> storage;
    storage.reserve(sp->size());
    for (VarIndex v = 0; v < sp->size(); ++v)
        storage.push_back(Poly::variable(sp, v).scaled(GaussianRational(vals[v])));
    std::vector<const Poly*> ptrs;
    for (const auto& q : storage) ptrs.push_back(&q);
    return f.poly.substitute(ptrs).scaled(GaussianRational(vals[sp->size()]));
}

std::string describe_transform(const std::vector<int>& perm,
                               const std::vector<Rational>& vals, int n) {
    std::string s = "y-permutation (";
    for (int j = 1; j <= n; ++j) s += (j > 1 ? " " : "") + ("y" + std::to_string(j)) + "->y" + std::to_string(perm[j]);
    s += "); x scale " + rational_to_string(vals[0]);
    s += "; y scales (";
    for (int j = 1; j <= n; ++j) s += (j > 1 ? ", " : "") + rational_to_string(vals[j]);
    s += "); overall scale " + rational_to_string(vals[n + 1]);
    return s;
}

std::vector<CatalogParams> candidate_params(NormalFormTag tag, unsigned maxdeg) {
    std::vector<CatalogParams> out;
    int bound = static_cast<int>(maxdeg) + 1;
    switch (tag) {
        case NormalFormTag::A:
        case NormalFormTag::D:
        case NormalFormTag::W1:
        case NormalFormTag::S1:
            out.push_back({});
            break;
        case NormalFormTag::J:
            for (int k = 2; k <= bound; ++k) out.push_back({.k = k});
            break;
        case NormalFormTag::Tk2:
            for (int k = 4; k <= bound; ++k) out.push_back({.k = k});
            break;
        case NormalFormTag::Z:
            for (int k = 1; k + 2 <= bound; ++k) out.push_back({.k = k});
            break;
        case NormalFormTag::Tqr:
            for (int q = 3; q <= bound; ++q)
                for (int r = 3; r <= q; ++r) out.push_back({.q = q, .r = r});
            break;
        case NormalFormTag::Qk:
            for (int k = 2; k <= bound; ++k) out.push_back({.k = k});
            break;
    }
    return out;
}

}  // namespace

std::optional<Classification> classify_exact(const Germ& f) {
    if (!in_I2(f)) return std::nullopt;
    if (f.poly.is_zero()) return std::nullopt;
    if (f.n > 8) throw resource_limit_error("classify_exact: n too large for permutation search");
    const unsigned maxdeg = f.poly.total_degree();
    const std::size_t nu = static_cast<std::size_t>(f.n) + 2;  // a, b1..bn, c

    std::vector<int> perm(f.n + 1);
    for (const auto& row : table1_rows()) {
        if (f.n < row.min_n) continue;
        for (const auto& params : candidate_params(row.tag, maxdeg)) {
            Germ P = build_normal_form(row.tag, params, f.n);
            if (P.poly.term_count() != f.poly.term_count()) continue;
            if (P.poly.total_degree() != maxdeg) continue;
            // permutations of y-variables
            std::vector<int> ids(f.n);
            std::iota(ids.begin(), ids.end(), 1);
            do {
                for (int j = 1; j <= f.n; ++j) perm[j] = ids[j - 1];
                std::vector<VarIndex> map(f.space()->size());
                map[0] = 0;
                for (int j = 1; j <= f.n; ++j) map[j] = static_cast<VarIndex>(perm[j]);
                Poly g = f.poly.rename(f.space(), map, false);

                // support must match exactly
                bool support_ok = g.term_count() == P.poly.term_count();
                if (support_ok)
                    for (const auto& [m, c] : P.poly.terms())
                        if (g.coeff(m).is_zero()) {
                            support_ok = false;
                            break;
                        }
                if (!support_ok) continue;

                // multiplicative system  a^i * prod b^mu * c = coeff_P / coeff_g
                std::vector<MulEq> eqs;
                bool rational_ok = true;
                for (const auto& [m, cP] : P.poly.terms()) {
                    GaussianRational ratio = cP / g.coeff(m);
                    if (!ratio.is_real() || ratio.re == 0) {
                        rational_ok = false;
                        break;
                    }
                    MulEq eq;
                    eq.ex.assign(nu, 0);
                    eq.ex[0] = m.degree_of(0);
                    for (int j = 1; j <= f.n; ++j) eq.ex[j] = m.degree_of(static_cast<VarIndex>(j));
                    eq.ex[nu - 1] = 1;  // overall scale
                    eq.rhs = ratio.re;
                    eqs.push_back(std::move(eq));
                }
                if (!rational_ok) continue;

                auto sol = solve_multiplicative(eqs, nu);
                if (!sol) continue;

                // resolve sign ambiguities by exhaustive flips over even roots
                std::vector<std::size_t> flips;
                for (std::size_t j = 0; j < nu; ++j)
                    if (sol->even_root[j]) flips.push_back(j);
                if (flips.size() > 12) continue;
                Germ g_germ{g, f.n};
                for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << flips.size()); ++mask) {
                    std::vector<Rational> vals = sol->values;
                    for (std::size_t b = 0; b < flips.size(); ++b)
                        if (mask >> b & 1) vals[flips[b]] = -vals[flips[b]];
                    if (apply_diagonal(g_germ, vals) == P.poly) {
                        return Classification{row.tag, params,
                                              describe_transform(perm, vals, f.n)};
                    }
                }
            } while (std::next_permutation(ids.begin(), ids.end()));
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Theorem A / B hypotheses
// ---------------------------------------------------------------------------

TheoremReport check_theorem_hypotheses(const HermitianPoly& F, const Germ& P,
                                       const Limits& limits) {
    auto cls = classify_exact(P);
    if (!cls) throw domain_error("check_theorem_hypotheses: P is not a catalog normal form");

    TheoremReport rep;
    Poly Pinj = inject_germ(P, F.space());
    rep.H = F.poly - re_part(Pinj).poly;

    // (a) H(x, 0, ~x, 0) == 0
    const VarSpace& sp = *F.space();
    std::vector<Poly> storage;
    for (VarIndex v = 0; v < sp.size(); ++v) {
        const std::string& nm = sp.name(v);
        if (nm == "x" || nm == "~x")
            storage.push_back(Poly::variable(F.space(), v));
        else
            storage.push_back(Poly::zero(F.space()));
    }
    std::vector<const Poly*> ptrs;
    for (const auto& q : storage) ptrs.push_back(&q);
    rep.h_vanishes_on_line = rep.H.substitute(ptrs).is_zero();

    // (b) j^k(H) = 0 for k = deg(P), total degree
    rep.deg_P = P.poly.total_degree();
    bool homogeneous = true;
    for (const auto& [m, c] : P.poly.terms())
        if (m.total_degree() != rep.deg_P) homogeneous = false;
    rep.deg_ambiguous = !homogeneous;
    rep.jet_condition = true;
    for (const auto& [m, c] : rep.H.terms())
        if (m.total_degree() <= rep.deg_P) {
            rep.jet_condition = false;
            break;
        }

    // (c) Levi-flatness
    rep.levi = is_levi_flat(F, limits);

    if (P.n >= 3)
        rep.theorem = "A";
    else if (cls->tag == NormalFormTag::A && P.n == 2)
        rep.theorem = "B";
    else
        rep.theorem = "none";

    rep.all_hypotheses = rep.h_vanishes_on_line && rep.jet_condition && rep.levi.is_levi_flat;
    if (rep.all_hypotheses && rep.theorem != "none") {
        rep.conclusion = "hypotheses verified: a line-preserving biholomorphism carries M onto {Re(" +
                         normal_form_display(cls->tag, cls->params) + ") = 0}";
    } else if (rep.all_hypotheses) {
        rep.conclusion = "hypotheses hold, but no statement covers this row at n=" +
                         std::to_string(P.n);
    } else {
        rep.conclusion = "hypotheses not satisfied";
    }
    if (rep.deg_ambiguous)
        rep.conclusion +=
            "; note: P is not homogeneous, deg(P) taken as the total degree " +
            std::to_string(rep.deg_P);
    return rep;
}

std::vector<QuadricModel> quadric_models_for_line(int n) {
    if (n < 3) throw domain_error("quadric_models_for_line: n must be >= 3");
    std::vector<QuadricModel> out;
    if (n == 3) {
        out.push_back({QuadricTag::Q02k, {.k = 1}, "Q_{0,2}"});
        out.push_back({QuadricTag::Q24, {}, "Q_{2,4}"});
    } else {
        out.push_back({QuadricTag::Q02k, {.k = n - 1}, "Q_{0," + std::to_string(2 * (n - 1)) + "}"});
    }
    return out;
}

}  // namespace leviscope
