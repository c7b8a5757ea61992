#include "leviscope/groebner.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace leviscope {

Ideal Ideal::make(VarSpacePtr space, std::vector<Poly> gens, MonomialOrder order) {
    std::vector<Poly> kept;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        require_same_space(space, g.space(), "ideal");
        kept.push_back(std::move(g));
    }
    if (kept.empty()) throw domain_error("ideal requires at least one nonzero generator");
    return Ideal{std::move(space), std::move(kept), order};
}

namespace {

void check_terms(std::size_t n, const Limits& limits) {
    if (n > limits.max_terms)
        throw resource_limit_error("term-count cap exceeded (" +
                                   std::to_string(limits.max_terms) + ")");
}

void check_degree(unsigned d, const Limits& limits) {
    if (d > limits.max_degree)
        throw resource_limit_error("degree cap exceeded (" +
                                   std::to_string(limits.max_degree) + ")");
}

}  // namespace

DivModResult poly_divmod(const Poly& f, const std::vector<Poly>& divisors,
                         MonomialOrder order, const Limits& limits) {
    for (const auto& d : divisors) {
        require_same_space(f.space(), d.space(), "poly_divmod");
        if (d.is_zero()) throw domain_error("poly_divmod: zero divisor");
    }
    std::vector<std::pair<Monomial, GaussianRational>> lead;
    lead.reserve(divisors.size());
    for (const auto& d : divisors) lead.push_back(d.leading_term(order));

    DivModResult res;
    res.quotients.assign(divisors.size(), Poly::zero(f.space()));
    res.remainder = Poly::zero(f.space());
    Poly work = f;
    while (!work.is_zero()) {
        check_terms(work.term_count(), limits);
        auto [wm, wc] = work.leading_term(order);
        bool reduced = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            if (!lead[i].first.divides(wm)) continue;
            Monomial q = lead[i].first.divide_into(wm);
            GaussianRational c = wc / lead[i].second;
            res.quotients[i].add_term(q, c);
            work -= divisors[i].mul_term(q, c);
            reduced = true;
            break;
        }
        if (!reduced) {
            res.remainder.add_term(wm, wc);
            // move the term out of the working polynomial
            work -= Poly::term(f.space(), wm, wc);
        }
    }
    return res;
}

namespace {

/// Full reduction of f modulo basis; remainder only.
Poly reduce(const Poly& f, const std::vector<Poly>& basis, MonomialOrder order,
            const Limits& limits) {
    if (basis.empty()) return f;
    return poly_divmod(f, basis, order, limits).remainder;
}

Poly s_polynomial(const Poly& a, const Poly& b, MonomialOrder order) {
    auto [ma, ca] = a.leading_term(order);
    auto [mb, cb] = b.leading_term(order);
    Monomial l = ma.lcm(mb);
    Poly sa = a.mul_term(ma.divide_into(l), GaussianRational(1) / ca);
    Poly sb = b.mul_term(mb.divide_into(l), GaussianRational(1) / cb);
    return sa - sb;
}

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal, const Limits& limits) {
    const MonomialOrder order = ideal.order;
    std::vector<Poly> basis;
    std::size_t seeded_terms = 0;
    for (const auto& g : ideal.generators) {
        check_degree(g.total_degree(), limits);
        Poly r = reduce(g, basis, order, limits);
        if (!r.is_zero()) {
            seeded_terms += r.term_count();
            check_terms(seeded_terms, limits);
            basis.push_back(r.scaled(GaussianRational(1) / r.leading_term(order).second));
        }
    }

    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

    while (!pairs.empty()) {
        // prefer pairs with the smallest lcm degree
        auto best = pairs.begin();
        unsigned best_deg =
            basis[best->first].leading_term(order).first.lcm(basis[best->second].leading_term(order).first).total_degree();
        for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
            unsigned d = basis[it->first].leading_term(order).first.lcm(basis[it->second].leading_term(order).first).total_degree();
            if (d < best_deg) {
                best = it;
                best_deg = d;
            }
        }
        auto [i, j] = *best;
        pairs.erase(best);

        const Monomial& mi = basis[i].leading_term(order).first;
        const Monomial& mj = basis[j].leading_term(order).first;
        if (mi.coprime(mj)) continue;  // Buchberger's first criterion

        Poly s = s_polynomial(basis[i], basis[j], order);
        Poly r = reduce(s, basis, order, limits);
        if (r.is_zero()) continue;
        check_degree(r.total_degree(), limits);
        r = r.scaled(GaussianRational(1) / r.leading_term(order).second);
        basis.push_back(r);
        std::size_t t = basis.size() - 1;
        for (std::size_t k = 0; k < t; ++k) pairs.emplace_back(k, t);
        std::size_t total = 0;
        for (const auto& b : basis) total += b.term_count();
        check_terms(total, limits);
    }

    // minimalize: drop elements whose leading term another leading term divides
    std::vector<Poly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Monomial& mi = basis[i].leading_term(order).first;
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            const Monomial& mj = basis[j].leading_term(order).first;
            if (mj.divides(mi) && !(mi == mj && j > i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // tail-reduce each element against the others
    std::vector<Poly> reduced = minimal;
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        std::vector<Poly> others;
        for (std::size_t j = 0; j < reduced.size(); ++j)
            if (j != i) others.push_back(reduced[j]);
        Poly r = reduce(reduced[i], others, order, limits);
        reduced[i] = r.is_zero() ? r : r.scaled(GaussianRational(1) / r.leading_term(order).second);
    }
    std::erase_if(reduced, [](const Poly& p) { return p.is_zero(); });
    std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
        return cmp_monomial(a.leading_term(order).first, b.leading_term(order).first, order) < 0;
    });
    return GroebnerBasis{ideal, std::move(reduced), order};
}

bool ideal_member(const Poly& f, const GroebnerBasis& gb, const Limits& limits) {
    require_same_space(f.space(), gb.ideal.space, "ideal_member");
    if (f.is_zero()) return true;
    return reduce(f, gb.basis, gb.order, limits).is_zero();
}

bool ideal_member(const Poly& f, const Ideal& ideal, const Limits& limits) {
    return ideal_member(f, buchberger(ideal, limits), limits);
}

int ideal_dimension(const GroebnerBasis& gb) {
    std::vector<Monomial> leads;
    for (const auto& b : gb.basis) {
        auto [m, c] = b.leading_term(gb.order);
        if (m.is_one()) throw empty_variety_error("ideal contains a unit; the variety is empty");
        leads.push_back(m);
    }
    const std::size_t n = gb.ideal.space->size();
    if (n > 24) throw resource_limit_error("ideal_dimension: too many variables");
    int best = -1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        // S = variables in mask; independent iff no leading monomial is
        // supported entirely inside S
        bool independent = true;
        for (const auto& m : leads) {
            bool inside = true;
            for (const auto& [v, e] : m.entries())
                if (!(mask >> v & 1)) {
                    inside = false;
                    break;
                }
            if (inside) {
                independent = false;
                break;
            }
        }
        if (independent) best = std::max(best, static_cast<int>(__builtin_popcountll(mask)));
    }
    return best;
}

int ideal_dimension(const Ideal& ideal, const Limits& limits) {
    Ideal graded = ideal;
    graded.order = MonomialOrder::Grevlex;  // dimension needs a graded order
    return ideal_dimension(buchberger(graded, limits));
}

// ---------------------------------------------------------------------------
// truncated quotient dimension
// ---------------------------------------------------------------------------

namespace {

void enumerate_monomials(std::size_t nvars, unsigned max_deg, VarIndex v,
                         std::vector<Monomial::Entry>& current, unsigned used,
                         std::vector<Monomial>& out) {
    if (v == nvars) {
        out.emplace_back(current);
        return;
    }
    for (unsigned e = 0; e + used <= max_deg; ++e) {
        if (e > 0) current.emplace_back(static_cast<VarIndex>(v), e);
        enumerate_monomials(nvars, max_deg, v + 1, current, used + e, out);
        if (e > 0) current.pop_back();
    }
}

using SparseRow = std::vector<std::pair<std::size_t, GaussianRational>>;  // sorted by column

/// Reduce row against the pivot table (pivot column -> normalized row);
/// install it as a new pivot when nonzero. Returns true if rank grew.
bool eliminate(SparseRow row, std::map<std::size_t, SparseRow>& pivots) {
    while (!row.empty()) {
        std::size_t lead = row.back().first;  // largest column
        auto it = pivots.find(lead);
        if (it == pivots.end()) {
            GaussianRational inv = GaussianRational(1) / row.back().second;
            for (auto& [c, q] : row) q *= inv;
            pivots.emplace(lead, std::move(row));
            return true;
        }
        // row -= row.back * pivot
        GaussianRational factor = row.back().second;
        const SparseRow& p = it->second;
        SparseRow merged;
        merged.reserve(row.size() + p.size());
        auto a = row.begin();
        auto b = p.begin();
        while (a != row.end() && b != p.end()) {
            if (a->first < b->first) {
                merged.push_back(*a++);
            } else if (a->first > b->first) {
                merged.emplace_back(b->first, -(factor * b->second));
                ++b;
            } else {
                GaussianRational q = a->second - factor * b->second;
                if (!q.is_zero()) merged.emplace_back(a->first, std::move(q));
                ++a;
                ++b;
            }
        }
        while (a != row.end()) merged.push_back(*a++);
        while (b != p.end()) {
            merged.emplace_back(b->first, -(factor * b->second));
            ++b;
        }
        row = std::move(merged);
    }
    return false;
}

}  // namespace

int truncated_quotient_dim(const Ideal& numerator, const Ideal& denominator,
                           unsigned degree_bound, const Limits& limits) {
    require_same_space(numerator.space, denominator.space, "truncated_quotient_dim");
    if (degree_bound < 1) throw domain_error("truncated_quotient_dim: degree_bound must be >= 1");
    check_degree(degree_bound, limits);

    const std::size_t nvars = numerator.space->size();
    std::vector<Monomial> monos;
    {
        std::vector<Monomial::Entry> cur;
        enumerate_monomials(nvars, degree_bound - 1, 0, cur, 0, monos);
    }
    std::sort(monos.begin(), monos.end(),
              [](const Monomial& a, const Monomial& b) { return cmp_grevlex(a, b) < 0; });
    check_terms(monos.size(), limits);
    std::map<Monomial, std::size_t, GrevlexLess> index;
    for (std::size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);

    auto make_rows = [&](const Ideal& ideal, auto&& sink) {
        for (const auto& g : ideal.generators) {
            unsigned low = degree_bound;
            for (const auto& [m, c] : g.terms()) low = std::min(low, m.total_degree());
            if (low >= degree_bound) continue;
            unsigned room = degree_bound - 1 - low;  // max multiplier degree
            for (const auto& mult : monos) {
                if (mult.total_degree() > room) continue;
                SparseRow row;
                for (const auto& [m, c] : g.terms()) {
                    Monomial prod = mult * m;
                    if (prod.total_degree() >= degree_bound) continue;
                    row.emplace_back(index.at(prod), c);
                }
                if (row.empty()) continue;
                std::sort(row.begin(), row.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                sink(std::move(row));
            }
        }
    };

    std::map<std::size_t, SparseRow> pivots;
    int rank_den = 0;
    make_rows(denominator, [&](SparseRow r) {
        if (eliminate(std::move(r), pivots)) ++rank_den;
    });
    int extra = 0;
    make_rows(numerator, [&](SparseRow r) {
        if (eliminate(std::move(r), pivots)) ++extra;
    });
    return extra;
}

}  // namespace leviscope
