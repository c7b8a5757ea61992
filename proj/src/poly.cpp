#include "leviscope/poly.hpp"

namespace leviscope {

Poly Poly::constant(VarSpacePtr space, GaussianRational c) {
    Poly p(std::move(space));
    if (!c.is_zero()) p.terms_.emplace(Monomial(), std::move(c));
    return p;
}

Poly Poly::variable(VarSpacePtr space, VarIndex v, unsigned e) {
    Poly p(std::move(space));
    p.terms_.emplace(Monomial::var(v, e), GaussianRational(1));
    return p;
}

Poly Poly::term(VarSpacePtr space, Monomial m, GaussianRational c) {
    Poly p(std::move(space));
    if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

unsigned Poly::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

void Poly::add_term(const Monomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

const GaussianRational& Poly::coeff(const Monomial& m) const {
    static const GaussianRational zero{};
    auto it = terms_.find(m);
    return it == terms_.end() ? zero : it->second;
}

std::pair<Monomial, GaussianRational> Poly::leading_term(MonomialOrder order) const {
    if (terms_.empty()) throw domain_error("leading term of the zero polynomial");
    if (order == MonomialOrder::Grevlex) {
        auto it = terms_.rbegin();
        return {it->first, it->second};
    }
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (cmp_lex(it->first, best->first) > 0) best = it;
    return {best->first, best->second};
}

Poly Poly::operator-() const {
    Poly r(space_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    require_same_space(space_, o.space_, "poly add");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    require_same_space(space_, o.space_, "poly sub");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_space(a.space_, b.space_, "poly mul");
    Poly r(a.space_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Poly Poly::scaled(const GaussianRational& c) const {
    Poly r(space_);
    if (c.is_zero()) return r;
    for (const auto& [m, q] : terms_) r.terms_.emplace(m, q * c);
    return r;
}

Poly Poly::mul_term(const Monomial& m, const GaussianRational& c) const {
    Poly r(space_);
    if (c.is_zero()) return r;
    for (const auto& [mm, q] : terms_) r.terms_.emplace(mm * m, q * c);
    return r;
}

Poly Poly::derivative(VarIndex v) const {
    Poly r(space_);
    for (const auto& [m, c] : terms_) {
        unsigned e = m.degree_of(v);
        if (e == 0) continue;
        Monomial dm = Monomial::var(v).divide_into(m);
        r.add_term(dm, c * GaussianRational(static_cast<long>(e)));
    }
    return r;
}

Poly Poly::substitute(const std::vector<const Poly*>& images) const {
    if (images.size() != space_->size())
        throw domain_error("substitute: one image per variable required");
    VarSpacePtr target;
    for (const Poly* p : images) {
        if (!p) throw domain_error("substitute: missing image");
        if (!target)
            target = p->space();
        else
            require_same_space(target, p->space(), "substitute");
    }
    Poly r(target);
    for (const auto& [m, c] : terms_) {
        Poly t = Poly::constant(target, c);
        for (const auto& [v, e] : m.entries())
            for (unsigned k = 0; k < e; ++k) t = t * *images[v];
        r += t;
    }
    return r;
}

GaussianRational Poly::evaluate(const std::vector<GaussianRational>& point) const {
    if (point.size() != space_->size())
        throw domain_error("evaluate: one value per variable required");
    GaussianRational acc;
    for (const auto& [m, c] : terms_) {
        GaussianRational t = c;
        for (const auto& [v, e] : m.entries())
            for (unsigned k = 0; k < e; ++k) t *= point[v];
        acc += t;
    }
    return acc;
}

Poly Poly::rename(const VarSpacePtr& target, const std::vector<VarIndex>& map,
                  bool conjugate_coeffs) const {
    if (map.size() != space_->size())
        throw domain_error("rename: map must cover every variable");
    Poly r(target);
    for (const auto& [m, c] : terms_) {
        std::vector<Monomial::Entry> entries;
        entries.reserve(m.entries().size());
        for (const auto& [v, e] : m.entries()) entries.emplace_back(map[v], e);
        r.add_term(Monomial(std::move(entries)), conjugate_coeffs ? c.conj() : c);
    }
    return r;
}

Poly Poly::monic() const {
    if (terms_.empty()) return *this;
    auto [m, c] = leading_term(MonomialOrder::Grevlex);
    return scaled(GaussianRational(1) / c);
}

Poly Poly::truncated(unsigned degree_bound) const {
    Poly r(space_);
    for (const auto& [m, c] : terms_)
        if (m.total_degree() < degree_bound) r.terms_.emplace(m, c);
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (!same_space(space_, o.space_)) return false;
    return terms_ == o.terms_;
}

}  // namespace leviscope
