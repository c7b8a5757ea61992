#include "leviscope/monomial.hpp"

#include <algorithm>

namespace leviscope {

Monomial::Monomial(std::vector<Entry> entries) : e_(std::move(entries)) {
    std::sort(e_.begin(), e_.end());
    // merge repeats, drop zero exponents
    std::vector<Entry> out;
    out.reserve(e_.size());
    for (const auto& [v, e] : e_) {
        if (e == 0) continue;
        if (!out.empty() && out.back().first == v)
            out.back().second += e;
        else
            out.emplace_back(v, e);
    }
    e_ = std::move(out);
}

Monomial Monomial::var(VarIndex v, unsigned e) {
    Monomial m;
    if (e > 0) m.e_.emplace_back(v, e);
    return m;
}

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [v, e] : e_) d += e;
    return d;
}

unsigned Monomial::degree_of(VarIndex v) const {
    for (const auto& [w, e] : e_)
        if (w == v) return e;
    return 0;
}

unsigned Monomial::degree_over(const std::vector<VarIndex>& vars) const {
    unsigned d = 0;
    for (VarIndex v : vars) d += degree_of(v);
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.e_.reserve(e_.size() + o.e_.size());
    auto a = e_.begin();
    auto b = o.e_.begin();
    while (a != e_.end() && b != o.e_.end()) {
        if (a->first < b->first)
            r.e_.push_back(*a++);
        else if (a->first > b->first)
            r.e_.push_back(*b++);
        else {
            r.e_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    r.e_.insert(r.e_.end(), a, e_.end());
    r.e_.insert(r.e_.end(), b, o.e_.end());
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    auto b = o.e_.begin();
    for (const auto& [v, e] : e_) {
        while (b != o.e_.end() && b->first < v) ++b;
        if (b == o.e_.end() || b->first != v || b->second < e) return false;
    }
    return true;
}

Monomial Monomial::divide_into(const Monomial& o) const {
    Monomial r;
    auto a = e_.begin();
    for (const auto& [v, e] : o.e_) {
        unsigned sub = 0;
        if (a != e_.end() && a->first == v) {
            sub = a->second;
            ++a;
        }
        if (e > sub) r.e_.emplace_back(v, e - sub);
    }
    return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
    Monomial r;
    auto a = e_.begin();
    auto b = o.e_.begin();
    while (a != e_.end() && b != o.e_.end()) {
        if (a->first < b->first)
            r.e_.push_back(*a++);
        else if (a->first > b->first)
            r.e_.push_back(*b++);
        else {
            r.e_.emplace_back(a->first, std::max(a->second, b->second));
            ++a;
            ++b;
        }
    }
    r.e_.insert(r.e_.end(), a, e_.end());
    r.e_.insert(r.e_.end(), b, o.e_.end());
    return r;
}

bool Monomial::coprime(const Monomial& o) const {
    auto a = e_.begin();
    auto b = o.e_.begin();
    while (a != e_.end() && b != o.e_.end()) {
        if (a->first < b->first)
            ++a;
        else if (a->first > b->first)
            ++b;
        else
            return false;
    }
    return true;
}

int cmp_grevlex(const Monomial& a, const Monomial& b) {
    unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    // equal degree: the monomial with the smaller exponent at the last
    // differing variable is larger
    const auto& ea = a.entries();
    const auto& eb = b.entries();
    auto ia = ea.rbegin();
    auto ib = eb.rbegin();
    while (ia != ea.rend() && ib != eb.rend()) {
        if (ia->first > ib->first) {
            // a has a positive exponent on a later variable than b
            return -1;
        }
        if (ia->first < ib->first) return 1;
        if (ia->second != ib->second) return ia->second < ib->second ? 1 : -1;
        ++ia;
        ++ib;
    }
    if (ia != ea.rend()) return -1;  // leftover later-variable exponent in a
    if (ib != eb.rend()) return 1;
    return 0;
}

int cmp_lex(const Monomial& a, const Monomial& b) {
    const auto& ea = a.entries();
    const auto& eb = b.entries();
    auto ia = ea.begin();
    auto ib = eb.begin();
    while (ia != ea.end() && ib != eb.end()) {
        if (ia->first < ib->first) return 1;   // a has earlier variable
        if (ia->first > ib->first) return -1;
        if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
        ++ia;
        ++ib;
    }
    if (ia != ea.end()) return 1;
    if (ib != eb.end()) return -1;
    return 0;
}

int cmp_monomial(const Monomial& a, const Monomial& b, MonomialOrder order) {
    return order == MonomialOrder::Grevlex ? cmp_grevlex(a, b) : cmp_lex(a, b);
}

}  // namespace leviscope
