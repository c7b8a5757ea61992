#include "leviscope/forms.hpp"

#include <algorithm>

#include "leviscope/expr_io.hpp"

namespace leviscope {

namespace {

/// Sort a covector tuple; returns the permutation sign, or 0 on a repeat.
int normalize_basis(DiffForm::Basis& b) {
    int sign = 1;
    for (std::size_t i = 1; i < b.size(); ++i)
        for (std::size_t j = i; j > 0 && b[j - 1] >= b[j]; --j) {
            if (b[j - 1] == b[j]) return 0;
            std::swap(b[j - 1], b[j]);
            sign = -sign;
        }
    return sign;
}

}  // namespace

void DiffForm::add(const Basis& basis, const Poly& coeff) {
    if (coeff.is_zero()) return;
    if (basis.size() != degree_) throw domain_error("covector tuple length != form degree");
    require_same_space(space_, coeff.space(), "form coefficient");
    Basis b = basis;
    int sign = normalize_basis(b);
    if (sign == 0) return;
    Poly c = sign > 0 ? coeff : -coeff;
    auto it = terms_.find(b);
    if (it == terms_.end()) {
        terms_.emplace(std::move(b), std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

const Poly& DiffForm::coeff(const Basis& basis) const {
    static const Poly zero_poly{};
    auto it = terms_.find(basis);
    return it == terms_.end() ? zero_poly : it->second;
}

DiffForm DiffForm::operator-() const {
    DiffForm r(space_, degree_);
    for (const auto& [b, c] : terms_) r.terms_.emplace(b, -c);
    return r;
}

DiffForm& DiffForm::operator+=(const DiffForm& o) {
    require_same_space(space_, o.space_, "form add");
    if (degree_ != o.degree_ && !o.is_zero() && !is_zero())
        throw domain_error("cannot add forms of different degree");
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
}

DiffForm& DiffForm::operator-=(const DiffForm& o) {
    require_same_space(space_, o.space_, "form sub");
    if (degree_ != o.degree_ && !o.is_zero() && !is_zero())
        throw domain_error("cannot subtract forms of different degree");
    for (const auto& [b, c] : o.terms_) add(b, -c);
    return *this;
}

DiffForm DiffForm::scaled(const GaussianRational& c) const {
    DiffForm r(space_, degree_);
    if (c.is_zero()) return r;
    for (const auto& [b, q] : terms_) r.terms_.emplace(b, q.scaled(c));
    return r;
}

DiffForm DiffForm::scaled(const Poly& f) const {
    DiffForm r(space_, degree_);
    for (const auto& [b, q] : terms_) r.add(b, q * f);
    return r;
}

bool DiffForm::operator==(const DiffForm& o) const {
    if (!same_space(space_, o.space_)) return false;
    if (is_zero() && o.is_zero()) return true;
    return degree_ == o.degree_ && terms_ == o.terms_;
}

DiffForm wedge(const DiffForm& a, const DiffForm& b) {
    require_same_space(a.space(), b.space(), "wedge");
    DiffForm r(a.space(), a.degree() + b.degree());
    for (const auto& [ba, ca] : a.terms())
        for (const auto& [bb, cb] : b.terms()) {
            DiffForm::Basis merged = ba;
            merged.insert(merged.end(), bb.begin(), bb.end());
            r.add(merged, ca * cb);
        }
    return r;
}

DiffForm d_over(const Poly& f, const std::vector<VarIndex>& vars) {
    DiffForm r(f.space(), 1);
    for (VarIndex v : vars) r.add({v}, f.derivative(v));
    return r;
}

DiffForm d_over(const DiffForm& w, const std::vector<VarIndex>& vars) {
    DiffForm r(w.space(), w.degree() + 1);
    for (const auto& [b, c] : w.terms())
        for (VarIndex v : vars) {
            Poly dc = c.derivative(v);
            if (dc.is_zero()) continue;
            DiffForm::Basis nb;
            nb.push_back(v);
            nb.insert(nb.end(), b.begin(), b.end());
            r.add(nb, dc);
        }
    return r;
}

namespace {

std::vector<VarIndex> holo_vars(const VarSpace& sp) {
    std::vector<VarIndex> vs;
    for (VarIndex v = 0; v < sp.size(); ++v)
        if (!sp.is_conjugate_slot(v)) vs.push_back(v);
    return vs;
}

std::vector<VarIndex> anti_vars(const VarSpace& sp) {
    std::vector<VarIndex> vs;
    for (VarIndex v = 0; v < sp.size(); ++v)
        if (sp.is_conjugate_slot(v)) vs.push_back(v);
    return vs;
}

std::vector<VarIndex> all_vars(const VarSpace& sp) {
    std::vector<VarIndex> vs(sp.size());
    for (VarIndex v = 0; v < sp.size(); ++v) vs[v] = v;
    return vs;
}

}  // namespace

DiffForm d_holo(const Poly& f) { return d_over(f, holo_vars(*f.space())); }
DiffForm d_anti(const Poly& f) { return d_over(f, anti_vars(*f.space())); }
DiffForm d_full(const Poly& f) { return d_over(f, all_vars(*f.space())); }
DiffForm d_holo(const DiffForm& w) { return d_over(w, holo_vars(*w.space())); }
DiffForm d_anti(const DiffForm& w) { return d_over(w, anti_vars(*w.space())); }
DiffForm d_full(const DiffForm& w) { return d_over(w, all_vars(*w.space())); }

DiffForm levi_form(const HermitianPoly& F) {
    DiffForm g = d_holo(F.poly) - d_anti(F.poly);
    return g.scaled(GaussianRational::unit_i());
}

DiffForm complexify_form(const ComplexifiedPoly& ctx, const DiffForm& w) {
    require_same_space(w.space(), ctx.source_space, "complexify_form");
    DiffForm r(ctx.space(), w.degree());
    for (const auto& [b, c] : w.terms()) {
        DiffForm::Basis nb;
        nb.reserve(b.size());
        for (VarIndex v : b) nb.push_back(ctx.to_complex[v]);
        r.add(nb, ctx.lift(c));
    }
    return r;
}

AlphaBeta alpha_beta(const ComplexifiedPoly& Fc, const std::optional<ComplexSplit>& split) {
    AlphaBeta out;
    out.alpha = d_over(Fc.poly, Fc.holo_slots);
    out.beta = d_over(Fc.poly, Fc.anti_slots);
    out.theta1 = DiffForm::zero(Fc.space(), 1);
    out.theta2 = DiffForm::zero(Fc.space(), 1);
    if (split) {
        require_same_space(split->P.space(), Fc.space(), "alpha_beta split");
        require_same_space(split->Hc.space(), Fc.space(), "alpha_beta split");
        GaussianRational half(Rational(1, 2));
        Poly rebuilt = split->P.scaled(half) + Fc.mirror(split->P).scaled(half) + split->Hc;
        if (rebuilt != Fc.poly)
            throw inconsistent_split_error(
                "split does not sum to the complexified polynomial");
        out.theta1 = d_over(split->Hc, Fc.holo_slots);
        out.theta2 = d_over(split->Hc, Fc.anti_slots);
    }
    return out;
}

DiffForm eta_complexified(const ComplexifiedPoly& Fc) {
    DiffForm a = d_over(Fc.poly, Fc.holo_slots);
    DiffForm b = d_over(Fc.poly, Fc.anti_slots);
    return (a - b).scaled(GaussianRational::unit_i());
}

std::string print_form(const DiffForm& w) {
    if (w.is_zero()) return "0";
    const VarSpace& sp = *w.space();
    std::string out;
    bool first = true;
    for (const auto& [b, c] : w.terms()) {
        std::string basis;
        for (VarIndex v : b) {
            if (!basis.empty()) basis += "^";
            basis += "d" + sp.name(v);
        }
        std::string coeff = print_poly(c);
        std::string body;
        bool neg = false;
        if (coeff == "1") {
            body = basis;
        } else if (coeff == "-1") {
            body = basis;
            neg = true;
        } else {
            bool needs_parens = coeff.find(' ') != std::string::npos;
            if (!needs_parens && !coeff.empty() && coeff[0] == '-') {
                neg = true;
                coeff = coeff.substr(1);
            }
            body = (needs_parens ? "(" + coeff + ")" : coeff) + "*" + basis;
        }
        if (first) {
            out += neg ? "-" : "";
            out += body;
            first = false;
        } else {
            out += neg ? " - " : " + ";
            out += body;
        }
    }
    return out;
}

}  // namespace leviscope
