#include "leviscope/blowup.hpp"

#include <algorithm>

namespace leviscope {

BlowupChart BlowupChart::make(const VarSpacePtr& source,
                              const std::vector<std::string>& center,
                              const std::vector<std::string>& new_names,
                              std::size_t exceptional) {
    if (center.empty()) throw domain_error("blow-up center is empty");
    if (center.size() != new_names.size())
        throw domain_error("blow-up: one new name per center variable required");
    if (exceptional >= center.size())
        throw domain_error("blow-up: exceptional index out of range");

    std::vector<VarIndex> center_idx;
    for (const auto& nm : center) {
        auto v = source->find(nm);
        if (!v) throw domain_error("blow-up: variable '" + nm + "' not in space");
        center_idx.push_back(*v);
    }

    // chart space: replace center names in place
    std::vector<std::string> names = source->names();
    for (std::size_t i = 0; i < center.size(); ++i) names[center_idx[i]] = new_names[i];
    BlowupChart chart;
    chart.source_ = source;
    chart.chart_ = VarSpace::plain(std::move(names));
    chart.u_ = center_idx[exceptional];

    chart.images_.reserve(source->size());
    Poly u = Poly::variable(chart.chart_, chart.u_);
    for (VarIndex v = 0; v < source->size(); ++v) {
        auto it = std::find(center_idx.begin(), center_idx.end(), v);
        if (it == center_idx.end()) {
            chart.images_.push_back(Poly::variable(chart.chart_, v));
        } else if (v == chart.u_) {
            chart.images_.push_back(u);
        } else {
            chart.images_.push_back(Poly::variable(chart.chart_, v) * u);
        }
    }
    return chart;
}

Poly BlowupChart::pullback(const Poly& p) const {
    require_same_space(p.space(), source_, "blow-up pullback");
    std::vector<const Poly*> ptrs;
    ptrs.reserve(images_.size());
    for (const auto& q : images_) ptrs.push_back(&q);
    return p.substitute(ptrs);
}

DiffForm BlowupChart::pullback(const DiffForm& w) const {
    require_same_space(w.space(), source_, "blow-up pullback");
    // d(image) per source variable
    std::vector<DiffForm> dimg;
    dimg.reserve(images_.size());
    for (const auto& q : images_) dimg.push_back(d_full(q));
    DiffForm r(chart_, w.degree());
    for (const auto& [basis, coeff] : w.terms()) {
        DiffForm acc = DiffForm::zero(chart_, 0);
        acc.add({}, pullback(coeff));
        for (VarIndex v : basis) acc = wedge(acc, dimg[v]);
        r += acc;
    }
    return r;
}

namespace {

unsigned u_multiplicity(const Poly& p, VarIndex u) {
    unsigned m = ~0u;
    for (const auto& [mono, c] : p.terms()) m = std::min(m, mono.degree_of(u));
    return p.is_zero() ? 0 : m;
}

Poly divide_u_power(const Poly& p, VarIndex u, unsigned m) {
    if (m == 0) return p;
    Poly r(p.space());
    Monomial um = Monomial::var(u, m);
    for (const auto& [mono, c] : p.terms()) r.add_term(um.divide_into(mono), c);
    return r;
}

}  // namespace

StrictTransform strict_transform(const BlowupChart& chart, const Poly& p) {
    if (p.is_zero()) throw domain_error("strict_transform: zero polynomial");
    Poly q = chart.pullback(p);
    unsigned m = u_multiplicity(q, chart.exceptional_var());
    return StrictTransform{divide_u_power(q, chart.exceptional_var(), m).monic(), m};
}

StrictTransformForm strict_transform_form(const BlowupChart& chart, const DiffForm& w) {
    if (w.degree() != 1) throw domain_error("strict_transform_form: 1-forms only");
    DiffForm q = chart.pullback(w);
    if (q.is_zero()) return StrictTransformForm{q, 0};
    unsigned m = ~0u;
    for (const auto& [b, c] : q.terms())
        m = std::min(m, u_multiplicity(c, chart.exceptional_var()));
    DiffForm r(chart.chart_space(), 1);
    for (const auto& [b, c] : q.terms())
        r.add(b, divide_u_power(c, chart.exceptional_var(), m));
    return StrictTransformForm{std::move(r), m};
}

Ideal transform_singular_ideal(const BlowupChart& chart, const DiffForm& w_tilde,
                               const Poly& Fc_tilde) {
    require_same_space(Fc_tilde.space(), chart.chart_space(), "transform_singular_ideal");
    require_same_space(w_tilde.space(), chart.chart_space(), "transform_singular_ideal");
    std::vector<Poly> gens{Fc_tilde};
    for (const auto& [b, c] : w_tilde.terms()) gens.push_back(c);
    return Ideal::make(chart.chart_space(), std::move(gens));
}

Poly h_one(const BlowupChart& chart, const Poly& Hc) {
    if (Hc.is_zero()) return chart.pullback(Hc);
    Poly q = chart.pullback(Hc);
    unsigned m = u_multiplicity(q, chart.exceptional_var());
    if (m < 3)
        throw domain_error("H_C pullback has u-multiplicity " + std::to_string(m) +
                           " < 3; the transformed equation shape 1+t^2+s^2+v^2+u*H1 "
                           "requires divisibility by u^3");
    return divide_u_power(q, chart.exceptional_var(), 3);
}

}  // namespace leviscope
