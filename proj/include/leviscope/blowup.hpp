#pragma once

#include <string>
#include <vector>

#include "leviscope/forms.hpp"
#include "leviscope/groebner.hpp"

namespace leviscope {

/// One coordinate chart of the blow-up along a coordinate center. Center
/// variables are replaced by fresh chart variables; the distinguished one
/// carries the exceptional divisor u, the others map to (new var) * u.
class BlowupChart {
public:
    /// center: variable names of the center ideal, in order; new_names: one
    /// fresh name per center variable; exceptional: position into center of
    /// the variable that becomes u.
    static BlowupChart make(const VarSpacePtr& source,
                            const std::vector<std::string>& center,
                            const std::vector<std::string>& new_names,
                            std::size_t exceptional);

    const VarSpacePtr& source_space() const { return source_; }
    const VarSpacePtr& chart_space() const { return chart_; }
    VarIndex exceptional_var() const { return u_; }
    const std::string& exceptional_name() const { return chart_->name(u_); }

    /// Ring map: substitute center variables through the chart.
    Poly pullback(const Poly& p) const;
    DiffForm pullback(const DiffForm& w) const;

private:
    VarSpacePtr source_;
    VarSpacePtr chart_;
    std::vector<Poly> images_;  // one per source variable, in chart space
    VarIndex u_ = 0;
};

struct StrictTransform {
    Poly transform;  // monic under grevlex; the defining equation up to unit
    unsigned multiplicity = 0;
};

/// Pullback divided by the maximal u-power; the polynomial result is
/// leading-coefficient normalized.
StrictTransform strict_transform(const BlowupChart& chart, const Poly& p);

struct StrictTransformForm {
    DiffForm transform;  // exact coefficients, no unit normalization
    unsigned multiplicity = 0;
};

StrictTransformForm strict_transform_form(const BlowupChart& chart, const DiffForm& w);

/// Ideal generated by the transformed equation and all coefficients of the
/// transformed 1-form; presents the singular set of the transformed
/// foliation data in this chart.
Ideal transform_singular_ideal(const BlowupChart& chart, const DiffForm& w_tilde,
                               const Poly& Fc_tilde);

/// H_C-pullback divided by u^3, the shape the transformed equation
/// 1 + t^2 + s^2 + v^2 + u*H1 requires; errors with the actual multiplicity
/// when the pullback is not divisible by u^3.
Poly h_one(const BlowupChart& chart, const Poly& Hc);

}  // namespace leviscope
