#pragma once

#include <map>
#include <optional>

#include "leviscope/hermitian.hpp"
#include "leviscope/poly.hpp"

namespace leviscope {

/// Graded exterior form with polynomial coefficients. Basis covector tuples
/// are kept strictly sorted (signs absorbed into the coefficients) and zero
/// coefficients pruned; every tuple length equals the form degree.
class DiffForm {
public:
    using Basis = std::vector<VarIndex>;  // strictly increasing
    using TermMap = std::map<Basis, Poly>;

    DiffForm() = default;
    DiffForm(VarSpacePtr space, unsigned degree)
        : space_(std::move(space)), degree_(degree) {}

    static DiffForm zero(VarSpacePtr space, unsigned degree) {
        return DiffForm(std::move(space), degree);
    }

    const VarSpacePtr& space() const { return space_; }
    unsigned degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    /// Adds c * dv_{b1} ^ ... with an arbitrary (possibly unsorted,
    /// possibly repeating) tuple; sorts and signs, drops repeats.
    void add(const Basis& basis, const Poly& coeff);

    const Poly& coeff(const Basis& basis) const;

    DiffForm operator-() const;
    DiffForm& operator+=(const DiffForm& o);
    DiffForm& operator-=(const DiffForm& o);
    friend DiffForm operator+(DiffForm a, const DiffForm& b) { return a += b; }
    friend DiffForm operator-(DiffForm a, const DiffForm& b) { return a -= b; }

    DiffForm scaled(const GaussianRational& c) const;
    DiffForm scaled(const Poly& f) const;

    bool operator==(const DiffForm& o) const;
    bool operator!=(const DiffForm& o) const { return !(*this == o); }

private:
    VarSpacePtr space_;
    unsigned degree_ = 0;
    TermMap terms_;
};

DiffForm wedge(const DiffForm& a, const DiffForm& b);

/// d restricted to a variable subset, applied to a polynomial (degree-1
/// result) or coefficient-wise to a form (degree + 1).
DiffForm d_over(const Poly& f, const std::vector<VarIndex>& vars);
DiffForm d_over(const DiffForm& w, const std::vector<VarIndex>& vars);

/// Wirtinger operators on a paired space (or a plain space, where every
/// variable counts as unconjugated).
DiffForm d_holo(const Poly& f);
DiffForm d_anti(const Poly& f);
DiffForm d_full(const Poly& f);
DiffForm d_holo(const DiffForm& w);
DiffForm d_anti(const DiffForm& w);
DiffForm d_full(const DiffForm& w);

/// Levi 1-form i*(dF - ~dF).
DiffForm levi_form(const HermitianPoly& F);

/// Transport a form on the paired space into the complexified space
/// (coefficients complexified, covectors dz~ |-> dw).
DiffForm complexify_form(const ComplexifiedPoly& ctx, const DiffForm& w);

/// Optional split F_C = P(x,y)/2 + mirror(P)/2 + H_C; P uses only the
/// holomorphic slots of the complexified space, H_C the full space.
struct ComplexSplit {
    Poly P;
    Poly Hc;
};

struct AlphaBeta {
    DiffForm alpha;   // d over the (x,y) half
    DiffForm beta;    // d over the (z,w) half
    DiffForm theta1;  // H_C-part of alpha (zero without a split)
    DiffForm theta2;  // H_C-part of beta
};

/// dF_C = alpha + beta. When a split is supplied it must sum back to F_C
/// exactly, else inconsistent_split_error.
AlphaBeta alpha_beta(const ComplexifiedPoly& Fc,
                     const std::optional<ComplexSplit>& split = std::nullopt);

/// eta_C = i*(alpha - beta), the complexified Levi 1-form.
DiffForm eta_complexified(const ComplexifiedPoly& Fc);

std::string print_form(const DiffForm& w);

}  // namespace leviscope
