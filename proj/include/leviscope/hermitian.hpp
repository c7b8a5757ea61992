#pragma once

#include "leviscope/poly.hpp"

namespace leviscope {

/// Swap every variable with its conjugate partner and conjugate all
/// coefficients. Requires a paired space. p is real-valued iff
/// conj_swap(p) == p.
Poly conj_swap(const Poly& p);

bool is_real_valued(const Poly& p);

/// A real-valued polynomial F(z, ~z) in a conjugate-paired space. The unit
/// normalization in {1, -1, i, -i} applied at construction is recorded; it
/// leaves the zero set unchanged.
struct HermitianPoly {
    Poly poly;
    GaussianRational normalization{1};

    const VarSpacePtr& space() const { return poly.space(); }
};

/// Accept p when some unit multiple u*p satisfies the reality condition;
/// otherwise throw not_real_error naming a violating coefficient pair.
HermitianPoly make_hermitian(const Poly& p);

/// The complexified polynomial F_C together with the variable bookkeeping:
/// holomorphic slots (x, y) keep their names, conjugate slots are renamed to
/// independent partners (z, w). Substituting the partners back recovers F.
struct ComplexifiedPoly {
    Poly poly;                       // over the complexified (plain) space
    VarSpacePtr source_space;        // the paired space of the origin
    std::vector<VarIndex> to_complex;  // paired-space index -> complexified index
    std::vector<VarIndex> holo_slots;  // complexified indices of the (x,y) half
    std::vector<VarIndex> anti_slots;  // complexified indices of the (z,w) half

    const VarSpacePtr& space() const { return poly.space(); }

    /// Transport any polynomial of the paired space into the complexified one.
    Poly lift(const Poly& paired_poly, bool conjugate_coeffs = false) const;

    /// Mirror across the diagonal: holo slots <-> anti slots, coefficients
    /// conjugated. Fixed points are exactly the complexifications of
    /// real-valued polynomials.
    Poly mirror(const Poly& complexified_poly) const;
};

ComplexifiedPoly complexify(const HermitianPoly& F);

/// Inverse of complexify: rename the partner slots back; round-trip identity.
HermitianPoly diagonal_restrict(const ComplexifiedPoly& Fc);

/// For h using only unconjugated variables: (h + conj_swap(h)) / 2.
HermitianPoly re_part(const Poly& h);

/// True when p touches only holomorphic slots of its paired space.
bool holomorphic_only(const Poly& p);

}  // namespace leviscope
