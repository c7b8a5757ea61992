#pragma once

#include <map>
#include <vector>

#include "leviscope/monomial.hpp"
#include "leviscope/rational.hpp"
#include "leviscope/varspace.hpp"

namespace leviscope {

/// Multivariate polynomial over the Gaussian rationals in a declared
/// variable space. Terms are kept in ascending grevlex order with no zero
/// coefficients; all operations are exact.
class Poly {
public:
    using TermMap = std::map<Monomial, GaussianRational, GrevlexLess>;

    Poly() = default;  // detached zero; only useful as a container default
    explicit Poly(VarSpacePtr space) : space_(std::move(space)) {}

    static Poly zero(VarSpacePtr space) { return Poly(std::move(space)); }
    static Poly constant(VarSpacePtr space, GaussianRational c);
    static Poly variable(VarSpacePtr space, VarIndex v, unsigned e = 1);
    static Poly term(VarSpacePtr space, Monomial m, GaussianRational c);

    const VarSpacePtr& space() const { return space_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }
    unsigned total_degree() const;  // 0 for the zero polynomial

    void add_term(const Monomial& m, const GaussianRational& c);

    const GaussianRational& coeff(const Monomial& m) const;

    /// Largest term under the given order.
    std::pair<Monomial, GaussianRational> leading_term(MonomialOrder order) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);

    Poly scaled(const GaussianRational& c) const;
    Poly mul_term(const Monomial& m, const GaussianRational& c) const;

    Poly derivative(VarIndex v) const;

    /// Simultaneous substitution v -> images[v]; entries may be in a
    /// different target space (all images must share one space).
    Poly substitute(const std::vector<const Poly*>& images) const;

    /// Evaluate at a rational point (one value per variable).
    GaussianRational evaluate(const std::vector<GaussianRational>& point) const;

    /// Rename variables through old-index -> new-index into target space;
    /// optionally conjugate every coefficient.
    Poly rename(const VarSpacePtr& target, const std::vector<VarIndex>& map,
                bool conjugate_coeffs) const;

    /// Leading coefficient scaled to 1 (grevlex). Zero stays zero.
    Poly monic() const;

    /// Drop every term of total degree >= bound.
    Poly truncated(unsigned degree_bound) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

private:
    VarSpacePtr space_;
    TermMap terms_;
};

}  // namespace leviscope
