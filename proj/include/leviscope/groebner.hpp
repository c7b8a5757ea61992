#pragma once

#include <vector>

#include "leviscope/poly.hpp"

namespace leviscope {

/// Desk-scale guardrails for the algebra engine.
struct Limits {
    std::size_t max_terms = 1'000'000;
    unsigned max_degree = 64;
};

/// Generator presentation of an ideal together with a monomial-order tag.
struct Ideal {
    VarSpacePtr space;
    std::vector<Poly> generators;  // nonzero
    MonomialOrder order = MonomialOrder::Grevlex;

    static Ideal make(VarSpacePtr space, std::vector<Poly> gens,
                      MonomialOrder order = MonomialOrder::Grevlex);
};

struct GroebnerBasis {
    Ideal ideal;
    std::vector<Poly> basis;  // reduced: monic, pairwise irreducible
    MonomialOrder order;
};

struct DivModResult {
    std::vector<Poly> quotients;
    Poly remainder;
};

/// Multivariate division: f = sum q_i * d_i + r with no term of r divisible
/// by any divisor leading term.
DivModResult poly_divmod(const Poly& f, const std::vector<Poly>& divisors,
                         MonomialOrder order, const Limits& limits = {});

GroebnerBasis buchberger(const Ideal& ideal, const Limits& limits = {});

bool ideal_member(const Poly& f, const Ideal& ideal, const Limits& limits = {});
bool ideal_member(const Poly& f, const GroebnerBasis& gb, const Limits& limits = {});

/// Krull dimension of the zero set, from the maximal independent variable
/// sets of the initial ideal (grevlex). Throws empty_variety_error when the
/// ideal contains a unit.
int ideal_dimension(const Ideal& ideal, const Limits& limits = {});
int ideal_dimension(const GroebnerBasis& gb);

/// dim over the coefficient field of
///   (numerator + m^N) / (denominator + m^N),  N = degree_bound,
/// read as (numerator + denominator + m^N) / (denominator + m^N), by exact
/// sparse Gaussian elimination over monomials of degree < N.
int truncated_quotient_dim(const Ideal& numerator, const Ideal& denominator,
                           unsigned degree_bound, const Limits& limits = {});

}  // namespace leviscope
