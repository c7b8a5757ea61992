#pragma once

#include <map>
#include <optional>
#include <vector>

#include "leviscope/forms.hpp"
#include "leviscope/groebner.hpp"
#include "leviscope/hermitian.hpp"

namespace leviscope {

struct LeviFlatReport {
    bool is_levi_flat = false;
    /// When not flat: one nonzero coefficient of the obstruction form
    /// (dF - ~dF) ^ d~dF ^ dF that F does not divide, with its covector tuple.
    std::optional<Poly> witness;
    std::vector<VarIndex> witness_basis;
    unsigned obstruction_degree = 0;  // total degree of the witness coefficient
};

/// Decide the integrability condition: every coefficient of
/// (dF - ~dF) ^ d~dF ^ dF must be divisible by F. Irreducibility of F is
/// assumed, not checked.
LeviFlatReport is_levi_flat(const HermitianPoly& F, const Limits& limits = {});

/// Ideal generated by F_C and all first partials of F_C, in the
/// complexified space; presents Sing(M_C).
Ideal sing_ideal(const ComplexifiedPoly& Fc);
Ideal sing_ideal(const HermitianPoly& F);

struct EtaComponents {
    Ideal X1;  // (F_C, coefficients of alpha)
    Ideal X2;  // (F_C, coefficients of beta)
    std::string side_conditions;  // the open conditions M1 / M2, reported only
};

EtaComponents sing_eta_components(const ComplexifiedPoly& Fc,
                                  const std::optional<ComplexSplit>& split = std::nullopt);

struct SegreReport {
    std::vector<GaussianRational> point;
    Poly variety;  // polynomial cutting Q_p out of the holomorphic slots
    bool degenerate = false;
};

/// Q_p = {z : F_C(z, conj(p)) = 0}; degenerate iff the polynomial vanishes
/// identically. p gives one value per holomorphic variable.
SegreReport segre_variety(const HermitianPoly& F,
                          const std::vector<GaussianRational>& p);

/// Per-point Segre degeneracy for points that must lie on Sing(M); a point
/// violating the precondition raises domain_error naming the generator.
std::map<std::size_t, bool> degenerate_locus_scan(
    const HermitianPoly& F,
    const std::vector<std::vector<GaussianRational>>& sample);

/// Sufficient branch-containment test: true when F_C is a member of
/// (g(z), mirror-conj(g)(w)); true implies {g = 0} is contained in M,
/// false is inconclusive.
bool branch_in_M(const HermitianPoly& F, const Poly& g, const Limits& limits = {});

}  // namespace leviscope
