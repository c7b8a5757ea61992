#include "leviscope/leviflat.hpp"

#include "leviscope/expr_io.hpp"

namespace leviscope {

LeviFlatReport is_levi_flat(const HermitianPoly& F, const Limits& limits) {
    if (F.poly.is_constant())
        throw domain_error("is_levi_flat: constant defining function");
    const Poly& f = F.poly;
    DiffForm gamma = d_holo(f) - d_anti(f);
    DiffForm rho = d_holo(d_anti(f));  // d~dF
    DiffForm omega = wedge(wedge(gamma, rho), d_full(f));

    LeviFlatReport rep;
    rep.is_levi_flat = true;
    std::vector<Poly> divisor{f};
    for (const auto& [basis, coeff] : omega.terms()) {
        Poly r = poly_divmod(coeff, divisor, MonomialOrder::Grevlex, limits).remainder;
        if (!r.is_zero()) {
            rep.is_levi_flat = false;
            rep.witness = coeff;
            rep.witness_basis = basis;
            rep.obstruction_degree = coeff.total_degree();
            break;
        }
    }
    return rep;
}

Ideal sing_ideal(const ComplexifiedPoly& Fc) {
    std::vector<Poly> gens{Fc.poly};
    for (VarIndex v = 0; v < Fc.space()->size(); ++v) {
        Poly d = Fc.poly.derivative(v);
        if (!d.is_zero()) gens.push_back(std::move(d));
    }
    return Ideal::make(Fc.space(), std::move(gens));
}

Ideal sing_ideal(const HermitianPoly& F) { return sing_ideal(complexify(F)); }

EtaComponents sing_eta_components(const ComplexifiedPoly& Fc,
                                  const std::optional<ComplexSplit>& split) {
    AlphaBeta ab = alpha_beta(Fc, split);
    std::vector<Poly> g1{Fc.poly};
    for (const auto& [b, c] : ab.alpha.terms()) g1.push_back(c);
    std::vector<Poly> g2{Fc.poly};
    for (const auto& [b, c] : ab.beta.terms()) g2.push_back(c);
    const VarSpace& sp = *Fc.space();
    std::string m1 = "M1: some derivative over {";
    for (std::size_t i = 0; i < Fc.anti_slots.size(); ++i)
        m1 += (i ? "," : "") + sp.name(Fc.anti_slots[i]);
    m1 += "} is nonzero";
    std::string m2 = "M2: some derivative over {";
    for (std::size_t i = 0; i < Fc.holo_slots.size(); ++i)
        m2 += (i ? "," : "") + sp.name(Fc.holo_slots[i]);
    m2 += "} is nonzero";
    return EtaComponents{Ideal::make(Fc.space(), std::move(g1)),
                         Ideal::make(Fc.space(), std::move(g2)),
                         m1 + "; " + m2 + " (side constraints, not imposed on the ideals)"};
}

SegreReport segre_variety(const HermitianPoly& F, const std::vector<GaussianRational>& p) {
    const VarSpace& sp = *F.space();
    if (!sp.has_pairing()) throw domain_error("segre_variety requires a paired space");
    const std::size_t n = sp.holo_count();
    if (p.size() != n)
        throw domain_error("segre_variety: point has " + std::to_string(p.size()) +
                           " coordinates but the space has " + std::to_string(n) +
                           " holomorphic variables");
    // substitute the conjugate slots with conj(p); keep holomorphic slots
    std::vector<Poly> storage;
    storage.reserve(sp.size());
    for (VarIndex v = 0; v < sp.size(); ++v) {
        if (sp.is_conjugate_slot(v))
            storage.push_back(Poly::constant(F.space(), p[v - n].conj()));
        else
            storage.push_back(Poly::variable(F.space(), v));
    }
    std::vector<const Poly*> ptrs;
    for (const auto& q : storage) ptrs.push_back(&q);
    Poly variety = F.poly.substitute(ptrs);
    return SegreReport{p, variety, variety.is_zero()};
}

std::map<std::size_t, bool> degenerate_locus_scan(
    const HermitianPoly& F, const std::vector<std::vector<GaussianRational>>& sample) {
    const VarSpace& sp = *F.space();
    const std::size_t n = sp.holo_count();
    Ideal sing = sing_ideal(F);
    std::map<std::size_t, bool> out;
    for (std::size_t k = 0; k < sample.size(); ++k) {
        const auto& p = sample[k];
        if (p.size() != n) throw domain_error("degenerate_locus_scan: bad point dimension");
        std::vector<GaussianRational> full(2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            full[i] = p[i];
            full[i + n] = p[i].conj();
        }
        for (const auto& g : sing.generators) {
            if (!g.evaluate(full).is_zero())
                throw domain_error("degenerate_locus_scan: point " + std::to_string(k) +
                                   " is not on Sing(M); generator " + print_poly(g) +
                                   " does not vanish");
        }
        out[k] = segre_variety(F, p).degenerate;
    }
    return out;
}

bool branch_in_M(const HermitianPoly& F, const Poly& g, const Limits& limits) {
    require_same_space(F.space(), g.space(), "branch_in_M");
    if (g.is_constant()) throw domain_error("branch_in_M: g must be nonconstant");
    if (!holomorphic_only(g))
        throw domain_error("branch_in_M: g must use holomorphic variables only");
    ComplexifiedPoly Fc = complexify(F);
    Poly g1 = Fc.lift(g);
    Poly g2 = Fc.mirror(g1);
    return ideal_member(Fc.poly, Ideal::make(Fc.space(), {g1, g2}), limits);
}

}  // namespace leviscope
