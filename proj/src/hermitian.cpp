#include "leviscope/hermitian.hpp"

#include <algorithm>

#include "leviscope/expr_io.hpp"

namespace leviscope {

Poly conj_swap(const Poly& p) {
    const VarSpace& sp = *p.space();
    if (!sp.has_pairing()) throw domain_error("conj_swap requires a conjugate-paired space");
    std::vector<VarIndex> map(sp.size());
    for (VarIndex v = 0; v < sp.size(); ++v) map[v] = *sp.partner(v);
    return p.rename(p.space(), map, /*conjugate_coeffs=*/true);
}

bool is_real_valued(const Poly& p) { return conj_swap(p) == p; }

HermitianPoly make_hermitian(const Poly& p) {
    if (p.is_zero()) throw domain_error("make_hermitian: zero polynomial");
    const GaussianRational units[4] = {GaussianRational(1), GaussianRational(-1),
                                       GaussianRational::unit_i(),
                                       -GaussianRational::unit_i()};
    for (const auto& u : units) {
        Poly q = p.scaled(u);
        if (is_real_valued(q)) return HermitianPoly{std::move(q), u};
    }
    // report a violating coefficient pair of p itself
    Poly sw = conj_swap(p);
    for (const auto& [m, c] : p.terms()) {
        const GaussianRational& d = sw.coeff(m);
        if (d != c) {
            throw not_real_error(
                "no unit multiple is real-valued: coefficient of " + print_poly(Poly::term(p.space(), m, GaussianRational(1))) +
                " is " + gaussian_to_string(c) + " but the conjugate-mirrored coefficient is " +
                gaussian_to_string(d));
        }
    }
    throw not_real_error("no unit multiple is real-valued");
}

namespace {

std::string complex_partner_name(const std::string& holo_name,
                                 const std::vector<std::string>& taken) {
    auto free = [&](const std::string& n) {
        return std::find(taken.begin(), taken.end(), n) == taken.end();
    };
    std::string candidate;
    if (holo_name == "x")
        candidate = "z";
    else if (holo_name.size() > 1 && (holo_name[0] == 'y' || holo_name[0] == 'z'))
        candidate = "w" + holo_name.substr(1);
    else if (holo_name == "y" || holo_name == "z")
        candidate = "w";
    else
        candidate = holo_name + "_c";
    while (!free(candidate)) candidate += "_c";
    return candidate;
}

}  // namespace

Poly ComplexifiedPoly::lift(const Poly& paired_poly, bool conjugate_coeffs) const {
    require_same_space(paired_poly.space(), source_space, "complexified lift");
    return paired_poly.rename(poly.space(), to_complex, conjugate_coeffs);
}

Poly ComplexifiedPoly::mirror(const Poly& cp) const {
    require_same_space(cp.space(), poly.space(), "mirror");
    std::vector<VarIndex> map(poly.space()->size());
    for (std::size_t i = 0; i < holo_slots.size(); ++i) {
        map[holo_slots[i]] = anti_slots[i];
        map[anti_slots[i]] = holo_slots[i];
    }
    return cp.rename(poly.space(), map, /*conjugate_coeffs=*/true);
}

ComplexifiedPoly complexify(const HermitianPoly& F) {
    const VarSpace& sp = *F.space();
    if (!sp.has_pairing()) throw domain_error("complexify requires a conjugate-paired space");
    const std::size_t n = sp.holo_count();
    std::vector<std::string> names;
    names.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) names.push_back(sp.name(static_cast<VarIndex>(i)));
    for (std::size_t i = 0; i < n; ++i)
        names.push_back(complex_partner_name(sp.name(static_cast<VarIndex>(i)), names));
    auto target = VarSpace::plain(std::move(names));

    ComplexifiedPoly out;
    out.source_space = F.space();
    out.to_complex.resize(sp.size());
    for (VarIndex v = 0; v < sp.size(); ++v) out.to_complex[v] = v;  // positions align
    for (std::size_t i = 0; i < n; ++i) {
        out.holo_slots.push_back(static_cast<VarIndex>(i));
        out.anti_slots.push_back(static_cast<VarIndex>(i + n));
    }
    out.poly = F.poly.rename(target, out.to_complex, /*conjugate_coeffs=*/false);
    return out;
}

HermitianPoly diagonal_restrict(const ComplexifiedPoly& Fc) {
    const std::size_t total = Fc.space()->size();
    std::vector<VarIndex> back(total);
    for (VarIndex v = 0; v < total; ++v) back[v] = v;  // positions align with the paired space
    Poly p = Fc.poly.rename(Fc.source_space, back, /*conjugate_coeffs=*/false);
    return HermitianPoly{std::move(p), GaussianRational(1)};
}

bool holomorphic_only(const Poly& p) {
    const VarSpace& sp = *p.space();
    for (const auto& [m, c] : p.terms())
        for (const auto& [v, e] : m.entries())
            if (sp.is_conjugate_slot(v)) return false;
    return true;
}

HermitianPoly re_part(const Poly& h) {
    if (!h.space()->has_pairing()) throw domain_error("re_part requires a conjugate-paired space");
    if (!holomorphic_only(h))
        throw domain_error("re_part: input mentions a conjugated variable");
    GaussianRational half(Rational(1, 2));
    Poly p = h.scaled(half) + conj_swap(h).scaled(half);
    return HermitianPoly{std::move(p), GaussianRational(1)};
}

}  // namespace leviscope
