#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "leviscope/varspace.hpp"

namespace leviscope {

enum class MonomialOrder { Grevlex, Lex };

/// A power product, stored as a sparse exponent vector sorted by variable
/// index. Zero exponents are never stored.
class Monomial {
public:
    using Entry = std::pair<VarIndex, unsigned>;

    Monomial() = default;
    explicit Monomial(std::vector<Entry> entries);

    static Monomial var(VarIndex v, unsigned e = 1);

    const std::vector<Entry>& entries() const { return e_; }
    bool is_one() const { return e_.empty(); }
    unsigned total_degree() const;
    unsigned degree_of(VarIndex v) const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    /// Requires this | o.
    Monomial divide_into(const Monomial& o) const;
    Monomial lcm(const Monomial& o) const;
    bool coprime(const Monomial& o) const;

    /// Degree summed over the given variable subset.
    unsigned degree_over(const std::vector<VarIndex>& vars) const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

private:
    std::vector<Entry> e_;
};

/// Graded reverse lexicographic comparison; variables earlier in the space
/// order are larger. Returns <0, 0, >0.
int cmp_grevlex(const Monomial& a, const Monomial& b);
int cmp_lex(const Monomial& a, const Monomial& b);
int cmp_monomial(const Monomial& a, const Monomial& b, MonomialOrder order);

struct GrevlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return cmp_grevlex(a, b) < 0;
    }
};

}  // namespace leviscope
