#include "leviscope/rational.hpp"

namespace leviscope {

std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

std::string gaussian_to_string(const GaussianRational& q) {
    if (q.is_zero()) return "0";
    if (q.im == 0) return rational_to_string(q.re);
    std::string im_part;
    if (q.im == 1)
        im_part = "i";
    else if (q.im == -1)
        im_part = "-i";
    else
        im_part = rational_to_string(q.im) + "*i";
    if (q.re == 0) return im_part;
    std::string s = "(" + rational_to_string(q.re);
    if (sgn(q.im) > 0)
        s += "+" + im_part;
    else
        s += im_part;  // sign is embedded
    return s + ")";
}

std::optional<Rational> rational_kth_root(const Rational& value, unsigned k) {
    if (k == 0) return std::nullopt;
    if (k == 1) return value;
    if (value == 0) return Rational(0);
    if (sgn(value) < 0 && k % 2 == 0) return std::nullopt;

    mpz_class num = value.get_num();
    mpz_class den = value.get_den();
    mpz_class rn, rd;
    // mpz_root returns nonzero iff the root is exact
    mpz_class an = abs(num);
    if (!mpz_root(rn.get_mpz_t(), an.get_mpz_t(), k)) return std::nullopt;
    if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k)) return std::nullopt;
    if (sgn(num) < 0) rn = -rn;  // k odd here
    Rational r(rn, rd);
    r.canonicalize();
    return r;
}

}  // namespace leviscope
