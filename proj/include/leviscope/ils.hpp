#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leviscope/groebner.hpp"
#include "leviscope/leviflat.hpp"

namespace leviscope {

/// A holomorphic germ in coordinates (x, y1..yn). Line singularities live
/// in I^2, I = (y1..yn) the ideal of the line L = {y = 0}.
struct Germ {
    Poly poly;
    int n = 0;

    const VarSpacePtr& space() const { return poly.space(); }
};

/// The plain space (x, y1..yn).
VarSpacePtr germ_space(int n);

Germ make_germ(Poly p);

/// Extract a germ from the holomorphic half of a paired space (x, y1..yn).
Germ germ_from_paired(const Poly& p);

/// Inject a germ polynomial into the holomorphic half of the paired space
/// (x, y1..yn | ~x, ~y1..~yn), matching variables by name.
Poly inject_germ(const Germ& f, const VarSpacePtr& paired);

/// True iff every term is divisible by some y_i*y_j.
bool in_I2(const Germ& f);

/// tau(f) = m.df/dx + I.df/dy, presented by the verbatim module generators
/// {v*df/dx : v in {x,y1..yn}} and {y_i*df/dy_j : all i,j} (zero generators
/// dropped).
Ideal tau_ideal(const Germ& f);

/// The ideal I^2 = (y_i y_j) in the germ space.
Ideal i2_ideal(const VarSpacePtr& space, int n);

struct IlsReport {
    bool in_I2 = false;
    std::optional<int> c_value;           // empty = not stabilized by the cap
    std::optional<unsigned> stabilized_at;
    std::vector<int> truncated_dims;      // d_N for N = 3..cap
    std::optional<bool> is_ils;           // empty = unknown
    unsigned window = 2;
    unsigned cap = 12;
};

/// c(f) = dim I^2/tau(f) by Artinian truncation: d_N for N = 3,4,... until
/// window+1 consecutive values agree. Non-stabilization is reported, not an
/// error.
IlsReport codim_c(const Germ& f, unsigned window = 2, unsigned cap = 12,
                  const Limits& limits = {});

// ---------------------------------------------------------------------------
// catalogs
// ---------------------------------------------------------------------------

enum class NormalFormTag { A, D, J, Tk2, Z, W1, Tqr, Qk, S1 };

struct CatalogParams {
    std::optional<int> k;
    std::optional<int> q;
    std::optional<int> r;
    std::optional<Rational> lambda;
};

struct NormalFormEntry {
    NormalFormTag tag;
    std::string cli_name;     // A, D, J, Tk2, Z, W1, Tqr, Qk, S1
    std::string display;      // e.g. "J_{k,oo}"
    std::string constraints;  // e.g. "k>=2"
    int min_n;                // smallest n the printed row permits
    CatalogParams smallest;   // smallest legal parameters
};

const std::vector<NormalFormEntry>& table1_rows();

Germ build_normal_form(NormalFormTag tag, const CatalogParams& params, int n);
std::optional<NormalFormTag> normal_form_tag_from_string(const std::string& s);
std::string normal_form_display(NormalFormTag tag, const CatalogParams& params);

enum class QuadricTag { Q02k, Q11, Q12lambda, Q22, Q24 };

struct QuadricEntry {
    QuadricTag tag;
    std::string cli_name;  // Q0, Q11, Q12, Q22, Q24
    std::string display;
    std::string singular_set;  // the table's third column
    CatalogParams default_params;
};

const std::vector<QuadricEntry>& table2_rows();

/// Coordinates z1..zn (paired). Q24 is stored unit-normalized (factor i).
HermitianPoly build_quadric(QuadricTag tag, const CatalogParams& params, int n);
std::optional<QuadricTag> quadric_tag_from_string(const std::string& s);
std::string quadric_display(QuadricTag tag, const CatalogParams& params, int n);
std::string quadric_singular_set(QuadricTag tag, const CatalogParams& params, int n);

// ---------------------------------------------------------------------------
// exact-form classifier
// ---------------------------------------------------------------------------

struct Classification {
    NormalFormTag tag;
    CatalogParams params;
    std::string transform;  // permutation and scalings realizing the match
};

/// Search y-permutations composed with rational diagonal scalings of x and y
/// and an overall rational scaling for an exact match against a catalog row.
/// First match in catalog order, or nothing. Full D_I-equivalence is out of
/// scope.
std::optional<Classification> classify_exact(const Germ& f);

// ---------------------------------------------------------------------------
// Theorem A / B hypothesis checker
// ---------------------------------------------------------------------------

struct TheoremReport {
    Poly H;                     // F - Re(P), in the paired space
    bool h_vanishes_on_line;    // H(x,0,~x,0) == 0
    bool jet_condition;         // every H-term has total degree > deg(P)
    unsigned deg_P = 0;
    bool deg_ambiguous = false;  // P is not homogeneous; total degree used
    LeviFlatReport levi;
    std::string theorem;  // "A", "B" or "none"
    bool all_hypotheses = false;
    std::string conclusion;
};

/// Verifies (a) H(x,0)=0, (b) j^k(H)=0 for k=deg(P), (c) Levi-flatness,
/// and reports whether Theorem A (n>=3) or Theorem B (A-row, n=2) applies.
/// The biholomorphism itself is not constructed.
TheoremReport check_theorem_hypotheses(const HermitianPoly& F, const Germ& P,
                                       const Limits& limits = {});

struct QuadricModel {
    QuadricTag tag;
    CatalogParams params;
    std::string display;
};

/// The quadric models admitting the line {z1=..=z_{n-1}=0} as singular set:
/// [Q_{0,2}, Q_{2,4}] for n=3 and [Q_{0,2(n-1)}] for n>=4.
std::vector<QuadricModel> quadric_models_for_line(int n);

}  // namespace leviscope
