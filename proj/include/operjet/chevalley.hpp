#pragma once

#include "operjet/linalg.hpp"
#include "operjet/rational.hpp"
#include "operjet/series.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace operjet {

// Positive root alpha_lo + ... + alpha_{hi-1} of type A (simple roots indexed
// from 0, hi exclusive).  In the defining representation e_[lo,hi) = E_{lo,hi}.
struct PosRoot {
    int lo = 0;
    int hi = 0;
    int height() const { return hi - lo; }
};

// Elements are coefficient vectors over the Chevalley basis, ordered
// e-roots, f-roots, Cartan:  [e_0 .. e_{P-1} | f_0 .. f_{P-1} | h_1 .. h_l].
using LieElement = VecQ;

// Lie-algebra- or h^*-valued truncated Laurent series (vector coefficients).
using LieSeries = TruncLaurent<VecQ>;

struct PrincipalTriple {
    LieElement p_minus;     // sum of simple-root f's
    LieElement semisimple;  // 2 rho-check, the principal grading element
    LieElement p_plus;
};

// Graded basis of ker(ad p_plus) within the nilpotent radical; degrees are the
// exponents of the algebra.
struct CanonicalSubspace {
    std::vector<int> degrees;
    std::vector<LieElement> basis;
};

// Invariant-jet tuple: a point of the length-n jet space of the adjoint
// quotient, one polynomial jet per fundamental invariant.
struct JetInvariantClass {
    long long n = 0;
    std::vector<JetQ> jets;

    friend bool operator==(const JetInvariantClass& a, const JetInvariantClass& b) {
        return a.n == b.n && a.jets == b.jets;
    }
    friend bool operator!=(const JetInvariantClass& a, const JetInvariantClass& b) {
        return !(a == b);
    }

    JetInvariantClass truncated(long long m) const {
        JetInvariantClass r;
        r.n = m;
        for (const auto& j : jets) r.jets.push_back(j.truncated(m));
        return r;
    }
};

struct KostantReport {
    bool ok = true;
    std::vector<std::string> failures;
};

// Simple Lie algebra of type A in a fixed Chevalley basis, realized through
// its defining representation.  Structure constants are exact integers; all
// derived data (forms, principal triple, canonical subspace, invariants) is
// computed at build time and frozen.  Immutable afterwards.
class ChevalleyAlgebra {
public:
    static ChevalleyAlgebra build(char type, int rank);

    char type() const { return type_; }
    int rank() const { return rank_; }
    int dim() const { return dim_; }
    int num_pos_roots() const { return static_cast<int>(roots_.size()); }

    const std::vector<PosRoot>& positive_roots() const { return roots_; }
    int root_index(int lo, int hi) const;
    int highest_root_index() const { return root_index(0, rank_); }
    int height_of_root(int r) const { return roots_[static_cast<size_t>(r)].height(); }
    int max_height() const { return rank_; }

    // Basis indexing.
    int e_index(int root) const { return root; }
    int f_index(int root) const { return num_pos_roots() + root; }
    int h_index(int i) const { return 2 * num_pos_roots() + i; }
    bool is_e(int b) const { return b < num_pos_roots(); }
    bool is_f(int b) const { return b >= num_pos_roots() && b < 2 * num_pos_roots(); }
    bool is_h(int b) const { return b >= 2 * num_pos_roots(); }
    // e: +height, f: -height, h: 0.
    int principal_degree(int b) const;

    std::string basis_label(int b) const;
    int label_index(const std::string& label) const;

    LieElement zero() const { return LieElement(static_cast<size_t>(dim_), Rational(0)); }
    LieElement basis_element(int b) const;

    LieElement bracket(const LieElement& x, const LieElement& y) const;
    LieSeries bracket(const LieSeries& x, const LieSeries& y) const;

    // exp(ad y) x for ad-nilpotent y; terminates by nilpotency.
    LieElement exp_ad(const LieElement& y, const LieElement& x) const;

    Rational killing_form(const LieElement& x, const LieElement& y) const;
    Rational basic_form(const LieElement& x, const LieElement& y) const;
    // Killing = 2 h-vee * basic.
    Rational dual_coxeter() const { return dual_coxeter_; }
    Rational critical_level() const { return -dual_coxeter_; }  // in basic-form units
    // kappa_0-dual of a basis vector, as a coefficient vector.
    const LieElement& basic_dual(int b) const { return basic_dual_[static_cast<size_t>(b)]; }

    const PrincipalTriple& principal_triple() const { return triple_; }
    const CanonicalSubspace& vcan() const { return vcan_; }
    const std::vector<int>& exponents() const { return vcan_.degrees; }

    // Weights are tuples of pairings with the simple coroots h_i.
    VecQ rho_weight() const { return VecQ(static_cast<size_t>(rank_), Rational(1)); }
    VecQ weight_of_root(int root) const;
    VecQ sum_of_positive_roots() const;
    int dynkin_involution(int i) const { return rank_ - 1 - i; }
    VecQ w0_weight(const VecQ& coords) const;
    // Index of the positive root -w0(alpha) under the longest element.
    int w0_root(int root) const;
    // H(lambda): the Cartan element with <alpha_j, H> = coords_j.
    LieElement cartan_embed(const VecQ& coords) const;

    // The longest-element involution of the algebra itself (n -> n^-).
    LieElement w0_twist(const LieElement& x) const;

    // Defining-representation matrix of an element.
    MatQ matrix_of(const LieElement& x) const;

    // Fundamental invariants evaluated at a point or a jet.  P_i is
    // homogeneous of degree d_i + 1; the normalization is frozen at build so
    // that P_i(p_minus + c p_i) = c + (terms in lower-degree coordinates).
    VecQ chi(const LieElement& x) const;
    JetInvariantClass chi_jet(const JetPoly<VecQ>& x) const;

    // Invariant class of a Cartan-valued jet given by weight coordinates.
    JetInvariantClass chi_jet_cartan(const JetPoly<VecQ>& weight_jet) const;

    KostantReport kostant_check(const std::vector<VecQ>& sample_coords) const;

private:
    ChevalleyAlgebra() = default;

    char type_ = 'A';
    int rank_ = 0;
    int dim_ = 0;
    std::vector<PosRoot> roots_;
    std::map<std::pair<int, int>, int> root_lookup_;
    // bracket_table_[a][b]: sparse list of (basis index, integer coefficient)
    std::vector<std::vector<std::vector<std::pair<int, Rational>>>> bracket_table_;
    MatQ killing_gram_;
    MatQ basic_gram_;
    Rational dual_coxeter_;
    std::vector<LieElement> basic_dual_;
    MatQ cartan_matrix_;
    MatQ cartan_embed_solver_;  // inverse transpose of the Cartan matrix
    PrincipalTriple triple_;
    CanonicalSubspace vcan_;
    VecQ chi_scale_;  // per-invariant normalization 1/L_i
    std::vector<std::pair<int, Rational>> w0_basis_image_;  // basis -> (basis, sign)

    LieElement from_matrix(const MatQ& m) const;
    // Raw characteristic-polynomial coefficient extraction before scaling.
    VecQ chi_raw(const LieElement& x) const;
};

// Shared registry so expensive builds happen once per (type, rank).
const ChevalleyAlgebra& algebra(char type, int rank);

}  // namespace operjet
