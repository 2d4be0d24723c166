#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permlab/matrix.hpp"

namespace permlab {

/// Ordered generating set of an ideal in a polynomial ring. When the ring is
/// the variable grid of an m-by-n generic matrix, m and n record the shape.
struct IdealBasis {
    RingPtr ring;
    size_t m = 0, n = 0;
    std::vector<Poly> gens;
    std::vector<std::string> labels;
    std::string label;

    /// Header line `ring <field> <m> <n>`, then one generator per line.
    std::string serialize() const;
    static IdealBasis deserialize(const std::string& text);
};

/// Ideal generated by all d-by-d subpermanents of the generic m-by-n matrix,
/// in lexicographic selector order.
IdealBasis permanental_ideal(const Field* f, size_t d, size_t m, size_t n);

/// The named polynomials entering the inclusion-exclusion combinations:
/// fix a distinguished row r and a (d-1)-subset alpha of columns, then
///   A_alpha   = permanent of the other d-1 rows on the columns alpha
///   A'_alpha  = A_alpha * prod of the row-r entries outside alpha
///   P'_beta   = (d x d subpermanent on columns beta) * row-r entries outside beta
///   S_i       = sum of P'_beta over |beta meet alpha| = i
///   T_i       = sum of A'_alpha' over |alpha' meet alpha| = i
struct CombinationParts {
    RingPtr ring;
    size_t d = 0, n = 0, row = 0;
    std::vector<size_t> alpha;
    Poly a_alpha;
    Poly a_alpha_prime;
    std::vector<std::pair<std::vector<size_t>, Poly>> p_prime; // (beta, P'_beta)
    std::vector<Poly> s; // index 0..d-1
    std::vector<Poly> t; // index 0..d-1; t[d-1] = A'_alpha

    CombinationParts(RingPtr r, Poly a, Poly ap)
        : ring(std::move(r)), a_alpha(std::move(a)), a_alpha_prime(std::move(ap)) {}
};

CombinationParts combination_parts(const Field* f, size_t d, size_t n,
                                   const std::vector<size_t>& alpha, size_t row = 0);

struct IdentityReport {
    bool pass = false;
    long sign = 0;
    Poly lhs;        // the combination the identity evaluates
    Poly difference; // zero exactly when pass
    std::string detail;

    explicit IdentityReport(const RingPtr& r)
        : lhs(Poly::zero(r)), difference(Poly::zero(r)) {}
};

/// n = 2d-1 case: checks
///   sum_{i=0}^{d-1} (-1)^i i!(d-i-1)! S_i  ==  (-1)^{d-1} d! A'_alpha.
IdentityReport verify_evid(const Field* f, size_t d, const std::vector<size_t>& alpha,
                           size_t row = 0);

/// d < n < 2d-1 case: checks
///   sum_{i=2d-n-1}^{d-1} (-1)^i (i+n-2d+1)!(d-i-1)! S_i
///     ==  (-1)^{d-1}(n-d+1)! A'_alpha + (-1)^{n+1}(n-d+1)! T_{2d-n-2}.
IdentityReport verify_preevid(const Field* f, size_t d, size_t n,
                              const std::vector<size_t>& alpha, size_t row = 0);

/// Witness that c * target = sum of coeff * generator over an ideal basis.
struct MembershipCertificate {
    RingPtr ring;
    mpz_class c;
    Poly target;
    std::vector<std::pair<size_t, Poly>> pairs; // (generator index, coefficient)

    nlohmann::ordered_json to_json() const;
    static MembershipCertificate from_json(const nlohmann::ordered_json& j);
};

/// Certificate that c * (product of all entries) lies in the ideal of maximal
/// subpermanents of the generic d x (2d-1) matrix, with the prime factors of
/// c bounded by d. Built by induction on d.
MembershipCertificate moncor_certificate(size_t d);

IdentityReport verify_certificate(const MembershipCertificate& cert, const IdealBasis& basis);

/// The derived forms attached to the generic d x (d+1) matrix: maximal
/// permanents P_j (omitting column j), their partials B_{r,p,q}, and the
/// determinants f_p = det L_p and g_r = det W_r.
struct DPlusOneForms {
    RingPtr ring;
    size_t d = 0;
    PolyMatrix x;                      // the generic matrix itself
    std::vector<Poly> p;               // p[j], column j omitted, 0-based
    std::vector<std::vector<std::vector<Poly>>> b; // b[r][p][q]
    std::vector<Poly> f;               // f[p], 0-based
    std::vector<Poly> g;               // g[r], 0-based

    explicit DPlusOneForms(PolyMatrix grid) : ring(grid.ring()), x(std::move(grid)) {}

    PolyMatrix l_matrix(size_t p) const; // L_p, d x d
    PolyMatrix w_matrix(size_t r) const; // W_r, (d+1) x (d+1)
};

DPlusOneForms dplus1_forms(const Field* f, size_t d);

/// Checks the cofactor identities behind x_{i,j} f_j, x_{i,j} g_i membership:
///   x_11 f_1 = sum_{j!=1} (-1)^j e_j P_j,   x_11 g_1 = sum_j (-1)^{1+j} w_j P_j.
IdentityReport verify_structj(const Field* f, size_t d);

/// J_d: the d+1 maximal permanents, then f_1..f_{d+1}, then g_1..g_d.
IdealBasis j_ideal(const Field* f, size_t d);

/// Weakly decreasing block-size sequence; trailing 1s are dropped so the
/// empty sequence (printed "(1)") stands for the no-block type.
struct TypeSpec {
    std::vector<unsigned> v;

    static TypeSpec parse(const std::string& text);
    static TypeSpec of(std::vector<unsigned> parts);
    unsigned s() const;
    unsigned l() const { return (unsigned)v.size(); }
    unsigned dprime() const { return s() - l() + 1; }
    std::string str() const;
};

/// Choice of the submatrix M' and of the disjoint blocks inside it.
struct TypePlacement {
    std::vector<size_t> mrows, mcols;               // rows/cols of M' in M
    std::vector<std::vector<size_t>> brows, bcols;  // per block, subsets of the above
};

/// First placement in lexicographic order: M' on leading rows/columns with
/// the largest feasible row count, blocks consecutive along the diagonal.
TypePlacement canonical_placement(size_t d, size_t m, size_t n, const TypeSpec& spec);

/// Prime of type v: generated by the block permanents together with the
/// entries of M' not used by any block.
IdealBasis type_v_prime(const Field* f, size_t d, size_t m, size_t n, const TypeSpec& spec,
                        const TypePlacement& placement);

} // namespace permlab
