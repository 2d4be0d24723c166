#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permlab/groebner.hpp"
#include "permlab/permideal.hpp"

namespace permlab {

/// A named matrix template. Numeric families carry exact scalar entries;
/// parameterized ones carry polynomials in a few named parameters.
struct Family {
    std::string id;
    size_t d = 0; // subpermanent size the family is built to kill
    std::optional<ScalarMatrix> numeric;
    std::optional<PolyMatrix> symbolic;
    std::vector<std::string> params;

    size_t rows() const { return numeric ? numeric->rows() : symbolic->rows(); }
    size_t cols() const { return numeric ? numeric->cols() : symbolic->cols(); }
};

/// Fixed template instantiation. Known ids: dxd1 (takes d >= 2),
/// four-by-six, param-A, param-B, degenerate-1..degenerate-4.
Family family_matrix(const std::string& id, size_t d = 0);

/// All known ids in canonical order (dxd1 listed once, parameterless).
std::vector<std::string> family_ids();

struct FamilyReport {
    std::string id;
    size_t d = 0;
    size_t checked = 0;
    bool pass = true;
    std::vector<std::string> failing; // offending selector = value
};

/// Checks that every d x d subpermanent vanishes: as an exact scalar for
/// numeric families, as the zero polynomial for parameterized ones (hence
/// for every specialization of the parameters).
FamilyReport verify_family(const std::string& id, size_t d = 0);

struct HSigmaReport {
    bool printed_identity_holds = false;
    Poly difference; // (sigma1*sigma3 - sigma4) - h
    std::string finding;
};

/// Expands h = u^2(ab+ac+bc) + u(a^2b+...+bc^2) + (a^2bc+ab^2c+abc^2) and
/// compares it against sigma1*sigma3 - sigma4 in QQ[a,b,c,u]. Any mismatch
/// is reported with the exact difference polynomial, never patched.
HSigmaReport verify_h_sigma();

struct JPrimeReport {
    IdealBasis set_a; // subpermanents after the shift A = a+u, ..., F = f+u
    IdealBasis set_b; // the displayed quadruple
    bool a_in_b = false;
    bool b_in_a = false;
    bool relation_member = false; // B*C*D + u^2*(A-B-C) modulo set_b
    Poly relation_remainder;
};

/// Both containments between the shifted subpermanent generators and the
/// reorganized quadruple, plus the cleared-denominator relation check.
JPrimeReport jprime_generators(GroebnerCache* cache = nullptr);

struct J3PointsReport {
    bool pass = false;
    std::vector<std::string> failing;     // nonzero evaluations at param-A/B
    std::vector<std::string> dxd1_values; // informational values at dxd1, d=3
};

/// Substitutes param-A and param-B into the eleven generators of the d=3
/// block ideal; every generator must vanish identically in QQ[a].
J3PointsReport verify_j3_points();

/// Union of the rational roots of the param-A entries: the exact set of
/// parameter values at which the family loses full support.
std::vector<Rat> param_a_exclusions();

} // namespace permlab
