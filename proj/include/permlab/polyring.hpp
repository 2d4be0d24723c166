#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "permlab/field.hpp"

namespace permlab {

// Hard cap on ring width; monomials store a fixed exponent block so that
// arithmetic never allocates per-monomial.
constexpr size_t kMaxVars = 64;

struct Monomial {
    std::array<uint16_t, kMaxVars> e{};
    uint32_t deg = 0;

    bool is_one() const { return deg == 0; }
    uint16_t operator[](size_t i) const { return e[i]; }

    static Monomial one() { return Monomial{}; }
    static Monomial var(size_t i, uint16_t exp = 1) {
        Monomial m;
        m.e[i] = exp;
        m.deg = exp;
        return m;
    }

    Monomial mul(const Monomial& o, size_t nvars) const;
    bool divides(const Monomial& o, size_t nvars) const;     // this | o
    Monomial divide(const Monomial& o, size_t nvars) const;  // this / o
    static Monomial lcm(const Monomial& a, const Monomial& b, size_t nvars);
    bool coprime(const Monomial& o, size_t nvars) const;
    bool equal(const Monomial& o, size_t nvars) const;
    size_t hash(size_t nvars) const;
};

struct MonomialOrder {
    enum class Kind { degrevlex, lex };
    Kind kind = Kind::degrevlex;

    static MonomialOrder degrevlex() { return {Kind::degrevlex}; }
    static MonomialOrder lex() { return {Kind::lex}; }
    std::string name() const { return kind == Kind::degrevlex ? "degrevlex" : "lex"; }
    bool operator==(const MonomialOrder& o) const { return kind == o.kind; }
};

// cmp < 0 when a is smaller than b under the order.
int mono_cmp(const Monomial& a, const Monomial& b, size_t nvars, MonomialOrder order);

/// Polynomial ring over a Field with named variables.  Rings are interned;
/// pointer equality decides whether two polynomials are compatible.
class PolyRing {
  public:
    static std::shared_ptr<const PolyRing> make(const Field* field,
                                                const std::vector<std::string>& vars);

    const Field* field() const { return field_; }
    size_t nvars() const { return vars_.size(); }
    const std::string& var_name(size_t i) const { return vars_[i]; }
    const std::vector<std::string>& vars() const { return vars_; }
    std::optional<size_t> var_index(const std::string& name) const;

  private:
    PolyRing(const Field* f, std::vector<std::string> v) : field_(f), vars_(std::move(v)) {}
    const Field* field_;
    std::vector<std::string> vars_;
    std::map<std::string, size_t> index_;
    friend struct PolyRingIntern;
};

using RingPtr = std::shared_ptr<const PolyRing>;

struct Term {
    Monomial m;
    Scalar c;
};

/// Sparse multivariate polynomial in canonical form: terms strictly
/// descending in graded reverse lexicographic order, no zero coefficients;
/// the zero polynomial has no terms.
class Poly {
  public:
    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
    static Poly constant(RingPtr ring, const Scalar& c);
    static Poly from_int(RingPtr ring, long v);
    static Poly variable(RingPtr ring, size_t idx);
    static Poly term(RingPtr ring, const Monomial& m, const Scalar& c);
    // terms may arrive unsorted / duplicated; normalizes
    static Poly from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }
    size_t nterms() const { return t_.size(); }
    uint32_t total_degree() const; // 0 for the zero polynomial
    uint32_t degree_in(size_t var) const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly scaled(const Scalar& c) const;
    // this * c * m
    Poly scaled_shifted(const Scalar& c, const Monomial& m) const;
    Poly pow(uint32_t e) const;
    Poly derivative(size_t var) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Scalar coefficient_of(const Monomial& m) const; // zero scalar if absent
    Scalar evaluate(const std::vector<Scalar>& point) const;

    // Ring morphism: bound variables map to polynomials of the target ring,
    // unbound ones pass through by name (they must exist in the target).
    Poly substitute(const std::map<std::string, Poly>& bindings, const RingPtr& target) const;

    std::string str() const;
    static Poly parse(const RingPtr& ring, const std::string& text);

  private:
    void assert_same_ring(const Poly& o) const;
    RingPtr ring_;
    std::vector<Term> t_;
};

inline Poly operator*(const Scalar& c, const Poly& p) { return p.scaled(c); }

} // namespace permlab
