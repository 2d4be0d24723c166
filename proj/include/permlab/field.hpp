#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "permlab/error.hpp"

namespace permlab {

using Rat = mpq_class;

// Element of QQ(i), both parts exact rationals.
struct Gaussian {
    Rat re;
    Rat im;
    bool operator==(const Gaussian& o) const { return re == o.re && im == o.im; }
};

enum class FieldKind { rationals, gaussian_rationals, prime, extension };

/// An exact coefficient field.  Instances are interned and immutable, so a
/// plain pointer identifies a field for the lifetime of the process.
///
/// Finite-field elements are carried as integer codes in [0, q).  For a prime
/// field the code is the residue.  For GF(p^k) the code packs the coefficient
/// vector of the residue polynomial base p (constant digit first), and
/// multiplication runs through discrete exp/log tables built once per field.
class Field {
  public:
    static const Field* rationals();
    static const Field* gaussian_rationals();
    static const Field* prime(uint32_t p);
    static const Field* extension(uint32_t p, uint32_t k);

    // Grammar: QQ | QQi | F<p> | GF<p>^<k>
    static const Field* parse(const std::string& spec);

    FieldKind kind() const { return kind_; }
    bool finite() const { return kind_ == FieldKind::prime || kind_ == FieldKind::extension; }
    uint32_t characteristic() const { return finite() ? p_ : 0; }
    uint32_t p() const { return p_; }
    uint32_t k() const { return k_; }
    uint32_t size() const { return q_; } // finite fields only
    std::string name() const;

    // Modulus coefficients, constant term first, degree k monic (extension only).
    const std::vector<uint32_t>& modulus() const { return modulus_; }
    uint32_t generator_code() const { return generator_; }
    // exp table: index e in [0, q-1) -> code of g^e.  log table: code -> e.
    const std::vector<uint32_t>& exp_table() const { return exp_; }
    const std::vector<uint32_t>& log_table() const { return log_; }

    // Raw finite-field arithmetic on codes.
    uint32_t ff_add(uint32_t a, uint32_t b) const;
    uint32_t ff_sub(uint32_t a, uint32_t b) const;
    uint32_t ff_neg(uint32_t a) const;
    uint32_t ff_mul(uint32_t a, uint32_t b) const;
    uint32_t ff_inv(uint32_t a) const;
    uint32_t ff_pow(uint32_t a, uint64_t e) const;
    uint32_t ff_from_int(long v) const;

  private:
    Field() = default;
    Field(const Field&) = delete;

    FieldKind kind_ = FieldKind::rationals;
    uint32_t p_ = 0, k_ = 0, q_ = 0;
    uint32_t generator_ = 0;
    std::vector<uint32_t> modulus_;
    std::vector<uint32_t> exp_;
    std::vector<uint32_t> log_;

    friend class FieldRegistry;
};

/// A value in some Field.  Arithmetic between scalars of different fields is
/// an error, never a coercion.
class Scalar {
  public:
    Scalar() : f_(Field::rationals()), v_(Rat(0)) {}

    static Scalar zero(const Field* f);
    static Scalar one(const Field* f);
    static Scalar from_int(const Field* f, long v);
    static Scalar from_rat(const Field* f, const Rat& r);
    static Scalar from_gaussian(const Rat& re, const Rat& im);
    static Scalar from_code(const Field* f, uint32_t code);

    // Text forms: -7, 2/3, 3+2i, residues, g^5, 0.
    static Scalar parse(const Field* f, const std::string& text);

    const Field* field() const { return f_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar inv() const;
    Scalar pow(uint64_t e) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;

    // Payload accessors; the caller must know the field kind.
    const Rat& rat() const { return std::get<Rat>(v_); }
    const Gaussian& gauss() const { return std::get<Gaussian>(v_); }
    uint32_t code() const { return std::get<uint32_t>(v_); }

    // True when the value is a rational integer (QQ only).
    bool is_integer() const;

  private:
    Scalar(const Field* f, std::variant<Rat, Gaussian, uint32_t> v)
        : f_(f), v_(std::move(v)) {}

    void check_same(const Scalar& o) const;

    const Field* f_;
    std::variant<Rat, Gaussian, uint32_t> v_;
};

// Multiplies n! as an exact integer; helper shared by several identities.
mpz_class factorial(unsigned n);

} // namespace permlab
