#pragma once

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace hennings {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct arithmetic_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Ground field k = Q(zeta_n), the n-th cyclotomic extension of the
/// rationals. n = 1 gives Q itself. Elements are represented modulo the
/// n-th cyclotomic polynomial Phi_n, so the representation is a field.
class FieldSpec {
public:
    static std::shared_ptr<const FieldSpec> make(int cyclotomic_order);

    int cyclotomic_order() const { return order_; }
    int degree() const { return degree_; }  // phi(n) = deg Phi_n

    // Monic modulus Phi_n, coefficient i is the x^i coefficient.
    const std::vector<mpq_class>& modulus() const { return modulus_; }

    bool same(const FieldSpec& other) const { return order_ == other.order_; }

private:
    FieldSpec(int order, std::vector<mpq_class> modulus);
    int order_;
    int degree_;
    std::vector<mpq_class> modulus_;
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

/// Exact element of Q(zeta_n): coefficient vector of length phi(n)
/// representing sum c_i zeta^i, always kept reduced mod Phi_n. GMP keeps
/// each rational in lowest terms with positive denominator, so equality
/// is plain coefficient comparison.
class Scalar {
public:
    Scalar() = default;
    explicit Scalar(FieldPtr field);                       // zero
    Scalar(FieldPtr field, const mpq_class& rational);     // constant
    Scalar(FieldPtr field, std::vector<mpq_class> coeffs); // reduced on entry

    static Scalar zero(const FieldPtr& field) { return Scalar(field); }
    static Scalar one(const FieldPtr& field) { return Scalar(field, mpq_class(1)); }
    static Scalar integer(const FieldPtr& field, long v) { return Scalar(field, mpq_class(v)); }
    static Scalar rational(const FieldPtr& field, long num, long den);
    static Scalar zeta(const FieldPtr& field, int power = 1);

    const FieldPtr& field() const { return field_; }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;  // throws arithmetic_error on zero

    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void check_compatible(const Scalar& o) const;
    FieldPtr field_;
    std::vector<mpq_class> c_;
};

/// Parses the scalar grammar: signed rational terms in `q`, e.g. "1/2",
/// "-3*q^2 + 1", "q + q^3". The alias `i` for q is accepted when n = 4.
/// Exponents >= n are reduced via zeta^n = 1, never rejected.
Scalar parse_scalar(const std::string& text, const FieldPtr& field);

}  // namespace hennings
