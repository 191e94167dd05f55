#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qons {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};
struct ConfigError : Error {
    using Error::Error;
};

using Rational = mpq_class;

/// Laurent polynomial in q with rational coefficients. Terms are kept
/// sorted by exponent and never store a zero coefficient.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& c);
    explicit LaurentPoly(long c);
    static LaurentPoly q_power(int exp, const Rational& c = Rational(1));

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    size_t term_count() const { return terms_.size(); }
    int min_exp() const;
    int max_exp() const;
    const std::vector<std::pair<int, Rational>>& terms() const { return terms_; }
    Rational coeff(int exp) const;
    const Rational& leading_coeff() const;

    void add_term(int exp, const Rational& c);
    LaurentPoly shifted(int by) const;

    LaurentPoly operator+(const LaurentPoly&) const;
    LaurentPoly operator-(const LaurentPoly&) const;
    LaurentPoly operator*(const LaurentPoly&) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const Rational&) const;
    bool operator==(const LaurentPoly&) const = default;

    std::string str() const;

  private:
    std::vector<std::pair<int, Rational>> terms_;
};

// Ordinary-polynomial helpers (all exponents >= 0).
LaurentPoly poly_divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly* remainder);
LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b);

/// Element of Q(q). Values have a unique canonical form (denominator an
/// ordinary polynomial with positive leading coefficient and integer-
/// primitive content, no common factor with the numerator after clearing
/// q-powers); the stored representative is allowed to drift from it between
/// operations and is re-canonicalized adaptively, on comparison-for-display,
/// and on request. Zero tests and equality are exact either way.
class Scalar {
  public:
    Scalar() : den_(LaurentPoly(1)) {}
    Scalar(long n) : num_(LaurentPoly(n)), den_(LaurentPoly(1)) {}
    Scalar(const Rational& c) : num_(c), den_(LaurentPoly(1)) {}
    explicit Scalar(LaurentPoly num) : num_(std::move(num)), den_(LaurentPoly(1)) {}
    Scalar(LaurentPoly num, LaurentPoly den);

    static Scalar q_power(int exp) { return Scalar(LaurentPoly::q_power(exp)); }
    static const Scalar& zero();
    static const Scalar& one();

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    /// current representative (may carry a removable common factor)
    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    /// fully reduced canonical form
    Scalar canonicalized() const;

    Scalar operator+(const Scalar&) const;
    Scalar operator-(const Scalar&) const;
    Scalar operator*(const Scalar&) const;
    Scalar operator/(const Scalar&) const;
    Scalar operator-() const;
    Scalar inverse() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;  // value equality (cross-multiplied)

    std::string str() const;  // canonical rendering

  private:
    void normalize(bool coprime);
    void shrink();  // canonicalize when the representative grows past bounds
    LaurentPoly num_;
    LaurentPoly den_;
};

enum class ScalarOp { add, sub, mul, div };
Scalar scalar_arith(const Scalar& lhs, const Scalar& rhs, ScalarOp op);

/// [n]_q = q^{n-1} + q^{n-3} + ... + q^{1-n}
Scalar q_bracket(unsigned n);

// 64-bit modular arithmetic.
uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m);
uint64_t pow_mod(uint64_t a, uint64_t e, uint64_t m);
uint64_t inv_mod(uint64_t a, uint64_t p);
bool is_prime(uint64_t n);

/// Evaluation point for the modular filter: a machine-word prime together
/// with a residue for q that is invertible and not a low-order root of unity.
struct ModularPoint {
    uint64_t prime = 0;
    uint64_t q_value = 0;

    static ModularPoint make(uint64_t prime, uint64_t q_value, unsigned unity_order_bound = 100);
    static ModularPoint random(std::mt19937_64& rng, unsigned unity_order_bound = 100);
};

std::optional<uint64_t> eval_mod(const LaurentPoly& x, const ModularPoint& pt);
std::optional<uint64_t> eval_mod(const Scalar& x, const ModularPoint& pt);

}  // namespace qons
