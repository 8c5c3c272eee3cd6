#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "shiftedkeys/errors.hpp"

namespace shiftedkeys {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Element of Z[b], the coefficient ring.  b is the formal deformation
/// parameter (printed as `b`); coefficients are arbitrary-precision integers.
class BetaScalar {
public:
    BetaScalar() = default;
    BetaScalar(long v);
    explicit BetaScalar(BigInt v);

    /// c * b^k
    static BetaScalar of(BigInt c, int k);
    static BetaScalar beta(int k = 1);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    /// Degree in b, or -1 for zero.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const BigInt& coeff(int k) const;

    BetaScalar operator-() const;
    BetaScalar& operator+=(const BetaScalar& o);
    BetaScalar& operator-=(const BetaScalar& o);
    friend BetaScalar operator+(BetaScalar a, const BetaScalar& b) { return a += b; }
    friend BetaScalar operator-(BetaScalar a, const BetaScalar& b) { return a -= b; }
    friend BetaScalar operator*(const BetaScalar& a, const BetaScalar& b);
    friend bool operator==(const BetaScalar& a, const BetaScalar& b) { return a.c_ == b.c_; }
    friend bool operator!=(const BetaScalar& a, const BetaScalar& b) { return !(a == b); }
    friend bool operator<(const BetaScalar& a, const BetaScalar& b) { return a.c_ < b.c_; }

    /// Multiply by b^k.
    BetaScalar shifted(int k) const;
    /// Evaluate at b = v.
    BigInt at_beta(const BigInt& v) const;
    /// All coefficients nonnegative (membership in N[b]).
    bool is_natural() const;
    /// True when the scalar is c*b^k for a single power k (or zero).
    bool is_monomial() const;

    bool divisible_by(const BigInt& k) const;
    BetaScalar exact_div(const BigInt& k) const;

    /// "0", "3", "b", "-2*b^2", "1+2*b"
    std::string str() const;

private:
    void trim();
    std::vector<BigInt> c_; // c_[k] multiplies b^k; no trailing zeros
};

/// Exponent tuple of a monomial, trailing zeros stripped.  Variables are
/// 1-based: exps[0] is the power of x1.
using Exponents = std::vector<int>;

int total_degree(const Exponents& e);
/// Lexicographic order after padding with zeros on the right.
bool lex_less(const Exponents& a, const Exponents& b);
Exponents exps_add(const Exponents& a, const Exponents& b);
void canonicalize(Exponents& e);

struct LexLess {
    bool operator()(const Exponents& a, const Exponents& b) const { return lex_less(a, b); }
};

/// Capacity of the packed monomial key.  Everything in this library lives in
/// well under twenty variables; indices beyond the capacity fail loudly.
inline constexpr int kMaxVars = 20;

/// Fixed-width packed exponent vector; array comparison is exactly the padded
/// left-to-right lexicographic order.
struct Monomial {
    std::array<std::uint16_t, kMaxVars> e{};

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.e < b.e; }
    int degree() const;
    int var_bound() const;
};

Monomial pack_exponents(const Exponents& e);
Exponents unpack_exponents(const Monomial& m);

enum class Grading { XDegree, XMinusBeta };

/// Resource limits for polynomial arithmetic and expansion loops.  A breach
/// raises GuardError instead of letting a broken recurrence run away.
struct Guard {
    std::size_t max_terms = 8'000'000;
    int max_degree = 512;
    long max_iterations = 2'000'000;
};
Guard& guard();
void set_guard(const Guard& g);

/// Sparse multivariate polynomial over Z[b]: a flat term list sorted by the
/// packed monomial key, zero coefficients never stored.
class MultivariatePolynomial {
public:
    using Term = std::pair<Monomial, BetaScalar>;

    MultivariatePolynomial() = default;

    static MultivariatePolynomial zero() { return {}; }
    static MultivariatePolynomial constant(BetaScalar c);
    static MultivariatePolynomial monomial(Exponents e, BetaScalar c = BetaScalar(1));
    /// x_i (1-based).
    static MultivariatePolynomial variable(int i);
    /// x^alpha for a (canonical) exponent vector.
    static MultivariatePolynomial x_power(const Exponents& alpha);
    /// Normalize an arbitrary term list (sort, combine, drop zeros).
    static MultivariatePolynomial from_terms(std::vector<Term>&& raw);

    bool is_zero() const { return t_.empty(); }
    std::size_t term_count() const { return t_.size(); }
    const std::vector<Term>& raw_terms() const { return t_; }
    /// Materialized (exponents, coefficient) pairs in lex order.
    std::vector<std::pair<Exponents, BetaScalar>> terms() const;
    /// Largest variable index appearing (0 for constants).
    int var_bound() const;
    int min_x_degree() const;
    int max_x_degree() const;
    const BetaScalar& coeff(const Exponents& e) const;

    MultivariatePolynomial operator-() const;
    MultivariatePolynomial& operator+=(const MultivariatePolynomial& o);
    MultivariatePolynomial& operator-=(const MultivariatePolynomial& o);
    friend MultivariatePolynomial operator+(MultivariatePolynomial a, const MultivariatePolynomial& b) { return a += b; }
    friend MultivariatePolynomial operator-(MultivariatePolynomial a, const MultivariatePolynomial& b) { return a -= b; }
    friend MultivariatePolynomial operator*(const MultivariatePolynomial& a, const MultivariatePolynomial& b);
    MultivariatePolynomial& operator*=(const MultivariatePolynomial& o);
    friend bool operator==(const MultivariatePolynomial& a, const MultivariatePolynomial& b) { return a.t_ == b.t_; }
    friend bool operator!=(const MultivariatePolynomial& a, const MultivariatePolynomial& b) { return !(a == b); }
    friend bool operator<(const MultivariatePolynomial& a, const MultivariatePolynomial& b) { return a.t_ < b.t_; }

    MultivariatePolynomial scalar_mul(const BetaScalar& c) const;
    void add_term(const Exponents& e, const BetaScalar& c);

    /// Lexicographically minimal exponent with its coefficient; throws on zero.
    std::pair<Exponents, BetaScalar> lex_min_term() const;
    /// Divide every integer coefficient by k; remainder raises InvariantError.
    MultivariatePolynomial exact_div_int(const BigInt& k) const;
    MultivariatePolynomial homogeneous_part(int d, Grading g) const;
    bool is_homogeneous(Grading g) const;
    MultivariatePolynomial substitute_beta(const BigInt& v) const;
    /// Set x_{m+1} = x_{m+2} = ... = 0.
    MultivariatePolynomial truncate_vars(int m) const;
    /// Divide every term by x^e; a term not divisible raises InvariantError.
    MultivariatePolynomial exact_div_monomial(const Exponents& e) const;
    /// All monomial coefficients in N[b].
    bool is_natural() const;
    bool beta_free() const;

    /// Apply the simple transposition s_i to the variables (1-based i).
    MultivariatePolynomial swap_vars(int i) const;

    /// (f - s_i f)/(x_i - x_{i+1}), computed division-free.
    MultivariatePolynomial divided_difference(int i) const;
    /// x_i * f
    MultivariatePolynomial times_var(int i) const;
    /// (1 + b x_{i+1}) * f
    MultivariatePolynomial beta_twist(int i) const;
    /// Fused dd_i((x_i)^{mul_x} ((1 + b x_{i+1}) f)^{twist}): one pass, one sort.
    MultivariatePolynomial dd_pipeline(int i, bool mul_x, bool twist) const;

    std::string to_text() const;
    std::string to_json() const;
    std::string to_latex() const;
    static MultivariatePolynomial parse(const std::string& s);
    static MultivariatePolynomial from_json(const std::string& s);

private:
    void check_guard() const;
    std::vector<Term> t_;
};

using Poly = MultivariatePolynomial;

/// f + g + b*f*g
Poly oplus(const Poly& f, const Poly& g);

} // namespace shiftedkeys
