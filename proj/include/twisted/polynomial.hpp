#pragma once

#include <compare>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace twisted {

// Dense integer polynomial in q, index = exponent, canonical form (no
// trailing zeros; the zero polynomial stores nothing). All arithmetic is
// checked 64-bit: silent wraparound is forbidden, overflow throws.
class IntPolynomial {
  public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<long long> ascending_coefficients);
    explicit IntPolynomial(std::vector<long long> ascending_coefficients);

    static IntPolynomial constant(long long c);
    static IntPolynomial q();
    static IntPolynomial monomial(long long coefficient, int exponent);

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    long long coeff(int exponent) const;
    const std::vector<long long>& coefficients() const { return c_; }
    std::map<int, long long> sparse() const;

    IntPolynomial operator-() const;
    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial scaled(long long c) const;
    IntPolynomial times_q_power(int k) const;

    long long constant_term() const { return coeff(0); }
    long long at_one() const;
    long long derivative_at_one() const;

    // q^k * p(1/q): reverses coefficients into degree k. Requires k >= deg p.
    IntPolynomial reciprocal(int k) const;

    // Descending-exponent text: "q^2 - q", "q + 1", "2q^3 - 1", "0".
    std::string to_string() const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
    friend std::strong_ordering operator<=>(const IntPolynomial&, const IntPolynomial&) = default;

  private:
    void trim();
    std::vector<long long> c_;
};

}  // namespace twisted
