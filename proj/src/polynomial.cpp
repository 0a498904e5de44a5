#include "twisted/polynomial.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace twisted {

namespace {

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow");
    return r;
}

}  // namespace

IntPolynomial::IntPolynomial(std::initializer_list<long long> ascending_coefficients)
    : c_(ascending_coefficients) {
    trim();
}

IntPolynomial::IntPolynomial(std::vector<long long> ascending_coefficients)
    : c_(std::move(ascending_coefficients)) {
    trim();
}

IntPolynomial IntPolynomial::constant(long long c) { return IntPolynomial{c}; }

IntPolynomial IntPolynomial::q() { return IntPolynomial{0, 1}; }

IntPolynomial IntPolynomial::monomial(long long coefficient, int exponent) {
    if (exponent < 0) throw std::invalid_argument("negative exponent");
    std::vector<long long> c(static_cast<size_t>(exponent) + 1, 0);
    c.back() = coefficient;
    return IntPolynomial(std::move(c));
}

long long IntPolynomial::coeff(int exponent) const {
    if (exponent < 0 || exponent >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<size_t>(exponent)];
}

std::map<int, long long> IntPolynomial::sparse() const {
    std::map<int, long long> m;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) m[static_cast<int>(i)] = c_[i];
    return m;
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial r = *this;
    for (auto& c : r.c_) c = checked_mul(c, -1);
    return r;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    IntPolynomial r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = checked_add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
    r.trim();
    return r;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const { return *this + (-o); }

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    IntPolynomial r;
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] = checked_add(r.c_[i + j], checked_mul(c_[i], o.c_[j]));
    r.trim();
    return r;
}

IntPolynomial IntPolynomial::scaled(long long c) const {
    IntPolynomial r = *this;
    for (auto& x : r.c_) x = checked_mul(x, c);
    r.trim();
    return r;
}

IntPolynomial IntPolynomial::times_q_power(int k) const {
    if (k < 0) throw std::invalid_argument("negative shift");
    if (is_zero()) return {};
    IntPolynomial r;
    r.c_.assign(static_cast<size_t>(k), 0);
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

long long IntPolynomial::at_one() const {
    long long s = 0;
    for (long long c : c_) s = checked_add(s, c);
    return s;
}

long long IntPolynomial::derivative_at_one() const {
    long long s = 0;
    for (size_t i = 1; i < c_.size(); ++i) s = checked_add(s, checked_mul(c_[i], static_cast<long long>(i)));
    return s;
}

IntPolynomial IntPolynomial::reciprocal(int k) const {
    if (k < degree()) throw std::invalid_argument("reciprocal degree below polynomial degree");
    IntPolynomial r;
    r.c_.assign(static_cast<size_t>(k) + 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[static_cast<size_t>(k) - i] = c_[i];
    r.trim();
    return r;
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int e = degree(); e >= 0; --e) {
        long long c = coeff(e);
        if (c == 0) continue;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        long long mag = std::llabs(c);
        if (mag != 1 || e == 0) out << mag;
        if (e >= 1) out << "q";
        if (e >= 2) out << "^" << e;
    }
    return out.str();
}

void IntPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

}  // namespace twisted
