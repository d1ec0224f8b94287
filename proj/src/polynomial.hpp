#pragma once

#include <string>
#include <vector>

#include "rational.hpp"

namespace exspectra {

// Dense univariate polynomial over exact rationals, coefficients ascending by
// degree, trailing zeros trimmed. Immutable in spirit: operations return new
// values.
class Polynomial {
public:
    Polynomial() = default;  // zero polynomial
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial constant(const Rational& c);
    static Polynomial x();
    // c * x^k
    static Polynomial monomial(int k, const Rational& c);

    // -1 for the zero polynomial
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    // zero beyond the stored degree
    const Rational& coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial operator-() const;
    bool operator==(const Polynomial& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

    Rational eval(const Rational& x) const;
    double eval_double(double x) const;
    Polynomial derivative() const;
    // multiply by x^k
    Polynomial shifted_up(int k) const;

    // coefficients as "p/q" strings, ascending degree
    std::vector<std::string> coeff_strings() const;
    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

}  // namespace exspectra
