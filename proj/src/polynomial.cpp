#include "polynomial.hpp"

#include <stdexcept>

namespace exspectra {

namespace {
const Rational kZero = 0;
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) {
    Polynomial p;
    p.coeffs_.push_back(c);
    p.trim();
    return p;
}

Polynomial Polynomial::x() { return monomial(1, 1); }

Polynomial Polynomial::monomial(int k, const Rational& c) {
    if (k < 0) throw std::invalid_argument("negative monomial degree");
    Polynomial p;
    if (c != 0) {
        p.coeffs_.assign(static_cast<size_t>(k) + 1, kZero);
        p.coeffs_[static_cast<size_t>(k)] = c;
    }
    return p;
}

const Rational& Polynomial::coeff(int k) const {
    if (k < 0 || static_cast<size_t>(k) >= coeffs_.size()) return kZero;
    return coeffs_[static_cast<size_t>(k)];
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    std::vector<Rational> out(std::max(coeffs_.size(), rhs.coeffs_.size()), kZero);
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    std::vector<Rational> out(std::max(coeffs_.size(), rhs.coeffs_.size()), kZero);
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] -= rhs.coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return Polynomial();
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1, kZero);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Rational& c) const {
    if (c == 0) return Polynomial();
    std::vector<Rational> out(coeffs_);
    for (auto& v : out) v *= c;
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const { return *this * Rational(-1); }

Rational Polynomial::eval(const Rational& x) const {
    Rational acc = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * x + coeffs_[i];
    }
    return acc;
}

double Polynomial::eval_double(double x) const {
    double acc = 0.0;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * x + to_double(coeffs_[i]);
    }
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<Rational> out(coeffs_.size() - 1, kZero);
    for (size_t i = 1; i < coeffs_.size(); ++i) {
        out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::shifted_up(int k) const {
    if (k < 0) throw std::invalid_argument("negative shift");
    if (is_zero() || k == 0) return *this;
    std::vector<Rational> out(coeffs_.size() + static_cast<size_t>(k), kZero);
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i + static_cast<size_t>(k)] = coeffs_[i];
    return Polynomial(std::move(out));
}

std::vector<std::string> Polynomial::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(exspectra::to_string(c));
    return out;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i] == 0) continue;
        if (!s.empty()) s += coeffs_[i] > 0 ? " + " : " - ";
        else if (coeffs_[i] < 0) s += "-";
        Rational a = abs(coeffs_[i]);
        if (i == 0 || a != 1) s += a.get_str();
        if (i > 0) {
            s += "x";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

}  // namespace exspectra
