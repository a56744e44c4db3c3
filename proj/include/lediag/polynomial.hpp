#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lediag {

using BigInt = boost::multiprecision::cpp_int;

/// Dense polynomial with exact integer coefficients, stored from the
/// constant term upward. The zero polynomial has an empty coefficient list.
class IntPolynomial {
public:
    IntPolynomial() = default;

    explicit IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
        normalize();
    }

    static IntPolynomial zero() { return IntPolynomial{}; }

    static IntPolynomial constant(BigInt c) {
        IntPolynomial p;
        p.coeffs_.push_back(std::move(c));
        p.normalize();
        return p;
    }

    static IntPolynomial one() { return constant(1); }

    /// c * q^e
    static IntPolynomial monomial(BigInt c, int exponent) {
        if (exponent < 0) throw std::invalid_argument("monomial: negative exponent");
        IntPolynomial p;
        if (c != 0) {
            p.coeffs_.assign(static_cast<std::size_t>(exponent) + 1, BigInt{0});
            p.coeffs_.back() = std::move(c);
        }
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree, or -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const BigInt& coeff(int i) const {
        static const BigInt kZero{0};
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
        return coeffs_[static_cast<std::size_t>(i)];
    }

    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    void add_to_coeff(int i, const BigInt& v) {
        if (i < 0) throw std::invalid_argument("add_to_coeff: negative exponent");
        if (static_cast<std::size_t>(i) >= coeffs_.size()) coeffs_.resize(static_cast<std::size_t>(i) + 1);
        coeffs_[static_cast<std::size_t>(i)] += v;
        normalize();
    }

    BigInt evaluate(const BigInt& x) const {
        BigInt acc = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt{0});
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
        return IntPolynomial{std::move(c)};
    }

    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt{0});
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
        return IntPolynomial{std::move(c)};
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt{0});
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return IntPolynomial{std::move(c)};
    }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

    /// Coefficient list from the constant term upward, e.g. "0 -3 6 -4 1".
    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) out += ' ';
            out += coeffs_[i].str();
        }
        return out;
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigInt> coeffs_;
};

/// Integer Laurent polynomial: exact coefficients over a bounded range of
/// possibly negative exponents. Normalization drops zero coefficients at
/// both ends.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;

    LaurentPolynomial(int min_exp, std::vector<BigInt> coeffs)
        : min_exp_(min_exp), coeffs_(std::move(coeffs)) {
        normalize();
    }

    static LaurentPolynomial from(const IntPolynomial& p) { return {0, p.coeffs()}; }

    bool is_zero() const { return coeffs_.empty(); }
    int min_exp() const { return min_exp_; }
    int max_exp() const { return min_exp_ + static_cast<int>(coeffs_.size()) - 1; }

    const BigInt& coeff(int e) const {
        static const BigInt kZero{0};
        int i = e - min_exp_;
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
        return coeffs_[static_cast<std::size_t>(i)];
    }

    /// Multiply by t^delta.
    LaurentPolynomial shifted(int delta) const {
        if (is_zero()) return {};
        return {min_exp_ + delta, coeffs_};
    }

    bool is_polynomial() const { return is_zero() || min_exp_ >= 0; }

    IntPolynomial to_int_polynomial() const {
        if (is_zero()) return IntPolynomial::zero();
        if (min_exp_ < 0) throw std::domain_error("LaurentPolynomial: negative exponents survive normalization");
        std::vector<BigInt> c(static_cast<std::size_t>(min_exp_), BigInt{0});
        c.insert(c.end(), coeffs_.begin(), coeffs_.end());
        return IntPolynomial{std::move(c)};
    }

    friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        int lo = std::min(a.min_exp_, b.min_exp_);
        int hi = std::max(a.max_exp(), b.max_exp());
        std::vector<BigInt> c(static_cast<std::size_t>(hi - lo + 1), BigInt{0});
        for (int e = lo; e <= hi; ++e) c[static_cast<std::size_t>(e - lo)] = a.coeff(e) + b.coeff(e);
        return {lo, std::move(c)};
    }

    friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a + b.negated();
    }

    LaurentPolynomial negated() const {
        LaurentPolynomial r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) = default;

    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::string out = "t^" + std::to_string(min_exp_) + " * (";
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) out += ' ';
            out += coeffs_[i].str();
        }
        return out + ")";
    }

private:
    void normalize() {
        std::size_t drop = 0;
        while (drop < coeffs_.size() && coeffs_[drop] == 0) ++drop;
        if (drop) {
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(drop));
            min_exp_ += static_cast<int>(drop);
        }
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
        if (coeffs_.empty()) min_exp_ = 0;
    }

    int min_exp_ = 0;
    std::vector<BigInt> coeffs_;
};

}  // namespace lediag
