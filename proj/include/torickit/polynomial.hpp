#pragma once

#include "torickit/integer_matrix.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace torickit {

/// Element of Q(i), kept in canonical form by mpq_class.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long re) : re_(re) {}  // NOLINT: implicit integer promotion
    GaussianRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {0, 1}; }

    const Rational& real() const noexcept { return re_; }
    const Rational& imag() const noexcept { return im_; }
    bool is_zero() const { return re_ == 0 && im_ == 0; }
    Rational norm() const { return re_ * re_ + im_ * im_; }
    GaussianRational conj() const { return {re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    /// Lexicographic on (real, imag); used only to key point sets.
    friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b);

    /// Forms: "a/b" | "c/d*i" | "a/b+c/d*i".
    std::string to_string() const;
    /// Parses the forms produced by to_string() plus "i" and "-i".
    static GaussianRational parse(const std::string& text);

private:
    Rational re_ = 0;
    Rational im_ = 0;
};

/// Dense univariate polynomial over Q(i), coefficients in ascending degree.
/// The zero polynomial has no coefficients and degree -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<GaussianRational> coefficients);

    static Polynomial constant(const GaussianRational& c);
    /// z - root
    static Polynomial linear(const GaussianRational& root);
    /// Monic polynomial from the coefficients below the leading 1.
    static Polynomial monic(std::vector<GaussianRational> lower);

    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const;
    const std::vector<GaussianRational>& coefficients() const noexcept { return coeffs_; }
    const GaussianRational& leading() const { return coeffs_.back(); }
    /// Coefficients below the (unit) leading coefficient.
    std::vector<GaussianRational> lower_coefficients() const;

    GaussianRational operator()(const GaussianRational& z) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const GaussianRational& c, const Polynomial& p);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    Polynomial made_monic() const;
    Polynomial pow(unsigned e) const;

    std::string to_string() const;

private:
    void trim();
    std::vector<GaussianRational> coeffs_;
};

struct DivisionResult {
    Polynomial quotient;
    Polynomial remainder;
};

DivisionResult divide(const Polynomial& a, const Polynomial& b);

/// Monic gcd (zero if both inputs are zero) by the Euclidean algorithm,
/// normalizing each remainder to be monic.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace torickit
