#include "torickit/polynomial.hpp"

#include "torickit/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace torickit {

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    const Rational n = o.norm();
    if (n == 0) throw std::domain_error("division by zero in Q(i)");
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
    int c = cmp(a.re_, b.re_);
    if (c == 0) c = cmp(a.im_, b.im_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string GaussianRational::to_string() const {
    if (im_ == 0) return torickit::to_string(re_);
    std::string imag = torickit::to_string(im_) + "*i";
    if (re_ == 0) return imag;
    return torickit::to_string(re_) + (im_ > 0 ? "+" : "") + imag;
}

namespace {

Rational parse_rational(const std::string& s, const std::string& whole) {
    if (s.empty() || s == "+" || s == "-") return s == "-" ? Rational(-1) : Rational(1);
    std::string t = s[0] == '+' ? s.substr(1) : s;
    auto valid = std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-'; });
    if (!valid || std::count(t.begin(), t.end(), '/') > 1)
        throw Error(ErrorCode::ParseError, "malformed rational in \"" + whole + "\"");
    Rational q;
    if (q.set_str(t, 10) != 0 || q.get_den() == 0)
        throw Error(ErrorCode::ParseError, "malformed rational in \"" + whole + "\"");
    q.canonicalize();
    return q;
}

}  // namespace

GaussianRational GaussianRational::parse(const std::string& raw) {
    std::string text;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) text += c;
    if (text.empty()) throw Error(ErrorCode::ParseError, "empty coefficient");
    if (text.back() != 'i') return {parse_rational(text, raw), 0};

    std::string body = text.substr(0, text.size() - 1);
    if (!body.empty() && body.back() == '*') body.pop_back();
    // Split at the last sign that is not leading: real part before it.
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;)
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    if (split == std::string::npos) return {0, parse_rational(body, raw)};
    return {parse_rational(body.substr(0, split), raw), parse_rational(body.substr(split), raw)};
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(std::vector<GaussianRational> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const GaussianRational& c) { return Polynomial({c}); }

Polynomial Polynomial::linear(const GaussianRational& root) { return Polynomial({-root, 1}); }

Polynomial Polynomial::monic(std::vector<GaussianRational> lower) {
    lower.emplace_back(1);
    return Polynomial(std::move(lower));
}

bool Polynomial::is_monic() const { return !coeffs_.empty() && coeffs_.back() == GaussianRational(1); }

std::vector<GaussianRational> Polynomial::lower_coefficients() const {
    if (coeffs_.empty()) return {};
    return {coeffs_.begin(), coeffs_.end() - 1};
}

GaussianRational Polynomial::operator()(const GaussianRational& z) const {
    GaussianRational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<GaussianRational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + GaussianRational(-1) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<GaussianRational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
}

Polynomial operator*(const GaussianRational& s, const Polynomial& p) {
    std::vector<GaussianRational> c = p.coeffs_;
    for (auto& x : c) x *= s;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::made_monic() const {
    if (is_zero()) return {};
    return (GaussianRational(1) / leading()) * *this;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result = constant(1);
    for (unsigned k = 0; k < e; ++k) result = result * *this;
    return result;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const auto& c = coeffs_[k];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const bool unit = c == GaussianRational(1);
        if (!unit || k == 0) os << '(' << c.to_string() << ')';
        if (k >= 1) os << 'z';
        if (k >= 2) os << '^' << k;
    }
    return os.str();
}

DivisionResult divide(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<GaussianRational> rem = a.coefficients();
    const auto& bc = b.coefficients();
    const long db = b.degree();
    std::vector<GaussianRational> quot(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db + 1) : 0);
    const GaussianRational inv_lead = GaussianRational(1) / b.leading();
    for (long k = a.degree(); k >= db; --k) {
        const GaussianRational q = rem[static_cast<std::size_t>(k)] * inv_lead;
        if (q.is_zero()) continue;
        quot[static_cast<std::size_t>(k - db)] = q;
        for (long j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k - db + j)] -= q * bc[static_cast<std::size_t>(j)];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a.made_monic();
    Polynomial y = b.made_monic();
    while (!y.is_zero()) {
        Polynomial r = divide(x, y).remainder.made_monic();
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

}  // namespace torickit
