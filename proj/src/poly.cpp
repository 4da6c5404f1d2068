#include "chowlab/poly.hpp"

#include <sstream>

namespace chowlab {

IntPolynomial::IntPolynomial(mpz_class c) {
    if (c != 0) c_.push_back(std::move(c));
}

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
    trim();
}

IntPolynomial IntPolynomial::monomial(int power, mpz_class coeff) {
    if (power < 0) throw ArgumentError("monomial: negative power");
    if (coeff == 0) return IntPolynomial();
    std::vector<mpz_class> c(power + 1, mpz_class(0));
    c[power] = std::move(coeff);
    return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class IntPolynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return mpz_class(0);
    return c_[k];
}

bool IntPolynomial::nonneg_coeffs() const {
    for (const auto& c : c_)
        if (c < 0) return false;
    return true;
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), mpz_class(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), mpz_class(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::reversed(int rank) const {
    if (degree() > rank)
        throw DomainError("reversed: degree " + std::to_string(degree()) +
                          " exceeds interval rank " + std::to_string(rank));
    if (is_zero()) return IntPolynomial();
    std::vector<mpz_class> c(rank + 1, mpz_class(0));
    for (size_t i = 0; i < c_.size(); ++i) c[rank - i] = c_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::div_x_minus_one() const {
    // Synthetic division: p = (x-1) q + p(1), exact iff p(1) == 0.
    if (is_zero()) return IntPolynomial();
    std::vector<mpz_class> q(c_.size() - 1, mpz_class(0));
    mpz_class carry(0); // running coefficient of the quotient, from the top down
    for (int i = static_cast<int>(c_.size()) - 1; i >= 1; --i) {
        carry += c_[i];
        q[i - 1] = carry;
    }
    mpz_class rem = carry + c_[0];
    if (rem != 0)
        throw DomainError("div_x_minus_one: remainder " + rem.get_str() + " for " + str());
    return IntPolynomial(std::move(q));
}

std::string IntPolynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        mpz_class a = c_[k];
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (k == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str();
            os << "x";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

} // namespace chowlab
