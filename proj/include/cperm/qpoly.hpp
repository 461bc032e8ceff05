#pragma once

#include <string>
#include <vector>

#include "cperm/rational.hpp"

namespace cperm {

// Polynomial in q with arbitrary-precision integer coefficients, stored
// densely by ascending degree with trailing zeros trimmed.
class QPolynomial {
  public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<Int> coefficients) : c_(std::move(coefficients)) { trim(); }

    static QPolynomial zero() { return QPolynomial(); }
    static QPolynomial one() { return QPolynomial({Int(1)}); }

    // [m]_q = 1 + q + ... + q^{m-1}.
    static QPolynomial q_integer(int m);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero

    const Int& coeff(int d) const;
    void add_to_coeff(int d, const Int& v);

    const std::vector<Int>& coefficients() const { return c_; }

    Int evaluate(const Int& q) const;

    QPolynomial& operator+=(const QPolynomial& other);
    QPolynomial& operator*=(const QPolynomial& other);
    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
    friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

    std::string to_string() const;  // "1 + 2q + q^3"

  private:
    void trim();

    std::vector<Int> c_;
};

// prod_{i=1}^{n} [i*r]_q.
QPolynomial q_integer_product(int n, int r);

}  // namespace cperm
