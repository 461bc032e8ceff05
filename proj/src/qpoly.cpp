#include "cperm/qpoly.hpp"

#include "cperm/error.hpp"

namespace cperm {

namespace {
const Int kZero = 0;
}

void QPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPolynomial QPolynomial::q_integer(int m) {
    if (m < 0) throw invalid_argument_error("q-integer of a negative number");
    return QPolynomial(std::vector<Int>(static_cast<std::size_t>(m), Int(1)));
}

const Int& QPolynomial::coeff(int d) const {
    if (d < 0 || d >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(d)];
}

void QPolynomial::add_to_coeff(int d, const Int& v) {
    if (d < 0) throw invalid_argument_error("negative degree");
    if (d >= static_cast<int>(c_.size())) c_.resize(static_cast<std::size_t>(d) + 1, Int(0));
    c_[static_cast<std::size_t>(d)] += v;
    trim();
}

Int QPolynomial::evaluate(const Int& q) const {
    Int out = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * q + *it;
    return out;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
    if (other.c_.size() > c_.size()) c_.resize(other.c_.size(), Int(0));
    for (std::size_t d = 0; d < other.c_.size(); ++d) c_[d] += other.c_[d];
    trim();
    return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return QPolynomial::zero();
    std::vector<Int> out(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return QPolynomial(std::move(out));
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& other) {
    *this = *this * other;
    return *this;
}

std::string QPolynomial::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t d = 0; d < c_.size(); ++d) {
        if (c_[d] == 0) continue;
        if (!out.empty()) out += " + ";
        if (d == 0 || c_[d] != 1) out += c_[d].get_str();
        if (d >= 1) out += "q";
        if (d >= 2) out += "^" + std::to_string(d);
    }
    return out;
}

QPolynomial q_integer_product(int n, int r) {
    QPolynomial out = QPolynomial::one();
    for (int i = 1; i <= n; ++i) out *= QPolynomial::q_integer(i * r);
    return out;
}

}  // namespace cperm
