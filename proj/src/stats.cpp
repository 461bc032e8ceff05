#include "cperm/stats.hpp"

#include <sstream>

namespace cperm {

bool descent_at(const ColoredPermutation& x, int i, const TotalOrder& order) {
    if (i < 1 || i > x.n()) throw invalid_argument_error("descent position out of range");
    const ColoredLetter here = x.letter_at(i);
    const ColoredLetter next =
        (i < x.n()) ? x.letter_at(i + 1) : ColoredLetter{x.n() + 1, 0};
    return order.less(next, here);
}

DescentSet descent_set(const ColoredPermutation& x, const TotalOrder& order) {
    DescentSet out;
    for (int i = 1; i <= x.n(); ++i)
        if (descent_at(x, i, order)) out.push_back(i);
    return out;
}

long des(const ColoredPermutation& x, const TotalOrder& order) {
    long count = 0;
    for (int i = 1; i <= x.n(); ++i) count += descent_at(x, i, order);
    return count;
}

long maj(const ColoredPermutation& x, const TotalOrder& order) {
    long sum = 0;
    for (int i = 1; i < x.n(); ++i)
        if (descent_at(x, i, order)) sum += i;
    return sum;
}

long col(const ColoredPermutation& x) {
    long sum = 0;
    for (int i = 1; i <= x.n(); ++i) sum += x.tau(i);
    return sum;
}

long fmaj(const ColoredPermutation& x, const TotalOrder& order) {
    return static_cast<long>(x.r()) * maj(x, order) + col(x);
}

Statistic Statistic::indicator_X(int i) {
    if (i < 1) throw invalid_argument_error("X index must be >= 1");
    return {Kind::X, i, 0};
}

Statistic Statistic::indicator_Y(int i, int c) {
    if (i < 1) throw invalid_argument_error("Y index must be >= 1");
    if (c < 0) throw invalid_argument_error("Y color must be >= 0");
    return {Kind::Y, i, c};
}

long Statistic::eval(const ColoredPermutation& x, const TotalOrder& order) const {
    switch (kind) {
        case Kind::Des: return cperm::des(x, order);
        case Kind::Maj: return cperm::maj(x, order);
        case Kind::Col: return cperm::col(x);
        case Kind::Fmaj: return cperm::fmaj(x, order);
        case Kind::X:
            if (i > x.n()) throw invalid_argument_error("X index out of range");
            return descent_at(x, i, order) ? 1 : 0;
        case Kind::Y:
        default:
            if (i > x.n()) throw invalid_argument_error("Y index out of range");
            if (c >= x.r()) throw invalid_argument_error("Y color out of range");
            return x.tau(i) == c ? 1 : 0;
    }
}

long Statistic::max_value(int n, int r) const {
    const long ln = n;
    const long lr = r;
    switch (kind) {
        case Kind::Des: return ln;
        case Kind::Maj: return ln * (ln - 1) / 2;
        case Kind::Col: return ln * (lr - 1);
        case Kind::Fmaj: return lr * ln * (ln - 1) / 2 + ln * (lr - 1);
        case Kind::X:
        case Kind::Y:
        default: return 1;
    }
}

std::string Statistic::name() const {
    switch (kind) {
        case Kind::Des: return "des";
        case Kind::Maj: return "maj";
        case Kind::Col: return "col";
        case Kind::Fmaj: return "fmaj";
        case Kind::X: return "X:" + std::to_string(i);
        case Kind::Y:
        default: return "Y:" + std::to_string(i) + ":" + std::to_string(c);
    }
}

Statistic Statistic::parse(const std::string& name) {
    if (name == "des") return des();
    if (name == "maj") return maj();
    if (name == "col") return col();
    if (name == "fmaj") return fmaj();
    std::istringstream in(name);
    std::string head;
    std::getline(in, head, ':');
    try {
        if (head == "X") {
            std::string idx;
            if (!std::getline(in, idx, ':')) throw parse_error("X needs an index");
            return indicator_X(std::stoi(idx));
        }
        if (head == "Y") {
            std::string idx, color;
            if (!std::getline(in, idx, ':') || !std::getline(in, color, ':'))
                throw parse_error("Y needs an index and a color");
            return indicator_Y(std::stoi(idx), std::stoi(color));
        }
    } catch (const error&) {
        throw;
    } catch (const std::exception&) {
        throw parse_error("bad statistic parameters in '" + name + "'");
    }
    throw parse_error("unknown statistic '" + name + "'");
}

}  // namespace cperm
