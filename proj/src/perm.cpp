#include "cperm/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace cperm {

namespace {

void check_dims(int n, int r) {
    if (n < 1) throw invalid_argument_error("n must be >= 1");
    if (r < 1) throw invalid_argument_error("r must be >= 1");
}

}  // namespace

ColoredPermutation::ColoredPermutation(int n, int r, std::vector<int> omega, std::vector<int> tau)
    : n_(n), r_(r), omega_(std::move(omega)), tau_(std::move(tau)) {
    check_dims(n, r);
    if (omega_.size() != static_cast<std::size_t>(n) || tau_.size() != static_cast<std::size_t>(n))
        throw invalid_argument_error("omega/tau length must equal n");
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : omega_) {
        if (v < 1 || v > n) throw invalid_argument_error("omega entry out of range");
        if (seen[static_cast<std::size_t>(v)]++) throw invalid_argument_error("omega is not a bijection");
    }
    for (int c : tau_)
        if (c < 0 || c >= r) throw invalid_argument_error("color out of range");
}

ColoredPermutation ColoredPermutation::identity(int n, int r) {
    check_dims(n, r);
    std::vector<int> omega(static_cast<std::size_t>(n));
    std::iota(omega.begin(), omega.end(), 1);
    return ColoredPermutation(n, r, std::move(omega), std::vector<int>(static_cast<std::size_t>(n), 0));
}

ColoredLetter ColoredPermutation::act(ColoredLetter l) const {
    if (l.value < 1 || l.value > n_ || l.color < 0 || l.color >= r_)
        throw invalid_argument_error("letter out of range");
    return {omega(l.value), (tau(l.value) + l.color) % r_};
}

bool ColoredPermutation::is_identity() const {
    for (int i = 1; i <= n_; ++i)
        if (omega(i) != i || tau(i) != 0) return false;
    return true;
}

ColoredPermutation compose(const ColoredPermutation& a, const ColoredPermutation& b) {
    if (a.n() != b.n() || a.r() != b.r())
        throw invalid_argument_error("compose: mismatched n or r");
    const int n = a.n();
    const int r = a.r();
    std::vector<int> omega(static_cast<std::size_t>(n));
    std::vector<int> tau(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        omega[static_cast<std::size_t>(i - 1)] = a.omega(b.omega(i));
        tau[static_cast<std::size_t>(i - 1)] = (a.tau(b.omega(i)) + b.tau(i)) % r;
    }
    return ColoredPermutation(n, r, std::move(omega), std::move(tau));
}

ColoredPermutation inverse(const ColoredPermutation& x) {
    const int n = x.n();
    const int r = x.r();
    std::vector<int> omega(static_cast<std::size_t>(n));
    std::vector<int> tau(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) omega[static_cast<std::size_t>(x.omega(i) - 1)] = i;
    for (int i = 1; i <= n; ++i) {
        const int oi = omega[static_cast<std::size_t>(i - 1)];  // omega^{-1}(i)
        tau[static_cast<std::size_t>(i - 1)] = (r - x.tau(oi)) % r;
    }
    return ColoredPermutation(n, r, std::move(omega), std::move(tau));
}

CycleDecomposition to_cycles(const ColoredPermutation& x) {
    const int n = x.n();
    CycleDecomposition out;
    out.n = n;
    out.r = x.r();
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int start = 1; start <= n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        // Walk the omega-cycle of the smallest unseen value; writing the
        // letter omega(i)^{tau(i)} for each source i starting at the
        // minimum puts the image of the minimum first.
        std::vector<ColoredLetter> cycle;
        int i = start;
        do {
            seen[static_cast<std::size_t>(i)] = 1;
            cycle.push_back({x.omega(i), x.tau(i)});
            i = x.omega(i);
        } while (i != start);
        out.cycles.push_back(std::move(cycle));
    }
    return out;
}

ColoredPermutation from_raw_cycles(const RawCycles& cycles, int n, int r) {
    check_dims(n, r);
    std::vector<int> omega(static_cast<std::size_t>(n), 0);
    std::vector<int> tau(static_cast<std::size_t>(n), 0);
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& cycle : cycles) {
        if (cycle.empty()) throw parse_error("empty cycle");
        for (std::size_t h = 0; h < cycle.size(); ++h) {
            const ColoredLetter cur = cycle[h];
            const ColoredLetter next = cycle[(h + 1) % cycle.size()];
            if (cur.value < 1 || cur.value > n || cur.color < 0 || cur.color >= r)
                throw parse_error("cycle letter out of range");
            if (seen[static_cast<std::size_t>(cur.value)])
                throw parse_error("value repeated in cycles: " + std::to_string(cur.value));
            seen[static_cast<std::size_t>(cur.value)] = 1;
            // The letter following i^c is the image of i^0.
            omega[static_cast<std::size_t>(cur.value - 1)] = next.value;
            tau[static_cast<std::size_t>(cur.value - 1)] = next.color;
        }
    }
    for (int v = 1; v <= n; ++v)
        if (!seen[static_cast<std::size_t>(v)])
            throw parse_error("value missing from cycles: " + std::to_string(v));
    return ColoredPermutation(n, r, std::move(omega), std::move(tau));
}

ColoredPermutation from_cycles(const CycleDecomposition& c) {
    return from_raw_cycles(c.cycles, c.n, c.r);
}

std::string to_string(ColoredLetter l) {
    return std::to_string(l.value) + "^" + std::to_string(l.color);
}

std::string one_line_string(const ColoredPermutation& x) {
    std::string out;
    for (int i = 1; i <= x.n(); ++i) {
        if (i > 1) out += ' ';
        out += to_string(x.letter_at(i));
    }
    return out;
}

std::string raw_cycles_string(const RawCycles& cycles) {
    std::string out;
    for (const auto& cycle : cycles) {
        out += '(';
        for (std::size_t h = 0; h < cycle.size(); ++h) {
            if (h > 0) out += ' ';
            out += to_string(cycle[h]);
        }
        out += ')';
    }
    return out;
}

std::string cycle_string(const CycleDecomposition& c) { return raw_cycles_string(c.cycles); }

std::string cycle_string(const ColoredPermutation& x) { return cycle_string(to_cycles(x)); }

ColoredLetter parse_letter(const std::string& token, int r) {
    const auto caret = token.find('^');
    if (caret == std::string::npos || caret == 0 || caret + 1 == token.size())
        throw parse_error("expected value^color, got '" + token + "'");
    ColoredLetter l;
    try {
        l.value = std::stoi(token.substr(0, caret));
        l.color = std::stoi(token.substr(caret + 1));
    } catch (const std::exception&) {
        throw parse_error("expected value^color, got '" + token + "'");
    }
    if (l.value < 1) throw parse_error("letter value must be >= 1");
    if (l.color < 0 || l.color >= r) throw parse_error("letter color out of range for r");
    return l;
}

RawCycles parse_raw_cycles(const std::string& text, int r, int* n_out) {
    RawCycles cycles;
    int count = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos >= text.size()) break;
        if (text[pos] != '(') throw parse_error("expected '(' in cycle notation");
        const auto close = text.find(')', pos);
        if (close == std::string::npos) throw parse_error("unterminated cycle");
        std::istringstream body(text.substr(pos + 1, close - pos - 1));
        std::vector<ColoredLetter> cycle;
        std::string token;
        while (body >> token) cycle.push_back(parse_letter(token, r));
        if (cycle.empty()) throw parse_error("empty cycle");
        count += static_cast<int>(cycle.size());
        cycles.push_back(std::move(cycle));
        pos = close + 1;
    }
    if (cycles.empty()) throw parse_error("no cycles in input");
    if (n_out) *n_out = count;
    return cycles;
}

ColoredPermutation parse_element(const std::string& text, int r) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw parse_error("empty element");
    if (text[first] == '(') {
        int n = 0;
        RawCycles cycles = parse_raw_cycles(text, r, &n);
        return from_raw_cycles(cycles, n, r);
    }
    std::istringstream in(text);
    std::vector<ColoredLetter> letters;
    std::string token;
    while (in >> token) letters.push_back(parse_letter(token, r));
    const int n = static_cast<int>(letters.size());
    std::vector<int> omega, tau;
    omega.reserve(letters.size());
    tau.reserve(letters.size());
    for (const auto& l : letters) {
        if (l.value > n) throw parse_error("one-line value exceeds length");
        omega.push_back(l.value);
        tau.push_back(l.color);
    }
    return ColoredPermutation(n, r, std::move(omega), std::move(tau));
}

}  // namespace cperm
