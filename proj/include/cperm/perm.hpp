#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cperm/error.hpp"

namespace cperm {

// A value of [n] carrying a color in Z_r, written i^c in text form.
struct ColoredLetter {
    int value = 1;  // 1-based
    int color = 0;  // least nonnegative residue mod r

    friend bool operator==(const ColoredLetter&, const ColoredLetter&) = default;
};

enum class OrderKind { Descent, AdinRoichman, Custom };

// Total order on colored letters. The default order sorts by color
// ascending and then value ascending:
//   1^0 < 2^0 < ... < 1^1 < 2^1 < ... < 1^{r-1} < ...
// The Adin-Roichman order reverses the color blocks:
//   1^{r-1} < 2^{r-1} < ... < 1^1 < ... < 1^0 < 2^0 < ...
// A custom order supplies an injective rank function; it must accept the
// boundary letter (n+1)^0 used by the descent convention.
class TotalOrder {
  public:
    static TotalOrder descent() { return TotalOrder(OrderKind::Descent); }
    static TotalOrder adin_roichman() { return TotalOrder(OrderKind::AdinRoichman); }
    static TotalOrder custom(std::function<long(ColoredLetter)> rank) {
        TotalOrder o(OrderKind::Custom);
        o.rank_ = std::move(rank);
        return o;
    }

    OrderKind kind() const { return kind_; }

    std::strong_ordering compare(ColoredLetter a, ColoredLetter b) const {
        switch (kind_) {
            case OrderKind::Descent:
                if (a.color != b.color) return a.color <=> b.color;
                return a.value <=> b.value;
            case OrderKind::AdinRoichman:
                if (a.color != b.color) return b.color <=> a.color;
                return a.value <=> b.value;
            case OrderKind::Custom:
            default:
                return rank_(a) <=> rank_(b);
        }
    }

    bool less(ColoredLetter a, ColoredLetter b) const { return compare(a, b) < 0; }

  private:
    explicit TotalOrder(OrderKind kind) : kind_(kind) {}

    OrderKind kind_;
    std::function<long(ColoredLetter)> rank_;
};

// An element (omega, tau) of the colored permutation group: a permutation
// omega of [n] together with a coloring tau : [n] -> Z_r. Immutable after
// construction; all accessors are 1-based.
class ColoredPermutation {
  public:
    ColoredPermutation(int n, int r, std::vector<int> omega, std::vector<int> tau);

    static ColoredPermutation identity(int n, int r);

    int n() const { return n_; }
    int r() const { return r_; }

    int omega(int i) const { return omega_[static_cast<std::size_t>(i - 1)]; }
    int tau(int i) const { return tau_[static_cast<std::size_t>(i - 1)]; }

    const std::vector<int>& omega_values() const { return omega_; }
    const std::vector<int>& tau_values() const { return tau_; }

    // Image of the letter i^c, that is omega(i)^{tau(i)+c}.
    ColoredLetter act(ColoredLetter l) const;

    // Image of i^0; the one-line notation is letter_at(1) ... letter_at(n).
    ColoredLetter letter_at(int i) const { return {omega(i), tau(i)}; }

    bool is_identity() const;

    friend bool operator==(const ColoredPermutation&, const ColoredPermutation&) = default;
    friend auto operator<=>(const ColoredPermutation&, const ColoredPermutation&) = default;

  private:
    int n_;
    int r_;
    std::vector<int> omega_;
    std::vector<int> tau_;
};

// Group operation: (omega1, tau1)(omega2, tau2) = (omega1 omega2, (tau1 . omega2) + tau2).
ColoredPermutation compose(const ColoredPermutation& a, const ColoredPermutation& b);

ColoredPermutation inverse(const ColoredPermutation& x);

// Cycle decomposition in canonical form: cycles sorted by their minimum
// underlying value, each rotated so the image of that minimum is written
// first (equivalently the minimum itself comes last as a source).
struct CycleDecomposition {
    int n = 0;
    int r = 1;
    std::vector<std::vector<ColoredLetter>> cycles;

    friend bool operator==(const CycleDecomposition&, const CycleDecomposition&) = default;
};

CycleDecomposition to_cycles(const ColoredPermutation& x);

// Inverse of to_cycles. Accepts any rotation/ordering of the cycles;
// rejects inputs whose underlying values do not cover [n] exactly once.
ColoredPermutation from_cycles(const CycleDecomposition& c);

// Raw cycle sequences (any rotation), used where the written form matters.
using RawCycles = std::vector<std::vector<ColoredLetter>>;
ColoredPermutation from_raw_cycles(const RawCycles& cycles, int n, int r);

// --- text formats ---------------------------------------------------------
//
// one-line: "3^1 8^0 5^0 6^1 2^2 1^2 4^0 7^1"
// cycles:   "(3^1 5^0 2^2 8^0 7^1 4^0 6^1 1^2)" or "(1^0 3^2)(2^1)..."

std::string to_string(ColoredLetter l);
std::string one_line_string(const ColoredPermutation& x);
std::string cycle_string(const CycleDecomposition& c);
std::string cycle_string(const ColoredPermutation& x);
std::string raw_cycles_string(const RawCycles& cycles);

ColoredLetter parse_letter(const std::string& token, int r);

// Parses either notation (cycle form when the text starts with '(').
ColoredPermutation parse_element(const std::string& text, int r);

// Parses cycle notation without canonicalizing the written rotation.
RawCycles parse_raw_cycles(const std::string& text, int r, int* n_out);

}  // namespace cperm
