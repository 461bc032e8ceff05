#include "cperm/conjugacy.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cperm/enumerate.hpp"

namespace cperm {

RPartition RPartition::make(int r, std::vector<std::vector<int>> parts) {
    if (r < 1) throw invalid_argument_error("r must be >= 1");
    if (parts.size() != static_cast<std::size_t>(r))
        throw invalid_argument_error("r-partition needs exactly r part lists");
    RPartition out;
    out.r = r;
    out.parts = std::move(parts);
    int total = 0;
    for (auto& list : out.parts) {
        std::sort(list.begin(), list.end(), std::greater<int>());
        for (int p : list) {
            if (p < 1) throw invalid_argument_error("partition parts must be positive");
            total += p;
        }
    }
    if (total < 1) throw invalid_argument_error("r-partition must have positive weight");
    out.n = total;
    return out;
}

int RPartition::total_weight() const {
    int total = 0;
    for (const auto& list : parts)
        for (int p : list) total += p;
    return total;
}

std::string RPartition::to_string() const {
    std::string out;
    for (int j = 0; j < r; ++j) {
        if (j > 0) out += "; ";
        out += std::to_string(j) + ":[";
        const auto& list = parts[static_cast<std::size_t>(j)];
        for (std::size_t h = 0; h < list.size(); ++h) {
            if (h > 0) out += ',';
            out += std::to_string(list[h]);
        }
        out += ']';
    }
    return out;
}

RPartition RPartition::parse(const std::string& text, int r) {
    if (r < 1) throw invalid_argument_error("r must be >= 1");
    std::vector<std::vector<int>> parts(static_cast<std::size_t>(r));
    std::vector<char> seen(static_cast<std::size_t>(r), 0);
    std::istringstream in(text);
    std::string chunk;
    while (std::getline(in, chunk, ';')) {
        const auto colon = chunk.find(':');
        if (colon == std::string::npos) throw parse_error("expected color:[parts]");
        int color = 0;
        try {
            color = std::stoi(chunk.substr(0, colon));
        } catch (const std::exception&) {
            throw parse_error("bad color in '" + chunk + "'");
        }
        if (color < 0 || color >= r) throw parse_error("color out of range in partition");
        if (seen[static_cast<std::size_t>(color)]) throw parse_error("color listed twice");
        seen[static_cast<std::size_t>(color)] = 1;
        const auto open = chunk.find('[', colon);
        const auto close = chunk.find(']', colon);
        if (open == std::string::npos || close == std::string::npos || close < open)
            throw parse_error("expected [parts] in '" + chunk + "'");
        std::istringstream body(chunk.substr(open + 1, close - open - 1));
        std::string num;
        while (std::getline(body, num, ',')) {
            const auto first = num.find_first_not_of(" \t");
            if (first == std::string::npos) continue;
            try {
                parts[static_cast<std::size_t>(color)].push_back(std::stoi(num));
            } catch (const std::exception&) {
                throw parse_error("bad part '" + num + "'");
            }
        }
    }
    return make(r, std::move(parts));
}

RPartition cycle_type(const ColoredPermutation& x) {
    RPartition out;
    out.n = x.n();
    out.r = x.r();
    out.parts.assign(static_cast<std::size_t>(x.r()), {});
    const CycleDecomposition cd = to_cycles(x);
    for (const auto& cycle : cd.cycles) {
        int color = 0;
        for (const auto& l : cycle) color = (color + l.color) % x.r();
        out.parts[static_cast<std::size_t>(color)].push_back(static_cast<int>(cycle.size()));
    }
    for (auto& list : out.parts) std::sort(list.begin(), list.end(), std::greater<int>());
    return out;
}

namespace {

// Partitions of n, each weakly decreasing, in descending lexicographic order.
std::vector<std::vector<int>> partitions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    const std::function<void(int, int)> rec = [&](int left, int max_part) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(left, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

}  // namespace

std::vector<RPartition> r_partitions(int n, int r) {
    if (n < 1) throw invalid_argument_error("n must be >= 1");
    if (r < 1) throw invalid_argument_error("r must be >= 1");
    std::vector<std::vector<std::vector<int>>> table(static_cast<std::size_t>(n) + 1);
    for (int w = 0; w <= n; ++w) table[static_cast<std::size_t>(w)] = partitions_of(w);

    std::vector<RPartition> out;
    std::vector<std::vector<int>> chosen(static_cast<std::size_t>(r));
    const std::function<void(int, int)> rec = [&](int color, int left) {
        if (color == r - 1) {
            for (const auto& last : table[static_cast<std::size_t>(left)]) {
                chosen[static_cast<std::size_t>(color)] = last;
                RPartition p;
                p.n = n;
                p.r = r;
                p.parts = chosen;
                out.push_back(std::move(p));
            }
            return;
        }
        for (int w = 0; w <= left; ++w) {
            for (const auto& part : table[static_cast<std::size_t>(w)]) {
                chosen[static_cast<std::size_t>(color)] = part;
                rec(color + 1, left - w);
            }
        }
    };
    rec(0, n);
    return out;
}

Int centralizer_order(const RPartition& lambda) {
    Int z = 1;
    for (int j = 0; j < lambda.r; ++j) {
        std::map<int, unsigned long> mult;
        for (int p : lambda.parts[static_cast<std::size_t>(j)]) ++mult[p];
        for (const auto& [part, m] : mult) {
            z *= factorial(m);
            z *= int_pow(Int(part) * lambda.r, m);
        }
    }
    return z;
}

Int class_size(const RPartition& lambda) {
    return group_order(lambda.n, lambda.r) / centralizer_order(lambda);
}

bool has_no_short_cycles(const RPartition& lambda, int m) {
    for (const auto& list : lambda.parts)
        for (int p : list)
            if (p <= m) return false;
    return true;
}

ColoredPermutation class_representative(const RPartition& lambda) {
    RawCycles cycles;
    int next_value = 1;
    for (int j = 0; j < lambda.r; ++j) {
        for (int len : lambda.parts[static_cast<std::size_t>(j)]) {
            std::vector<ColoredLetter> cycle;
            for (int h = 0; h < len; ++h)
                cycle.push_back({next_value + h, h == 0 ? j : 0});
            next_value += len;
            cycles.push_back(std::move(cycle));
        }
    }
    return from_raw_cycles(cycles, lambda.n, lambda.r);
}

void for_each_in_class_filtered(const RPartition& lambda,
                                const std::function<void(const ColoredPermutation&)>& f) {
    for_each_element(lambda.n, lambda.r, [&](const ColoredPermutation& x) {
        if (cycle_type(x) == lambda) f(x);
    });
}

namespace {

struct CycleSlot {
    int length = 0;
    int color = 0;
};

// Builds (omega, tau) from value cycles plus per-letter colors and emits it.
class ClassGenerator {
  public:
    ClassGenerator(const RPartition& lambda,
                   const std::function<void(const ColoredPermutation&)>& f)
        : n_(lambda.n), r_(lambda.r), f_(f), used_(static_cast<std::size_t>(lambda.n) + 1, 0) {
        for (int j = 0; j < lambda.r; ++j)
            for (int len : lambda.parts[static_cast<std::size_t>(j)])
                remaining_.push_back({len, j});
        std::sort(remaining_.begin(), remaining_.end(), [](const CycleSlot& a, const CycleSlot& b) {
            return a.length != b.length ? a.length < b.length : a.color < b.color;
        });
        alive_.assign(remaining_.size(), 1);
    }

    void run() { choose_supports(); }

  private:
    // Recursively assigns value cycles: the smallest unused value leads a
    // cycle of some still-available slot type, joined by every choice of
    // companions and internal order.
    void choose_supports() {
        int leader = 0;
        for (int v = 1; v <= n_; ++v) {
            if (!used_[static_cast<std::size_t>(v)]) {
                leader = v;
                break;
            }
        }
        if (leader == 0) {
            emit_colorings();
            return;
        }
        int prev_len = -1, prev_color = -1;
        for (std::size_t s = 0; s < remaining_.size(); ++s) {
            if (!alive_[s]) continue;
            const auto [len, color] = remaining_[s];
            if (len == prev_len && color == prev_color) continue;  // same slot type
            prev_len = len;
            prev_color = color;
            alive_[s] = 0;
            used_[static_cast<std::size_t>(leader)] = 1;
            cycle_values_.push_back({leader});
            cycle_colors_targets_.push_back(color);
            extend_cycle(len - 1);
            cycle_values_.pop_back();
            cycle_colors_targets_.pop_back();
            used_[static_cast<std::size_t>(leader)] = 0;
            alive_[s] = 1;
        }
    }

    void extend_cycle(int slots_left) {
        if (slots_left == 0) {
            choose_supports();
            return;
        }
        for (int v = 1; v <= n_; ++v) {
            if (used_[static_cast<std::size_t>(v)]) continue;
            used_[static_cast<std::size_t>(v)] = 1;
            cycle_values_.back().push_back(v);
            extend_cycle(slots_left - 1);
            cycle_values_.back().pop_back();
            used_[static_cast<std::size_t>(v)] = 0;
        }
    }

    // With the value cycles fixed, sweeps the r^(len-1) color choices per
    // cycle; the leading letter absorbs the balance so the cycle color hits
    // its target.
    void emit_colorings() {
        std::vector<std::vector<int>> colors(cycle_values_.size());
        for (std::size_t c = 0; c < cycle_values_.size(); ++c)
            colors[c].assign(cycle_values_[c].size(), 0);
        const std::function<void(std::size_t)> rec = [&](std::size_t c) {
            if (c == cycle_values_.size()) {
                RawCycles cycles;
                for (std::size_t h = 0; h < cycle_values_.size(); ++h) {
                    int sum = 0;
                    for (std::size_t p = 1; p < colors[h].size(); ++p) sum += colors[h][p];
                    const int lead =
                        ((cycle_colors_targets_[h] - sum) % r_ + r_) % r_;
                    std::vector<ColoredLetter> cycle;
                    cycle.push_back({cycle_values_[h][0], lead});
                    for (std::size_t p = 1; p < colors[h].size(); ++p)
                        cycle.push_back({cycle_values_[h][p], colors[h][p]});
                    cycles.push_back(std::move(cycle));
                }
                f_(from_raw_cycles(cycles, n_, r_));
                return;
            }
            const std::size_t len = cycle_values_[c].size();
            const std::function<void(std::size_t)> odo = [&](std::size_t pos) {
                if (pos == len) {
                    rec(c + 1);
                    return;
                }
                for (int v = 0; v < r_; ++v) {
                    colors[c][pos] = v;
                    odo(pos + 1);
                }
            };
            odo(1);
        };
        rec(0);
    }

    int n_;
    int r_;
    const std::function<void(const ColoredPermutation&)>& f_;
    std::vector<char> used_;
    std::vector<CycleSlot> remaining_;
    std::vector<char> alive_;
    std::vector<std::vector<int>> cycle_values_;
    std::vector<int> cycle_colors_targets_;
};

}  // namespace

void for_each_in_class_constructive(const RPartition& lambda,
                                    const std::function<void(const ColoredPermutation&)>& f) {
    ClassGenerator gen(lambda, f);
    gen.run();
}

void for_each_in_class(const RPartition& lambda,
                       const std::function<void(const ColoredPermutation&)>& f) {
    if (lambda.n <= 8)
        for_each_in_class_filtered(lambda, f);
    else
        for_each_in_class_constructive(lambda, f);
}

ColoredPermutation random_element(int n, int r, SplitRng& rng) {
    std::vector<int> omega(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) omega[static_cast<std::size_t>(i)] = i + 1;
    for (int i = n - 1; i > 0; --i) {
        const auto j = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i) + 1));
        std::swap(omega[static_cast<std::size_t>(i)], omega[j]);
    }
    std::vector<int> tau(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        tau[static_cast<std::size_t>(i)] = static_cast<int>(rng.below(static_cast<std::uint64_t>(r)));
    return ColoredPermutation(n, r, std::move(omega), std::move(tau));
}

ColoredPermutation sample_class(const RPartition& lambda, SplitRng& rng) {
    const ColoredPermutation rep = class_representative(lambda);
    const ColoredPermutation g = random_element(lambda.n, lambda.r, rng);
    return compose(compose(g, rep), inverse(g));
}

}  // namespace cperm
