#include "cperm/degree.hpp"

#include <algorithm>
#include <sstream>

#include "cperm/enumerate.hpp"

namespace cperm {

PartialColoredPermutation::PartialColoredPermutation(int n, int r, std::vector<Constraint> pairs)
    : n_(n), r_(r), pairs_(std::move(pairs)) {
    if (n < 1 || r < 1) throw invalid_argument_error("need n >= 1 and r >= 1");
    std::sort(pairs_.begin(), pairs_.end());
    for (std::size_t h = 0; h < pairs_.size(); ++h) {
        const auto& p = pairs_[h];
        if (p.source < 1 || p.source > n || p.target < 1 || p.target > n)
            throw invalid_argument_error("constraint position outside [n]");
        if (p.color < 0 || p.color >= r) throw invalid_argument_error("constraint color out of range");
        if (h > 0 && pairs_[h - 1].source == p.source)
            throw invalid_argument_error("constraint sources must be distinct");
    }
    if (pairs_.size() > static_cast<std::size_t>(n))
        throw invalid_argument_error("more constraints than positions");
}

bool PartialColoredPermutation::targets_distinct() const {
    std::vector<int> targets;
    targets.reserve(pairs_.size());
    for (const auto& p : pairs_) targets.push_back(p.target);
    std::sort(targets.begin(), targets.end());
    return std::adjacent_find(targets.begin(), targets.end()) == targets.end();
}

bool PartialColoredPermutation::acyclic() const {
    std::vector<int> next(static_cast<std::size_t>(n_) + 1, 0);
    for (const auto& p : pairs_) next[static_cast<std::size_t>(p.source)] = p.target;
    for (const auto& p : pairs_) {
        int v = p.target;
        while (v != 0) {
            if (v == p.source) return false;
            v = next[static_cast<std::size_t>(v)];
        }
    }
    return true;
}

std::string PartialColoredPermutation::to_string() const {
    std::string out = "{";
    for (std::size_t h = 0; h < pairs_.size(); ++h) {
        if (h > 0) out += ", ";
        out += std::to_string(pairs_[h].source) + "->" + std::to_string(pairs_[h].target) +
               ":" + std::to_string(pairs_[h].color);
    }
    return out + "}";
}

PartialColoredPermutation PartialColoredPermutation::parse(const std::string& text, int n, int r) {
    const auto open = text.find('{');
    const auto close = text.rfind('}');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw parse_error("expected {source->target:color, ...}");
    std::vector<Constraint> pairs;
    std::istringstream in(text.substr(open + 1, close - open - 1));
    std::string chunk;
    while (std::getline(in, chunk, ',')) {
        const auto first = chunk.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        const auto arrow = chunk.find("->");
        const auto colon = chunk.find(':', arrow == std::string::npos ? 0 : arrow);
        if (arrow == std::string::npos || colon == std::string::npos)
            throw parse_error("expected source->target:color in '" + chunk + "'");
        Constraint c;
        try {
            c.source = std::stoi(chunk.substr(0, arrow));
            c.target = std::stoi(chunk.substr(arrow + 2, colon - arrow - 2));
            c.color = std::stoi(chunk.substr(colon + 1));
        } catch (const std::exception&) {
            throw parse_error("bad constraint '" + chunk + "'");
        }
        pairs.push_back(c);
    }
    return PartialColoredPermutation(n, r, std::move(pairs));
}

bool satisfies(const ColoredPermutation& x, const PartialColoredPermutation& p) {
    if (x.n() != p.n() || x.r() != p.r())
        throw invalid_argument_error("element and constraints disagree on n or r");
    for (const auto& c : p.pairs())
        if (x.omega(c.source) != c.target || x.tau(c.source) != c.color) return false;
    return true;
}

Rational satisfaction_prob_class(const PartialColoredPermutation& p, const RPartition& lambda) {
    if (p.n() != lambda.n || p.r() != lambda.r)
        throw invalid_argument_error("constraints and class disagree on n or r");
    if (!p.targets_distinct()) return 0;  // unsatisfiable by any permutation
    const int m = p.size();
    if (m == 0) return 1;
    if (!p.acyclic())
        throw short_cycle_error("constraint set closes a cycle of length <= " +
                                std::to_string(m) + ", excluded by the hypothesis");
    if (!has_no_short_cycles(lambda, m))
        throw short_cycle_error("class has a cycle of length <= " + std::to_string(m) +
                                "; the satisfaction formula does not apply");
    Rational value(1);
    for (int h = 1; h <= m; ++h) value /= lambda.n - h;
    value /= int_pow(Int(lambda.r), static_cast<unsigned long>(m));
    return value;
}

std::vector<DecompositionTerm> decompose_statistic(Statistic::Kind kind, int n, int r) {
    if (kind != Statistic::Kind::Des && kind != Statistic::Kind::Maj &&
        kind != Statistic::Kind::Fmaj)
        throw invalid_argument_error("decomposition is provided for des, maj and fmaj");
    const TotalOrder order = TotalOrder::descent();
    // All letters of [n]^r sorted ascending; pairs (low, high) index the
    // descending-image constraints.
    std::vector<ColoredLetter> letters;
    for (int c = 0; c < r; ++c)
        for (int v = 1; v <= n; ++v) letters.push_back({v, c});
    std::sort(letters.begin(), letters.end(),
              [&](ColoredLetter a, ColoredLetter b) { return order.less(a, b); });

    std::vector<DecompositionTerm> terms;
    for (int i = 1; i + 1 <= n; ++i) {
        const Rational coeff = kind == Statistic::Kind::Des  ? Rational(1)
                               : kind == Statistic::Kind::Maj ? Rational(i)
                                                              : Rational(static_cast<long>(r) * i);
        for (std::size_t low = 0; low < letters.size(); ++low)
            for (std::size_t high = low + 1; high < letters.size(); ++high) {
                const ColoredLetter l1 = letters[low];   // image of i+1
                const ColoredLetter l2 = letters[high];  // image of i
                terms.push_back({coeff, PartialColoredPermutation(
                                            n, r,
                                            {{i, l2.value, l2.color}, {i + 1, l1.value, l1.color}})});
            }
    }
    if (kind == Statistic::Kind::Des) {
        for (int j = 1; j <= n; ++j)
            for (int c = 1; c < r; ++c)
                terms.push_back({Rational(1), PartialColoredPermutation(n, r, {{n, j, c}})});
    } else if (kind == Statistic::Kind::Fmaj) {
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int c = 0; c < r; ++c)
                    terms.push_back({Rational(c), PartialColoredPermutation(n, r, {{i, j, c}})});
    }
    return terms;
}

Rational evaluate_decomposition(const std::vector<DecompositionTerm>& terms,
                                const ColoredPermutation& x) {
    Rational total = 0;
    for (const auto& term : terms)
        if (satisfies(x, term.constraint)) total += term.coeff;
    return total;
}

namespace {

std::size_t checked_dimension(int n, int r) {
    const Int dim = group_order(n, r);
    if (dim > 500000)
        throw infeasible_error("indicator vectors of dimension " + dim.get_str() +
                               " exceed the exact linear algebra cap");
    return static_cast<std::size_t>(dim.get_ui());
}

void strip_content(std::vector<Int>& v) {
    Int g = 0;
    for (const auto& e : v) {
        if (e == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
        if (g == 1) break;
    }
    if (g <= 1) return;
    for (auto& e : v)
        if (e != 0) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
}

// One-sided row echelon basis over the integers. Every inserted vector is
// reduced against the existing pivots by fraction-free cross-multiplication,
// so membership reduces to "does the residual vanish".
class ExactSpan {
  public:
    explicit ExactSpan(std::size_t dim) : dim_(dim) {}

    // Eliminates the basis pivots from v in place.
    void reduce(std::vector<Int>& v) const {
        int dense_steps = 0;
        for (std::size_t b = 0; b < basis_.size(); ++b) {
            Int& at_pivot = v[pivots_[b]];
            if (at_pivot == 0) continue;
            cross_reduce(v, basis_[b], pivots_[b]);
            if (++dense_steps % 8 == 0) strip_content(v);
        }
        strip_content(v);
    }

    // Returns true when v enlarged the span.
    bool insert(std::vector<Int> v) {
        reduce(v);
        const std::size_t pivot = select_pivot(v);
        if (pivot == dim_) return false;
        basis_.push_back(std::move(v));
        pivots_.push_back(pivot);
        return true;
    }

    const std::vector<Int>& back() const { return basis_.back(); }
    std::size_t back_pivot() const { return pivots_.back(); }
    std::size_t rank() const { return basis_.size(); }

    // v -= (multiple of w) eliminating position pivot, fraction-free.
    static void cross_reduce(std::vector<Int>& v, const std::vector<Int>& w, std::size_t pivot) {
        Int a = w[pivot];
        Int b = v[pivot];
        if (sgn(a) < 0) {
            a = -a;
            b = -b;
        }
        for (std::size_t i = 0; i < v.size(); ++i) {
            mpz_mul(v[i].get_mpz_t(), v[i].get_mpz_t(), a.get_mpz_t());
            if (w[i] != 0) mpz_submul(v[i].get_mpz_t(), b.get_mpz_t(), w[i].get_mpz_t());
        }
    }

    // Largest magnitude entry, lowest index on ties.
    static std::size_t select_pivot(const std::vector<Int>& v) {
        std::size_t best = v.size();
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] == 0) continue;
            if (best == v.size() || mpz_cmpabs(v[i].get_mpz_t(), v[best].get_mpz_t()) > 0)
                best = i;
        }
        return best;
    }

  private:
    std::size_t dim_;
    std::vector<std::vector<Int>> basis_;
    std::vector<std::size_t> pivots_;
};

bool is_zero_vector(const std::vector<Int>& v) {
    for (const auto& e : v)
        if (e != 0) return false;
    return true;
}

// Source subsets of [n] of size s, each with every injective target tuple
// and every coloring; repeated-target sets are skipped (zero vectors).
void for_each_indicator_of_size(int s, int n, int r,
                                const std::function<void(const PartialColoredPermutation&)>& f) {
    if (s == 0) {
        f(PartialColoredPermutation(n, r, {}));
        return;
    }
    std::vector<int> sources;
    std::vector<int> targets;
    std::vector<char> target_used(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> colors;
    const std::function<void()> emit = [&] {
        std::vector<Constraint> pairs;
        pairs.reserve(static_cast<std::size_t>(s));
        for (int h = 0; h < s; ++h)
            pairs.push_back({sources[static_cast<std::size_t>(h)],
                             targets[static_cast<std::size_t>(h)],
                             colors[static_cast<std::size_t>(h)]});
        f(PartialColoredPermutation(n, r, std::move(pairs)));
    };
    const std::function<void(int)> choose_colors = [&](int h) {
        if (h == s) {
            emit();
            return;
        }
        for (int c = 0; c < r; ++c) {
            colors.push_back(c);
            choose_colors(h + 1);
            colors.pop_back();
        }
    };
    const std::function<void(int)> choose_targets = [&](int h) {
        if (h == s) {
            choose_colors(0);
            return;
        }
        for (int t = 1; t <= n; ++t) {
            if (target_used[static_cast<std::size_t>(t)]) continue;
            target_used[static_cast<std::size_t>(t)] = 1;
            targets.push_back(t);
            choose_targets(h + 1);
            targets.pop_back();
            target_used[static_cast<std::size_t>(t)] = 0;
        }
    };
    const std::function<void(int)> choose_sources = [&](int from) {
        if (static_cast<int>(sources.size()) == s) {
            choose_targets(0);
            return;
        }
        for (int v = from; v <= n; ++v) {
            sources.push_back(v);
            choose_sources(v + 1);
            sources.pop_back();
        }
    };
    choose_sources(1);
}

}  // namespace

std::vector<Int> indicator_vector(const PartialColoredPermutation& p) {
    const std::size_t dim = checked_dimension(p.n(), p.r());
    std::vector<Int> v(dim, Int(0));
    std::size_t idx = 0;
    for_each_element(p.n(), p.r(), [&](const ColoredPermutation& x) {
        if (satisfies(x, p)) v[idx] = 1;
        ++idx;
    });
    return v;
}

std::vector<Int> statistic_vector(const Statistic& stat, int n, int r, const TotalOrder& order) {
    const std::size_t dim = checked_dimension(n, r);
    std::vector<Int> v(dim, Int(0));
    std::size_t idx = 0;
    for_each_element(n, r, [&](const ColoredPermutation& x) {
        v[idx] = stat.eval(x, order);
        ++idx;
    });
    return v;
}

std::vector<bool> degree_upper_bound_check_multi(const std::vector<std::vector<Int>>& targets,
                                                 int m, int n, int r,
                                                 const std::vector<int>& priority_sources) {
    if (m < 0) throw invalid_argument_error("degree bound must be >= 0");
    const std::size_t dim = checked_dimension(n, r);
    for (const auto& t : targets)
        if (t.size() != dim) throw invalid_argument_error("target vector has wrong dimension");

    ExactSpan span(dim);
    std::vector<std::vector<Int>> residuals = targets;
    for (auto& res : residuals) strip_content(res);
    auto all_zero = [&] {
        for (const auto& res : residuals)
            if (!is_zero_vector(res)) return false;
        return true;
    };
    if (all_zero()) return std::vector<bool>(targets.size(), true);

    std::vector<char> prioritized(static_cast<std::size_t>(n) + 1, 0);
    for (int v : priority_sources)
        if (v >= 1 && v <= n) prioritized[static_cast<std::size_t>(v)] = 1;
    auto is_priority = [&](const PartialColoredPermutation& p) {
        if (priority_sources.empty()) return true;
        for (const auto& c : p.pairs())
            if (!prioritized[static_cast<std::size_t>(c.source)]) return false;
        return true;
    };

    bool done = false;
    auto consume = [&](const PartialColoredPermutation& p) {
        if (done) return;
        if (!span.insert(indicator_vector(p))) return;
        const auto& fresh = span.back();
        const std::size_t pivot = span.back_pivot();
        for (auto& res : residuals) {
            if (res[pivot] == 0) continue;
            ExactSpan::cross_reduce(res, fresh, pivot);
            strip_content(res);
        }
        if (all_zero()) done = true;
    };

    const int top = std::min(m, n);
    for (int pass = 0; pass < (priority_sources.empty() ? 1 : 2) && !done; ++pass) {
        for (int s = 0; s <= top && !done; ++s) {
            for_each_indicator_of_size(s, n, r, [&](const PartialColoredPermutation& p) {
                if (done) return;
                const bool priority = is_priority(p);
                if ((pass == 0) == priority) consume(p);
            });
        }
    }

    std::vector<bool> verdict;
    verdict.reserve(targets.size());
    for (const auto& res : residuals) verdict.push_back(is_zero_vector(res));
    return verdict;
}

bool degree_upper_bound_check(const Statistic& stat, int m, int n, int r,
                              const TotalOrder& order,
                              const std::vector<int>& priority_sources) {
    return degree_upper_bound_check_multi({statistic_vector(stat, n, r, order)}, m, n, r,
                                          priority_sources)[0];
}

}  // namespace cperm
