#include "unimodal/transversal.hpp"

#include <algorithm>

#include "unimodal/error.hpp"
#include "unimodal/statistics.hpp"

namespace unimodal {

namespace {

void require_maximal_pair(const Composition& c, int i) {
    if (c.n() < 1) throw_invalid("no maximal pairs in " + to_string(c));
    if (i < 0 || i >= c.n()) throw_invalid("pair index out of range for " + to_string(c));
    if (c[static_cast<std::size_t>(i)] + c[static_cast<std::size_t>(i) + 1] != spread(c))
        throw_invalid("(" + std::to_string(i) + ", " + std::to_string(i + 1) +
                      ") is not a maximal pair of " + to_string(c));
}

// In-place walkers. step() performs one cover move and returns its color,
// or 0 once the algorithm has stopped.

class Raiser {
public:
    Raiser(std::vector<Int> a, int i) : a_(std::move(a)), i_(static_cast<std::size_t>(i)) {}

    int step() {
        while (i_ >= 1) {
            if (a_[i_ + 1] > a_[i_ - 1]) {
                --a_[i_ + 1];
                ++a_[i_];
                return static_cast<int>(i_) + 1;
            }
            if (a_[i_ + 1] < a_[i_ - 1])
                throw_inconsistent("raising algorithm lost its maximal pair");
            --i_;
        }
        if (a_[1] == 0) return 0;
        --a_[1];
        ++a_[0];
        return 1;
    }

    const std::vector<Int>& state() const { return a_; }

private:
    std::vector<Int> a_;
    std::size_t i_;
};

class Lowerer {
public:
    // works on the pair (a_{j-1}, a_j) with j = i + 1
    Lowerer(std::vector<Int> a, int i)
        : a_(std::move(a)), j_(static_cast<std::size_t>(i) + 1), n_(a_.size() - 1) {}

    int step() {
        while (j_ <= n_ - 1) {
            if (a_[j_ - 1] > a_[j_ + 1]) {
                --a_[j_ - 1];
                ++a_[j_];
                return static_cast<int>(j_);
            }
            if (a_[j_ - 1] < a_[j_ + 1])
                throw_inconsistent("lowering algorithm lost its maximal pair");
            ++j_;
        }
        if (a_[n_ - 1] == 0) return 0;
        --a_[n_ - 1];
        ++a_[n_];
        return static_cast<int>(n_);
    }

    const std::vector<Int>& state() const { return a_; }

private:
    std::vector<Int> a_;
    std::size_t j_;
    std::size_t n_;
};

template <class Walker>
std::vector<Composition> run(const Composition& c, int i) {
    require_maximal_pair(c, i);
    Walker w(c.vec(), i);
    std::vector<Composition> out{c};
    while (w.step() != 0) out.emplace_back(w.state());
    return out;
}

template <class Walker>
RunEnd run_end(const Composition& c, int i, std::vector<int>* colors = nullptr) {
    require_maximal_pair(c, i);
    Walker w(c.vec(), i);
    Int steps = 0;
    while (const int color = w.step()) {
        ++steps;
        if (colors) colors->push_back(color);
    }
    return {Composition(w.state()), steps};
}

} // namespace

std::vector<Composition> Chain::elements() const {
    std::vector<Composition> out;
    out.reserve(colors.size() + 1);
    out.push_back(top);
    for (int color : colors) {
        auto next = move_up(out.back(), color);
        if (!next) throw_invalid("color sequence leaves the poset at " + to_string(out.back()));
        out.push_back(std::move(*next));
    }
    return out;
}

Composition Chain::bottom() const {
    std::vector<Int> a = top.vec();
    for (int color : colors) {
        const auto j = static_cast<std::size_t>(color);
        if (color < 1 || j >= a.size() || a[j - 1] == 0)
            throw_invalid("color sequence leaves the poset");
        --a[j - 1];
        ++a[j];
    }
    return Composition(std::move(a));
}

Chain chain_from_elements(const std::vector<Composition>& elements) {
    if (elements.empty()) throw_invalid("a chain needs at least one element");
    Chain chain{elements.front(), {}};
    chain.colors.reserve(elements.size() - 1);
    for (std::size_t t = 0; t + 1 < elements.size(); ++t) {
        const auto color = covers(elements[t], elements[t + 1]);
        if (!color)
            throw_invalid(to_string(elements[t + 1]) + " does not cover " + to_string(elements[t]));
        chain.colors.push_back(*color);
    }
    return chain;
}

bool is_initial(const Composition& c) {
    if (c.n() < 1) throw_invalid("is_initial needs n >= 1");
    return c[1] == 0 && c[0] == spread(c);
}

bool is_terminal(const Composition& c) {
    if (c.n() < 1) throw_invalid("is_terminal needs n >= 1");
    const auto n = static_cast<std::size_t>(c.n());
    return c[n - 1] == 0 && c[n] == spread(c);
}

std::vector<Composition> raise_run(const Composition& c, int i) { return run<Raiser>(c, i); }

std::vector<Composition> lower_run(const Composition& c, int i) { return run<Lowerer>(c, i); }

RunEnd raise_to_initial(const Composition& c, int i) { return run_end<Raiser>(c, i); }

RunEnd lower_to_terminal(const Composition& c, int i) { return run_end<Lowerer>(c, i); }

namespace {

template <class Walker>
std::optional<Composition> first_step(const Composition& c, int i) {
    require_maximal_pair(c, i);
    Walker w(c.vec(), i);
    if (w.step() == 0) return std::nullopt;
    return Composition(w.state());
}

} // namespace

std::optional<Composition> raise_step(const Composition& c, int i) { return first_step<Raiser>(c, i); }

std::optional<Composition> lower_step(const Composition& c, int i) { return first_step<Lowerer>(c, i); }

Composition lower_by(const Composition& c, int i, Int steps) {
    require_maximal_pair(c, i);
    if (steps < 0) throw_invalid("negative step count");
    Lowerer w(c.vec(), i);
    for (Int t = 0; t < steps; ++t)
        if (w.step() == 0)
            throw_invalid("transversal chain below " + to_string(c) + " has fewer than " +
                          std::to_string(steps) + " steps");
    return Composition(w.state());
}

Chain transversal_chain(const Composition& c, int i) {
    std::vector<int> up;
    std::vector<int> down;
    RunEnd top = run_end<Raiser>(c, i, &up);
    run_end<Lowerer>(c, i, &down);
    Chain chain{std::move(top.end), {}};
    chain.colors.reserve(up.size() + down.size());
    chain.colors.assign(up.rbegin(), up.rend());
    chain.colors.insert(chain.colors.end(), down.begin(), down.end());
    return chain;
}

Int transversal_length(const Composition& c, int i) {
    return run_end<Raiser>(c, i).steps + run_end<Lowerer>(c, i).steps;
}

std::vector<Chain> chains_through(const Composition& c) {
    std::vector<Chain> out;
    for (const Interval& comp : maximal_structure(c).components)
        out.push_back(transversal_chain(c, comp.first));
    return out;
}

std::vector<int> color_sequence_closed_form(const Composition& c) {
    if (!is_initial(c)) throw_invalid(to_string(c) + " is not initial");
    const auto n = static_cast<std::size_t>(c.n());
    auto at = [&](std::size_t j) -> Int { return j <= n ? c[j] : 0; };
    std::vector<int> colors;
    for (std::size_t j = 1; j <= n; ++j) {
        const Int mult = c[0] - at(j) - at(j + 1);
        if (mult < 0)
            throw_inconsistent("negative color multiplicity for color " + std::to_string(j) +
                               " in " + to_string(c));
        colors.insert(colors.end(), static_cast<std::size_t>(mult), static_cast<int>(j));
    }
    return colors;
}

Composition terminal_of_initial(const Composition& c) {
    if (!is_initial(c)) throw_invalid(to_string(c) + " is not initial");
    std::vector<Int> b(c.vec().begin() + 2, c.vec().end());
    b.push_back(0);
    b.push_back(c[0]);
    return Composition(std::move(b));
}

Chain tau(const Chain& chain) {
    const int n = chain.top.n();
    Chain out{tau(chain.bottom()), {}};
    out.colors.reserve(chain.colors.size());
    for (auto it = chain.colors.rbegin(); it != chain.colors.rend(); ++it)
        out.colors.push_back(n + 1 - *it);
    return out;
}

} // namespace unimodal
