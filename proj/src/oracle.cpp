#include "unimodal/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "unimodal/error.hpp"
#include "unimodal/qpoly.hpp"
#include "unimodal/structure.hpp"
#include "unimodal/transversal.hpp"

namespace unimodal {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

/// lambda_0 = 0, lambda_1..lambda_n, lambda_{n+1} = m
std::vector<Int> padded_partition(const Composition& c) {
    const int n = c.n();
    std::vector<Int> lam(static_cast<std::size_t>(n) + 2, 0);
    for (int i = 1; i <= n; ++i)
        for (int j = n - i + 1; j <= n; ++j) lam[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(j)];
    lam[static_cast<std::size_t>(n) + 1] = c.m();
    return lam;
}

Int reference_spread(const Composition& c) {
    if (c.n() < 0) return 0;
    if (c.n() == 0) return c.m();
    return spread_degree_via_partition(c).first;
}

/// Left indices of the maximal pairs, read off the partition side.
std::vector<int> reference_mset(const Composition& c) {
    const int n = c.n();
    const std::vector<Int> lam = padded_partition(c);
    Int best = 0;
    for (int i = 1; i <= n; ++i)
        best = std::max(best, lam[static_cast<std::size_t>(i) + 1] - lam[static_cast<std::size_t>(i) - 1]);
    std::vector<int> out;
    for (int i = n; i >= 1; --i)
        if (lam[static_cast<std::size_t>(i) + 1] - lam[static_cast<std::size_t>(i) - 1] == best)
            out.push_back(n - i);
    return out;   // increasing, since i runs downward
}

bool naive_cover(const Composition& lower, const Composition& upper) {
    if (lower.size() != upper.size()) return false;
    int down = -1;
    int up = -1;
    for (std::size_t i = 0; i < lower.size(); ++i) {
        const Int diff = upper[i] - lower[i];
        if (diff == 0) continue;
        if (diff == -1 && down < 0) down = static_cast<int>(i);
        else if (diff == 1 && up < 0) up = static_cast<int>(i);
        else return false;
    }
    return down >= 0 && up == down + 1;
}

class Recorder {
public:
    Recorder(VerificationReport& rep, std::size_t cap) : rep_(rep), cap_(cap) {}

    CheckResult& check(const std::string& name) {
        auto it = index_.find(name);
        if (it != index_.end()) return rep_.checks[it->second];
        index_.emplace(name, rep_.checks.size());
        rep_.checks.push_back({name, 0, 0, false, {}});
        return rep_.checks.back();
    }

    void declare(std::initializer_list<const char*> names) {
        for (const char* name : names) check(name);
    }

    void examine(const std::string& name, Int count = 1) { check(name).examined += count; }

    template <class Detail>
    void expect(const std::string& name, bool ok, const std::string& input,
                const std::string& reproduce, Detail&& detail) {
        CheckResult& c = check(name);
        ++c.examined;
        if (!ok) fail(c, input, detail(), reproduce);
    }

    void fail(CheckResult& c, const std::string& input, const std::string& detail,
              const std::string& reproduce, Int count = 1) {
        c.failures += count;
        if (c.counterexamples.size() < cap_) c.counterexamples.push_back({input, detail, reproduce});
    }

    void finish() {
        std::sort(rep_.checks.begin(), rep_.checks.end(),
                  [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
        index_.clear();
    }

private:
    VerificationReport& rep_;
    std::size_t cap_;
    std::unordered_map<std::string, std::size_t> index_;
};

std::string scope_of(const char* what, int n, Int m) {
    return std::string(what) + " n=" + std::to_string(n) + " m=" + std::to_string(m);
}

void omega_search(const std::vector<int>& mset, const std::vector<int>& best_suffix, std::size_t k,
                  Int target, std::vector<int>& taken, const Composition& c,
                  std::set<Composition>& out) {
    if (static_cast<Int>(taken.size()) + best_suffix[k] < target) return;
    if (k == mset.size()) {
        std::vector<bool> removed(c.size(), false);
        for (int i : taken) removed[static_cast<std::size_t>(i)] = removed[static_cast<std::size_t>(i) + 1] = true;
        std::vector<Int> rest;
        for (std::size_t j = 0; j < c.size(); ++j)
            if (!removed[j]) rest.push_back(c[j]);
        out.insert(Composition(std::move(rest)));
        return;
    }
    const int i = mset[k];
    if (taken.empty() || taken.back() + 1 < i) {
        taken.push_back(i);
        omega_search(mset, best_suffix, k + 1, target, taken, c, out);
        taken.pop_back();
    }
    omega_search(mset, best_suffix, k + 1, target, taken, c, out);
}

} // namespace

std::pair<Int, Int> spread_degree_via_partition(const Composition& c) {
    const int n = c.n();
    if (n < 1) throw_invalid("spread_degree_via_partition needs n >= 1");
    const std::vector<Int> lam = padded_partition(c);
    Int spr = 0;
    for (int i = 1; i <= n; ++i)
        spr = std::max(spr, lam[static_cast<std::size_t>(i) + 1] - lam[static_cast<std::size_t>(i) - 1]);
    Int deg = 0;
    Int run = 0;
    for (int i = 1; i <= n + 1; ++i) {
        const bool in_m =
            i <= n && lam[static_cast<std::size_t>(i) + 1] - lam[static_cast<std::size_t>(i) - 1] == spr;
        if (in_m) {
            ++run;
        } else {
            deg += (run + 1) / 2;
            run = 0;
        }
    }
    return {spr, deg};
}

std::vector<Composition> omega_all_choices(const Composition& c) {
    if (c.n() < 1) return {c};
    const std::vector<int> mset = reference_mset(c);
    // best_suffix[k]: most disjoint pairs among mset[k..], greedy from the left
    std::vector<int> best_suffix(mset.size() + 1, 0);
    for (std::size_t k = mset.size(); k-- > 0;) {
        std::size_t next = k + 1;
        while (next < mset.size() && mset[next] <= mset[k] + 1) ++next;
        best_suffix[k] = std::max(best_suffix[k + 1], 1 + best_suffix[next]);
    }
    std::set<Composition> found;
    std::vector<int> taken;
    omega_search(mset, best_suffix, 0, best_suffix[0], taken, c, found);
    return {found.begin(), found.end()};
}

Signature reference_signature(const Composition& c) {
    const int n = c.n();
    if (n < 0) return Signature(-1, {});
    if (n <= 1) return Signature(n, {c.m()});
    const auto [s, r] = spread_degree_via_partition(c);
    const std::vector<Composition> choices = omega_all_choices(c);
    const Composition& w = choices.front();
    std::vector<Int> d(static_cast<std::size_t>(r - 1), 0);
    d.push_back(s - reference_spread(w));
    const Signature rest = reference_signature(w);
    d.insert(d.end(), rest.vec().begin(), rest.vec().end());
    if (static_cast<int>(d.size()) != n / 2 + 1)
        throw_inconsistent("reference signature of " + to_string(c) + " has the wrong length");
    return Signature(n, std::move(d));
}

// ---------------------------------------------------------------------------

bool VerificationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.waived || c.passed(); });
}

const CheckResult* VerificationReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

void VerificationReport::merge(const VerificationReport& other, std::size_t cap) {
    for (const CheckResult& o : other.checks) {
        auto it = std::find_if(checks.begin(), checks.end(),
                               [&](const CheckResult& c) { return c.name == o.name; });
        if (it == checks.end()) {
            checks.push_back({o.name, 0, 0, o.waived, {}});
            it = checks.end() - 1;
        }
        it->examined += o.examined;
        it->failures += o.failures;
        it->waived = it->waived || o.waived;
        for (const auto& ce : o.counterexamples)
            if (it->counterexamples.size() < cap) it->counterexamples.push_back(ce);
    }
    std::sort(checks.begin(), checks.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    census.insert(census.end(), other.census.begin(), other.census.end());
    seconds += other.seconds;
}

std::string reproduce_element(const Composition& c) {
    return "unimodal-chains signature \"" + to_string(c) + "\"";
}

std::string reproduce_instance(int n, Int m) {
    return "unimodal-chains verify --n " + std::to_string(n) + " --m " + std::to_string(m);
}

// ---------------------------------------------------------------------------

VerificationReport check_statistics(int n, Int m, const OracleOptions& opts) {
    const auto start = Clock::now();
    VerificationReport rep;
    rep.scope = scope_of("statistics", n, m);
    Recorder rec(rep, opts.cap);
    namespace oc = oracle_check;
    rec.declare({oc::kSpread, oc::kDegree, oc::kOmegaChoices, oc::kSignature, oc::kSignatureSums,
                 oc::kOmegaTau, oc::kOmegaContainment, oc::kSpreadDecrease, oc::kSignatureTau,
                 oc::kDegreeFormula, oc::kGeneratingFunction, oc::kClassPartition, oc::kClassTau,
                 oc::kHighestWeight, oc::kClassNonempty, oc::kClassDegree});
    rec.check(oc::kDegreeFormula).waived = opts.waive_degree_formula;
    rec.check(oc::kSpreadDecrease).waived = true;

    const std::vector<Composition> all = enumerate_A(n, m);
    std::map<Signature, std::vector<Composition>> groups;
    for (const Composition& a : all) {
        const std::string in = to_string(a);
        const std::string repro = reproduce_element(a);
        if (n >= 1) {
            const auto [spr, deg] = spread_degree_via_partition(a);
            rec.expect(oc::kSpread, spr == spread(a), in, repro, [&] {
                return "partition side " + std::to_string(spr) + ", composition side " +
                       std::to_string(spread(a));
            });
            rec.expect(oc::kDegree, deg == degree(a), in, repro, [&] {
                return "partition side " + std::to_string(deg) + ", composition side " +
                       std::to_string(degree(a));
            });
            const std::vector<Composition> choices = omega_all_choices(a);
            const Composition w = omega(a);
            rec.expect(oc::kOmegaChoices, choices.size() == 1 && choices.front() == w, in, repro, [&] {
                std::string s = "omega " + to_string(w) + ", removal choices give";
                for (const auto& x : choices) s += " " + to_string(x);
                return s;
            });
            const Int r = degree(a);
            const Int s = spread(a);
            rec.expect(oc::kOmegaContainment, w.n() == n - 2 * r && w.m() == m - r * s, in, repro,
                       [&] { return "omega gives " + to_string(w); });
            if (w.n() >= 2)
                rec.expect(oc::kSpreadDecrease, spread(w) < s, in, repro, [&] {
                    return "spread stays " + std::to_string(s) + " at " + to_string(w);
                });
            rec.expect(oc::kOmegaTau, omega(tau(a)) == tau(w), in, repro, [&] {
                return "omega(tau a) = " + to_string(omega(tau(a))) + ", tau(omega a) = " +
                       to_string(tau(w));
            });
        }
        Signature ref = reference_signature(a);
        std::optional<Signature> sig;
        try {
            sig = signature(a);
        } catch (const InconsistencyError& e) {
            rec.expect(oc::kSignature, false, in, repro, [&] { return std::string(e.what()); });
        }
        if (sig) {
            rec.expect(oc::kSignature, *sig == ref, in, repro, [&] {
                return "signature " + to_string(*sig) + ", reference " + to_string(ref);
            });
            Int weighted = 0;
            for (std::size_t j = 0; j < sig->size(); ++j) weighted += static_cast<Int>(j + 1) * (*sig)[j];
            rec.expect(oc::kSignatureSums,
                       weighted == m && (m == 0 || sig->total() == reference_spread(a)), in, repro,
                       [&] { return "signature " + to_string(*sig); });
            rec.expect(oc::kSignatureTau, signature(tau(a)) == *sig, in, repro,
                       [&] { return "signature(tau a) = " + to_string(signature(tau(a))); });
            if (n >= 1 && m >= 1) {
                const Int deg = degree(a);
                const int formula = degree_formula(*sig);
                CheckResult& c = rec.check(oc::kDegreeFormula);
                ++c.examined;
                if (formula != deg) {
                    rec.fail(c, in,
                             "edge-cover degree " + std::to_string(deg) + ", formula " +
                                 std::to_string(formula) + ", signature " + to_string(*sig),
                             repro);
                    rep.census.push_back({a, *sig, deg, formula, recursion_keeps_spread(a)});
                }
            }
        }
        groups[ref].push_back(a);
    }

    // generating function
    {
        const CoefficientVector counted = rank_gf(all);
        CoefficientVector expected;
        std::string why;
        try {
            expected = gaussian(m, n);
        } catch (const ResourceLimit& e) {
            why = e.what();
        }
        rec.expect(oc::kGeneratingFunction,
                   why.empty() && counted == expected && is_symmetric(expected) && is_unimodal(expected),
                   "A_" + std::to_string(n) + "(" + std::to_string(m) + ")", reproduce_instance(n, m),
                   [&] {
                       return why.empty() ? "rank histogram " + to_string(counted) + ", gaussian " +
                                                to_string(expected)
                                          : why;
                   });
    }

    // signature classes
    {
        const auto table = DecompositionCache::global().classes(n, m);
        bool same = table->size() == groups.size();
        std::string detail;
        Int listed = 0;
        const auto sigs = enumerate_signatures(n, m);
        const std::set<Signature> allowed(sigs.begin(), sigs.end());
        for (const auto& [sig, members] : *table) {
            listed += static_cast<Int>(members.size());
            auto it = groups.find(sig);
            if (it == groups.end() || it->second != members) {
                same = false;
                if (detail.empty()) detail = "class " + to_string(sig) + " differs from direct grouping";
            }
            if (!allowed.contains(sig)) {
                same = false;
                if (detail.empty()) detail = "signature " + to_string(sig) + " not enumerated";
            }
        }
        if (listed != count_A(n, m)) {
            same = false;
            if (detail.empty()) detail = "classes hold " + std::to_string(listed) + " elements";
        }
        rec.expect(oc::kClassPartition, same, "A_" + std::to_string(n) + "(" + std::to_string(m) + ")",
                   reproduce_instance(n, m), [&] { return detail; });
    }
    for (const Signature& sig : enumerate_signatures(n, m))
        rec.expect(oc::kClassNonempty, groups.contains(sig), "Q_" + std::to_string(n) + to_string(sig),
                   reproduce_instance(n, m), [&] { return std::string("no element has this signature"); });
    for (const auto& [sig, members] : groups) {
        const std::string in = "Q_" + std::to_string(n) + to_string(sig);
        const std::unordered_set<Composition, CompositionHash> set(members.begin(), members.end());
        std::optional<Composition> outside;
        for (const Composition& x : members)
            if (!set.contains(tau(x))) {
                outside = x;
                break;
            }
        rec.expect(oc::kClassTau, !outside, in, reproduce_instance(n, m),
                   [&] { return "tau" + to_string(*outside) + " leaves the class"; });

        Int best = weight(members.front());
        for (const Composition& x : members) best = std::max(best, weight(x));
        std::vector<Composition> tops;
        for (const Composition& x : members)
            if (weight(x) == best) tops.push_back(x);
        bool same_degree = true;
        for (const Composition& x : members) same_degree = same_degree && degree(x) == degree(members.front());
        rec.expect(oc::kClassDegree, same_degree, in, reproduce_instance(n, m),
                   [&] { return std::string("members of different edge-cover degree"); });

        const Composition formula = highest_weight_formula(n, sig);
        const bool unique = tops.size() == 1;
        const bool agrees = unique && tops.front() == formula;
        const bool flagged = unique && !agrees && recursion_keeps_spread(tops.front());
        rec.expect(oc::kHighestWeight, agrees || flagged, in, reproduce_instance(n, m), [&] {
            std::string s = "maximal weight " + std::to_string(best) + " at";
            for (const auto& t : tops) s += " " + to_string(t);
            return s + "; formula gives " + to_string(formula);
        });
    }

    rec.finish();
    rep.seconds = seconds_since(start);
    return rep;
}

VerificationReport check_chains(int n, Int m, const OracleOptions& opts) {
    const auto start = Clock::now();
    VerificationReport rep;
    rep.scope = scope_of("chains", n, m);
    Recorder rec(rep, opts.cap);
    namespace oc = oracle_check;
    rec.declare({oc::kInvariance, oc::kChainLength, oc::kChainCount, oc::kChainShape,
                 oc::kComponentChoice, oc::kClosedForm, oc::kTauDuality, oc::kEndpointDuality});
    if (n < 1) {
        rec.finish();
        return rep;
    }

    std::unordered_set<Composition, CompositionHash> seen_tops;
    std::vector<Int> walk;
    for (const Composition& a : Compositions(n, m)) {
        const std::string in = to_string(a);
        const std::string repro = reproduce_element(a);
        const Signature sig = signature(a);
        const MaximalStructure ms = maximal_structure(a);
        const Int ell = chain_length(n, sig);

        for (int i : ms.mset) {
            for (const auto& next : {raise_step(a, i), lower_step(a, i)}) {
                if (!next) continue;
                rec.expect(oc::kInvariance, signature(*next) == sig, in, repro, [&] {
                    return "pair " + std::to_string(i) + " moves to " + to_string(*next) +
                           " with signature " + to_string(signature(*next));
                });
            }
        }

        const std::vector<Chain> chains = chains_through(a);
        bool distinct = chains.size() == ms.components.size();
        for (std::size_t x = 0; x < chains.size(); ++x)
            for (std::size_t y = x + 1; y < chains.size(); ++y)
                if (chains[x] == chains[y]) distinct = false;
        rec.expect(oc::kChainCount, distinct, in, repro, [&] {
            return std::to_string(chains.size()) + " chains for " +
                   std::to_string(ms.components.size()) + " components";
        });

        const Composition ta = tau(a);
        const std::vector<Chain> mirrored = chains_through(ta);
        for (std::size_t k = 0; k < chains.size(); ++k) {
            const Chain& chain = chains[k];
            const Interval& comp = ms.components[k];
            rec.expect(oc::kChainLength, static_cast<Int>(chain.length()) == ell, in, repro, [&] {
                return "chain at " + std::to_string(comp.first) + " has length " +
                       std::to_string(chain.length()) + ", formula " + std::to_string(ell);
            });

            // a must sit on the chain at depth rank(a) - rank(top)
            const Int depth = rank(a) - rank(chain.top);
            bool on_chain = is_initial(chain.top) && depth >= 0 &&
                            depth <= static_cast<Int>(chain.length());
            if (on_chain) {
                walk = chain.top.vec();
                for (Int t = 0; t < depth; ++t) {
                    const auto j = static_cast<std::size_t>(chain.colors[static_cast<std::size_t>(t)]);
                    --walk[j - 1];
                    ++walk[j];
                }
                on_chain = walk == a.vec();
            }
            const Composition bottom = chain.bottom();
            rec.expect(oc::kChainShape, on_chain && is_terminal(bottom), in, repro, [&] {
                return "chain at " + std::to_string(comp.first) + " from " + to_string(chain.top) +
                       " to " + to_string(bottom);
            });

            for (int i = comp.first + 1; i <= comp.last; ++i)
                rec.expect(oc::kComponentChoice, transversal_chain(a, i) == chain, in, repro, [&] {
                    return "T_" + std::to_string(i) + " differs from T_" + std::to_string(comp.first);
                });

            bool mirrored_found = false;
            const Chain t = tau(chain);
            for (const Chain& c : mirrored) mirrored_found = mirrored_found || c == t;
            rec.expect(oc::kTauDuality, mirrored_found, in, repro, [&] {
                return "tau of the chain at " + std::to_string(comp.first) +
                       " is not a transversal chain of " + to_string(ta);
            });

            if (seen_tops.insert(chain.top).second) {
                const std::string top = to_string(chain.top);
                std::vector<int> closed;
                std::string why;
                try {
                    closed = color_sequence_closed_form(chain.top);
                } catch (const Error& e) {
                    why = e.what();
                }
                const std::vector<Composition> elems = chain.elements();
                bool saturated = true;
                for (std::size_t e = 0; e + 1 < elems.size(); ++e)
                    saturated = saturated && naive_cover(elems[e], elems[e + 1]);
                const MaximalStructure bottom_ms = maximal_structure(bottom);
                rec.expect(oc::kEndpointDuality,
                           transversal_chain(bottom, bottom_ms.mset.back()) == chain &&
                               tau(chain) == transversal_chain(tau(bottom), 0),
                           top, reproduce_element(chain.top),
                           [&] { return "chain differs when rebuilt from " + to_string(bottom); });
                rec.expect(oc::kClosedForm,
                           why.empty() && closed == chain.colors && saturated &&
                               bottom == terminal_of_initial(chain.top),
                           top, reproduce_element(chain.top), [&] {
                               return why.empty() ? "closed-form colors or terminal element differ "
                                                    "from the traced chain"
                                                  : why;
                           });
            }
        }
    }
    rec.finish();
    rep.seconds = seconds_since(start);
    return rep;
}

VerificationReport check_structure(int n, Int m, const OracleOptions& opts) {
    const auto start = Clock::now();
    VerificationReport rep;
    rep.scope = scope_of("structure", n, m);
    Recorder rec(rep, opts.cap);
    namespace oc = oracle_check;
    const std::string instance = "A_" + std::to_string(n) + "(" + std::to_string(m) + ")";
    const std::string repro = reproduce_instance(n, m);

    if (n >= 1) {
        const auto table = DecompositionCache::global().classes(n, m);
        for (const auto& [sig, members] : *table) {
            const std::string in = "Q_" + std::to_string(n) + to_string(sig);
            try {
                const SplitExtensionReport split = verify_split_extension(n, sig);
                for (const NamedCheck& c : split.checks) {
                    CheckResult& r = rec.check(oc::kSplitPrefix + c.name);
                    r.waived = opts.waive_omega_order && (c.name == split_check::kOmegaOrder ||
                                                          c.name == split_check::kStrippedCover);
                    r.examined += c.examined;
                    if (!c.passed) rec.fail(r, in, c.first_failure, repro, c.failures);
                }
            } catch (const Error& e) {
                rec.expect(std::string(oc::kSplitPrefix) + "exception", false, in, repro,
                           [&] { return std::string(e.what()); });
            }
        }
    }

    if (count_A(n, m) <= opts.decompose_max_size) {
        rec.declare({oc::kDecomposition, oc::kSaturated, oc::kDecompositionTau, oc::kCertificate});
        std::optional<Decomposition> dec;
        try {
            dec = decompose_all(n, m);
        } catch (const Error& e) {
            rec.expect(oc::kDecomposition, false, instance, repro, [&] { return std::string(e.what()); });
        }
        if (dec) {
            // every element exactly once, classes respected
            std::unordered_map<Composition, Int, CompositionHash> hits;
            std::vector<std::vector<Composition>> elements;
            std::string problem;
            for (const auto& cls : dec->classes)
                for (const Chain& chain : cls.chains) {
                    elements.push_back(chain.elements());
                    for (const Composition& e : elements.back()) {
                        ++hits[e];
                        if (problem.empty() && reference_signature(e) != cls.signature)
                            problem = to_string(e) + " placed in class " + to_string(cls.signature);
                    }
                }
            Int total = 0;
            for (const Composition& a : Compositions(n, m)) {
                auto it = hits.find(a);
                const Int h = it == hits.end() ? 0 : it->second;
                if (h != 1 && problem.empty())
                    problem = to_string(a) + " lies on " + std::to_string(h) + " chains";
                total += h;
            }
            if (total != count_A(n, m) && problem.empty()) problem = "chains hold foreign elements";
            rec.expect(oc::kDecomposition, problem.empty(), instance, repro, [&] { return problem; });

            for (const auto& elems : elements) {
                bool ok = true;
                for (std::size_t e = 0; e + 1 < elems.size(); ++e) ok = ok && naive_cover(elems[e], elems[e + 1]);
                rec.expect(oc::kSaturated, ok, to_string(elems.front()), repro,
                           [&] { return "chain from " + to_string(elems.front()) + " is not saturated"; });
            }

            for (const auto& elems : elements) {
                std::vector<Composition> image;
                for (auto it = elems.rbegin(); it != elems.rend(); ++it) image.push_back(tau(*it));
                const auto id = dec->chain_of(image.front());
                const bool ok = id && dec->chain(*id).elements() == image;
                rec.expect(oc::kDecompositionTau, ok, to_string(elems.front()), repro, [&] {
                    return "tau image of the chain from " + to_string(elems.front()) +
                           " is not a chain of the decomposition";
                });
            }

            const UnimodalityCertificate cert = unimodality_certificate(*dec);
            rec.expect(oc::kCertificate, cert.passed(), instance, repro, [&] {
                std::string s;
                if (!cert.matches_gaussian) s += "rank function differs from gaussian; ";
                for (const auto& g : cert.groups)
                    if (!g.symmetric || !g.unimodal)
                        s += "length " + std::to_string(g.length) + " tops are" +
                             (g.symmetric ? "" : " not symmetric") + (g.unimodal ? "" : " not unimodal") + "; ";
                return s;
            });
        }
    }
    rec.finish();
    rep.seconds = seconds_since(start);
    return rep;
}

VerificationReport verify_instance(int n, Int m, const OracleOptions& opts) {
    VerificationReport rep;
    rep.scope = "n=" + std::to_string(n) + " m=" + std::to_string(m);
    rep.merge(check_statistics(n, m, opts), opts.cap);
    rep.merge(check_chains(n, m, opts), opts.cap);
    rep.merge(check_structure(n, m, opts), opts.cap);
    return rep;
}

std::vector<std::pair<int, Int>> sweep_pairs(Int max_size, int max_dim) {
    std::vector<std::pair<int, Int>> out;
    for (int n = 0; n <= max_dim; ++n)
        for (Int m = 0; m <= max_dim; ++m)
            if (count_A(n, m) <= max_size) out.emplace_back(n, m);
    return out;
}

VerificationReport run_sweep(const SweepOptions& opts) {
    const auto start = Clock::now();
    const auto pairs = sweep_pairs(opts.max_size, opts.max_dim);
    std::vector<VerificationReport> parts(pairs.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < pairs.size() && !failed;) {
            const auto [n, m] = pairs[k];
            try {
                parts[k] = verify_instance(n, m, opts.oracle);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                failed = true;
            }
            // large tables are not reused by the recursion
            if (count_A(n, m) > 20000) DecompositionCache::global().erase(n, m);
        }
    };
    const unsigned jobs = std::max(1u, opts.jobs);
    std::vector<std::thread> threads;
    for (unsigned t = 1; t < jobs; ++t) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);

    VerificationReport rep;
    rep.scope = "sweep max_size=" + std::to_string(opts.max_size) +
                " max_dim=" + std::to_string(opts.max_dim) + " pairs=" + std::to_string(pairs.size());
    for (const auto& part : parts) rep.merge(part, opts.oracle.cap);
    rep.seconds = seconds_since(start);
    return rep;
}

// ---------------------------------------------------------------------------

std::string to_json(const VerificationReport& report, bool with_timing) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["scope"] = report.scope;
    j["passed"] = report.passed();
    j["checks"] = ordered_json::array();
    for (const auto& c : report.checks) {
        ordered_json cj;
        cj["name"] = c.name;
        cj["passed"] = c.passed();
        cj["waived"] = c.waived;
        cj["examined"] = c.examined;
        cj["failures"] = c.failures;
        cj["counterexamples"] = ordered_json::array();
        for (const auto& ce : c.counterexamples)
            cj["counterexamples"].push_back(
                {{"input", ce.input}, {"detail", ce.detail}, {"reproduce", ce.reproduce}});
        j["checks"].push_back(std::move(cj));
    }
    j["census"] = ordered_json::array();
    for (const auto& e : report.census)
        j["census"].push_back({{"element", e.element.vec()},
                               {"signature", e.signature.vec()},
                               {"degree", e.degree},
                               {"formula_degree", e.formula_degree},
                               {"boundary", e.boundary}});
    if (with_timing) j["seconds"] = report.seconds;
    return j.dump(2) + "\n";
}

std::string to_text(const VerificationReport& report, bool with_timing) {
    std::ostringstream out;
    out << "scope: " << report.scope << "\n";
    for (const auto& c : report.checks) {
        const char* status = c.passed() ? "PASS" : (c.waived ? "WAIVED" : "FAIL");
        out << status << ' ' << c.name << " examined=" << c.examined << " failures=" << c.failures
            << "\n";
        for (const auto& ce : c.counterexamples)
            out << "    " << ce.input << ": " << ce.detail << "\n      " << ce.reproduce << "\n";
    }
    out << "degree-formula census: " << report.census.size() << " elements\n";
    out << census_text(report.census);
    if (with_timing) out << "time: " << report.seconds << " s\n";
    out << (report.passed() ? "result: PASS" : "result: FAIL") << "\n";
    return out.str();
}

std::string census_text(const std::vector<CensusEntry>& census) {
    std::string out;
    for (const auto& e : census)
        out += to_string(e.element) + " " + to_string(e.signature) + " degree=" +
               std::to_string(e.degree) + " formula=" + std::to_string(e.formula_degree) +
               " boundary=" + (e.boundary ? "yes" : "no") + "\n";
    return out;
}

} // namespace unimodal
