#include "unimodal/structure.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <unordered_set>

#include "unimodal/error.hpp"

namespace unimodal {

namespace {

int leftmost_pair(const Composition& c) {
    if (c.n() >= 1) {
        const Int s = spread(c);
        for (std::size_t i = 0; i + 1 < c.size(); ++i)
            if (c[i] + c[i + 1] == s) return static_cast<int>(i);
    }
    throw_invalid("no maximal pair in " + to_string(c));
}

Composition drop_front(const Composition& c, std::size_t count) {
    return Composition(std::vector<Int>(c.vec().begin() + static_cast<std::ptrdiff_t>(count),
                                        c.vec().end()));
}

const std::vector<Composition>* find_class(const ClassTable& table, const Signature& d) {
    for (const auto& [sig, members] : table)
        if (sig == d) return &members;
    return nullptr;
}

std::vector<Partition> partitions_in_box(Int parts, Int bound) {
    std::vector<Partition> out;
    for (const Composition& c : Compositions(static_cast<int>(parts), bound))
        out.push_back(psi_inv(c));
    return out;
}

/// Upward covers of a partition inside L(r, ell).
std::vector<Partition> partition_upper_covers(const Partition& p) {
    std::vector<Partition> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Int next = i + 1 < p.size() ? p[i + 1] : p.bound();
        if (p[i] < next) {
            std::vector<Int> parts = p.vec();
            ++parts[i];
            out.emplace_back(std::move(parts), p.bound());
        }
    }
    return out;
}

class CheckSet {
public:
    explicit CheckSet(std::vector<NamedCheck>& out) : out_(out) {}

    NamedCheck& get(const char* name) {
        for (const auto& [key, idx] : seen_)
            if (key == name) return out_[idx];
        std::size_t idx = 0;
        while (idx < out_.size() && out_[idx].name != name) ++idx;
        if (idx == out_.size()) out_.push_back({name, true, 0, 0, {}});
        seen_.emplace_back(name, idx);
        return out_[idx];
    }

    void expect(const char* name, bool ok, const std::string& detail) {
        NamedCheck& c = get(name);
        ++c.examined;
        if (ok) return;
        c.passed = false;
        if (c.failures++ == 0) c.first_failure = detail;
    }

    template <class Detail>
    void expect_lazy(const char* name, bool ok, Detail&& detail) {
        if (ok) ++get(name).examined;
        else expect(name, false, detail());
    }

private:
    std::vector<NamedCheck>& out_;
    std::vector<std::pair<const char*, std::size_t>> seen_;
};

} // namespace

ClassShape class_shape(int n, const Signature& d) {
    ClassShape shape;
    shape.signature = d;
    shape.top = highest_weight(n, d);
    shape.formula_r = degree_formula(d);
    shape.formula_ell = chain_length(n, d);
    shape.spread = spread(shape.top);
    if (n <= 0) {
        shape.base = d;
        return shape;
    }
    const MaximalStructure ms = maximal_structure(shape.top);
    shape.r = degree(ms);
    shape.ell = transversal_length(shape.top, ms.mset.front());
    shape.base = signature(omega(shape.top, ms));
    shape.boundary = recursion_keeps_spread(shape.top);
    return shape;
}

Composition prepend_pairs(const Composition& b, Int r, Int s) {
    if (r < 0 || s < 0) throw_invalid("prepend_pairs needs r, s >= 0");
    std::vector<Int> a;
    a.reserve(static_cast<std::size_t>(2 * r) + b.size());
    for (Int t = 0; t < r; ++t) {
        a.push_back(s);
        a.push_back(0);
    }
    a.insert(a.end(), b.vec().begin(), b.vec().end());
    return Composition(std::move(a));
}

Composition beta_r(const Composition& b, Int r, Int s) {
    if (r >= 1 && s <= spread(b))
        throw_invalid("beta_r needs s > spread(b): s = " + std::to_string(s) +
                      ", spread = " + std::to_string(spread(b)));
    return prepend_pairs(b, r, s);
}

Composition omega_r(const Composition& a) { return omega(a); }

Partition delta(const Composition& a, const Composition& b) {
    if (omega(a) != b)
        throw_invalid("omega(" + to_string(a) + ") != " + to_string(b));
    if (a.size() == b.size()) return Partition({}, 0);
    const std::size_t r = (a.size() - b.size()) / 2;
    const Int s = spread(a);
    const Int ell = transversal_length(a, leftmost_pair(a));
    std::vector<Int> parts;
    parts.reserve(r);
    Composition cur = a;
    for (std::size_t level = 0; level < r; ++level) {
        RunEnd up = raise_to_initial(cur, leftmost_pair(cur));
        if (up.end.size() < 2 || up.end[0] != s || up.end[1] != 0)
            throw_inconsistent("raising " + to_string(cur) + " ended at " + to_string(up.end) +
                               " instead of (s,0,...)");
        parts.push_back(up.steps);
        cur = drop_front(up.end, 2);
    }
    if (cur != b)
        throw_inconsistent("stripping " + to_string(a) + " left " + to_string(cur) +
                           ", expected " + to_string(b));
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if ((i > 0 && parts[i] < parts[i - 1]) || parts[i] > ell) {
            std::string shown;
            for (Int p : parts) shown += std::to_string(p) + ' ';
            throw_inconsistent("delta(" + to_string(a) + ") = " + shown +
                               "is not a partition bounded by " + std::to_string(ell));
        }
    }
    return Partition(std::move(parts), ell);
}

Int delta1_closed_form(const Composition& a) {
    if (a.m() <= 0) throw_invalid("delta1_closed_form needs m > 0");
    const int i = leftmost_pair(a);
    const Int s = spread(a);
    Int prefix = 0;
    for (int j = 0; j < i; ++j) prefix += a[static_cast<std::size_t>(j)];
    return (i + 1) * s - a[static_cast<std::size_t>(i)] - 2 * prefix;
}

Composition delta_inv(const Partition& lam, const Composition& b, Int s) {
    const auto r = static_cast<Int>(lam.size());
    Composition z = prepend_pairs(b, r, s);
    for (Int i = 1; i <= r; ++i) {
        const Int steps = lam[static_cast<std::size_t>(r - i)];
        if (steps > 0) z = lower_by(z, 0, steps);
    }
    return z;
}

// ---------------------------------------------------------------------------

bool SplitExtensionReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.passed; });
}

const NamedCheck* SplitExtensionReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

namespace {

/// One cover step of the raising algorithm at each component of M(p); true
/// if any of them lands on q.
bool share_transversal_chain(const Composition& q, const Composition& p) {
    for (const Interval& comp : maximal_structure(p).components) {
        if (raise_step(p, comp.first) == q) return true;
    }
    for (const Interval& comp : maximal_structure(q).components) {
        if (lower_step(q, comp.first) == p) return true;
    }
    return false;
}

Composition stripped_residue(const Composition& c) {
    return drop_front(raise_to_initial(c, leftmost_pair(c)).end, 2);
}

constexpr std::size_t kPairwiseSectionLimit = 300;
constexpr std::size_t kPairwiseFiberLimit = 150;

} // namespace

SplitExtensionReport verify_split_extension(int n, const Signature& d) {
    if (n < 1) throw_invalid("split extensions need n >= 1");
    const ClassShape shape = class_shape(n, d);
    auto& cache = DecompositionCache::global();
    const auto table = cache.classes(n, d.implied_m());
    const auto* members = find_class(*table, d);
    if (!members || members->empty()) throw_invalid("class " + to_string(d) + " is empty");

    SplitExtensionReport rep;
    rep.n = n;
    rep.d = d;
    rep.r = shape.r;
    rep.ell = shape.ell;
    rep.base_class = shape.base;
    rep.boundary = shape.boundary;
    rep.formula_r = shape.formula_r;
    rep.class_size = static_cast<Int>(members->size());
    CheckSet checks(rep.checks);

    const Int r = shape.r;
    const Int s = shape.spread;
    const int base_n = n - 2 * static_cast<int>(r);
    const Int base_m = d.implied_m() - r * s;
    const auto base_table = cache.classes(base_n, base_m);
    const auto* base_ptr = find_class(*base_table, shape.base);
    const std::vector<Composition> base = base_ptr ? *base_ptr : std::vector<Composition>{};
    rep.fiber_count = static_cast<Int>(base.size());

    const std::unordered_set<Composition, CompositionHash> in_class(members->begin(), members->end());
    const std::unordered_set<Composition, CompositionHash> in_base(base.begin(), base.end());

    // surjectivity and fibres
    std::unordered_map<Composition, std::vector<Composition>, CompositionHash> fibers;
    for (const Composition& a : *members) fibers[omega(a)].push_back(a);
    {
        bool ok = fibers.size() == base.size();
        std::string detail;
        for (const auto& [b, _] : fibers) {
            if (!in_base.contains(b)) {
                ok = false;
                detail = "omega image " + to_string(b) + " outside the base class";
                break;
            }
        }
        if (ok && detail.empty()) {
            for (const Composition& b : base)
                if (!fibers.contains(b)) {
                    ok = false;
                    detail = "base element " + to_string(b) + " not hit";
                    break;
                }
        }
        checks.expect(split_check::kSurjectivity, ok, detail);
    }

    // section
    std::unordered_map<Composition, Composition, CompositionHash> section;
    for (const Composition& b : base) {
        Composition lifted = shape.boundary || s == 0 ? prepend_pairs(b, r, s) : beta_r(b, r, s);
        checks.expect_lazy(split_check::kSection, in_class.contains(lifted) && omega(lifted) == b,
                           [&] { return "beta(" + to_string(b) + ") = " + to_string(lifted); });
        section.emplace(b, std::move(lifted));
    }
    if (base.size() <= kPairwiseSectionLimit) {
        rep.pairwise_section_order = true;
        for (const Composition& b1 : base)
            for (const Composition& b2 : base)
                if (leq(b1, b2))
                    checks.expect_lazy(split_check::kSectionOrder,
                                       leq(section.at(b1), section.at(b2)), [&] {
                                           return to_string(b1) + " <= " + to_string(b2);
                                       });
    } else {
        // the order of A_{n-2r} is generated by its covers
        for (const Composition& x : Compositions(base_n, base_m))
            for (const CoverEdge& e : upper_covers(x))
                checks.expect_lazy(split_check::kSectionOrder,
                                   covers(prepend_pairs(e.lower, r, s),
                                          prepend_pairs(e.upper, r, s)).has_value(),
                                   [&] { return to_string(e.lower) + " -> " + to_string(e.upper); });
    }
    checks.get(split_check::kSectionOrder);
    for (const Composition& b : base)
        for (const CoverEdge& e : upper_covers(b))
            if (in_base.contains(e.upper))
                checks.expect_lazy(split_check::kBaseRankShift,
                                   rank(section.at(e.upper)) == rank(section.at(b)) + 1,
                                   [&] { return to_string(b) + " -> " + to_string(e.upper); });
    checks.get(split_check::kBaseRankShift);

    // delta on every member
    const std::vector<Partition> box = partitions_in_box(r, shape.ell);
    rep.fiber_size = static_cast<Int>(box.size());
    std::unordered_map<Composition, Partition, CompositionHash> deltas;
    for (const Composition& a : *members) {
        const Composition b = omega(a);
        try {
            Partition lam = delta(a, b);
            checks.expect_lazy(split_check::kDeltaMonotone, lam.bound() == shape.ell,
                               [&] { return "chain length differs at " + to_string(a); });
            const Composition back = delta_inv(lam, b, s);
            checks.expect_lazy(split_check::kDeltaRoundTrip, back == a,
                               [&] { return to_string(a) + " -> " + to_string(back); });
            if (a.m() > 0 && r >= 1)
                checks.expect_lazy(split_check::kDelta1ClosedForm,
                                   delta1_closed_form(a) == lam[0],
                                   [&] { return to_string(a); });
            deltas.emplace(a, std::move(lam));
        } catch (const Error& e) {
            checks.expect(split_check::kDeltaMonotone, false, to_string(a) + ": " + e.what());
        }
    }
    checks.get(split_check::kDeltaRoundTrip);
    checks.get(split_check::kDelta1ClosedForm);

    // delta_inv on every (lambda, b)
    for (const auto& [b, fiber] : fibers)
        checks.expect_lazy(split_check::kFiberCardinality, fiber.size() == box.size(), [&] {
            return "fibre over " + to_string(b) + " has " + std::to_string(fiber.size()) +
                   " elements, L(r,ell) has " + std::to_string(box.size());
        });
    checks.expect_lazy(split_check::kFiberCardinality,
                       members->size() == base.size() * box.size(),
                       [&] { return std::string("class size is not |base| * |L(r,ell)|"); });
    for (const Composition& b : base) {
        const Int base_rank = rank(section.at(b));
        for (const Partition& lam : box) {
            try {
                const Composition x = delta_inv(lam, b, s);
                const bool member = in_class.contains(x) && omega(x) == b;
                checks.expect_lazy(split_check::kDeltaInvRoundTrip,
                                   member && delta(x, b) == lam,
                                   [&] { return to_string(lam) + " over " + to_string(b); });
                checks.expect_lazy(split_check::kFiberRank, rank(x) == base_rank + lam.sum(),
                                   [&] { return to_string(x); });
                for (const Partition& up : partition_upper_covers(lam)) {
                    const Composition y = delta_inv(up, b, s);
                    checks.expect_lazy(split_check::kDeltaInvCovers, covers(x, y).has_value(), [&] {
                        return to_string(lam) + " -> " + to_string(up) + " over " + to_string(b);
                    });
                }
            } catch (const Error& e) {
                checks.expect(split_check::kDeltaInvRoundTrip, false,
                              to_string(lam) + " over " + to_string(b) + ": " + e.what());
            }
        }
    }
    checks.get(split_check::kDeltaInvRoundTrip);
    checks.get(split_check::kFiberRank);
    checks.get(split_check::kDeltaInvCovers);

    // covers inside the class
    for (const Composition& q : *members) {
        for (const CoverEdge& e : upper_covers(q)) {
            const Composition& p = e.upper;
            if (!in_class.contains(p)) continue;
            const Composition wq = omega(q);
            const Composition wp = omega(p);
            if (wq == wp && deltas.contains(q) && deltas.contains(p))
                checks.expect_lazy(split_check::kDeltaCovers, covers(deltas.at(q), deltas.at(p)),
                                   [&] { return to_string(q) + " -> " + to_string(p); });
            checks.expect_lazy(split_check::kOmegaOrder, leq(wq, wp), [&] {
                return to_string(q) + " -> " + to_string(p) + " but omega gives " + to_string(wq) +
                       ", " + to_string(wp);
            });
            if (q.m() > 0 && !share_transversal_chain(q, p)) {
                const Composition rq = stripped_residue(q);
                const Composition rp = stripped_residue(p);
                checks.expect_lazy(split_check::kStrippedCover, covers(rq, rp).has_value(), [&] {
                    return to_string(q) + " -> " + to_string(p) + " strip to " + to_string(rq) +
                           ", " + to_string(rp);
                });
            }
        }
    }
    checks.get(split_check::kDeltaCovers);
    checks.get(split_check::kOmegaOrder);
    checks.get(split_check::kStrippedCover);

    // full order isomorphism on small fibres
    rep.pairwise_fiber_order = true;
    for (const auto& [b, fiber] : fibers) {
        if (fiber.size() > kPairwiseFiberLimit) {
            rep.pairwise_fiber_order = false;
            continue;
        }
        std::vector<std::pair<const Composition*, const Partition*>> mapped;
        for (const Composition& x : fiber)
            if (auto it = deltas.find(x); it != deltas.end()) mapped.emplace_back(&x, &it->second);
        for (const auto& [x, lx] : mapped)
            for (const auto& [y, ly] : mapped)
                checks.expect_lazy(split_check::kFiberOrder, leq(*x, *y) == leq(*lx, *ly),
                                   [&] { return to_string(*x) + " vs " + to_string(*y); });
    }
    checks.get(split_check::kFiberOrder);
    return rep;
}

// ---------------------------------------------------------------------------

std::size_t Decomposition::chain_count() const {
    std::size_t total = 0;
    for (const auto& c : classes) total += c.chains.size();
    return total;
}

const Chain& Decomposition::chain(std::size_t id) const {
    if (refs_.size() != chain_count()) throw_invalid("decomposition index not built");
    const ChainRef& ref = refs_.at(id);
    return classes[ref.class_index].chains[ref.chain_index];
}

void Decomposition::build_index() {
    refs_.clear();
    index_.clear();
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
        for (std::size_t k = 0; k < classes[ci].chains.size(); ++k) {
            const std::size_t id = refs_.size();
            refs_.push_back({ci, k});
            for (Composition& e : classes[ci].chains[k].elements()) {
                auto [it, inserted] = index_.emplace(std::move(e), id);
                if (!inserted)
                    throw_inconsistent("element " + to_string(it->first) + " lies on chains " +
                                       std::to_string(it->second) + " and " + std::to_string(id));
            }
        }
    }
}

std::optional<std::size_t> Decomposition::chain_of(const Composition& c) const {
    if (auto it = index_.find(c); it != index_.end()) return it->second;
    return std::nullopt;
}

struct DecompositionCache::Impl {
    std::shared_mutex mutex;
    std::map<std::pair<int, Int>, std::shared_ptr<const ClassTable>> tables;
    std::map<std::pair<int, Int>, std::shared_ptr<const Decomposition>> decompositions;
};

DecompositionCache::DecompositionCache() : impl_(std::make_unique<Impl>()) {}
DecompositionCache::~DecompositionCache() = default;

DecompositionCache& DecompositionCache::global() {
    static DecompositionCache cache;
    return cache;
}

void DecompositionCache::clear() {
    std::unique_lock lock(impl_->mutex);
    impl_->tables.clear();
    impl_->decompositions.clear();
}

void DecompositionCache::erase(int n, Int m) {
    std::unique_lock lock(impl_->mutex);
    impl_->tables.erase({n, m});
    impl_->decompositions.erase({n, m});
}

std::shared_ptr<const ClassTable> DecompositionCache::classes(int n, Int m) {
    const std::pair key{n, m};
    {
        std::shared_lock lock(impl_->mutex);
        if (auto it = impl_->tables.find(key); it != impl_->tables.end()) return it->second;
    }
    std::unordered_map<Signature, std::vector<Composition>, SignatureHash> groups;
    for (const Composition& c : Compositions(n, m)) groups[signature(c)].push_back(c);
    auto table = std::make_shared<ClassTable>();
    for (const Signature& sig : enumerate_signatures(n, m)) {
        auto it = groups.find(sig);
        if (it == groups.end()) continue;
        table->emplace_back(sig, std::move(it->second));
        groups.erase(it);
    }
    if (!groups.empty())
        throw_inconsistent("signature outside the enumerated range for A_" + std::to_string(n) +
                           "(" + std::to_string(m) + ")");
    std::unique_lock lock(impl_->mutex);
    return impl_->tables.try_emplace(key, std::move(table)).first->second;
}

std::shared_ptr<const Decomposition> DecompositionCache::decomposition(int n, Int m) {
    const std::pair key{n, m};
    {
        std::shared_lock lock(impl_->mutex);
        if (auto it = impl_->decompositions.find(key); it != impl_->decompositions.end())
            return it->second;
    }
    auto dec = std::make_shared<Decomposition>(decompose_all(n, m, *this));
    std::unique_lock lock(impl_->mutex);
    return impl_->decompositions.try_emplace(key, std::move(dec)).first->second;
}

ClassDecomposition decompose_class(int n, const Signature& d) {
    return decompose_class(n, d, DecompositionCache::global());
}

ClassDecomposition decompose_class(int n, const Signature& d, DecompositionCache& cache) {
    const ClassShape shape = class_shape(n, d);
    ClassDecomposition out{d, shape.r, shape.ell, {}};

    auto singletons = [&] {
        const auto table = cache.classes(n, d.implied_m());
        const auto* members = find_class(*table, d);
        if (!members) throw_invalid("class " + to_string(d) + " is empty");
        for (const Composition& c : *members) out.chains.push_back({c, {}});
        return out;
    };
    if (n <= 0 || shape.ell == 0) return singletons();

    const int base_n = n - 2 * static_cast<int>(shape.r);
    const Int base_m = d.implied_m() - shape.r * shape.spread;
    const auto base_table = cache.classes(base_n, base_m);
    const auto* base = find_class(*base_table, shape.base);
    if (!base) throw_inconsistent("base class " + to_string(shape.base) + " is empty");

    if (shape.r == 1) {
        for (const Composition& b : *base) {
            Chain chain = transversal_chain(prepend_pairs(b, 1, shape.spread), 0);
            if (static_cast<Int>(chain.length()) != shape.ell)
                throw_inconsistent("fibre chain over " + to_string(b) + " has length " +
                                   std::to_string(chain.length()));
            out.chains.push_back(std::move(chain));
        }
        return out;
    }

    const auto sub = cache.decomposition(static_cast<int>(shape.r), shape.ell);
    std::vector<std::vector<Partition>> sub_chains;
    for (const auto& cls : sub->classes)
        for (const Chain& chain : cls.chains) {
            std::vector<Partition> lams;
            for (const Composition& e : chain.elements()) lams.push_back(psi_inv(e));
            sub_chains.push_back(std::move(lams));
        }
    for (const Composition& b : *base) {
        for (const auto& lams : sub_chains) {
            std::vector<Composition> xs;
            xs.reserve(lams.size());
            for (const Partition& lam : lams) xs.push_back(delta_inv(lam, b, shape.spread));
            try {
                out.chains.push_back(chain_from_elements(xs));
            } catch (const InvalidArgument& e) {
                throw_inconsistent("transported chain is not saturated: " + std::string(e.what()));
            }
        }
    }
    return out;
}

Decomposition decompose_all(int n, Int m) {
    return decompose_all(n, m, DecompositionCache::global());
}

Decomposition decompose_all(int n, Int m, DecompositionCache& cache) {
    if (n < 0) throw_invalid("decompose_all needs n >= 0");
    Decomposition dec;
    dec.n = n;
    dec.m = m;
    const auto table = cache.classes(n, m);
    for (const auto& [sig, members] : *table) dec.classes.push_back(decompose_class(n, sig, cache));
    dec.build_index();
    if (static_cast<Int>(dec.index().size()) != count_A(n, m))
        throw_inconsistent("decomposition of A_" + std::to_string(n) + "(" + std::to_string(m) +
                           ") covers " + std::to_string(dec.index().size()) + " of " +
                           std::to_string(count_A(n, m)) + " elements");
    return dec;
}

// ---------------------------------------------------------------------------

bool UnimodalityCertificate::passed() const {
    return matches_gaussian && rank_function_symmetric && rank_function_unimodal &&
           std::all_of(groups.begin(), groups.end(),
                       [](const LengthGroup& g) { return g.symmetric && g.unimodal; });
}

UnimodalityCertificate unimodality_certificate(const Decomposition& dec) {
    UnimodalityCertificate cert;
    cert.n = dec.n;
    cert.m = dec.m;
    std::map<Int, std::vector<Int>> by_length;
    cert.rank_function.assign(static_cast<std::size_t>(dec.m * dec.n) + 1, 0);
    for (const auto& cls : dec.classes) {
        for (const Chain& chain : cls.chains) {
            const auto len = static_cast<Int>(chain.length());
            by_length[len].push_back(weight(chain.top));
            const Int low = rank(chain.top);
            for (Int t = low; t <= low + len; ++t) {
                if (t < 0 || static_cast<std::size_t>(t) >= cert.rank_function.size()) {
                    cert.rank_function.clear();
                    break;
                }
                cert.rank_function[static_cast<std::size_t>(t)] += 1;
            }
        }
    }
    for (auto& [len, weights] : by_length) {
        LengthGroup g;
        g.length = len;
        std::sort(weights.begin(), weights.end());
        g.top_weights = weights;
        std::vector<Int> mirrored;
        for (auto it = weights.rbegin(); it != weights.rend(); ++it) mirrored.push_back(2 * len - *it);
        g.symmetric = mirrored == weights;
        const Int lo = weights.front();
        const Int hi = weights.back();
        g.profile.assign(static_cast<std::size_t>((hi - lo) / 2) + 1, 0);
        bool parity_ok = true;
        for (Int w : weights) {
            if ((w - lo) % 2 != 0) parity_ok = false;
            else ++g.profile[static_cast<std::size_t>((w - lo) / 2)];
        }
        g.unimodal = parity_ok && is_unimodal(g.profile);
        cert.groups.push_back(std::move(g));
    }
    try {
        cert.matches_gaussian = cert.rank_function == gaussian(dec.m, dec.n);
    } catch (const ResourceLimit&) {
        cert.matches_gaussian = false;
    }
    cert.rank_function_symmetric = is_symmetric(cert.rank_function);
    cert.rank_function_unimodal = is_unimodal(cert.rank_function);
    return cert;
}

} // namespace unimodal
