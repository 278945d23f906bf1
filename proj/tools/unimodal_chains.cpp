// unimodal-chains: statistics, signature classes and chain decompositions of
// Young's lattice L(m,n) in its composition model A_n(m).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "unimodal/error.hpp"
#include "unimodal/io.hpp"
#include "unimodal/oracle.hpp"
#include "unimodal/qpoly.hpp"
#include "unimodal/statistics.hpp"
#include "unimodal/structure.hpp"

using namespace unimodal;
using nlohmann::ordered_json;

namespace {

constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

/// Refuse enumerations larger than this from the listing commands.
constexpr Int kMaxElements = 5'000'000;

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

void guard_size(int n, Int m) {
    if (n < 0 || m < 0) throw InvalidArgument("n and m must be nonnegative");
    check_box(n, m);
    if (count_A(n, m) > kMaxElements)
        throw ResourceLimit("A_" + std::to_string(n) + "(" + std::to_string(m) + ") has more than " +
                            std::to_string(kMaxElements) + " elements");
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw InvalidArgument("cannot write " + path);
    out << text;
}

int cmd_signature(const std::string& element, bool as_partition, std::optional<int> n,
                  const std::string& format) {
    Composition a;
    if (as_partition) {
        if (!n) throw InvalidArgument("--as-partition needs --n (the part bound)");
        a = phi(Partition(parse_int_list(element), *n));
    } else {
        a = parse_composition(element);
    }
    const MaximalStructure ms = maximal_structure(a);
    const Signature sig = signature(a);
    const Composition w = a.n() >= 1 ? omega(a, ms) : a;
    if (format == "json") {
        ordered_json j;
        j["element"] = a.vec();
        j["spread"] = ms.spread;
        j["degree"] = degree(ms);
        j["M"] = ms.mset;
        j["Act"] = ms.active;
        j["omega"] = w.vec();
        j["signature"] = sig.vec();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "element   " << to_string(a) << "\n"
                  << "spread    " << ms.spread << "\n"
                  << "degree    " << degree(ms) << "\n"
                  << "M         " << join(ms.mset) << "\n"
                  << "Act       " << join(ms.active) << "\n"
                  << "omega     " << to_string(w) << "\n"
                  << "signature " << to_string(sig) << "\n";
    }
    return 0;
}

int cmd_classes(int n, Int m, const std::string& format) {
    guard_size(n, m);
    const auto table = DecompositionCache::global().classes(n, m);
    ordered_json j = ordered_json::array();
    for (const auto& [sig, members] : *table) {
        const ClassShape shape = class_shape(n, sig);
        if (format == "json") {
            j.push_back({{"signature", sig.vec()},
                         {"size", members.size()},
                         {"r", shape.r},
                         {"ell", shape.ell},
                         {"top", shape.top.vec()},
                         {"formula_r", shape.formula_r},
                         {"boundary", shape.boundary}});
        } else {
            std::cout << to_string(sig) << " size " << members.size() << " r " << shape.r << " ell "
                      << shape.ell << " top " << to_string(shape.top)
                      << (shape.boundary ? " boundary" : "") << "\n";
        }
    }
    if (format == "json") std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_decompose(int n, Int m, const std::string& format, const std::string& sig_text,
                  const std::string& output) {
    guard_size(n, m);
    Decomposition dec;
    if (sig_text.empty()) {
        dec = decompose_all(n, m);
    } else {
        const Signature sig = parse_signature(n, sig_text);
        if (sig.implied_m() != m)
            throw InvalidArgument("signature " + to_string(sig) + " does not belong to m = " +
                                  std::to_string(m));
        dec.n = n;
        dec.m = m;
        dec.classes.push_back(decompose_class(n, sig));
        dec.build_index();
    }
    if (format == "json") emit(to_json(dec), output);
    else if (format == "dot") emit(to_dot(dec), output);
    else emit(to_text(dec), output);
    return 0;
}

struct VerifyArgs {
    std::optional<int> n;
    std::optional<Int> m;
    std::optional<Int> max_size;
    int max_dim = 20;
    unsigned jobs = 1;
    bool waive_degree_formula = true;
    bool waive_omega_order = false;
    Int decompose_max_size = 50000;
    std::string format = "text";
    std::string census;
    bool timing = false;
};

int cmd_verify(const VerifyArgs& args) {
    OracleOptions oracle;
    oracle.waive_degree_formula = args.waive_degree_formula;
    oracle.waive_omega_order = args.waive_omega_order;
    oracle.decompose_max_size = args.decompose_max_size;

    VerificationReport rep;
    if (args.n || args.m) {
        if (!args.n || !args.m) throw InvalidArgument("--n and --m go together");
        if (args.max_size) throw InvalidArgument("--max-size sweeps; drop --n/--m");
        guard_size(*args.n, *args.m);
        rep = verify_instance(*args.n, *args.m, oracle);
    } else {
        SweepOptions sweep;
        sweep.max_size = args.max_size.value_or(sweep.max_size);
        sweep.max_dim = args.max_dim;
        sweep.jobs = args.jobs;
        sweep.oracle = oracle;
        rep = run_sweep(sweep);
    }
    std::cout << (args.format == "json" ? to_json(rep, args.timing) : to_text(rep, args.timing));
    if (!args.census.empty()) emit(census_text(rep.census), args.census);
    return rep.passed() ? 0 : kExitVerify;
}

int cmd_gaussian(Int m, Int n, Int area_limit) {
    set_gaussian_area_limit(area_limit);
    const CoefficientVector& g = gaussian(m, n);
    std::cout << to_string(g) << (is_symmetric(g) ? " symmetric" : " asymmetric")
              << (is_unimodal(g) ? " unimodal" : " not-unimodal") << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Signature classes and explicit chain decompositions of Young's lattice L(m,n)"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string element;
    bool as_partition = false;
    std::optional<int> part_bound;
    auto* sig_cmd = app.add_subcommand("signature", "spread, degree, M, Act, omega and signature of one element");
    sig_cmd->add_option("element", element, "composition \"[a_0,...,a_n]\" (or a partition with --as-partition)")
        ->required();
    sig_cmd->add_flag("--as-partition", as_partition, "read the element as a partition and convert with phi");
    sig_cmd->add_option("--n", part_bound, "part bound for --as-partition");
    sig_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    int n = 0;
    Int m = 0;
    auto* classes_cmd = app.add_subcommand("classes", "signature classes of A_n(m) with sizes, r, ell and top");
    classes_cmd->add_option("--n", n)->required();
    classes_cmd->add_option("--m", m)->required();
    classes_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    std::string sig_text;
    std::string output;
    auto* dec_cmd = app.add_subcommand("decompose", "chain decomposition of A_n(m)");
    dec_cmd->add_option("--n", n)->required();
    dec_cmd->add_option("--m", m)->required();
    dec_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json", "dot"}));
    dec_cmd->add_option("--signature", sig_text, "only this class, \"d0,d1,...\"");
    dec_cmd->add_option("-o,--output", output, "write to a file instead of stdout");

    VerifyArgs va;
    auto* verify_cmd = app.add_subcommand("verify", "exhaustive checks on one A_n(m) or a sweep");
    verify_cmd->add_option("--n", va.n);
    verify_cmd->add_option("--m", va.m);
    verify_cmd->add_option("--max-size", va.max_size, "sweep all (n,m) with C(m+n,m) <= this (default 200000)");
    verify_cmd->add_option("--max-dim", va.max_dim, "sweep bound on n and m")->capture_default_str();
    verify_cmd->add_option("--jobs", va.jobs, "worker threads")->envname("UNIMODAL_CHAINS_JOBS")->capture_default_str();
    verify_cmd->add_flag("--waive-degree-formula,!--no-waive-degree-formula", va.waive_degree_formula,
                         "do not fail on the degree-formula census")
        ->capture_default_str();
    verify_cmd->add_flag("--waive-omega-order", va.waive_omega_order,
                         "do not fail on the omega order-preservation checks");
    verify_cmd->add_option("--decompose-max-size", va.decompose_max_size,
                           "decompose A_n(m) only up to this many elements")
        ->capture_default_str();
    verify_cmd->add_option("--format", va.format)->check(CLI::IsMember({"text", "json"}));
    verify_cmd->add_option("--census", va.census, "write the degree-formula census to a file");
    verify_cmd->add_flag("--timing", va.timing, "include wall time in the report");

    Int gm = 0;
    Int gn = 0;
    Int area = kDefaultGaussianAreaLimit;
    auto* gauss_cmd = app.add_subcommand("gaussian", "coefficients of the Gaussian binomial [m+n choose m]_q");
    gauss_cmd->add_option("--m", gm)->required();
    gauss_cmd->add_option("--n", gn)->required();
    gauss_cmd->add_option("--area-limit", area, "largest accepted m*n")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    // the environment wins over --jobs
    if (const char* env = std::getenv("UNIMODAL_CHAINS_JOBS")) {
        try {
            va.jobs = static_cast<unsigned>(std::stoul(env));
        } catch (const std::exception&) {
            std::cerr << "error: UNIMODAL_CHAINS_JOBS is not a number\n";
            return kExitUsage;
        }
    }

    try {
        if (*sig_cmd) return cmd_signature(element, as_partition, part_bound, format);
        if (*classes_cmd) return cmd_classes(n, m, format);
        if (*dec_cmd) return cmd_decompose(n, m, format, sig_text, output);
        if (*verify_cmd) return cmd_verify(va);
        if (*gauss_cmd) return cmd_gaussian(gm, gn, area);
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "inconsistency: " << e.what() << "\n";
        return kExitVerify;
    }
    return kExitUsage;
}
