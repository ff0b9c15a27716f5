// Command-line front door: exact counts, verification suites, growth
// reports, and object renderings. Counts are always printed as decimal
// strings. Exit codes: 0 success, 2 usage/parameter error, 3 verification
// failure or oracle disagreement.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "parkav/parkav.hpp"

using namespace parkav;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitVerification = 3;

class Stopwatch {
public:
    std::int64_t elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Comma-separated integers (no digit shorthand): lists of sizes.
std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) throw std::invalid_argument("empty list");
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        const int v = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad integer: " + item);
        out.push_back(v);
    }
    return out;
}

// Comma-separated integers, or contiguous digits when every letter is <= 9.
std::vector<int> parse_sequence(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) throw std::invalid_argument("empty sequence");
    if (text.find(',') != std::string::npos) {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument("bad integer: " + item);
            out.push_back(v);
        }
        return out;
    }
    for (char c : text) {
        if (c < '0' || c > '9')
            throw std::invalid_argument("sequence must be comma-separated integers or digits");
        out.push_back(c - '0');
    }
    return out;
}

std::string join(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

json make_envelope(const std::string& command, const json& parameters, const json& value,
                   const std::optional<std::string>& oracle, const std::optional<bool>& agreement,
                   std::int64_t elapsed_ms) {
    json env;
    env["command"] = command;
    env["parameters"] = parameters;
    env["value"] = value;
    if (oracle) env["oracle"] = *oracle;
    if (agreement) env["agreement"] = *agreement;
    env["elapsed_ms"] = elapsed_ms;
    return env;
}

MonotoneKind parse_dir(const std::string& dir) {
    if (dir == "dec") return MonotoneKind::StrictDecreasing;
    if (dir == "inc") return MonotoneKind::WeakIncreasing;
    throw std::invalid_argument("--dir must be dec or inc");
}

Permutation parse_pattern(const std::string& text) {
    const Permutation sigma = parse_sequence(text);
    if (!is_nonmonotone_pattern(sigma))
        throw std::invalid_argument("--pattern must be one of 132, 231, 213, 312");
    return sigma;
}

// ---------------------------------------------------------------------------
// count

struct CountOptions {
    std::string family;
    int n = 0;
    std::string pattern;
    std::string content;
    std::string alpha;
    std::string dir = "dec";
    int k = 0;
    int r = 3;
    bool sharp = false;
    bool oracle = false;
    bool slow = false;
    bool force = false;
    bool as_json = false;
};

int run_count(const CountOptions& opt) {
    Stopwatch watch;
    json params;
    BigCount value;
    std::optional<BigCount> oracle_value;
    const int oracle_bound = opt.slow ? 7 : 6;

    if (opt.family == "pf321") {
        params["n"] = std::to_string(opt.n);
        value = pf321_closed(opt.n);
        if (opt.oracle) oracle_value = pf_bruteforce_count(opt.n, {3, 2, 1}, oracle_bound);
    } else if (opt.family == "pf-nonmonotone") {
        const Permutation sigma = parse_pattern(opt.pattern);
        params["n"] = std::to_string(opt.n);
        params["pattern"] = opt.pattern;
        if (opt.n > 24 && !opt.force)
            throw std::invalid_argument(
                "composition sum over 2^(n-1) terms; pass --force for n > 24");
        value = pf_nonmonotone_count(opt.n, sigma);
        if (opt.oracle) oracle_value = pf_bruteforce_count(opt.n, sigma, oracle_bound);
    } else if (opt.family == "words-monotone") {
        params["n"] = std::to_string(opt.n);
        params["k"] = std::to_string(opt.k);
        params["dir"] = opt.dir;
        params["r"] = std::to_string(opt.r);
        const MonotoneSpec spec{parse_dir(opt.dir), opt.r};
        value = monotone_word_count(opt.n, opt.k, spec);
        if (opt.oracle) {
            if (opt.n > oracle_bound || opt.k > 8)
                throw std::invalid_argument("oracle bound exceeded for words-monotone");
            BigCount filtered = 0;
            if (opt.n == 0) {
                filtered = 1;
            } else {
                std::vector<int> w(opt.n, 1);
                for (;;) {
                    if (longest_monotone(w, spec.kind) < spec.r) ++filtered;
                    int i = opt.n - 1;
                    while (i >= 0 && w[i] == opt.k) w[i--] = 1;
                    if (i < 0) break;
                    ++w[i];
                }
            }
            oracle_value = filtered;
        }
    } else if (opt.family == "sylv-classes") {
        const Composition alpha = positive_parts(parse_sequence(opt.content));
        params["content"] = opt.content;
        params["congruence"] = opt.sharp ? "#-sylvester" : "sylvester";
        value = opt.sharp ? sharp_sylvester_class_count_det(alpha) : sylvester_class_count_det(alpha);
        if (opt.oracle) {
            const auto table = opt.sharp ? sharp_classes(parse_sequence(opt.content), opt.slow ? 8 : 7)
                                         : sylv_classes(parse_sequence(opt.content), opt.slow ? 8 : 7);
            oracle_value = table.classes.size();
        }
    } else if (opt.family == "dyck-ascent") {
        const Composition alpha = parse_sequence(opt.alpha);
        params["alpha"] = opt.alpha;
        value = dyck_by_ascent_det(alpha);
        if (opt.oracle) oracle_value = dyck_by_ascent_bruteforce(alpha, opt.slow ? 14 : 12);
    } else {
        throw std::invalid_argument("unknown family: " + opt.family);
    }

    const std::optional<bool> agreement =
        oracle_value ? std::optional<bool>(*oracle_value == value) : std::nullopt;
    if (opt.as_json) {
        std::cout << make_envelope("count " + opt.family, params, value.str(),
                                   oracle_value ? std::optional<std::string>(oracle_value->str())
                                                : std::nullopt,
                                   agreement, watch.elapsed_ms())
                         .dump()
                  << "\n";
    } else {
        std::cout << value.str() << "\n";
        if (oracle_value) {
            std::cout << "oracle " << oracle_value->str() << "\n";
            std::cout << "agreement " << (*agreement ? "true" : "false") << "\n";
        }
    }
    return agreement && !*agreement ? kExitVerification : kExitOk;
}

// ---------------------------------------------------------------------------
// verify

class CheckReporter {
public:
    explicit CheckReporter(std::string suite) : suite_(std::move(suite)) {}

    void check(bool ok, const std::string& description) {
        ++total_;
        if (ok) {
            std::cout << "ok " << suite_ << ": " << description << "\n";
        } else {
            ++failures_;
            std::cout << "FAIL " << suite_ << ": " << description << "\n";
        }
    }

    int failures() const { return failures_; }
    int total() const { return total_; }

private:
    std::string suite_;
    int total_ = 0;
    int failures_ = 0;
};

void verify_pf(CheckReporter& rep, int n_max, bool slow) {
    const int top = std::min(n_max, slow ? 7 : 6);
    for (int n = 1; n <= std::min(n_max, 7); ++n) {
        BigCount count = 0;
        for_each_parking_function(n, [&](const ParkingFunction&) { ++count; });
        rep.check(count == parking_function_total(n),
                  "|PF_" + std::to_string(n) + "| = (n+1)^(n-1)");
    }
    for (int n = 1; n <= top; ++n) {
        rep.check(pf321_closed(n) == pf_bruteforce_count(n, {3, 2, 1}),
                  "pf_" + std::to_string(n) + "(321) = oracle");
        const std::vector<std::pair<std::string, Permutation>> patterns{
            {"132", {1, 3, 2}}, {"231", {2, 3, 1}}, {"213", {2, 1, 3}}, {"312", {3, 1, 2}}};
        for (const auto& [name, sigma] : patterns)
            rep.check(pf_nonmonotone_count(n, sigma) == pf_bruteforce_count(n, sigma),
                      "pf_" + std::to_string(n) + "(" + name + ") = oracle");
    }
    for (int n = 1; n <= std::min(n_max, 6); ++n) {
        WeakComposition beta(n + 1, 0);
        bool unique = true;
        auto rec = [&](auto&& self, int pos, int rem) -> void {
            if (!unique) return;
            if (pos == n) {
                beta[n] = rem;
                try {
                    pollak_representative(beta);
                } catch (const std::exception&) {
                    unique = false;
                }
                return;
            }
            for (int v = 0; v <= rem; ++v) {
                beta[pos] = v;
                self(self, pos + 1, rem - v);
            }
        };
        rec(rec, 0, n);
        rep.check(unique, "Pollak rotation unique for all contents, n = " + std::to_string(n));
    }
    for (int n = 1; n <= std::min(n_max, 5); ++n) {
        bool ok = true;
        for_each_parking_function(n, [&](const ParkingFunction& p) {
            if (label_permutation(p) != inverse(standardize(p))) ok = false;
        });
        rep.check(ok, "label permutation = std(p)^{-1}, n = " + std::to_string(n));
    }
}

void verify_words(CheckReporter& rep, int n_max, bool /*slow*/) {
    const int top = std::min(n_max, 5);
    bool monotone_ok = true;
    for (int n = 0; n <= top; ++n)
        for (int k = 1; k <= top; ++k)
            for (int r = 2; r <= 4; ++r)
                for (MonotoneKind kind :
                     {MonotoneKind::StrictDecreasing, MonotoneKind::WeakIncreasing}) {
                    BigCount filtered = 0;
                    if (n == 0) {
                        filtered = 1;
                    } else {
                        std::vector<int> w(n, 1);
                        for (;;) {
                            if (longest_monotone(w, kind) < r) ++filtered;
                            int i = n - 1;
                            while (i >= 0 && w[i] == k) w[i--] = 1;
                            if (i < 0) break;
                            ++w[i];
                        }
                    }
                    if (monotone_word_count(n, k, {kind, r}) != filtered) monotone_ok = false;
                }
    rep.check(monotone_ok, "monotone word counts = exhaustive filter, n,k <= " + std::to_string(top));

    bool corollaries_ok = true;
    for (int len = 1; len <= std::min(n_max, 5); ++len) {
        std::vector<int> w(len, 1);
        for (;;) {
            const Permutation st = standardize(w);
            for (int k = 1; k <= 2; ++k) {
                Word dec(k + 1);
                Permutation inc(k + 1);
                for (int i = 0; i <= k; ++i) {
                    dec[i] = k + 1 - i;
                    inc[i] = i + 1;
                }
                if (word_contains(w, dec) != perm_contains(st, dec)) corollaries_ok = false;
                if (perm_contains(st, inc) !=
                    (longest_monotone(w, MonotoneKind::WeakIncreasing) >= k + 1))
                    corollaries_ok = false;
            }
            int i = len - 1;
            while (i >= 0 && w[i] == 4) w[i--] = 1;
            if (i < 0) break;
            ++w[i];
        }
    }
    rep.check(corollaries_ok, "standardization corollaries over [4] words");

    for (int n = 1; n <= std::min(n_max, 5); ++n) {
        std::set<BigCount> counts;
        for_each_permutation(3, [&](const Permutation& sigma) {
            BigCount c = 0;
            for_each_parking_function(n, [&](const ParkingFunction& p) {
                if (!word_contains(p, sigma)) ++c;
            });
            counts.insert(c);
        });
        rep.check(counts.size() == 1,
                  "word-level Wilf equivalence over S_3, n = " + std::to_string(n));
    }
}

void verify_sylvester(CheckReporter& rep, int n_max, bool /*slow*/) {
    for (int sum = 1; sum <= std::min(n_max, 7); ++sum) {
        bool ok = true;
        for_each_composition(sum, [&](const Composition& alpha) {
            if (BigCount(sylv_classes(alpha, 8).classes.size()) != sylvester_class_count_det(alpha))
                ok = false;
            if (BigCount(sharp_classes(alpha, 8).classes.size()) !=
                sharp_sylvester_class_count_det(alpha))
                ok = false;
        });
        rep.check(ok, "class counts = determinants, both congruences, sum = " + std::to_string(sum));
    }
    bool transfer_ok = true;
    for (int sum = 1; sum <= std::min(n_max, 6); ++sum)
        for_each_composition(sum, [&](const Composition& alpha) {
            std::vector<Word> words;
            for_each_word_with_content(alpha, [&](const Word& w) { words.push_back(w); });
            for (std::size_t i = 0; i < words.size() && transfer_ok; ++i)
                for (std::size_t j = i + 1; j < words.size(); ++j)
                    if (sylv_equivalent(words[i], words[j]) !=
                        sharp_equivalent(reverse_complement(words[i]),
                                         reverse_complement(words[j]))) {
                        transfer_ok = false;
                        break;
                    }
        });
    rep.check(transfer_ok, "reverse-complement transfer sylvester <-> #-sylvester");
}

void verify_lgv(CheckReporter& rep, int n_max, bool /*slow*/) {
    for (int n = 1; n <= std::min(n_max, 8); ++n) {
        bool ok = true;
        for_each_composition(n, [&](const Composition& alpha) {
            const auto families = lgv_families(alpha);
            if (BigCount(families.size()) != dyck_by_ascent_det(alpha)) ok = false;
            for (const auto& f : families)
                if (!(dyck_to_family(family_to_dyck(f)) == f)) ok = false;
        });
        for_each_dyck_path(n, [&](const DyckPath& d) {
            if (family_to_dyck(dyck_to_family(d)) != d) ok = false;
        });
        rep.check(ok, "delta-prime bijection and counts, n = " + std::to_string(n));
    }
    bool catalan_ok = true;
    for (int n = 1; n <= 12; ++n) {
        BigCount total = 0;
        for_each_composition(n, [&](const Composition& alpha) { total += dyck_by_ascent_det(alpha); });
        if (total != catalan(n)) catalan_ok = false;
    }
    rep.check(catalan_ok, "ascent determinants sum to Catalan numbers, n <= 12");
    bool rothe_ok = true;
    for (int n = 1; n <= std::min(n_max, 7); ++n) {
        std::set<DyckPath> images;
        for_each_permutation(n, [&](const Permutation& pi) {
            if (perm_contains(pi, {1, 3, 2})) return;
            const DyckPath d = rothe_dyck(pi);
            if (descent_comp(d) != comp_of_set(descent_set(pi), n)) rothe_ok = false;
            if (!images.insert(d).second) rothe_ok = false;
        });
    }
    rep.check(rothe_ok, "Rothe path descent compositions and injectivity");
}

void verify_rsk(CheckReporter& rep, int n_max, bool /*slow*/) {
    bool greene_ok = true;
    for (int len = 1; len <= std::min(n_max, 5); ++len) {
        std::vector<int> w(len, 1);
        for (;;) {
            const auto shape = rsk(w).insertion.shape();
            const auto [lis, lds] = greene_invariants(w);
            if (static_cast<int>(shape.size()) != lds || shape[0] != lis) greene_ok = false;
            int i = len - 1;
            while (i >= 0 && w[i] == 4) w[i--] = 1;
            if (i < 0) break;
            ++w[i];
        }
    }
    rep.check(greene_ok, "RSK shape = Greene invariants over [4] words");

    bool youngs_ok = true;
    for (int sum = 1; sum <= std::min(n_max, 6); ++sum)
        for_each_composition(sum, [&](const Composition& content) {
            Partition sorted(content);
            std::sort(sorted.begin(), sorted.end(), std::greater<>());
            BigCount total = 0;
            for (const auto& mu : all_partitions(sum)) total += kostka(mu, sorted) * f_lambda(mu);
            BigCount words = factorial(sum);
            for (int part : content) words = exact_div(words, factorial(part));
            if (total != words) youngs_ok = false;
        });
    rep.check(youngs_ok, "Young's rule: sum of K * f = multinomial");

    rep.check(hook_lengths({6, 4, 3}) ==
                  CellGrid{{8, 7, 6, 4, 2, 1}, {5, 4, 3, 1}, {3, 2, 1}},
              "hook grid of (6,4,3)");
    rep.check(cell_contents({6, 4, 3}) ==
                  CellGrid{{0, 1, 2, 3, 4, 5}, {-1, 0, 1, 2}, {-2, -1, 0}},
              "content grid of (6,4,3)");
}

void verify_growth(CheckReporter& rep, int n_max, std::uint64_t seed) {
    const MonotoneSpec dec3{MonotoneKind::StrictDecreasing, 3};
    const MonotoneSpec inc3{MonotoneKind::WeakIncreasing, 3};
    bool super_ok = true;
    const int top = std::min(4 * n_max, 24);
    for (int n = 1; n < top; ++n)
        for (int m = 1; n + m <= top; ++m)
            if (!supermultiplicativity_check(dec3, n, m) ||
                !supermultiplicativity_check(inc3, n, m))
                super_ok = false;
    rep.check(super_ok, "supermultiplicativity up to n + m = " + std::to_string(top));

    bool roots_ok = true;
    const int root_top = std::min(10 * n_max, 100);
    for (int n = 1; n <= root_top; ++n)
        if (nth_root(w321_closed(n, n), n) > 13.5) roots_ok = false;
    rep.check(roots_ok, "roots of w_{n,n}(321) below 27/2 up to n = " + std::to_string(root_top));

    std::mt19937_64 rng(seed);
    bool simplex_ok = true;
    for (int k = 2; k <= 4; ++k) {
        const double dec_max =
            growth_objective(MonotoneKind::StrictDecreasing, uniform_simplex_point(k));
        const double inc_max =
            growth_objective(MonotoneKind::WeakIncreasing, uniform_simplex_point(k));
        for (int trial = 0; trial < 2000; ++trial) {
            const auto a = sample_simplex(k, rng);
            if (growth_objective(MonotoneKind::StrictDecreasing, a) > dec_max + 1e-9)
                simplex_ok = false;
            if (growth_objective(MonotoneKind::WeakIncreasing, a) > inc_max + 1e-9)
                simplex_ok = false;
        }
    }
    rep.check(simplex_ok, "uniform point maximizes the growth objectives");

    bool surjection_ok = true;
    for (int n = 1; n <= std::min(n_max, 6); ++n)
        for (int k = 1; k <= 4; ++k)
            if (!surjection_bound_check(n, k)) surjection_ok = false;
    rep.check(surjection_ok, "surjection bound w_{n,k} <= C(2n-1,n) |Av_n|");
}

int run_verify(const std::string& suite, int n_max, bool slow, std::uint64_t seed, bool as_json) {
    Stopwatch watch;
    CheckReporter rep(suite);
    const bool all = suite == "all";
    if (all || suite == "pf") verify_pf(rep, n_max, slow);
    if (all || suite == "words") verify_words(rep, n_max, slow);
    if (all || suite == "sylvester") verify_sylvester(rep, n_max, slow);
    if (all || suite == "lgv") verify_lgv(rep, n_max, slow);
    if (all || suite == "rsk") verify_rsk(rep, n_max, slow);
    if (all || suite == "growth") verify_growth(rep, n_max, seed);
    if (!all && suite != "pf" && suite != "words" && suite != "sylvester" && suite != "lgv" &&
        suite != "rsk" && suite != "growth")
        throw std::invalid_argument("unknown suite: " + suite);

    std::cout << rep.total() - rep.failures() << "/" << rep.total() << " checks passed\n";
    if (as_json) {
        json params;
        params["suite"] = suite;
        params["n_max"] = std::to_string(n_max);
        json value;
        value["checks"] = rep.total();
        value["failures"] = rep.failures();
        std::cout << make_envelope("verify " + suite, params, value, std::nullopt, std::nullopt,
                                   watch.elapsed_ms())
                         .dump()
                  << "\n";
    }
    return rep.failures() == 0 ? kExitOk : kExitVerification;
}

// ---------------------------------------------------------------------------
// growth

int run_growth(const std::string& dir, int r, const std::string& n_list, bool limit_only,
               bool as_json, bool as_csv) {
    Stopwatch watch;
    const MonotoneSpec spec{parse_dir(dir), r};
    json params;
    params["dir"] = dir;
    params["r"] = std::to_string(r);

    if (limit_only) {
        const Rational limit = spec.kind == MonotoneKind::StrictDecreasing
                                   ? decreasing_limit(r - 1)
                                   : increasing_limit(r - 1, /*allow_degenerate=*/true);
        if (as_json) {
            params["limit_only"] = "true";
            std::cout << make_envelope("growth", params, limit.str(), std::nullopt, std::nullopt,
                                       watch.elapsed_ms())
                             .dump()
                      << "\n";
        } else {
            std::cout << limit.str() << "\n";
        }
        return kExitOk;
    }

    std::vector<int> ns = parse_int_list(n_list);
    params["n"] = n_list;
    const GrowthReport report = empirical_roots(spec, ns);
    if (as_json) {
        json value;
        value["k"] = report.k;
        value["limit"] = report.limit.str();
        value["samples"] = json::array();
        for (const auto& s : report.samples) {
            json row;
            row["n"] = s.n;
            row["count"] = s.count.str();
            row["root"] = s.root;
            value["samples"].push_back(row);
        }
        std::cout << make_envelope("growth", params, value, std::nullopt, std::nullopt,
                                   watch.elapsed_ms())
                         .dump()
                  << "\n";
    } else if (as_csv) {
        std::cout << "n,count,root\n";
        for (const auto& s : report.samples)
            std::cout << s.n << "," << s.count.str() << "," << s.root << "\n";
    } else {
        std::cout << "limit " << report.limit.str() << "\n";
        for (const auto& s : report.samples)
            std::cout << s.n << " " << s.count.str() << " " << s.root << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// show

int run_show(const std::string& object, const std::string& arg, bool sharp, bool members,
             bool as_json) {
    Stopwatch watch;
    if (as_json && object != "classes")
        throw std::invalid_argument("--json is supported for 'show classes' only");
    if (object == "rsk") {
        const Word w = parse_sequence(arg);
        const auto pair = rsk(w);
        const auto shape = pair.insertion.shape();
        std::cout << "shape " << join(shape) << "\n";
        std::cout << "insertion tableau P:\n" << render_tableau(pair.insertion);
        std::cout << "recording tableau Q:\n" << render_tableau(pair.recording);
    } else if (object == "bst") {
        std::cout << render_tree(bst_of(parse_sequence(arg)));
    } else if (object == "dyck") {
        DyckPath d = arg;
        if (!is_dyck_path(d)) throw std::invalid_argument("not a balanced U/D word");
        std::cout << "ascent composition " << join(ascent_comp(d)) << "\n";
        std::cout << "descent composition " << join(descent_comp(d)) << "\n";
        std::cout << render_dyck(d);
    } else if (object == "rothe") {
        const Permutation pi = parse_sequence(arg);
        const DyckPath d = rothe_dyck(pi);
        std::cout << render_rothe(pi);
        std::cout << "path " << d << "\n";
        std::cout << "descent composition " << join(descent_comp(d)) << "\n";
    } else if (object == "classes") {
        const WeakComposition content = parse_sequence(arg);
        const auto table = sharp ? sharp_classes(content) : sylv_classes(content);
        if (as_json) {
            json params;
            params["content"] = arg;
            params["congruence"] = sharp ? "#-sylvester" : "sylvester";
            params["members"] = members ? "true" : "false";
            json value;
            value["content"] = table.content;
            value["class_count"] = std::to_string(table.classes.size());
            value["canonical"] = json::array();
            for (const Word& w : table.canonical) value["canonical"].push_back(w);
            if (members) {
                value["classes"] = json::array();
                for (const auto& cls : table.classes) {
                    json group = json::array();
                    for (const Word& w : cls) group.push_back(w);
                    value["classes"].push_back(group);
                }
            }
            std::cout << make_envelope("show classes", params, value, std::nullopt, std::nullopt,
                                       watch.elapsed_ms())
                             .dump()
                      << "\n";
            return kExitOk;
        }
        std::cout << table.classes.size() << " classes of content " << join(content) << "\n";
        for (std::size_t i = 0; i < table.classes.size(); ++i) {
            std::cout << "class " << i + 1 << " size " << table.classes[i].size()
                      << " canonical " << join(table.canonical[i]) << "\n";
            if (members)
                for (const Word& w : table.classes[i]) std::cout << "  " << join(w) << "\n";
        }
    } else {
        throw std::invalid_argument("unknown object: " + object);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact enumeration of pattern-avoiding parking functions"};
    app.require_subcommand(1);

    // count
    CountOptions count_opt;
    auto* count = app.add_subcommand("count", "evaluate a closed-form enumeration");
    count->add_option("family", count_opt.family,
                      "pf321 | pf-nonmonotone | words-monotone | sylv-classes | dyck-ascent")
        ->required();
    count->add_option("--n", count_opt.n, "length parameter");
    count->add_option("--pattern", count_opt.pattern, "pattern for pf-nonmonotone");
    count->add_option("--content", count_opt.content, "content vector, e.g. 2,2,1");
    count->add_option("--alpha", count_opt.alpha, "ascent composition, e.g. 2,1");
    count->add_option("--k", count_opt.k, "alphabet size for words-monotone");
    count->add_option("--dir", count_opt.dir, "dec | inc");
    count->add_option("--r", count_opt.r, "monotone pattern length");
    count->add_flag("--sharp", count_opt.sharp, "use the #-sylvester congruence");
    count->add_flag("--oracle", count_opt.oracle, "also run the brute-force oracle");
    count->add_flag("--slow", count_opt.slow, "raise the oracle bounds by one size");
    count->add_flag("--force", count_opt.force, "acknowledge 2^(n-1)-term sums for n > 24");
    count->add_flag("--json", count_opt.as_json, "machine-readable envelope");

    // verify
    std::string verify_suite;
    int verify_n_max = 6;
    bool verify_slow = false;
    std::uint64_t verify_seed = 0x5eed5eedULL;
    bool verify_json = false;
    auto* verify = app.add_subcommand("verify", "run invariant suites");
    verify->add_option("suite", verify_suite, "pf | words | sylvester | lgv | rsk | growth | all")
        ->required();
    verify->add_option("--n-max", verify_n_max, "size ceiling for the exhaustive checks");
    verify->add_flag("--slow", verify_slow, "include the n = 7 tier");
    verify->add_option("--seed", verify_seed, "seed for randomized checks");
    verify->add_flag("--json", verify_json, "emit a summary envelope after the check lines");

    // growth
    std::string growth_dir = "dec";
    int growth_r = 3;
    std::string growth_n = "10";
    bool growth_limit_only = false;
    bool growth_json = false;
    bool growth_csv = false;
    auto* growth = app.add_subcommand("growth", "exact counts with n-th roots and limits");
    growth->add_option("--dir", growth_dir, "dec | inc")->required();
    growth->add_option("--r", growth_r, "monotone pattern length (>= 2)")->required();
    growth->add_option("--n", growth_n, "comma-separated sample sizes");
    growth->add_flag("--limit-only", growth_limit_only, "print only the exact limit for k = r-1");
    growth->add_flag("--json", growth_json, "machine-readable envelope");
    growth->add_flag("--csv", growth_csv, "CSV table n,count,root");

    // show
    std::string show_object, show_arg;
    bool show_sharp = false, show_members = false, show_json = false;
    auto* show = app.add_subcommand("show", "render an object");
    show->add_option("object", show_object, "rsk | bst | dyck | rothe | classes")->required();
    show->add_option("arg", show_arg, "word, permutation, U/D path or content")->required();
    show->add_flag("--sharp", show_sharp, "show #-sylvester classes");
    show->add_flag("--members", show_members, "list every class member");
    show->add_flag("--json", show_json, "class-table envelope (classes only)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;  // --help exits 0
    }

    try {
        if (count->parsed()) return run_count(count_opt);
        if (verify->parsed())
            return run_verify(verify_suite, verify_n_max, verify_slow, verify_seed, verify_json);
        if (growth->parsed())
            return run_growth(growth_dir, growth_r, growth_n, growth_limit_only, growth_json,
                              growth_csv);
        if (show->parsed())
            return run_show(show_object, show_arg, show_sharp, show_members, show_json);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    }
    return kExitUsage;
}
