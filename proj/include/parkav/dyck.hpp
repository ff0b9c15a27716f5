#pragma once

// Dyck paths as U/D step words, ascent/descent compositions, exact counting
// of paths by ascent composition (determinant and brute force), the boundary
// path of the Rothe diagram of a 132-avoiding permutation, and the bijection
// between Dyck paths and nonintersecting lattice-path families.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "parkav/bigint.hpp"
#include "parkav/compositions.hpp"
#include "parkav/words.hpp"

namespace parkav {

/// Balanced prefix-dominant word over {U, D}.
using DyckPath = std::string;

inline bool is_dyck_path(const DyckPath& d) {
    long long height = 0;
    for (char c : d) {
        if (c == 'U')
            ++height;
        else if (c == 'D')
            --height;
        else
            return false;
        if (height < 0) return false;
    }
    return height == 0;
}

namespace detail {

inline Composition run_lengths(const DyckPath& d, char which) {
    Composition out;
    int run = 0;
    for (char c : d) {
        if (c == which) {
            ++run;
        } else if (run > 0) {
            out.push_back(run);
            run = 0;
        }
    }
    if (run > 0) out.push_back(run);
    return out;
}

}  // namespace detail

/// Maximal U-run lengths.
inline Composition ascent_comp(const DyckPath& d) {
    if (!is_dyck_path(d)) throw std::invalid_argument("ascent_comp: not a Dyck path");
    return detail::run_lengths(d, 'U');
}

/// Maximal D-run lengths.
inline Composition descent_comp(const DyckPath& d) {
    if (!is_dyck_path(d)) throw std::invalid_argument("descent_comp: not a Dyck path");
    return detail::run_lengths(d, 'D');
}

inline BigCount catalan(int n) { return exact_div(binomial(2LL * n, n), n + 1); }

/// Visits every Dyck path of semilength n exactly once, in lexicographic
/// order of the step words ('D' < 'U').
template <class F>
void for_each_dyck_path(int n, F&& visit, int exhaustive_bound = 14) {
    if (n < 0 || n > exhaustive_bound)
        throw std::invalid_argument("for_each_dyck_path: n exceeds the exhaustive bound");
    DyckPath cur;
    auto rec = [&](auto&& self, int ups, int downs) -> void {
        if (ups == n && downs == n) {
            visit(static_cast<const DyckPath&>(cur));
            return;
        }
        if (downs < ups) {
            cur.push_back('D');
            self(self, ups, downs + 1);
            cur.pop_back();
        }
        if (ups < n) {
            cur.push_back('U');
            self(self, ups + 1, downs);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
}

/// Number of Dyck paths with ascent composition alpha:
/// det[ C(j - i + a_1 + ... + a_i, j - i + 1) ] over 1 <= i, j <= k-1.
/// A single-part composition gives the empty determinant, i.e. 1.
inline BigCount dyck_by_ascent_det(const Composition& alpha) {
    if (!is_composition(alpha) || alpha.empty())
        throw std::invalid_argument("dyck_by_ascent_det: parts must be positive");
    const std::size_t k = alpha.size();
    const auto pre = prefix_sums(alpha);
    IntegerMatrix m(k - 1);
    for (std::size_t i = 1; i <= k - 1; ++i)
        for (std::size_t j = 1; j <= k - 1; ++j)
            m.at(i - 1, j - 1) = binomial(static_cast<long long>(j) - static_cast<long long>(i) + pre[i - 1],
                                          static_cast<long long>(j) - static_cast<long long>(i) + 1);
    BigInt det = determinant(m);
    if (det < 0) throw std::logic_error("dyck_by_ascent_det: negative determinant");
    return det;
}

/// Oracle: filter the full Dyck path list by ascent composition.
inline BigCount dyck_by_ascent_bruteforce(const Composition& alpha, int exhaustive_bound = 14) {
    if (!is_composition(alpha) || alpha.empty())
        throw std::invalid_argument("dyck_by_ascent_bruteforce: parts must be positive");
    const int n = static_cast<int>(parts_sum(alpha));
    BigCount count = 0;
    for_each_dyck_path(
        n,
        [&](const DyckPath& d) {
            if (detail::run_lengths(d, 'U') == alpha) ++count;
        },
        exhaustive_bound);
    return count;
}

/// Number of Dyck paths whose ascent composition can be refined to alpha
/// (every proper partial sum of the path's ascent composition is a partial
/// sum of alpha). Equals the plain ascent count of
/// beta = (alpha_1 + 1, ..., alpha_{k-1} + 1, alpha_k).
inline BigCount dyck_refining_count(const Composition& alpha) {
    if (!is_composition(alpha) || alpha.empty())
        throw std::invalid_argument("dyck_refining_count: parts must be positive");
    Composition beta(alpha);
    for (std::size_t i = 0; i + 1 < beta.size(); ++i) ++beta[i];
    return dyck_by_ascent_det(beta);
}

/// Lehmer code c_i = #{ j > i : pi_j < pi_i }; for a 132-avoiding
/// permutation this is weakly decreasing and lists the Rothe diagram's
/// column heights.
inline std::vector<int> lehmer_code(const Permutation& pi) {
    if (!is_permutation(pi)) throw std::invalid_argument("lehmer_code: not a permutation");
    const std::size_t n = pi.size();
    std::vector<int> code(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (pi[j] < pi[i]) ++code[i];
    return code;
}

/// Boundary Dyck path of the Rothe diagram of a 132-avoiding permutation,
/// read from the top-left corner of the n x n grid: vertical steps are U,
/// horizontal steps are D. Satisfies descent_comp(result) =
/// comp_of_set(Des(pi), n) and determines pi uniquely.
inline DyckPath rothe_dyck(const Permutation& pi) {
    const auto code = lehmer_code(pi);
    for (std::size_t i = 0; i + 1 < code.size(); ++i)
        if (code[i] < code[i + 1])
            throw std::invalid_argument("rothe_dyck: permutation contains 132");
    DyckPath out;
    int height = static_cast<int>(pi.size());
    for (int c : code) {
        out.append(static_cast<std::size_t>(height - c), 'U');
        out.push_back('D');
        height = c;
    }
    return out;
}

/// Family of k-1 nonintersecting lattice paths for an ascent composition
/// alpha: path i runs from (alpha_1 + ... + alpha_i - 1, i - 1) to (0, i)
/// with unit steps left and a single step up, so the abscissa of that
/// vertical step carries all the information.
struct PathFamily {
    Composition alpha;
    std::vector<long long> step_x;  // strictly increasing abscissae

    friend bool operator==(const PathFamily&, const PathFamily&) = default;
};

inline void validate_family(const PathFamily& f) {
    if (!is_composition(f.alpha) || f.alpha.empty())
        throw std::invalid_argument("PathFamily: invalid composition");
    if (f.step_x.size() + 1 != f.alpha.size())
        throw std::invalid_argument("PathFamily: need one path per part but the last");
    const auto pre = prefix_sums(f.alpha);
    long long prev = -1;
    for (std::size_t i = 0; i < f.step_x.size(); ++i) {
        if (f.step_x[i] < 0 || f.step_x[i] > pre[i] - 1)
            throw std::invalid_argument("PathFamily: vertical step outside its source range");
        if (f.step_x[i] <= prev)
            throw std::invalid_argument("PathFamily: paths intersect");
        prev = f.step_x[i];
    }
}

/// All nonintersecting families for alpha, ordered lexicographically by
/// their abscissa vectors. Their number equals dyck_by_ascent_det(alpha).
inline std::vector<PathFamily> lgv_families(const Composition& alpha) {
    if (!is_composition(alpha) || alpha.empty())
        throw std::invalid_argument("lgv_families: parts must be positive");
    const std::size_t k = alpha.size();
    const auto pre = prefix_sums(alpha);
    std::vector<PathFamily> out;
    std::vector<long long> xs;
    auto rec = [&](auto&& self, std::size_t i, long long last) -> void {
        if (i == k - 1) {
            out.push_back(PathFamily{alpha, xs});
            return;
        }
        for (long long x = last + 1; x <= pre[i] - 1; ++x) {
            xs.push_back(x);
            self(self, i + 1, x);
            xs.pop_back();
        }
    };
    rec(rec, 0, -1);
    return out;
}

/// The bijection from path families to Dyck paths: descent parts are the
/// abscissa gaps x_i - x_{i-1} (x_0 = -1), last part is the remainder.
inline DyckPath family_to_dyck(const PathFamily& f) {
    validate_family(f);
    const long long n = parts_sum(f.alpha);
    DyckPath out;
    long long prev = -1;
    long long used = 0;
    for (std::size_t i = 0; i < f.alpha.size(); ++i) {
        out.append(static_cast<std::size_t>(f.alpha[i]), 'U');
        long long d = i + 1 < f.alpha.size() ? f.step_x[i] - prev : n - used;
        out.append(static_cast<std::size_t>(d), 'D');
        if (i + 1 < f.alpha.size()) prev = f.step_x[i];
        used += d;
    }
    if (!is_dyck_path(out)) throw std::logic_error("family_to_dyck: produced an invalid path");
    return out;
}

/// Inverse of family_to_dyck; the vertical-step abscissae are the proper
/// partial sums of the descent composition, each shifted by one.
inline PathFamily dyck_to_family(const DyckPath& d) {
    PathFamily f;
    f.alpha = ascent_comp(d);
    const auto delta = descent_comp(d);
    long long s = 0;
    for (std::size_t i = 0; i + 1 < delta.size(); ++i) f.step_x.push_back((s += delta[i]) - 1);
    validate_family(f);
    return f;
}

/// Plain-text drawing of a Dyck path on the n x n grid, path weakly below
/// the diagonal: U is a horizontal unit, D a vertical one. '*' marks the
/// path's horizontal units, '#' the cells between path and diagonal.
/// Documentation aid, no stability contract.
inline std::string render_dyck(const DyckPath& d) {
    if (!is_dyck_path(d)) throw std::invalid_argument("render_dyck: not a Dyck path");
    const int n = static_cast<int>(d.size() / 2);
    std::vector<int> level(n, 0);  // height of the horizontal unit in column c
    int x = 0, y = 0;
    for (char c : d) {
        if (c == 'U')
            level[x++] = y;
        else
            ++y;
    }
    std::string out;
    for (int row = n - 1; row >= 0; --row) {
        for (int col = 0; col < n; ++col) {
            if (row > col)
                out += "  ";
            else if (level[col] == row)
                out += "* ";
            else if (level[col] < row)
                out += "# ";
            else
                out += ". ";
        }
        out += '\n';
    }
    return out;
}

/// Plain-text Rothe diagram of a 132-avoiding permutation with its boundary
/// path implied by the shaded region (documentation aid).
inline std::string render_rothe(const Permutation& pi) {
    const auto code = lehmer_code(pi);
    const int n = static_cast<int>(pi.size());
    std::string out;
    for (int row = 0; row < n; ++row) {
        for (int col = 0; col < n; ++col) {
            if (col == pi[row] - 1)
                out += "x ";
            else if (col < code[row])
                out += "# ";
            else
                out += ". ";
        }
        out += '\n';
    }
    return out;
}

}  // namespace parkav
