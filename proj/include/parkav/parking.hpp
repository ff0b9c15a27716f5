#pragma once

// The parking process, parking-function validity and enumeration, the
// labeled-Dyck-path view, the label permutation, and the unique-cyclic-shift
// representative of a content vector.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "parkav/bigint.hpp"
#include "parkav/compositions.hpp"
#include "parkav/dyck.hpp"
#include "parkav/words.hpp"

namespace parkav {

/// Result of running the parking process. Failure is a value, not an error,
/// so exhaustive oracles can count failures.
struct ParkingOutcome {
    std::vector<int> spot_of_car;  // spot taken by car i (1-based), when total
    int failed_car = 0;            // 0 when every car parked

    bool ok() const { return failed_car == 0; }
};

/// Cars 1..n in order; car i takes spot p_i if free, else the smallest free
/// spot greater than p_i, else the process fails at car i.
inline ParkingOutcome park(const std::vector<int>& prefs) {
    const int n = static_cast<int>(prefs.size());
    for (int p : prefs)
        if (p < 1 || p > n) throw std::invalid_argument("park: preference outside [n]");
    ParkingOutcome out;
    std::vector<char> taken(static_cast<std::size_t>(n) + 1, 0);
    for (int car = 1; car <= n; ++car) {
        int s = prefs[car - 1];
        while (s <= n && taken[s]) ++s;
        if (s > n) {
            out.failed_car = car;
            out.spot_of_car.clear();
            return out;
        }
        taken[s] = 1;
        out.spot_of_car.push_back(s);
    }
    return out;
}

/// Sorted-rearrangement criterion: p is a parking function iff its weakly
/// increasing rearrangement satisfies p'_i <= i.
inline bool is_parking_function(const std::vector<int>& prefs) {
    const int n = static_cast<int>(prefs.size());
    std::vector<int> sorted(prefs);
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i)
        if (sorted[i] < 1 || sorted[i] > i + 1) return false;
    return true;
}

using ParkingFunction = std::vector<int>;

inline BigCount parking_function_total(int n) {
    if (n < 1) throw std::invalid_argument("parking_function_total: n must be positive");
    BigCount r = 1;
    for (int i = 0; i < n - 1; ++i) r *= n + 1;
    return r;
}

/// Visits every parking function of length n exactly once, lexicographically.
template <class F>
void for_each_parking_function(int n, F&& visit, int exhaustive_bound = 7) {
    if (n < 1 || n > exhaustive_bound)
        throw std::invalid_argument("for_each_parking_function: n exceeds the exhaustive bound");
    std::vector<int> p(n, 1);
    // odometer over [n]^n; the validity filter keeps only parking functions
    for (;;) {
        if (is_parking_function(p)) visit(static_cast<const ParkingFunction&>(p));
        int i = n - 1;
        while (i >= 0 && p[i] == n) p[i--] = 1;
        if (i < 0) break;
        ++p[i];
    }
}

/// Content of a parking function: content_i = #{ j : p_j = i }, length n.
inline WeakComposition content_of(const ParkingFunction& p) {
    if (!is_parking_function(p)) throw std::invalid_argument("content_of: not a parking function");
    const int n = static_cast<int>(p.size());
    WeakComposition c(n, 0);
    for (int v : p) ++c[v - 1];
    return c;
}

/// Label permutation pi(p): for each spot in increasing order, the cars
/// preferring it in increasing order. Equals inverse(standardize(p)).
inline Permutation label_permutation(const ParkingFunction& p) {
    if (!is_parking_function(p)) throw std::invalid_argument("label_permutation: not a parking function");
    const int n = static_cast<int>(p.size());
    Permutation out;
    out.reserve(n);
    for (int spot = 1; spot <= n; ++spot)
        for (int car = 1; car <= n; ++car)
            if (p[car - 1] == spot) out.push_back(car);
    return out;
}

/// A parking function as a labeled Dyck path: the path's horizontal run at
/// height i carries, in increasing order, the cars preferring spot i.
struct LabeledDyck {
    DyckPath path;
    std::vector<std::vector<int>> spot_labels;  // one entry per spot, possibly empty
};

inline LabeledDyck dyck_of_pf(const ParkingFunction& p) {
    const auto content = content_of(p);
    const int n = static_cast<int>(p.size());
    LabeledDyck out;
    out.spot_labels.resize(n);
    for (int car = 1; car <= n; ++car) out.spot_labels[p[car - 1] - 1].push_back(car);
    for (int spot = 1; spot <= n; ++spot) {
        out.path.append(static_cast<std::size_t>(content[spot - 1]), 'U');
        out.path.push_back('D');
    }
    if (!is_dyck_path(out.path)) throw std::logic_error("dyck_of_pf: content does not dominate");
    return out;
}

/// Unique rotation index r in 0..n such that the cyclic shift of beta
/// starting at r ends in a zero part and its first n parts are a valid
/// parking-function content. beta must have n+1 parts summing to n.
inline int pollak_representative(const WeakComposition& beta) {
    const int m = static_cast<int>(beta.size());
    if (m < 2 || !is_weak_composition(beta) || parts_sum(beta) != m - 1)
        throw std::invalid_argument("pollak_representative: need n+1 parts summing to n");
    const int n = m - 1;
    int found = -1;
    for (int r = 0; r <= n; ++r) {
        if (beta[(r + n) % m] != 0) continue;
        long long ps = 0;
        bool valid = true;
        for (int i = 0; i < n; ++i) {
            ps += beta[(r + i) % m];
            if (ps < i + 1) {
                valid = false;
                break;
            }
        }
        if (!valid) continue;
        if (found >= 0) throw std::logic_error("pollak_representative: rotation not unique");
        found = r;
    }
    if (found < 0) throw std::logic_error("pollak_representative: no valid rotation");
    return found;
}

/// Pattern avoidance in the label-permutation sense: p avoids sigma iff
/// pi(p) avoids sigma.
inline bool pf_avoids(const ParkingFunction& p, const Permutation& sigma) {
    return !perm_contains(label_permutation(p), sigma);
}

}  // namespace parkav
