#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <span>
#include <vector>

namespace cylfocus::quad {

struct Result {
    double value = 0.0;
    double error = 0.0;  // sum of per-interval |Kronrod - Gauss| estimates
    bool converged = false;
    int intervals = 0;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15).
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Piece {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Piece& o) const { return error < o.error; }
};

template <typename F>
Piece gk15(F& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double sum = f(center - dx) + f(center + dx);
        kronrod += kWgk[j] * sum;
        if (j % 2 == 1) {
            gauss += kWg[j / 2] * sum;
        }
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, std::fabs(kronrod - gauss)};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod integration of f over consecutive
/// intervals [breaks[i], breaks[i+1]]. Bisects the interval with the largest
/// error estimate until the total estimate meets max(abs_tol, rel_tol*|I|).
template <typename F>
Result integrate(F&& f, std::span<const double> breaks, double abs_tol, double rel_tol,
                 int max_intervals = 4000) {
    std::priority_queue<detail::Piece> heap;
    double value = 0.0;
    double error = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        if (breaks[i + 1] > breaks[i]) {
            const detail::Piece p = detail::gk15(f, breaks[i], breaks[i + 1]);
            value += p.value;
            error += p.error;
            heap.push(p);
        }
    }
    int count = static_cast<int>(heap.size());
    while (!heap.empty() && error > std::max(abs_tol, rel_tol * std::fabs(value)) &&
           count < max_intervals) {
        const detail::Piece worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            break;  // interval no longer representable
        }
        const detail::Piece left = detail::gk15(f, worst.a, mid);
        const detail::Piece right = detail::gk15(f, mid, worst.b);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++count;
    }
    // Re-sum in interval order so the value does not carry update round-off.
    std::vector<detail::Piece> pieces;
    pieces.reserve(heap.size());
    while (!heap.empty()) {
        pieces.push_back(heap.top());
        heap.pop();
    }
    std::sort(pieces.begin(), pieces.end(),
              [](const detail::Piece& l, const detail::Piece& r) { return l.a < r.a; });
    value = 0.0;
    error = 0.0;
    for (const auto& p : pieces) {
        value += p.value;
        error += p.error;
    }
    return {value, error, error <= std::max(abs_tol, rel_tol * std::fabs(value)), count};
}

template <typename F>
Result integrate(F&& f, double a, double b, double abs_tol, double rel_tol,
                 int max_intervals = 4000) {
    const std::array<double, 2> breaks{a, b};
    return integrate(std::forward<F>(f), std::span<const double>(breaks), abs_tol, rel_tol,
                     max_intervals);
}

}  // namespace cylfocus::quad
