#include "gapflow/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gapflow {

double Axis::min_h() const {
    double m = h(0);
    for (int i = 1; i < cells(); ++i) m = std::min(m, h(i));
    return m;
}

Axis uniform_axis(double a, double b, int n) {
    if (!(b > a) || n < 1) throw std::invalid_argument("uniform_axis: bad arguments");
    Axis ax;
    ax.edges.resize(n + 1);
    for (int i = 0; i <= n; ++i) ax.edges[i] = a + (b - a) * i / n;
    ax.edges[0] = a;
    ax.edges[n] = b;
    return ax;
}

namespace {

// sizes marching from `from` to `to` starting at h0, geometric growth
std::vector<double> march(double span, double h0, double h_max, double ratio) {
    std::vector<double> hs;
    double acc = 0.0, h = h0;
    while (acc < span) {
        hs.push_back(h);
        acc += h;
        h = std::min(h * ratio, h_max);
    }
    // rescale so the run covers span exactly
    const double f = span / acc;
    for (double& v : hs) v *= f;
    return hs;
}

} // namespace

Axis graded_axis(double a, double b, double c, double w, double h_fine,
                 double h_max, double ratio) {
    if (!(b > a) || h_fine <= 0 || h_max < h_fine || ratio <= 1.0 || w <= 0)
        throw std::invalid_argument("graded_axis: bad arguments");
    const double lo = std::max(a, c - w);
    const double hi = std::min(b, c + w);
    if (!(hi > lo)) return uniform_axis(a, b, std::max(1, int((b - a) / h_max)));

    const int nb = std::max(1, static_cast<int>(std::ceil((hi - lo) / h_fine)));
    Axis ax;
    std::vector<double> left = march(lo - a, h_fine, h_max, ratio);   // outward from lo
    std::vector<double> right = march(b - hi, h_fine, h_max, ratio);  // outward from hi

    ax.edges.reserve(left.size() + nb + right.size() + 1);
    ax.edges.push_back(a);
    for (auto it = left.rbegin(); it != left.rend(); ++it)
        ax.edges.push_back(ax.edges.back() + *it);
    // snap band start
    if (!left.empty()) ax.edges.back() = lo;
    for (int i = 1; i <= nb; ++i) ax.edges.push_back(lo + (hi - lo) * i / nb);
    for (double hv : right) ax.edges.push_back(ax.edges.back() + hv);
    ax.edges.back() = b;

    for (std::size_t i = 1; i < ax.edges.size(); ++i)
        if (!(ax.edges[i] > ax.edges[i - 1]))
            throw std::logic_error("graded_axis: non-monotone edges");
    return ax;
}

} // namespace gapflow
