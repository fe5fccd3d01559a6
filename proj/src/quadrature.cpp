#include "cpcop/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

namespace cpcop {

namespace {

GaussLegendreRule compute_rule(int n) {
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 1; i <= m; ++i) {
        // Chebyshev-based initial guess, then Newton on P_n.
        double z = std::cos(M_PI * (i - 0.25) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::fabs(z - z1) <= 1e-15) break;
        }
        rule.nodes[i - 1] = -z;
        rule.nodes[n - i] = z;
        rule.weights[i - 1] = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.weights[n - i] = rule.weights[i - 1];
    }
    return rule;
}

struct Cell {
    double ax, bx, ay, by;
    double value;  // 15x15 estimate
    double error;  // |15x15 - 7x7|
};

struct CellOrder {
    bool operator()(const Cell& a, const Cell& b) const { return a.error < b.error; }
};

Cell evaluate_cell(const std::function<double(double, double)>& f, double ax, double bx,
                   double ay, double by) {
    const auto& lo = gauss_legendre_nodes(7);
    const auto& hi = gauss_legendre_nodes(15);
    const double cx = (ax + bx) / 2.0, hx = (bx - ax) / 2.0;
    const double cy = (ay + by) / 2.0, hy = (by - ay) / 2.0;
    const double scale = hx * hy;

    double q_hi = 0.0;
    for (std::size_t i = 0; i < hi.nodes.size(); ++i) {
        const double x = cx + hx * hi.nodes[i];
        double row = 0.0;
        for (std::size_t j = 0; j < hi.nodes.size(); ++j) {
            row += hi.weights[j] * f(x, cy + hy * hi.nodes[j]);
        }
        q_hi += hi.weights[i] * row;
    }
    q_hi *= scale;

    double q_lo = 0.0;
    for (std::size_t i = 0; i < lo.nodes.size(); ++i) {
        const double x = cx + hx * lo.nodes[i];
        double row = 0.0;
        for (std::size_t j = 0; j < lo.nodes.size(); ++j) {
            row += lo.weights[j] * f(x, cy + hy * lo.nodes[j]);
        }
        q_lo += lo.weights[i] * row;
    }
    q_lo *= scale;

    return {ax, bx, ay, by, q_hi, std::fabs(q_hi - q_lo)};
}

}  // namespace

const GaussLegendreRule& gauss_legendre_nodes(int n) {
    static std::map<int, GaussLegendreRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_rule(n)).first;
    return it->second;
}

double integrate_unit_square(const std::function<double(double, double)>& f,
                             QuadratureOptions opt) {
    if (!(opt.abs_tol > 0.0)) throw std::invalid_argument("integrate_unit_square: tol <= 0");

    std::vector<Cell> heap;
    heap.push_back(evaluate_cell(f, 0.0, 1.0, 0.0, 1.0));
    double total_error = heap.front().error;

    while (total_error > opt.abs_tol) {
        if (heap.size() + 3 > opt.max_cells) {
            throw QuadratureError("integrate_unit_square: cell budget exhausted at error " +
                                  std::to_string(total_error));
        }
        std::pop_heap(heap.begin(), heap.end(), CellOrder{});
        const Cell worst = heap.back();
        heap.pop_back();
        total_error -= worst.error;

        const double mx = (worst.ax + worst.bx) / 2.0;
        const double my = (worst.ay + worst.by) / 2.0;
        const Cell quads[4] = {
            evaluate_cell(f, worst.ax, mx, worst.ay, my),
            evaluate_cell(f, mx, worst.bx, worst.ay, my),
            evaluate_cell(f, worst.ax, mx, my, worst.by),
            evaluate_cell(f, mx, worst.bx, my, worst.by),
        };
        for (const Cell& c : quads) {
            total_error += c.error;
            heap.push_back(c);
            std::push_heap(heap.begin(), heap.end(), CellOrder{});
        }
    }

    double total = 0.0;
    for (const Cell& c : heap) total += c.value;
    return total;
}

}  // namespace cpcop
