// Gauss-Legendre rules and an adaptive tensor-product integrator on the
// open unit square.
#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace cpcop {

struct GaussLegendreRule {
    std::vector<double> nodes;    // on [-1, 1], ascending
    std::vector<double> weights;  // sum to 2
};

// Nodes and weights of the n-point rule, computed once by Newton iteration
// on the Legendre polynomials and cached.
const GaussLegendreRule& gauss_legendre_nodes(int n);

class QuadratureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct QuadratureOptions {
    double abs_tol = 1e-7;
    std::size_t max_cells = 100000;
};

// Integrates f over (0,1)^2 to the requested absolute tolerance. Cells are
// scored by the difference between the 15x15 and 7x7 tensor rules and the
// worst cell is split into quadrants until the summed estimate meets the
// tolerance. Integrand is never evaluated on the boundary. Throws
// QuadratureError when the cell budget is exhausted first.
double integrate_unit_square(const std::function<double(double, double)>& f,
                             QuadratureOptions opt = {});

}  // namespace cpcop
