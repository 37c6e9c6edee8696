#include "zetatail/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace zetatail {

namespace {

// Kronrod abscissae; odd positions (1, 3, 5, 7) are the 7-point Gauss nodes.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a;
    double b;
    double value;
    double error;
    double abs_value;

    bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(center);
    double kronrod = kKronrodWeights[7] * fc;
    double gauss = kGaussWeights[3] * fc;
    double abs_sum = kKronrodWeights[7] * std::fabs(fc);

    for (int i = 0; i < 7; ++i) {
        const double dx = half * kNodes[static_cast<std::size_t>(i)];
        const double f1 = f(center - dx);
        const double f2 = f(center + dx);
        kronrod += kKronrodWeights[static_cast<std::size_t>(i)] * (f1 + f2);
        abs_sum += kKronrodWeights[static_cast<std::size_t>(i)] * (std::fabs(f1) + std::fabs(f2));
        if (i % 2 == 1) {
            gauss += kGaussWeights[static_cast<std::size_t>(i / 2)] * (f1 + f2);
        }
    }
    kronrod *= half;
    gauss *= half;
    abs_sum *= std::fabs(half);
    return Panel{a, b, kronrod, std::fabs(kronrod - gauss), abs_sum};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol, double rel_tol, int max_panels) {
    QuadratureResult result;
    if (a == b) {
        result.converged = true;
        return result;
    }

    std::priority_queue<Panel> panels;
    panels.push(gauss_kronrod(f, a, b));
    result.evaluations = 15;

    constexpr double kRounding = 50.0 * std::numeric_limits<double>::epsilon();
    double error_sum = panels.top().error;
    double value_sum = panels.top().value;
    double abs_sum = panels.top().abs_value;
    auto unfinished = [&] {
        return error_sum + kRounding * abs_sum > std::max(abs_tol, rel_tol * std::fabs(value_sum));
    };
    int count = 1;
    while (unfinished() && count < max_panels) {
        Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            panels.push(worst);
            break;
        }
        Panel left = gauss_kronrod(f, worst.a, mid);
        Panel right = gauss_kronrod(f, mid, worst.b);
        result.evaluations += 30;
        error_sum += left.error + right.error - worst.error;
        value_sum += left.value + right.value - worst.value;
        abs_sum += left.abs_value + right.abs_value - worst.abs_value;
        panels.push(left);
        panels.push(right);
        ++count;
    }

    // Drain in a fixed (heap) order so the sum is reproducible.
    double value = 0.0;
    double error = 0.0;
    double abs_value = 0.0;
    while (!panels.empty()) {
        value += panels.top().value;
        error += panels.top().error;
        abs_value += panels.top().abs_value;
        panels.pop();
    }
    result.value = value;
    result.error = error + kRounding * abs_value;
    result.converged = result.error <= std::max(abs_tol, rel_tol * std::fabs(value));
    return result;
}

}  // namespace zetatail
