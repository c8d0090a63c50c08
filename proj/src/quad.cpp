#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "ga/circle.hpp"
#include "ga/summation.hpp"

namespace ga {

// ---- plans ----

namespace {

constexpr std::size_t kMaxPanels = 50'000'000;

void append_uniform(std::vector<double>& edges, double a, double b, std::size_t n) {
    // edges already contains a
    const double w = (b - a) / static_cast<double>(n);
    for (std::size_t i = 1; i < n; ++i) edges.push_back(a + w * static_cast<double>(i));
    edges.push_back(b);
}

std::size_t pieces_for(double width, double f_max, double periods_per_panel,
                       std::size_t at_least) {
    std::size_t n = at_least;
    if (f_max > 0.0) {
        const double need = width * f_max / periods_per_panel;
        if (need > static_cast<double>(kMaxPanels))
            throw std::invalid_argument("panel plan would exceed the panel cap");
        n = std::max(n, static_cast<std::size_t>(std::ceil(need)));
    }
    return std::max<std::size_t>(n, 1);
}

}  // namespace

PanelPlan uniform_plan(double a, double b, std::size_t n_panels) {
    if (!(a < b)) throw std::invalid_argument("uniform_plan: requires a < b");
    if (n_panels == 0 || n_panels > kMaxPanels)
        throw std::invalid_argument("uniform_plan: bad panel count");
    PanelPlan p;
    p.edges.reserve(n_panels + 1);
    p.edges.push_back(a);
    append_uniform(p.edges, a, b, n_panels);
    return p;
}

PanelPlan capped_plan(double a, double b, double f_max,
                      double periods_per_panel, std::size_t min_panels) {
    if (!(a < b)) throw std::invalid_argument("capped_plan: requires a < b");
    if (!(periods_per_panel > 0.0)) throw std::invalid_argument("capped_plan: bad cap");
    return uniform_plan(a, b, pieces_for(b - a, f_max, periods_per_panel, min_panels));
}

PanelPlan graded_plan(double b, std::uint64_t N, double f_max,
                      double periods_per_panel, std::size_t octave_split) {
    if (!(b > 0.0) || b > 1.0) throw std::invalid_argument("graded_plan: requires 0 < b <= 1");
    if (N == 0 || octave_split == 0) throw std::invalid_argument("graded_plan: bad parameters");

    PanelPlan p;
    p.edges.push_back(0.0);
    double lo = 0.0;
    double hi = 1.0 / (8.0 * static_cast<double>(N));
    while (lo < b) {
        hi = std::min(hi, b);
        append_uniform(p.edges, lo, hi,
                       pieces_for(hi - lo, f_max, periods_per_panel, octave_split));
        lo = hi;
        hi *= 2.0;
    }
    return p;
}

// ---- composite Gauss-Legendre ----

namespace {

// 16-point Gauss-Legendre on [-1, 1]; positive nodes, symmetric weights
constexpr double kGlNode[8] = {
    0.0950125098376374401853193, 0.2816035507792589132304605,
    0.4580167776572273863424194, 0.6178762444026437484466718,
    0.7554044083550030338951012, 0.8656312023878317438804679,
    0.9445750230732325760779884, 0.9894009349916499325961542};
constexpr double kGlWeight[8] = {
    0.1894506104550684962853967, 0.1826034150449235888667637,
    0.1691565193950025381893121, 0.1495959888165767320815017,
    0.1246289712555338720524763, 0.0951585116824927848099251,
    0.0622535239386478928628438, 0.0271524594117540948517806};

// one whole grade: every plan panel split into `split` uniform subpanels
std::vector<double> grade_values(const BatchIntegrand& f, std::size_t n_components,
                                 const PanelPlan& plan, std::size_t split,
                                 std::size_t* n_eval) {
    const std::size_t panels = plan.panels() * split;
    const std::size_t nodes = panels * 16;

    std::vector<double> alpha(nodes);
    std::vector<double> half(panels);
    std::size_t idx = 0;
    for (std::size_t p = 0; p < plan.panels(); ++p) {
        const double a = plan.edges[p];
        const double w = (plan.edges[p + 1] - a) / static_cast<double>(split);
        for (std::size_t s = 0; s < split; ++s) {
            const double mid = a + w * (static_cast<double>(s) + 0.5);
            const double h = 0.5 * w;
            half[idx / 16] = h;
            for (int i = 0; i < 8; ++i) {
                alpha[idx + i] = mid - h * kGlNode[7 - i];
                alpha[idx + 8 + i] = mid + h * kGlNode[i];
            }
            idx += 16;
        }
    }

    std::vector<double> out(n_components * nodes);
    f(alpha.data(), nodes, out.data());
    *n_eval += nodes;

    std::vector<double> totals(n_components);
    for (std::size_t j = 0; j < n_components; ++j) {
        const double* fj = out.data() + j * nodes;
        Neumaier total;
        for (std::size_t p = 0; p < panels; ++p) {
            const double* v = fj + p * 16;
            Neumaier part;
            for (int i = 0; i < 8; ++i)
                part.add(kGlWeight[i] * (v[8 + i] + v[7 - i]));
            total.add(half[p] * part.value());
        }
        totals[j] = total.value();
    }
    return totals;
}

}  // namespace

std::vector<QuadResult> quad_multi(const BatchIntegrand& f, std::size_t n_components,
                                   const PanelPlan& plan, const QuadOptions& opt) {
    if (plan.panels() == 0) throw std::invalid_argument("quad_multi: empty plan");
    if (n_components == 0) throw std::invalid_argument("quad_multi: no components");
    for (std::size_t i = 0; i + 1 < plan.edges.size(); ++i)
        if (!(plan.edges[i] < plan.edges[i + 1]))
            throw std::invalid_argument("quad_multi: plan edges must ascend");

    std::size_t n_eval = 0;
    std::vector<double> prev = grade_values(f, n_components, plan, 1, &n_eval);
    std::vector<QuadResult> res(n_components);
    for (std::size_t j = 0; j < n_components; ++j) {
        res[j].value = prev[j];
        res[j].err_est = std::numeric_limits<double>::infinity();
    }

    for (int g = 1; g <= opt.max_refine; ++g) {
        std::vector<double> cur =
            grade_values(f, n_components, plan, std::size_t{1} << g, &n_eval);
        bool all_ok = true;
        for (std::size_t j = 0; j < n_components; ++j) {
            res[j].value = cur[j];
            res[j].err_est = std::abs(cur[j] - prev[j]);
            res[j].converged =
                res[j].err_est <= std::max(opt.abs_tol, opt.rel_tol * std::abs(cur[j]));
            all_ok = all_ok && res[j].converged;
        }
        prev.swap(cur);
        if (all_ok) break;
    }
    for (std::size_t j = 0; j < n_components; ++j) res[j].n_eval = n_eval;
    return res;
}

QuadResult quad(const BatchIntegrand& f, const PanelPlan& plan, const QuadOptions& opt) {
    return quad_multi(f, 1, plan, opt)[0];
}

}  // namespace ga
