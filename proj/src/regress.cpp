#include "iegrowth/regress.hpp"

#include <cmath>

#include "iegrowth/ie_core.hpp"

namespace ieg {

LinearFit fit_line(const std::vector<std::pair<double, double>>& points) {
    const std::size_t n = points.size();
    if (n < 3) {
        throw Error(ErrorKind::Fit, "need at least 3 points, got " + std::to_string(n));
    }

    double mean_x = 0.0, mean_y = 0.0;
    for (const auto& [x, y] : points) {
        mean_x += x;
        mean_y += y;
    }
    mean_x /= static_cast<double>(n);
    mean_y /= static_cast<double>(n);

    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (const auto& [x, y] : points) {
        const double dx = x - mean_x;
        const double dy = y - mean_y;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0) {
        throw Error(ErrorKind::Fit, "degenerate fit: all x values identical");
    }

    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = mean_y - fit.slope * mean_x;
    fit.n = static_cast<int>(n);

    if (syy == 0.0) {
        // Constant response: R^2 is 1 when the line reproduces it exactly.
        double ss_res = 0.0;
        for (const auto& [x, y] : points) {
            const double r = y - (fit.intercept + fit.slope * x);
            ss_res += r * r;
        }
        fit.r_squared = ss_res == 0.0 ? 1.0 : 0.0;
    } else {
        fit.r_squared = (sxy * sxy) / (sxx * syy);
    }
    return fit;
}

double fit_through_origin(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 3) {
        throw Error(ErrorKind::Fit, "need at least 3 points for zero-intercept fit");
    }
    double sxy = 0.0, sxx = 0.0;
    for (const auto& [x, y] : points) {
        sxy += x * y;
        sxx += x * x;
    }
    if (sxx == 0.0) {
        throw Error(ErrorKind::Fit, "degenerate zero-intercept fit: all x are zero");
    }
    return sxy / sxx;
}

GrowthFit fit_growth(const IESeries& ie, const Phase& phase) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& [year, value] : ie.points()) {
        if (phase.contains(year)) {
            pts.emplace_back(static_cast<double>(year - ie.base_year()), value);
        }
    }
    if (pts.size() < 3) {
        throw Error(ErrorKind::Fit, ie.name() + ": phase " + phase.label + " covers only " +
                                        std::to_string(pts.size()) + " points");
    }
    GrowthFit fit;
    fit.base = fit_line(pts);
    fit.base.phase = phase;
    fit.lambda = fit.base.slope;
    fit.annual_rate = rate_from_lambda(fit.lambda);
    return fit;
}

ElasticityFit fit_elasticity(const IESeries& response, const IESeries& predictor,
                             const Phase& phase) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& [year, x] : predictor.points()) {
        if (phase.contains(year) && response.contains(year)) {
            pts.emplace_back(x, response.at(year));
        }
    }
    if (pts.size() < 3) {
        throw Error(ErrorKind::Fit, response.name() + " vs " + predictor.name() + ": phase " +
                                        phase.label + " overlaps in only " +
                                        std::to_string(pts.size()) + " years");
    }
    ElasticityFit fit;
    fit.base = fit_line(pts);
    fit.base.phase = phase;
    fit.response_name = response.name();
    fit.predictor_name = predictor.name();
    return fit;
}

}  // namespace ieg
