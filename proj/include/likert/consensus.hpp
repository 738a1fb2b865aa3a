#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "likert/errors.hpp"
#include "likert/survey.hpp"

namespace likert {

/// Degree of agreement of a response distribution, in percent.
///
/// Geometrically: the Euclidean distance from the response point to the
/// barycentre of the simplex, divided by the barycentre-to-vertex distance.
/// 100 when a single category holds all responses, 0 when the responses are
/// equidistributed. Always computed in the full N dimensions; the 2-D
/// embedding below is for plotting only.
inline double consensus(const SurveyDistribution& dist) {
    const std::size_t n = dist.n_categories();
    const double uniform = 100.0 / static_cast<double>(n);
    double sq = 0.0;
    for (double s : dist.shares()) {
        const double d = s - uniform;
        sq += d * d;
    }
    const double denom = std::sqrt((static_cast<double>(n) - 1.0) / static_cast<double>(n));
    return std::clamp(std::sqrt(sq) / denom, 0.0, 100.0);
}

struct BarycentricPoint {
    double x = 0;
    double y = 0;
};

/// Vertices of the regular N-gon used for the 2-D embedding: unit circle,
/// first vertex at the top, counterclockwise.
inline std::vector<BarycentricPoint> polygon_vertices(std::size_t n) {
    std::vector<BarycentricPoint> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double angle =
            std::numbers::pi / 2 + 2.0 * std::numbers::pi * static_cast<double>(i) /
                                       static_cast<double>(n);
        v[i] = {std::cos(angle), std::sin(angle)};
    }
    return v;
}

/// Plot coordinate of a distribution: the share-weighted average of the
/// polygon vertices. A visualization aid only — category distances are not
/// preserved for N > 3, so no metric is ever derived from these points.
inline BarycentricPoint barycentric_coordinates(const SurveyDistribution& dist) {
    const std::size_t n = dist.n_categories();
    if (n < 3)
        throw ValidationError(Errc::dimension_too_small,
                              "2-D embedding needs at least 3 categories");
    const auto verts = polygon_vertices(n);
    BarycentricPoint p;
    for (std::size_t i = 0; i < n; ++i) {
        const double w = dist.share(i) / 100.0;
        p.x += w * verts[i].x;
        p.y += w * verts[i].y;
    }
    return p;
}

} // namespace likert
