#pragma once

#include "lsg/core/field.hpp"
#include "lsg/core/surface.hpp"

namespace lsg {

/// Pointwise geometry of the level set of `field` through x, in the field's
/// background metric. The returned sample has weight 0; callers set it.
/// When `chart` is non-null it receives the raw field sample.
SurfaceSample sample_geometry(const ScalarField& field, const Vec& x, FieldSample* chart = nullptr);

/// Ratio of the metric area element to the flat one for a hypersurface with
/// Euclidean unit normal `chart_normal`.
double area_factor(const MetricSample& metric, const Vec& chart_normal);

/// |D^2u|^2 - (n/(n-1)) |D|Du||^2 at a point of a flat-chart field. Nonnegative
/// for harmonic u where Du != 0; NaN where the gradient vanishes.
double kato_defect(const FieldSample& sample);

}  // namespace lsg
