#pragma once

#include "lsg/core/field.hpp"
#include "lsg/levelset/extract.hpp"

namespace lsg::detail {

LevelSurface start_surface(const ScalarField& field, double t, const char* backend);
void finalize_surface(LevelSurface& surface, const ExtractOptions& options);

}  // namespace lsg::detail
