#pragma once

#include <optional>
#include <ostream>

#include "shadow/constructions.hpp"
#include "shadow/domain.hpp"

namespace shadow {

/// 2D figure: domain outline, inscribed circle (when rho is given), disks,
/// and the observation point. Implicit outlines are traced by casting 512
/// rays from x0.
void write_svg(std::ostream& os, const Domain* domain, const ShadowConfig& cfg,
               std::optional<double> inradius = std::nullopt);

/// 3D scene as Wavefront OBJ: each ball as a 32x16 UV sphere plus the
/// domain mesh when the domain is a triangle mesh.
void write_obj(std::ostream& os, const Domain* domain, const ShadowConfig& cfg);

}  // namespace shadow
