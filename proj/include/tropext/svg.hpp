#pragma once

#include <string>
#include <string_view>

#include "tropext/tropvar.hpp"

namespace tropext {

/// Clipping box [xmin, xmax] × [ymin, ymax].
struct SvgWindow {
    Rational xmin = -5, ymin = -5, xmax = 5, ymax = 5;

    /// "xmin,ymin,xmax,ymax", each a rational. Throws std::invalid_argument.
    static SvgWindow parse(std::string_view text);
};

/// Renders a complex in N_R ≅ Q^2 (torus stratum): axes, shaded 2-cells, edges, vertices,
/// and an arrowhead wherever a cell leaves the window. Throws DomainError for other ranks.
std::string render_svg(const PolyhedralComplex& c, const SvgWindow& window = {});

} // namespace tropext
