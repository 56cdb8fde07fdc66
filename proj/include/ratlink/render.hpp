#pragma once

#include <string>

#include "ratlink/contfrac.hpp"
#include "ratlink/schubert.hpp"

namespace ratlink {

struct RenderStyle {
    double stroke_width = 2.0;
    double gap = 5.0;      // half-length of the break in an understrand
    double padding = 24.0;

    bool valid() const { return stroke_width > 0 && gap > 0 && padding > 0; }
};

/// What to draw: either the twist-region diagram of a continued fraction or
/// the two-bridge diagram of a presentation.
struct DiagramSpec {
    enum class Kind { conway, schubert };

    Kind kind = Kind::conway;
    ContinuedFraction conway;        // used when kind == conway (m >= 1)
    BridgePresentation schubert;     // used when kind == schubert (non-degenerate)
    RenderStyle style;

    static DiagramSpec for_conway(ContinuedFraction cf, RenderStyle style = {});
    static DiagramSpec for_schubert(BridgePresentation bp, RenderStyle style = {});
};

/// SVG of the twist-region diagram: one tagged <g class="crossing"> per
/// crossing (sum of all terms in total), understrands drawn broken, closure
/// arcs chosen by the parity of the length. Output is deterministic.
///
/// Every crossing group carries data-over / data-under with the string ids
/// occupying the two strands at that point, so the picture can be tallied
/// against the engine's counts. Odd-position twists are the negative ones.
std::string render_conway(const DiagramSpec& spec);

/// SVG of the two-bridge diagram, asymmetric layout with the right bridge
/// split in two strands: p segments per bridge, p-1 crossings under each,
/// 2(p-1) in total. The crossing at position q under the right bridge is
/// tagged as the first passage of the left bridge underneath. The root
/// element records p and q as data attributes.
///
/// Positions are counted along each bridge in drawing order; the clockwise
/// convention fixes the picture only up to reflection, and this renderer
/// makes no claim of matching any particular published figure pixel-wise.
std::string render_schubert(const DiagramSpec& spec);

}  // namespace ratlink
