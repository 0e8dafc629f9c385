#pragma once

#include <string>
#include <vector>

#include "arcalg/diagram.hpp"

namespace arcalg {

enum class Color { Black, Green, Red };

// W(top)bottom: circles of the closed 1-manifold obtained by stacking the
// reflection of `top` onto `bottom`. Circles are ordered by minimal point.
struct GluedDiagram {
    int n = 0;  // extension parameter; 0 until classify_colors
    CupDiagram bottom, top;
    std::vector<std::vector<int>> circles;  // sorted point lists
    std::vector<Color> colors;              // empty until classify_colors
    int black = 0, green = 0, red = 0;

    int num_circles() const { return static_cast<int>(circles.size()); }
    int circle_of_point(int p) const;
    // circle containing a given arc of bottom or top
    int circle_of_arc(std::pair<int, int> arc) const;
};

GluedDiagram glue(const CupDiagram& bottom, const CupDiagram& top);

// Colors for a gluing of extended diagrams on 4n points
// (inner points n+1..3n).
void classify_colors(GluedDiagram& g, int n);

GluedDiagram glue_colored(const CupDiagram& bottom, const CupDiagram& top, int n);

// ASCII pictures for the CLI.
std::string render(const CupDiagram& d);
std::string render(const GluedDiagram& g);

}  // namespace arcalg
