#pragma once

#include <string>

#include "brauercat/enhanced.hpp"

namespace brauercat {

// One SVG document per morphism: terms laid out left to right, each with its
// coefficient, strands drawn as cubic curves, the m-valent vertex as a
// triangle. Output bytes are deterministic for identical input.
std::string render_svg(const EnhancedMorphism& f);

void render_svg_file(const EnhancedMorphism& f, const std::string& path);

}  // namespace brauercat
