#pragma once

#include <iosfwd>
#include <string>

#include "coralarm/arm.hpp"

namespace coralarm {

/// An SVG picture of the arm inside its tunnel, with an optional caption
/// below the tunnel.
void write_svg(std::ostream& os, const ArmState& s, const std::string& caption = "");

}  // namespace coralarm
