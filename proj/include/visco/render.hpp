#pragma once

#include <string>
#include <vector>

#include "visco/record.hpp"

namespace visco {

struct RenderOptions {
  int first = 0;   // frame indices, inclusive
  int last = -1;   // -1 = last frame
  int every = 1;
  std::string out_dir;  // default: <record>/svg
  double width_px = 800.0;
};

/// One SVG per selected frame: deformed mesh, obstacles, contact-force arrows
/// scaled by magnitude and the CN deficit. Returns the written paths.
std::vector<std::string> render_record(const StoredRecord& rec, const RenderOptions& opts = {});

}  // namespace visco
