#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mdpc/display.hpp"
#include "mdpc/interaction.hpp"
#include "mdpc/picking.hpp"
#include "mdpc/transforms.hpp"

namespace mdpc {

struct FrameOutput {
  std::uint64_t seq = 0;
  std::vector<DrawCmd> display;
  // Live picking objects with ids assigned and screen transforms applied;
  // pickBuffer holds exactly these ids.
  std::vector<PickObject> picking;
  PickBuffer pickBuffer;

  // Empty for the background or an unknown id.
  std::string_view tag_of(PickId id) const;
};

// Scene-to-screen pipeline: the interaction's own stages, then `extra`.
std::vector<PlaneStage> screen_stages(const Interaction& interaction, std::span<const PlaneStage> extra);

// Rebuilds both views from the interaction's current model, view and
// picking state. Nothing is retained between calls; the output depends only
// on the arguments.
FrameOutput render_frame(const Interaction& interaction, std::span<const PlaneStage> extra, std::uint64_t seq);

}  // namespace mdpc
