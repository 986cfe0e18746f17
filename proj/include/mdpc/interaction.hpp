#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mdpc/display.hpp"
#include "mdpc/geometry.hpp"
#include "mdpc/model_store.hpp"
#include "mdpc/picking.hpp"
#include "mdpc/statemachine.hpp"
#include "mdpc/transforms.hpp"

namespace mdpc {

enum class InteractionKind { Scrollbar, Dnd, Guides, Calendar };

std::string_view to_string(InteractionKind kind);
// Accepts scrollbar | dnd | guides | calendar. Throws UnknownInteraction.
InteractionKind parse_interaction_kind(std::string_view name);

struct InteractionConfig {
  double hysteresisRadius = 5.0;
  double attractionDistance = 10.0;  // half the band thickness
  double snapMinutes = 0.0;          // 0 disables snapping
  Rect trough{0, 0, 20, 300};        // scrollbar trough, vertical layout
};

// Something the interaction reports without touching the model (Select).
struct Notification {
  std::string kind;
  std::int64_t id = 0;

  friend bool operator==(const Notification&, const Notification&) = default;
};

// An MDPC controller: a display-view builder, a picking-view builder and a
// state machine whose actions are the only code that mutates the model.
// Builders work in scene coordinates; scene_stages() maps scene to screen.
class Interaction {
 public:
  Interaction(InteractionKind kind, std::string initialState, ModelStore model, InteractionConfig cfg,
              ViewParams view);
  virtual ~Interaction() = default;

  Interaction(const Interaction&) = delete;
  Interaction& operator=(const Interaction&) = delete;

  InteractionKind kind() const { return kind_; }
  const InteractionConfig& config() const { return cfg_; }
  void set_snap_minutes(double minutes) { cfg_.snapMinutes = minutes; }

  const ModelStore& model() const { return model_; }
  // Replaces the model and returns the machine to its initial state.
  void reset(ModelStore model);

  const ViewParams& view() const { return view_; }
  void set_view(const ViewParams& view);

  Machine& machine() { return machine_; }
  const Machine& machine() const { return machine_; }

  const std::vector<Notification>& notifications() const { return notifications_; }

  virtual std::vector<DrawCmd> display_view() const = 0;
  virtual std::vector<PickObject> picking_view() const = 0;
  // Default: the view's pan and zoom.
  virtual std::vector<PlaneStage> scene_stages() const;

 protected:
  virtual void clear_transient() {}
  virtual void on_view_changed() {}

  ModelStore& mutable_model() { return model_; }
  void notify(std::string kind, std::int64_t id) { notifications_.push_back({std::move(kind), id}); }

  InteractionConfig cfg_;
  Machine machine_;

 private:
  InteractionKind kind_;
  ModelStore model_;
  ViewParams view_;
  std::vector<Notification> notifications_;
};

// Default model and window for each interaction kind.
ModelStore default_model(InteractionKind kind);
ViewParams default_view(InteractionKind kind);

std::unique_ptr<Interaction> make_interaction(InteractionKind kind, ModelStore model, InteractionConfig cfg = {},
                                              std::optional<ViewParams> view = std::nullopt);

}  // namespace mdpc
