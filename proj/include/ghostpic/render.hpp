#pragma once

#include "ghostpic/ghosts.hpp"

#include <map>
#include <string>
#include <vector>

namespace ghostpic {

struct PlanePoint {
    double x = 0, y = 0;
};

// pole at -eta, tangent plane at eta
PlanePoint stereographic(const RatVec& theta);

struct Polyline {
    std::vector<PlanePoint> pts;
    bool closed = false;
};

// trace of a rank-3 cone with one equality on the unit sphere, projected
Polyline trace_wall_curve(const Cone& cone, int samples = 64, double max_chord = 0.02);

struct Curve {
    int id = 0;  // brick index for walls, ghost index for ghosts
    std::string kind;
    std::string name;
    Polyline line;
    std::string color;
    bool dashed = false;
    int offset_slot = 0;
};

struct SceneLabel {
    int chamber = 0;
    PlanePoint at;
    std::string text;
};

struct SceneVertex {
    PlanePoint at;
    std::vector<int> walls;
};

struct PictureScene {
    std::vector<Curve> wall_curves;
    std::vector<Curve> ghost_curves;
    std::vector<SceneLabel> labels;
    std::vector<SceneVertex> vertices;
    double scale = 100;  // pixels per plane unit
    PlanePoint center;
};

struct RenderOptions {
    bool ghosts = true;
    bool extension_ghosts = true;
    double offset_fraction = 0.01;  // of the viewport, for coincident ghost curves
    std::map<int, std::string> ghost_labels;
    std::string title;
};

inline constexpr int viewport = 1000;

PictureScene build_scene(const ModuleClass& cls, const RenderOptions& opt = {});
std::string render_svg(const ModuleClass& cls, const PictureScene& scene, const RenderOptions& opt = {});
std::string render_picture(const ModuleClass& cls, const RenderOptions& opt = {});

}  // namespace ghostpic
