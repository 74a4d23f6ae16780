#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "slopeforge/geometry.hpp"

namespace slopeforge::geometry::detail {

// Points and segments of the drawn graph G'. Points are the vertices followed
// by bend points in increasing edge order; segments follow drawn_graph().
template <typename P>
struct SegmentView {
  std::size_t vertex_count = 0;
  std::vector<P> points;
  std::vector<std::array<std::size_t, 2>> segments;
  std::vector<std::size_t> edge_of_segment;
  // Index into points of each edge's bend, or SIZE_MAX.
  std::vector<std::size_t> bend_point;
};

template <typename P>
SegmentView<P> make_view(const Layout<P>& layout, const std::vector<graph::Edge>& edges) {
  SegmentView<P> view;
  view.vertex_count = layout.vertices.size();
  view.points = layout.vertices;
  view.bend_point.assign(edges.size(), SIZE_MAX);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (auto it = layout.bends.find(i); it != layout.bends.end()) {
      const std::size_t x = view.points.size();
      view.points.push_back(it->second);
      view.bend_point[i] = x;
      view.segments.push_back({e.u, x});
      view.segments.push_back({x, e.v});
      view.edge_of_segment.push_back(i);
      view.edge_of_segment.push_back(i);
    } else {
      view.segments.push_back({e.u, e.v});
      view.edge_of_segment.push_back(i);
    }
  }
  return view;
}

}  // namespace slopeforge::geometry::detail
