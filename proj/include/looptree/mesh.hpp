#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "looptree/geometry.hpp"

namespace looptree {

struct Triangle {
    std::array<int, 3> v{};   // node indices, CCW
    double eps_r = 1.0;       // relative permittivity, > 0
    int region = 0;           // 0 = main domain; extended regions get distinct tags
};

struct BoundaryEdge {
    int a = 0;
    int b = 0;
    std::string marker;
};

// Triangulation of a simply connected planar region.  Immutable once built;
// loaders normalize the orientation to CCW and validate the topology.
//
// Text format (line oriented, '#' starts a comment):
//   nodes <count>         followed by one "x y" line per node
//   triangles <count>     followed by "i j k eps_r region_tag" (0-based nodes)
//   boundary <count>      followed by "i j marker" covering every boundary edge
struct Mesh {
    std::vector<Vec2> nodes;
    std::vector<Triangle> triangles;
    std::vector<BoundaryEdge> boundary;

    int node_count() const { return static_cast<int>(nodes.size()); }
    int triangle_count() const { return static_cast<int>(triangles.size()); }

    Vec2 vertex(int tri, int k) const { return nodes[triangles[tri].v[k]]; }
    double area(int tri) const {
        return signed_area(vertex(tri, 0), vertex(tri, 1), vertex(tri, 2));
    }
    Vec2 centroid(int tri) const {
        return triangle_centroid(vertex(tri, 0), vertex(tri, 1), vertex(tri, 2));
    }
    double total_area() const;

    // Lowest-indexed triangle containing p (barycentric test with a small
    // tolerance), or -1 when p lies outside the triangulation.
    int triangle_containing(Vec2 p) const;
};

Mesh load_mesh(std::istream& in);
Mesh load_mesh_file(const std::string& path);
void save_mesh(const Mesh& mesh, std::ostream& out);
void save_mesh_file(const Mesh& mesh, const std::string& path);

// Orientation repair + incidence/area validation shared by loaders and
// generators.  Throws geometry_error / topology_error / parse_error.
void normalize_and_validate(Mesh& mesh);

}  // namespace looptree
