#include "looptree/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>

#include "looptree/errors.hpp"

namespace looptree {

namespace {

uint64_t edge_key(int a, int b) {
    if (a > b) std::swap(a, b);
    return (static_cast<uint64_t>(a) << 32) | static_cast<uint64_t>(b);
}

struct LineReader {
    std::istream& in;
    int lineno = 0;

    // Next non-empty line with comments stripped; false at EOF.
    bool next(std::string& out) {
        std::string line;
        while (std::getline(in, line)) {
            ++lineno;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            auto end = line.find_last_not_of(" \t\r");
            if (end == std::string::npos) continue;
            line.erase(end + 1);
            out = line;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error("mesh line " + std::to_string(lineno) + ": " + msg);
    }
};

}  // namespace

double Mesh::total_area() const {
    double sum = 0.0;
    for (int t = 0; t < triangle_count(); ++t) sum += area(t);
    return sum;
}

int Mesh::triangle_containing(Vec2 p) const {
    for (int t = 0; t < triangle_count(); ++t) {
        Vec2 a = vertex(t, 0), b = vertex(t, 1), c = vertex(t, 2);
        double two_a = cross(b - a, c - a);
        double l0 = cross(b - p, c - p);
        double l1 = cross(c - p, a - p);
        double l2 = cross(a - p, b - p);
        double tol = -1e-12 * two_a;
        if (l0 >= tol && l1 >= tol && l2 >= tol) return t;
    }
    return -1;
}

void normalize_and_validate(Mesh& mesh) {
    const int nn = mesh.node_count();
    for (int i = 0; i < nn; ++i) {
        if (!std::isfinite(mesh.nodes[i].x) || !std::isfinite(mesh.nodes[i].y))
            throw geometry_error("node " + std::to_string(i) + " has non-finite coordinates");
    }

    for (int t = 0; t < mesh.triangle_count(); ++t) {
        Triangle& tri = mesh.triangles[t];
        for (int k = 0; k < 3; ++k) {
            if (tri.v[k] < 0 || tri.v[k] >= nn)
                throw parse_error("triangle " + std::to_string(t) + " references node " +
                                  std::to_string(tri.v[k]) + " out of range");
        }
        if (tri.v[0] == tri.v[1] || tri.v[1] == tri.v[2] || tri.v[0] == tri.v[2])
            throw geometry_error("triangle " + std::to_string(t) + " has repeated vertices");
        if (tri.eps_r <= 0.0)
            throw geometry_error("triangle " + std::to_string(t) + " has eps_r <= 0");
        double a2 = cross(mesh.nodes[tri.v[1]] - mesh.nodes[tri.v[0]],
                          mesh.nodes[tri.v[2]] - mesh.nodes[tri.v[0]]);
        if (a2 < 0.0) {
            std::swap(tri.v[1], tri.v[2]);  // repair clockwise input
            a2 = -a2;
        }
        if (a2 == 0.0)
            throw geometry_error("triangle " + std::to_string(t) + " is degenerate (zero area)");
    }

    // Edge incidence: interior edges carry 2 triangles, boundary edges 1.
    std::map<uint64_t, int> incidence;
    for (const Triangle& tri : mesh.triangles) {
        for (int k = 0; k < 3; ++k) {
            uint64_t key = edge_key(tri.v[k], tri.v[(k + 1) % 3]);
            int count = ++incidence[key];
            if (count > 2)
                throw topology_error("non-manifold edge (" + std::to_string(key >> 32) + "," +
                                     std::to_string(key & 0xffffffffu) + ") shared by more than 2 triangles");
        }
    }

    std::map<uint64_t, int> marked;  // boundary section coverage
    for (size_t i = 0; i < mesh.boundary.size(); ++i) {
        const BoundaryEdge& be = mesh.boundary[i];
        if (be.a < 0 || be.a >= nn || be.b < 0 || be.b >= nn)
            throw parse_error("boundary edge " + std::to_string(i) + " references node out of range");
        uint64_t key = edge_key(be.a, be.b);
        auto it = incidence.find(key);
        if (it == incidence.end())
            throw topology_error("boundary edge (" + std::to_string(be.a) + "," +
                                 std::to_string(be.b) + ") is not an edge of any triangle");
        if (it->second != 1)
            throw topology_error("boundary edge (" + std::to_string(be.a) + "," +
                                 std::to_string(be.b) + ") is interior (2 incident triangles)");
        if (++marked[key] > 1)
            throw topology_error("boundary edge (" + std::to_string(be.a) + "," +
                                 std::to_string(be.b) + ") listed twice");
    }
    for (const auto& [key, count] : incidence) {
        if (count == 1 && marked.find(key) == marked.end())
            throw topology_error("boundary edge (" + std::to_string(key >> 32) + "," +
                                 std::to_string(key & 0xffffffffu) + ") has no marker entry");
    }
}

Mesh load_mesh(std::istream& in) {
    LineReader reader{in};
    Mesh mesh;
    std::string line, word;

    auto expect_section = [&](const char* name, int& count) {
        if (!reader.next(line)) reader.fail(std::string("expected '") + name + " <count>'");
        std::istringstream ss(line);
        if (!(ss >> word >> count) || word != name || count < 0)
            reader.fail(std::string("expected '") + name + " <count>', got '" + line + "'");
    };

    int n_nodes = 0;
    expect_section("nodes", n_nodes);
    mesh.nodes.reserve(n_nodes);
    for (int i = 0; i < n_nodes; ++i) {
        if (!reader.next(line)) reader.fail("unexpected end of file in node list");
        std::istringstream ss(line);
        Vec2 p;
        if (!(ss >> p.x >> p.y)) reader.fail("malformed node line '" + line + "'");
        mesh.nodes.push_back(p);
    }

    int n_tris = 0;
    expect_section("triangles", n_tris);
    mesh.triangles.reserve(n_tris);
    for (int i = 0; i < n_tris; ++i) {
        if (!reader.next(line)) reader.fail("unexpected end of file in triangle list");
        std::istringstream ss(line);
        Triangle t;
        if (!(ss >> t.v[0] >> t.v[1] >> t.v[2] >> t.eps_r >> t.region))
            reader.fail("malformed triangle line '" + line + "'");
        mesh.triangles.push_back(t);
    }

    int n_bdry = 0;
    expect_section("boundary", n_bdry);
    mesh.boundary.reserve(n_bdry);
    for (int i = 0; i < n_bdry; ++i) {
        if (!reader.next(line)) reader.fail("unexpected end of file in boundary list");
        std::istringstream ss(line);
        BoundaryEdge be;
        if (!(ss >> be.a >> be.b >> be.marker))
            reader.fail("malformed boundary line '" + line + "'");
        mesh.boundary.push_back(be);
    }

    normalize_and_validate(mesh);
    return mesh;
}

Mesh load_mesh_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open mesh file '" + path + "'");
    return load_mesh(in);
}

void save_mesh(const Mesh& mesh, std::ostream& out) {
    out.precision(17);
    out << "nodes " << mesh.node_count() << "\n";
    for (const Vec2& p : mesh.nodes) out << p.x << " " << p.y << "\n";
    out << "triangles " << mesh.triangle_count() << "\n";
    for (const Triangle& t : mesh.triangles)
        out << t.v[0] << " " << t.v[1] << " " << t.v[2] << " " << t.eps_r << " " << t.region << "\n";
    out << "boundary " << mesh.boundary.size() << "\n";
    for (const BoundaryEdge& be : mesh.boundary)
        out << be.a << " " << be.b << " " << be.marker << "\n";
}

void save_mesh_file(const Mesh& mesh, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot write mesh file '" + path + "'");
    save_mesh(mesh, out);
}

}  // namespace looptree
