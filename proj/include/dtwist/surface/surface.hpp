#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dtwist::surface {

/// Edge e has darts 2e (along e) and 2e+1 (against e).
using Dart = int;

inline Dart dart_of(int edge, bool reversed) { return 2 * edge + (reversed ? 1 : 0); }
inline int edge_of(Dart d) { return d / 2; }
inline Dart reverse(Dart d) { return d ^ 1; }
inline bool is_reversed(Dart d) { return (d & 1) != 0; }

struct BuildOptions {
    /// Edges used once are boundary edges instead of an error.
    bool allow_boundary = false;
    bool allow_disconnected = false;
};

/**
 * Oriented surface as a combinatorial map.
 *
 * Faces are cyclic dart words with the face on the left of every dart.
 * Vertices are not given: they are the classes of dart ends glued at face
 * corners. A dart with no face on its left is a boundary dart.
 */
class CombinatorialSurface {
public:
    CombinatorialSurface() = default;

    static CombinatorialSurface build(std::vector<std::string> edge_names, std::vector<std::vector<Dart>> faces,
                                      BuildOptions opts = {});
    /// Faces given as words over edge names, a trailing ' marking reversal.
    static CombinatorialSurface from_words(const std::vector<std::string>& words, BuildOptions opts = {});

    std::size_t num_vertices() const { return num_vertices_; }
    std::size_t num_edges() const { return edge_names_.size(); }
    std::size_t num_faces() const { return faces_.size(); }
    std::size_t num_darts() const { return 2 * edge_names_.size(); }
    long euler() const;
    bool closed() const;
    /// (2 - chi) / 2; only meaningful for closed surfaces.
    int genus() const;
    std::size_t num_boundary_components() const;

    const std::vector<std::string>& edge_names() const { return edge_names_; }
    const std::string& edge_name(int e) const { return edge_names_.at(static_cast<std::size_t>(e)); }
    std::optional<int> find_edge(const std::string& name) const;
    /// "a" or "a'".
    std::string dart_name(Dart d) const;
    /// Inverse of dart_name; throws SurfaceError(UnknownEdge).
    Dart parse_dart(const std::string& token) const;

    const std::vector<std::vector<Dart>>& faces() const { return faces_; }
    const std::vector<Dart>& face(std::size_t f) const { return faces_.at(f); }

    int tail(Dart d) const { return tail_[static_cast<std::size_t>(d)]; }
    int head(Dart d) const { return tail_[static_cast<std::size_t>(reverse(d))]; }
    /// Face on the left of d, or -1 on the boundary.
    int face_of(Dart d) const { return face_of_[static_cast<std::size_t>(d)]; }
    int position_in_face(Dart d) const { return pos_[static_cast<std::size_t>(d)]; }
    /// Next dart along the face on the left; -1 for boundary darts.
    Dart next(Dart d) const;
    Dart prev(Dart d) const;
    /// Counterclockwise successor around tail(d); -1 when d is a boundary dart.
    Dart rotate(Dart d) const;
    /// Darts leaving v in counterclockwise order. For a boundary vertex the
    /// list starts at the dart whose clockwise neighbour is missing.
    std::vector<Dart> darts_at(int v) const;
    bool is_boundary_edge(int e) const;
    bool is_boundary_vertex(int v) const;

    /// Component index of each face; faces sharing an edge are in one component.
    std::vector<int> face_components(std::size_t* count = nullptr) const;
    /// Component index of each vertex.
    std::vector<int> vertex_components(std::size_t* count = nullptr) const;

private:
    std::vector<std::string> edge_names_;
    std::vector<std::vector<Dart>> faces_;
    std::vector<int> face_of_;
    std::vector<int> pos_;
    std::vector<int> tail_;
    std::vector<std::vector<Dart>> star_;
    std::map<std::string, int> edge_index_;
    std::size_t num_vertices_ = 0;
};

/// A closed embedded cellular loop, stored as its cyclic dart sequence.
struct CellCurve {
    std::string name;
    std::vector<Dart> darts;

    CellCurve reversed() const;
    std::vector<int> vertices(const CombinatorialSurface& x) const;
    bool uses_edge(int e) const;
};

/// Throws CurveError unless the darts close up into an embedded loop.
void validate_curve(const CombinatorialSurface& x, const CellCurve& c);
CellCurve curve_from_words(const CombinatorialSurface& x, const std::string& name, const std::string& word);
std::string curve_word(const CombinatorialSurface& x, const CellCurve& c);

/// Same cyclic dart sequence up to rotation (and reversal when unoriented).
bool same_loop(const CellCurve& a, const CellCurve& b, bool oriented);

}  // namespace dtwist::surface
