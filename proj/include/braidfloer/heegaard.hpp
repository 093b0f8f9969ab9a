#ifndef BRAIDFLOER_HEEGAARD_HPP
#define BRAIDFLOER_HEEGAARD_HPP

#include <optional>
#include <string>
#include <vector>

#include "braidfloer/braid.hpp"
#include "braidfloer/diskcurves.hpp"

namespace bf {

struct DiagramError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Multi-pointed Heegaard diagram as a combinatorial map.  Every vertex is a
// transverse crossing of one A-family curve with one B-family curve.  Darts
// are numbered 4*v+slot with slots in counterclockwise rotation order; slots
// 0/2 carry the "even" curve through the vertex, slots 1/3 the "odd" one.
// twin[d] is the dart at the far end of d's edge.
struct HeegaardDiagram {
    struct VertexInfo {
        int curve_even = -1;
        int curve_odd = -1;
    };
    struct CurveInfo {
        bool familyA = true;  // A: doubled arc-basis curves and stabilized runners
        bool hat = false;     // born in a stabilization
    };

    int npunct = 1;       // basepoint pairs (z_i, w_i), i = 1..npunct
    int stabilizations = 0;
    std::vector<VertexInfo> verts;
    std::vector<int> twin;
    std::vector<CurveInfo> curves;
    std::vector<int> distinguished;  // t_1..t_{n-1}, then t-hat per stabilization
    std::vector<int> z_witness, w_witness;  // dart whose face holds the basepoint

    int nverts() const { return static_cast<int>(verts.size()); }
    int ndarts() const { return static_cast<int>(twin.size()); }
    int nedges() const { return ndarts() / 2; }
    static int dart(int v, int s) { return 4 * v + s; }
    static int vert_of(int d) { return d / 4; }
    static int slot_of(int d) { return d % 4; }
    int curve_of_dart(int d) const {
        return (d % 2 == 0) ? verts[d / 4].curve_even : verts[d / 4].curve_odd;
    }

    void check_valid() const;
};

// Faces recomputed from the rotation system.
struct FaceData {
    std::vector<std::vector<int>> walk;  // darts, one orbit per face
    std::vector<int> of_dart;            // dart -> face
    std::vector<int> zface, wface;       // basepoint index -> face
    std::vector<int> corners(int f) const;  // vertex ids with multiplicity

    int quadrant(int v, int k) const { return of_dart[4 * v + k]; }
    bool face_has_basepoint(int f) const;
    int euler_characteristic_genus(const HeegaardDiagram& d) const;
};

FaceData trace_faces(const HeegaardDiagram& d);

// Construction of the (efficient) braid diagram on the doubled disk.
HeegaardDiagram build_braid_diagram(const BraidWord& w);

// Faces with no basepoint and more than four corners.
std::vector<int> find_bad_regions(const HeegaardDiagram& d, const FaceData& f);

bool verify_nice(const HeegaardDiagram& d, const FaceData& f);
// Stronger reading: every basepoint-free-of-z face is a bigon or square.
bool verify_nice_strict_z(const HeegaardDiagram& d, const FaceData& f);

// Lattice of periodic domains with zero multiplicity at every basepoint.
// Vectors are integer multiplicities indexed by face.
std::vector<std::vector<long long>> periodic_domain_basis(const HeegaardDiagram& d,
                                                          const FaceData& f,
                                                          bool basepoint_free);

bool verify_admissible(const HeegaardDiagram& d, const FaceData& f);

// Deterministic text serialization (curve walks, rotations, basepoints).
std::string serialize_diagram(const HeegaardDiagram& d);

// --- nicening ---------------------------------------------------------

struct FingerPair {
    int y = -1, yp = -1;
    int bigon_at_creation = -1;  // face index valid right after the move
};
struct FingerTrace {
    std::vector<FingerPair> pairs;
};

struct NicenessError : DiagramError {
    using DiagramError::DiagramError;
};

// Attach a 1-handle with one foot in bad_face and one in z_face, runner curve
// placed along a shortest dual path crossing only B-family edges.  Returns
// (runner curve id, belt curve id, t-hat vertex).
struct StabilizeResult {
    int runner_curve, belt_curve, t_hat;
};
StabilizeResult stabilize(HeegaardDiagram& d, const FaceData& f, int bad_face, int z_face);

// Elementary isotopy of the beta edge holding dart beta_dart across the alpha
// edge holding alpha_dart; both darts must lie on the same face.  Returns the
// ordered new pair (y, y') and the dart of the new finger tip edge.
struct FingerResult {
    int y, yp;
    int tip_dart;
    int banned_alpha_dart;  // alpha segment between y and y'
};
FingerResult finger_move(HeegaardDiagram& d, int beta_dart, int alpha_dart);

std::pair<HeegaardDiagram, FingerTrace> make_nice(const HeegaardDiagram& d);

}  // namespace bf

#endif
