#ifndef BRAIDFLOER_DISKCURVES_HPP
#define BRAIDFLOER_DISKCURVES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "braidfloer/braid.hpp"

namespace bf {

// Reference skeleton of the n-punctured disk.  Punctures z_1..z_n sit on the
// horizontal axis.  Vertical arc a_j separates z_j from z_{j+1} and meets the
// axis at the interior vertex v_j.  The axis decomposes into pieces
// W_i (west of z_i) and E_i (east of z_i); E_j and W_{j+1} meet a_j at v_j.
// The verticals are split at v_j into an upper half AU_j and lower half AL_j.
// Cells of the skeleton are the upper/lower halves U_i, L_i of each region.
//
// A beta-arc is stored as its ordered crossing sequence with the skeleton
// pieces.  Together with the per-piece crossing orders this determines the
// isotopy class of the configuration rel endpoints.

enum class PieceKind : std::uint8_t { AU, AL, W, E };

struct Piece {
    PieceKind kind;
    int idx;  // AU/AL: 1..n-1; W/E: 1..n
    bool operator==(const Piece&) const = default;
};

// Crossing direction: verticals: true = west-to-east; axis pieces: true = downward (U to L).
struct ArcConfig {
    struct Cx {
        Piece piece{PieceKind::AU, 0};
        int strand = -1;
        bool fwd = true;
        int sprev = -1, snext = -1;  // along the strand
        int lprev = -1, lnext = -1;  // along the piece
        bool alive = false;
    };

    int n = 1;
    std::vector<Cx> pool;
    std::vector<int> strand_head, strand_tail;  // size n-1
    std::vector<int> list_head, list_tail;      // indexed by piece_code

    int piece_code(Piece p) const;
    Piece piece_of_code(int code) const;
    int num_pieces() const { return 4 * n - 2; }

    // pool management
    int new_cx(Piece p, int strand, bool fwd);

    std::vector<int> strand_word(int strand) const;            // crossing ids in order
    std::vector<int> piece_list(Piece p) const;                 // crossing ids head->tail
    std::vector<Piece> crossing_word(int strand) const;         // all pieces
    std::vector<int> vertical_word(int strand) const;           // a_j indices only
    int total_crossings() const;

    bool operator==(const ArcConfig& o) const { return canonical_dump() == o.canonical_dump(); }
    std::string canonical_dump() const;

    void check_valid() const;  // cell-walk and linkage consistency
};

ArcConfig identity_config(int n);

// Positive (sign=+1) or negative half-twist exchanging punctures j, j+1.
// Requires 1 <= j <= n-1.  Result is reduced.
ArcConfig apply_half_twist(const ArcConfig& cfg, int j, int sign);

// Removes empty bigons against the skeleton and normalizes corner passes at
// the interior vertices; idempotent.
ArcConfig reduce_bigons(ArcConfig cfg);

ArcConfig apply_braid(const ArcConfig& cfg, const BraidWord& w);

std::string piece_name(Piece p);

}  // namespace bf

#endif
