#include "braidfloer/diskcurves.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace bf {

namespace {

// exact fraction used only for ordering new crossings along a piece
struct Key {
    long long num = 0, den = 1;
    bool operator<(const Key& o) const { return num * o.den < o.num * den; }
};

Key frac(long long n, long long d) { return Key{n, d}; }
Key sub(Key a, Key b) { return Key{a.num * b.den - b.num * a.den, a.den * b.den}; }
Key add(Key a, Key b) { return Key{a.num * b.den + b.num * a.den, a.den * b.den}; }

}  // namespace

int ArcConfig::piece_code(Piece p) const {
    switch (p.kind) {
        case PieceKind::AU: return p.idx - 1;
        case PieceKind::AL: return (n - 1) + p.idx - 1;
        case PieceKind::W: return 2 * (n - 1) + p.idx - 1;
        case PieceKind::E: return 2 * (n - 1) + n + p.idx - 1;
    }
    throw std::logic_error("bad piece");
}

Piece ArcConfig::piece_of_code(int code) const {
    if (code < n - 1) return {PieceKind::AU, code + 1};
    code -= n - 1;
    if (code < n - 1) return {PieceKind::AL, code + 1};
    code -= n - 1;
    if (code < n) return {PieceKind::W, code + 1};
    code -= n;
    return {PieceKind::E, code + 1};
}

std::string piece_name(Piece p) {
    const char* k = "";
    switch (p.kind) {
        case PieceKind::AU: k = "AU"; break;
        case PieceKind::AL: k = "AL"; break;
        case PieceKind::W: k = "W"; break;
        case PieceKind::E: k = "E"; break;
    }
    return std::string(k) + std::to_string(p.idx);
}

int ArcConfig::new_cx(Piece p, int strand, bool fwd) {
    Cx c;
    c.piece = p;
    c.strand = strand;
    c.fwd = fwd;
    c.alive = true;
    pool.push_back(c);
    return static_cast<int>(pool.size()) - 1;
}

std::vector<int> ArcConfig::strand_word(int strand) const {
    std::vector<int> out;
    for (int c = strand_head[strand]; c != -1; c = pool[c].snext) out.push_back(c);
    return out;
}

std::vector<int> ArcConfig::piece_list(Piece p) const {
    std::vector<int> out;
    for (int c = list_head[piece_code(p)]; c != -1; c = pool[c].lnext) out.push_back(c);
    return out;
}

std::vector<Piece> ArcConfig::crossing_word(int strand) const {
    std::vector<Piece> out;
    for (int c : strand_word(strand)) out.push_back(pool[c].piece);
    return out;
}

std::vector<int> ArcConfig::vertical_word(int strand) const {
    std::vector<int> out;
    for (int c : strand_word(strand)) {
        Piece p = pool[c].piece;
        if (p.kind == PieceKind::AU || p.kind == PieceKind::AL) out.push_back(p.idx);
    }
    return out;
}

int ArcConfig::total_crossings() const {
    int t = 0;
    for (const Cx& c : pool)
        if (c.alive) ++t;
    return t;
}

std::string ArcConfig::canonical_dump() const {
    // stable ids: (strand, position in strand)
    std::vector<std::pair<int, int>> tag(pool.size(), {-1, -1});
    for (int s = 0; s < n - 1; ++s) {
        int pos = 0;
        for (int c : strand_word(s)) tag[c] = {s, pos++};
    }
    std::ostringstream os;
    os << "n=" << n << "\n";
    for (int s = 0; s < n - 1; ++s) {
        os << "b" << (s + 1) << ":";
        for (int c : strand_word(s))
            os << " " << piece_name(pool[c].piece) << (pool[c].fwd ? "+" : "-");
        os << "\n";
    }
    for (int pc = 0; pc < num_pieces(); ++pc) {
        Piece p = piece_of_code(pc);
        os << piece_name(p) << ":";
        for (int c = list_head[pc]; c != -1; c = pool[c].lnext)
            os << " " << tag[c].first << "." << tag[c].second;
        os << "\n";
    }
    return os.str();
}

namespace {

// cells: U_i -> i, L_i -> n+i  (i in 1..n)
int cell_after(const ArcConfig& cfg, int cell, const ArcConfig::Cx& c) {
    int n = cfg.n;
    int j = c.piece.idx;
    switch (c.piece.kind) {
        case PieceKind::AU:
            if (c.fwd) { if (cell != j) return -1; return j + 1; }
            if (cell != j + 1) return -1;
            return j;
        case PieceKind::AL:
            if (c.fwd) { if (cell != n + j) return -1; return n + j + 1; }
            if (cell != n + j + 1) return -1;
            return n + j;
        case PieceKind::W:
        case PieceKind::E:
            if (c.fwd) { if (cell != j) return -1; return n + j; }
            if (cell != n + j) return -1;
            return j;
    }
    return -1;
}

}  // namespace

void ArcConfig::check_valid() const {
    for (int s = 0; s < n - 1; ++s) {
        int cell = s + 1;  // U_{s+1}
        int prev = -1;
        for (int c = strand_head[s]; c != -1; c = pool[c].snext) {
            if (!pool[c].alive) throw std::logic_error("dead crossing in strand");
            if (pool[c].sprev != prev) throw std::logic_error("strand linkage broken");
            cell = cell_after(*this, cell, pool[c]);
            if (cell < 0) throw std::logic_error("inconsistent cell walk");
            prev = c;
        }
        if (strand_tail[s] != prev) throw std::logic_error("strand tail broken");
        if (cell != n + s + 2) throw std::logic_error("strand does not end at its slot");
    }
    std::vector<int> seen(pool.size(), 0);
    for (int pc = 0; pc < num_pieces(); ++pc) {
        int prev = -1;
        for (int c = list_head[pc]; c != -1; c = pool[c].lnext) {
            if (pool[c].lprev != prev) throw std::logic_error("piece linkage broken");
            if (piece_code(pool[c].piece) != pc) throw std::logic_error("crossing on wrong list");
            seen[c]++;
            prev = c;
        }
        if ((prev == -1) != (list_tail[pc] == -1))
            throw std::logic_error("piece tail broken");
        if (prev != -1 && list_tail[pc] != prev) throw std::logic_error("piece tail broken");
    }
    for (size_t i = 0; i < pool.size(); ++i)
        if (pool[i].alive && seen[i] != 1) throw std::logic_error("crossing not on exactly one list");
}

ArcConfig identity_config(int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    ArcConfig cfg;
    cfg.n = n;
    cfg.strand_head.assign(std::max(0, n - 1), -1);
    cfg.strand_tail.assign(std::max(0, n - 1), -1);
    cfg.list_head.assign(cfg.num_pieces(), -1);
    cfg.list_tail.assign(cfg.num_pieces(), -1);
    // b_i: crosses E_i downward, then a_i below the axis heading east.
    for (int s = 0; s < n - 1; ++s) {
        int i = s + 1;
        int c0 = cfg.new_cx({PieceKind::E, i}, s, true);
        int c1 = cfg.new_cx({PieceKind::AL, i}, s, true);
        cfg.pool[c0].snext = c1;
        cfg.pool[c1].sprev = c0;
        cfg.strand_head[s] = c0;
        cfg.strand_tail[s] = c1;
        int pe = cfg.piece_code({PieceKind::E, i});
        int pl = cfg.piece_code({PieceKind::AL, i});
        cfg.list_head[pe] = cfg.list_tail[pe] = c0;
        cfg.list_head[pl] = cfg.list_tail[pl] = c1;
    }
    cfg.check_valid();
    return cfg;
}

namespace {

void list_remove(ArcConfig& cfg, int c) {
    ArcConfig::Cx& x = cfg.pool[c];
    int pc = cfg.piece_code(x.piece);
    if (x.lprev != -1) cfg.pool[x.lprev].lnext = x.lnext; else cfg.list_head[pc] = x.lnext;
    if (x.lnext != -1) cfg.pool[x.lnext].lprev = x.lprev; else cfg.list_tail[pc] = x.lprev;
    x.lprev = x.lnext = -1;
}

void list_push_head(ArcConfig& cfg, int pc, int c) {
    int h = cfg.list_head[pc];
    cfg.pool[c].lprev = -1;
    cfg.pool[c].lnext = h;
    if (h != -1) cfg.pool[h].lprev = c; else cfg.list_tail[pc] = c;
    cfg.list_head[pc] = c;
}

void list_push_tail(ArcConfig& cfg, int pc, int c) {
    int t = cfg.list_tail[pc];
    cfg.pool[c].lnext = -1;
    cfg.pool[c].lprev = t;
    if (t != -1) cfg.pool[t].lnext = c; else cfg.list_head[pc] = c;
    cfg.list_tail[pc] = c;
}

void strand_remove(ArcConfig& cfg, int c) {
    ArcConfig::Cx& x = cfg.pool[c];
    if (x.sprev != -1) cfg.pool[x.sprev].snext = x.snext; else cfg.strand_head[x.strand] = x.snext;
    if (x.snext != -1) cfg.pool[x.snext].sprev = x.sprev; else cfg.strand_tail[x.strand] = x.sprev;
    x.sprev = x.snext = -1;
    x.alive = false;
}

// Is the list end of c toward vertex v_j the immediate end?  Verticals have
// their head at the vertex; E_j's vertex end is its tail; W_{j+1}'s vertex end
// is its tail.
bool at_vertex_end(const ArcConfig& cfg, int c, int j) {
    const ArcConfig::Cx& x = cfg.pool[c];
    switch (x.piece.kind) {
        case PieceKind::AU:
        case PieceKind::AL:
            return x.piece.idx == j && x.lprev == -1;
        case PieceKind::E:
            return x.piece.idx == j && x.lnext == -1;
        case PieceKind::W:
            return x.piece.idx == j + 1 && x.lnext == -1;
    }
    return false;
}

// Normal form: no empty bigons (same-piece backtracks) and no chords cutting
// the corners north of an interior vertex.  Terminates: bigon removal drops
// the crossing count, corner slides drop the north-corner count.
void normalize(ArcConfig& cfg) {
    bool changed = true;
    while (changed) {
        changed = false;
        // backtracks, innermost = adjacent on the piece list
        bool again = true;
        while (again) {
            again = false;
            for (int s = 0; s < cfg.n - 1 && !again; ++s) {
                for (int c = cfg.strand_head[s]; c != -1; c = cfg.pool[c].snext) {
                    int d = cfg.pool[c].snext;
                    if (d == -1) break;
                    if (!(cfg.pool[c].piece == cfg.pool[d].piece)) continue;
                    if (cfg.pool[c].lnext != d && cfg.pool[c].lprev != d) continue;
                    assert(cfg.pool[c].fwd != cfg.pool[d].fwd);
                    list_remove(cfg, c);
                    list_remove(cfg, d);
                    strand_remove(cfg, c);
                    strand_remove(cfg, d);
                    again = true;
                    changed = true;
                    break;
                }
            }
        }
        // south detours around v_j: (E_j down, AL_j east, W_{j+1} up) or the
        // reverse traversal, all three crossings innermost at the vertex;
        // rewrites to the single AU_j crossing north of the vertex
        for (int s = 0; s < cfg.n - 1 && !changed; ++s) {
            for (int c = cfg.strand_head[s]; c != -1; c = cfg.pool[c].snext) {
                int d = cfg.pool[c].snext;
                if (d == -1) break;
                int e = cfg.pool[d].snext;
                if (e == -1) break;
                const ArcConfig::Cx a = cfg.pool[c];
                const ArcConfig::Cx b = cfg.pool[d];
                const ArcConfig::Cx f = cfg.pool[e];
                int j = 0;
                bool fwdAU = false, match = false;
                if (a.piece.kind == PieceKind::E && b.piece.kind == PieceKind::AL &&
                    f.piece.kind == PieceKind::W && b.piece.idx == a.piece.idx &&
                    f.piece.idx == a.piece.idx + 1 && a.fwd && b.fwd && !f.fwd) {
                    j = a.piece.idx;
                    fwdAU = true;
                    match = true;
                } else if (a.piece.kind == PieceKind::W && b.piece.kind == PieceKind::AL &&
                           f.piece.kind == PieceKind::E && a.piece.idx == b.piece.idx + 1 &&
                           f.piece.idx == b.piece.idx && a.fwd && !b.fwd && !f.fwd) {
                    j = b.piece.idx;
                    fwdAU = false;
                    match = true;
                }
                if (!match) continue;
                if (!at_vertex_end(cfg, c, j) || !at_vertex_end(cfg, d, j) ||
                    !at_vertex_end(cfg, e, j))
                    continue;
                int strand = a.strand;
                int before = a.sprev, after = f.snext;
                int nc = cfg.new_cx({PieceKind::AU, j}, strand, fwdAU);
                for (int x : {c, d, e}) {
                    list_remove(cfg, x);
                    strand_remove(cfg, x);
                }
                cfg.pool[nc].sprev = before;
                cfg.pool[nc].snext = after;
                if (before != -1) cfg.pool[before].snext = nc; else cfg.strand_head[strand] = nc;
                if (after != -1) cfg.pool[after].sprev = nc; else cfg.strand_tail[strand] = nc;
                list_push_head(cfg, cfg.piece_code({PieceKind::AU, j}), nc);
                changed = true;
                break;
            }
        }
        if (changed) continue;
        // north corner chords at v_j: (AU_j, E_j) or (AU_j, W_{j+1}) in either
        // traversal order, both crossings innermost at the vertex
        for (int s = 0; s < cfg.n - 1 && !changed; ++s) {
            for (int c = cfg.strand_head[s]; c != -1; c = cfg.pool[c].snext) {
                int d = cfg.pool[c].snext;
                if (d == -1) break;
                const ArcConfig::Cx a = cfg.pool[c];
                const ArcConfig::Cx b = cfg.pool[d];
                int j = 0;
                bool nw = false, ne = false;
                if (a.piece.kind == PieceKind::AU && b.piece.kind == PieceKind::E &&
                    b.piece.idx == a.piece.idx) { j = a.piece.idx; nw = true; }
                else if (a.piece.kind == PieceKind::E && b.piece.kind == PieceKind::AU &&
                         a.piece.idx == b.piece.idx) { j = b.piece.idx; nw = true; }
                else if (a.piece.kind == PieceKind::AU && b.piece.kind == PieceKind::W &&
                         b.piece.idx == a.piece.idx + 1) { j = a.piece.idx; ne = true; }
                else if (a.piece.kind == PieceKind::W && b.piece.kind == PieceKind::AU &&
                         a.piece.idx == b.piece.idx + 1) { j = b.piece.idx; ne = true; }
                if (!nw && !ne) continue;
                if (!at_vertex_end(cfg, c, j) || !at_vertex_end(cfg, d, j)) continue;

                int strand = a.piece.kind == PieceKind::AU || a.piece.kind == PieceKind::E
                                 ? a.strand : b.strand;
                // splice in the two replacement crossings south of the vertex
                int before = a.sprev, after = b.snext;
                bool entersFromAU = (a.piece.kind == PieceKind::AU);
                // direction of travel through the corner
                int e1 = -1, e2 = -1;
                if (nw) {
                    // NW corner: AU_j / E_j chord in U_j -> W_{j+1} / AL_j
                    if (entersFromAU) {
                        // U_{j+1} -AU-> U_j -E-> L_j  becomes
                        // U_{j+1} -W_{j+1} down-> L_{j+1} -AL west-> L_j
                        assert(!a.fwd && b.fwd);
                        e1 = cfg.new_cx({PieceKind::W, j + 1}, strand, true);
                        e2 = cfg.new_cx({PieceKind::AL, j}, strand, false);
                    } else {
                        // L_j -E up-> U_j -AU east-> U_{j+1} becomes
                        // L_j -AL east-> L_{j+1} -W_{j+1} up-> U_{j+1}
                        assert(!a.fwd && b.fwd);
                        e1 = cfg.new_cx({PieceKind::AL, j}, strand, true);
                        e2 = cfg.new_cx({PieceKind::W, j + 1}, strand, false);
                    }
                } else {
                    // NE corner: AU_j / W_{j+1} chord in U_{j+1} -> E_j / AL_j
                    if (entersFromAU) {
                        // U_j -AU east-> U_{j+1} -W down-> L_{j+1} becomes
                        // U_j -E down-> L_j -AL east-> L_{j+1}
                        assert(a.fwd && b.fwd);
                        e1 = cfg.new_cx({PieceKind::E, j}, strand, true);
                        e2 = cfg.new_cx({PieceKind::AL, j}, strand, true);
                    } else {
                        // L_{j+1} -W up-> U_{j+1} -AU west-> U_j becomes
                        // L_{j+1} -AL west-> L_j -E up-> U_j
                        assert(!a.fwd && !b.fwd);
                        e1 = cfg.new_cx({PieceKind::AL, j}, strand, false);
                        e2 = cfg.new_cx({PieceKind::E, j}, strand, false);
                    }
                }
                list_remove(cfg, c);
                list_remove(cfg, d);
                strand_remove(cfg, c);
                strand_remove(cfg, d);
                // insert e1, e2 between before/after on the strand
                cfg.pool[e1].sprev = before;
                cfg.pool[e1].snext = e2;
                cfg.pool[e2].sprev = e1;
                cfg.pool[e2].snext = after;
                if (before != -1) cfg.pool[before].snext = e1; else cfg.strand_head[strand] = e1;
                if (after != -1) cfg.pool[after].sprev = e2; else cfg.strand_tail[strand] = e2;
                // both hug the vertex: nearest position on their lists
                for (int e : {e1, e2}) {
                    Piece p = cfg.pool[e].piece;
                    int pc = cfg.piece_code(p);
                    if (p.kind == PieceKind::AL) list_push_head(cfg, pc, e);
                    else list_push_tail(cfg, pc, e);  // E_j / W_{j+1}: vertex end is the tail
                }
                changed = true;
                break;
            }
        }
    }
}

struct NewLetter {
    Piece piece;
    bool fwd;
    Key key;
};

}  // namespace

ArcConfig reduce_bigons(ArcConfig cfg) {
    normalize(cfg);
    cfg.check_valid();
    return cfg;
}

ArcConfig apply_half_twist(const ArcConfig& cfg_in, int j, int sign) {
    if (j < 1 || j > cfg_in.n - 1) throw std::invalid_argument("half-twist index out of range");
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    ArcConfig cfg = cfg_in;

    // gamma chords in order from z_j to z_{j+1}: all E_j crossings (list
    // order), then all W_{j+1} crossings (reversed list order).
    std::vector<int> echords = cfg.piece_list({PieceKind::E, j});
    std::vector<int> fchords = cfg.piece_list({PieceKind::W, j + 1});
    std::reverse(fchords.begin(), fchords.end());
    if (echords.empty() && fchords.empty()) return cfg;

    long long me = static_cast<long long>(echords.size());
    long long mf = static_cast<long long>(fchords.size());

    struct Chord {
        int cx;
        bool isE;
        Key x0;
    };
    std::vector<Chord> chords;
    for (long long q = 0; q < me; ++q)
        chords.push_back({echords[q], true, frac(q + 1, 2 * (me + 1))});
    for (long long q = 0; q < mf; ++q)
        chords.push_back({fchords[q], false, add(frac(1, 2), frac(q + 1, 2 * (mf + 1)))});

    const Key half = frac(1, 2);
    const Key one = frac(1, 1);
    const Key threehalf = frac(3, 2);

    std::vector<std::vector<std::pair<int, Key>>> new_on_piece(cfg.num_pieces());

    for (const Chord& ch : chords) {
        const bool down = cfg.pool[ch.cx].fwd;
        const int strand = cfg.pool[ch.cx].strand;
        const int before = cfg.pool[ch.cx].sprev;
        const int after = cfg.pool[ch.cx].snext;
        Key x0 = ch.x0;

        std::vector<NewLetter> word;
        // e-chords reroute through the verticals on the twist's exit side,
        // f-chords through the opposite side; the negative twist mirrors.
        PieceKind Ae = (sign > 0) ? PieceKind::AL : PieceKind::AU;
        PieceKind Af = (sign > 0) ? PieceKind::AU : PieceKind::AL;
        // positive templates (see derivation in tests): e/f times up/down;
        // negative twist is the mirror image through the axis.
        auto WJ = Piece{PieceKind::W, j};
        auto EJ = Piece{PieceKind::E, j};
        auto WJ1 = Piece{PieceKind::W, j + 1};
        auto EJ1 = Piece{PieceKind::E, j + 1};
        auto AV = Piece{ch.isE ? Ae : Af, j};
        bool m = sign < 0;  // mirrored: axis crossing directions flip
        if (ch.isE) {
            if (down != m) {
                // e-down (positive) / mirrored e-up
                word = {{WJ, !m, sub(one, x0)},
                        {AV, true, sub(half, x0)},
                        {WJ1, m, x0},
                        {EJ1, !m, x0},
                        {AV, false, add(half, x0)}};
            } else {
                word = {{AV, true, add(half, x0)},
                        {EJ1, m, x0},
                        {WJ1, !m, x0},
                        {AV, false, sub(half, x0)},
                        {WJ, m, sub(one, x0)}};
            }
        } else {
            if (down != m) {
                // f-down (positive) / mirrored f-up
                word = {{AV, false, sub(threehalf, x0)},
                        {WJ, !m, sub(one, x0)},
                        {EJ, m, sub(one, x0)},
                        {AV, true, sub(x0, half)},
                        {EJ1, !m, x0}};
            } else {
                word = {{EJ1, m, x0},
                        {AV, false, sub(x0, half)},
                        {EJ, !m, sub(one, x0)},
                        {WJ, m, sub(one, x0)},
                        {AV, true, sub(threehalf, x0)}};
            }
        }

        strand_remove(cfg, ch.cx);
        // the chord's list entry is dropped wholesale below (E_j / W_{j+1} rebuilt)
        int prev = before;
        for (const NewLetter& L : word) {
            int e = cfg.new_cx(L.piece, strand, L.fwd);
            cfg.pool[e].sprev = prev;
            if (prev != -1) cfg.pool[prev].snext = e; else cfg.strand_head[strand] = e;
            prev = e;
            new_on_piece[cfg.piece_code(L.piece)].push_back({e, L.key});
        }
        cfg.pool[prev].snext = after;
        if (after != -1) cfg.pool[after].sprev = prev; else cfg.strand_tail[strand] = prev;
    }

    // rebuild E_j and W_{j+1} lists from scratch (all old entries consumed)
    for (Piece p : {Piece{PieceKind::E, j}, Piece{PieceKind::W, j + 1}}) {
        int pc = cfg.piece_code(p);
        cfg.list_head[pc] = cfg.list_tail[pc] = -1;
    }
    for (int pc = 0; pc < cfg.num_pieces(); ++pc) {
        auto& xs = new_on_piece[pc];
        if (xs.empty()) continue;
        std::stable_sort(xs.begin(), xs.end(),
                         [](const auto& a, const auto& b) { return a.second < b.second; });
        // prepend in reverse so the sorted block ends up head-first
        for (auto it = xs.rbegin(); it != xs.rend(); ++it) list_push_head(cfg, pc, it->first);
    }

    normalize(cfg);
    cfg.check_valid();
    return cfg;
}

ArcConfig apply_braid(const ArcConfig& cfg, const BraidWord& w) {
    if (cfg.n != w.strands) throw std::invalid_argument("strand count mismatch");
    ArcConfig cur = cfg;
    for (int k : w.letters) cur = apply_half_twist(cur, std::abs(k), k > 0 ? 1 : -1);
    return cur;
}

}  // namespace bf
