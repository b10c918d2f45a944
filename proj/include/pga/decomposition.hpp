#pragma once

// Block trees, atoms, and the reduction series: a connected planar multigraph
// is repeatedly simplified by replacing its atoms (pendant stars, leaf blocks,
// 2-cut fragments, parallel bundles) with fresh-colored edges, until a
// primitive graph remains. Every step keeps enough bookkeeping (per-instance
// point maps, per-class boundary-fixing groups) to reconstruct the
// automorphism group of the original graph afterwards.

#include "pga/graph.hpp"
#include "pga/perm.hpp"

namespace pga {

constexpr color_t atom_color_base = 0x40000000u;  // colors of replaced atoms
constexpr color_t paint_color_base = 0xC0000000u; // internal boundary markers

inline bool is_atom_color(color_t c)
{
    return (c & atom_color_base) != 0 && (c & reserved_color_bit) == 0;
}

struct block_tree {
    struct block_info {
        std::vector<vertex_t> vertices;
        std::vector<edge_ix> edges;      // core edges of the block
        vertex_t parent_art = no_vertex; // block's vertex toward the center
        bool leaf = true;                // no blocks strictly below it
    };
    std::vector<block_info> blocks;
    std::vector<char> is_articulation;          // core cut vertices
    std::vector<std::vector<int>> blocks_of;    // vertex -> blocks containing it
    std::vector<std::vector<int>> child_blocks; // vertex -> blocks hanging below
    bool centered_on_vertex = false;
    vertex_t center_vertex = no_vertex; // when centered on an articulation
    int center_block = -1;              // when centered on a block
};

// the center survives all reductions; atoms of every level are taken with
// respect to the center of the original graph
struct center_track {
    bool fixed = false; // false: compute the center from the tree itself
    bool on_vertex = false;
    vertex_t vertex = no_vertex;
    std::vector<vertex_t> block_vertices;
};

block_tree build_block_tree(const multigraph &g, const center_track &track);

struct atom {
    enum kind_t { star, block, proper, dipole };
    kind_t kind = star;
    multigraph graph;                // stand-alone copy with dense local ids
    std::vector<vertex_t> boundary;  // local ids; one entry or two
    std::vector<int> point_to_level; // local aut-domain point -> level point
};

std::vector<atom> find_atoms(const multigraph &g, const block_tree &bt);

struct atom_class {
    atom rep;                   // first instance encountered
    int level = 0;              // level whose reduction created the class
    color_t color = 0;
    bool symmetric = true;      // 2-boundary kinds: boundary swap exists
    perm tau;                   // rep-domain boundary swap witness
    std::vector<perm> fix_gens; // generators of Fix(boundary), rep domain
    u128 fix_local = 1;         // |Fix(boundary)| of the colored rep
    u128 fix_star = 1;          // |Fix(boundary)| after full expansion
};

struct reduction_level {
    multigraph graph;              // G_i
    block_tree bt;
    std::vector<vertex_t> vparent; // vertex -> previous-level vertex (empty at 0)
    std::vector<int> eparent;      // edge -> previous-level edge, or
                                   // -1 - atom_index for a replacement edge
    std::vector<atom> atoms;       // atoms of G_i (empty at the last level)
    std::vector<int> atom_cls;     // per atom: class id
    std::vector<std::vector<int>> psi; // per atom: class-rep point -> G_i point
    std::vector<edge_ix> atom_edge;    // per atom: replacement edge in G_{i+1}
};

enum class primitive_kind { k1, k2, cycle, three_connected, dipole };

struct reduction_series {
    std::vector<reduction_level> levels; // levels[0] = G_0; back() is primitive
    std::vector<atom_class> classes;
    primitive_kind kind = primitive_kind::k1;
    center_track center;                 // in primitive-level vertex ids
    const multigraph &primitive() const { return levels.back().graph; }
    const atom_class &class_of_color(color_t c) const
    {
        return classes[(int)(c - atom_color_base)];
    }
};

// input must be connected, planar, loop-free, with vertex colors normalized
reduction_series reduce(const multigraph &g);

} // namespace pga
