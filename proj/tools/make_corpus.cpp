// Writes the shipped scenario files: doubles of holed grids, c = sheet swap
// unless noted. Usage: dtwist_make_corpus <dir>
#include <fstream>
#include <iostream>
#include <string>

#include "dtwist/surface/format.hpp"
#include "dtwist/surface/generators.hpp"

using namespace dtwist::surface;

namespace {

struct Spec {
    std::string name;
    DoubledSurface d;
    std::string s, q, n;
};

SurfaceFile assemble(const Spec& sp, const std::string& comment_free_name) {
    SurfaceFile f;
    f.name = comment_free_name;
    f.surface = sp.d.surface;
    f.curves = {curve_from_words(f.surface, "S", sp.s), curve_from_words(f.surface, "Q", sp.q),
                curve_from_words(f.surface, "N", sp.n)};
    auto c = sp.d.reflection;
    c.name = "c";
    f.involutions = {c};
    f.scenario = {{"S", "S"}, {"c", "c"}, {"Q", "Q"}, {"N", "N"}};
    return f;
}

// x -> 3 - x on the periodic 3 x 3 grid, on both sheets: keeps each sheet.
CellInvolution mirror(const CombinatorialSurface& x) {
    std::string cycles;
    for (int j = 0; j < 3; ++j) {
        for (int i = 0; i < 3; ++i) {
            const int hi = (2 - i + 3) % 3, vi = (3 - i) % 3;
            for (const std::string sheet : {"t.", "b."}) {
                auto name = [&](const std::string& e) {
                    return x.find_edge(sheet + e) ? sheet + e : e;
                };
                const auto h = name(grid_edge('h', i, j)), h2 = name(grid_edge('h', hi, j));
                const auto v = name(grid_edge('v', i, j)), v2 = name(grid_edge('v', vi, j));
                if (i <= hi) cycles += "(" + h + " " + h2 + "') ";
                if (i < vi) cycles += "(" + v + " " + v2 + ") ";
            }
        }
    }
    return involution_from_cycles(x, "c", cycles);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: dtwist_make_corpus <dir>\n";
        return 2;
    }
    const std::string dir = argv[1];
    auto write = [&](const std::string& file, const std::string& header, const SurfaceFile& f) {
        std::ofstream(dir + "/" + file) << header << format_surface_file(f);
    };

    Spec g2{"genus2", double_surface(grid_surface(3, 3, {{1, 1}}, true)), "h1_1 v2_1 h1_2' v1_1'",
            "t.h2_1 t.h0_1 b.h0_1' b.h2_1'", "t.h2_2 t.h0_2 b.h0_2' b.h2_2'"};
    write("genus2.surf",
          "# Genus 2 as the double of a holed torus. S is the hole boundary, separating;\n"
          "# c swaps the sheets and so the two sides of S. Q and N cross S twice each.\n",
          assemble(g2, "genus2"));

    auto sides = assemble(g2, "genus2_sides");
    sides.involutions = {mirror(sides.surface)};
    write("genus2_sides.surf",
          "# Same surface and curves; c is the mirror x -> 3 - x on each sheet and keeps both sides of S.\n", sides);

    Spec t{"torus", double_surface(grid_surface(3, 3, {{1, 1}}, false)), "t.h0_1 b.h0_1'",
           "h0_0 h1_0 h2_0 v3_0 v3_1 v3_2 h2_3' h1_3' h0_3' v0_2' v0_1' v0_0'", "h1_1 v2_1 h1_2' v1_1'"};
    write("torus.surf",
          "# Torus as the double of an annulus. S crosses from sheet to sheet;\n"
          "# Q (outer boundary) and N (inner boundary) are isotopic and cross S once.\n",
          assemble(t, "torus"));

    Spec g3{"genus3", double_surface(grid_surface(8, 3, {{1, 1}, {4, 1}, {6, 1}}, false)),
            "t.v3_0 t.v3_1 t.v3_2 b.v3_2' b.v3_1' b.v3_0'", "t.h2_1 t.h3_1 b.h3_1' b.h2_1'",
            "t.h2_2 t.h3_2 b.h3_2' b.h2_2'"};
    write("genus3.surf",
          "# Genus 3 as the double of a disk with three holes. S separates a genus-1 side\n"
          "# from a genus-2 side; c swaps the sheets and keeps both sides.\n",
          assemble(g3, "genus3"));
    return 0;
}
