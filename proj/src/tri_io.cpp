#include <sstream>

#include "fpg/triangulation.hpp"

namespace fpg {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
    throw TriangulationError("tri line " + std::to_string(line) + ": " + what);
}

int parse_int(const std::string& s, int line) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) fail(line, "expected a number, got '" + s + "'");
    if (s.size() > 6) fail(line, "number too large: " + s);
    return std::stoi(s);
}

}  // namespace

Triangulation parse_tri(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0, size = -1;
    std::vector<std::array<std::optional<Gluing>, 4>> rows;
    std::vector<char> seen;

    while (std::getline(in, raw)) {
        ++line_no;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::string head;
        if (!(ls >> head)) continue;

        if (size < 0) {
            std::string value, extra;
            if (head != "tetrahedra:" || !(ls >> value) || (ls >> extra)) fail(line_no, "expected 'tetrahedra: N'");
            size = parse_int(value, line_no);
            rows.resize(size);
            seen.assign(size, 0);
            continue;
        }

        if (head.size() < 2 || head.back() != ':') fail(line_no, "expected 'i: g0 g1 g2 g3'");
        int tet = parse_int(head.substr(0, head.size() - 1), line_no);
        if (tet >= size) fail(line_no, "tetrahedron index out of range");
        if (seen[tet]) fail(line_no, "tetrahedron " + std::to_string(tet) + " listed twice");
        seen[tet] = 1;
        for (int f = 0; f < 4; ++f) {
            std::string g;
            if (!(ls >> g)) fail(line_no, "expected four gluing entries");
            if (g == "-") continue;
            auto colon = g.find(':');
            if (colon == std::string::npos) fail(line_no, "gluing entry must be '-' or 't:abcd'");
            int target = parse_int(g.substr(0, colon), line_no);
            if (target >= size) fail(line_no, "target tetrahedron out of range");
            Perm4 p;
            try {
                p = Perm4::parse(g.substr(colon + 1));
            } catch (const std::invalid_argument& e) {
                fail(line_no, e.what());
            }
            rows[tet][f] = Gluing{target, p};
        }
        std::string extra;
        if (ls >> extra) fail(line_no, "trailing text '" + extra + "'");
    }
    if (size < 0) throw TriangulationError("tri: missing 'tetrahedra: N' header");
    for (int tet = 0; tet < size; ++tet)
        if (!seen[tet]) throw TriangulationError("tri: no line for tetrahedron " + std::to_string(tet));

    Triangulation t(size);
    for (int tet = 0; tet < size; ++tet) {
        for (int f = 0; f < 4; ++f) {
            const auto& g = rows[tet][f];
            if (!g) continue;
            int tf = g->perm[f];
            if (g->tet == tet && tf == f)
                throw TriangulationError("tri: face " + std::to_string(f) + " of tetrahedron " + std::to_string(tet) +
                                         " is glued to itself");
            const auto& back = rows[g->tet][tf];
            if (!back || back->tet != tet || back->perm != g->perm.inverse())
                throw TriangulationError("tri: gluing of tetrahedron " + std::to_string(tet) + " face " +
                                         std::to_string(f) + " is not reciprocated");
            if (!t.is_glued(tet, f)) t.glue(tet, f, g->tet, g->perm);
        }
    }
    return t;
}

std::string serialize_tri(const Triangulation& t) {
    std::string out = "tetrahedra: " + std::to_string(t.size()) + "\n";
    for (int tet = 0; tet < t.size(); ++tet) {
        out += std::to_string(tet) + ":";
        for (int f = 0; f < 4; ++f) {
            const auto& g = t.gluing(tet, f);
            out += ' ';
            out += g ? std::to_string(g->tet) + ":" + g->perm.str() : "-";
        }
        out += '\n';
    }
    return out;
}

}  // namespace fpg
