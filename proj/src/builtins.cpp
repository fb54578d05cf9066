#include <map>

#include "fpg/triangulation.hpp"

namespace fpg {

namespace {

// Gluing tables found by exhaustive search over closed one- and two-tetrahedron
// gluings, selected by first homology and face pairing graph shape.
const std::map<std::string, std::string>& tables() {
    static const std::map<std::string, std::string> t = {
        // Both face pairs snapped shut about a degree-one edge.
        {"S3_1", "tetrahedra: 1\n0: 0:1023 0:1023 0:0132 0:0132\n"},
        // Two faces joined about a degree-two edge; the remaining pair identified with a half twist.
        {"RP3_2", "tetrahedra: 2\n0: 1:0123 1:0123 1:1032 1:1032\n1: 0:0123 0:0123 0:1032 0:1032\n"},
        // Triangular pillow from three identity gluings; front and back identified with a third twist.
        {"L31_2", "tetrahedra: 2\n0: 1:0123 1:0123 1:0123 1:1203\n1: 0:0123 0:0123 0:0123 0:2013\n"},
        // Loop at each tetrahedron plus a double edge between them.
        {"S2xS1_2", "tetrahedra: 2\n0: 0:1230 0:3012 1:1203 1:1203\n1: 0:2013 1:3201 1:2310 0:2013\n"},
    };
    return t;
}

}  // namespace

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = {"S3_1", "RP3_2", "L31_2", "S2xS1_2"};
    return names;
}

Triangulation builtin(const std::string& name) {
    auto it = tables().find(name);
    if (it == tables().end()) throw std::invalid_argument("unknown builtin '" + name + "'");
    return parse_tri(it->second);
}

}  // namespace fpg
