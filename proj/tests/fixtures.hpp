#pragma once

#include <string>

#include "orthoradial/io.hpp"
#include "orthoradial/representation.hpp"

namespace orthoradial::fixtures {

// Simple 4-cycle a,b,c,d around the center, all angles 180: a straight
// horizontal ring, valid by construction.
inline OrthoRadialRep ring4() {
    return parse_instance_text(R"({
        "vertices": [0, 1, 2, 3],
        "edges": [[0,1],[1,2],[2,3],[3,0]],
        "rotations": {"0": [3,0], "1": [0,1], "2": [1,2], "3": [2,3]},
        "angles": {"0:+":180,"0:-":180,"1:+":180,"1:-":180,
                   "2:+":180,"2:-":180,"3:+":180,"3:-":180},
        "outer": "0:-",
        "central": "0:+",
        "reference": "0:+"
    })");
}

// The canonical invalid instance: 4-cycle whose inner walk turns
// +1,0,-1,0, giving the essential cycle labels (0,1,1,0), a decreasing
// cycle. Vertices 0=a, 1=b, 2=c, 3=d; reference dart a->b.
inline OrthoRadialRep spiral4() {
    return parse_instance_text(R"({
        "vertices": [0, 1, 2, 3],
        "edges": [[0,1],[1,2],[2,3],[3,0]],
        "rotations": {"0": [3,0], "1": [0,1], "2": [1,2], "3": [2,3]},
        "angles": {"0:+":90,"0:-":180,"1:+":180,"1:-":270,
                   "2:+":270,"2:-":180,"3:+":180,"3:-":90},
        "outer": "0:-",
        "central": "0:+",
        "reference": "0:+"
    })");
}

// A 4-cycle that does not wind around the center: its inner face is
// regular and the single other face is both outer and central.
inline OrthoRadialRep offcenter_square() {
    return parse_instance_text(R"({
        "vertices": [0, 1, 2, 3],
        "edges": [[0,1],[1,2],[2,3],[3,0]],
        "rotations": {"0": [3,0], "1": [0,1], "2": [1,2], "3": [2,3]},
        "angles": {"0:+":90,"0:-":270,"1:+":90,"1:-":270,
                   "2:+":90,"2:-":270,"3:+":90,"3:-":270},
        "outer": "0:-",
        "central": "0:-",
        "reference": "0:+"
    })");
}

inline std::string ring4_text() {
    return serialize_instance(ring4()).dump(2) + "\n";
}

}  // namespace orthoradial::fixtures
