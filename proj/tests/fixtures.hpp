#pragma once

#include "starkit/polygon.hpp"

namespace starkit::fixtures {

// Unit square, convex.
inline GeodesicPolygon square() {
    return {Model::Euclidean, {{0, 0}, {1, 0}, {1, 1}, {0, 1}}};
}

// L: base [0,2]x[0,1] plus column [0,1]x[0,2]; reflex corner at (1,1);
// kernel is the unit square.
inline GeodesicPolygon lshape() {
    return {Model::Euclidean, {{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}};
}

// U: two prongs around the slot [1,2]x(1,2]; kernel empty.
inline GeodesicPolygon ushape() {
    return {Model::Euclidean,
            {{0, 0}, {3, 0}, {3, 2}, {2, 2}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}};
}

// Hyperbolic triangle in the Klein disk, symmetric about the u-axis.
inline GeodesicPolygon htri() {
    return {Model::HyperbolicKlein, {{0.6, 0.0}, {-0.4, 0.5}, {-0.4, -0.5}}};
}

}  // namespace starkit::fixtures
