#pragma once

#include <vector>

namespace betaspec {

// Finite atomic measure; atoms sorted ascending by location.
struct PointMeasure {
    struct Atom {
        double location;
        double mass;
    };
    std::vector<Atom> atoms;

    double total_mass() const {
        double s = 0.0;
        for (const Atom& a : atoms)
            s += a.mass;
        return s;
    }
};

} // namespace betaspec
