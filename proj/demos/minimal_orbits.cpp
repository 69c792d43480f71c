// Multiplicity at 0 of the minimal nilpotent orbit closure, for a few types.

#include "kumarp/kumarp.hpp"

#include <iostream>

int main() {
    using namespace kumarp;
    for (const char* tag : {"A1", "A2", "C2", "C3", "G2"}) {
        const auto z = minimal_orbit_multiplicity(gcm_from_tag(tag));
        std::cout << tag << " (dim " << z.dim << "): " << render(z.mult, z.names) << "\n";
    }
}
