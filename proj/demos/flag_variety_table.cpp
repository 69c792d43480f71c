// Prints f_{y,w} for every y below a chosen w, with the smoothness flags.
//
//   flag_variety_table B2 2,1,2

#include "kumarp/kumarp.hpp"

#include <iostream>

int main(int argc, char** argv) {
    using namespace kumarp;
    const std::string tag = argc > 1 ? argv[1] : "B2";
    const std::string word = argc > 2 ? argv[2] : "2,1,2";
    try {
        const WeylGroup group(gcm_from_tag(tag));
        const auto w = group.element_from_word(parse_word(word));
        const MultiplicityTable table(group, w);
        const SchubertLocus locus(group, table);
        const auto names = default_names(group.rank(), "a");

        std::cout << "X_w for w = " << format_word(w.word) << " in " << tag << "\n";
        for (const auto& r : table.reports()) {
            std::cout << "  y = (" << format_word(r.y.word) << ")  e = " << render(r.value, names);
            std::cout << "  rs=" << locus.rationally_smooth_at(r.y) << " smooth=" << locus.smooth_at(r.y) << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
