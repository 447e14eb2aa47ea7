#pragma once

#include <string>
#include <vector>

namespace gfsuper {

// Cohomology dimensions by degree. `empty_space` marks the table of the
// empty space (no classes at all, not even degree 0), which suspension
// treats specially.
struct BettiTable {
    std::vector<long> dims;  // index = degree, size range+1 unless empty_space
    int range = -1;          // highest computed degree
    bool empty_space = false;

    long at(int p) const {
        return (p >= 0 && p < static_cast<int>(dims.size())) ? dims[p] : 0;
    }
    bool operator==(const BettiTable&) const = default;

    static BettiTable of_dims(std::vector<long> d) {
        BettiTable b;
        b.range = static_cast<int>(d.size()) - 1;
        b.dims = std::move(d);
        return b;
    }
    static BettiTable empty(int range = -1) {
        BettiTable b;
        b.range = range;
        b.empty_space = true;
        return b;
    }
    std::string str() const;
};

}  // namespace gfsuper
