#pragma once

#include <stdexcept>
#include <string>

namespace grd {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// degree_stats on a graph with no vertices
struct EmptyGraph : Error {
    using Error::Error;
};

// class-F construction requires a 3-regular source graph
struct NotCubic : Error {
    using Error::Error;
};

// cotree construction hit a connected, co-connected subgraph with n > 1
struct NotACograph : Error {
    using Error::Error;
};

// a backward witness extraction produced a set that fails verification;
// in tests this is how a falsified reduction claim surfaces
struct ExtractionFailed : Error {
    using Error::Error;
};

// generator called with out-of-range parameters
struct ParameterError : Error {
    using Error::Error;
};

// malformed input file
struct ParseError : Error {
    using Error::Error;
};

} // namespace grd
