#pragma once

#include <stdexcept>
#include <string>

namespace homcalc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// d_out * d_in != 0: the input is not a complex.
struct CompositionNonzeroError : Error {
    using Error::Error;
};

// A dimension changed when recomputed with a larger monomial cutoff.
struct UnstableTruncationError : Error {
    using Error::Error;
};

// Differentials do not square to zero, entries have wrong bidegree, or a
// truncated complex is too shallow for the requested range.
struct MalformedComplexError : Error {
    using Error::Error;
};

// Degreewise lifting ran out of resolution depth.
struct LiftFailedError : Error {
    using Error::Error;
};

struct MalformedChainMapError : Error {
    using Error::Error;
};

struct IncompatibleLaddersError : Error {
    using Error::Error;
};

// A mutation produced a Gram matrix that is not unitriangular.
struct TriangularityLostError : Error {
    using Error::Error;
};

struct RulingMismatchError : Error {
    using Error::Error;
};

struct MissingRowError : Error {
    using Error::Error;
};

struct NotAugmentedError : Error {
    using Error::Error;
};

// Shipped table data does not match its frozen checksum.
struct DataChecksumError : Error {
    using Error::Error;
};

// divisor_ext with strict=true met two graded pieces in adjacent degrees.
struct SplitUndeterminedError : Error {
    using Error::Error;
};

}  // namespace homcalc
