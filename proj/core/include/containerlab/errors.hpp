#pragma once

#include <stdexcept>
#include <string>

namespace clab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define CLAB_DEFINE_ERROR(Name)            \
    struct Name : Error {                  \
        using Error::Error;                \
    }

CLAB_DEFINE_ERROR(TooLargeError);            // instance exceeds a feasibility cap
CLAB_DEFINE_ERROR(NotC4FreeError);
CLAB_DEFINE_ERROR(NotIndependentError);
CLAB_DEFINE_ERROR(NotReplayableError);
CLAB_DEFINE_ERROR(FingerprintOverflowError);
CLAB_DEFINE_ERROR(UnsupportedFieldOrderError);
CLAB_DEFINE_ERROR(EmptyVertexSetError);
CLAB_DEFINE_ERROR(EmptySetError);
CLAB_DEFINE_ERROR(ZeroAverageDegreeError);
CLAB_DEFINE_ERROR(EmptyColumnError);
CLAB_DEFINE_ERROR(TooSmallSetError);
CLAB_DEFINE_ERROR(TooSparseError);
CLAB_DEFINE_ERROR(NotSubgraphError);
CLAB_DEFINE_ERROR(DeltaOutOfRangeError);
CLAB_DEFINE_ERROR(InvalidConfigError);
CLAB_DEFINE_ERROR(InvalidArgumentError);

#undef CLAB_DEFINE_ERROR

}  // namespace clab
