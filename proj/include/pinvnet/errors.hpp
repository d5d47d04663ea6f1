#pragma once

#include <stdexcept>

namespace pinvnet {

struct LengthMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ZeroRowError : std::domain_error {
    using std::domain_error::domain_error;
};

struct DimensionMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnsupportedInverseError : std::domain_error {
    using std::domain_error::domain_error;
};

struct MalformedRowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyDatasetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LabelOutOfRangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct DegenerateSplitError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct EmptyHistoryError : std::logic_error {
    using std::logic_error::logic_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pinvnet
