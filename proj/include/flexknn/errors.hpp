#ifndef FLEXKNN_ERRORS_HPP
#define FLEXKNN_ERRORS_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace flexknn {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class EmptyDataset : public Error {
public:
    EmptyDataset() : Error("dataset is empty") {}
};

class DimensionMismatch : public Error {
public:
    DimensionMismatch(std::size_t expected, std::size_t actual)
        : Error("dimension mismatch: expected " + std::to_string(expected) + ", got " +
                std::to_string(actual)),
          expected(expected),
          actual(actual) {}

    DimensionMismatch(std::size_t expected, std::size_t actual, std::size_t sample_index)
        : Error("dimension mismatch at sample " + std::to_string(sample_index) + ": expected " +
                std::to_string(expected) + ", got " + std::to_string(actual)),
          expected(expected),
          actual(actual),
          sample_index(sample_index) {}

    std::size_t expected;
    std::size_t actual;
    std::optional<std::size_t> sample_index;
};

class NonFiniteValue : public Error {
public:
    NonFiniteValue(std::size_t sample_index, std::size_t column)
        : Error("non-finite feature value at sample " + std::to_string(sample_index) +
                ", column " + std::to_string(column)),
          sample_index(sample_index),
          column(column) {}

    std::size_t sample_index;
    std::size_t column;
};

class KExceedsN : public Error {
public:
    KExceedsN(std::size_t k, std::size_t n)
        : Error("k = " + std::to_string(k) + " exceeds training-set size N = " + std::to_string(n)),
          k(k),
          n(n) {}

    std::size_t k;
    std::size_t n;
};

class EmptyNeighborSet : public Error {
public:
    EmptyNeighborSet() : Error("cannot tally votes over an empty neighbor set") {}
};

class NoEstimableClass : public Error {
public:
    NoEstimableClass() : Error("no class has at least two samples; d_max cannot be estimated") {}
};

class EmptyTestSet : public Error {
public:
    EmptyTestSet() : Error("test set is empty") {}
};

class EmptyGrid : public Error {
public:
    EmptyGrid() : Error("d_max grid is empty") {}
};

class UnknownHeldOutClass : public Error {
public:
    explicit UnknownHeldOutClass(const std::string& name)
        : Error("held-out class '" + name + "' is not in the training set"), name(name) {}

    std::string name;
};

class AllClassesHeldOut : public Error {
public:
    AllClassesHeldOut() : Error("holding out all classes leaves nothing to train on") {}
};

class InvalidSpec : public Error {
public:
    explicit InvalidSpec(const std::string& what) : Error("invalid scenario spec: " + what) {}
};

namespace detail {

inline std::string at_line(std::string_view source, std::size_t line) {
    std::string where = source.empty() ? "line " + std::to_string(line)
                                       : std::string(source) + ":" + std::to_string(line);
    return where;
}

}  // namespace detail

class MalformedHeader : public Error {
public:
    explicit MalformedHeader(const std::string& what, std::string_view source = "")
        : Error(detail::at_line(source, 1) + ": malformed header: " + what) {}
};

class RaggedRow : public Error {
public:
    RaggedRow(std::size_t line, std::size_t expected_fields, std::size_t actual_fields,
              std::string_view source = "")
        : Error(detail::at_line(source, line) + ": ragged row: expected " +
                std::to_string(expected_fields) + " fields, got " + std::to_string(actual_fields)),
          line(line),
          expected_fields(expected_fields),
          actual_fields(actual_fields) {}

    std::size_t line;
    std::size_t expected_fields;
    std::size_t actual_fields;
};

class NonNumericFeature : public Error {
public:
    NonNumericFeature(std::size_t line, std::size_t column, std::string_view source = "")
        : Error(detail::at_line(source, line) + ": column " + std::to_string(column) +
                ": feature value is not numeric"),
          line(line),
          column(column) {}

    std::size_t line;
    std::size_t column;
};

class MissingLabel : public Error {
public:
    explicit MissingLabel(std::size_t line, std::string_view source = "")
        : Error(detail::at_line(source, line) + ": row has no label"), line(line) {}

    std::size_t line;
};

}  // namespace flexknn

#endif
