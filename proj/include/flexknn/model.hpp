#ifndef FLEXKNN_MODEL_HPP
#define FLEXKNN_MODEL_HPP

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "flexknn/errors.hpp"

/**
 * @file model.hpp
 *
 * Shared data model: feature vectors, labels, training sets and
 * classification outcomes.
 */

namespace flexknn {

/// An n-dimensional real-valued measurement.
using FeatureVector = std::vector<double>;

/// A class with a contiguous numeric id (1..M within one training set) and a
/// human-readable name such as a room identifier.
struct ClassLabel {
    int id = 0;
    std::string name;

    friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

/// A feature vector tagged with its class name. Numeric ids are assigned when
/// a TrainingSet is built, in first-appearance order of the names.
struct LabeledSample {
    FeatureVector vector;
    std::string label;
};

/**
 * @brief Immutable database of N labeled feature vectors spanning M classes.
 *
 * Vectors are stored contiguously; the class registry maps names to ids 1..M
 * in first-appearance order, which gives every consumer a deterministic total
 * order on classes. Instances are immutable after construction and safe to
 * share across concurrent readers.
 */
class TrainingSet {
public:
    /// Validates and ingests the samples. Throws EmptyDataset,
    /// DimensionMismatch (with the offending sample index) or NonFiniteValue.
    explicit TrainingSet(const std::vector<LabeledSample>& samples) {
        if (samples.empty()) {
            throw EmptyDataset();
        }
        dim_ = samples.front().vector.size();
        if (dim_ == 0) {
            throw std::invalid_argument("feature dimension must be at least 1");
        }

        values_.reserve(samples.size() * dim_);
        label_ids_.reserve(samples.size());
        std::unordered_map<std::string, int> ids;

        for (std::size_t i = 0; i < samples.size(); ++i) {
            const auto& s = samples[i];
            if (s.vector.size() != dim_) {
                throw DimensionMismatch(dim_, s.vector.size(), i);
            }
            for (std::size_t j = 0; j < dim_; ++j) {
                if (!std::isfinite(s.vector[j])) {
                    throw NonFiniteValue(i, j);
                }
                values_.push_back(s.vector[j]);
            }
            auto [it, inserted] = ids.emplace(s.label, static_cast<int>(classes_.size()) + 1);
            if (inserted) {
                classes_.push_back(ClassLabel{it->second, s.label});
                counts_.push_back(0);
            }
            label_ids_.push_back(it->second);
            ++counts_[static_cast<std::size_t>(it->second) - 1];
        }
    }

    /// Number of samples N.
    std::size_t size() const { return label_ids_.size(); }

    /// Feature dimension n.
    std::size_t dimension() const { return dim_; }

    /// Number of classes M.
    std::size_t num_classes() const { return classes_.size(); }

    /// Class registry in id order (ids 1..M).
    const std::vector<ClassLabel>& classes() const { return classes_; }

    const ClassLabel& class_by_id(int id) const { return classes_.at(static_cast<std::size_t>(id) - 1); }

    /// Looks a class up by name; nullptr when absent.
    const ClassLabel* find_class(std::string_view name) const {
        for (const auto& c : classes_) {
            if (c.name == name) {
                return &c;
            }
        }
        return nullptr;
    }

    /// Sample count N_l of the class with the given id.
    std::size_t class_count(int id) const { return counts_.at(static_cast<std::size_t>(id) - 1); }

    std::span<const double> vector(std::size_t i) const {
        return {values_.data() + i * dim_, dim_};
    }

    int label_id(std::size_t i) const { return label_ids_[i]; }

    const ClassLabel& label(std::size_t i) const { return class_by_id(label_ids_[i]); }

    /// Materializes the samples in storage order (useful for filtering and
    /// round-trip checks).
    std::vector<LabeledSample> samples() const {
        std::vector<LabeledSample> out;
        out.reserve(size());
        for (std::size_t i = 0; i < size(); ++i) {
            auto v = vector(i);
            out.push_back(LabeledSample{FeatureVector(v.begin(), v.end()), label(i).name});
        }
        return out;
    }

private:
    std::size_t dim_ = 0;
    std::vector<double> values_;      // N * dim_, row-major
    std::vector<int> label_ids_;      // per sample, 1..M
    std::vector<ClassLabel> classes_;
    std::vector<std::size_t> counts_; // per class, indexed by id - 1
};

/// Builds a TrainingSet from labeled samples.
inline TrainingSet build_training_set(const std::vector<LabeledSample>& samples) {
    return TrainingSet(samples);
}

/// One entry of a neighbor query result.
struct Neighbor {
    std::size_t index;  // into the TrainingSet
    double distance;

    friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

/// Orders neighbors by (distance, index); the tie rule makes every neighbor
/// query deterministic.
inline bool neighbor_less(const Neighbor& a, const Neighbor& b) {
    return a.distance < b.distance || (a.distance == b.distance && a.index < b.index);
}

/// The ordered neighbors found by one query; the cardinality is the FlexKNN's
/// emergent K.
struct NeighborSet {
    std::vector<Neighbor> entries;

    std::size_t k() const { return entries.size(); }
};

enum class RejectionReason {
    NoNeighborsWithinRadius,  // K = 0
    BelowMinK,                // 0 < K < configured minimum
};

/// Result of classifying one query: either a label with its vote evidence, or
/// an explicit rejection. `k_found` is the number of neighbors that were
/// within reach (for standard KNN it equals the configured k).
struct ClassificationOutcome {
    std::optional<ClassLabel> label;
    int k_found = 0;
    std::vector<double> votes;  // per class, indexed by id - 1; empty when rejected
    std::optional<RejectionReason> rejection_reason;

    bool is_labeled() const { return label.has_value(); }

    friend bool operator==(const ClassificationOutcome&, const ClassificationOutcome&) = default;
};

}  // namespace flexknn

#endif
