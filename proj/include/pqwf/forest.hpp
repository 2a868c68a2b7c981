#pragma once

#include <cstdint>

#include "pqwf/classifiers.hpp"
#include "pqwf/rng.hpp"

namespace pqwf {

/// CART node. Internal nodes route x[feature] <= threshold to `left`,
/// otherwise to `right`; leaves predict `leaf`.
struct TreeNode {
    bool is_leaf = true;
    int feature = -1;
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    DisturbanceClass leaf = DisturbanceClass::Swell;
};

struct DecisionTree {
    std::vector<TreeNode> nodes; // root at index 0, children depth-first (left first)
};

struct RandomForestModel {
    std::vector<DecisionTree> trees;
    std::vector<std::vector<std::size_t>> oob_indices; // per tree, ascending row ids
    int n_features_per_split = 2;
    int n_trees = 0;
    std::uint64_t seed = 0;
    bool bootstrap = true;
};

struct OobResult {
    double error = 0.0;        // misclassified fraction over voted rows
    std::size_t evaluated = 0; // rows that were OOB for at least one tree
    std::size_t skipped = 0;   // rows in no tree's OOB set
};

double gini_impurity(const std::array<int, kNumClasses>& counts, int total);

/// Greedy CART growth. At each node `max_features` of the five features are
/// sampled without replacement from `rng`; the split minimizing weighted
/// Gini impurity over midpoints of sorted distinct values wins (ties break
/// toward the lower feature index, then the lower threshold). Growth stops
/// on purity, fewer than 2 rows, or no impurity reduction.
DecisionTree tree_train(const LabeledDataset& train, int max_features, RngStream& rng);

DisturbanceClass tree_predict(const DecisionTree& tree, const FeatureArray& x);

/// Each tree trains on an N-row bootstrap draw from its own stream keyed by
/// (seed, tree index); rows absent from the draw form the tree's OOB set.
/// `bootstrap = false` trains every tree on the full data (test hook).
RandomForestModel rf_train(const LabeledDataset& train, int n_trees = 100,
                           int max_features = 2, std::uint64_t seed = 0,
                           bool bootstrap = true);

/// Majority vote over trees; ties go to the smallest class code.
DisturbanceClass rf_predict(const RandomForestModel& model, const FeatureArray& x);

/// Per-row majority vote restricted to trees for which the row is OOB.
OobResult rf_oob_error(const RandomForestModel& model, const LabeledDataset& train);

} // namespace pqwf
