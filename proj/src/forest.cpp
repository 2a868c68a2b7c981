#include "pqwf/forest.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pqwf/errors.hpp"

namespace pqwf {

double gini_impurity(const std::array<int, kNumClasses>& counts, int total) {
    if (total <= 0) return 0.0;
    double sum = 0.0;
    for (int c : counts) {
        const double p = static_cast<double>(c) / total;
        sum += p * p;
    }
    return 1.0 - sum;
}

namespace {

struct SplitChoice {
    bool found = false;
    int feature = -1;
    double threshold = 0.0;
    double weighted_gini = 0.0;
};

class TreeBuilder {
public:
    TreeBuilder(const LabeledDataset& data, int max_features, RngStream& rng)
        : data_(data), max_features_(max_features), rng_(rng) {}

    DecisionTree build() {
        std::vector<std::size_t> idx(data_.size());
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        grow(idx);
        return DecisionTree{std::move(nodes_)};
    }

private:
    std::array<int, kNumClasses> count_classes(const std::vector<std::size_t>& idx) const {
        std::array<int, kNumClasses> counts{};
        for (std::size_t i : idx)
            ++counts[static_cast<std::size_t>(class_code(data_.y[i]) - 1)];
        return counts;
    }

    int make_leaf(const std::array<int, kNumClasses>& counts) {
        TreeNode node;
        node.is_leaf = true;
        node.leaf = majority_label(counts);
        nodes_.push_back(node);
        return static_cast<int>(nodes_.size() - 1);
    }

    // Sample max_features feature indices without replacement, returned in
    // ascending order so the candidate scan breaks gini ties toward the
    // lower feature index.
    std::vector<int> sample_features() {
        std::array<int, kNumFeatures> pool = {0, 1, 2, 3, 4};
        const int m = std::min(max_features_, kNumFeatures);
        for (int i = 0; i < m; ++i) {
            const auto j = i + static_cast<int>(rng_.uniform_index(
                               static_cast<std::uint64_t>(kNumFeatures - i)));
            std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
        }
        std::vector<int> features(pool.begin(), pool.begin() + m);
        std::sort(features.begin(), features.end());
        return features;
    }

    SplitChoice best_split(const std::vector<std::size_t>& idx,
                           const std::array<int, kNumClasses>& counts) {
        const int n = static_cast<int>(idx.size());
        SplitChoice best;
        std::vector<std::size_t> sorted = idx;
        for (int f : sample_features()) {
            const auto fu = static_cast<std::size_t>(f);
            std::sort(sorted.begin(), sorted.end(), [&](std::size_t a, std::size_t b) {
                return data_.x[a][fu] < data_.x[b][fu];
            });
            std::array<int, kNumClasses> left{};
            std::array<int, kNumClasses> right = counts;
            for (int i = 0; i + 1 < n; ++i) {
                const auto row = static_cast<std::size_t>(i);
                const auto cls = static_cast<std::size_t>(
                    class_code(data_.y[sorted[row]]) - 1);
                ++left[cls];
                --right[cls];
                const double lo = data_.x[sorted[row]][fu];
                const double hi = data_.x[sorted[row + 1]][fu];
                if (lo == hi) continue;
                const double mid = (lo + hi) / 2.0;
                if (!(mid < hi)) continue; // adjacent doubles; midpoint unusable
                const int nl = i + 1;
                const int nr = n - nl;
                const double weighted =
                    (nl * gini_impurity(left, nl) + nr * gini_impurity(right, nr)) / n;
                if (!best.found || weighted < best.weighted_gini) {
                    best = {true, f, mid, weighted};
                }
            }
        }
        return best;
    }

    int grow(const std::vector<std::size_t>& idx) {
        const auto counts = count_classes(idx);
        const int n = static_cast<int>(idx.size());
        const int top = *std::max_element(counts.begin(), counts.end());
        if (top == n || n < 2) return make_leaf(counts);

        const SplitChoice split = best_split(idx, counts);
        // zero-gain splits are accepted (XOR-style layouts resolve deeper
        // down); a node is a leaf only when no usable threshold exists
        if (!split.found || split.weighted_gini > gini_impurity(counts, n))
            return make_leaf(counts);

        std::vector<std::size_t> left_idx, right_idx;
        for (std::size_t i : idx) {
            if (data_.x[i][static_cast<std::size_t>(split.feature)] <= split.threshold)
                left_idx.push_back(i);
            else
                right_idx.push_back(i);
        }

        const int node_id = static_cast<int>(nodes_.size());
        TreeNode node;
        node.is_leaf = false;
        node.feature = split.feature;
        node.threshold = split.threshold;
        nodes_.push_back(node);
        const int left_id = grow(left_idx);
        const int right_id = grow(right_idx);
        nodes_[static_cast<std::size_t>(node_id)].left = left_id;
        nodes_[static_cast<std::size_t>(node_id)].right = right_id;
        return node_id;
    }

    const LabeledDataset& data_;
    int max_features_;
    RngStream& rng_;
    std::vector<TreeNode> nodes_;
};

} // namespace

DecisionTree tree_train(const LabeledDataset& train, int max_features, RngStream& rng) {
    if (train.empty()) throw ShapeError("tree_train: empty training set");
    if (max_features < 1 || max_features > kNumFeatures)
        throw ParameterError("tree_train: max_features must be in [1, 5]");
    return TreeBuilder(train, max_features, rng).build();
}

DisturbanceClass tree_predict(const DecisionTree& tree, const FeatureArray& x) {
    if (tree.nodes.empty()) throw ShapeError("tree_predict: empty tree");
    int i = 0;
    while (!tree.nodes[static_cast<std::size_t>(i)].is_leaf) {
        const TreeNode& node = tree.nodes[static_cast<std::size_t>(i)];
        i = x[static_cast<std::size_t>(node.feature)] <= node.threshold ? node.left
                                                                        : node.right;
    }
    return tree.nodes[static_cast<std::size_t>(i)].leaf;
}

RandomForestModel rf_train(const LabeledDataset& train, int n_trees, int max_features,
                           std::uint64_t seed, bool bootstrap) {
    if (train.empty()) throw ShapeError("rf_train: empty training set");
    if (n_trees < 1) throw ParameterError("rf_train: n_trees must be >= 1");
    if (max_features < 1 || max_features > kNumFeatures)
        throw ParameterError("rf_train: max_features must be in [1, 5]");

    const std::size_t n = train.size();
    RandomForestModel model;
    model.n_trees = n_trees;
    model.n_features_per_split = max_features;
    model.seed = seed;
    model.bootstrap = bootstrap;
    model.trees.reserve(static_cast<std::size_t>(n_trees));
    model.oob_indices.resize(static_cast<std::size_t>(n_trees));

    for (int t = 0; t < n_trees; ++t) {
        RngStream rng = RngStream::derive(seed, static_cast<std::uint64_t>(t), 0);
        LabeledDataset bag;
        if (bootstrap) {
            std::vector<bool> in_bag(n, false);
            bag.x.reserve(n);
            bag.y.reserve(n);
            for (std::size_t i = 0; i < n; ++i) {
                const std::size_t pick = rng.uniform_index(n);
                in_bag[pick] = true;
                bag.x.push_back(train.x[pick]);
                bag.y.push_back(train.y[pick]);
            }
            for (std::size_t i = 0; i < n; ++i)
                if (!in_bag[i]) model.oob_indices[static_cast<std::size_t>(t)].push_back(i);
        } else {
            bag = train;
        }
        model.trees.push_back(tree_train(bag, max_features, rng));
    }
    return model;
}

DisturbanceClass rf_predict(const RandomForestModel& model, const FeatureArray& x) {
    if (model.trees.empty()) throw ShapeError("rf_predict: untrained model");
    std::array<int, kNumClasses> votes{};
    for (const DecisionTree& tree : model.trees)
        ++votes[static_cast<std::size_t>(class_code(tree_predict(tree, x)) - 1)];
    return majority_label(votes);
}

OobResult rf_oob_error(const RandomForestModel& model, const LabeledDataset& train) {
    if (model.trees.empty()) throw ShapeError("rf_oob_error: untrained model");
    OobResult result;
    std::size_t wrong = 0;
    for (std::size_t i = 0; i < train.size(); ++i) {
        std::array<int, kNumClasses> votes{};
        bool voted = false;
        for (std::size_t t = 0; t < model.trees.size(); ++t) {
            const auto& oob = model.oob_indices[t];
            if (std::binary_search(oob.begin(), oob.end(), i)) {
                ++votes[static_cast<std::size_t>(
                    class_code(tree_predict(model.trees[t], train.x[i])) - 1)];
                voted = true;
            }
        }
        if (!voted) {
            ++result.skipped;
            continue;
        }
        ++result.evaluated;
        if (majority_label(votes) != train.y[i]) ++wrong;
    }
    result.error = result.evaluated == 0
                       ? 0.0
                       : static_cast<double>(wrong) / static_cast<double>(result.evaluated);
    return result;
}

} // namespace pqwf
