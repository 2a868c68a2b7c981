#include <doctest.h>

#include <cmath>
#include <set>
#include <vector>

#include "pqwf/errors.hpp"
#include "pqwf/forest.hpp"
#include "pqwf/rng.hpp"

using namespace pqwf;

namespace {

LabeledDataset separable_clusters(RngStream& rng, int per_class) {
    LabeledDataset d;
    const DisturbanceClass labels[3] = {DisturbanceClass::Swell, DisturbanceClass::Sag,
                                        DisturbanceClass::Flicker};
    for (int c = 0; c < 3; ++c) {
        for (int i = 0; i < per_class; ++i) {
            FeatureArray x{};
            x[0] = 4.0 * c + rng.uniform(-0.5, 0.5);
            x[1] = rng.uniform(-1.0, 1.0);
            d.x.push_back(x);
            d.y.push_back(labels[c]);
        }
    }
    return d;
}

} // namespace

TEST_CASE("gini impurity of a 50/50 node is one half") {
    std::array<int, kNumClasses> counts{};
    counts[0] = 10;
    counts[1] = 10;
    CHECK(gini_impurity(counts, 20) == 0.5);
    counts[1] = 0;
    CHECK(gini_impurity(counts, 10) == 0.0);
}

TEST_CASE("a single-class node becomes one leaf") {
    LabeledDataset train;
    RngStream rng(1);
    for (int i = 0; i < 12; ++i) {
        FeatureArray x{};
        x[0] = rng.uniform(-1, 1);
        train.x.push_back(x);
        train.y.push_back(DisturbanceClass::Notch);
    }
    RngStream tree_rng(2);
    const DecisionTree tree = tree_train(train, 5, tree_rng);
    REQUIRE(tree.nodes.size() == 1);
    CHECK(tree.nodes[0].is_leaf);
    CHECK(tree.nodes[0].leaf == DisturbanceClass::Notch);
}

TEST_CASE("1-D separable pairs give a depth-1 tree with perfect accuracy") {
    LabeledDataset train;
    RngStream rng(3);
    for (int i = 0; i < 10; ++i) {
        FeatureArray neg{};
        neg[2] = rng.uniform(-2.0, -0.5);
        train.x.push_back(neg);
        train.y.push_back(DisturbanceClass::Swell);
        FeatureArray pos{};
        pos[2] = rng.uniform(0.5, 2.0);
        train.x.push_back(pos);
        train.y.push_back(DisturbanceClass::Sag);
    }
    RngStream tree_rng(4);
    const DecisionTree tree = tree_train(train, 5, tree_rng);
    REQUIRE(tree.nodes.size() == 3);
    CHECK_FALSE(tree.nodes[0].is_leaf);
    CHECK(tree.nodes[0].feature == 2);
    for (std::size_t i = 0; i < train.size(); ++i)
        CHECK(tree_predict(tree, train.x[i]) == train.y[i]);
}

TEST_CASE("consistent data trains to zero error with all features available") {
    RngStream rng(5);
    LabeledDataset train;
    for (int i = 0; i < 200; ++i) {
        FeatureArray x;
        for (double& v : x) v = rng.uniform(-1.0, 1.0);
        train.x.push_back(x);
        train.y.push_back(class_from_code(1 + static_cast<int>(rng.uniform_index(11))));
    }
    RngStream tree_rng(6);
    const DecisionTree tree = tree_train(train, 5, tree_rng);
    for (std::size_t i = 0; i < train.size(); ++i)
        CHECK(tree_predict(tree, train.x[i]) == train.y[i]);
}

TEST_CASE("an XOR layout is still resolved exactly") {
    LabeledDataset train;
    const double pts[4][2] = {{0, 0}, {1, 1}, {0, 1}, {1, 0}};
    for (int i = 0; i < 4; ++i) {
        FeatureArray x{};
        x[0] = pts[i][0];
        x[1] = pts[i][1];
        train.x.push_back(x);
        train.y.push_back(i < 2 ? DisturbanceClass::Swell : DisturbanceClass::Sag);
    }
    RngStream tree_rng(7);
    const DecisionTree tree = tree_train(train, 5, tree_rng);
    for (std::size_t i = 0; i < train.size(); ++i)
        CHECK(tree_predict(tree, train.x[i]) == train.y[i]);
}

TEST_CASE("forests are deterministic given (seed, data)") {
    RngStream rng(8);
    const LabeledDataset train = separable_clusters(rng, 30);
    const RandomForestModel a = rf_train(train, 20, 2, 31);
    const RandomForestModel b = rf_train(train, 20, 2, 31);
    REQUIRE(a.trees.size() == b.trees.size());
    CHECK(a.oob_indices == b.oob_indices);
    RngStream probe(9);
    for (int trial = 0; trial < 50; ++trial) {
        FeatureArray q{};
        q[0] = probe.uniform(-1.0, 9.0);
        q[1] = probe.uniform(-1.0, 1.0);
        CHECK(rf_predict(a, q) == rf_predict(b, q));
    }
}

TEST_CASE("bootstrap-disabled single tree equals plain CART") {
    RngStream rng(10);
    const LabeledDataset train = separable_clusters(rng, 25);
    const RandomForestModel forest = rf_train(train, 1, 5, 77, /*bootstrap=*/false);
    REQUIRE(forest.trees.size() == 1);
    CHECK(forest.oob_indices[0].empty());

    RngStream tree_rng = RngStream::derive(77, 0, 0);
    const DecisionTree cart = tree_train(train, 5, tree_rng);
    RngStream probe(11);
    for (int trial = 0; trial < 100; ++trial) {
        FeatureArray q{};
        q[0] = probe.uniform(-1.0, 9.0);
        q[1] = probe.uniform(-1.0, 1.0);
        CHECK(rf_predict(forest, q) == tree_predict(cart, q));
    }
}

TEST_CASE("expected out-of-bag fraction is about 1/e") {
    RngStream rng(12);
    LabeledDataset train;
    for (int i = 0; i < 7700; ++i) {
        FeatureArray x{};
        x[0] = rng.uniform(-1.0, 1.0);
        train.x.push_back(x);
        train.y.push_back(i % 2 == 0 ? DisturbanceClass::Swell : DisturbanceClass::Sag);
    }
    const RandomForestModel forest = rf_train(train, 8, 2, 99);
    for (const auto& oob : forest.oob_indices) {
        const double fraction = static_cast<double>(oob.size()) / 7700.0;
        CHECK(fraction == doctest::Approx(std::exp(-1.0)).epsilon(0.055)); // 0.368 +- 0.02
    }
}

TEST_CASE("votes and tie-breaks") {
    // two stub trees voting Swell plus one voting Sag: majority by count
    DecisionTree swell, sag;
    TreeNode leaf;
    leaf.is_leaf = true;
    leaf.leaf = DisturbanceClass::Swell;
    swell.nodes.push_back(leaf);
    leaf.leaf = DisturbanceClass::Sag;
    sag.nodes.push_back(leaf);

    RandomForestModel model;
    model.trees = {swell, swell, sag};
    model.oob_indices.resize(3);
    model.n_trees = 3;
    CHECK(rf_predict(model, FeatureArray{}) == DisturbanceClass::Swell);

    // a 1-1 tie goes to the smaller class code (Swell = 2 beats Sag = 5)
    model.trees = {swell, sag};
    model.n_trees = 2;
    CHECK(rf_predict(model, FeatureArray{}) == DisturbanceClass::Swell);
}

TEST_CASE("out-of-bag error approaches training error on separable data") {
    RngStream rng(13);
    const LabeledDataset train = separable_clusters(rng, 60);
    const RandomForestModel forest = rf_train(train, 60, 2, 5);
    const OobResult result = rf_oob_error(forest, train);
    CHECK(result.skipped == 0);
    CHECK(result.evaluated == train.size());
    CHECK(result.error < 0.05);
}

TEST_CASE("single-tree forest evaluates OOB on its own out-of-bag rows only") {
    RngStream rng(14);
    const LabeledDataset train = separable_clusters(rng, 20);
    const RandomForestModel forest = rf_train(train, 1, 2, 123);
    const OobResult result = rf_oob_error(forest, train);
    CHECK(result.evaluated == forest.oob_indices[0].size());
    CHECK(result.evaluated + result.skipped == train.size());
}

TEST_CASE("rf_train validates its inputs") {
    RngStream rng(15);
    const LabeledDataset train = separable_clusters(rng, 5);
    CHECK_THROWS_AS((void)rf_train(train, 0, 2, 1), ParameterError);
    CHECK_THROWS_AS((void)rf_train(train, 10, 0, 1), ParameterError);
    CHECK_THROWS_AS((void)rf_train(train, 10, 6, 1), ParameterError);
    CHECK_THROWS_AS((void)rf_train(LabeledDataset{}, 10, 2, 1), ShapeError);
}
