#include "pqwf/model_io.hpp"

#include <fstream>

#include <json.hpp>

#include "pqwf/errors.hpp"

namespace pqwf {

using nlohmann::json;

namespace {

void write_json(const std::string& path, const json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << j.dump(2) << "\n";
    if (!out) throw IoError("write failed: " + path);
}

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open for reading: " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

json standardization_to_json(const Standardization& s) {
    return json{{"means", s.means}, {"scales", s.scales}};
}

Standardization standardization_from_json(const json& j) {
    Standardization s;
    j.at("means").get_to(s.means);
    j.at("scales").get_to(s.scales);
    return s;
}

json tree_node_to_json(const DecisionTree& tree, int id) {
    const TreeNode& node = tree.nodes[static_cast<std::size_t>(id)];
    if (node.is_leaf) return json{{"leaf", class_code(node.leaf)}};
    return json{{"feature", node.feature},
                {"threshold", node.threshold},
                {"left", tree_node_to_json(tree, node.left)},
                {"right", tree_node_to_json(tree, node.right)}};
}

int tree_node_from_json(const json& j, DecisionTree& tree) {
    const int id = static_cast<int>(tree.nodes.size());
    tree.nodes.emplace_back();
    if (j.contains("leaf")) {
        tree.nodes[static_cast<std::size_t>(id)].is_leaf = true;
        tree.nodes[static_cast<std::size_t>(id)].leaf =
            class_from_code(j.at("leaf").get<int>());
        return id;
    }
    tree.nodes[static_cast<std::size_t>(id)].is_leaf = false;
    tree.nodes[static_cast<std::size_t>(id)].feature = j.at("feature").get<int>();
    tree.nodes[static_cast<std::size_t>(id)].threshold = j.at("threshold").get<double>();
    const int left = tree_node_from_json(j.at("left"), tree);
    const int right = tree_node_from_json(j.at("right"), tree);
    tree.nodes[static_cast<std::size_t>(id)].left = left;
    tree.nodes[static_cast<std::size_t>(id)].right = right;
    return id;
}

} // namespace

void save_knn_model(const std::string& path, const KnnModel& model) {
    json rows = json::array();
    for (std::size_t i = 0; i < model.x.size(); ++i)
        rows.push_back(json{{"x", model.x[i]}, {"y", class_code(model.y[i])}});
    write_json(path, json{{"type", "knn"},
                          {"k", model.k},
                          {"standardization", standardization_to_json(model.standardization)},
                          {"rows", rows}});
}

KnnModel load_knn_model(const std::string& path) {
    const json j = read_json(path);
    if (j.value("type", "") != "knn") throw ParseError(path + ": not a knn model");
    KnnModel model;
    model.k = j.at("k").get<int>();
    model.standardization = standardization_from_json(j.at("standardization"));
    for (const json& row : j.at("rows")) {
        model.x.push_back(row.at("x").get<FeatureArray>());
        model.y.push_back(class_from_code(row.at("y").get<int>()));
    }
    return model;
}

void save_svm_model(const std::string& path, const SvmModel& model) {
    json machines = json::array();
    for (const BinarySvm& m : model.machines) {
        machines.push_back(json{{"positive", class_code(m.positive)},
                                {"negative", class_code(m.negative)},
                                {"bias", m.bias},
                                {"support_x", m.support_x},
                                {"alpha_o", m.alpha_o}});
    }
    json classes = json::array();
    for (DisturbanceClass c : model.classes) classes.push_back(class_code(c));
    write_json(path, json{{"type", "svm"},
                          {"c", model.penalty_c},
                          {"gamma", model.gamma},
                          {"standardization", standardization_to_json(model.standardization)},
                          {"classes", classes},
                          {"machines", machines}});
}

SvmModel load_svm_model(const std::string& path) {
    const json j = read_json(path);
    if (j.value("type", "") != "svm") throw ParseError(path + ": not an svm model");
    SvmModel model;
    model.penalty_c = j.at("c").get<double>();
    model.gamma = j.at("gamma").get<double>();
    model.standardization = standardization_from_json(j.at("standardization"));
    for (const json& code : j.at("classes"))
        model.classes.push_back(class_from_code(code.get<int>()));
    for (const json& mj : j.at("machines")) {
        BinarySvm m;
        m.positive = class_from_code(mj.at("positive").get<int>());
        m.negative = class_from_code(mj.at("negative").get<int>());
        m.bias = mj.at("bias").get<double>();
        mj.at("support_x").get_to(m.support_x);
        mj.at("alpha_o").get_to(m.alpha_o);
        model.machines.push_back(std::move(m));
    }
    return model;
}

void save_forest_model(const std::string& path, const RandomForestModel& model) {
    json trees = json::array();
    for (const DecisionTree& tree : model.trees) trees.push_back(tree_node_to_json(tree, 0));
    write_json(path, json{{"type", "forest"},
                          {"n_trees", model.n_trees},
                          {"max_features", model.n_features_per_split},
                          {"seed", model.seed},
                          {"bootstrap", model.bootstrap},
                          {"standardization", nullptr}, // forest consumes raw features
                          {"oob_indices", model.oob_indices},
                          {"trees", trees}});
}

RandomForestModel load_forest_model(const std::string& path) {
    const json j = read_json(path);
    if (j.value("type", "") != "forest") throw ParseError(path + ": not a forest model");
    RandomForestModel model;
    model.n_trees = j.at("n_trees").get<int>();
    model.n_features_per_split = j.at("max_features").get<int>();
    model.seed = j.at("seed").get<std::uint64_t>();
    model.bootstrap = j.at("bootstrap").get<bool>();
    j.at("oob_indices").get_to(model.oob_indices);
    for (const json& tj : j.at("trees")) {
        DecisionTree tree;
        tree_node_from_json(tj, tree);
        model.trees.push_back(std::move(tree));
    }
    return model;
}

} // namespace pqwf
