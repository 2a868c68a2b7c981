#include "pqwf/knn.hpp"

#include <algorithm>
#include <numeric>

#include "pqwf/errors.hpp"

namespace pqwf {

KnnModel knn_train(const LabeledDataset& train, int k) {
    if (train.empty()) throw ShapeError("knn_train: empty training set");
    if (k < 1 || k % 2 == 0) throw ParameterError("knn_train: k must be >= 1 and odd");
    KnnModel model;
    model.k = k;
    model.standardization = standardize_fit(train);
    model.x.reserve(train.size());
    for (const FeatureArray& row : train.x) model.x.push_back(model.standardization.apply(row));
    model.y = train.y;
    return model;
}

DisturbanceClass knn_predict(const KnnModel& model, const FeatureArray& query) {
    if (model.x.empty()) throw ShapeError("knn_predict: empty model");
    const FeatureArray q = model.standardization.apply(query);
    const std::size_t n = model.x.size();
    const std::size_t k = std::min(static_cast<std::size_t>(model.k), n);

    std::vector<double> dist(n);
    for (std::size_t i = 0; i < n; ++i) dist[i] = euclidean_distance(model.x[i], q);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k),
                      order.end(), [&](std::size_t a, std::size_t b) {
                          if (dist[a] != dist[b]) return dist[a] < dist[b];
                          return a < b; // equal distances: lower row index wins
                      });

    std::array<int, kNumClasses> votes{};
    for (std::size_t i = 0; i < k; ++i)
        ++votes[static_cast<std::size_t>(class_code(model.y[order[i]]) - 1)];
    return majority_label(votes);
}

} // namespace pqwf
