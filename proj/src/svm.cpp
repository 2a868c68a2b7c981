#include "pqwf/svm.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <vector>

#include "pqwf/errors.hpp"

namespace pqwf {

double rbf_kernel(const FeatureArray& a, const FeatureArray& b, double gamma) {
    double d2 = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        d2 += d * d;
    }
    return std::exp(-gamma * d2);
}

double svm_decision(const BinarySvm& machine, double gamma, const FeatureArray& query) {
    double f = machine.bias;
    for (std::size_t i = 0; i < machine.support_x.size(); ++i)
        f += machine.alpha_o[i] * rbf_kernel(machine.support_x[i], query, gamma);
    return f;
}

namespace {

// Platt-style SMO on one binary subproblem. Deterministic: the first
// working-set pass walks all rows, later passes walk the non-bound rows;
// the partner index maximizes |E1 - E2| with fixed-order fallbacks.
class SmoSolver {
public:
    SmoSolver(const std::vector<FeatureArray>& x, const std::vector<double>& y,
              double c, double gamma, double tol, int max_passes)
        : x_(x), y_(y), c_(c), tol_(tol), max_passes_(max_passes),
          n_(x.size()), alpha_(n_, 0.0), error_(n_), kernel_(n_ * n_) {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i; j < n_; ++j) {
                const double k = rbf_kernel(x_[i], x_[j], gamma);
                kernel_[i * n_ + j] = k;
                kernel_[j * n_ + i] = k;
            }
        for (std::size_t i = 0; i < n_; ++i) error_[i] = -y_[i]; // f == 0 initially
    }

    // Terminates when a full pass over every row changes nothing, i.e.
    // all rows satisfy the KKT conditions within the tolerance.
    void solve() {
        int changed = 0;
        bool examine_all = true;
        int passes = 0;
        while ((changed > 0 || examine_all) && passes++ < max_passes_) {
            changed = 0;
            if (examine_all) {
                for (std::size_t i = 0; i < n_; ++i) changed += examine(i);
            } else {
                for (std::size_t i = 0; i < n_; ++i)
                    if (is_free(i)) changed += examine(i);
            }
            if (examine_all) examine_all = false;
            else if (changed == 0) examine_all = true;
        }
    }

    const std::vector<double>& alpha() const { return alpha_; }

    // Exact decision value without bias: g_i = sum_j alpha_j y_j K_ij.
    double decision_no_bias(std::size_t i) const {
        double g = 0.0;
        for (std::size_t j = 0; j < n_; ++j)
            if (alpha_[j] > 0.0) g += alpha_[j] * y_[j] * kernel_[j * n_ + i];
        return g;
    }

    // Bias per support-vector averaging over margin vectors; falls back to
    // the midpoint of the KKT-feasible bias interval when none exist.
    double compute_bias() const {
        double sum = 0.0;
        int count = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            if (alpha_[i] > 0.0 && alpha_[i] < c_) {
                sum += y_[i] - decision_no_bias(i);
                ++count;
            }
        }
        if (count > 0) return sum / count;

        double lo = -std::numeric_limits<double>::infinity();
        double hi = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n_; ++i) {
            const double v = y_[i] - decision_no_bias(i);
            // alpha == 0 wants y*f >= 1, alpha == C wants y*f <= 1
            const bool at_zero = alpha_[i] == 0.0;
            if ((y_[i] > 0.0) == at_zero) lo = std::max(lo, v);
            else hi = std::min(hi, v);
        }
        if (lo > hi) return (lo + hi) / 2.0; // tolerance slack; midpoint still sane
        if (!std::isfinite(lo)) return std::isfinite(hi) ? hi : 0.0;
        if (!std::isfinite(hi)) return lo;
        return (lo + hi) / 2.0;
    }

private:
    bool is_free(std::size_t i) const { return alpha_[i] > 0.0 && alpha_[i] < c_; }

    int examine(std::size_t i2) {
        const double y2 = y_[i2];
        const double a2 = alpha_[i2];
        const double e2 = error_[i2];
        const double r2 = e2 * y2;
        const bool violates = (r2 < -tol_ && a2 < c_) || (r2 > tol_ && a2 > 0.0);
        if (!violates) return 0;

        // partner with the largest |E1 - E2| among free rows
        std::size_t best = n_;
        double best_gap = -1.0;
        for (std::size_t i = 0; i < n_; ++i) {
            if (!is_free(i)) continue;
            const double gap = std::abs(error_[i] - e2);
            if (gap > best_gap) {
                best_gap = gap;
                best = i;
            }
        }
        if (best < n_ && take_step(best, i2)) return 1;
        for (std::size_t i = 0; i < n_; ++i)
            if (is_free(i) && take_step(i, i2)) return 1;
        for (std::size_t i = 0; i < n_; ++i)
            if (take_step(i, i2)) return 1;
        return 0;
    }

    bool take_step(std::size_t i1, std::size_t i2) {
        if (i1 == i2) return false;
        const double a1 = alpha_[i1], a2 = alpha_[i2];
        const double y1 = y_[i1], y2 = y_[i2];
        const double e1 = error_[i1], e2 = error_[i2];
        const double s = y1 * y2;

        double lo, hi;
        if (s < 0.0) {
            lo = std::max(0.0, a2 - a1);
            hi = std::min(c_, c_ + a2 - a1);
        } else {
            lo = std::max(0.0, a1 + a2 - c_);
            hi = std::min(c_, a1 + a2);
        }
        if (lo >= hi) return false;

        const double k11 = kernel_[i1 * n_ + i1];
        const double k12 = kernel_[i1 * n_ + i2];
        const double k22 = kernel_[i2 * n_ + i2];
        const double eta = k11 + k22 - 2.0 * k12;

        double a2_new;
        if (eta > 0.0) {
            a2_new = a2 + y2 * (e1 - e2) / eta;
            a2_new = std::clamp(a2_new, lo, hi);
        } else {
            // flat direction: evaluate the dual objective at both ends
            const double f1 = y1 * (e1 + b_) - a1 * k11 - s * a2 * k12;
            const double f2 = y2 * (e2 + b_) - s * a1 * k12 - a2 * k22;
            const double l1 = a1 + s * (a2 - lo);
            const double h1 = a1 + s * (a2 - hi);
            const double obj_lo = l1 * f1 + lo * f2 + 0.5 * l1 * l1 * k11 +
                                  0.5 * lo * lo * k22 + s * lo * l1 * k12;
            const double obj_hi = h1 * f1 + hi * f2 + 0.5 * h1 * h1 * k11 +
                                  0.5 * hi * hi * k22 + s * hi * h1 * k12;
            if (obj_lo < obj_hi - 1e-12) a2_new = lo;
            else if (obj_lo > obj_hi + 1e-12) a2_new = hi;
            else return false;
        }
        if (std::abs(a2_new - a2) < 1e-12 * (a2_new + a2 + 1e-12)) return false;

        const double a1_new = a1 + s * (a2 - a2_new);
        const double d1 = y1 * (a1_new - a1);
        const double d2 = y2 * (a2_new - a2);

        const double b1 = b_ - e1 - d1 * k11 - d2 * k12;
        const double b2 = b_ - e2 - d1 * k12 - d2 * k22;
        double b_new;
        if (a1_new > 0.0 && a1_new < c_) b_new = b1;
        else if (a2_new > 0.0 && a2_new < c_) b_new = b2;
        else b_new = (b1 + b2) / 2.0;

        const double db = b_new - b_;
        for (std::size_t i = 0; i < n_; ++i)
            error_[i] += d1 * kernel_[i1 * n_ + i] + d2 * kernel_[i2 * n_ + i] + db;

        alpha_[i1] = a1_new;
        alpha_[i2] = a2_new;
        b_ = b_new;
        return true;
    }

    const std::vector<FeatureArray>& x_;
    const std::vector<double>& y_;
    double c_, tol_;
    int max_passes_;
    std::size_t n_;
    std::vector<double> alpha_, error_;
    std::vector<double> kernel_;
    double b_ = 0.0;
};

} // namespace

SvmModel svm_train(const LabeledDataset& train, double penalty_c, double gamma,
                   double kkt_tolerance, int max_passes) {
    if (train.empty()) throw ShapeError("svm_train: empty training set");
    if (!(penalty_c > 0.0)) throw ParameterError("svm_train: C must be > 0");
    if (!(gamma > 0.0)) throw ParameterError("svm_train: gamma must be > 0");

    SvmModel model;
    model.penalty_c = penalty_c;
    model.gamma = gamma;
    model.standardization = standardize_fit(train);

    std::vector<FeatureArray> std_x;
    std_x.reserve(train.size());
    for (const FeatureArray& row : train.x)
        std_x.push_back(model.standardization.apply(row));

    // classes present, in code order
    std::array<bool, kNumClasses> present{};
    for (DisturbanceClass c : train.y) present[static_cast<std::size_t>(class_code(c) - 1)] = true;
    for (int code = 1; code <= kNumClasses; ++code)
        if (present[static_cast<std::size_t>(code - 1)])
            model.classes.push_back(class_from_code(code));
    if (model.classes.size() < 2)
        throw ParameterError("svm_train: need at least two classes");

    for (std::size_t a = 0; a < model.classes.size(); ++a) {
        for (std::size_t b = a + 1; b < model.classes.size(); ++b) {
            const DisturbanceClass pos = model.classes[a];
            const DisturbanceClass neg = model.classes[b];
            std::vector<FeatureArray> px;
            std::vector<double> py;
            for (std::size_t i = 0; i < train.size(); ++i) {
                if (train.y[i] == pos) {
                    px.push_back(std_x[i]);
                    py.push_back(1.0);
                } else if (train.y[i] == neg) {
                    px.push_back(std_x[i]);
                    py.push_back(-1.0);
                }
            }
            const bool has_pos = std::find(py.begin(), py.end(), 1.0) != py.end();
            const bool has_neg = std::find(py.begin(), py.end(), -1.0) != py.end();
            if (!has_pos || !has_neg) {
                std::cerr << "svm_train: skipping degenerate pair " << class_name(pos)
                          << "/" << class_name(neg) << " (single class)\n";
                continue;
            }

            SmoSolver solver(px, py, penalty_c, gamma, kkt_tolerance, max_passes);
            solver.solve();

            BinarySvm machine;
            machine.positive = pos;
            machine.negative = neg;
            machine.bias = solver.compute_bias();
            for (std::size_t i = 0; i < px.size(); ++i) {
                if (solver.alpha()[i] > 0.0) {
                    machine.support_x.push_back(px[i]);
                    machine.alpha_o.push_back(solver.alpha()[i] * py[i]);
                }
            }
            model.machines.push_back(std::move(machine));
        }
    }
    return model;
}

DisturbanceClass svm_predict(const SvmModel& model, const FeatureArray& query) {
    if (model.machines.empty()) throw ShapeError("svm_predict: untrained model");
    const FeatureArray q = model.standardization.apply(query);

    std::array<int, kNumClasses> votes{};
    std::array<double, kNumClasses> score{};
    for (const BinarySvm& machine : model.machines) {
        const double f = svm_decision(machine, model.gamma, q);
        const DisturbanceClass winner = f > 0.0 ? machine.positive : machine.negative;
        ++votes[static_cast<std::size_t>(class_code(winner) - 1)];
        score[static_cast<std::size_t>(class_code(winner) - 1)] += std::abs(f);
    }

    int best = 0;
    for (int c = 1; c < kNumClasses; ++c) {
        const auto ci = static_cast<std::size_t>(c);
        const auto bi = static_cast<std::size_t>(best);
        if (votes[ci] > votes[bi] || (votes[ci] == votes[bi] && score[ci] > score[bi]))
            best = c;
    }
    return class_from_code(best + 1);
}

} // namespace pqwf
