#include "dualtest/metrics.hpp"

#include "dualtest/error.hpp"

#include <fmt/format.h>

namespace dualtest {

int predicted_label(Decision d) {
    switch (d) {
        case Decision::class1: return 0;
        case Decision::class2: return 1;
        default: break;
    }
    throw Error(ErrorCode::invalid_argument, "abstentions carry no predicted label");
}

namespace {

std::optional<double> ratio(std::size_t num, std::size_t den) {
    if (den == 0) {
        return std::nullopt;
    }
    return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

SelectiveReport evaluate(std::span<const Decision> decisions, std::span<const int> truths, int positive_class) {
    if (decisions.size() != truths.size() || decisions.empty()) {
        throw Error(ErrorCode::length_mismatch,
                    fmt::format("need equal nonempty inputs, got {} decisions and {} labels", decisions.size(),
                                truths.size()));
    }
    if (positive_class != 0 && positive_class != 1) {
        throw Error(ErrorCode::invalid_argument, fmt::format("positive class must be 0 or 1, got {}", positive_class));
    }
    SelectiveReport r;
    r.total = decisions.size();
    for (std::size_t i = 0; i < decisions.size(); ++i) {
        if (truths[i] != 0 && truths[i] != 1) {
            throw Error(ErrorCode::invalid_argument, fmt::format("label must be 0 or 1, got {}", truths[i]), i);
        }
        const Decision d = decisions[i];
        if (d == Decision::uncertain_overlap) {
            ++r.abstained_overlap;
            continue;
        }
        if (d == Decision::uncertain_outlier) {
            ++r.abstained_outlier;
            continue;
        }
        const bool predicted_positive = predicted_label(d) == positive_class;
        const bool actual_positive = truths[i] == positive_class;
        if (predicted_positive) {
            ++(actual_positive ? r.tp : r.fp);
        } else {
            ++(actual_positive ? r.fn : r.tn);
        }
    }
    r.abstained = r.abstained_overlap + r.abstained_outlier;
    r.coverage = 1.0 - static_cast<double>(r.abstained) / static_cast<double>(r.total);
    r.accuracy = ratio(r.tp + r.tn, r.decided());
    r.recall = ratio(r.tp, r.tp + r.fn);
    r.precision = ratio(r.tp, r.tp + r.fp);
    r.specificity = ratio(r.tn, r.tn + r.fp);
    if (r.precision && r.recall && (*r.precision + *r.recall) > 0.0) {
        r.f1 = 2.0 * *r.precision * *r.recall / (*r.precision + *r.recall);
    }
    return r;
}

}  // namespace dualtest
