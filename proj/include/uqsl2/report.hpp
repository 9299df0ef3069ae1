#pragma once

#include <string>
#include <vector>

#include "uqsl2/matrix.hpp"

namespace uqsl2 {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // first discrepant entry on failure, empty otherwise
};

/// Ordered list of named pass/fail items. Failures are data, not errors.
struct Report {
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    size_t failures() const {
        size_t n = 0;
        for (auto& c : checks)
            if (!c.pass) ++n;
        return n;
    }

    void add(std::string name, bool pass, std::string detail = {}) {
        checks.push_back({std::move(name), pass, std::move(detail)});
    }

    void merge(const Report& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }

    template <class S>
    void check_equal(const std::string& name, const ExactMatrix<S>& got,
                     const ExactMatrix<S>& want) {
        if (got.rows() != want.rows() || got.cols() != want.cols()) {
            add(name, false,
                "shape " + got.shape_str() + " vs " + want.shape_str());
            return;
        }
        for (size_t i = 0; i < got.rows(); ++i)
            for (size_t j = 0; j < got.cols(); ++j)
                if (!(got.at(i, j) == want.at(i, j))) {
                    add(name, false,
                        "entry (" + std::to_string(i) + "," + std::to_string(j) +
                            "): " + got.at(i, j).str() + " != " + want.at(i, j).str());
                    return;
                }
        add(name, true);
    }

    template <class S>
    void check_zero(const std::string& name, const ExactMatrix<S>& got) {
        check_equal(name, got, ExactMatrix<S>::zero(got.rows(), got.cols()));
    }
};

} // namespace uqsl2
