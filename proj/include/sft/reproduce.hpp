#pragma once

#include <string>
#include <vector>

namespace sft {

struct ReproduceParams {
    int q = 2;
    int n = 6;
    int terms = 40;
};

struct ReproduceCheck {
    std::string label;
    std::string measured;
    std::string expected;
    bool pass = false;
};

struct ReproduceReport {
    std::string target;
    std::vector<ReproduceCheck> checks;

    bool passed() const;
    std::string str() const;
};

// eq1_7 eq1_10 eq1_11 eq1_12 eq1_13 eq1_5 prop2_1 lemma3_1 thm4_1 thm4_2
const std::vector<std::string>& reproduce_targets();

// Throws ParseError for an unknown target.
ReproduceReport reproduce(const std::string& target, const ReproduceParams& params = {});

}  // namespace sft
