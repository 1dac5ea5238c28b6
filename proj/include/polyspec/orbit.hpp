#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "polyspec/group.hpp"

namespace polyspec {

struct OrbitSample {
    std::vector<int> word;   // letter indices; generators first, then inverses
    Eigen::VectorXd mu_plus; // raw realization coordinates

    int word_length() const { return static_cast<int>(word.size()); }
};

struct OrbitData {
    Realization realization = Realization::SLn;
    int dim = 0;           // matrix size for SL_n, factor count for products
    int generator_count = 0;
    bool include_inverses = false;
    bool exact = false;
    std::optional<std::string> warning;
    std::vector<OrbitSample> samples;  // sorted by word length, then lexicographic word
};

inline constexpr std::size_t kDefaultElementCap = 10'000'000;

// Breadth-first closure of the word ball. With all-rational generators the
// dedup is exact (canonical rational matrices); otherwise only freely reduced
// words are distinguished and a warning is attached, since float entries
// cannot witness group relations reliably.
OrbitData enumerate_ball(const std::vector<GroupElement>& generators, bool include_inverses,
                         int max_word_length, std::size_t max_elements = kDefaultElementCap);

}  // namespace polyspec
