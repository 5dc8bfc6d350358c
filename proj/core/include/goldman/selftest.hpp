#pragma once

#include "goldman/fuchsian.hpp"
#include "goldman/words.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace goldman::selftest {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct Options {
    int radius = 8;
    /// quick = true restricts the word corpus to length <= 4 (for smoke
    /// runs); the acceptance gate uses the full length <= 6 corpus.
    bool quick = false;
    int threads = 0;  // 0 = GOLDMAN_THREADS env or hardware concurrency
    std::ostream* log = nullptr;
};

/// Runs the ten acceptance criteria and returns one result per criterion.
std::vector<CriterionResult> run_acceptance(const Options& options = {});

/// All canonical cyclically reduced words of length 1..max_len.
std::vector<CyclicWord> word_corpus(int max_len);

}  // namespace goldman::selftest
