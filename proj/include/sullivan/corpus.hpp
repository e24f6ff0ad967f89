#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sullivan/model.hpp"

namespace sullivan {

struct ExpectedResults {
    int dim_v = 0;
    long total_dim = 0;
    int fd = 0;
    bool pure = false;
    bool hyperelliptic = false;
    bool odd_generated = false;
};

struct CorpusEntry {
    std::string name;
    Model model;
    std::optional<ExpectedResults> expected;
};

// Registry keys:
//   sphere:k            k >= 2; odd k is a single exterior generator
//   cpn:m               m >= 1
//   product:<a>,<b>     product model of two comma-free registry names
//   oddtower:d1,d2,...  odd degrees, top differential y1*y2 when it fits
//   thmD:n1p3, thmD:n2p3:W0, thmD:n3p4:W2zero   quadric witness models
//   hyperelliptic:sample
Model build_named_model(const std::string& name);

std::vector<CorpusEntry> all_entries();

}  // namespace sullivan
