#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "sullivan/cohomology.hpp"
#include "sullivan/fh_enum.hpp"
#include "sullivan/hilali.hpp"
#include "sullivan/model.hpp"

namespace sullivan {

struct ParseError : std::runtime_error {
    ParseError(int line, int col, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(col) + ": " + what),
          line(line), col(col) {}
    int line;
    int col;
};

// Line-oriented model format:
//   # comment
//   generator <name> <degree>
//   d <name> = <expr>
// <expr> is 0 or a signed sum of terms; a term is an optional rational
// coefficient and a product of generator powers, all joined by '*'.
// Omitted differentials default to zero.
Model parse_model(std::string_view text, std::string name = "");

// Canonical form: generators in index order, every differential spelled
// out, terms in graded-lexicographic order, reduced coefficients, no unit
// coefficients printed. parse(serialize(m)) reproduces m exactly.
std::string serialize_model(const Model& m);

std::string serialize_element(const Element& e);

std::string emit_report_human(const HilaliVerdict& v, const CohomologyReport& r);
std::string emit_report_machine(const HilaliVerdict& v, const CohomologyReport& r);

std::string emit_cohomology_human(const Model& m, const CohomologyReport& r);
std::string emit_cohomology_machine(const Model& m, const CohomologyReport& r);

// Enumeration rows: "fd=4: (2) | (5)"; the empty multiset prints as ().
std::string format_enum_row(const DegreeSequence& s);
std::vector<DegreeSequence> parse_enum_rows(std::string_view text);

}  // namespace sullivan
