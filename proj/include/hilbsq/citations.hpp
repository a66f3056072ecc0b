#ifndef HILBSQ_CITATIONS_HPP
#define HILBSQ_CITATIONS_HPP

#include <map>
#include <string>
#include <vector>

namespace hilbsq::citations {

// A verdict or trace step cites the mathematical statement that justified
// it.  Statements live in a fixed registry; `data/citations.json` ships the
// same content for consumers that never link this library.
struct Citation {
    std::string statement;
    std::string quote;

    friend bool operator==(const Citation&, const Citation&) = default;
};

// Statement id -> statement text, in fixed (lexicographic) order.
const std::map<std::string, std::string>& registry();

// Looks up the statement text; throws std::out_of_range for unknown ids.
const std::string& quote(const std::string& statement_id);

// Convenience: builds a Citation from a registered id.
Citation cite(const std::string& statement_id);

}  // namespace hilbsq::citations

#endif
