#ifndef DOMCOUNT_CATALOG_HPP
#define DOMCOUNT_CATALOG_HPP

// graph6 catalog files: one graph per line, '#' comments and blank lines
// skipped, line numbers kept for error reporting.

#include <iosfwd>
#include <string>
#include <vector>

#include "domcount/graph.hpp"

namespace domcount {

struct CatalogEntry {
    Graph graph;
    int line_number;
};

struct CatalogIssue {
    int line_number;
    std::string message;
};

// Strict mode throws on the first malformed line (message includes the line
// number); lenient mode skips it and records the issue.
std::vector<CatalogEntry> load_catalog(std::istream& in, bool strict,
                                       std::vector<CatalogIssue>* issues = nullptr);
std::vector<CatalogEntry> load_catalog_file(const std::string& path, bool strict,
                                            std::vector<CatalogIssue>* issues = nullptr);

}  // namespace domcount

#endif
