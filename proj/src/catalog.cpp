#include "domcount/catalog.hpp"

#include <fstream>
#include <istream>
#include <stdexcept>

namespace domcount {

std::vector<CatalogEntry> load_catalog(std::istream& in, bool strict,
                                       std::vector<CatalogIssue>* issues) {
    std::vector<CatalogEntry> entries;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        try {
            entries.push_back({parse_graph6(line), line_number});
        } catch (const std::invalid_argument& e) {
            if (strict)
                throw std::invalid_argument("line " + std::to_string(line_number) + ": " +
                                            e.what());
            if (issues) issues->push_back({line_number, e.what()});
        }
    }
    return entries;
}

std::vector<CatalogEntry> load_catalog_file(const std::string& path, bool strict,
                                            std::vector<CatalogIssue>* issues) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open catalog " + path);
    return load_catalog(in, strict, issues);
}

}  // namespace domcount
