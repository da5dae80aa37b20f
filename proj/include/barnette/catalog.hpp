#ifndef BARNETTE_CATALOG_HPP
#define BARNETTE_CATALOG_HPP

#include <optional>

#include "barnette/graph.hpp"
#include "barnette/pattern.hpp"
#include "barnette/verifier.hpp"

namespace barnette {

struct BaseEntry {
    std::string name;
    int param = 0;
    Triangulation graph;
    std::optional<VertexSet> marked;
    Flavor flavor = Flavor::Any;
};

struct PatternEntry {
    std::string family;  // upsilon | delta | psi
    int k = 0;
    int j = 0;
    int i = 0;  // psi only
    bool bounded = true;
    Pattern pattern;
};

class Catalog {
public:
    std::vector<BaseEntry> bases;
    std::vector<PatternEntry> patterns;

    const BaseEntry* find_base(const std::string& name, int param) const;
    std::vector<const PatternEntry*> family(const std::string& fam, int k, int i = 0) const;

    void add_base(BaseEntry e);
    void add_pattern(PatternEntry e);

    static Catalog parse(const std::string& text);
    static Catalog load_directory(const std::string& dir);
    std::string serialize() const;
};

// Base-graph instantiation: stored entries first, figure recurrences for
// parametric names beyond the stored range (without marked sets).
struct Instantiated {
    Triangulation graph;
    std::optional<VertexSet> marked;
    Flavor flavor = Flavor::Any;
};
Instantiated instantiate_base_graph(const Catalog& c, const std::string& name, int param);

struct ValidationEntry {
    std::string check;
    std::string subject;
    bool pass = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationEntry> entries;
    bool all_pass() const;
    std::string render() const;
};

ValidationReport validate_catalog(const Catalog& c);

}  // namespace barnette

#endif
