#include "barnette/catalog.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "barnette/bases.hpp"

namespace barnette {

const BaseEntry* Catalog::find_base(const std::string& name, int param) const {
    for (const auto& b : bases)
        if (b.name == name && b.param == param) return &b;
    return nullptr;
}

std::vector<const PatternEntry*> Catalog::family(const std::string& fam, int k, int i) const {
    std::vector<const PatternEntry*> out;
    for (const auto& p : patterns)
        if (p.family == fam && p.k == k && p.i == i) out.push_back(&p);
    std::sort(out.begin(), out.end(),
              [](const PatternEntry* a, const PatternEntry* b) { return a->j < b->j; });
    return out;
}

void Catalog::add_base(BaseEntry e) {
    if (find_base(e.name, e.param))
        throw Error(ErrorKind::Parse, "duplicate base " + e.name);
    bases.push_back(std::move(e));
}

void Catalog::add_pattern(PatternEntry e) {
    for (const auto& p : patterns)
        if (p.family == e.family && p.k == e.k && p.j == e.j && p.i == e.i)
            throw Error(ErrorKind::Parse, "duplicate pattern " + e.family);
    patterns.push_back(std::move(e));
}

namespace {

std::vector<std::string> split_sections(const std::string& text) {
    std::vector<std::string> sections;
    std::istringstream in(text);
    std::string line, cur;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::string trimmed = line;
        while (!trimmed.empty() && (trimmed.back() == ' ' || trimmed.back() == '\r' || trimmed.back() == '\t'))
            trimmed.pop_back();
        if (trimmed.empty()) continue;
        if (trimmed[0] == '[') {
            if (!cur.empty()) sections.push_back(cur);
            cur = trimmed + "\n";
        } else {
            if (cur.empty()) throw Error(ErrorKind::Parse, "content before first section");
            cur += trimmed + "\n";
        }
    }
    if (!cur.empty()) sections.push_back(cur);
    return sections;
}

std::vector<VertexId> id_list(const std::string& s) {
    std::vector<VertexId> out;
    std::istringstream in(s);
    long v;
    while (in >> v) out.push_back(static_cast<VertexId>(v));
    return out;
}

}  // namespace

Catalog Catalog::parse(const std::string& text) {
    Catalog c;
    for (const auto& sec : split_sections(text)) {
        std::istringstream in(sec);
        std::string header;
        std::getline(in, header);
        std::istringstream hs(header);
        std::string open;
        hs >> open;
        std::map<std::string, std::string> keys;
        std::map<VertexId, std::vector<VertexId>> rot;
        std::string line;
        while (std::getline(in, line)) {
            auto eq = line.find('=');
            auto colon = line.find(':');
            if (eq != std::string::npos && (colon == std::string::npos || eq < colon)) {
                keys[line.substr(0, eq)] = line.substr(eq + 1);
            } else if (colon != std::string::npos) {
                auto ids = id_list(line.substr(0, colon));
                if (ids.size() != 1) throw Error(ErrorKind::Parse, "bad rotation line: " + line);
                rot[ids[0]] = id_list(line.substr(colon + 1));
            } else {
                throw Error(ErrorKind::Parse, "bad catalog line: " + line);
            }
        }
        if (open == "[base") {
            std::string name;
            int param = 0;
            hs >> name;
            hs >> param;
            if (!name.empty() && name.back() == ']') { name.pop_back(); }
            BaseEntry b;
            b.name = name;
            b.param = param;
            b.graph.g = id_list(keys.at("g")).at(0);
            auto ov = id_list(keys.at("outer"));
            if (ov.size() != 3) throw Error(ErrorKind::Parse, "outer needs three vertices");
            b.graph.outer = {ov[0], ov[1], ov[2]};
            b.graph.graph.rot = rot;
            b.graph.validate();
            if (keys.count("marked")) {
                auto mv = id_list(keys.at("marked"));
                b.marked = VertexSet(mv.begin(), mv.end());
                b.flavor = keys.count("flavor") ? flavor_from_string(keys.at("flavor")) : Flavor::Any;
            }
            c.add_base(std::move(b));
        } else if (open == "[pattern") {
            PatternEntry p;
            hs >> p.family >> p.k >> p.j;
            std::string tail;
            if (hs >> tail) {
                if (!tail.empty() && tail.back() == ']') tail.pop_back();
                if (!tail.empty()) p.i = std::stoi(tail);
            }
            if (!p.family.empty() && p.family.back() == ']') p.family.pop_back();
            p.pattern.body.graph.rot = rot;
            p.pattern.body.sigma = id_list(keys.at("sigma"));
            p.pattern.d = id_list(keys.at("d")).at(0);
            auto dv = id_list(keys.count("D") ? keys.at("D") : "");
            p.pattern.D = VertexSet(dv.begin(), dv.end());
            p.bounded = !keys.count("region") || keys.at("region") == "bounded";
            p.pattern.validate();
            c.add_pattern(std::move(p));
        } else {
            throw Error(ErrorKind::Parse, "unknown section header: " + header);
        }
    }
    return c;
}

Catalog Catalog::load_directory(const std::string& dir) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".cat") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw Error(ErrorKind::Parse, "no .cat files in " + dir);
    std::string all;
    for (const auto& f : files) {
        std::ifstream in(f);
        std::stringstream ss;
        ss << in.rdbuf();
        all += ss.str();
        all += "\n";
    }
    return parse(all);
}

std::string Catalog::serialize() const {
    std::ostringstream out;
    for (const auto& b : bases) {
        out << "[base " << b.name << " " << b.param << "]\n";
        out << "g=" << b.graph.g << "\n";
        out << "outer=" << b.graph.outer[0] << " " << b.graph.outer[1] << " " << b.graph.outer[2]
            << "\n";
        for (const auto& [v, nb] : b.graph.graph.rot) {
            out << v << ":";
            for (VertexId u : nb) out << " " << u;
            out << "\n";
        }
        if (b.marked) {
            out << "marked=";
            bool first = true;
            for (VertexId v : *b.marked) {
                out << (first ? "" : " ") << v;
                first = false;
            }
            out << "\nflavor=" << flavor_to_string(b.flavor) << "\n";
        }
        out << "\n";
    }
    for (const auto& p : patterns) {
        out << "[pattern " << p.family << " " << p.k << " " << p.j;
        if (p.i) out << " " << p.i;
        out << "]\n";
        out << "d=" << p.pattern.d << "\n";
        out << "sigma=";
        for (std::size_t k = 0; k < p.pattern.body.sigma.size(); ++k)
            out << (k ? " " : "") << p.pattern.body.sigma[k];
        out << "\n";
        out << "region=" << (p.bounded ? "bounded" : "unbounded") << "\n";
        out << "D=";
        bool first = true;
        for (VertexId v : p.pattern.D) {
            out << (first ? "" : " ") << v;
            first = false;
        }
        out << "\n";
        for (const auto& [v, nb] : p.pattern.body.graph.rot) {
            out << v << ":";
            for (VertexId u : nb) out << " " << u;
            out << "\n";
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace barnette
