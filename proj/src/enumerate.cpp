#include "barnette/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <mutex>
#include <thread>

#include "barnette/canonical.hpp"
#include "barnette/family.hpp"
#include "barnette/ops.hpp"

namespace barnette {

namespace {

void renumber_compact(Triangulation& t) {
    // Keep ids small during breadth-first closure so codes stay short.
    std::map<VertexId, VertexId> m;
    VertexId next = 0;
    for (VertexId v : t.graph.vertices()) m[v] = next++;
    Triangulation out;
    out.g = m.at(t.g);
    out.outer = {m.at(t.outer[0]), m.at(t.outer[1]), m.at(t.outer[2])};
    for (const auto& [v, nb] : t.graph.rot) {
        std::vector<VertexId> nn;
        for (VertexId u : nb) nn.push_back(m.at(u));
        out.graph.rot[m.at(v)] = std::move(nn);
    }
    t = std::move(out);
}

}  // namespace

std::map<std::string, Triangulation> enumerate_family(const std::vector<Triangulation>& seeds,
                                                      int max_vertices, int max_height,
                                                      int jobs) {
    std::map<std::string, Triangulation> classes;
    std::mutex mtx;
    std::deque<Triangulation> frontier;

    auto admit = [&](Triangulation g) -> bool {
        renumber_compact(g);
        auto fc = check_family_membership(g);
        if (!fc.member) return false;
        if (max_height >= 0 && fc.height > max_height) return false;
        std::string code = canonical_code(g);
        std::lock_guard<std::mutex> lock(mtx);
        if (classes.count(code)) return false;
        classes.emplace(std::move(code), g);
        frontier.push_back(std::move(g));
        return true;
    };

    for (const auto& s : seeds) {
        if (static_cast<int>(s.size()) <= max_vertices) admit(s);
    }

    auto expand = [&](const Triangulation& g) {
        int n = static_cast<int>(g.size());
        int m = static_cast<int>(g.outer_cycle_without_g().size());
        if (n + m <= max_vertices) admit(apply_A(g));
        if (n + 1 <= max_vertices) {
            for (OpKind k : {OpKind::B, OpKind::C}) {
                for (auto [a, b] : op_sites(g, k)) admit(apply_edge_op(g, k, a, b));
            }
        }
    };

    if (jobs <= 1) {
        while (true) {
            Triangulation g;
            {
                std::lock_guard<std::mutex> lock(mtx);
                if (frontier.empty()) break;
                g = std::move(frontier.front());
                frontier.pop_front();
            }
            expand(g);
        }
    } else {
        // Frontier workers: the dedupe map is the single shared structure.
        std::atomic<int> active{0};
        auto worker = [&]() {
            while (true) {
                Triangulation g;
                {
                    std::lock_guard<std::mutex> lock(mtx);
                    if (frontier.empty()) {
                        if (active.load() == 0) return;
                    } else {
                        g = std::move(frontier.front());
                        frontier.pop_front();
                        active.fetch_add(1);
                    }
                }
                if (g.size() == 0) {
                    std::this_thread::yield();
                    continue;
                }
                expand(g);
                active.fetch_sub(1);
            }
        };
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return classes;
}

}  // namespace barnette
