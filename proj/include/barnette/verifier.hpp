#ifndef BARNETTE_VERIFIER_HPP
#define BARNETTE_VERIFIER_HPP

#include <optional>
#include <string>

#include "barnette/graph.hpp"

namespace barnette {

enum class Flavor { Any, Compatible, Minus, Pm };

Flavor flavor_from_string(const std::string& s);
std::string flavor_to_string(Flavor f);

struct CompatibilityReport {
    bool is_hamiltonian = false;
    // Failure witness when not hamiltonian.
    std::string failure;           // missing-face / cycle-in-induced / disconnected / contains-g / empty
    bool compatible = false;       // x_i missing, deg<=4  =>  x_{i+2} in U
    bool minus_compatible = false; // x_i missing, deg<=4  =>  x_{i-2} in U
    bool pm = false;
    std::vector<int> compat_witnesses;        // outer positions violating compatible
    std::vector<int> minus_witnesses;         // outer positions violating (-)compatible

    bool satisfies(Flavor f) const {
        switch (f) {
            case Flavor::Any: return is_hamiltonian;
            case Flavor::Compatible: return is_hamiltonian && compatible;
            case Flavor::Minus: return is_hamiltonian && minus_compatible;
            case Flavor::Pm: return is_hamiltonian && pm;
        }
        return false;
    }
    std::string render() const;
};

// Definition-level check: g not in U, U induces a tree, U dominates every
// face (outer included), plus the directional compatibility flags over
// the counterclockwise outer cycle of G - g.
CompatibilityReport verify_hamiltonian_set(const Triangulation& t, const VertexSet& u);

}  // namespace barnette

#endif
