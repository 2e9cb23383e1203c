#ifndef ASEP_REFERENCE_TABLES_HPP
#define ASEP_REFERENCE_TABLES_HPP

#include <string>
#include <utility>
#include <vector>

namespace asep::tables {

// Bundled reference data used by `verify` and the integration suite.
// Polynomials are in the canonical text format over the model's ring.

// Two-site open chain, unnormalized stationary weights.
inline std::vector<std::pair<std::string, std::string>> open2_measure() {
    return {
        {"BB", "alpha^2"},
        {"BO", "alpha^2*beta + alpha*beta^2 + alpha*beta*q"},
        {"OB", "alpha*beta"},
        {"OO", "beta^2"},
    };
}

// Ring chain for lambda = (4,3,2,1): the six states with first entry 1.
inline std::vector<std::pair<std::string, std::string>> masep4_measure() {
    return {
        {"1234", "9*t^3 + 7*t^2 + 7*t + 1"},
        {"1243", "3*t^3 + 9*t^2 + 9*t + 3"},
        {"1324", "3*t^3 + 11*t^2 + 5*t + 5"},
        {"1342", "3*t^3 + 9*t^2 + 9*t + 3"},
        {"1423", "5*t^3 + 5*t^2 + 11*t + 3"},
        {"1432", "t^3 + 7*t^2 + 7*t + 9"},
    };
}

// Totally asymmetric ring chain for lambda = (4,3,2,1), y = 0: the six
// states with first entry 1, and their factored forms (monomial times the
// attached polynomials of the listed permutations).
inline std::vector<std::pair<std::string, std::string>> tasep4_measure() {
    return {
        {"1234", "x1^3*x2"},
        {"1243", "x1^3*x2 + x1^3*x3 + x1^2*x2*x3"},
        {"1324", "x1^3*x2 + x1^2*x2^2 + x1^3*x3 + x1^2*x2*x3 + x1*x2^2*x3"},
        {"1342", "x1^3*x2 + x1^2*x2^2 + x1*x2^3"},
        {"1423", "x1^3*x2 + x1^2*x2^2 + x1^2*x2*x3"},
        {"1432",
         "x1^3*x2 + x1^3*x3 + x1^2*x2^2 + 2*x1^2*x2*x3 + x1*x2^3 + 2*x1*x2^2*x3 + x2^3*x3"},
    };
}

struct TasepFactorization {
    std::string state;
    int k;
    std::string monomial;
    std::vector<std::string> factor_perms; // one-line notation
};

inline std::vector<TasepFactorization> tasep4_factorizations() {
    return {
        {"1234", 0, "x1^3*x2", {}},
        {"1243", 1, "x1^2", {"1342"}},
        {"1324", 1, "x1", {"1432"}},
        {"1342", 1, "x1*x2", {"1423"}},
        {"1423", 1, "x1^2*x2", {"1243"}},
        {"1432", 2, "1", {"1342", "1423"}},
    };
}

// Five-state demo chain: tree-theorem measure and its compact form.
inline std::vector<std::pair<std::string, std::string>> demo5_tree_measure() {
    return {
        {"1", "2*q^3 + q^2 + q + 2"},
        {"2", "q^4 + 3*q^3 + 4*q^2 + 3*q + 1"},
        {"3", "2*q^3 + 2*q^2 + q + 1"},
        {"4", "q^3 + q^2 + 2*q + 2"},
        {"5", "2*q^3 + 4*q^2 + 4*q + 2"},
    };
}

inline std::vector<std::pair<std::string, std::string>> demo5_compact_measure() {
    return {
        {"1", "2*q^2 - q + 2"},
        {"2", "q^3 + 2*q^2 + 2*q + 1"},
        {"3", "2*q^2 + 1"},
        {"4", "q^2 + 2"},
        {"5", "2*q^2 + 2*q + 2"},
    };
}

// Weights of the six spanning in-trees of the demo chain rooted at state 1.
inline std::vector<std::string> demo5_root1_tree_weights() {
    return {"q^3", "q^3", "q^2", "q", "1", "1"};
}

// Tree-measure / tableaux-measure ratio at alpha = beta = q = 1 for the
// open chain on n = 2..6 sites.
inline std::vector<std::pair<int, std::string>> tree_tableaux_ratio_at_ones() {
    return {
        {2, "1"},
        {3, "4"},
        {4, "840"},
        {5, "2285015040"},
        {6, "11335132600511975880768000"},
    };
}

} // namespace asep::tables

#endif
