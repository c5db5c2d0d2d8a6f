#pragma once

#include <set>
#include <string>
#include <vector>

#include "wlab/group.hpp"

namespace wlab {

/// Finite simplicial complex over indexed vertices; closed under faces.
struct SimplicialComplex {
    int num_vertices = 0;
    std::set<std::vector<int>> simplices;  // each sorted ascending, nonempty

    int dimension() const;
    void insert_closed(std::vector<int> simplex);
    bool empty() const { return simplices.empty(); }
    std::vector<std::vector<int>> of_dim(int d) const;

    std::string to_json(const std::vector<std::string>& vertex_names = {}) const;
};

SimplicialComplex complex_from_maximal(int num_vertices,
                                       const std::vector<std::vector<int>>& maximal);
SimplicialComplex complex_from_json(const std::string& text);

struct HomologyProfile {
    std::vector<long long> betti;                  // reduced Betti numbers per dimension
    std::vector<std::vector<long long>> torsion;   // torsion coefficients per dimension
    long long euler = 0;                           // unreduced Euler characteristic

    bool trivial() const;
    std::string to_json() const;
};

/// Reduced integral simplicial homology via Smith normal form over exact
/// arbitrary-precision integers.
HomologyProfile homology(const SimplicialComplex& c);

/// Diagonal of the Smith normal form (nonzero entries, each dividing the next),
/// exposed for the matrix-level tests.
std::vector<std::string> smith_diagonal(const std::vector<std::vector<long long>>& m);

enum class ContractibleVerdict { CollapsedToPoint, HomologyTrivialOnly, NotContractible };

struct ContractibleReport {
    ContractibleVerdict verdict;
    std::string witness;  // nontrivial homology description when not contractible
};

/// Greedy free-face collapse in deterministic order; falls back to the
/// homology certificate (which does not certify simple connectivity).
ContractibleReport certify_contractible(const SimplicialComplex& c);

struct FinitePoset {
    std::vector<std::string> labels;
    std::vector<std::vector<bool>> leq;

    int size() const { return static_cast<int>(labels.size()); }
    bool valid_order() const;
};

SimplicialComplex order_complex(const FinitePoset& p);

/// Join P1 * P2: elements P1 u (P1 x P2) u P2, pairs above their coordinates,
/// everything ordered componentwise.
FinitePoset poset_join(const FinitePoset& p1, const FinitePoset& p2);

/// Iterated join *_{a} P_a as the flat poset of nonempty partial choices.
FinitePoset poset_join_many(const std::vector<FinitePoset>& parts);

}  // namespace wlab
