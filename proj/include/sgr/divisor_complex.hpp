#pragma once

#include <bit>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "sgr/errors.hpp"
#include "sgr/linalg.hpp"
#include "sgr/semigroup.hpp"

namespace sgr {

/// Squarefree divisor complex of a semigroup degree s: the simplicial complex
/// on the presentation indices i with s - m_i in S, whose faces F satisfy
/// s - sum_{i in F} m_i in S. Vertices index the presentation list, so a
/// non-minimal presentation yields the resolution over one variable per
/// listed generator. Faces are stored as bitmasks over `vertices`
/// (local positions), grouped and sorted by size; the empty face is present
/// whenever s is a member, which construction guarantees.
template <class D>
struct DivisorComplex {
    D degree;
    std::vector<int> vertices;                     // global generator indices
    std::vector<std::vector<std::uint32_t>> faces; // faces[k] = masks of size-k faces, sorted
};

template <class SG>
DivisorComplex<typename SG::degree_type> divisor_complex(const SG& s_grp,
                                                         const typename SG::degree_type& s) {
    using D = typename SG::degree_type;
    if (!s_grp.contains(s)) throw DegreeNotInSemigroup();
    DivisorComplex<D> c;
    c.degree = s;
    const auto& gens = s_grp.presentation();
    std::vector<D> vgens;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (s_grp.contains(deg_sub(s, gens[i]))) {
            c.vertices.push_back(static_cast<int>(i));
            vgens.push_back(gens[i]);
        }
    }
    const std::size_t v = c.vertices.size();
    c.faces.assign(v + 1, {});
    c.faces[0].push_back(0);  // empty face
    std::unordered_set<std::uint32_t> present{0};
    // Downward-closed search by face size; a candidate is tested only when
    // all its facets are already faces.
    for (std::size_t k = 1; k <= v; ++k) {
        const auto& below = c.faces[k - 1];
        std::unordered_set<std::uint32_t> seen;
        for (std::uint32_t f : below) {
            for (std::size_t i = 0; i < v; ++i) {
                std::uint32_t bit = 1u << i;
                if (f & bit) continue;
                std::uint32_t cand = f | bit;
                if (!seen.insert(cand).second) continue;
                bool closed = true;
                for (std::size_t j = 0; j < v && closed; ++j)
                    if (cand & (1u << j))
                        closed = present.count(cand ^ (1u << j)) > 0;
                if (!closed) continue;
                D rem = s;
                for (std::size_t j = 0; j < v; ++j)
                    if (cand & (1u << j)) rem = deg_sub(rem, vgens[j]);
                if (s_grp.contains(rem)) {
                    c.faces[k].push_back(cand);
                    present.insert(cand);
                }
            }
        }
        std::sort(c.faces[k].begin(), c.faces[k].end());
        if (c.faces[k].empty()) {
            c.faces.resize(k);
            break;
        }
    }
    return c;
}

/// Ranks of the reduced homology over a characteristic-0 field.
/// Entry [i] is the rank of H~_{i-1}, so [0] corresponds to H~_{-1}
/// (nonzero only for the complex {empty face} alone) and the entry at
/// homological index i is exactly the Betti multiplicity at `degree`.
template <class D>
std::vector<int> reduced_homology_ranks(const DivisorComplex<D>& c) {
    const std::size_t levels = c.faces.size();  // sizes 0..levels-1 present
    // boundary_rank[k] = rank of the map from size-(k) faces to size-(k-1).
    std::vector<int> boundary_rank(levels + 1, 0);
    for (std::size_t k = 1; k < levels; ++k) {
        const auto& rows = c.faces[k];
        const auto& cols_faces = c.faces[k - 1];
        std::vector<std::vector<long long>> mat(
            rows.size(), std::vector<long long>(cols_faces.size(), 0));
        for (std::size_t r = 0; r < rows.size(); ++r) {
            std::uint32_t f = rows[r];
            int sign = 1;
            for (std::uint32_t bits = f; bits; bits &= bits - 1) {
                std::uint32_t facet = f ^ (bits & -bits);
                auto it = std::lower_bound(cols_faces.begin(), cols_faces.end(), facet);
                mat[r][static_cast<std::size_t>(it - cols_faces.begin())] = sign;
                sign = -sign;
            }
        }
        boundary_rank[k] = exact_rank(std::move(mat));
    }
    std::vector<int> ranks(levels, 0);
    for (std::size_t k = 0; k < levels; ++k) {
        int dim = static_cast<int>(c.faces[k].size());
        ranks[k] = dim - boundary_rank[k] - (k + 1 < levels ? boundary_rank[k + 1] : 0);
    }
    return ranks;
}

/// Reduced Euler characteristic from face counts: sum_d (-1)^d #faces of dim d,
/// including the empty face at dimension -1.
template <class D>
long long reduced_euler_characteristic(const DivisorComplex<D>& c) {
    long long chi = 0;
    int sign = -1;  // empty face sits in dimension -1
    for (const auto& level : c.faces) {
        chi += sign * static_cast<long long>(level.size());
        sign = -sign;
    }
    return chi;
}

}  // namespace sgr
