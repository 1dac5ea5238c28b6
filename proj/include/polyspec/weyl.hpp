#pragma once

#include <cstddef>
#include <vector>

#include "polyspec/root_system.hpp"

namespace polyspec {

// Finite reflection group generated by the simple reflections, enumerated by
// breadth-first closure. Elements are orthogonal matrices acting on
// std_coords; because the realizations are Euclidean the same matrices act on
// chamber vectors. Element 0 is the identity and the enumeration order is
// deterministic (closure is explored in generator order).
struct WeylGroup {
    std::vector<Eigen::MatrixXd> elements;
    std::vector<int> generator_index;  // position of each simple reflection
    int longest = 0;                   // position of w0
};

inline constexpr std::size_t kWeylElementCap = 10000;

WeylGroup make_weyl_group(const RootSystem& rs, std::size_t max_elements = kWeylElementCap);

Functional weyl_apply(const RootSystem& rs, const WeylGroup& w, int idx, const Functional& f);
ChamberVector weyl_apply(const WeylGroup& w, int idx, const ChamberVector& h);

struct DominantProjection {
    Functional value;
    int witness;  // element index mapping the input to the dominant cone
};

// Unique dominant representative of the W-orbit. The witness is the first
// element in enumeration order that works, so repeated calls agree.
DominantProjection dominant_project(const RootSystem& rs, const WeylGroup& w, const Functional& f);

// iota = -w0, as an involution of the dual space (and of the chamber).
Functional opposition(const RootSystem& rs, const WeylGroup& w, const Functional& f);
ChamberVector opposition(const RootSystem& rs, const WeylGroup& w, const ChamberVector& h);

// mu must be dominant. True when iota fixes mu, equivalently -mu lies in the
// W-orbit of mu.
bool is_hermitian_dominant(const RootSystem& rs, const WeylGroup& w, const Functional& mu,
                           double tol = 1e-10);

// Whether the fixed cone of iota on the dominant chamber has dimension at
// least two: true for the B2 preset and products of at least two factors,
// false for the A2 family and a single rank-one factor.
bool limit_cone_criterion_applicable(const RootSystem& rs);

}  // namespace polyspec
