#pragma once

// Semimagic squares: n x n nonnegative integer matrices whose rows and
// columns all sum to r, counted by H_n(r), and the Birkhoff polytope B_n whose
// dilates they are the lattice points of.

#include <vector>

#include "ehrhart/poly.hpp"
#include "ehrhart/polytope.hpp"
#include "ehrhart/report.hpp"

namespace ehrhart {

/// H_n(r) by dynamic programming over the residual column sums. 1 <= n <= 4.
Int count_semimagic(int n, long r);

/// H_n(0), ..., H_n(rmax).
std::vector<Int> semimagic_counts(int n, long rmax);

struct SemimagicTable {
    int n = 0;
    std::vector<Int> values;  // H_n(r) for r = 0..R
    Poly h_poly;              // H_n as a polynomial in r, degree (n-1)^2
    HStarData h;              // numerator over (1-x)^{n^2-2n+2}
};

struct AdgResult {
    SemimagicTable table;
    Report report;
};

/// Interpolates H_n from r = 0..(n-1)^2 and checks it against the remaining
/// counts, the roots -1..-(n-1), the symmetry H_n(-r) = (-1)^{n-1} H_n(r-n)
/// for r = 1..symmetry_max, and palindromy, degree and nonnegativity of h_n.
/// rmax below (n-1)^2 + 3 is raised to it.
AdgResult adg_report(int n, long rmax = 0, long symmetry_max = 12);

/// Convex hull of the n! permutation matrices, flattened row-major into R^{n^2}. 1 <= n <= 3.
RationalPolytope birkhoff_polytope(int n);

/// Geometric counts of dilates 0..2 against H_n, interior counts of dilates
/// r = n..n+3 against H_n(r-n), and h_n(1) against the normalized volume of a
/// placing triangulation.
Report birkhoff_bridge(int n);

}  // namespace ehrhart
