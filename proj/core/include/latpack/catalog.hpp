#pragma once

#include <functional>

#include "latpack/constructions.hpp"

namespace latpack {

// A named lattice with its expected invariants.  The builder is lazy so
// that listing the catalog costs nothing.
struct CatalogEntry {
    std::string name;
    std::string summary;
    int dim;
    std::function<Lattice()> build;
    QSqrt2 det;
    QSqrt2 min_norm;
    std::uint64_t kissing;
};

const std::vector<CatalogEntry>& lattice_catalog();

// Entry lookup by exact name; null when absent.
const CatalogEntry* catalog_find(const std::string& name);

// Builds the named lattice; throws PreconditionError for unknown names.
Lattice catalog_lattice(const std::string& name);

struct CatalogCheck {
    QSqrt2 det;
    QSqrt2 min_norm;
    std::uint64_t kissing = 0;
    bool det_ok = false;
    bool min_ok = false;
    bool kissing_ok = false;
    bool ok() const { return det_ok && min_ok && kissing_ok; }
};

// Recomputes determinant, minimum, and kissing number by enumeration and
// compares them with the catalog expectations.
CatalogCheck catalog_verify(const CatalogEntry& e, const EnumOptions& opts = {});

// Three-dimensional family with Gram [[p+q, q, q], [q, p+q, q-p],
// [q, q-p, p+q]] for p = u^2, q = v^2, determinant 4 p^2 q.  Taking the
// squared generator lengths as parameters keeps the whole family inside
// Q(sqrt2): p = q = 1 is face-centred cubic, p = 2, q = 1 body-centred,
// and p = sqrt2/2, q = 1/2 the isodual mean-centred cuboidal lattice.
Lattice uv_lattice(const QSqrt2& u_sq, const QSqrt2& v_sq);

} // namespace latpack
