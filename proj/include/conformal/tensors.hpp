#ifndef CONFORMAL_TENSORS_HPP
#define CONFORMAL_TENSORS_HPP

#include <string>
#include <vector>

#include "conformal/tower.hpp"

namespace conformal {

/// g_{mu nu} for the paravector basis of one level. Diagonal with
/// entries +-1; trace equals plus - minus of the signature.
struct MetricTable {
    int level = 0;
    std::vector<std::vector<Rational>> g;
};

/// Antisymmetric table of sigma_{mu nu} (or s_{mu nu}) matrices.
struct SpinTable {
    int level = 0;
    std::vector<std::vector<BicMatrix>> entries;
};

/// Symmetrized product (a bar(b) + b bar(a))/2, extracted as a scalar.
Bicomplex real_product(const BicMatrix& a, const BicMatrix& b);

MetricTable metric(const AlgebraLevel& level);

/// Antisymmetrized product (a bar(b) - b bar(a))/2.
BicMatrix wedge(const BicMatrix& a, const BicMatrix& b);

/// sigma_{mu nu} = e_mu /\ e_nu over the paravector basis.
SpinTable spin_tensor(const AlgebraLevel& level);

/// s_{mu nu} = sigma_{mu nu} / 2.
SpinTable spin_ops(const AlgebraLevel& level);

/// A signed monomial over named primitive units; the empty word is +-1.
struct UnitWord {
    int sign = 0; // 0 encodes the zero matrix
    std::vector<std::string> factors;

    friend bool operator==(const UnitWord&, const UnitWord&) = default;
};

std::string to_string(const UnitWord& w);

/// A named unit matrix usable as a word factor.
struct Primitive {
    std::string name;
    BicMatrix mat;
};

/// The rendering vocabulary for a level's sigma table, in canonical
/// factor order: scalar units i, j first, block units imath, jmath,
/// then lifted generators. Level 1 uses its own generators (the
/// level-0 lift degenerates to the scalar i); level 0 just e_1 and j.
/// With unrolled = true the vocabulary holds i, j and the block units
/// of every tensor slot instead.
std::vector<Primitive> table_vocabulary(const AlgebraLevel& level, bool unrolled = false);

/// Exhaustive search for the shortest signed product of <= cap
/// distinct vocabulary units equal to m; ties broken by vocabulary
/// order. Throws NoMatch when m is not such a monomial.
UnitWord decompose(const BicMatrix& m, const std::vector<Primitive>& vocab, int cap = 4);
UnitWord decompose(const BicMatrix& m, const AlgebraLevel& level, int cap = 4);

enum class TableFormat { text, json };

/// Full symbolic sigma table of a level.
std::string render_table(const AlgebraLevel& level, TableFormat format, int cap = 4,
                         bool unrolled = false);

} // namespace conformal

#endif
