#pragma once

// Lie algebras under constraints: centralizer of a generator, quotient by a
// central ideal, and the isomorphism invariants used to identify the
// result. Everything here is exact.

#include "dynalg/bilinear.hpp"
#include "dynalg/exact.hpp"
#include "dynalg/linalg.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace dynalg::constraint {

using bilinear::StructureConstants;
using Coords = std::vector<Rational>;

class Subalgebra {
public:
    /// Throws InputError on dependent vectors and ClosureError if the span
    /// is not closed under the parent bracket.
    Subalgebra(std::shared_ptr<const StructureConstants> parent, std::vector<Coords> basis_vectors);

    [[nodiscard]] const StructureConstants& parent() const { return *parent_; }
    [[nodiscard]] const std::shared_ptr<const StructureConstants>& parent_ptr() const { return parent_; }
    [[nodiscard]] const std::vector<Coords>& basis_vectors() const { return basis_; }
    [[nodiscard]] std::size_t dim() const { return basis_.size(); }

    /// Coordinates of a parent vector in this subalgebra's basis, if inside.
    [[nodiscard]] std::optional<Coords> coordinates_of(const Coords& v) const;

    /// Structure constants in the basis_vectors basis.
    [[nodiscard]] StructureConstants structure_constants() const;

private:
    std::shared_ptr<const StructureConstants> parent_;
    std::vector<Coords> basis_;
    std::unique_ptr<exact::ColumnSpaceSolver> solver_;
};

/// Null space of X -> [X, z].
Subalgebra centralizer(std::shared_ptr<const StructureConstants> sc, const Coords& z);

/// sub / span(ideal), with ideal given in parent coordinates. The ideal
/// must lie in sub and be central there (InputError otherwise).
StructureConstants quotient(const Subalgebra& sub, const std::vector<Coords>& ideal);

struct Signature {
    std::size_t plus = 0;
    std::size_t minus = 0;
    std::size_t zero = 0;

    friend bool operator==(const Signature&, const Signature&) = default;
};

struct KillingForm {
    exact::Matrix matrix;
    Signature signature;
};

KillingForm killing(const StructureConstants& sc);

/// Inertia of a symmetric rational matrix by congruence reduction.
Signature signature(const exact::Matrix& symmetric);

/// Minimal centralizer dimension over random rational elements. Throws
/// NotSemisimpleError on a degenerate Killing form.
std::size_t rank(const StructureConstants& sc, std::uint64_t seed = 0x5eed);

std::size_t center_dimension(const StructureConstants& sc);
/// dim [g, g]
std::size_t derived_dimension(const StructureConstants& sc);

/// (M_ab)_ij = g_aa d_ai d_bj - g_bb d_bi d_aj for the 15 pairs a < b.
std::vector<std::array<std::array<int, 6>, 6>> defining_matrices();
StructureConstants defining_rep();

struct InvariantSummary {
    std::size_t dim = 0;
    Signature killing;
    std::size_t rank = 0;
    std::size_t derived_dim = 0;
    bool semisimple = false;
};

InvariantSummary invariants(const StructureConstants& sc, std::uint64_t seed = 0x5eed);

struct MatchReport {
    InvariantSummary left;
    InvariantSummary right;
    bool dim = false;
    bool killing = false;
    bool rank = false;
    bool derived = false;

    [[nodiscard]] bool match() const { return dim && killing && rank && derived; }
    [[nodiscard]] nlohmann::json to_json() const;
};

MatchReport match_invariants(const StructureConstants& a, const StructureConstants& b, std::uint64_t seed = 0x5eed);

/// Toy algebras used as references.
StructureConstants su2_compact();  // [e1, e2] = e3 cyclic
StructureConstants abelian(std::size_t dim);
StructureConstants u1_plus_su2();  // z, e1, e2, e3

struct DescentReport {
    std::size_t parent_dim = 0;
    std::size_t centralizer_dim = 0;
    std::size_t quotient_dim = 0;
    Signature killing_signature;
    std::size_t rank = 0;
    std::size_t center_dim = 0;
    bool parent_jacobi = false;
    bool quotient_jacobi = false;
    MatchReport match;

    [[nodiscard]] bool match_ok() const { return match.match(); }
    [[nodiscard]] nlohmann::json to_json() const;
};

/// sp(8,R) -> centralizer of the constraint generator -> quotient, compared
/// against the defining so(4,2). `constraint` is a form in the real span of
/// sp8_basis(); defaults to i((N1+N2) - (N3+N4)).
DescentReport descent_chain(std::optional<bilinear::BilinearForm> constraint = std::nullopt,
                            std::uint64_t seed = 0x5eed);

/// The quotient algebra of the default chain.
StructureConstants descent_quotient();

}  // namespace dynalg::constraint
