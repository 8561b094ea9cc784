#include "dynalg/constraint.hpp"

#include "dynalg/errors.hpp"
#include "dynalg/linalg.hpp"

#include <limits>
#include <random>

namespace dynalg::constraint {

namespace {

Coords unit(std::size_t n, std::size_t k) {
    Coords v(n);
    v[k] = 1;
    return v;
}

bool is_zero(const Coords& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

std::string vector_label(const StructureConstants& parent, const Coords& v, std::size_t fallback) {
    std::size_t hit = v.size();
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0) continue;
        if (v[k] != 1 || hit != v.size()) return "v" + std::to_string(fallback);
        hit = k;
    }
    return hit == v.size() ? "v" + std::to_string(fallback) : parent.labels()[hit];
}

// columns: ad_x applied to every basis element, i.e. X_j -> [x, X_j]
exact::Matrix ad_matrix(const StructureConstants& sc, const Coords& x) {
    const std::size_t n = sc.dim();
    exact::Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& t : sc.terms(i, j)) m(t.k, j) += x[i] * t.value;
    }
    return m;
}

std::size_t centralizer_dim(const StructureConstants& sc, const Coords& x) {
    return sc.dim() - exact::rank(ad_matrix(sc, x));
}

}  // namespace

Subalgebra::Subalgebra(std::shared_ptr<const StructureConstants> parent, std::vector<Coords> basis_vectors)
    : parent_(std::move(parent)), basis_(std::move(basis_vectors)) {
    const std::size_t n = parent_->dim();
    for (const auto& v : basis_)
        if (v.size() != n) throw InputError("Subalgebra: coordinate vector has wrong length");
    if (basis_.empty()) return;
    solver_ = std::make_unique<exact::ColumnSpaceSolver>(exact::Matrix::from_columns(basis_, n));
    for (std::size_t i = 0; i < basis_.size(); ++i)
        for (std::size_t j = i + 1; j < basis_.size(); ++j)
            if (!coordinates_of(parent_->bracket(basis_[i], basis_[j])))
                throw ClosureError("Subalgebra: bracket of basis vectors " + std::to_string(i) + " and " +
                                   std::to_string(j) + " leaves the span");
}

std::optional<Coords> Subalgebra::coordinates_of(const Coords& v) const {
    if (basis_.empty()) return is_zero(v) ? std::optional<Coords>(Coords{}) : std::nullopt;
    return solver_->solve(v);
}

StructureConstants Subalgebra::structure_constants() const {
    if (basis_.empty()) throw InputError("Subalgebra::structure_constants: empty subalgebra");
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < basis_.size(); ++k) labels.push_back(vector_label(*parent_, basis_[k], k));
    return StructureConstants::from_brackets(std::move(labels), [&](std::size_t i, std::size_t j) {
        auto x = coordinates_of(parent_->bracket(basis_[i], basis_[j]));
        if (!x) throw ClosureError("Subalgebra: not closed");
        return *x;
    });
}

Subalgebra centralizer(std::shared_ptr<const StructureConstants> sc, const Coords& z) {
    if (z.size() != sc->dim()) throw InputError("centralizer: coordinate vector has wrong length");
    if (is_zero(z)) throw InputError("centralizer: z must be nonzero");
    auto kernel = exact::null_space(ad_matrix(*sc, z));
    return {std::move(sc), std::move(kernel)};
}

StructureConstants quotient(const Subalgebra& sub, const std::vector<Coords>& ideal) {
    const auto& parent = sub.parent();
    const std::size_t d = sub.dim();
    std::vector<Coords> ideal_local;
    for (const auto& v : ideal) {
        auto c = sub.coordinates_of(v);
        if (!c) throw InputError("quotient: ideal vector does not lie in the subalgebra");
        for (const auto& b : sub.basis_vectors())
            if (!is_zero(parent.bracket(b, v))) throw InputError("quotient: ideal is not central");
        ideal_local.push_back(std::move(*c));
    }
    if (!ideal_local.empty() && exact::rank(exact::Matrix::from_columns(ideal_local, d)) != ideal_local.size())
        throw InputError("quotient: ideal vectors are dependent");

    // Complement: subalgebra basis vectors that extend the ideal to a basis.
    std::vector<Coords> current = ideal_local;
    std::vector<std::size_t> complement;
    for (std::size_t j = 0; j < d && current.size() < d; ++j) {
        current.push_back(unit(d, j));
        if (exact::rank(exact::Matrix::from_columns(current, d)) == current.size())
            complement.push_back(j);
        else
            current.pop_back();
    }
    const std::size_t m = complement.size();

    std::vector<Coords> new_basis;  // complement first, then ideal, in subalgebra coordinates
    for (auto j : complement) new_basis.push_back(unit(d, j));
    new_basis.insert(new_basis.end(), ideal_local.begin(), ideal_local.end());
    const exact::ColumnSpaceSolver solver(exact::Matrix::from_columns(new_basis, d));

    std::vector<std::string> labels;
    for (std::size_t k = 0; k < m; ++k)
        labels.push_back(vector_label(parent, sub.basis_vectors()[complement[k]], complement[k]));

    return StructureConstants::from_brackets(std::move(labels), [&](std::size_t i, std::size_t j) {
        const Coords br = parent.bracket(sub.basis_vectors()[complement[i]], sub.basis_vectors()[complement[j]]);
        auto local = sub.coordinates_of(br);
        if (!local) throw ClosureError("quotient: subalgebra not closed");
        auto x = solver.solve(*local);
        if (!x) throw ClosureError("quotient: coordinate solve failed");
        x->resize(m);
        return *x;
    });
}

Signature signature(const exact::Matrix& symmetric) {
    const std::size_t n = symmetric.rows();
    if (symmetric.cols() != n) throw InputError("signature: matrix must be square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (symmetric(i, j) != symmetric(j, i)) throw InputError("signature: matrix must be symmetric");

    exact::Matrix a = symmetric;
    auto swap_index = [&](std::size_t p, std::size_t q) {
        if (p == q) return;
        for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(q, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(a(i, p), a(i, q));
    };

    Signature s;
    std::size_t k = 0;
    while (k < n) {
        std::size_t p = k;
        while (p < n && a(p, p) == 0) ++p;
        if (p == n) {
            // all remaining diagonal entries vanish; fold a nonzero
            // off-diagonal entry onto the diagonal by congruence
            std::size_t pp = n, qq = n;
            for (std::size_t i = k; i < n && pp == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (a(i, j) != 0) {
                        pp = i;
                        qq = j;
                        break;
                    }
            if (pp == n) break;
            for (std::size_t j = 0; j < n; ++j) a(pp, j) += a(qq, j);
            for (std::size_t i = 0; i < n; ++i) a(i, pp) += a(i, qq);
            continue;
        }
        swap_index(p, k);
        const Rational d = a(k, k);
        (d > 0 ? s.plus : s.minus)++;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            const Rational f = a(i, k) / d;
            for (std::size_t j = k + 1; j < n; ++j)
                if (a(k, j) != 0) a(i, j) -= f * a(k, j);
        }
        for (std::size_t i = k + 1; i < n; ++i) a(i, k) = a(k, i) = 0;
        ++k;
    }
    s.zero = n - s.plus - s.minus;
    return s;
}

KillingForm killing(const StructureConstants& sc) {
    const std::size_t n = sc.dim();
    exact::Matrix b(n, n);
    // B_ij = sum_{k,l} c(i, l, k) c(j, k, l)
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Rational acc = 0;
            for (std::size_t l = 0; l < n; ++l)
                for (const auto& t : sc.terms(i, l)) {
                    const Rational& other = sc(j, t.k, l);
                    if (other != 0) acc += t.value * other;
                }
            b(i, j) = acc;
            b(j, i) = acc;
        }
    return {b, signature(b)};
}

std::size_t rank(const StructureConstants& sc, std::uint64_t seed) {
    if (killing(sc).signature.zero != 0) throw NotSemisimpleError("rank: Killing form is degenerate");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-7, 7);
    std::size_t best = std::numeric_limits<std::size_t>::max();
    int hits = 0;
    for (int draw = 0; draw < 24 && hits < 3; ++draw) {
        Coords x(sc.dim());
        for (auto& v : x) v = coeff(rng);
        if (is_zero(x)) continue;
        const std::size_t d = centralizer_dim(sc, x);
        if (d < best) {
            best = d;
            hits = 1;
        } else if (d == best) {
            ++hits;
        }
    }
    return best;
}

std::size_t center_dimension(const StructureConstants& sc) {
    const std::size_t n = sc.dim();
    exact::Matrix m(n * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& t : sc.terms(i, j)) m(i * n + t.k, j) = t.value;
    return n - exact::rank(m);
}

std::size_t derived_dimension(const StructureConstants& sc) {
    const std::size_t n = sc.dim();
    std::vector<Coords> cols;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Coords v(n);
            for (const auto& t : sc.terms(i, j)) v[t.k] = t.value;
            if (!is_zero(v)) cols.push_back(std::move(v));
        }
    if (cols.empty()) return 0;
    return exact::rank(exact::Matrix::from_columns(cols, n));
}

std::vector<std::array<std::array<int, 6>, 6>> defining_matrices() {
    const std::array<int, 6> g{-1, -1, -1, -1, 1, 1};
    std::vector<std::array<std::array<int, 6>, 6>> out;
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = a + 1; b < 6; ++b) {
            std::array<std::array<int, 6>, 6> m{};
            m[a][b] = g[a];
            m[b][a] = -g[b];
            out.push_back(m);
        }
    return out;
}

StructureConstants defining_rep() {
    const auto mats = defining_matrices();
    std::vector<std::pair<std::size_t, std::size_t>> where;  // (a, b) of each generator
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = a + 1; b < 6; ++b) {
            where.emplace_back(a, b);
            labels.push_back("M" + std::to_string(a + 1) + std::to_string(b + 1));
        }
    const std::size_t n = mats.size();
    return StructureConstants::from_brackets(std::move(labels), [&](std::size_t x, std::size_t y) {
        std::array<std::array<int, 6>, 6> c{};
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 6; ++j)
                for (std::size_t k = 0; k < 6; ++k) c[i][j] += mats[x][i][k] * mats[y][k][j] - mats[y][i][k] * mats[x][k][j];
        Coords coords(n);
        std::array<std::array<int, 6>, 6> rebuilt{};
        for (std::size_t k = 0; k < n; ++k) {
            const auto [a, b] = where[k];
            const int lead = mats[k][a][b];
            coords[k] = make_rational(c[a][b], lead);
            for (std::size_t i = 0; i < 6; ++i)
                for (std::size_t j = 0; j < 6; ++j) rebuilt[i][j] += (c[a][b] / lead) * mats[k][i][j];
        }
        if (rebuilt != c) throw std::logic_error("defining_rep: commutator outside the span");
        return coords;
    });
}

InvariantSummary invariants(const StructureConstants& sc, std::uint64_t seed) {
    InvariantSummary s;
    s.dim = sc.dim();
    s.killing = killing(sc).signature;
    s.semisimple = s.killing.zero == 0;
    s.rank = s.semisimple ? rank(sc, seed) : 0;
    s.derived_dim = derived_dimension(sc);
    return s;
}

MatchReport match_invariants(const StructureConstants& a, const StructureConstants& b, std::uint64_t seed) {
    MatchReport r;
    r.left = invariants(a, seed);
    r.right = invariants(b, seed);
    r.dim = r.left.dim == r.right.dim;
    r.killing = r.left.killing == r.right.killing;
    r.rank = r.left.semisimple == r.right.semisimple && r.left.rank == r.right.rank;
    r.derived = r.left.derived_dim == r.right.derived_dim;
    return r;
}

namespace {

nlohmann::json to_json(const Signature& s) { return nlohmann::json::array({s.plus, s.minus, s.zero}); }

nlohmann::json to_json(const InvariantSummary& s) {
    return {{"dim", s.dim}, {"killing_signature", to_json(s.killing)}, {"rank", s.rank},
            {"derived_dim", s.derived_dim}, {"semisimple", s.semisimple}};
}

}  // namespace

nlohmann::json MatchReport::to_json() const {
    return {{"left", constraint::to_json(left)},
            {"right", constraint::to_json(right)},
            {"dim", dim},
            {"killing", killing},
            {"rank", rank},
            {"derived", derived},
            {"match", match()}};
}

nlohmann::json DescentReport::to_json() const {
    return {{"parent_dim", parent_dim},
            {"centralizer_dim", centralizer_dim},
            {"quotient_dim", quotient_dim},
            {"killing_signature", constraint::to_json(killing_signature)},
            {"rank", rank},
            {"center_dim", center_dim},
            {"parent_jacobi", parent_jacobi},
            {"quotient_jacobi", quotient_jacobi},
            {"match", match.match()},
            {"invariants", match.to_json()}};
}

StructureConstants su2_compact() {
    std::vector<Rational> c(27);
    auto set = [&](std::size_t i, std::size_t j, std::size_t k) {
        c[(i * 3 + j) * 3 + k] = 1;
        c[(j * 3 + i) * 3 + k] = -1;
    };
    set(0, 1, 2);
    set(1, 2, 0);
    set(2, 0, 1);
    return {{"e1", "e2", "e3"}, std::move(c)};
}

StructureConstants abelian(std::size_t dim) {
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < dim; ++k) labels.push_back("x" + std::to_string(k + 1));
    return {std::move(labels), std::vector<Rational>(dim * dim * dim)};
}

StructureConstants u1_plus_su2() {
    const StructureConstants su2 = su2_compact();
    std::vector<Rational> c(64);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k) c[((i + 1) * 4 + (j + 1)) * 4 + (k + 1)] = su2(i, j, k);
    return {{"z", "e1", "e2", "e3"}, std::move(c)};
}

namespace {

const std::shared_ptr<const StructureConstants>& sp8_constants() {
    static const auto sc = std::make_shared<const StructureConstants>(bilinear::structure_constants(bilinear::sp8_basis()));
    return sc;
}

}  // namespace

DescentReport descent_chain(std::optional<bilinear::BilinearForm> constraint, std::uint64_t seed) {
    const auto basis = bilinear::sp8_basis();
    const auto& sc = sp8_constants();
    const bilinear::BilinearForm z_form = constraint.value_or(bilinear::pair_number_difference());
    auto z = bilinear::span_coordinates(basis, z_form);
    if (!z) throw InputError("descent_chain: constraint generator is not in the real span of sp(8,R)");

    DescentReport r;
    r.parent_dim = sc->dim();
    r.parent_jacobi = sc->satisfies_jacobi();
    const Subalgebra cent = centralizer(sc, *z);
    r.centralizer_dim = cent.dim();
    const StructureConstants q = quotient(cent, {*z});
    r.quotient_dim = q.dim();
    r.quotient_jacobi = q.satisfies_jacobi();
    r.match = match_invariants(q, defining_rep(), seed);
    r.killing_signature = r.match.left.killing;
    r.rank = r.match.left.rank;
    r.center_dim = center_dimension(q);
    return r;
}

StructureConstants descent_quotient() {
    const auto basis = bilinear::sp8_basis();
    const auto& sc = sp8_constants();
    const auto z = *bilinear::span_coordinates(basis, bilinear::pair_number_difference());
    return quotient(centralizer(sc, z), {z});
}

}  // namespace dynalg::constraint
