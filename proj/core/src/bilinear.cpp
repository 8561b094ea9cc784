#include "dynalg/bilinear.hpp"

#include "dynalg/errors.hpp"
#include "dynalg/linalg.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace dynalg::bilinear {

namespace {

QComplex half() { return QComplex(make_rational(1, 2)); }

QComplex delta(int i, int j) { return QComplex(i == j ? 1 : 0); }

enum class Kind { cross, create, annih };

struct Monomial {
    Kind kind;
    int i;
    int j;
    QComplex c;
};

// Monomials with nonzero coefficient; pair monomials listed once (i <= j).
std::vector<Monomial> monomials(const BilinearForm& x) {
    std::vector<Monomial> out;
    for (int i = 0; i < kModes; ++i)
        for (int j = 0; j < kModes; ++j)
            if (!x.cross(i, j).is_zero()) out.push_back({Kind::cross, i, j, x.cross(i, j)});
    for (int i = 0; i < kModes; ++i)
        for (int j = i; j < kModes; ++j) {
            QComplex pc = x.create_monomial(i, j);
            if (!pc.is_zero()) out.push_back({Kind::create, i, j, pc});
            QComplex pa = x.annih_monomial(i, j);
            if (!pa.is_zero()) out.push_back({Kind::annih, i, j, pa});
        }
    return out;
}

// res += c * [m1, m2] where m1, m2 are unit monomials.
void accumulate(BilinearForm& res, const Monomial& m1, const Monomial& m2, const QComplex& c);

void bracket_cross_cross(BilinearForm& res, int i, int j, int k, int l, const QComplex& c) {
    // [a_i^+ a_j, a_k^+ a_l] = d_jk a_i^+ a_l - d_il a_k^+ a_j
    if (j == k) res.add_cross(i, l, c);
    if (i == l) res.add_cross(k, j, -c);
}

void bracket_cross_create(BilinearForm& res, int i, int j, int k, int l, const QComplex& c) {
    // [a_i^+ a_j, a_k^+ a_l^+] = d_jk a_i^+ a_l^+ + d_jl a_i^+ a_k^+
    if (j == k) res.add_create(i, l, c);
    if (j == l) res.add_create(i, k, c);
}

void bracket_cross_annih(BilinearForm& res, int i, int j, int k, int l, const QComplex& c) {
    // [a_i^+ a_j, a_k a_l] = -d_ik a_j a_l - d_il a_k a_j
    if (i == k) res.add_annih(j, l, -c);
    if (i == l) res.add_annih(k, j, -c);
}

void bracket_annih_create(BilinearForm& res, int i, int j, int k, int l, const QComplex& c) {
    // [a_i a_j, a_k^+ a_l^+] = d_jk (a_l^+ a_i + d_il) + d_jl (a_k^+ a_i + d_ik)
    //                          + d_ik a_l^+ a_j + d_il a_k^+ a_j
    if (j == k) {
        res.add_cross(l, i, c);
        res.add_scalar(c * delta(i, l));
    }
    if (j == l) {
        res.add_cross(k, i, c);
        res.add_scalar(c * delta(i, k));
    }
    if (i == k) res.add_cross(l, j, c);
    if (i == l) res.add_cross(k, j, c);
}

void accumulate(BilinearForm& res, const Monomial& m1, const Monomial& m2, const QComplex& c) {
    const auto a = m1.kind;
    const auto b = m2.kind;
    if (a == Kind::cross && b == Kind::cross) return bracket_cross_cross(res, m1.i, m1.j, m2.i, m2.j, c);
    if (a == Kind::cross && b == Kind::create) return bracket_cross_create(res, m1.i, m1.j, m2.i, m2.j, c);
    if (a == Kind::cross && b == Kind::annih) return bracket_cross_annih(res, m1.i, m1.j, m2.i, m2.j, c);
    if (a == Kind::annih && b == Kind::create) return bracket_annih_create(res, m1.i, m1.j, m2.i, m2.j, c);
    if (a == b) return;  // pairs of creators (annihilators) commute
    // remaining orders are the reverses of the cases above
    accumulate(res, m2, m1, -c);
}

std::string mode_pair(int i, int j) { return std::to_string(i + 1) + std::to_string(j + 1); }

}  // namespace

std::size_t BilinearForm::idx(int i) {
    if (i < 0 || i >= kModes) throw InputError("BilinearForm: mode index out of range");
    return static_cast<std::size_t>(i);
}

BilinearForm BilinearForm::scalar(QComplex s) {
    BilinearForm f;
    f.scalar_ = std::move(s);
    return f;
}

BilinearForm BilinearForm::hop(int i, int j) {
    BilinearForm f;
    f.add_cross(i, j, 1);
    return f;
}

BilinearForm BilinearForm::mixer(int i, int j) {
    // a_j a_i^+ = a_i^+ a_j + d_ij
    BilinearForm f = hop(i, j);
    if (i == j) f.add_scalar(half());
    return f;
}

BilinearForm BilinearForm::create_pair(int i, int j) {
    BilinearForm f;
    f.add_create(i, j, 1);
    return f;
}

BilinearForm BilinearForm::annihilate_pair(int i, int j) {
    BilinearForm f;
    f.add_annih(i, j, 1);
    return f;
}

QComplex BilinearForm::create_monomial(int i, int j) const {
    if (i == j) return pc_[idx(i)][idx(i)];
    return pc_[idx(i)][idx(j)] + pc_[idx(j)][idx(i)];
}

QComplex BilinearForm::annih_monomial(int i, int j) const {
    if (i == j) return pa_[idx(i)][idx(i)];
    return pa_[idx(i)][idx(j)] + pa_[idx(j)][idx(i)];
}

void BilinearForm::add_cross(int i, int j, const QComplex& c) { cross_[idx(i)][idx(j)] += c; }

void BilinearForm::add_create(int i, int j, const QComplex& c) {
    if (i == j) {
        pc_[idx(i)][idx(i)] += c;
        return;
    }
    pc_[idx(i)][idx(j)] += c * half();
    pc_[idx(j)][idx(i)] += c * half();
}

void BilinearForm::add_annih(int i, int j, const QComplex& c) {
    if (i == j) {
        pa_[idx(i)][idx(i)] += c;
        return;
    }
    pa_[idx(i)][idx(j)] += c * half();
    pa_[idx(j)][idx(i)] += c * half();
}

bool BilinearForm::is_zero() const {
    for (std::size_t i = 0; i < kModes; ++i)
        for (std::size_t j = 0; j < kModes; ++j)
            if (!cross_[i][j].is_zero() || !pc_[i][j].is_zero() || !pa_[i][j].is_zero()) return false;
    return scalar_.is_zero();
}

BilinearForm BilinearForm::adjoint() const {
    BilinearForm f;
    for (std::size_t i = 0; i < kModes; ++i)
        for (std::size_t j = 0; j < kModes; ++j) {
            f.cross_[j][i] = cross_[i][j].conj();
            f.pc_[i][j] = pa_[i][j].conj();
            f.pa_[i][j] = pc_[i][j].conj();
        }
    f.scalar_ = scalar_.conj();
    return f;
}

std::vector<Rational> BilinearForm::coordinates() const {
    std::vector<QComplex> z;
    z.reserve(kCoordinateCount / 2);
    for (int i = 0; i < kModes; ++i)
        for (int j = 0; j < kModes; ++j) z.push_back(cross(i, j));
    for (int i = 0; i < kModes; ++i)
        for (int j = i; j < kModes; ++j) z.push_back(create_monomial(i, j));
    for (int i = 0; i < kModes; ++i)
        for (int j = i; j < kModes; ++j) z.push_back(annih_monomial(i, j));
    z.push_back(scalar_);
    std::vector<Rational> out;
    out.reserve(kCoordinateCount);
    for (const auto& q : z) out.push_back(q.re);
    for (const auto& q : z) out.push_back(q.im);
    return out;
}

std::string BilinearForm::to_string() const {
    std::ostringstream os;
    bool first = true;
    auto term = [&](const QComplex& c, const std::string& mono) {
        if (c.is_zero()) return;
        if (!first) os << " + ";
        first = false;
        os << "(" << dynalg::to_string(c.re);
        if (c.im != 0) os << (c.im > 0 ? "+" : "-") << dynalg::to_string(abs(c.im)) << "i";
        os << ")" << mono;
    };
    for (int i = 0; i < kModes; ++i)
        for (int j = 0; j < kModes; ++j)
            term(cross(i, j), "a" + std::to_string(i + 1) + "+a" + std::to_string(j + 1));
    for (int i = 0; i < kModes; ++i)
        for (int j = i; j < kModes; ++j) {
            term(create_monomial(i, j), "a" + std::to_string(i + 1) + "+a" + std::to_string(j + 1) + "+");
            term(annih_monomial(i, j), "a" + std::to_string(i + 1) + "a" + std::to_string(j + 1));
        }
    term(scalar_, "");
    if (first) os << "0";
    return os.str();
}

BilinearForm& BilinearForm::operator+=(const BilinearForm& o) {
    for (std::size_t i = 0; i < kModes; ++i)
        for (std::size_t j = 0; j < kModes; ++j) {
            cross_[i][j] += o.cross_[i][j];
            pc_[i][j] += o.pc_[i][j];
            pa_[i][j] += o.pa_[i][j];
        }
    scalar_ += o.scalar_;
    return *this;
}

BilinearForm& BilinearForm::operator-=(const BilinearForm& o) { return *this += -o; }

BilinearForm& BilinearForm::operator*=(const QComplex& s) {
    for (std::size_t i = 0; i < kModes; ++i)
        for (std::size_t j = 0; j < kModes; ++j) {
            cross_[i][j] *= s;
            pc_[i][j] *= s;
            pa_[i][j] *= s;
        }
    scalar_ *= s;
    return *this;
}

bool operator==(const BilinearForm& a, const BilinearForm& b) {
    return a.cross_ == b.cross_ && a.pc_ == b.pc_ && a.pa_ == b.pa_ && a.scalar_ == b.scalar_;
}

BilinearForm bilinear_bracket(const BilinearForm& x, const BilinearForm& y) {
    BilinearForm res;
    const auto mx = monomials(x);
    const auto my = monomials(y);
    for (const auto& m1 : mx)
        for (const auto& m2 : my) accumulate(res, m1, m2, m1.c * m2.c);
    return res;
}

std::vector<NamedForm> sp8_basis() {
    const QComplex i = QComplex::i();
    std::vector<NamedForm> out;
    for (int a = 0; a < kModes; ++a)
        for (int b = 0; b < kModes; ++b) {
            if (a == b) {
                out.push_back({"iM" + mode_pair(a, b), i * BilinearForm::mixer(a, a)});
            } else if (a < b) {
                out.push_back({"iS" + mode_pair(a, b),
                               (i * half()) * (BilinearForm::mixer(a, b) + BilinearForm::mixer(b, a))});
            } else {
                out.push_back({"A" + mode_pair(b, a), half() * (BilinearForm::mixer(b, a) - BilinearForm::mixer(a, b))});
            }
        }
    for (int a = 0; a < kModes; ++a)
        for (int b = a; b < kModes; ++b)
            out.push_back({"iP" + mode_pair(a, b),
                           (i * half()) * (BilinearForm::create_pair(a, b) + BilinearForm::annihilate_pair(a, b))});
    for (int a = 0; a < kModes; ++a)
        for (int b = a; b < kModes; ++b)
            out.push_back(
                {"Q" + mode_pair(a, b), half() * (BilinearForm::create_pair(a, b) - BilinearForm::annihilate_pair(a, b))});
    return out;
}

std::vector<NamedForm> sp8_split_basis() {
    std::vector<NamedForm> out;
    for (int a = 0; a < kModes; ++a)
        for (int b = 0; b < kModes; ++b) out.push_back({"M" + mode_pair(a, b), BilinearForm::mixer(a, b)});
    for (int a = 0; a < kModes; ++a)
        for (int b = a; b < kModes; ++b) out.push_back({"C" + mode_pair(a, b), BilinearForm::create_pair(a, b)});
    for (int a = 0; a < kModes; ++a)
        for (int b = a; b < kModes; ++b) out.push_back({"D" + mode_pair(a, b), BilinearForm::annihilate_pair(a, b)});
    return out;
}

BilinearForm pair_number_difference() {
    BilinearForm z = BilinearForm::mixer(0, 0) + BilinearForm::mixer(1, 1) - BilinearForm::mixer(2, 2) -
                     BilinearForm::mixer(3, 3);
    return QComplex::i() * z;
}

BilinearForm point_transformation_generator(const std::array<std::array<Rational, kModes>, kModes>& f) {
    // p_i u_j = (-i/2) (a_i a_j + a_j^+ a_i + d_ij - a_i^+ a_j - a_i^+ a_j^+)
    const QComplex minus_half_i(Rational(0), make_rational(-1, 2));
    BilinearForm h;
    for (int i = 0; i < kModes; ++i)
        for (int j = 0; j < kModes; ++j) {
            const Rational& fij = f[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (fij == 0) continue;
            const QComplex c = minus_half_i * QComplex(fij);
            h.add_annih(i, j, c);
            h.add_cross(j, i, c);
            h.add_scalar(c * delta(i, j));
            h.add_cross(i, j, -c);
            h.add_create(i, j, -c);
        }
    return h;
}

StructureConstants::StructureConstants(std::vector<std::string> labels, std::vector<Rational> dense)
    : dim_(labels.size()), labels_(std::move(labels)), c_(std::move(dense)) {
    if (dim_ == 0) throw InputError("StructureConstants: dimension must be positive");
    if (c_.size() != dim_ * dim_ * dim_) throw InputError("StructureConstants: tensor size does not match labels");
    nz_.resize(dim_ * dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k) {
                const Rational& v = (*this)(i, j, k);
                if (v != 0) nz_[i * dim_ + j].push_back({k, v});
            }
}

std::vector<Rational> StructureConstants::bracket(const std::vector<Rational>& u, const std::vector<Rational>& v) const {
    if (u.size() != dim_ || v.size() != dim_) throw InputError("StructureConstants::bracket: dimension mismatch");
    std::vector<Rational> out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (u[i] == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (v[j] == 0) continue;
            const Rational w = u[i] * v[j];
            for (const auto& t : terms(i, j)) out[t.k] += w * t.value;
        }
    }
    return out;
}

bool StructureConstants::is_antisymmetric() const {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k)
                if ((*this)(i, j, k) != -(*this)(j, i, k)) return false;
    return true;
}

bool StructureConstants::satisfies_jacobi() const {
    // With antisymmetry, triples with a repeated index hold automatically.
    if (!is_antisymmetric()) return false;
    std::vector<Rational> acc(dim_);
    auto add_double = [&](std::size_t a, std::size_t b, std::size_t c) {
        // acc += [[X_a, X_b], X_c]
        for (const auto& t : terms(a, b))
            for (const auto& s : terms(t.k, c)) acc[s.k] += t.value * s.value;
    };
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            for (std::size_t k = j + 1; k < dim_; ++k) {
                std::fill(acc.begin(), acc.end(), Rational(0));
                add_double(i, j, k);
                add_double(j, k, i);
                add_double(k, i, j);
                for (const auto& v : acc)
                    if (v != 0) return false;
            }
    return true;
}

namespace {

nlohmann::json integer_json(const BigInt& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return v.convert_to<long long>();
    return v.str();
}

BigInt integer_from_json(const nlohmann::json& j) {
    if (j.is_string()) return BigInt(j.get<std::string>());
    return BigInt(j.get<long long>());
}

}  // namespace

nlohmann::json StructureConstants::to_json() const {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    nlohmann::json entries = nlohmann::json::array();
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            for (const auto& t : terms(i, j))
                entries.push_back({i, j, t.k, integer_json(numerator(t.value)), integer_json(denominator(t.value))});
    return {{"dim", dim_}, {"labels", labels_}, {"entries", std::move(entries)}};
}

StructureConstants StructureConstants::from_json(const nlohmann::json& j) {
    auto labels = j.at("labels").get<std::vector<std::string>>();
    const std::size_t n = labels.size();
    if (j.at("dim").get<std::size_t>() != n) throw InputError("StructureConstants::from_json: dim/labels mismatch");
    std::vector<Rational> c(n * n * n);
    for (const auto& e : j.at("entries")) {
        const auto i = e.at(0).get<std::size_t>();
        const auto k2 = e.at(1).get<std::size_t>();
        const auto k = e.at(2).get<std::size_t>();
        if (i >= n || k2 >= n || k >= n) throw InputError("StructureConstants::from_json: index out of range");
        c[(i * n + k2) * n + k] = Rational(integer_from_json(e.at(3))) / Rational(integer_from_json(e.at(4)));
    }
    return {std::move(labels), std::move(c)};
}

StructureConstants structure_constants(const std::vector<NamedForm>& basis) {
    const std::size_t n = basis.size();
    std::vector<exact::Vector> cols;
    std::vector<std::string> labels;
    for (const auto& b : basis) {
        cols.push_back(b.form.coordinates());
        labels.push_back(b.label);
    }
    const exact::ColumnSpaceSolver solver(exact::Matrix::from_columns(cols, BilinearForm::kCoordinateCount));
    return StructureConstants::from_brackets(std::move(labels), [&](std::size_t i, std::size_t j) {
        const BilinearForm br = bilinear_bracket(basis[i].form, basis[j].form);
        auto x = solver.solve(br.coordinates());
        if (!x)
            throw ClosureError("structure_constants: [" + basis[i].label + ", " + basis[j].label +
                               "] is not in the span of the basis");
        (void)n;
        return *x;
    });
}

std::optional<std::vector<Rational>> span_coordinates(const std::vector<NamedForm>& basis, const BilinearForm& x) {
    std::vector<exact::Vector> cols;
    for (const auto& b : basis) cols.push_back(b.form.coordinates());
    return exact::solve(exact::Matrix::from_columns(cols, BilinearForm::kCoordinateCount), x.coordinates());
}

fock::SparseOperator realize(const BilinearForm& x, const fock::BasisPtr& basis) {
    if (basis->modes() != kModes) throw InputError("realize: basis must have four modes");
    using fock::LadderKind;
    std::vector<fock::SparseOperator> a, ad;
    for (int k = 0; k < kModes; ++k) {
        a.push_back(fock::ladder(LadderKind::annihilate, k, basis));
        ad.push_back(fock::ladder(LadderKind::create, k, basis));
    }
    fock::SparseOperator out = x.scalar_term().to_complex() * fock::SparseOperator::identity(basis);
    for (int i = 0; i < kModes; ++i)
        for (int j = 0; j < kModes; ++j) {
            const QComplex& c = x.cross(i, j);
            if (!c.is_zero()) out += c.to_complex() * (ad[std::size_t(i)] * a[std::size_t(j)]);
        }
    for (int i = 0; i < kModes; ++i)
        for (int j = i; j < kModes; ++j) {
            const QComplex pc = x.create_monomial(i, j);
            if (!pc.is_zero()) out += pc.to_complex() * (ad[std::size_t(i)] * ad[std::size_t(j)]);
            const QComplex pa = x.annih_monomial(i, j);
            if (!pa.is_zero()) out += pa.to_complex() * (a[std::size_t(i)] * a[std::size_t(j)]);
        }
    return out;
}

}  // namespace dynalg::bilinear
