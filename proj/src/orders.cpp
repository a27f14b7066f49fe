#include "ppav/orders.hpp"

#include "ppav/errors.hpp"
#include "ppav/weil.hpp"

namespace ppav {

namespace {

RatMatrix rows_to_matrix(const std::vector<Element>& rows, std::size_t cols) {
    return RatMatrix::from_rows(rows, cols);
}

Element row_times(const std::vector<Rational>& row, const RatMatrix& m) {
    Element out(m.cols());
    for (std::size_t k = 0; k < m.rows(); ++k) {
        if (row[k] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] += row[k] * m(k, j);
    }
    return out;
}

// y with y * a = x for a (n x m) of full row rank; DomainError when x is not
// in the row space.
std::vector<Rational> solve_in_row_space(const RatMatrix& a, const Element& x) {
    const std::size_t n = a.rows(), m = a.cols();
    // Columns of the augmented system: unknowns y_0..y_{n-1}, then rhs.
    RatMatrix sys(m, n + 1);
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < n; ++i) sys(j, i) = a(i, j);
        sys(j, n) = x[j];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && sys(p, c) == 0) ++p;
        if (p == m) continue;
        for (std::size_t k = 0; k <= n; ++k) std::swap(sys(p, k), sys(r, k));
        const Rational piv = sys(r, c);
        for (std::size_t k = 0; k <= n; ++k) sys(r, k) /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || sys(i, c) == 0) continue;
            const Rational f = sys(i, c);
            for (std::size_t k = 0; k <= n; ++k) sys(i, k) -= f * sys(r, k);
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        if (sys(i, n) != 0) throw DomainError("element is not in the requested subspace");
    std::vector<Rational> y(n);
    for (std::size_t i = 0; i < r; ++i) y[pivot_col[i]] = sys(i, n);
    return y;
}

}  // namespace

NumberField::NumberField(IntPoly f) : f_(std::move(f)) {
    if (f_.degree() < 1 || !f_.is_monic())
        throw DomainError("number field needs a monic polynomial of positive degree");
    degree_ = static_cast<std::size_t>(f_.degree());
    const std::size_t d = degree_;
    reduction_.assign(3 * d, Element(d));
    for (std::size_t k = 0; k < 3 * d; ++k) {
        if (k < d) {
            reduction_[k][k] = 1;
            continue;
        }
        // x^k = x * x^{k-1}; shift, then replace x^d by -(f - x^d).
        const Element& prev = reduction_[k - 1];
        Element cur(d);
        const Rational top = prev[d - 1];
        for (std::size_t i = d - 1; i > 0; --i) cur[i] = prev[i - 1];
        for (std::size_t i = 0; i < d; ++i) cur[i] -= top * Rational(f_.coeffs()[i]);
        reduction_[k] = std::move(cur);
    }
    power_traces_.assign(2 * d, Rational(0));
    for (std::size_t k = 0; k < 2 * d; ++k)
        for (std::size_t i = 0; i < d; ++i) power_traces_[k] += reduction_[k + i][i];
    trace_gram_ = RatMatrix(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) trace_gram_(i, j) = power_traces_[i + j];
    if (determinant(trace_gram_) == 0) throw DomainError("polynomial is not separable");
}

Element NumberField::one() const {
    Element e(degree_);
    e[0] = 1;
    return e;
}

Element NumberField::generator() const {
    Element e(degree_);
    if (degree_ == 1)
        e[0] = -Rational(f_.coeffs()[0]);
    else
        e[1] = 1;
    return e;
}

Element NumberField::from_integer_coeffs(const std::vector<Integer>& c) const {
    Element e(degree_);
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        if (k >= reduction_.size()) throw DomainError("polynomial degree too large to reduce");
        for (std::size_t i = 0; i < degree_; ++i) e[i] += Rational(c[k]) * reduction_[k][i];
    }
    return e;
}

Element NumberField::mul(const Element& a, const Element& b) const {
    std::vector<Rational> conv(2 * degree_ - 1);
    for (std::size_t i = 0; i < degree_; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < degree_; ++j) conv[i + j] += a[i] * b[j];
    }
    Element out(degree_);
    for (std::size_t k = 0; k < conv.size(); ++k) {
        if (conv[k] == 0) continue;
        for (std::size_t i = 0; i < degree_; ++i) out[i] += conv[k] * reduction_[k][i];
    }
    return out;
}

Element NumberField::add(const Element& a, const Element& b) const {
    Element out(degree_);
    for (std::size_t i = 0; i < degree_; ++i) out[i] = a[i] + b[i];
    return out;
}

Element NumberField::sub(const Element& a, const Element& b) const {
    Element out(degree_);
    for (std::size_t i = 0; i < degree_; ++i) out[i] = a[i] - b[i];
    return out;
}

Element NumberField::scale(const Rational& s, const Element& a) const {
    Element out(degree_);
    for (std::size_t i = 0; i < degree_; ++i) out[i] = s * a[i];
    return out;
}

Element NumberField::pow(const Element& a, unsigned e) const {
    Element acc = one(), base = a;
    while (e) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

RatMatrix NumberField::multiplication_matrix(const Element& a) const {
    RatMatrix m(degree_, degree_);
    Element xi = one();
    const Element x = degree_ == 1 ? generator() : [&] {
        Element t(degree_);
        t[1] = 1;
        return t;
    }();
    for (std::size_t i = 0; i < degree_; ++i) {
        m.set_row(i, mul(a, xi));
        xi = mul(xi, x);
    }
    return m;
}

Element NumberField::inverse(const Element& a) const {
    const RatMatrix inv = ppav::inverse(multiplication_matrix(a));
    return inv.row(0);
}

Rational NumberField::trace(const Element& a) const {
    Rational t = 0;
    for (std::size_t k = 0; k < degree_; ++k) t += a[k] * power_traces_[k];
    return t;
}

Rational NumberField::norm(const Element& a) const { return determinant(multiplication_matrix(a)); }

const CMData& NumberField::cm() const {
    if (!cm_) throw DomainError("field has no complex conjugation");
    return *cm_;
}

Element NumberField::conjugate(const Element& a) const { return row_times(a, cm().conj); }

FieldPtr make_field(const IntPoly& f) { return std::make_shared<const NumberField>(f); }

FieldPtr make_cm_field(const IntPoly& f, const Integer& q) {
    auto field = std::make_shared<NumberField>(f);
    const std::size_t d = field->degree();
    CMData cm;
    cm.q = q;
    cm.g = real_weil_polynomial(f, q);
    const Element pi = field->generator();
    const Element pibar = field->scale(Rational(q), field->inverse(pi));
    cm.conj = RatMatrix(d, d);
    Element acc = field->one();
    for (std::size_t k = 0; k < d; ++k) {
        cm.conj.set_row(k, acc);
        acc = field->mul(acc, pibar);
    }
    if (!(cm.conj * cm.conj == RatMatrix::identity(d)))
        throw InternalError("complex conjugation is not an involution");
    cm.real_field = make_field(cm.g);
    const Element alpha = field->add(pi, pibar);
    const std::size_t n = static_cast<std::size_t>(cm.g.degree());
    cm.alpha_powers = RatMatrix(n, d);
    acc = field->one();
    for (std::size_t k = 0; k < n; ++k) {
        cm.alpha_powers.set_row(k, acc);
        acc = field->mul(acc, alpha);
    }
    field->cm_ = std::move(cm);
    return field;
}

Lattice::Lattice(FieldPtr field, const std::vector<Element>& generators)
    : Lattice(field, rows_to_matrix(generators, field->degree())) {}

Lattice::Lattice(FieldPtr field, const RatMatrix& generators) : field_(std::move(field)) {
    if (generators.cols() != field_->degree()) throw DomainError("generator dimension mismatch");
    den_ = common_denominator(generators);
    basis_ = hnf_integer(to_integer(generators, den_));
    if (basis_.rows() != field_->degree())
        throw RankError("generators span a lattice of rank " + std::to_string(basis_.rows()) +
                        " in a field of degree " + std::to_string(field_->degree()));
    Integer g = den_;
    for (std::size_t i = 0; i < basis_.rows(); ++i)
        for (std::size_t j = 0; j < basis_.cols(); ++j) g = gcd(g, basis_(i, j));
    if (g != 1) {
        den_ /= g;
        for (std::size_t i = 0; i < basis_.rows(); ++i)
            for (std::size_t j = 0; j < basis_.cols(); ++j) basis_(i, j) /= g;
    }
}

RatMatrix Lattice::basis() const {
    RatMatrix b = to_rational(basis_);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            b(i, j) /= den_;
        }
    return b;
}

std::vector<Element> Lattice::basis_elements() const {
    const RatMatrix b = basis();
    std::vector<Element> out;
    for (std::size_t i = 0; i < b.rows(); ++i) out.push_back(b.row(i));
    return out;
}

bool Lattice::contains(const Element& x) const {
    const std::size_t d = field_->degree();
    std::vector<Rational> y(d);
    for (std::size_t j = 0; j < d; ++j) y[j] = x[j] * den_;
    for (std::size_t j = 0; j < d; ++j) {
        const Rational c = y[j] / basis_(j, j);
        if (c.get_den() != 1) return false;
        if (c == 0) continue;
        for (std::size_t k = j; k < d; ++k) y[k] -= c * basis_(j, k);
    }
    return true;
}

bool Lattice::contains(const Lattice& other) const {
    for (const auto& e : other.basis_elements())
        if (!contains(e)) return false;
    return true;
}

Rational Lattice::covolume() const {
    Rational v = 1;
    for (std::size_t i = 0; i < basis_.rows(); ++i) v *= basis_(i, i);
    v /= pow(den_, static_cast<unsigned long>(basis_.rows()));
    return v;
}

bool operator==(const Lattice& a, const Lattice& b) {
    return a.field_->polynomial() == b.field_->polynomial() && a.den_ == b.den_ &&
           a.basis_ == b.basis_;
}

Lattice scale(const Rational& c, const Lattice& l) {
    if (c == 0) throw RankError("scaling a lattice by zero");
    std::vector<Element> gens;
    for (const auto& e : l.basis_elements()) gens.push_back(l.field()->scale(c, e));
    return Lattice(l.field(), gens);
}

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
    auto gens = a.basis_elements();
    for (auto& e : b.basis_elements()) gens.push_back(std::move(e));
    return Lattice(a.field(), gens);
}

namespace {

// Dual with respect to the standard pairing on power-basis coordinates.
Lattice coordinate_dual(const Lattice& l) {
    return Lattice(l.field(), inverse(l.basis()).transpose());
}

}  // namespace

Lattice intersection(const Lattice& a, const Lattice& b) {
    return coordinate_dual(lattice_sum(coordinate_dual(a), coordinate_dual(b)));
}

Lattice product(const Lattice& a, const Lattice& b) {
    const auto& k = *a.field();
    std::vector<Element> gens;
    const auto eb = b.basis_elements();
    for (const auto& x : a.basis_elements())
        for (const auto& y : eb) gens.push_back(k.mul(x, y));
    return Lattice(a.field(), gens);
}

Lattice multiply(const Element& x, const Lattice& l) {
    std::vector<Element> gens;
    for (const auto& e : l.basis_elements()) gens.push_back(l.field()->mul(x, e));
    return Lattice(l.field(), gens);
}

Lattice colon(const Lattice& a, const Lattice& b) {
    const auto& k = *a.field();
    std::optional<Lattice> acc;
    for (const auto& e : b.basis_elements()) {
        Lattice part = multiply(k.inverse(e), a);
        acc = acc ? intersection(*acc, part) : part;
    }
    return *acc;
}

Integer index(const Lattice& big, const Lattice& small) {
    if (!big.contains(small)) throw DomainError("index: lattice is not a sublattice");
    const Rational r = small.covolume() / big.covolume();
    if (r.get_den() != 1) throw InternalError("non-integral lattice index");
    return r.get_num();
}

bool is_ring(const Lattice& l) {
    const auto& k = *l.field();
    if (!l.contains(k.one())) return false;
    const auto e = l.basis_elements();
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i; j < e.size(); ++j)
            if (!l.contains(k.mul(e[i], e[j]))) return false;
    return true;
}

Lattice multiplier_ring(const Lattice& l) { return colon(l, l); }

Lattice trace_dual(const Lattice& l) {
    const RatMatrix m = l.field()->trace_gram() * l.basis().transpose();
    return Lattice(l.field(), inverse(m));
}

bool is_invertible(const Lattice& a, const Lattice& ring) {
    if (!is_ring(ring)) throw DomainError("invertibility is tested over a ring");
    return product(a, colon(ring, a)) == ring;
}

bool is_gorenstein(const Lattice& ring) {
    if (!is_ring(ring)) throw DomainError("is_gorenstein expects a ring");
    return is_invertible(trace_dual(ring), ring);
}

Rational lattice_discriminant(const Lattice& l) {
    const RatMatrix b = l.basis();
    return determinant(b * l.field()->trace_gram() * b.transpose());
}

Lattice conjugate(const Lattice& l) {
    const auto& k = *l.field();
    std::vector<Element> gens;
    for (const auto& e : l.basis_elements()) gens.push_back(k.conjugate(e));
    return Lattice(l.field(), gens);
}

std::vector<Element> eigen_sublattice(const Lattice& l, int sign) {
    const auto& k = *l.field();
    const std::size_t d = k.degree();
    RatMatrix shifted = k.cm().conj;
    for (std::size_t i = 0; i < d; ++i) shifted(i, i) -= sign;
    const RatMatrix a = l.basis() * shifted;
    const IntMatrix ker = integer_left_kernel(to_integer(a, common_denominator(a)));
    const RatMatrix b = l.basis();
    std::vector<Element> out;
    for (std::size_t i = 0; i < ker.rows(); ++i) {
        std::vector<Rational> c(d);
        for (std::size_t j = 0; j < d; ++j) c[j] = ker(i, j);
        out.push_back(row_times(c, b));
    }
    return out;
}

Element to_real_coordinates(const NumberField& field, const Element& x) {
    return solve_in_row_space(field.cm().alpha_powers, x);
}

Element from_real_coordinates(const NumberField& field, const Element& y) {
    return row_times(y, field.cm().alpha_powers);
}

Lattice real_subring(const Lattice& ring) {
    const auto& k = *ring.field();
    std::vector<Element> gens;
    for (const auto& e : eigen_sublattice(ring, +1)) gens.push_back(to_real_coordinates(k, e));
    return Lattice(k.cm().real_field, gens);
}

ConvenienceCertificate convenient_certificate(const Lattice& ring) {
    if (!is_ring(ring)) throw DomainError("convenient_certificate expects a ring");
    const auto& k = *ring.field();
    ConvenienceCertificate cert;
    cert.stable_under_conjugation = conjugate(ring) == ring;
    cert.real_subring_gorenstein = is_gorenstein(real_subring(ring));
    const Lattice dual = trace_dual(ring);
    std::vector<Element> gens;
    const auto imaginary = eigen_sublattice(dual, -1);
    for (const auto& r : ring.basis_elements())
        for (const auto& p : imaginary) gens.push_back(k.mul(r, p));
    cert.pure_imaginary_index = index(dual, Lattice(ring.field(), gens));
    cert.is_convenient = cert.stable_under_conjugation && cert.real_subring_gorenstein &&
                         cert.pure_imaginary_index == 1;
    return cert;
}

Lattice minimal_order(const FieldPtr& field) {
    const auto& k = *field;
    const unsigned n = static_cast<unsigned>(k.degree() / 2);
    const Element pi = k.generator();
    const Element pibar = k.conjugate(pi);
    std::vector<Element> gens{k.one()};
    for (unsigned e = 1; e < n; ++e) {
        gens.push_back(k.pow(pi, e));
        gens.push_back(k.pow(pibar, e));
    }
    gens.push_back(k.pow(pi, n));
    Lattice r(field, gens);
    if (!is_ring(r)) throw InternalError("Z[pi, pi-bar] basis is not closed under multiplication");
    return r;
}

Lattice order_over_real(const FieldPtr& field, const Lattice& real_order) {
    const auto& k = *field;
    const Element pi = k.generator();
    std::vector<Element> gens;
    for (const auto& b : real_order.basis_elements()) {
        const Element e = from_real_coordinates(k, b);
        gens.push_back(e);
        gens.push_back(k.mul(e, pi));
    }
    return Lattice(field, gens);
}

Lattice equation_order(const FieldPtr& field) {
    return Lattice(field, RatMatrix::identity(field->degree()));
}

namespace {

nlohmann::json integer_json(const Integer& n) {
    if (fits_double_exactly(n)) return n.get_si();
    return to_string(n);
}

Integer integer_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return parse_integer(j.get<std::string>());
    throw DomainError("expected an integer or a decimal string in lattice JSON");
}

}  // namespace

nlohmann::json lattice_to_json(const Lattice& l) {
    nlohmann::json j;
    j["f"] = nlohmann::json::array();
    for (const auto& c : l.field()->polynomial().coeffs()) j["f"].push_back(integer_json(c));
    j["q"] = l.field()->is_cm() ? integer_json(l.field()->cm().q) : nlohmann::json(nullptr);
    j["den"] = integer_json(l.denominator());
    j["basis"] = nlohmann::json::array();
    const auto& b = l.integer_basis();
    for (std::size_t i = 0; i < b.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t k = 0; k < b.cols(); ++k) row.push_back(integer_json(b(i, k)));
        j["basis"].push_back(row);
    }
    return j;
}

Lattice lattice_from_json(const nlohmann::json& j) {
    for (const char* key : {"f", "den", "basis"})
        if (!j.contains(key)) throw DomainError(std::string("lattice JSON is missing '") + key + "'");
    std::vector<Integer> fc;
    for (const auto& c : j.at("f")) fc.push_back(integer_from_json(c));
    const IntPoly f(std::move(fc));
    FieldPtr field;
    if (j.contains("q") && !j.at("q").is_null()) {
        const Integer q = integer_from_json(j.at("q"));
        field = satisfies_functional_equation(f, q) ? make_cm_field(f, q) : make_field(f);
    } else {
        field = make_field(f);
    }
    const Integer den = integer_from_json(j.at("den"));
    if (den <= 0) throw DomainError("lattice denominator must be positive");
    std::vector<Element> gens;
    for (const auto& row : j.at("basis")) {
        Element e;
        for (const auto& v : row) e.push_back(make_rational(integer_from_json(v), den));
        if (e.size() != field->degree()) throw DomainError("basis row has the wrong length");
        gens.push_back(std::move(e));
    }
    return Lattice(field, gens);
}

}  // namespace ppav
