#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ppav/arith.hpp"
#include "ppav/matrix.hpp"
#include "ppav/poly.hpp"

namespace ppav {

/// Element of Q[x]/(f) as rational coordinates over the power basis.
using Element = std::vector<Rational>;

class NumberField;

/// Data attached to a CM algebra Q[x]/(f) with Weil polynomial f.
struct CMData {
    Integer q;
    /// Row-vector matrix of x -> q/x: coords(conj(y)) = coords(y) * conj.
    RatMatrix conj;
    /// Real Weil polynomial, minimal polynomial of alpha = pi + q/pi.
    IntPoly g;
    /// Q(alpha) as its own field.
    std::shared_ptr<const NumberField> real_field;
    /// Row k holds alpha^k in the power basis of pi, k < deg g.
    RatMatrix alpha_powers;
};

/// Q[x]/(f) for a monic separable integer polynomial f.
///
/// Multiplication reduces modulo f; traces come from Newton's identities.
/// Immutable after construction and safe to share across threads.
class NumberField {
public:
    explicit NumberField(IntPoly f);

    const IntPoly& polynomial() const noexcept { return f_; }
    std::size_t degree() const noexcept { return degree_; }

    Element zero() const { return Element(degree_); }
    Element one() const;
    /// The class of x, written pi in the CM case.
    Element generator() const;
    Element from_integer_coeffs(const std::vector<Integer>& c) const;

    Element mul(const Element& a, const Element& b) const;
    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const;
    Element scale(const Rational& s, const Element& a) const;
    Element pow(const Element& a, unsigned e) const;
    Element inverse(const Element& a) const;
    Rational trace(const Element& a) const;
    Rational norm(const Element& a) const;
    /// Rows a * x^i, so coords(a*y) = coords(y) * M.
    RatMatrix multiplication_matrix(const Element& a) const;
    const RatMatrix& trace_gram() const noexcept { return trace_gram_; }

    bool is_cm() const noexcept { return cm_.has_value(); }
    const CMData& cm() const;
    Element conjugate(const Element& a) const;

    friend std::shared_ptr<const NumberField> make_cm_field(const IntPoly& f, const Integer& q);

private:
    IntPoly f_;
    std::size_t degree_;
    std::vector<Element> reduction_;  // x^k mod f for k < 2*degree - 1
    std::vector<Rational> power_traces_;
    RatMatrix trace_gram_;
    std::optional<CMData> cm_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

FieldPtr make_field(const IntPoly& f);
/// CM context for a Weil polynomial f over F_q (or any f with the
/// functional equation, such as x^2 + 1 with q = 1).
FieldPtr make_cm_field(const IntPoly& f, const Integer& q);

/// Full-rank Z-lattice in a number field, stored as (1/den) * basis with the
/// integer basis in Hermite normal form and gcd(den, entries) = 1. Equality
/// is lattice equality.
class Lattice {
public:
    Lattice(FieldPtr field, const std::vector<Element>& generators);
    Lattice(FieldPtr field, const RatMatrix& generators);

    const FieldPtr& field() const noexcept { return field_; }
    const Integer& denominator() const noexcept { return den_; }
    const IntMatrix& integer_basis() const noexcept { return basis_; }
    RatMatrix basis() const;
    std::vector<Element> basis_elements() const;

    bool contains(const Element& x) const;
    bool contains(const Lattice& other) const;
    /// |det| of the basis, the covolume relative to the power-basis lattice.
    Rational covolume() const;

    friend bool operator==(const Lattice& a, const Lattice& b);

private:
    FieldPtr field_;
    Integer den_;
    IntMatrix basis_;
};

Lattice scale(const Rational& c, const Lattice& l);
Lattice lattice_sum(const Lattice& a, const Lattice& b);
Lattice intersection(const Lattice& a, const Lattice& b);
Lattice product(const Lattice& a, const Lattice& b);
/// x * L.
Lattice multiply(const Element& x, const Lattice& l);
/// (A : B) = {x : x B in A}.
Lattice colon(const Lattice& a, const Lattice& b);
/// [big : small] for small contained in big; DomainError otherwise.
Integer index(const Lattice& big, const Lattice& small);

/// Contains 1 and closed under multiplication.
bool is_ring(const Lattice& l);
/// {x : x L in L}.
Lattice multiplier_ring(const Lattice& l);
/// {x : Tr(x L) in Z}.
Lattice trace_dual(const Lattice& l);
/// A (R : A) = R. DomainError when R is not a ring.
bool is_invertible(const Lattice& a, const Lattice& ring);
/// The trace dual of R is invertible over R. DomainError for non-rings.
bool is_gorenstein(const Lattice& ring);
/// det of the trace form on the lattice basis.
Rational lattice_discriminant(const Lattice& l);

/// Image under complex conjugation.
Lattice conjugate(const Lattice& l);

/// Elements of L fixed (sign = +1) or negated (sign = -1) by conjugation,
/// as a Z-basis of that sublattice.
std::vector<Element> eigen_sublattice(const Lattice& l, int sign);

/// R intersect K+, expressed as a lattice in the real field Q(alpha).
Lattice real_subring(const Lattice& ring);

/// Express an element of K fixed by conjugation in the basis 1, alpha, ...
Element to_real_coordinates(const NumberField& field, const Element& x);
/// Image in K of an element of the real field Q(alpha).
Element from_real_coordinates(const NumberField& field, const Element& y);

struct ConvenienceCertificate {
    bool stable_under_conjugation = false;
    bool real_subring_gorenstein = false;
    /// [R-dagger : R * (pure imaginary part of R-dagger)]; 0 when R is not
    /// conjugation-stable.
    Integer pure_imaginary_index;
    bool is_convenient = false;
};

ConvenienceCertificate convenient_certificate(const Lattice& ring);

/// Z[pi, pi-bar] with basis 1, pi, pi-bar, ..., pi^{n-1}, pi-bar^{n-1}, pi^n.
Lattice minimal_order(const FieldPtr& field);

/// B[pi] = B + B pi for an order B of the real field containing alpha.
Lattice order_over_real(const FieldPtr& field, const Lattice& real_order);

/// The monogenic order Z[x] of the field.
Lattice equation_order(const FieldPtr& field);

/// {"f": [...], "q": N, "den": D, "basis": [[...]]}; integers above 2^53 are
/// written as decimal strings and either form is accepted on input.
nlohmann::json lattice_to_json(const Lattice& l);
Lattice lattice_from_json(const nlohmann::json& j);

}  // namespace ppav
