#include "ppav/poly.hpp"

#include <sstream>

#include "ppav/errors.hpp"
#include "ppav/matrix.hpp"

namespace ppav {

RatPoly to_rational(const IntPoly& p) {
    std::vector<Rational> c(p.coeffs().begin(), p.coeffs().end());
    return RatPoly(std::move(c));
}

IntPoly primitive_part(const RatPoly& p) {
    if (p.is_zero()) return {};
    Integer den = 1;
    for (const auto& c : p.coeffs()) den = lcm(den, c.get_den());
    std::vector<Integer> out;
    Integer content = 0;
    for (const auto& c : p.coeffs()) {
        Rational s = c * den;
        out.push_back(s.get_num());
        content = gcd(content, s.get_num());
    }
    if (sgn(p.leading()) < 0) content = -content;
    for (auto& v : out) v /= content;
    return IntPoly(std::move(out));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree()) return {RatPoly(), a};
    std::vector<Rational> rem = a.coeffs();
    std::vector<Rational> quot(a.degree() - b.degree() + 1);
    const int db = b.degree();
    for (int k = a.degree() - db; k >= 0; --k) {
        const Rational f = rem[k + db] / b.leading();
        quot[k] = f;
        if (f == 0) continue;
        for (int i = 0; i <= db; ++i) rem[k + i] -= f * b.coeffs()[i];
    }
    rem.resize(db);
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly x = a, y = b;
    while (!y.is_zero()) {
        RatPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return Rational(1) / x.leading() * x;
}

IntPoly squarefree_part(const IntPoly& a) {
    if (a.degree() <= 0) return a;
    const RatPoly ra = to_rational(a);
    const RatPoly g = gcd(ra, ra.derivative());
    return primitive_part(divmod(ra, g).first);
}

bool is_squarefree(const IntPoly& a) {
    if (a.degree() <= 0) return true;
    const RatPoly ra = to_rational(a);
    return gcd(ra, ra.derivative()).degree() == 0;
}

IntPoly reflect(const IntPoly& p) {
    std::vector<Integer> c = p.coeffs();
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return IntPoly(std::move(c));
}

Integer resultant(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) throw DomainError("resultant with zero polynomial");
    const int m = a.degree(), n = b.degree();
    if (m == 0 && n == 0) return Integer(1);
    if (m == 0) return pow(a.leading(), static_cast<unsigned long>(n));
    if (n == 0) return pow(b.leading(), static_cast<unsigned long>(m));
    const std::size_t size = static_cast<std::size_t>(m + n);
    IntMatrix s(size, size);
    // Rows hold coefficients in descending degree order.
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k) s(i, i + k) = a.coeffs()[m - k];
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k) s(n + i, i + k) = b.coeffs()[n - k];
    return determinant(s);
}

Integer discriminant(const IntPoly& a) {
    const int n = a.degree();
    if (n < 1) throw DomainError("discriminant of constant polynomial");
    const Integer r = resultant(a, a.derivative());
    const long k = static_cast<long>(n) * (n - 1) / 2;
    Integer d = r / a.leading();
    return k % 2 ? Integer(-d) : d;
}

namespace {

std::vector<RatPoly> sturm_sequence(const IntPoly& a) {
    std::vector<RatPoly> seq{to_rational(a), to_rational(a.derivative())};
    while (!seq.back().is_zero()) {
        RatPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
        if (r.is_zero()) break;
        seq.push_back(-r);
    }
    return seq;
}

template <class Signs>
int variations(const Signs& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

int variations_at(const std::vector<RatPoly>& seq, const Rational& x) {
    std::vector<int> s;
    s.reserve(seq.size());
    for (const auto& p : seq) s.push_back(sgn(p.eval(x)));
    return variations(s);
}

int variations_at_infinity(const std::vector<RatPoly>& seq, bool negative) {
    std::vector<int> s;
    for (const auto& p : seq) {
        int sg = sgn(p.leading());
        if (negative && p.degree() % 2 == 1) sg = -sg;
        s.push_back(sg);
    }
    return variations(s);
}

void require_squarefree(const IntPoly& a) {
    if (a.is_zero()) throw DomainError("zero polynomial has no isolated roots");
    if (!is_squarefree(a))
        throw DomainError("polynomial is not squarefree; deflate by gcd with derivative first");
}

}  // namespace

Integer sturm_count(const IntPoly& a, const Rational& lo, const Rational& hi) {
    require_squarefree(a);
    if (!(lo < hi)) throw DomainError("sturm_count needs lo < hi");
    if (a.degree() == 0) return Integer(0);
    const auto seq = sturm_sequence(a);
    return Integer(variations_at(seq, lo) - variations_at(seq, hi));
}

Integer real_root_count(const IntPoly& a) {
    require_squarefree(a);
    if (a.degree() == 0) return Integer(0);
    const auto seq = sturm_sequence(a);
    return Integer(variations_at_infinity(seq, true) - variations_at_infinity(seq, false));
}

Rational cauchy_root_bound(const IntPoly& a) {
    if (a.degree() < 1) return Rational(1);
    Rational m = 0;
    for (int i = 0; i < a.degree(); ++i) {
        Rational r(abs(a.coeffs()[i]), abs(a.leading()));
        r.canonicalize();
        if (r > m) m = r;
    }
    return m + 1;
}

std::vector<std::pair<Rational, Rational>> isolate_real_roots(const IntPoly& a) {
    require_squarefree(a);
    std::vector<std::pair<Rational, Rational>> out;
    if (a.degree() < 1) return out;
    const auto seq = sturm_sequence(a);
    const Rational bound = cauchy_root_bound(a);
    // Depth-first with explicit stack; left halves are processed first so the
    // output is ascending.
    struct Item {
        Rational lo, hi;
        int vlo, vhi;
    };
    std::vector<Item> stack{{-bound, bound, variations_at(seq, -bound), variations_at(seq, bound)}};
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        const int count = it.vlo - it.vhi;
        if (count == 0) continue;
        if (count == 1) {
            out.emplace_back(it.lo, it.hi);
            continue;
        }
        const Rational mid = (it.lo + it.hi) / 2;
        const int vmid = variations_at(seq, mid);
        stack.push_back({mid, it.hi, vmid, it.vhi});
        stack.push_back({it.lo, mid, it.vlo, vmid});
    }
    return out;
}

std::vector<long double> real_roots(const IntPoly& a, long double rel_tol) {
    std::vector<long double> roots;
    const auto seq = sturm_sequence(a);
    for (auto [lo, hi] : isolate_real_roots(a)) {
        if (a.eval(hi) == 0) {
            roots.push_back(to_long_double(hi));
            continue;
        }
        int vlo = variations_at(seq, lo);
        for (int iter = 0; iter < 400; ++iter) {
            const long double width = to_long_double(Rational(hi - lo));
            const long double scale = std::max(1.0L, std::abs(to_long_double(hi)));
            if (width <= rel_tol * scale) break;
            const Rational mid = (lo + hi) / 2;
            if (a.eval(mid) == 0) {
                lo = mid;
                hi = mid;
                break;
            }
            const int vmid = variations_at(seq, mid);
            if (vlo - vmid == 1) {
                hi = mid;
            } else {
                lo = mid;
                vlo = vmid;
            }
        }
        roots.push_back(to_long_double(Rational((lo + hi) / 2)));
    }
    return roots;
}

std::string to_string(const IntPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const Integer& c = p.coeffs()[i];
        if (c == 0) continue;
        const Integer mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        if (i == 0 || mag != 1) os << mag;
        if (i > 0) os << var;
        if (i > 1) os << '^' << i;
        first = false;
    }
    return os.str();
}

}  // namespace ppav
